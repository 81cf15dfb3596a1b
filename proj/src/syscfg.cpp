#include "thztrack/syscfg.hpp"

#include <sstream>

namespace thztrack {

namespace {

[[noreturn]] void reject(const std::string& field, const std::string& why) {
  std::ostringstream os;
  os << "invalid SystemConfig: " << field << " " << why;
  throw ValidationError(os.str());
}

}  // namespace

SystemConfig SystemConfig::validated(SystemConfig cfg) {
  if (cfg.N < 2) reject("N", "must be >= 2");
  if (cfg.M < 2) reject("M", "must be >= 2");
  if (cfg.K < 1) reject("K", "must be >= 1");
  if (cfg.K_d < 1) reject("K_d", "must be >= 1");
  if (cfg.N % cfg.K_d != 0) reject("N", "must be divisible by K_d (P = N/K_d integral)");
  if (!(cfg.f_c > 0.0)) reject("f_c", "must be > 0");
  if (cfg.B < 0.0) reject("B", "must be >= 0");
  if (!(cfg.B < 2.0 * cfg.f_c)) reject("B", "must be < 2*f_c so every xi_m stays positive");
  if (cfg.Q < 1) reject("Q", "must be >= 1");
  if (!(cfg.rho > 0.0)) reject("rho", "must be > 0");
  if (!(cfg.sigma2 >= 0.0)) reject("sigma2", "must be >= 0");
  return cfg;
}

int antennas_per_td(const SystemConfig& cfg) {
  if (cfg.K_d < 1 || cfg.N % cfg.K_d != 0) {
    std::ostringstream os;
    os << "N = " << cfg.N << " is not divisible by K_d = " << cfg.K_d;
    throw ValidationError(os.str());
  }
  return cfg.N / cfg.K_d;
}

FrequencyGrid build_frequency_grid(const SystemConfig& raw) {
  const SystemConfig cfg = SystemConfig::validated(raw);
  FrequencyGrid grid;
  grid.f.resize(cfg.M);
  grid.xi.resize(cfg.M);
  grid.T_c = 1.0 / cfg.f_c;
  const double step = cfg.B / cfg.M;
  const double center = (cfg.M - 1) / 2.0;
  for (int m = 0; m < cfg.M; ++m) {
    grid.f[m] = cfg.f_c + step * (m - center);
    grid.xi[m] = grid.f[m] / cfg.f_c;
  }
  return grid;
}

}  // namespace thztrack
