#pragma once

#include <cstdint>
#include <vector>

#include "thztrack/common.hpp"

namespace thztrack {

/// System-level parameters shared by every module. Construct through
/// `validated()`; instances are immutable afterwards and safe to share
/// across parallel trials.
struct SystemConfig {
  int N = 256;          ///< BS antennas (ULA)
  int M = 128;          ///< OFDM subcarriers
  int K = 4;            ///< single-antenna users (= RF chains)
  int K_d = 16;         ///< time-delayers per RF chain
  double f_c = 100e9;   ///< carrier frequency [Hz]
  double B = 10e9;      ///< bandwidth [Hz]
  int Q = 10;           ///< pilot sequence length [symbols]
  double rho = 1.0;     ///< per-user transmit power (linear)
  double sigma2 = 1.0;  ///< noise power (linear)
  std::uint64_t seed = 1;

  /// Antennas per TD, P = N / K_d.
  int antennas_per_td() const { return N / K_d; }

  /// Checks every invariant; throws ValidationError naming the violated
  /// constraint. Returns the config by value so callers can write
  /// `auto cfg = SystemConfig::validated({...});`.
  static SystemConfig validated(SystemConfig cfg);
};

/// Subcarrier frequencies f_m = f_c + (B/M)(m - 1 - (M-1)/2), their ratios
/// xi_m = f_m/f_c, and the carrier period T_c. The grid is symmetric about
/// f_c, so xi_1 + xi_M = 2 exactly.
struct FrequencyGrid {
  std::vector<double> f;    ///< size M, strictly increasing for B > 0
  std::vector<double> xi;   ///< f_m / f_c
  double T_c = 0.0;         ///< 1 / f_c [s]

  int M() const { return static_cast<int>(f.size()); }
  double xi_first() const { return xi.front(); }
  double xi_last() const { return xi.back(); }
};

FrequencyGrid build_frequency_grid(const SystemConfig& cfg);

/// P = N / K_d with the divisibility check (throws ValidationError).
int antennas_per_td(const SystemConfig& cfg);

}  // namespace thztrack
