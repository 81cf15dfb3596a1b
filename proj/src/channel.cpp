#include "thztrack/channel.hpp"

#include <cmath>
#include <sstream>

namespace thztrack {

VecC array_response(int N, double psi) {
  VecC a(N);
  const double scale = 1.0 / std::sqrt(static_cast<double>(N));
  const cplx w = std::polar(1.0, kPi * psi);
  cplx cur(scale, 0.0);
  for (int n = 0; n < N; ++n) {
    a(n) = cur;
    cur *= w;
  }
  return a;
}

double fspl_db(double f_ghz, double distance_m) {
  if (!(f_ghz > 0.0) || !(distance_m > 0.0)) {
    throw ValidationError("fspl_db: frequency and distance must be positive");
  }
  return 32.4 + 20.0 * std::log10(f_ghz) + 20.0 * std::log10(distance_m);
}

double los_gain_at_subcarrier(double g_c, double f_m, double f_c) {
  return (f_m / f_c) * g_c;
}

UserChannel synthesize_channel(const FrequencyGrid& grid,
                               const std::vector<PathParams>& paths, int N) {
  if (paths.empty()) throw ValidationError("synthesize_channel: no paths");
  int n_los = 0;
  for (std::size_t l = 0; l < paths.size(); ++l) {
    const PathParams& p = paths[l];
    if (p.theta < -1.0 || p.theta > 1.0) {
      throw ValidationError("synthesize_channel: path direction outside [-1, 1]");
    }
    if (p.g_c < 0.0) throw ValidationError("synthesize_channel: negative path gain");
    if (p.tau < 0.0) throw ValidationError("synthesize_channel: negative path delay");
    if (p.is_los) {
      if (l != 0) throw ValidationError("synthesize_channel: LoS path must be index 0");
      ++n_los;
    }
  }
  if (n_los != 1) throw ValidationError("synthesize_channel: exactly one LoS path required");

  const int M = grid.M();
  const double f_c = 1.0 / grid.T_c;
  UserChannel ch;
  ch.paths = paths;
  ch.h = MatC::Zero(M, N);
  for (int m = 0; m < M; ++m) {
    for (const PathParams& p : paths) {
      const double g = p.is_los ? los_gain_at_subcarrier(p.g_c, grid.f[m], f_c) : p.g_c;
      const cplx beta = g * std::polar(1.0, -kPi * p.tau * grid.f[m]);
      const VecC a = array_response(N, grid.xi[m] * p.theta);
      ch.h.row(m) += beta * a.adjoint();
    }
  }
  return ch;
}

Trajectory explicit_trajectory(const std::vector<double>& theta0,
                               const std::vector<std::vector<double>>& deltas) {
  if (theta0.empty() || theta0.size() != deltas.size()) {
    throw ValidationError("explicit_trajectory: theta0/deltas size mismatch");
  }
  const int K = static_cast<int>(theta0.size());
  const int frames = static_cast<int>(deltas[0].size());
  Trajectory traj;
  traj.frames = frames;
  traj.theta.assign(K, {});
  traj.alpha.assign(K, 0.0);
  for (int k = 0; k < K; ++k) {
    if (static_cast<int>(deltas[k].size()) != frames) {
      throw ValidationError("explicit_trajectory: ragged deltas");
    }
    double cur = theta0[k];
    traj.theta[k].push_back(cur);
    double max_step = 0.0;
    for (int i = 0; i < frames; ++i) {
      cur += deltas[k][i];
      max_step = std::max(max_step, std::abs(deltas[k][i]));
      if (cur < -1.0 || cur > 1.0) {
        std::ostringstream os;
        os << "explicit_trajectory: user " << k + 1 << " leaves [-1,1] at frame "
           << i + 1 << " (theta = " << cur << ")";
        throw ValidationError(os.str());
      }
      traj.theta[k].push_back(cur);
    }
    traj.alpha[k] = max_step;
  }
  return traj;
}

Trajectory drift_trajectory(const std::vector<double>& theta0,
                            const std::vector<double>& alpha, int frames,
                            RngStream& rng) {
  if (frames < 1) throw ValidationError("drift_trajectory: frames must be >= 1");
  if (theta0.size() != alpha.size() || theta0.empty()) {
    throw ValidationError("drift_trajectory: theta0/alpha size mismatch");
  }
  const int K = static_cast<int>(theta0.size());
  Trajectory traj;
  traj.frames = frames;
  traj.alpha = alpha;
  traj.theta.assign(K, {});
  for (int k = 0; k < K; ++k) {
    double cur = theta0[k];
    if (cur < -1.0 || cur > 1.0) {
      throw ValidationError("drift_trajectory: initial direction outside [-1, 1]");
    }
    traj.theta[k].push_back(cur);
    for (int i = 0; i < frames; ++i) {
      double next;
      do {
        next = rng.uniform(cur - alpha[k], cur + alpha[k]);
      } while (next < -1.0 || next > 1.0);
      cur = next;
      traj.theta[k].push_back(cur);
    }
  }
  return traj;
}

}  // namespace thztrack
