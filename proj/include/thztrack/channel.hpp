#pragma once

#include <vector>

#include "thztrack/common.hpp"
#include "thztrack/rng.hpp"
#include "thztrack/syscfg.hpp"

namespace thztrack {

/// One propagation path of the ray-based channel.
struct PathParams {
  double g_c = 1.0;     ///< path gain at the carrier frequency (linear, >= 0)
  double tau = 0.0;     ///< path delay [s]
  double theta = 0.0;   ///< physical direction sin(angle), in [-1, 1]
  bool is_los = false;  ///< exactly one path per user, at index 0
};

/// Per-user wideband channel: row vectors h_{k,m} for every subcarrier.
/// Regeneratable bit-for-bit from (paths, grid, N).
struct UserChannel {
  std::vector<PathParams> paths;
  MatC h;  ///< M x N; row m is the 1xN channel at subcarrier m
};

/// ULA array response a_N(psi): entry n = exp(j*pi*n*psi)/sqrt(N). Unit norm.
VecC array_response(int N, double psi);

/// Free-space path loss in dB, f in GHz and D in meters
/// (the 32.4 constant fixes that unit convention).
double fspl_db(double f_ghz, double distance_m);

/// LoS gain at subcarrier m: (f_m / f_c) * g_c.
double los_gain_at_subcarrier(double g_c, double f_m, double f_c);

/// Synthesizes h_{k,m} = sum_l beta_l * a_N(xi_m*theta_l)^H with
/// beta_l = g * exp(-j*pi*tau*f_m); the LoS gain is frequency-scaled via
/// los_gain_at_subcarrier, NLoS gains are frequency-flat.
UserChannel synthesize_channel(const FrequencyGrid& grid,
                               const std::vector<PathParams>& paths, int N);

/// Per-user LoS direction track over frames. theta[k][i] is user k's
/// direction at frame i (i = 0 is the initial direction).
struct Trajectory {
  std::vector<std::vector<double>> theta;  ///< K x (frames+1)
  std::vector<double> alpha;               ///< per-user variation half-range
  int frames = 0;
};

/// Explicit per-frame increments (deltas[k][i] moves frame i -> i+1).
/// Throws ValidationError if any accumulated direction leaves [-1, 1].
Trajectory explicit_trajectory(const std::vector<double>& theta0,
                               const std::vector<std::vector<double>>& deltas);

/// Random drift: frame i+1 direction is uniform on
/// [theta_i - alpha_k, theta_i + alpha_k], redrawn while it falls outside
/// [-1, 1]. Deterministic given the stream.
Trajectory drift_trajectory(const std::vector<double>& theta0,
                            const std::vector<double>& alpha, int frames,
                            RngStream& rng);

}  // namespace thztrack
