#pragma once

#include <string>
#include <vector>

#include "thztrack/common.hpp"
#include "thztrack/syscfg.hpp"

namespace thztrack {

/// PS/TD analog beamformer for one RF chain: K_d phase-shifter blocks of P
/// entries (every entry of magnitude 1/sqrt(N)) plus a linear delay profile
/// t_j = s * T_c * j. Immutable value; materialize() evaluates it at a
/// subcarrier.
struct AnalogBeamformer {
  MatC ps_blocks;  ///< K_d x P, |entry| = 1/sqrt(N)
  VecD delays;     ///< K_d time delays [s]
  double phi = 0.0;  ///< PS pointing direction
  double s = 0.0;    ///< delay slope in carrier periods
  double T_c = 0.0;  ///< carrier period used to build `delays`

  int K_d() const { return static_cast<int>(ps_blocks.rows()); }
  int P() const { return static_cast<int>(ps_blocks.cols()); }
  int N() const { return K_d() * P(); }
};

/// Normalized Dirichlet sinc: sin(Nbar*pi*a/2) / (Nbar*sin(pi*a/2)), with the
/// removable singularities at a in 2Z resolved by limit (value +-1). |.| <= 1.
double dirichlet_sinc(int Nbar, double alpha);

/// f_{k,m}: block j of the result is ps_block_j * exp(-j*2*pi*f_m*t_j).
/// Unit norm (phase-only entries).
VecC materialize(const AnalogBeamformer& bf, double f_m);

/// All-subcarrier fan as an N x M matrix (column m = materialize at f_m).
MatC materialize_fan(const AnalogBeamformer& bf, const FrequencyGrid& grid);

/// eta(f, theta, f_m) = |a_N(xi_m*theta)^H f|, in [0, 1].
double array_gain(const VecC& f, double theta, double xi_m);

/// Beam split of a frequency-independent beam designed for `theta`:
/// at relative frequency xi_m the beam points at theta / xi_m.
double split_direction(double theta, double xi_m);

/// Beam pointing of the generic linear-delay design: the PS direction phi and
/// TD phase beta in [-1,1] place the beam at phi/xi_m + beta/(xi_m*P).
double lemma1_direction(double phi, double beta, double xi_m, int P);

/// Core constructor shared by the split-free and zoom designs:
/// ps_block_j = a_P(phi)-shaped entries times exp(j*pi*(P*phi + 2s)*j),
/// delays t_j = s*T_c*j. At subcarrier m the materialized beam equals the
/// canonical (phi, beta = 2(1-xi_m)s) form.
AnalogBeamformer linear_delay_beamformer(double phi, double s, const SystemConfig& cfg);

/// Split-free design: all M beams aligned with `theta`
/// (phi = theta, s = -P*theta/2). Requires the DPP feasibility condition
/// max_m |P(xi_m - 1)| < 1, else throws ZoomInfeasibleError.
AnalogBeamformer split_free_beamformer(double theta, const SystemConfig& cfg,
                                       const FrequencyGrid& grid);

/// Zero-delay (hybrid) beamformer a_N(theta): frequency-independent, shows
/// the full beam split across the band.
AnalogBeamformer hybrid_beamformer(double theta, const SystemConfig& cfg);

/// Beam-zooming design: the M beams fan over [theta - alpha, theta + alpha].
/// Throws ZoomInfeasibleError (with the offending subcarrier and beta) if the
/// TD phase constraint |beta_m| <= 1 fails anywhere, ValidationError for
/// degenerate geometry (B = 0 or alpha <= 0).
AnalogBeamformer zoom_beamformer(double theta, double alpha, const SystemConfig& cfg,
                                 const FrequencyGrid& grid);

/// Zoom pointing parameters (phi, s) without the beta feasibility check;
/// the tracking module builds per-slot beamformers through this.
void zoom_params(double theta, double alpha, const FrequencyGrid& grid,
                 int P, double* phi, double* s);

/// Closed-form per-subcarrier beam directions of the zoom design, strictly
/// increasing, endpoints theta -+ alpha.
std::vector<double> zoom_directions(double theta, double alpha, const FrequencyGrid& grid);

/// TD phase at subcarrier m for delay slope s: beta = 2*(1 - xi_m)*s.
double td_phase(double s, double xi_m);

/// Zero-forcing digital precoder with per-column power normalization to rho
/// (under the orthonormal-analog-columns approximation). Rejects equivalent
/// channels with condition number above 1e8.
MatC zf_precoder(const MatC& H_eq, double rho);

/// MMSE precoder D = H^H (H H^H + (K*sigma2/rho) I)^-1, columns normalized
/// to power rho.
MatC mmse_precoder(const MatC& H_eq, double rho, double sigma2);

/// Inspection export: one row per TD with block index, P phase values in
/// turns, and the delay in picoseconds (shifted so the smallest delay is 0;
/// a common delay is a global per-subcarrier phase and cancels in gains).
std::string beamformer_table(const AnalogBeamformer& bf);

}  // namespace thztrack
