#include "thztrack/beamform.hpp"

#include <cmath>
#include <sstream>

#include "thztrack/analysis.hpp"
#include "thztrack/channel.hpp"

namespace thztrack {

double dirichlet_sinc(int Nbar, double alpha) {
  if (Nbar < 1) throw ValidationError("dirichlet_sinc: Nbar must be >= 1");
  const double den = std::sin(kPi * alpha / 2.0);
  if (std::abs(den) < 1e-12) {
    // removable singularity at alpha in 2Z: limit is cos(Nbar*pi*a/2)/cos(pi*a/2)
    return std::cos(Nbar * kPi * alpha / 2.0) / std::cos(kPi * alpha / 2.0);
  }
  return std::sin(Nbar * kPi * alpha / 2.0) / (Nbar * den);
}

VecC materialize(const AnalogBeamformer& bf, double f_m) {
  const int Kd = bf.K_d();
  const int P = bf.P();
  VecC f(Kd * P);
  for (int j = 0; j < Kd; ++j) {
    const cplx ph = std::polar(1.0, -2.0 * kPi * f_m * bf.delays(j));
    f.segment(j * P, P) = bf.ps_blocks.row(j).transpose() * ph;
  }
  return f;
}

MatC materialize_fan(const AnalogBeamformer& bf, const FrequencyGrid& grid) {
  const int M = grid.M();
  MatC fan(bf.N(), M);
  for (int m = 0; m < M; ++m) fan.col(m) = materialize(bf, grid.f[m]);
  return fan;
}

double array_gain(const VecC& f, double theta, double xi_m) {
  const VecC a = array_response(static_cast<int>(f.size()), xi_m * theta);
  return std::abs(a.dot(f));  // Eigen dot conjugates the first operand
}

double split_direction(double theta, double xi_m) { return theta / xi_m; }

double lemma1_direction(double phi, double beta, double xi_m, int P) {
  if (std::abs(beta) > 1.0 + 1e-12) {
    throw ValidationError("lemma1_direction: |beta| must be <= 1 for a directional beam");
  }
  return phi / xi_m + beta / (xi_m * P);
}

double td_phase(double s, double xi_m) { return 2.0 * (1.0 - xi_m) * s; }

AnalogBeamformer linear_delay_beamformer(double phi, double s, const SystemConfig& cfg) {
  const int P = antennas_per_td(cfg);
  const int Kd = cfg.K_d;
  AnalogBeamformer bf;
  bf.phi = phi;
  bf.s = s;
  bf.T_c = 1.0 / cfg.f_c;
  bf.ps_blocks.resize(Kd, P);
  bf.delays.resize(Kd);
  const double scale = 1.0 / std::sqrt(static_cast<double>(cfg.N));
  for (int j = 0; j < Kd; ++j) {
    const double block_phase = kPi * (P * phi + 2.0 * s) * j;
    for (int p = 0; p < P; ++p) {
      bf.ps_blocks(j, p) = std::polar(scale, kPi * p * phi + block_phase);
    }
    bf.delays(j) = s * bf.T_c * j;
  }
  return bf;
}

AnalogBeamformer split_free_beamformer(double theta, const SystemConfig& cfg,
                                       const FrequencyGrid& grid) {
  const FeasibilityReport feas = dpp_feasible(cfg, grid);
  if (!feas.feasible) {
    std::ostringstream os;
    os << "split_free_beamformer: DPP infeasible, max_m |P(xi_m-1)| = "
       << 1.0 - feas.margin << " >= 1";
    throw ZoomInfeasibleError(os.str(), feas.worst_m, 1.0 - feas.margin);
  }
  const int P = antennas_per_td(cfg);
  return linear_delay_beamformer(theta, -P * theta / 2.0, cfg);
}

AnalogBeamformer hybrid_beamformer(double theta, const SystemConfig& cfg) {
  return linear_delay_beamformer(theta, 0.0, cfg);
}

void zoom_params(double theta, double alpha, const FrequencyGrid& grid,
                 int P, double* phi, double* s) {
  const double xi1 = grid.xi_first();
  const double xiM = grid.xi_last();
  if (!(xiM - xi1 > 0.0)) {
    throw ValidationError("zoom: degenerate grid (B = 0), xi_M - xi_1 must be > 0");
  }
  *phi = theta + (1.0 - xi1) * alpha;
  *s = -(P / 2.0) * (*phi + 2.0 * xiM * xi1 * alpha / (xiM - xi1));
}

AnalogBeamformer zoom_beamformer(double theta, double alpha, const SystemConfig& cfg,
                                 const FrequencyGrid& grid) {
  if (!(alpha > 0.0)) throw ValidationError("zoom_beamformer: alpha must be > 0");
  const int P = antennas_per_td(cfg);
  double phi = 0.0, s = 0.0;
  zoom_params(theta, alpha, grid, P, &phi, &s);
  for (int m = 0; m < grid.M(); ++m) {
    const double beta = td_phase(s, grid.xi[m]);
    if (std::abs(beta) > 1.0 + 1e-12) {
      std::ostringstream os;
      os << "zoom_beamformer: TD phase out of range at subcarrier m = " << m + 1
         << " (beta = " << beta << ", |beta| must be <= 1)";
      throw ZoomInfeasibleError(os.str(), m + 1, beta);
    }
  }
  return linear_delay_beamformer(phi, s, cfg);
}

std::vector<double> zoom_directions(double theta, double alpha, const FrequencyGrid& grid) {
  const double xi1 = grid.xi_first();
  const double xiM = grid.xi_last();
  if (!(xiM - xi1 > 0.0)) {
    throw ValidationError("zoom_directions: degenerate grid (B = 0)");
  }
  std::vector<double> dirs(grid.M());
  const double lead = theta + (1.0 - xi1) * alpha;
  const double c = 2.0 * xiM * xi1 / (xiM - xi1) * alpha;
  for (int m = 0; m < grid.M(); ++m) {
    const double xim = grid.xi[m];
    dirs[m] = lead + c * (xim - 1.0) / xim;
  }
  return dirs;
}

namespace {

double condition_number(const MatC& A) {
  Eigen::JacobiSVD<MatC> svd(A);
  const auto& sv = svd.singularValues();
  const double smin = sv(sv.size() - 1);
  if (smin <= 0.0) return std::numeric_limits<double>::infinity();
  return sv(0) / smin;
}

MatC normalize_columns(MatC D, double rho) {
  for (Eigen::Index k = 0; k < D.cols(); ++k) {
    const double nrm = D.col(k).norm();
    if (nrm <= 0.0) throw PrecodingError("precoder: zero column after inversion");
    D.col(k) *= std::sqrt(rho) / nrm;
  }
  return D;
}

}  // namespace

MatC zf_precoder(const MatC& H_eq, double rho) {
  if (H_eq.rows() != H_eq.cols()) throw PrecodingError("zf_precoder: H_eq must be K x K");
  const double cond = condition_number(H_eq);
  if (!(cond <= 1e8)) {
    std::ostringstream os;
    os << "zf_precoder: H_eq condition number " << cond << " exceeds 1e8";
    throw PrecodingError(os.str());
  }
  const MatC gram = H_eq * H_eq.adjoint();
  const MatC D = H_eq.adjoint() * gram.inverse();
  return normalize_columns(D, rho);
}

MatC mmse_precoder(const MatC& H_eq, double rho, double sigma2) {
  if (H_eq.rows() != H_eq.cols()) throw PrecodingError("mmse_precoder: H_eq must be K x K");
  const Eigen::Index K = H_eq.rows();
  const MatC reg = H_eq * H_eq.adjoint() +
                   (static_cast<double>(K) * sigma2 / rho) * MatC::Identity(K, K);
  const MatC D = H_eq.adjoint() * reg.inverse();
  return normalize_columns(D, rho);
}

std::string beamformer_table(const AnalogBeamformer& bf) {
  std::ostringstream os;
  os << "# thztrack-beamformer v1\n";
  os << "# td_index delay_ps phase_turns[" << bf.P() << "]\n";
  const double shift = bf.delays.minCoeff() < 0.0 ? -bf.delays.minCoeff() : 0.0;
  os.setf(std::ios::fixed);
  for (int j = 0; j < bf.K_d(); ++j) {
    os.precision(6);
    os << j << " " << (bf.delays(j) + shift) * 1e12;
    for (int p = 0; p < bf.P(); ++p) {
      double turns = std::arg(bf.ps_blocks(j, p)) / (2.0 * kPi);
      if (turns < 0.0) turns += 1.0;
      os.precision(9);
      os << " " << turns;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace thztrack
