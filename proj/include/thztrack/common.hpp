#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace thztrack {

using cplx = std::complex<double>;
using VecC = Eigen::VectorXcd;
using VecD = Eigen::VectorXd;
using MatC = Eigen::MatrixXcd;
using MatD = Eigen::MatrixXd;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Rejected input: a config, parameter or file that violates a documented
/// contract. Maps to CLI exit code 1.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A requested beam-zooming geometry cannot be realized: some subcarrier's
/// TD phase slope beta leaves [-1, 1]. Carries the first offending pair.
class ZoomInfeasibleError : public std::runtime_error {
public:
  ZoomInfeasibleError(const std::string& what, int subcarrier, double beta)
      : std::runtime_error(what), subcarrier_(subcarrier), beta_(beta) {}
  int subcarrier() const { return subcarrier_; }  // 1-based
  double beta() const { return beta_; }

private:
  int subcarrier_;
  double beta_;
};

/// Numerical failure in digital precoding (singular / ill-conditioned
/// equivalent channel).
class PrecodingError : public std::runtime_error {
public:
  explicit PrecodingError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace thztrack
