#include "wqp/types.hpp"

#include <cmath>
#include <sstream>

#include "wqp/states.hpp"

namespace wqp {

WernerParams::WernerParams(int d_, double alpha_) : d(d_), alpha(alpha_) {
  if (d < 2) {
    throw Error(ErrorCode::invalid_dimension,
                "WernerParams: dimension must be >= 2, got " +
                    std::to_string(d));
  }
  if (!(alpha >= -1.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::invalid_argument,
                "WernerParams: alpha must lie in [-1, 1], got " +
                    std::to_string(alpha));
  }
  norm = 1.0 / (static_cast<double>(d) * d - alpha * d);
}

Ket Ket::basis(int d, int i) {
  if (d < 1 || i < 0 || i >= d) {
    throw Error(ErrorCode::invalid_argument,
                "Ket::basis: index " + std::to_string(i) +
                    " out of range for dimension " + std::to_string(d));
  }
  Ket k;
  k.amplitudes = Eigen::VectorXcd::Zero(d);
  k.amplitudes[i] = 1.0;
  return k;
}

Ket Ket::normalized(Eigen::VectorXcd v) {
  const double n = v.norm();
  if (n < 1e-14) {
    throw Error(ErrorCode::invalid_argument,
                "Ket::normalized: vector norm too small to normalize");
  }
  Ket k;
  k.amplitudes = v / n;
  return k;
}

BipartiteOperator BipartiteOperator::identity(int d) {
  if (d < 2) {
    throw Error(ErrorCode::invalid_dimension,
                "BipartiteOperator: dimension must be >= 2");
  }
  BipartiteOperator op;
  op.dim = d;
  op.entries = Eigen::MatrixXcd::Identity(d * d, d * d);
  return op;
}

BipartiteOperator BipartiteOperator::zero(int d) {
  if (d < 2) {
    throw Error(ErrorCode::invalid_dimension,
                "BipartiteOperator: dimension must be >= 2");
  }
  BipartiteOperator op;
  op.dim = d;
  op.entries = Eigen::MatrixXcd::Zero(d * d, d * d);
  return op;
}

double BipartiteOperator::hermiticity_defect() const {
  return (entries - entries.adjoint()).cwiseAbs().maxCoeff();
}

DephasingSpec DephasingSpec::gaussian(double delta) {
  if (delta < 0.0) {
    throw Error(ErrorCode::invalid_argument,
                "DephasingSpec::gaussian: width must be >= 0, got " +
                    std::to_string(delta));
  }
  DephasingSpec spec;
  spec.source_ = Source::gaussian;
  spec.delta_ = delta;
  return spec;
}

DephasingSpec DephasingSpec::explicit_coefficients(
    std::vector<Complex> lambdas) {
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    if (std::abs(lambdas[k]) > 1.0 + 1e-9) {
      throw Error(ErrorCode::invalid_argument,
                  "DephasingSpec: |lambda(" + std::to_string(k + 1) +
                      ")| exceeds 1");
    }
  }
  DephasingSpec spec;
  spec.source_ = Source::explicit_list;
  spec.coeffs_ = std::move(lambdas);
  return spec;
}

DephasingSpec DephasingSpec::from_phase_distribution(
    const std::function<double(double, double)>& p, int max_diff,
    int resolution) {
  if (max_diff < 1) {
    throw Error(ErrorCode::invalid_argument,
                "DephasingSpec::from_phase_distribution: max_diff must be "
                ">= 1");
  }
  // lambda_from_phase_distribution validates normalization; dividing the
  // higher moments by the zeroth keeps lambda(0) = 1 exact.
  const Complex total = lambda_from_phase_distribution(p, 0, 0, resolution);
  std::vector<Complex> coeffs(max_diff);
  for (int k = 1; k <= max_diff; ++k) {
    coeffs[k - 1] =
        lambda_from_phase_distribution(p, k, 0, resolution) / total.real();
    if (std::abs(coeffs[k - 1]) > 1.0 + 1e-9) {
      throw Error(ErrorCode::invalid_argument,
                  "DephasingSpec: quadrature produced |lambda| > 1");
    }
  }
  DephasingSpec spec;
  spec.source_ = Source::quadrature;
  spec.coeffs_ = std::move(coeffs);
  return spec;
}

Complex DephasingSpec::lambda(int diff) const {
  if (diff == 0) return Complex(1.0, 0.0);
  const int k = std::abs(diff);
  Complex value;
  if (source_ == Source::gaussian) {
    value = Complex(std::exp(-delta_ * delta_ * k * k / 2.0), 0.0);
  } else {
    if (k > static_cast<int>(coeffs_.size())) {
      throw Error(ErrorCode::incomplete_spec,
                  "DephasingSpec: no coefficient for difference " +
                      std::to_string(diff));
    }
    value = coeffs_[k - 1];
  }
  return diff > 0 ? value : std::conj(value);
}

bool DephasingSpec::covers(int max_diff) const {
  if (source_ == Source::gaussian) return true;
  return static_cast<int>(coeffs_.size()) >= max_diff;
}

bool DephasingSpec::real_coefficients(double tol) const {
  if (source_ == Source::gaussian) return true;
  for (const auto& c : coeffs_) {
    if (std::abs(c.imag()) > tol) return false;
  }
  return true;
}

double DephasingSpec::gaussian_width() const {
  if (source_ != Source::gaussian) {
    throw Error(ErrorCode::invalid_argument,
                "DephasingSpec: width only defined for the Gaussian source");
  }
  return delta_;
}

}  // namespace wqp
