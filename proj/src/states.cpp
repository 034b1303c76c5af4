#include "wqp/states.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace wqp {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

BipartiteOperator make_swap(int d) {
  if (d < 2) {
    throw Error(ErrorCode::invalid_dimension,
                "make_swap: dimension must be >= 2, got " + std::to_string(d));
  }
  BipartiteOperator s = BipartiteOperator::zero(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      s.entries(i * d + j, j * d + i) = 1.0;
    }
  }
  return s;
}

BipartiteOperator make_werner(const WernerParams& params) {
  BipartiteOperator rho = make_swap(params.d);
  rho.entries *= -params.alpha;
  rho.entries += Eigen::MatrixXcd::Identity(rho.total_dim(), rho.total_dim());
  rho.entries *= params.norm;
  return rho;
}

double gaussian_lambda(double delta, int m, int n) {
  if (delta < 0.0) {
    throw Error(ErrorCode::invalid_argument,
                "gaussian_lambda: width must be >= 0, got " +
                    std::to_string(delta));
  }
  const double k = static_cast<double>(m - n);
  return std::exp(-delta * delta * k * k / 2.0);
}

double wrapped_gaussian_pdf(double phi, double delta) {
  if (delta <= 0.0) {
    throw Error(ErrorCode::invalid_argument,
                "wrapped_gaussian_pdf: width must be > 0");
  }
  const int kmax = static_cast<int>(std::ceil(6.0 * delta / kTwoPi)) + 2;
  double sum = 0.0;
  for (int k = -kmax; k <= kmax; ++k) {
    const double x = phi + kTwoPi * k;
    sum += std::exp(-x * x / (2.0 * delta * delta));
  }
  return sum / std::sqrt(kTwoPi * delta * delta);
}

Complex lambda_from_phase_distribution(const PhaseDistribution& p, int m,
                                       int n, int resolution) {
  if (resolution < 64) {
    throw Error(ErrorCode::invalid_argument,
                "lambda_from_phase_distribution: resolution must be >= 64");
  }
  const int diff = m - n;
  const double h = kTwoPi / resolution;
  const double weight = h * h;

  // Uniform grid over the torus; for periodic integrands the trapezoid
  // rule collapses to this plain sum and converges spectrally.
  double total = 0.0;
  Complex moment(0.0, 0.0);
  for (int ia = 0; ia < resolution; ++ia) {
    const double phi_a = ia * h;
    for (int ib = 0; ib < resolution; ++ib) {
      const double phi_b = ib * h;
      const double value = p(phi_a, phi_b);
      if (value < -1e-12) {
        throw Error(ErrorCode::invalid_argument,
                    "lambda_from_phase_distribution: distribution is "
                    "negative at (" +
                        std::to_string(phi_a) + ", " + std::to_string(phi_b) +
                        ")");
      }
      total += value;
      const double arg = (phi_a - phi_b) * diff;
      moment += value * Complex(std::cos(arg), std::sin(arg));
    }
  }
  total *= weight;
  moment *= weight;

  if (std::abs(total - 1.0) > 1e-6) {
    std::ostringstream msg;
    msg << "lambda_from_phase_distribution: distribution integrates to "
        << total << " instead of 1";
    throw Error(ErrorCode::not_normalized, msg.str());
  }
  return moment;
}

BipartiteOperator apply_dephasing(const WernerParams& params,
                                  const DephasingSpec& spec) {
  const int d = params.d;
  if (!spec.covers(d - 1)) {
    throw Error(ErrorCode::incomplete_spec,
                "apply_dephasing: spec lacks coefficients up to difference " +
                    std::to_string(d - 1));
  }
  BipartiteOperator rho = BipartiteOperator::zero(d);
  rho.entries = Eigen::MatrixXcd::Identity(d * d, d * d);
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      rho.entries(m * d + n, n * d + m) -= params.alpha * spec.lambda(m - n);
    }
  }
  rho.entries *= params.norm;
  return rho;
}

}  // namespace wqp
