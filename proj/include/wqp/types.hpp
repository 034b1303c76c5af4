#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace wqp {

using Complex = std::complex<double>;

enum class ErrorCode {
  invalid_argument,
  invalid_dimension,
  incomplete_spec,
  complex_coefficient,
  not_normalized,
  invalid_operator,
  inconsistent_system,
  no_convergence,
};

/// Library error carrying a machine-readable code (mirrored by the C API).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Werner-family parameters: local dimension d, mixing parameter alpha,
/// and the cached normalization 1/(d^2 - alpha*d).
struct WernerParams {
  int d;
  double alpha;
  double norm;

  WernerParams(int d, double alpha);

  /// Entanglement bound of the undephased state: alpha > 1/d.
  bool undephased_entangled() const { return alpha > 1.0 / d; }
};

/// Single-mode state vector of length d.
struct Ket {
  Eigen::VectorXcd amplitudes;

  int dim() const { return static_cast<int>(amplitudes.size()); }
  double norm() const { return amplitudes.norm(); }

  static Ket basis(int d, int i);
  /// Normalizes v; rejects vectors with norm below 1e-14.
  static Ket normalized(Eigen::VectorXcd v);
};

/// Operator on a d x d bipartite system, stored as a dense d^2 x d^2 matrix.
/// Basis convention: |i,k> has row/column index i*dim + k (row-major).
struct BipartiteOperator {
  int dim = 0;
  Eigen::MatrixXcd entries;

  static BipartiteOperator identity(int d);
  static BipartiteOperator zero(int d);

  int total_dim() const { return dim * dim; }
  Complex trace() const { return entries.trace(); }
  /// Largest absolute entry of A - A^dagger.
  double hermiticity_defect() const;
  bool is_hermitian(double tol = 1e-12) const {
    return hermiticity_defect() <= tol;
  }
};

/// Dephasing coefficients lambda(k) indexed by the level difference
/// k = m - n.  lambda(0) = 1, lambda(-k) = conj(lambda(k)), |lambda| <= 1.
class DephasingSpec {
 public:
  enum class Source { gaussian, explicit_list, quadrature };

  /// Gaussian dephasing of width delta: lambda(k) = exp(-delta^2 k^2 / 2).
  static DephasingSpec gaussian(double delta);

  /// lambdas[k-1] is lambda(k) for k = 1..lambdas.size(); lambda(0) = 1.
  static DephasingSpec explicit_coefficients(std::vector<Complex> lambdas);

  /// Coefficients from a normalized phase distribution p(phi_a, phi_b) on
  /// [0,2pi)^2 via trapezoid quadrature, covering differences up to
  /// max_diff.  Coefficients are normalized by the computed integral so
  /// that lambda(0) = 1 holds exactly.
  static DephasingSpec from_phase_distribution(
      const std::function<double(double, double)>& p, int max_diff,
      int resolution = 512);

  Complex lambda(int diff) const;
  double lambda_abs(int diff) const { return std::abs(lambda(diff)); }

  /// True when lambda(k) is available for all |k| <= max_diff.
  bool covers(int max_diff) const;
  /// True when every stored coefficient has |Im| <= tol.
  bool real_coefficients(double tol = 1e-12) const;

  Source source() const { return source_; }
  /// Width of the Gaussian source; throws for other sources.
  double gaussian_width() const;

 private:
  DephasingSpec() = default;

  Source source_ = Source::gaussian;
  double delta_ = 0.0;
  std::vector<Complex> coeffs_;  // lambda(1..K) for non-Gaussian sources
};

}  // namespace wqp
