#pragma once

#include <vector>

#include "wqp/sep.hpp"
#include "wqp/types.hpp"

namespace wqp {

/// Linear system G p = g over a family of separability eigenpairs, with
/// G_ij = |<a_i,b_i|a_j,b_j>|^2 and the kernel of G precomputed.
struct GramSystem {
  std::vector<SeparabilityEigenpair> pairs;
  Eigen::MatrixXd gram;
  Eigen::VectorXd g;
  Eigen::MatrixXd kernel_basis;  // orthonormal columns, G v ~ 0

  int size() const { return static_cast<int>(pairs.size()); }
  int kernel_dim() const { return static_cast<int>(kernel_basis.cols()); }
};

struct WeightedVector {
  ProductVector vector;
  double weight = 0.0;
};

struct QuasiProbDistribution {
  std::vector<WeightedVector> entries;

  double min_weight() const;
  double total_weight() const;
  bool is_entangled(double tol = 1e-12) const { return min_weight() < -tol; }
};

/// Eigenvalues of G below 1e-10 times the largest count as kernel.
inline constexpr double kKernelRelThreshold = 1e-10;

GramSystem build_gram_system(const std::vector<SeparabilityEigenpair>& pairs);

/// Removes the kernel components of p: p - sum_k (p0k.p / p0k.p0k) p0k.
Eigen::VectorXd kernel_project(const GramSystem& system,
                               const Eigen::VectorXd& p);

/// Minimal-norm solution of G p = g by eigendecomposition pseudoinverse
/// followed by the explicit kernel projection.  Throws when g has a
/// component outside range(G) (least-squares residual >= 1e-9).
QuasiProbDistribution solve_quasiprob(const GramSystem& system);

/// Independent route to the same solution via complete orthogonal
/// decomposition; used to cross-check solve_quasiprob.
Eigen::VectorXd min_norm_solution_cod(const GramSystem& system);

/// The product-vector family carrying the optimized distribution, in
/// serialization order: d=2 uses |0,1>, |1,0> plus the superposition
/// families (10 vectors); d=3 uses the superposition families alone
/// (48 vectors).
std::vector<SeparabilityEigenpair> distribution_support(
    const WernerParams&, const DephasingSpec&);

QuasiProbDistribution qubit_distribution_analytic(const WernerParams&,
                                                  const DephasingSpec&);
QuasiProbDistribution qutrit_distribution_analytic(const WernerParams&,
                                                   const DephasingSpec&);
QuasiProbDistribution distribution_analytic(const WernerParams&,
                                            const DephasingSpec&);

/// Negativity threshold of the distribution: d=2 gives 1/(1+|l1|), d=3
/// gives 1/(1+2 max(|l1|,|l2|)).
double alpha_qp_threshold(int d, const DephasingSpec& spec);

struct BoundInterval {
  double alpha_qp = 0.0;
  double alpha_pt = 0.0;
  double width() const { return alpha_pt - alpha_qp; }
};

/// Gaussian-dephasing bound-entanglement interval for d=3: states with
/// alpha_qp < alpha <= alpha_pt are entangled yet PPT.
BoundInterval bound_entanglement_interval(double delta);

/// Golden-section maximization of the interval width over delta.
double find_max_interval_delta(double search_lo, double search_hi,
                               double tol);

/// sum_i w_i |a_i><a_i| x |b_i><b_i|.
BipartiteOperator reconstruct_state(const QuasiProbDistribution& dist);

}  // namespace wqp
