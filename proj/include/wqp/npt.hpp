#pragma once

#include <vector>

#include "wqp/types.hpp"

namespace wqp {

/// Eigenvalues below -kNegativityTol count as negative; anything closer to
/// zero is treated as eigensolver noise.
inline constexpr double kNegativityTol = 1e-10;

/// Partial-transposition verdict for a dephased Werner state.
struct PtReport {
  std::vector<double> eigenvalues;  // ascending
  double min_eigenvalue = 0.0;
  bool is_npt = false;
  double alpha_pt = 0.0;
};

/// Transposes mode B: <i,l|out|j,k> = <i,k|in|j,l>.
BipartiteOperator partial_transpose(const BipartiteOperator& op);

/// Closed-form spectrum of the partially transposed dephased Werner state,
/// ascending.  d=2 and d=3 only.
std::vector<double> pt_eigenvalues_analytic(const WernerParams& params,
                                            const DephasingSpec& spec);

/// Smallest eigenvalue of partial_transpose(op) by dense Hermitian
/// diagonalization.  Rejects operators with hermiticity defect above 1e-8.
double pt_min_eigenvalue_numeric(const BipartiteOperator& op);

/// NPT threshold: the state is NPT exactly for alpha above this value.
/// d=2: 1/(1+|l1|); d=3: 2/(2+|l2|+sqrt(8 l1^2 + l2^2)).
double alpha_pt_threshold(int d, const DephasingSpec& spec);

PtReport pt_report(const WernerParams& params, const DephasingSpec& spec);

}  // namespace wqp
