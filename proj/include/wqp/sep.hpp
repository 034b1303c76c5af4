#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "wqp/types.hpp"

namespace wqp {

/// Symbolic tag identifying how a product vector was constructed.
struct PairLabel {
  enum class Family { trivial, parallel, perp, cross_left, cross_right,
                      numeric };

  Family family = Family::numeric;
  std::array<int, 4> index{-1, -1, -1, -1};

  static PairLabel trivial(int i, int j);
  static PairLabel parallel(int j, int k, int l);
  static PairLabel perp(int j, int k, int l);
  static PairLabel cross_left(int j, int k, int l, int m);
  static PairLabel cross_right(int m, int j, int k, int l);
  static PairLabel numeric(int start);

  std::string str() const;
  bool operator==(const PairLabel&) const = default;
};

struct ProductVector {
  PairLabel label;
  Ket a;
  Ket b;

  int dim() const { return a.dim(); }
  /// |a,b> in the i*d+k index convention.
  Eigen::VectorXcd joint() const;
};

struct SeparabilityEigenpair {
  ProductVector vector;
  double g = 0.0;
};

/// Residual of the disturbed eigenvalue problem L|a,b> = g|a,b> + |chi>.
/// A genuine separability eigenpair has both partial overlaps of chi equal
/// to zero: (<a| x 1)|chi> = (1 x <b|)|chi> = 0.
struct SepResidual {
  double g_estimate = 0.0;
  Eigen::VectorXcd chi;
  double left_overlap_norm = 0.0;
  double right_overlap_norm = 0.0;
};

/// (|j> + i^l |k>)/sqrt(2) with 0 <= j < k < d and l in {0,1,2,3}.
Ket superposition_ket(int j, int k, int l, int d);

/// The d^2 basis pairs |i,j> with g = N(alpha)(1 - delta_ij alpha), in
/// lexicographic (i,j) order.
std::vector<SeparabilityEigenpair> trivial_sep_pairs(const WernerParams&);

/// The superposition families of the dephased Werner state, ordered
/// parallel, perpendicular, cross_left, cross_right, each by (j,k,l,m).
/// Requires real dephasing coefficients; d=2 yields 8 pairs, d=3 yields 48.
std::vector<SeparabilityEigenpair> nontrivial_sep_pairs(
    const WernerParams&, const DephasingSpec&);

/// trivial_sep_pairs followed by nontrivial_sep_pairs; this order is the
/// row-index contract for Gram systems built from the full family.
std::vector<SeparabilityEigenpair> all_sep_pairs(const WernerParams&,
                                                 const DephasingSpec&);

SepResidual verify_sep_pair(const BipartiteOperator& op,
                            const SeparabilityEigenpair& pair);

double max_separability_eigenvalue(
    const std::vector<SeparabilityEigenpair>& pairs);

/// Optimal witness W = g_max 1 - op from the maximal listed eigenvalue.
BipartiteOperator witness_from_gmax(
    const BipartiteOperator& op,
    const std::vector<SeparabilityEigenpair>& pairs);

struct SeesawResult {
  std::vector<SeparabilityEigenpair> pairs;  // distinct, g descending
  int non_converged = 0;

  double g_max() const;
};

/// Alternating principal-eigenvector search for separability eigenpairs:
/// from random product starts, a is replaced by the top eigenvector of the
/// B-contracted operator and b likewise for A, until |dg| < 1e-12.  On a
/// degenerate top eigenspace (gap < 1e-12) the current vector is projected
/// onto the eigenspace instead, so fully mixed operators keep every start
/// as a fixed point.
SeesawResult seesaw_sep_solver(const BipartiteOperator& op, int starts,
                               int iters, std::uint64_t seed = 0x5eed);

}  // namespace wqp
