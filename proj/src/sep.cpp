#include "wqp/sep.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

#include "wqp/rng.hpp"

namespace wqp {

namespace {

// i^l for l in {0,1,2,3}
Complex unit_power(int l) {
  switch (((l % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

double real_lambda(const DephasingSpec& spec, int diff) {
  const Complex value = spec.lambda(diff);
  if (std::abs(value.imag()) > 1e-12) {
    std::ostringstream msg;
    msg << "nontrivial_sep_pairs: lambda(" << diff
        << ") has imaginary part " << value.imag()
        << "; the analytic families require real coefficients";
    throw Error(ErrorCode::complex_coefficient, msg.str());
  }
  return value.real();
}

}  // namespace

PairLabel PairLabel::trivial(int i, int j) {
  return {Family::trivial, {i, j, -1, -1}};
}
PairLabel PairLabel::parallel(int j, int k, int l) {
  return {Family::parallel, {j, k, l, -1}};
}
PairLabel PairLabel::perp(int j, int k, int l) {
  return {Family::perp, {j, k, l, -1}};
}
PairLabel PairLabel::cross_left(int j, int k, int l, int m) {
  return {Family::cross_left, {j, k, l, m}};
}
PairLabel PairLabel::cross_right(int m, int j, int k, int l) {
  return {Family::cross_right, {m, j, k, l}};
}
PairLabel PairLabel::numeric(int start) {
  return {Family::numeric, {start, -1, -1, -1}};
}

std::string PairLabel::str() const {
  std::ostringstream out;
  switch (family) {
    case Family::trivial:
      out << "trivial(" << index[0] << "," << index[1] << ")";
      break;
    case Family::parallel:
      out << "parallel(" << index[0] << "," << index[1] << "," << index[2]
          << ")";
      break;
    case Family::perp:
      out << "perp(" << index[0] << "," << index[1] << "," << index[2] << ")";
      break;
    case Family::cross_left:
      out << "cross_left(" << index[0] << "," << index[1] << "," << index[2]
          << "," << index[3] << ")";
      break;
    case Family::cross_right:
      out << "cross_right(" << index[0] << "," << index[1] << "," << index[2]
          << "," << index[3] << ")";
      break;
    case Family::numeric:
      out << "seesaw(" << index[0] << ")";
      break;
  }
  return out.str();
}

Eigen::VectorXcd ProductVector::joint() const {
  const int d = a.dim();
  Eigen::VectorXcd v(d * d);
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) {
      v[i * d + k] = a.amplitudes[i] * b.amplitudes[k];
    }
  }
  return v;
}

Ket superposition_ket(int j, int k, int l, int d) {
  if (!(0 <= j && j < k && k < d)) {
    throw Error(ErrorCode::invalid_argument,
                "superposition_ket: indices must satisfy 0 <= j < k < d");
  }
  if (l < 0 || l > 3) {
    throw Error(ErrorCode::invalid_argument,
                "superposition_ket: l must lie in {0,1,2,3}");
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  v[j] = inv_sqrt2;
  v[k] = unit_power(l) * inv_sqrt2;
  Ket ket;
  ket.amplitudes = std::move(v);
  return ket;
}

std::vector<SeparabilityEigenpair> trivial_sep_pairs(
    const WernerParams& params) {
  const int d = params.d;
  std::vector<SeparabilityEigenpair> pairs;
  pairs.reserve(d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const double g =
          params.norm * (1.0 - (i == j ? params.alpha : 0.0));
      pairs.push_back({{PairLabel::trivial(i, j), Ket::basis(d, i),
                        Ket::basis(d, j)},
                       g});
    }
  }
  return pairs;
}

std::vector<SeparabilityEigenpair> nontrivial_sep_pairs(
    const WernerParams& params, const DephasingSpec& spec) {
  const int d = params.d;
  if (d != 2 && d != 3) {
    throw Error(ErrorCode::invalid_dimension,
                "nontrivial_sep_pairs: analytic families exist for d=2,3 "
                "only");
  }
  if (!spec.covers(d - 1)) {
    throw Error(ErrorCode::incomplete_spec,
                "nontrivial_sep_pairs: spec lacks coefficients up to "
                "difference " +
                    std::to_string(d - 1));
  }
  const double nf = params.norm;
  const double a = params.alpha;

  std::vector<SeparabilityEigenpair> pairs;
  // For real lambda the separability eigenvalue of |s^l,s^l> is
  // N(1 - a/2 (1 + lambda)) with the signed coefficient; this coincides
  // with the |lambda| form whenever lambda >= 0 (all Gaussian specs).
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      const double lam = real_lambda(spec, k - j);
      for (int l = 0; l < 4; ++l) {
        const Ket s = superposition_ket(j, k, l, d);
        pairs.push_back({{PairLabel::parallel(j, k, l), s, s},
                         nf * (1.0 - 0.5 * a * (1.0 + lam))});
      }
    }
  }
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      const double lam = real_lambda(spec, k - j);
      for (int l = 0; l < 4; ++l) {
        pairs.push_back({{PairLabel::perp(j, k, l),
                          superposition_ket(j, k, l, d),
                          superposition_ket(j, k, (l + 2) % 4, d)},
                         nf * (1.0 - 0.5 * a * (1.0 - lam))});
      }
    }
  }
  if (d >= 3) {
    for (int j = 0; j < d; ++j) {
      for (int k = j + 1; k < d; ++k) {
        for (int l = 0; l < 4; ++l) {
          for (int m = 0; m < d; ++m) {
            if (m == j || m == k) continue;
            pairs.push_back({{PairLabel::cross_left(j, k, l, m),
                              superposition_ket(j, k, l, d), Ket::basis(d, m)},
                             nf});
          }
        }
      }
    }
    for (int j = 0; j < d; ++j) {
      for (int k = j + 1; k < d; ++k) {
        for (int l = 0; l < 4; ++l) {
          for (int m = 0; m < d; ++m) {
            if (m == j || m == k) continue;
            pairs.push_back({{PairLabel::cross_right(m, j, k, l),
                              Ket::basis(d, m), superposition_ket(j, k, l, d)},
                             nf});
          }
        }
      }
    }
  }
  return pairs;
}

std::vector<SeparabilityEigenpair> all_sep_pairs(const WernerParams& params,
                                                 const DephasingSpec& spec) {
  std::vector<SeparabilityEigenpair> pairs = trivial_sep_pairs(params);
  std::vector<SeparabilityEigenpair> rest = nontrivial_sep_pairs(params, spec);
  pairs.insert(pairs.end(), std::make_move_iterator(rest.begin()),
               std::make_move_iterator(rest.end()));
  return pairs;
}

SepResidual verify_sep_pair(const BipartiteOperator& op,
                            const SeparabilityEigenpair& pair) {
  const int d = pair.vector.dim();
  if (op.dim != d) {
    throw Error(ErrorCode::invalid_argument,
                "verify_sep_pair: operator and pair dimensions differ");
  }
  const Eigen::VectorXcd ab = pair.vector.joint();
  SepResidual res;
  res.g_estimate = std::real(ab.dot(op.entries * ab));
  res.chi = op.entries * ab - res.g_estimate * ab;

  // chi reshaped as X(i,k) = chi[i*d+k]; the partial overlaps are
  // (<a| x 1)|chi> = X^T conj(a) and (1 x <b|)|chi> = X conj(b).
  Eigen::MatrixXcd x(d, d);
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) {
      x(i, k) = res.chi[i * d + k];
    }
  }
  res.left_overlap_norm =
      (x.transpose() * pair.vector.a.amplitudes.conjugate()).norm();
  res.right_overlap_norm =
      (x * pair.vector.b.amplitudes.conjugate()).norm();
  return res;
}

double max_separability_eigenvalue(
    const std::vector<SeparabilityEigenpair>& pairs) {
  if (pairs.empty()) {
    throw Error(ErrorCode::invalid_argument,
                "max_separability_eigenvalue: no solutions supplied");
  }
  double gmax = pairs.front().g;
  for (const auto& pair : pairs) gmax = std::max(gmax, pair.g);
  return gmax;
}

BipartiteOperator witness_from_gmax(
    const BipartiteOperator& op,
    const std::vector<SeparabilityEigenpair>& pairs) {
  const double gmax = max_separability_eigenvalue(pairs);
  BipartiteOperator w = BipartiteOperator::zero(op.dim);
  w.entries = gmax * Eigen::MatrixXcd::Identity(op.total_dim(),
                                                op.total_dim()) -
              op.entries;
  return w;
}

double SeesawResult::g_max() const {
  if (pairs.empty()) {
    throw Error(ErrorCode::no_convergence,
                "seesaw: no converged solutions");
  }
  return pairs.front().g;
}

namespace {

// Contraction (1 x <b|) op (1 x |b>) acting on mode A, or the mirrored
// contraction on mode B.
Eigen::MatrixXcd contract_mode(const BipartiteOperator& op,
                               const Eigen::VectorXcd& vec, bool contract_b) {
  const int d = op.dim;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Complex sum = 0.0;
      for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) {
          if (contract_b) {
            sum += std::conj(vec[k]) * op.entries(i * d + k, j * d + l) *
                   vec[l];
          } else {
            sum += std::conj(vec[k]) * op.entries(k * d + i, l * d + j) *
                   vec[l];
          }
        }
      }
      out(i, j) = sum;
    }
  }
  return out;
}

// Top eigenvector; on a degenerate top eigenspace, the projection of
// `current` onto it.
Eigen::VectorXcd principal_update(const Eigen::MatrixXcd& contracted,
                                  const Eigen::VectorXcd& current) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(contracted);
  const auto& values = solver.eigenvalues();
  const int n = static_cast<int>(values.size());
  const double top = values[n - 1];
  int first = n - 1;
  while (first > 0 && top - values[first - 1] < 1e-12) --first;
  if (first == n - 1) {
    return solver.eigenvectors().col(n - 1);
  }
  Eigen::VectorXcd projected = Eigen::VectorXcd::Zero(n);
  for (int c = first; c < n; ++c) {
    const Eigen::VectorXcd basis_vec = solver.eigenvectors().col(c);
    projected += basis_vec.dot(current) * basis_vec;
  }
  const double norm = projected.norm();
  if (norm < 1e-14) {
    return solver.eigenvectors().col(n - 1);
  }
  return projected / norm;
}

}  // namespace

SeesawResult seesaw_sep_solver(const BipartiteOperator& op, int starts,
                               int iters, std::uint64_t seed) {
  if (starts < 1 || iters < 1) {
    throw Error(ErrorCode::invalid_argument,
                "seesaw_sep_solver: starts and iters must be >= 1");
  }
  if (op.hermiticity_defect() > 1e-8) {
    throw Error(ErrorCode::invalid_operator,
                "seesaw_sep_solver: operator is not Hermitian");
  }
  const int d = op.dim;
  SplitMix64 rng(seed);
  SeesawResult result;

  for (int start = 0; start < starts; ++start) {
    Eigen::VectorXcd a = haar_random_ket(d, rng).amplitudes;
    Eigen::VectorXcd b = haar_random_ket(d, rng).amplitudes;
    double g_prev = std::numeric_limits<double>::quiet_NaN();
    double g = 0.0;
    bool converged = false;
    for (int it = 0; it < iters; ++it) {
      a = principal_update(contract_mode(op, b, true), a);
      b = principal_update(contract_mode(op, a, false), b);
      Eigen::VectorXcd ab(d * d);
      for (int i = 0; i < d; ++i) {
        for (int k = 0; k < d; ++k) ab[i * d + k] = a[i] * b[k];
      }
      g = std::real(ab.dot(op.entries * ab));
      if (!std::isnan(g_prev) && std::abs(g - g_prev) < 1e-12) {
        converged = true;
        break;
      }
      g_prev = g;
    }
    if (!converged) {
      ++result.non_converged;
      continue;
    }
    bool duplicate = false;
    for (const auto& known : result.pairs) {
      const double oa = std::abs(known.vector.a.amplitudes.dot(a));
      const double ob = std::abs(known.vector.b.amplitudes.dot(b));
      if (oa > 1.0 - 1e-8 && ob > 1.0 - 1e-8) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    Ket ka, kb;
    ka.amplitudes = a;
    kb.amplitudes = b;
    result.pairs.push_back({{PairLabel::numeric(start), ka, kb}, g});
  }
  std::sort(result.pairs.begin(), result.pairs.end(),
            [](const auto& lhs, const auto& rhs) { return lhs.g > rhs.g; });
  return result;
}

}  // namespace wqp
