#include "wqp/quasiprob.hpp"

#include <cmath>
#include <sstream>

#include "wqp/npt.hpp"

namespace wqp {

double QuasiProbDistribution::min_weight() const {
  if (entries.empty()) {
    throw Error(ErrorCode::invalid_argument,
                "QuasiProbDistribution: empty distribution");
  }
  double min_value = entries.front().weight;
  for (const auto& e : entries) min_value = std::min(min_value, e.weight);
  return min_value;
}

double QuasiProbDistribution::total_weight() const {
  double total = 0.0;
  for (const auto& e : entries) total += e.weight;
  return total;
}

GramSystem build_gram_system(
    const std::vector<SeparabilityEigenpair>& pairs) {
  if (pairs.empty()) {
    throw Error(ErrorCode::invalid_argument,
                "build_gram_system: empty pair list");
  }
  const int n = static_cast<int>(pairs.size());
  const int d = pairs.front().vector.dim();
  for (const auto& pair : pairs) {
    if (pair.vector.dim() != d || pair.vector.b.dim() != d) {
      throw Error(ErrorCode::invalid_argument,
                  "build_gram_system: inconsistent dimensions");
    }
  }

  GramSystem system;
  system.pairs = pairs;
  system.gram.resize(n, n);
  system.g.resize(n);
  for (int i = 0; i < n; ++i) {
    system.g[i] = pairs[i].g;
    for (int j = i; j < n; ++j) {
      const double oa = std::abs(
          pairs[i].vector.a.amplitudes.dot(pairs[j].vector.a.amplitudes));
      const double ob = std::abs(
          pairs[i].vector.b.amplitudes.dot(pairs[j].vector.b.amplitudes));
      const double value = oa * oa * ob * ob;
      system.gram(i, j) = value;
      system.gram(j, i) = value;
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(system.gram);
  const auto& values = solver.eigenvalues();
  const double threshold = kKernelRelThreshold * values[n - 1];
  int kernel_dim = 0;
  while (kernel_dim < n && values[kernel_dim] < threshold) ++kernel_dim;
  system.kernel_basis = solver.eigenvectors().leftCols(kernel_dim);
  return system;
}

Eigen::VectorXd kernel_project(const GramSystem& system,
                               const Eigen::VectorXd& p) {
  Eigen::VectorXd out = p;
  for (int k = 0; k < system.kernel_dim(); ++k) {
    const Eigen::VectorXd basis_vec = system.kernel_basis.col(k);
    out -= (basis_vec.dot(p) / basis_vec.dot(basis_vec)) * basis_vec;
  }
  return out;
}

namespace {

Eigen::VectorXd pinv_solution(const GramSystem& system) {
  const int n = system.size();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(system.gram);
  const auto& values = solver.eigenvalues();
  const double threshold = kKernelRelThreshold * values[n - 1];
  Eigen::VectorXd p = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (values[i] < threshold) continue;
    const Eigen::VectorXd basis_vec = solver.eigenvectors().col(i);
    p += (basis_vec.dot(system.g) / values[i]) * basis_vec;
  }
  return p;
}

}  // namespace

QuasiProbDistribution solve_quasiprob(const GramSystem& system) {
  const Eigen::VectorXd particular = pinv_solution(system);
  const double residual = (system.gram * particular - system.g).norm();
  if (residual >= 1e-9) {
    std::ostringstream msg;
    msg << "solve_quasiprob: g lies outside range(G), residual " << residual
        << "; the eigenvector family does not span the state";
    throw Error(ErrorCode::inconsistent_system, msg.str());
  }
  const Eigen::VectorXd optimized = kernel_project(system, particular);

  QuasiProbDistribution dist;
  dist.entries.reserve(system.size());
  for (int i = 0; i < system.size(); ++i) {
    dist.entries.push_back({system.pairs[i].vector, optimized[i]});
  }
  return dist;
}

Eigen::VectorXd min_norm_solution_cod(const GramSystem& system) {
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(system.gram);
  return cod.solve(system.g);
}

std::vector<SeparabilityEigenpair> distribution_support(
    const WernerParams& params, const DephasingSpec& spec) {
  if (params.d == 2) {
    std::vector<SeparabilityEigenpair> support;
    const double nf = params.norm;
    support.push_back({{PairLabel::trivial(0, 1), Ket::basis(2, 0),
                        Ket::basis(2, 1)},
                       nf});
    support.push_back({{PairLabel::trivial(1, 0), Ket::basis(2, 1),
                        Ket::basis(2, 0)},
                       nf});
    for (auto& pair : nontrivial_sep_pairs(params, spec)) {
      support.push_back(std::move(pair));
    }
    return support;
  }
  if (params.d == 3) {
    return nontrivial_sep_pairs(params, spec);
  }
  throw Error(ErrorCode::invalid_dimension,
              "distribution_support: distributions exist for d=2,3 only");
}

QuasiProbDistribution qubit_distribution_analytic(const WernerParams& params,
                                                  const DephasingSpec& spec) {
  if (params.d != 2) {
    throw Error(ErrorCode::invalid_dimension,
                "qubit_distribution_analytic: requires d=2");
  }
  const std::vector<SeparabilityEigenpair> support =
      distribution_support(params, spec);
  const double nf = params.norm;
  const double a = params.alpha;
  const Complex l1c = spec.lambda(1);
  if (std::abs(l1c.imag()) > 1e-12) {
    throw Error(ErrorCode::complex_coefficient,
                "qubit_distribution_analytic: requires real lambda(1)");
  }
  const double l1 = l1c.real();

  // Signed-lambda entries; identical to the |lambda| form for lambda >= 0.
  const double p01 = nf * a;
  const double p_par = 0.5 * nf * (1.0 - a * (1.0 + l1));
  const double p_perp = 0.5 * nf * (1.0 - a * (1.0 - l1));

  QuasiProbDistribution dist;
  for (const auto& pair : support) {
    double weight = 0.0;
    switch (pair.vector.label.family) {
      case PairLabel::Family::trivial: weight = p01; break;
      case PairLabel::Family::parallel: weight = p_par; break;
      case PairLabel::Family::perp: weight = p_perp; break;
      default:
        throw Error(ErrorCode::invalid_argument,
                    "qubit_distribution_analytic: unexpected family");
    }
    dist.entries.push_back({pair.vector, weight});
  }
  return dist;
}

QuasiProbDistribution qutrit_distribution_analytic(
    const WernerParams& params, const DephasingSpec& spec) {
  if (params.d != 3) {
    throw Error(ErrorCode::invalid_dimension,
                "qutrit_distribution_analytic: requires d=3");
  }
  const std::vector<SeparabilityEigenpair> support =
      distribution_support(params, spec);
  const double nf = params.norm;
  const double a = params.alpha;

  QuasiProbDistribution dist;
  for (const auto& pair : support) {
    const PairLabel& label = pair.vector.label;
    double weight = 0.0;
    switch (label.family) {
      case PairLabel::Family::parallel:
      case PairLabel::Family::perp: {
        const Complex lc = spec.lambda(label.index[1] - label.index[0]);
        if (std::abs(lc.imag()) > 1e-12) {
          throw Error(ErrorCode::complex_coefficient,
                      "qutrit_distribution_analytic: requires real lambda");
        }
        const double lam = lc.real();
        const double sign =
            label.family == PairLabel::Family::parallel ? 1.0 : -1.0;
        weight = 0.25 * nf * (1.0 - a * (1.0 + sign * 2.0 * lam));
        break;
      }
      case PairLabel::Family::cross_left:
      case PairLabel::Family::cross_right:
        weight = nf * (1.0 + a) / 8.0;
        break;
      default:
        throw Error(ErrorCode::invalid_argument,
                    "qutrit_distribution_analytic: unexpected family");
    }
    dist.entries.push_back({pair.vector, weight});
  }
  return dist;
}

QuasiProbDistribution distribution_analytic(const WernerParams& params,
                                            const DephasingSpec& spec) {
  if (params.d == 2) return qubit_distribution_analytic(params, spec);
  if (params.d == 3) return qutrit_distribution_analytic(params, spec);
  throw Error(ErrorCode::invalid_dimension,
              "distribution_analytic: distributions exist for d=2,3 only");
}

double alpha_qp_threshold(int d, const DephasingSpec& spec) {
  if (d == 2) {
    return 1.0 / (1.0 + spec.lambda_abs(1));
  }
  if (d == 3) {
    const double l = std::max(spec.lambda_abs(1), spec.lambda_abs(2));
    return 1.0 / (1.0 + 2.0 * l);
  }
  throw Error(ErrorCode::invalid_dimension,
              "alpha_qp_threshold: thresholds exist for d=2,3 only");
}

BoundInterval bound_entanglement_interval(double delta) {
  if (delta < 0.0) {
    throw Error(ErrorCode::invalid_argument,
                "bound_entanglement_interval: delta must be >= 0");
  }
  const DephasingSpec spec = DephasingSpec::gaussian(delta);
  return {alpha_qp_threshold(3, spec), alpha_pt_threshold(3, spec)};
}

double find_max_interval_delta(double search_lo, double search_hi,
                               double tol) {
  if (!(search_lo >= 0.0) || !(search_lo < search_hi) || !(tol > 0.0)) {
    throw Error(ErrorCode::invalid_argument,
                "find_max_interval_delta: need 0 <= lo < hi and tol > 0");
  }
  const auto width = [](double delta) {
    return bound_entanglement_interval(delta).width();
  };
  const double inv_golden = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = search_lo;
  double hi = search_hi;
  double c = hi - inv_golden * (hi - lo);
  double d = lo + inv_golden * (hi - lo);
  double wc = width(c);
  double wd = width(d);
  while (hi - lo > tol) {
    if (wc > wd) {
      hi = d;
      d = c;
      wd = wc;
      c = hi - inv_golden * (hi - lo);
      wc = width(c);
    } else {
      lo = c;
      c = d;
      wc = wd;
      d = lo + inv_golden * (hi - lo);
      wd = width(d);
    }
  }
  return 0.5 * (lo + hi);
}

BipartiteOperator reconstruct_state(const QuasiProbDistribution& dist) {
  if (dist.entries.empty()) {
    throw Error(ErrorCode::invalid_argument,
                "reconstruct_state: empty distribution");
  }
  const int d = dist.entries.front().vector.dim();
  BipartiteOperator rho = BipartiteOperator::zero(d);
  for (const auto& entry : dist.entries) {
    if (entry.vector.dim() != d || entry.vector.b.dim() != d) {
      throw Error(ErrorCode::invalid_argument,
                  "reconstruct_state: mixed dimensions in distribution");
    }
    const Eigen::VectorXcd ab = entry.vector.joint();
    rho.entries += entry.weight * (ab * ab.adjoint());
  }
  return rho;
}

}  // namespace wqp
