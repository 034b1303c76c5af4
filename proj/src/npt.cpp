#include "wqp/npt.hpp"

#include <algorithm>
#include <cmath>

namespace wqp {

BipartiteOperator partial_transpose(const BipartiteOperator& op) {
  const int d = op.dim;
  if (d < 2) {
    throw Error(ErrorCode::invalid_operator,
                "partial_transpose: operator has no valid dimension");
  }
  BipartiteOperator out = BipartiteOperator::zero(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) {
          out.entries(i * d + l, j * d + k) = op.entries(i * d + k, j * d + l);
        }
      }
    }
  }
  return out;
}

std::vector<double> pt_eigenvalues_analytic(const WernerParams& params,
                                            const DephasingSpec& spec) {
  const int d = params.d;
  const double a = params.alpha;
  const double nf = params.norm;
  std::vector<double> eig;
  if (d == 2) {
    const double l1 = spec.lambda_abs(1);
    eig = {nf, nf, nf * (1.0 - a + a * l1), nf * (1.0 - a - a * l1)};
  } else if (d == 3) {
    const double l1 = spec.lambda_abs(1);
    const double l2 = spec.lambda_abs(2);
    const double root = std::sqrt(8.0 * l1 * l1 + l2 * l2);
    eig.assign(6, nf);
    eig.push_back(nf * (1.0 - a + a * l2));
    eig.push_back(nf * 0.5 * (2.0 - 2.0 * a - a * l2 - a * root));
    eig.push_back(nf * 0.5 * (2.0 - 2.0 * a - a * l2 + a * root));
  } else {
    throw Error(ErrorCode::invalid_dimension,
                "pt_eigenvalues_analytic: closed forms exist for d=2,3 only");
  }
  std::sort(eig.begin(), eig.end());
  return eig;
}

double pt_min_eigenvalue_numeric(const BipartiteOperator& op) {
  if (op.hermiticity_defect() > 1e-8) {
    throw Error(ErrorCode::invalid_operator,
                "pt_min_eigenvalue_numeric: operator is not Hermitian");
  }
  const BipartiteOperator pt = partial_transpose(op);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      pt.entries, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double alpha_pt_threshold(int d, const DephasingSpec& spec) {
  if (d == 2) {
    return 1.0 / (1.0 + spec.lambda_abs(1));
  }
  if (d == 3) {
    const double l1 = spec.lambda_abs(1);
    const double l2 = spec.lambda_abs(2);
    return 2.0 / (2.0 + l2 + std::sqrt(8.0 * l1 * l1 + l2 * l2));
  }
  throw Error(ErrorCode::invalid_dimension,
              "alpha_pt_threshold: thresholds exist for d=2,3 only");
}

PtReport pt_report(const WernerParams& params, const DephasingSpec& spec) {
  PtReport report;
  report.eigenvalues = pt_eigenvalues_analytic(params, spec);
  report.min_eigenvalue = report.eigenvalues.front();
  report.is_npt = report.min_eigenvalue < -kNegativityTol;
  report.alpha_pt = alpha_pt_threshold(params.d, spec);
  return report;
}

}  // namespace wqp
