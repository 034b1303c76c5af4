#pragma once

#include <functional>

#include "wqp/types.hpp"

namespace wqp {

/// Probability density on [0,2pi)^2.
using PhaseDistribution = std::function<double(double, double)>;

/// Swap operator S = sum_{i,j} |i,j><j,i|.  Involutory, S^2 = 1.
BipartiteOperator make_swap(int d);

/// Werner state N(alpha) (1 - alpha S).
BipartiteOperator make_werner(const WernerParams& params);

/// Gaussian dephasing coefficient exp(-delta^2 (m-n)^2 / 2).
double gaussian_lambda(double delta, int m, int n);

/// Wrapped Gaussian density of width delta at angle phi, the periodic sum
/// of Gaussians truncated at |k| <= ceil(6 delta / 2pi) + 2.
double wrapped_gaussian_pdf(double phi, double delta);

/// Dephasing coefficient of a phase distribution: the double quadrature of
/// p(phi_a, phi_b) exp(i (phi_a - phi_b)(m - n)) on a uniform grid with
/// `resolution` points per axis.  p must be non-negative and normalized to
/// 1 within 1e-6.
Complex lambda_from_phase_distribution(const PhaseDistribution& p, int m,
                                       int n, int resolution = 512);

/// Dephased Werner state N(alpha) (1 - alpha sum_{m,n} lambda_{mn}
/// |m,n><n,m|).  The spec must cover level differences up to d-1.
BipartiteOperator apply_dephasing(const WernerParams& params,
                                  const DephasingSpec& spec);

}  // namespace wqp
