#include "wqp/rng.hpp"

#include <cmath>
#include <numbers>

namespace wqp {

double SplitMix64::gaussian() {
  // u1 in (0,1] keeps the log finite.
  const double u1 = (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

Ket haar_random_ket(int d, SplitMix64& rng) {
  if (d < 2) {
    throw Error(ErrorCode::invalid_dimension,
                "haar_random_ket: dimension must be >= 2");
  }
  Eigen::VectorXcd v(d);
  for (int i = 0; i < d; ++i) {
    const double re = rng.gaussian();
    const double im = rng.gaussian();
    v[i] = Complex(re, im);
  }
  return Ket::normalized(std::move(v));
}

Ket haar_random_ket(int d, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return haar_random_ket(d, rng);
}

}  // namespace wqp
