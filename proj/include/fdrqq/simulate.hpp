#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>

#include "fdrqq/error.hpp"
#include "fdrqq/types.hpp"

namespace fdrqq {

// Standard normal CDF via the complementary error function:
// Phi(x) = erfc(-x / sqrt(2)) / 2.
inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

// Deterministic stream of standard-normal variates. The recipe is fixed so
// that a seed reproduces the same sequence across runs and releases:
//   uniforms: mersenne twister mt19937_64 (fully specified by the C++
//     standard), mapped to (0,1) as ((bits >> 11) + 0.5) * 2^-53;
//   normals: Box-Muller, z1 = sqrt(-2 ln u1) cos(2 pi u2),
//     z2 = sqrt(-2 ln u1) sin(2 pi u2), pairs consumed in that order.
// std::normal_distribution is deliberately not used: the standard leaves its
// algorithm implementation-defined, which would break reproducibility.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : gen_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  // Uniform on the open interval (0,1); never 0, so log(u1) stays finite.
  double next_uniform() {
    return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

enum class Pattern { independent, equicorrelated };

// Recipe for a synthetic dataset of m two-sided tests. The first
// round(pi1*m) tests are non-null (mean shift `effect`); under the
// equicorrelated pattern every statistic shares a common factor with
// weight sqrt(rho).
struct SimSpec {
  std::size_t m = 0;
  Pattern pattern = Pattern::independent;
  double pi1 = 0.0;     // fraction of non-null tests, in [0,1]
  double effect = 0.0;  // mean shift of non-null statistics, >= 0
  double rho = 0.0;     // equicorrelation, in [0,1); must be 0 when independent
  std::uint64_t seed = 0;
};

// Draws z_i = sqrt(rho)*Z0 + sqrt(1-rho)*eps_i + effect*[i non-null] and
// converts to two-sided p-values p_i = 2*(1 - Phi(|z_i|)), clamped to at
// least 1e-300. The shared factor Z0 is always the first variate drawn,
// then one per test, so the same spec and seed give byte-identical output.
inline PValueSet simulate_pvalues(const SimSpec& spec) {
  if (spec.m < 1) throw Error(errc::invalid_spec, "simulation needs m >= 1");
  if (!(spec.pi1 >= 0.0 && spec.pi1 <= 1.0))
    throw Error(errc::invalid_spec, "pi1 must be in [0,1]");
  if (!(spec.effect >= 0.0) || !std::isfinite(spec.effect))
    throw Error(errc::invalid_spec, "effect must be a finite value >= 0");
  if (!(spec.rho >= 0.0 && spec.rho < 1.0))
    throw Error(errc::invalid_spec, "rho must be in [0,1)");
  if (spec.pattern == Pattern::independent && spec.rho != 0.0)
    throw Error(errc::invalid_spec, "rho must be 0 under the independent pattern");

  const std::size_t n_nonnull =
      static_cast<std::size_t>(std::llround(spec.pi1 * static_cast<double>(spec.m)));
  const double shared_weight = std::sqrt(spec.rho);
  const double own_weight = std::sqrt(1.0 - spec.rho);

  NormalStream stream(spec.seed);
  const double z0 = stream.next();

  PValueSet set;
  set.records.reserve(spec.m);
  for (std::size_t i = 1; i <= spec.m; ++i) {
    double z = shared_weight * z0 + own_weight * stream.next();
    if (i <= n_nonnull) z += spec.effect;
    // 2*(1 - Phi(|z|)) evaluated as 2*Phi(-|z|) to keep small tails accurate.
    double p = 2.0 * normal_cdf(-std::fabs(z));
    p = std::max(p, 1e-300);
    set.records.push_back({"test_" + std::to_string(i), p});
  }
  return set;
}

}  // namespace fdrqq
