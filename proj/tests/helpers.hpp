#pragma once

// Shared fixtures for the test suites: independent oracles, random-instance
// generators and the constructed datasets used across unit and acceptance
// tests. Everything here is deliberately implemented without going through
// the library's own code paths wherever it acts as an oracle.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "fdrqq/ingest.hpp"
#include "fdrqq/types.hpp"

namespace testutil {

inline fdrqq::PValueSet make_set(const std::vector<double>& ps) {
  fdrqq::PValueSet set;
  for (std::size_t i = 0; i < ps.size(); ++i)
    set.records.push_back({"test_" + std::to_string(i + 1), ps[i]});
  return set;
}

inline fdrqq::OrderedTests make_ordered(const std::vector<double>& ps) {
  return fdrqq::order_tests(make_set(ps));
}

// Brute-force step-up oracle: tests every index directly against
// p_(i) <= q*i/m (the textbook inequality, written exactly that way) and
// takes the maximal satisfying index. Rejections are the prefix 1..k.
inline std::size_t oracle_bh_kstar(const std::vector<double>& sorted_p, double q) {
  const std::size_t m = sorted_p.size();
  std::size_t k = 0;
  for (std::size_t i = 1; i <= m; ++i)
    if (sorted_p[i - 1] <= q * static_cast<double>(i) / static_cast<double>(m)) k = i;
  return k;
}

// Uniform p-values, sorted, for property tests.
inline std::vector<double> random_sorted_pvalues(std::mt19937& rng, std::size_t m) {
  std::uniform_real_distribution<double> unif(1e-12, 1.0);
  std::vector<double> ps(m);
  for (double& p : ps) p = unif(rng);
  std::sort(ps.begin(), ps.end());
  return ps;
}

// One-sample Kolmogorov-Smirnov distance against U(0,1).
inline double ks_uniform_distance(std::vector<double> sample) {
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 1; i <= sample.size(); ++i) {
    const double u = sample[i - 1];
    d = std::max(d, std::max(static_cast<double>(i) / n - u, u - (static_cast<double>(i) - 1.0) / n));
  }
  return d;
}

// m=200 dataset forcing the step-up read-offs k*=136, alpha=0.199,
// proportion=0.68 at q=0.3: a long plateau at p=0.199 followed by a tail
// lying exactly on the q=0.35 line.
inline fdrqq::PValueSet readoff_set() {
  std::vector<double> ps;
  for (std::size_t i = 1; i <= 200; ++i)
    ps.push_back(i <= 136 ? 0.199 : 0.35 * static_cast<double>(i) / 200.0);
  return make_set(ps);
}

// m=200 dataset whose raw m*p/i minimum sits at rank 70 with p_(70)=0.089:
// ranks below 70 rise like sqrt so their level stays above the minimum,
// ranks above 70 sit on a line strictly above it.
inline fdrqq::PValueSet minfdr_set() {
  std::vector<double> ps;
  for (std::size_t i = 1; i <= 200; ++i) {
    if (i < 70)
      ps.push_back(0.089 * std::sqrt(static_cast<double>(i) / 70.0));
    else if (i == 70)
      ps.push_back(0.089);
    else
      ps.push_back(0.0893 * static_cast<double>(i) / 70.0);
  }
  return make_set(ps);
}

// The four-point dataset used throughout: sorts to [0.005, 0.01, 0.03, 0.04].
inline fdrqq::PValueSet four_point_set() { return make_set({0.04, 0.005, 0.03, 0.01}); }

// High-precision standard normal CDF, independent of erfc: composite
// 8-node Gauss-Legendre integration of the density over 0.01-wide panels,
// accumulated in long double. Accurate to well below 1e-10 on [-8, 8].
inline long double phi_quadrature(double x) {
  static const long double nodes[4] = {0.18343464249564980494L, 0.52553240991632898582L,
                                       0.79666647741362673959L, 0.96028985649753623168L};
  static const long double weights[4] = {0.36268378337836198297L, 0.31370664587788728734L,
                                         0.22238103445337447054L, 0.10122853629037625915L};
  const long double inv_sqrt_2pi = 0.39894228040143267794L;
  const long double upper = std::fabs(static_cast<long double>(x));
  const std::size_t panels = std::max<std::size_t>(1, static_cast<std::size_t>(upper / 0.01L) + 1);
  const long double h = upper / static_cast<long double>(panels);
  long double integral = 0.0L;
  for (std::size_t k = 0; k < panels; ++k) {
    const long double mid = (static_cast<long double>(k) + 0.5L) * h;
    const long double half = h / 2.0L;
    for (int j = 0; j < 4; ++j) {
      const long double a = mid - half * nodes[j];
      const long double b = mid + half * nodes[j];
      integral += weights[j] * half *
                  (std::exp(-a * a / 2.0L) * inv_sqrt_2pi + std::exp(-b * b / 2.0L) * inv_sqrt_2pi);
    }
  }
  return x >= 0 ? 0.5L + integral : 0.5L - integral;
}

}  // namespace testutil
