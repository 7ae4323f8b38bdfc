// Independent reference computations used only by the test suites.
#ifndef LACUNARY_TESTS_ORACLES_HPP
#define LACUNARY_TESTS_ORACLES_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "lacunary/lacunary.hpp"

namespace oracle {

using lacunary::BigInt;
using lacunary::CounterRng;
using lacunary::Rational;

/// O(N^2) count of pairs (k, l) with j1 n_k - j2 n_l = nu, (j1, k) != (j2, l).
inline std::uint64_t naive_count(const std::vector<BigInt>& terms, long j1, long j2, long nu) {
  std::uint64_t s = 0;
  for (std::size_t k = 0; k < terms.size(); ++k)
    for (std::size_t l = 0; l < terms.size(); ++l) {
      if (j1 == j2 && k == l) continue;
      if (BigInt(j1 * terms[k] - j2 * terms[l]) == nu) ++s;
    }
  return s;
}

/// Random rational in [0,1] with denominator at most max_den; the endpoints
/// and repeated values are deliberately frequent.
inline Rational random_point(CounterRng& rng, unsigned long max_den) {
  const unsigned long q = 1 + rng.below(max_den);
  const unsigned long p = rng.below(q + 1);
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline lacunary::ExactPointSet random_point_set(CounterRng& rng, std::size_t n, unsigned long max_den) {
  std::vector<Rational> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(random_point(rng, max_den));
  return lacunary::ExactPointSet(std::move(pts));
}

/// Step function with up to `jumps` random breakpoints and small integer values.
inline lacunary::StepFunction random_step(CounterRng& rng, std::size_t jumps, unsigned long max_den = 97) {
  std::vector<Rational> breaks{Rational(0)};
  for (std::size_t i = 0; i < jumps; ++i) {
    Rational b(1 + rng.below(max_den - 1), max_den);
    b.canonicalize();
    breaks.push_back(b);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  std::vector<Rational> open, point;
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    open.emplace_back(static_cast<long>(rng.below(9)) - 4);
    point.emplace_back(static_cast<long>(rng.below(9)) - 4);
  }
  return lacunary::StepFunction(breaks, open, point);
}

/// Step function with f(s) = f(1 - s): random values on [0, 1/2] mirrored.
inline lacunary::StepFunction random_symmetric_step(CounterRng& rng, std::size_t jumps, unsigned long max_den = 96) {
  std::vector<Rational> half;
  for (std::size_t i = 0; i < jumps / 2; ++i) {
    Rational b(1 + rng.below(max_den / 2 - 1), max_den);
    b.canonicalize();
    half.push_back(b);
  }
  std::sort(half.begin(), half.end());
  half.erase(std::unique(half.begin(), half.end()), half.end());
  std::vector<Rational> values;
  for (std::size_t i = 0; i <= half.size(); ++i) values.emplace_back(static_cast<long>(rng.below(9)) - 4);
  std::vector<Rational> point_values;
  for (std::size_t i = 0; i < half.size(); ++i) point_values.emplace_back(static_cast<long>(rng.below(9)) - 4);
  const Rational f0(static_cast<long>(rng.below(9)) - 4);
  const Rational fhalf(static_cast<long>(rng.below(9)) - 4);
  auto fn = [&](const Rational& s) -> Rational {
    const Rational t = s > Rational(1, 2) ? Rational(1 - s) : s;
    if (t == 0) return f0;
    if (t == Rational(1, 2)) return fhalf;
    std::size_t piece = 0;
    for (std::size_t i = 0; i < half.size(); ++i) {
      if (t == half[i]) return point_values[i];
      if (t > half[i]) piece = i + 1;
    }
    return values[piece];
  };
  std::vector<Rational> breaks{Rational(0)};
  for (const auto& b : half) breaks.push_back(b);
  breaks.push_back(Rational(1, 2));
  for (auto it = half.rbegin(); it != half.rend(); ++it) breaks.push_back(Rational(1 - *it));
  return lacunary::StepFunction::from_evaluator(breaks, fn);
}

/// Jittered-stratified Monte-Carlo estimate of
/// int int (sum_k I_{[a,a+z]}(n_k x))^2 dx da on a side x side grid.
inline double monte_carlo_theorem4(const std::vector<long>& ns, double z, std::size_t side, std::uint64_t seed) {
  CounterRng rng(seed);
  long double total = 0;
  for (std::size_t i = 0; i < side; ++i)
    for (std::size_t k = 0; k < side; ++k) {
      const double x = (static_cast<double>(i) + rng.uniform()) / static_cast<double>(side);
      const double a = (static_cast<double>(k) + rng.uniform()) / static_cast<double>(side);
      double s = 0;
      for (long n : ns) {
        double u = static_cast<double>(n) * x - a;
        u -= std::floor(u);
        s += (u <= z ? 1.0 : 0.0) - z;
      }
      total += s * s;
    }
  return static_cast<double>(total / static_cast<long double>(side * side));
}

/// sigma^2_{[0,a]}(x) for the Theorem-1 weights as the convolution
/// ||f||^2 + int_0^1 f(t) g(x + t) dt, g(y) = (1/3) sum_r f((y + r)/3),
/// by the midpoint rule with `steps` cells.
inline double convolution_sigma_sq(double a, double x, std::size_t steps) {
  auto f = [a](double t) {
    t -= std::floor(t);
    return (t <= a ? 1.0 : 0.0) - a;
  };
  long double s = 0;
  for (std::size_t i = 0; i < steps; ++i) {
    const double t = (static_cast<double>(i) + 0.5) / static_cast<double>(steps);
    const double y = x + t;
    const double g = (f(y / 3) + f((y + 1) / 3) + f((y + 2) / 3)) / 3;
    s += f(t) * g;
  }
  return a * (1 - a) + static_cast<double>(s / static_cast<long double>(steps));
}

}  // namespace oracle

#endif  // LACUNARY_TESTS_ORACLES_HPP
