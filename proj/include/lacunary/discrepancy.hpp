#ifndef LACUNARY_DISCREPANCY_HPP
#define LACUNARY_DISCREPANCY_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "lacunary/rational.hpp"

namespace lacunary {

/// Finite point multiset in [0,1]. T is Rational (exact mode) or double
/// (float mode). Duplicates are allowed.
template <class T>
class PointSet {
 public:
  explicit PointSet(std::vector<T> points) : points_(std::move(points)) {
    if (points_.empty()) throw std::invalid_argument("point set must be non-empty");
    for (const T& p : points_)
      if (p < 0 || p > 1) throw std::invalid_argument("point outside [0,1]");
  }

  const std::vector<T>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

  /// Points in non-decreasing order; ties keep input order.
  std::vector<T> sorted() const {
    std::vector<T> s = points_;
    std::stable_sort(s.begin(), s.end());
    return s;
  }

 private:
  std::vector<T> points_;
};

using ExactPointSet = PointSet<Rational>;
using FloatPointSet = PointSet<double>;

enum class DiscrepancyKind { Star, Extremal };

inline std::string to_string(DiscrepancyKind k) { return k == DiscrepancyKind::Star ? "star" : "extremal"; }

/// Supremum value plus an interval attaining it. An open end means the
/// supremum is a one-sided limit at that endpoint.
template <class T>
struct DiscrepancyResult {
  T value{};
  DiscrepancyKind kind{};
  T witness_a{};
  T witness_b{};
  bool a_closed = true;
  bool b_closed = true;
};

/// |#{x_k in I}/N - |I|| for the interval I with the given endpoint types,
/// counted directly.
template <class T>
T interval_deviation(const PointSet<T>& ps, const T& a, const T& b, bool a_closed, bool b_closed) {
  std::size_t count = 0;
  for (const T& x : ps.points()) {
    const bool above = a_closed ? !(x < a) : a < x;
    const bool below = b_closed ? !(b < x) : x < b;
    if (above && below) ++count;
  }
  T dev = T(static_cast<long>(count)) / T(static_cast<long>(ps.size())) - (b - a);
  return dev < 0 ? T(-dev) : dev;
}

template <class T>
T interval_deviation(const PointSet<T>& ps, const DiscrepancyResult<T>& r) {
  return interval_deviation(ps, r.witness_a, r.witness_b, r.a_closed, r.b_closed);
}

/// D_N* = max_k max(k/N - x_(k), x_(k) - (k-1)/N) over the sorted points.
template <class T>
DiscrepancyResult<T> star_discrepancy(const PointSet<T>& ps) {
  const std::vector<T> x = ps.sorted();
  const long n = static_cast<long>(x.size());
  DiscrepancyResult<T> best;
  best.kind = DiscrepancyKind::Star;
  best.value = T(-1);
  for (long k = 1; k <= n; ++k) {
    const T& xk = x[k - 1];
    T over = T(k) / T(n) - xk;
    if (over > best.value) {
      best.value = over;
      best.witness_b = xk;
      best.b_closed = true;
    }
    T under = xk - T(k - 1) / T(n);
    if (under > best.value) {
      best.value = under;
      best.witness_b = xk;
      best.b_closed = false;
    }
  }
  best.witness_a = T(0);
  best.a_closed = true;
  return best;
}

/// D_N = max_i(i/N - x_(i)) + max_j(x_(j) - (j-1)/N). When j <= i the witness
/// is the closed [x_(j), x_(i)]; otherwise it is the open gap (x_(i), x_(j)).
template <class T>
DiscrepancyResult<T> extremal_discrepancy(const PointSet<T>& ps) {
  const std::vector<T> x = ps.sorted();
  const long n = static_cast<long>(x.size());
  long best_i = 1, best_j = 1;
  T best_over = T(1) / T(n) - x[0];
  T best_under = x[0];
  for (long k = 2; k <= n; ++k) {
    T over = T(k) / T(n) - x[k - 1];
    if (over >= best_over) {
      best_over = over;
      best_i = k;
    }
    T under = x[k - 1] - T(k - 1) / T(n);
    if (under > best_under) {
      best_under = under;
      best_j = k;
    }
  }
  DiscrepancyResult<T> r;
  r.kind = DiscrepancyKind::Extremal;
  r.value = best_over + best_under;
  if (best_j <= best_i) {
    r.witness_a = x[best_j - 1];
    r.witness_b = x[best_i - 1];
    r.a_closed = r.b_closed = true;
  } else {
    r.witness_a = x[best_i - 1];
    r.witness_b = x[best_j - 1];
    r.a_closed = r.b_closed = false;
  }
  return r;
}

template <class T>
DiscrepancyResult<T> discrepancy(const PointSet<T>& ps, DiscrepancyKind kind) {
  return kind == DiscrepancyKind::Star ? star_discrepancy(ps) : extremal_discrepancy(ps);
}

inline constexpr std::size_t kBruteForceMaxPoints = 1000;

/// Oracle: direct supremum over candidate endpoints {0, 1, x_k}, each taken
/// both closed and open (one-sided limit). Counts come from linear scans.
template <class T>
DiscrepancyResult<T> brute_force_discrepancy(const PointSet<T>& ps, DiscrepancyKind kind) {
  const std::size_t n = ps.size();
  if (n > kBruteForceMaxPoints)
    throw std::length_error("brute force discrepancy limited to " + std::to_string(kBruteForceMaxPoints) +
                            " points");
  std::vector<T> cand{T(0), T(1)};
  for (const T& p : ps.points()) cand.push_back(p);
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  std::vector<long> less(cand.size(), 0), leq(cand.size(), 0);
  for (std::size_t c = 0; c < cand.size(); ++c) {
    for (const T& p : ps.points()) {
      if (p < cand[c]) ++less[c];
      if (!(cand[c] < p)) ++leq[c];
    }
  }

  const T total = T(static_cast<long>(n));
  DiscrepancyResult<T> best;
  best.kind = kind;
  best.value = T(-1);
  auto consider = [&](long count, std::size_t ia, std::size_t ib, bool ac, bool bc) {
    T dev = T(count) / total - (cand[ib] - cand[ia]);
    if (dev < 0) dev = -dev;
    if (dev > best.value) {
      best.value = dev;
      best.witness_a = cand[ia];
      best.witness_b = cand[ib];
      best.a_closed = ac;
      best.b_closed = bc;
    }
  };

  if (kind == DiscrepancyKind::Star) {
    for (std::size_t ib = 0; ib < cand.size(); ++ib) {
      consider(leq[ib], 0, ib, true, true);
      if (ib > 0) consider(less[ib], 0, ib, true, false);
    }
    return best;
  }

  for (std::size_t ia = 0; ia < cand.size(); ++ia) {
    consider(leq[ia] - less[ia], ia, ia, true, true);
    for (std::size_t ib = ia + 1; ib < cand.size(); ++ib) {
      consider(leq[ib] - less[ia], ia, ib, true, true);
      consider(less[ib] - less[ia], ia, ib, true, false);
      consider(leq[ib] - leq[ia], ia, ib, false, true);
      consider(less[ib] - leq[ia], ia, ib, false, false);
    }
  }
  return best;
}

/// N d / sqrt(2 N log log N), the LIL scaling.
inline double lil_normalize(long long n, double d) {
  if (n < 3) throw std::domain_error("lil_normalize needs N >= 3");
  const double nn = static_cast<double>(n);
  return nn * d / std::sqrt(2.0 * nn * std::log(std::log(nn)));
}

}  // namespace lacunary

#endif  // LACUNARY_DISCREPANCY_HPP
