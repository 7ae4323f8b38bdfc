#ifndef LACUNARY_SIGMA_HPP
#define LACUNARY_SIGMA_HPP

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "lacunary/bv_function.hpp"
#include "lacunary/diophantine.hpp"
#include "lacunary/parallel.hpp"
#include "lacunary/rational.hpp"

namespace lacunary {

inline constexpr long kDefaultJMax = 30'000;

enum class SigmaPath { Series, ClosedFormTheorem1 };

/// sigma_f^2(x) with a certified bound on the neglected part of the series.
struct SigmaValue {
  double value = 0;
  double tail_bound = 0;
  SigmaPath path = SigmaPath::Series;
  long j_max = 0;
  long nu_max = 0;
  bool table_truncated = false;
};

namespace detail {

/// sum_{j > m} 1/j^2 < 1/(m + 1/2) by convexity of 1/t^2.
inline double inverse_square_tail(long m) { return 1.0 / (static_cast<double>(m) + 0.5); }

inline double cos_turns(long nu, const Rational& x) {
  return static_cast<double>(std::cos(kTwoPi * phase(std::labs(nu), x)));
}
inline double sin_turns(long nu, const Rational& x) {
  const double s = static_cast<double>(std::sin(kTwoPi * phase(std::labs(nu), x)));
  return nu < 0 ? -s : s;
}
inline double cos_turns(long nu, double x) { return static_cast<double>(std::cos(kTwoPi * phase(std::labs(nu), x))); }
inline double sin_turns(long nu, double x) {
  const double s = static_cast<double>(std::sin(kTwoPi * phase(std::labs(nu), x)));
  return nu < 0 ? -s : s;
}

/// Bound on the Theorem-1-pattern weights not stored in a table of reach d_max:
/// pairs (3j, j, j) and mirrors for j > floor(d_max / 3).
inline double theorem1_pattern_tail(const BVFunctionSpec& f, long d_max) {
  const long m = d_max / 3;
  if (auto deg = f.degree()) {
    double s = 0;
    for (long j = m + 1; 3 * j <= *deg; ++j) s += 2 * f.coefficient_bound(3 * j) * f.coefficient_bound(j);
    return s;
  }
  const double k = f.variation();
  const double scale = 2 * k * k / (3 * std::numbers::pi * std::numbers::pi);
  return m == 0 ? scale * std::numbers::pi * std::numbers::pi / 6 : scale * inverse_square_tail(m);
}

}  // namespace detail

/// Truncated double Fourier series for sigma_f^2(x):
/// ||f||^2 + sum (gamma/2)[(a1 a2 + b1 b2) cos 2 pi nu x + (b1 a2 - a1 b2) sin 2 pi nu x]
/// over stored weights with j1, j2 <= j_max and |nu| <= nu_max.
template <class X>
SigmaValue sigma_sq_series(const BVFunctionSpec& f, const GammaTable& gamma, const X& x, long j_max = kDefaultJMax,
                           std::optional<long> nu_max = std::nullopt) {
  if (!gamma.satisfies_invariants()) throw std::invalid_argument("gamma table violates its invariants");
  SigmaValue out;
  out.j_max = j_max;
  out.nu_max = nu_max.value_or(gamma.max_abs_nu());
  out.path = SigmaPath::Series;

  std::unordered_map<long, FourierPair> coef;
  auto coefficient = [&](long j) -> const FourierPair& {
    auto it = coef.find(j);
    if (it == coef.end()) it = coef.emplace(j, f.fourier(j)).first;
    return it->second;
  };

  long double sum = 0;
  double omitted = 0;
  for (const auto& [key, g] : gamma.entries()) {
    const double w = g.get_d() / 2;
    if (key.j1 > j_max || key.j2 > j_max || std::labs(key.nu) > out.nu_max) {
      omitted += w * 4 * f.coefficient_bound(key.j1) * f.coefficient_bound(key.j2);
      continue;
    }
    const FourierPair& c1 = coefficient(key.j1);
    const FourierPair& c2 = coefficient(key.j2);
    sum += w * ((c1.a * c2.a + c1.b * c2.b) * detail::cos_turns(key.nu, x) +
                (c1.b * c2.a - c1.a * c2.b) * detail::sin_turns(key.nu, x));
  }
  double tail = omitted;
  if (gamma.tail_model() == TailModel::Theorem1Pattern) {
    tail += detail::theorem1_pattern_tail(f, gamma.d_max());
    out.table_truncated = gamma.d_max() < j_max;
  }
  out.value = static_cast<double>(static_cast<long double>(f.l2_norm_sq().get_d()) + sum);
  out.tail_bound = tail;
  return out;
}

/// Length of the intersection of the closed arcs [s1, s1 + len1] and
/// [s2, s2 + len2] on the circle R/Z; lengths in [0, 1].
inline Rational circular_overlap(const Rational& s1, const Rational& len1, const Rational& s2, const Rational& len2) {
  const Rational a = frac(s1), b = frac(s2);
  Rational total = 0;
  for (int shift = -1; shift <= 1; ++shift) {
    const Rational lo = std::max(a, Rational(b + shift));
    const Rational hi = std::min(Rational(a + len1), Rational(b + shift + len2));
    if (hi > lo) total += hi - lo;
  }
  return total;
}

/// Exact sigma^2_{[0,a]}(x) for the Theorem-1 sequence, by the convolution
/// identity: a(1-a) + (1-a){3a}/3 - |[0,1-a] ∩ [x-{3a}, x]|/3.
inline Rational sigma_sq_closed_form_theorem1(const Rational& a, const Rational& x) {
  if (a < 0 || a > 1) throw std::domain_error("sigma closed form needs 0 <= a <= 1");
  if (x < 0 || x > 1) throw std::domain_error("sigma closed form needs 0 <= x <= 1");
  const Rational c = frac(Rational(3 * a));
  const Rational overlap = circular_overlap(Rational(0), Rational(1 - a), Rational(x - c), c);
  return a * (1 - a) + (1 - a) * c / 3 - overlap / 3;
}

/// Exact sigma^2_{[a,b]}(x) for the Theorem-1 weights and any 0 <= b - a < 1:
/// z(1-z) - z^2 + (floor(3z) z + |[a, a+z] ∩ [3a-x, 3a-x+{3z}]|)/3, z = b - a.
inline Rational sigma_sq_interval_theorem1(const Rational& a, const Rational& b, const Rational& x) {
  const Rational z = b - a;
  if (z < 0 || z >= 1) throw std::domain_error("interval needs 0 <= b - a < 1");
  const BigInt turns = floor_of(Rational(3 * z));
  const Rational rest = 3 * z - Rational(turns);
  const Rational overlap = circular_overlap(a, z, Rational(3 * a - x), rest);
  return z * (1 - z) - z * z + (Rational(turns) * z + overlap) / 3;
}

/// Closed-form Lambda* for the Theorem-1 sequence as sqrt(radicand).
struct LambdaClosed {
  Rational radicand;
  double value = 0;
  int branch = 0;
};

inline LambdaClosed lambda_star_theorem1_closed(const Rational& x_in) {
  if (x_in < 0 || x_in > 1) throw std::domain_error("lambda_star needs 0 <= x <= 1");
  const Rational x = x_in > Rational(1, 2) ? Rational(1 - x_in) : x_in;
  LambdaClosed out;
  if (x <= Rational(1, 6)) {
    out.radicand = (-3 * x * x - x + 2) / 6;
    out.branch = 1;
  } else if (x <= Rational(3, 8)) {
    out.radicand = (-24 * x + 25) / 72;
    out.branch = 2;
  } else {
    out.radicand = Rational(2, 9);
    out.branch = 3;
  }
  out.radicand.canonicalize();
  out.value = std::sqrt(out.radicand.get_d());
  return out;
}

/// Sup of sqrt(sigma^2) over a one-parameter family, plus where it is attained.
struct LambdaStarResult {
  double value = 0;
  double value_sq = 0;
  double witness_a = 0;
  std::optional<Rational> exact_sq;
  std::optional<Rational> exact_witness;
};

namespace detail {

inline constexpr double kInvGolden = 0.6180339887498948482;

/// Golden-section search for a maximum of fn on [lo, hi].
template <class Fn>
std::pair<double, double> golden_max(Fn&& fn, double lo, double hi, int iterations) {
  double x1 = hi - kInvGolden * (hi - lo), x2 = lo + kInvGolden * (hi - lo);
  double f1 = fn(x1), f2 = fn(x2);
  for (int i = 0; i < iterations && hi - lo > 1e-15; ++i) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvGolden * (hi - lo);
      f2 = fn(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvGolden * (hi - lo);
      f1 = fn(x1);
    }
  }
  return f1 > f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

}  // namespace detail

/// Grid plus golden-section refinement of every locally maximal cell for a
/// generic sigma^2_{[0,a]}(x) evaluator.
inline LambdaStarResult lambda_star_numeric(const std::function<double(double)>& sigma_sq_of_a, int resolution = 64,
                                            int depth = 60) {
  if (resolution < 64) throw std::invalid_argument("lambda_star_numeric needs resolution >= 64");
  std::vector<double> grid(static_cast<std::size_t>(resolution) + 1);
  for (int i = 0; i <= resolution; ++i) grid[i] = sigma_sq_of_a(static_cast<double>(i) / resolution);
  LambdaStarResult best;
  best.value_sq = -std::numeric_limits<double>::infinity();
  auto consider = [&](double a, double v) {
    if (v > best.value_sq) {
      best.value_sq = v;
      best.witness_a = a;
    }
  };
  for (int i = 0; i <= resolution; ++i) {
    consider(static_cast<double>(i) / resolution, grid[i]);
    const bool left_ok = i == 0 || grid[i] >= grid[i - 1];
    const bool right_ok = i == resolution || grid[i] >= grid[i + 1];
    if (left_ok && right_ok) {
      const double lo = std::max(0, i - 1) / static_cast<double>(resolution);
      const double hi = std::min(resolution, i + 1) / static_cast<double>(resolution);
      auto [a, v] = detail::golden_max(sigma_sq_of_a, lo, hi, depth);
      consider(a, v);
    }
  }
  best.value = std::sqrt(std::max(0.0, best.value_sq));
  return best;
}

/// Every a in [0,1] where the Theorem-1 closed form in a can change its
/// quadratic piece: {3a} wrapping, and arc endpoints meeting 0 or 1-a.
inline std::vector<Rational> theorem1_breakpoints(const Rational& x) {
  std::vector<Rational> pts{Rational(0), Rational(1), Rational(1, 3), Rational(2, 3)};
  for (long i = -3; i <= 4; ++i) {
    for (const Rational& c : {Rational((x + i) / 3), Rational((x + i) / 2), Rational(1 - x + i)})
      if (c >= 0 && c <= 1) pts.push_back(c);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

/// Lambda*(x) for the Theorem-1 sequence from the exact closed-form sigma^2:
/// grid and golden-section search, plus the exact maximum over the analytic
/// breakpoints and the vertex of each concave quadratic piece.
inline LambdaStarResult lambda_star_numeric_theorem1(const Rational& x, int resolution = 64, int depth = 60) {
  LambdaStarResult best = lambda_star_numeric(
      [&x](double a) { return sigma_sq_closed_form_theorem1(Rational(a), x).get_d(); }, resolution, depth);

  const auto pts = theorem1_breakpoints(x);
  std::optional<Rational> top, where;
  auto consider = [&](const Rational& a) {
    Rational v = sigma_sq_closed_form_theorem1(a, x);
    if (!top || v > *top) {
      top = v;
      where = a;
    }
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    consider(pts[i]);
    if (i + 1 == pts.size()) break;
    const Rational& lo = pts[i];
    const Rational& hi = pts[i + 1];
    const Rational width = hi - lo;
    // Quadratic through t = 0, 1/2, 1 on the piece (interior samples avoid
    // the endpoint jumps of {3a}).
    const Rational q1 = lo + width / 4, q2 = lo + width / 2, q3 = lo + 3 * width / 4;
    const Rational f1 = sigma_sq_closed_form_theorem1(q1, x), f2 = sigma_sq_closed_form_theorem1(q2, x),
                   f3 = sigma_sq_closed_form_theorem1(q3, x);
    // In s = (a - q2)/(width/4): f = f2 + s (f3 - f1)/2 + s^2 (f1 - 2 f2 + f3)/2.
    const Rational curv = (f1 - 2 * f2 + f3) / 2;
    const Rational slope = (f3 - f1) / 2;
    if (curv < 0) {
      const Rational s = -slope / (2 * curv);
      Rational a = q2 + s * width / 4;
      if (a > lo && a < hi) consider(a);
    }
  }
  const double exact_v = top->get_d();
  if (exact_v >= best.value_sq) {
    best.value_sq = exact_v;
    best.witness_a = where->get_d();
    best.exact_sq = top;
    best.exact_witness = where;
    best.value = std::sqrt(std::max(0.0, exact_v));
  }
  return best;
}

/// sigma^2_{[a,b]}(x) from a gamma table, specialised to centered indicators
/// so that many intervals can be evaluated at one x cheaply.
class IndicatorSeries {
 public:
  IndicatorSeries(const GammaTable& gamma, double x, long j_max = kDefaultJMax) {
    std::map<long, std::size_t> slot;
    for (const auto& [key, g] : gamma.entries()) {
      if (key.j1 > j_max || key.j2 > j_max) continue;
      const double w = g.get_d() / 2;
      Term t;
      t.i1 = slot.try_emplace(key.j1, slot.size()).first->second;
      t.i2 = slot.try_emplace(key.j2, slot.size()).first->second;
      t.wc = w * detail::cos_turns(key.nu, x);
      t.ws = w * detail::sin_turns(key.nu, x);
      terms_.push_back(t);
    }
    freqs_.resize(slot.size());
    for (const auto& [j, i] : slot) freqs_[i] = j;
    coef_.resize(freqs_.size());
  }

  double sigma_sq(double a, double b) const {
    for (std::size_t i = 0; i < freqs_.size(); ++i) coef_[i] = indicator_fourier(a, b, freqs_[i]);
    return finish(b - a);
  }

  /// Endpoints ma/den and mb/den; phases come from a cached table, so the
  /// result is exact up to one rounding per coefficient.
  double sigma_sq_grid(long ma, long mb, long den) const {
    if (den != table_den_) {
      table_den_ = den;
      cos_.resize(static_cast<std::size_t>(den));
      sin_.resize(static_cast<std::size_t>(den));
      for (long k = 0; k < den; ++k) {
        const long double ang = detail::kTwoPi * static_cast<long double>(k) / static_cast<long double>(den);
        cos_[k] = static_cast<double>(std::cos(ang));
        sin_[k] = static_cast<double>(std::sin(ang));
      }
    }
    for (std::size_t i = 0; i < freqs_.size(); ++i) {
      const long j = freqs_[i];
      const long pa = static_cast<long>((static_cast<__int128>(j) * ma) % den);
      const long pb = static_cast<long>((static_cast<__int128>(j) * mb) % den);
      const double scale = std::numbers::pi * static_cast<double>(j);
      coef_[i] = {(sin_[pb] - sin_[pa]) / scale, (cos_[pa] - cos_[pb]) / scale};
    }
    return finish(static_cast<double>(mb - ma) / static_cast<double>(den));
  }

  std::size_t term_count() const { return terms_.size(); }

 private:
  struct Term {
    std::size_t i1 = 0, i2 = 0;
    double wc = 0, ws = 0;
  };

  double finish(double z) const {
    long double s = static_cast<long double>(z) * (1 - static_cast<long double>(z));
    for (const auto& t : terms_) {
      const FourierPair& c1 = coef_[t.i1];
      const FourierPair& c2 = coef_[t.i2];
      s += t.wc * (c1.a * c2.a + c1.b * c2.b) + t.ws * (c1.b * c2.a - c1.a * c2.b);
    }
    return static_cast<double>(s);
  }

  std::vector<Term> terms_;
  std::vector<long> freqs_;
  mutable std::vector<FourierPair> coef_;
  mutable long table_den_ = 0;
  mutable std::vector<double> cos_, sin_;
};

/// Lambda*(x) from a gamma table via the series path.
inline LambdaStarResult lambda_star_numeric(const GammaTable& gamma, double x, int resolution = 64, int depth = 60,
                                            long j_max = kDefaultJMax) {
  IndicatorSeries series(gamma, x, j_max);
  return lambda_star_numeric([&series](double a) { return series.sigma_sq(0.0, a); }, resolution, depth);
}

struct LambdaExtremalResult {
  double value = 0;
  double value_sq = 0;
  double a = 0;
  double b = 0;
};

/// sup over 0 <= a <= b <= 1 of sigma_{[a,b]}(x): grid on (a, b), then
/// alternating golden-section refinement from the best few cells.
inline LambdaExtremalResult lambda_extremal_numeric(const std::function<double(double, double)>& sigma_sq_ab,
                                                    int grid = 64, int depth = 40, int seeds = 4) {
  if (grid < 8) throw std::invalid_argument("lambda_extremal_numeric needs grid >= 8");
  struct Cell {
    double v;
    int i, k;
  };
  std::vector<Cell> cells;
  for (int i = 0; i <= grid; ++i)
    for (int k = i; k <= grid; ++k) {
      if (k - i == grid) continue;
      cells.push_back({sigma_sq_ab(static_cast<double>(i) / grid, static_cast<double>(k) / grid), i, k});
    }
  std::partial_sort(cells.begin(), cells.begin() + std::min<std::size_t>(seeds, cells.size()), cells.end(),
                    [](const Cell& l, const Cell& r) { return l.v > r.v; });
  LambdaExtremalResult best;
  best.value_sq = cells.front().v;
  best.a = static_cast<double>(cells.front().i) / grid;
  best.b = static_cast<double>(cells.front().k) / grid;
  const double h = 1.0 / grid;
  for (int s = 0; s < std::min<int>(seeds, static_cast<int>(cells.size())); ++s) {
    double a = static_cast<double>(cells[s].i) / grid, b = static_cast<double>(cells[s].k) / grid;
    double v = cells[s].v;
    for (int round = 0; round < 4; ++round) {
      auto [na, va] = detail::golden_max([&](double t) { return sigma_sq_ab(t, b); }, std::max(0.0, a - h),
                                         std::min(b, a + h), depth);
      if (va > v) {
        a = na;
        v = va;
      }
      auto [nb, vb] = detail::golden_max([&](double t) { return sigma_sq_ab(a, t); }, std::max(a, b - h),
                                         std::min(1.0, b + h), depth);
      if (vb > v) {
        b = nb;
        v = vb;
      }
    }
    if (v > best.value_sq) {
      best.value_sq = v;
      best.a = a;
      best.b = b;
    }
  }
  best.value = std::sqrt(std::max(0.0, best.value_sq));
  return best;
}

inline LambdaExtremalResult lambda_extremal_numeric(const GammaTable& gamma, double x, int grid = 64,
                                                    long j_max = kDefaultJMax) {
  IndicatorSeries series(gamma, x, j_max);
  return lambda_extremal_numeric([&series](double a, double b) { return series.sigma_sq(a, b); }, grid);
}

/// Rectangle-rule integral of sigma^2_{[a, a+1/2]}(x) over a in [0, 1/2].
/// For Hadamard tables every cross term integrates to zero, leaving 1/8.
inline double theorem2_average_check(const GammaTable& gamma, double x, long resolution = 4096,
                                     long j_max = kDefaultJMax) {
  if (resolution < 2) throw std::invalid_argument("resolution must be >= 2");
  IndicatorSeries series(gamma, x, j_max);
  const long den = 2 * resolution;
  long double sum = 0;
  for (long m = 0; m < resolution; ++m) sum += series.sigma_sq_grid(m, m + resolution, den);
  return static_cast<double>(sum / static_cast<long double>(den));
}

/// Rectangle-rule mean over x in [0,1) of sigma^2_{[0,1/2]}(x). The grid
/// phases nu * i / resolution are reduced exactly and read from a table.
inline double theorem2_star_mean(const GammaTable& gamma, long resolution = 4096, long j_max = kDefaultJMax) {
  if (resolution < 1) throw std::invalid_argument("resolution must be >= 1");
  struct Term {
    long nu;
    double wc, ws;
  };
  std::vector<Term> terms;
  for (const auto& [key, g] : gamma.entries()) {
    if (key.j1 > j_max || key.j2 > j_max) continue;
    const FourierPair c1 = indicator_fourier(0.0, 0.5, key.j1), c2 = indicator_fourier(0.0, 0.5, key.j2);
    const double w = g.get_d() / 2;
    terms.push_back({key.nu, w * (c1.a * c2.a + c1.b * c2.b), w * (c1.b * c2.a - c1.a * c2.b)});
  }
  std::vector<double> cos_tab(static_cast<std::size_t>(resolution)), sin_tab(cos_tab.size());
  for (long k = 0; k < resolution; ++k) {
    const long double ang = detail::kTwoPi * static_cast<long double>(k) / static_cast<long double>(resolution);
    cos_tab[k] = static_cast<double>(std::cos(ang));
    sin_tab[k] = static_cast<double>(std::sin(ang));
  }
  long double total = 0;
  for (long i = 0; i < resolution; ++i) {
    long double s = 0.25L;
    for (const auto& t : terms) {
      long p = static_cast<long>((static_cast<__int128>(t.nu) * i) % resolution);
      if (p < 0) p += resolution;
      s += t.wc * cos_tab[p] + t.ws * sin_tab[p];
    }
    total += s;
  }
  return static_cast<double>(total / static_cast<long double>(resolution));
}

struct BoundCheck {
  double lhs = 0;
  double rhs = 0;
  std::optional<Rational> rhs_exact;
  bool holds = false;
};

/// sum (gamma/2)(|a1 a2| + |b1 b2| + |b1 a2| + |a1 b2|) against 2 (Var f)^2 q / (3 (q - 1)).
inline BoundCheck gamma_bound_check(const BVFunctionSpec& f, const GammaTable& gamma, const Rational& q) {
  if (q <= 1) throw std::invalid_argument("growth factor q must exceed 1");
  BoundCheck out;
  std::unordered_map<long, FourierPair> coef;
  auto c = [&](long j) {
    auto it = coef.find(j);
    if (it == coef.end()) it = coef.emplace(j, f.fourier(j)).first;
    return it->second;
  };
  long double lhs = 0;
  for (const auto& [key, g] : gamma.entries()) {
    const FourierPair c1 = c(key.j1), c2 = c(key.j2);
    lhs += g.get_d() / 2 *
           (std::abs(c1.a * c2.a) + std::abs(c1.b * c2.b) + std::abs(c1.b * c2.a) + std::abs(c1.a * c2.b));
  }
  out.lhs = static_cast<double>(lhs);
  if (const auto& var = f.exact_variation()) {
    out.rhs_exact = 2 * *var * *var * q / (3 * (q - 1));
    out.rhs_exact->canonicalize();
    out.rhs = out.rhs_exact->get_d();
  } else {
    const double v = f.variation();
    out.rhs = 2 * v * v * q.get_d() / (3 * (q.get_d() - 1));
  }
  out.holds = out.lhs <= out.rhs;
  return out;
}

/// Lambda = Lambda* for n_k = theta^k.
inline double fukuyama_reference(long theta) {
  if (theta < 2) throw std::invalid_argument("fukuyama_reference needs theta >= 2");
  const double t = static_cast<double>(theta);
  if (theta == 2) return std::sqrt(42.0) / 9.0;
  if (theta % 2 == 0) return std::sqrt((t + 1) * t * (t - 2)) / (2 * std::sqrt((t - 1) * (t - 1) * (t - 1)));
  return std::sqrt(t + 1) / (2 * std::sqrt(t - 1));
}

/// Value when no rational power of theta is rational.
inline double fukuyama_reference_irrational() { return 0.5; }

/// sigma_{[0,a]}(x) = sigma_{[0,1-a]}(1-x), compared exactly.
inline bool symmetry_relation_check(const Rational& a, const Rational& x) {
  return sigma_sq_closed_form_theorem1(a, x) == sigma_sq_closed_form_theorem1(Rational(1 - a), Rational(1 - x));
}

struct CurveRow {
  Rational x;
  double lambda_closed = 0;
  double lambda_numeric = 0;
  double witness_a = 0;
  double abs_diff = 0;
};

/// Lambda* on the grid x = i/grid, closed form against the numeric sup.
inline std::vector<CurveRow> lambda_star_curve(long grid, int resolution = 64) {
  if (grid < 1) throw std::invalid_argument("grid must be >= 1");
  std::vector<CurveRow> rows(static_cast<std::size_t>(grid) + 1);
  parallel_for(rows.size(), [&](std::size_t i) {
    CurveRow r;
    r.x = make_rational(static_cast<long>(i), grid);
    r.x.canonicalize();
    r.lambda_closed = lambda_star_theorem1_closed(r.x).value;
    const auto num = lambda_star_numeric_theorem1(r.x, resolution);
    r.lambda_numeric = num.value;
    r.witness_a = num.witness_a;
    r.abs_diff = std::abs(r.lambda_closed - r.lambda_numeric);
    rows[i] = r;
  });
  return rows;
}

}  // namespace lacunary

#endif  // LACUNARY_SIGMA_HPP
