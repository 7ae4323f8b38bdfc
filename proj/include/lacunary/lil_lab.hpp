#ifndef LACUNARY_LIL_LAB_HPP
#define LACUNARY_LIL_LAB_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lacunary/bv_function.hpp"
#include "lacunary/discrepancy.hpp"
#include "lacunary/parallel.hpp"
#include "lacunary/rational.hpp"
#include "lacunary/rng.hpp"
#include "lacunary/sequence.hpp"

namespace lacunary {

enum class StatisticKind { StarDisc, ExtremalDisc, FunctionSum };

inline std::string to_string(StatisticKind k) {
  switch (k) {
    case StatisticKind::StarDisc: return "star";
    case StatisticKind::ExtremalDisc: return "extremal";
    case StatisticKind::FunctionSum: return "function";
  }
  return "?";
}

struct Checkpoint {
  std::size_t n = 0;
  double raw = 0;
  double normalized = 0;
  double running_max = 0;
};

struct TrajectoryRecord {
  std::vector<Checkpoint> checkpoints;
  std::uint64_t seed = 0;
  UnitRational x;
  StatisticKind kind = StatisticKind::StarDisc;
  std::optional<BVFunctionSpec> function;
};

inline constexpr std::size_t kMaxTrajectoryLength = 10'000'000;

/// Powers of two from 64 up to n_max, with n_max appended when it is not one.
inline std::vector<std::size_t> default_ladder(std::size_t n_max) {
  std::vector<std::size_t> ladder;
  for (std::size_t n = 64; n <= n_max; n *= 2) ladder.push_back(n);
  if (ladder.empty() || ladder.back() != n_max) ladder.push_back(n_max);
  return ladder;
}

namespace detail {

/// {n_k x} for k = 1, 2, ... as doubles, each rounded once from the exact
/// residue. Uses 128-bit arithmetic when the denominator fits in 64 bits.
class FracStream {
 public:
  FracStream(const SequenceSpec& seq, const UnitRational& x) : seq_(seq), stream_(seq, x.den()), x_(x) {
    const BigInt den = x.den();
    fast_ = mpz_fits_ulong_p(den.get_mpz_t()) && sizeof(unsigned long) == 8 &&
            (seq.family() == Family::Geometric || seq.family() == Family::PowersMinusOne);
    if (fast_) {
      den_ = den.get_ui();
      num_ = BigInt(x.num()).get_ui();
      base_ = seq.base() % den_;
    }
  }

  double next() {
    if (fast_) {
      power_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(power_) * base_) % den_);
      std::uint64_t r = power_;
      if (seq_.family() == Family::PowersMinusOne) r = r == 0 ? den_ - 1 : r - 1;
      const auto p = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * num_) % den_);
      return static_cast<double>(static_cast<long double>(p) / static_cast<long double>(den_));
    }
    BigInt r = stream_.next() * x_.num();
    const BigInt den = x_.den();
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), den.get_mpz_t());
    return Rational(r, den).get_d();
  }

 private:
  SequenceSpec seq_;
  TermModStream stream_;
  UnitRational x_;
  bool fast_ = false;
  std::uint64_t den_ = 1, num_ = 0, base_ = 0, power_ = 1;
};

}  // namespace detail

/// Streams {n_k x} and records the LIL-normalized statistic at each checkpoint.
/// Discrepancies are recomputed from a sorted copy at checkpoints only.
inline TrajectoryRecord trajectory(const SequenceSpec& seq, const UnitRational& x, StatisticKind kind,
                                   std::size_t n_max, std::vector<std::size_t> ladder = {},
                                   std::optional<BVFunctionSpec> f = std::nullopt, std::uint64_t seed = 0) {
  if (n_max > kMaxTrajectoryLength)
    throw std::length_error("trajectory length above " + std::to_string(kMaxTrajectoryLength));
  if (kind == StatisticKind::FunctionSum && !f) throw std::invalid_argument("function statistic needs f");
  if (ladder.empty()) ladder = default_ladder(n_max);
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    if (ladder[i] < 3 || ladder[i] > n_max) throw std::invalid_argument("checkpoints must lie in [3, n_max]");
    if (i > 0 && ladder[i] <= ladder[i - 1]) throw std::invalid_argument("checkpoints must increase");
  }
  if (seq.length() && *seq.length() < n_max) throw std::out_of_range("explicit sequence shorter than n_max");

  TrajectoryRecord rec;
  rec.seed = seed;
  rec.x = x;
  rec.kind = kind;
  rec.function = f;

  detail::FracStream points(seq, x);
  std::vector<double> pts;
  if (kind != StatisticKind::FunctionSum) pts.reserve(n_max);
  long double sum = 0;
  double run = -1;
  std::size_t n = 0;
  for (std::size_t target : ladder) {
    for (; n < target; ++n) {
      const double p = points.next();
      if (kind == StatisticKind::FunctionSum)
        sum += (*f)(p);
      else
        pts.push_back(p);
    }
    Checkpoint c;
    c.n = n;
    if (kind == StatisticKind::FunctionSum) {
      c.raw = static_cast<double>(sum);
      c.normalized = lil_normalize(static_cast<long long>(n), std::abs(c.raw) / static_cast<double>(n));
    } else {
      const FloatPointSet ps(pts);
      const auto kd = kind == StatisticKind::StarDisc ? DiscrepancyKind::Star : DiscrepancyKind::Extremal;
      c.raw = discrepancy(ps, kd).value;
      c.normalized = lil_normalize(static_cast<long long>(n), c.raw);
    }
    run = std::max(run, c.normalized);
    c.running_max = run;
    rec.checkpoints.push_back(c);
  }
  return rec;
}

/// Independent trajectories for `samples` random x drawn from the seed;
/// sample i uses stream i of the generator.
inline std::vector<TrajectoryRecord> simulate(const SequenceSpec& seq, StatisticKind kind, std::size_t n_max,
                                              std::size_t samples, std::uint64_t seed,
                                              const std::optional<BVFunctionSpec>& f = std::nullopt,
                                              const BigInt& den = large_prime_denominator()) {
  std::vector<UnitRational> xs;
  const CounterRng root(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    CounterRng r = root.split(i);
    xs.push_back(random_unit_rational(r, den));
  }
  std::vector<TrajectoryRecord> out(samples);
  parallel_for(samples, [&](std::size_t i) { out[i] = trajectory(seq, xs[i], kind, n_max, {}, f, seed); });
  return out;
}

/// Length of the intersection of two arcs of length z at circular offset t.
inline Rational arc_autocorrelation(const Rational& z, const Rational& t) {
  const Rational u = frac(t);
  const Rational d = std::min(u, Rational(1 - u));
  Rational k = 0;
  if (z > d) k += z - d;
  if (z > 1 - d) k += z - (1 - d);
  return k;
}

struct CrossTerm {
  long m = 0;
  long n = 0;
  Rational value;
};

struct Theorem4Result {
  Rational total;
  Rational diagonal;
  std::vector<CrossTerm> cross;
};

inline constexpr std::size_t kTheorem4MaxTerms = 8;
inline constexpr long kTheorem4MaxValue = 64;

namespace detail {

inline void check_theorem4_input(const std::vector<long>& ns, const Rational& z) {
  if (z <= 0 || z >= 1) throw std::domain_error("z must lie in (0,1)");
  if (ns.empty()) throw std::invalid_argument("n_list must be non-empty");
  if (ns.size() > kTheorem4MaxTerms) throw std::length_error("n_list limited to 8 terms");
  std::set<long> seen;
  for (long n : ns) {
    if (n < 1) throw std::invalid_argument("n_list entries must be positive");
    if (n > kTheorem4MaxValue) throw std::length_error("n_list entries limited to 64");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate entry in n_list");
  }
}

}  // namespace detail

/// int_0^1 [K_z({k x}) - z^2] dx for k != 0, integrating the piecewise-linear
/// integrand exactly between its breakpoints (i + c)/|k|, c in {0, z, 1-z}.
inline Rational theorem4_cross_term(long k, const Rational& z) {
  if (k == 0) throw std::invalid_argument("cross term needs distinct frequencies");
  const long m = std::labs(k);
  std::vector<Rational> cuts{Rational(0), z, Rational(1 - z), Rational(1)};
  std::sort(cuts.begin(), cuts.end());
  Rational integral = 0;
  for (long i = 0; i < m; ++i) {
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
      const Rational x0 = (i + cuts[c]) / m, x1 = (i + cuts[c + 1]) / m;
      if (x1 <= x0) continue;
      // {k x} on this piece runs linearly from cuts[c] to cuts[c+1] (or the
      // mirror image for k < 0, where K_z is unchanged).
      const Rational y0 = arc_autocorrelation(z, cuts[c]);
      const Rational y1 = arc_autocorrelation(z, cuts[c + 1]);
      integral += (x1 - x0) * (y0 + y1) / 2;
    }
  }
  Rational out = integral - z * z;
  out.canonicalize();
  return out;
}

/// int_0^1 int_0^1 (sum_k I_{[a,a+z]}(n_k x))^2 dx da, assembled exactly.
inline Theorem4Result theorem4_exact(const std::vector<long>& ns, const Rational& z) {
  detail::check_theorem4_input(ns, z);
  Theorem4Result r;
  r.diagonal = z * (1 - z) * static_cast<long>(ns.size());
  r.total = r.diagonal;
  for (long m : ns)
    for (long n : ns) {
      if (m == n) continue;
      CrossTerm c{m, n, theorem4_cross_term(m - n, z)};
      r.total += c.value;
      r.cross.push_back(std::move(c));
    }
  r.total.canonicalize();
  r.diagonal.canonicalize();
  return r;
}

/// int_0^1 (sum_k I_{[a,a+z]}(n_k x))^2 dx for one fixed a. The integrand is
/// constant between the points where some n_k x meets a or a + z mod 1.
inline Rational theorem4_pointwise(const std::vector<long>& ns, const Rational& z, const Rational& a) {
  detail::check_theorem4_input(ns, z);
  std::vector<Rational> cuts{Rational(0), Rational(1)};
  for (long n : ns)
    for (const Rational& c : {frac(a), frac(Rational(a + z))})
      for (long i = 0; i <= n; ++i) {
        Rational x = (c + i) / n;
        if (x >= 0 && x <= 1) cuts.push_back(x);
      }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  Rational total = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rational mid = (cuts[i] + cuts[i + 1]) / 2;
    Rational s = 0;
    for (long n : ns) s += (frac(Rational(n * mid - a)) <= z ? Rational(1) : Rational(0)) - z;
    total += s * s * (cuts[i + 1] - cuts[i]);
  }
  total.canonicalize();
  return total;
}

template <class T>
struct KoksmaResult {
  T lhs{};
  T rhs{};
  bool holds = false;
  /// (Var f / 2) D*(2 fold(ps)); symmetric check only.
  std::optional<T> intermediate;
};

/// {x, 1 - x} folded into [0, 1/2].
template <class T>
PointSet<T> fold_points(const PointSet<T>& ps) {
  std::vector<T> out;
  out.reserve(ps.size());
  const T half = T(1) / T(2);
  for (const T& x : ps.points()) out.push_back(x <= half ? x : T(T(1) - x));
  return PointSet<T>(std::move(out));
}

/// |int f - (1/N) sum f(x_k)| against Var f * D_N*, exactly.
inline KoksmaResult<Rational> koksma_check(const StepFunction& f, const ExactPointSet& ps) {
  Rational avg = 0;
  for (const Rational& x : ps.points()) avg += f(x);
  avg /= static_cast<long>(ps.size());
  KoksmaResult<Rational> r;
  r.lhs = abs(Rational(f.mean() - avg));
  r.rhs = f.variation() * star_discrepancy(ps).value;
  r.holds = r.lhs <= r.rhs;
  return r;
}

/// Float version for trig polynomials and indicators. Mean is taken as zero
/// (every BVFunctionSpec is centered); rounding slack 1e-12.
inline KoksmaResult<double> koksma_check(const BVFunctionSpec& f, const FloatPointSet& ps) {
  long double avg = 0;
  for (double x : ps.points()) avg += f(x);
  avg /= static_cast<long double>(ps.size());
  KoksmaResult<double> r;
  r.lhs = static_cast<double>(std::abs(avg));
  r.rhs = f.variation() * star_discrepancy(ps).value;
  r.holds = r.lhs <= r.rhs + 1e-12;
  return r;
}

/// Same as koksma_check with rhs (Var f / 2) D_N for f(1/2 - y) = f(1/2 + y).
/// The intermediate bound through the folded points is reported as well.
inline KoksmaResult<Rational> symmetric_koksma_check(const StepFunction& f, const ExactPointSet& ps) {
  if (!f.symmetric_about_half()) throw std::invalid_argument("f is not symmetric about 1/2");
  KoksmaResult<Rational> r = koksma_check(f, ps);
  const Rational half_var = f.variation() / 2;
  std::vector<Rational> doubled;
  const auto folded = fold_points(ps);
  for (const Rational& x : folded.points()) doubled.push_back(2 * x);
  r.intermediate = half_var * star_discrepancy(ExactPointSet(std::move(doubled))).value;
  r.rhs = half_var * extremal_discrepancy(ps).value;
  r.holds = r.lhs <= *r.intermediate && *r.intermediate <= r.rhs;
  return r;
}

inline KoksmaResult<double> symmetric_koksma_check(const BVFunctionSpec& f, const FloatPointSet& ps) {
  if (!f.symmetric_about_half()) throw std::invalid_argument("f is not symmetric about 1/2");
  KoksmaResult<double> r = koksma_check(f, ps);
  const double half_var = f.variation() / 2;
  std::vector<double> doubled;
  const auto folded = fold_points(ps);
  for (double x : folded.points()) doubled.push_back(2 * x);
  r.intermediate = half_var * star_discrepancy(FloatPointSet(std::move(doubled))).value;
  r.rhs = half_var * extremal_discrepancy(ps).value;
  r.holds = r.lhs <= *r.intermediate + 1e-12 && *r.intermediate <= r.rhs + 1e-12;
  return r;
}

}  // namespace lacunary

#endif  // LACUNARY_LIL_LAB_HPP
