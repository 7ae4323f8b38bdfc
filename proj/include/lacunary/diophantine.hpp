#ifndef LACUNARY_DIOPHANTINE_HPP
#define LACUNARY_DIOPHANTINE_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "lacunary/parallel.hpp"
#include "lacunary/rational.hpp"
#include "lacunary/sequence.hpp"

namespace lacunary {

struct GammaKey {
  long j1 = 0;
  long j2 = 0;
  long nu = 0;
  auto operator<=>(const GammaKey&) const = default;
};

/// How the weights behave beyond the stored frequency range.
///  - Complete: every nonzero weight is stored.
///  - Theorem1Pattern: nonzero only at (3j, j, j) and mirrors, for all j,
///    of which those with 3j <= d_max are stored.
enum class TailModel { Complete, Theorem1Pattern };

/// Sparse map (j1, j2, nu) -> gamma >= 0, closed under the mirror
/// (j1, j2, nu) <-> (j2, j1, -nu). Diagonal weights j1 == j2 are always 0.
class GammaTable {
 public:
  explicit GammaTable(long d_max = 0, TailModel tail = TailModel::Complete) : d_max_(d_max), tail_(tail) {}

  /// Stores gamma at (j1, j2, nu) and at its mirror.
  void set(long j1, long j2, long nu, const Rational& gamma) {
    if (j1 < 1 || j2 < 1) throw std::invalid_argument("gamma indices must be positive");
    if (gamma < 0) throw std::invalid_argument("gamma weights must be non-negative");
    if (j1 == j2) {
      if (gamma != 0) throw std::invalid_argument("diagonal gamma weights must vanish");
      return;
    }
    if (gamma == 0) {
      entries_.erase({j1, j2, nu});
      entries_.erase({j2, j1, -nu});
      return;
    }
    entries_[{j1, j2, nu}] = gamma;
    entries_[{j2, j1, -nu}] = gamma;
    d_max_ = std::max({d_max_, j1, j2});
  }

  std::optional<Rational> get(long j1, long j2, long nu) const {
    auto it = entries_.find({j1, j2, nu});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  const std::map<GammaKey, Rational>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  long d_max() const { return d_max_; }
  TailModel tail_model() const { return tail_; }

  long max_abs_nu() const {
    long m = 0;
    for (const auto& [key, g] : entries_) m = std::max(m, std::labs(key.nu));
    return m;
  }

  /// Re-asserts mirror symmetry, zero diagonal and non-negativity.
  bool satisfies_invariants() const {
    for (const auto& [key, g] : entries_) {
      if (g < 0 || key.j1 == key.j2) return false;
      auto mirror = entries_.find({key.j2, key.j1, -key.nu});
      if (mirror == entries_.end() || mirror->second != g) return false;
    }
    return true;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["d_max"] = d_max_;
    j["tail_model"] = tail_ == TailModel::Complete ? "complete" : "theorem1";
    j["entries"] = nlohmann::json::array();
    for (const auto& [key, g] : entries_)
      j["entries"].push_back({{"j1", key.j1}, {"j2", key.j2}, {"nu", key.nu}, {"gamma", g.get_str()}});
    return j;
  }

  static GammaTable from_json(const nlohmann::json& j) {
    TailModel tail = TailModel::Complete;
    if (j.contains("tail_model") && j.at("tail_model").get<std::string>() == "theorem1")
      tail = TailModel::Theorem1Pattern;
    GammaTable t(j.at("d_max").get<long>(), tail);
    for (const auto& e : j.at("entries")) {
      const Rational g = parse_rational(e.at("gamma").get<std::string>());
      const long j1 = e.at("j1").get<long>(), j2 = e.at("j2").get<long>(), nu = e.at("nu").get<long>();
      auto mirror = t.get(j2, j1, -nu);
      if (mirror && *mirror != g)
        throw std::invalid_argument("gamma table violates mirror symmetry at (" + std::to_string(j1) + "," +
                                    std::to_string(j2) + "," + std::to_string(nu) + ")");
      t.set(j1, j2, nu, g);
    }
    if (t.size() != j.at("entries").size())
      throw std::invalid_argument("gamma table JSON must list every mirror entry exactly once");
    return t;
  }

 private:
  std::map<GammaKey, Rational> entries_;
  long d_max_;
  TailModel tail_;
};

/// gamma_{3j,j,j} = gamma_{j,3j,-j} = 1/2 for all 3j <= d_max.
inline GammaTable gamma_table_theorem1(long d_max) {
  if (d_max < 1) throw std::invalid_argument("d_max must be >= 1");
  GammaTable t(d_max, TailModel::Theorem1Pattern);
  for (long j = 1; 3 * j <= d_max; ++j) t.set(3 * j, j, j, Rational(1, 2));
  return t;
}

inline constexpr std::size_t kMaxCountTerms = 10'000;
inline constexpr std::size_t kMaxTermBits = std::size_t{1} << 30;

/// Terms n_1..n_N for counting, refusing inputs whose total bit size would
/// not fit comfortably in memory.
inline std::vector<BigInt> counting_terms(const SequenceSpec& seq, std::size_t n) {
  if (n > kMaxCountTerms)
    throw std::length_error("counting limited to N <= " + std::to_string(kMaxCountTerms));
  std::vector<BigInt> terms;
  terms.reserve(n);
  std::size_t bits = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    if (seq.family() == Family::Theorem1) {
      // 3^{k^2} has about 1.585 k^2 bits; check before materializing.
      const std::size_t estimate = static_cast<std::size_t>(1.585 * static_cast<double>(k * k)) + 2;
      if (bits + estimate > kMaxTermBits) throw std::length_error("term bit budget exceeded at k=" + std::to_string(k));
    }
    terms.push_back(seq.term(k));
    bits += mpz_sizeinbase(terms.back().get_mpz_t(), 2);
    if (bits > kMaxTermBits) throw std::length_error("term bit budget exceeded at k=" + std::to_string(k));
  }
  return terms;
}

struct SolutionPair {
  std::size_t k = 0;
  std::size_t l = 0;
};

/// All (k, l) with j1 n_k - j2 n_l = nu and (j1, k) != (j2, l), indices
/// 1-based. `terms` must be strictly increasing.
inline std::vector<SolutionPair> solution_pairs(std::span<const BigInt> terms, long j1, long j2, long nu) {
  if (j1 < 1 || j2 < 1) throw std::invalid_argument("j1, j2 must be positive");
  std::vector<SolutionPair> out;
  BigInt rhs, q, r;
  const BigInt div(j2);
  for (std::size_t k = 0; k < terms.size(); ++k) {
    rhs = terms[k] * j1 - nu;
    if (rhs <= 0) continue;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rhs.get_mpz_t(), div.get_mpz_t());
    if (r != 0) continue;
    auto it = std::lower_bound(terms.begin(), terms.end(), q);
    if (it == terms.end() || *it != q) continue;
    const std::size_t l = static_cast<std::size_t>(it - terms.begin());
    if (j1 == j2 && l == k) continue;
    out.push_back({k + 1, l + 1});
  }
  return out;
}

inline std::uint64_t count_solutions(std::span<const BigInt> terms, long j1, long j2, long nu) {
  return solution_pairs(terms, j1, j2, nu).size();
}

/// S(j1, j2, nu, N).
inline std::uint64_t count_solutions(const SequenceSpec& seq, long j1, long j2, long nu, std::size_t n) {
  const auto terms = counting_terms(seq, n);
  return count_solutions(terms, j1, j2, nu);
}

/// S restricted to max(k, l) <= n, from a precomputed pair list.
inline std::uint64_t count_up_to(std::span<const SolutionPair> pairs, std::size_t n) {
  return static_cast<std::uint64_t>(
      std::count_if(pairs.begin(), pairs.end(), [n](const SolutionPair& p) { return p.k <= n && p.l <= n; }));
}

inline bool symmetry_check(const SequenceSpec& seq, long j1, long j2, long nu, std::size_t n) {
  const auto terms = counting_terms(seq, n);
  return count_solutions(terms, j1, j2, nu) == count_solutions(terms, j2, j1, -nu);
}

struct LadderPoint {
  std::size_t n = 0;
  std::uint64_t count = 0;
  Rational ratio;
};

/// Empirical S(j1,j2,nu,N)/N along a ladder of N. The fitted limit is the
/// slope of S between the last two rungs, which cancels a bounded offset.
struct ConvergenceReport {
  long j1 = 0, j2 = 0, nu = 0;
  std::vector<LadderPoint> series;
  Rational last_ratio;
  Rational fitted_limit;
  std::vector<double> deviations;
  double max_deviation = 0;
  bool monotone = true;
  bool cauchy = true;
};

inline ConvergenceReport convergence_report(long j1, long j2, long nu, std::span<const SolutionPair> pairs,
                                            std::span<const std::size_t> ladder) {
  ConvergenceReport rep;
  rep.j1 = j1;
  rep.j2 = j2;
  rep.nu = nu;
  for (std::size_t n : ladder) {
    const std::uint64_t s = count_up_to(pairs, n);
    Rational ratio(static_cast<unsigned long>(s), static_cast<unsigned long>(n));
    ratio.canonicalize();
    rep.series.push_back({n, s, ratio});
  }
  rep.last_ratio = rep.series.back().ratio;
  if (rep.series.size() >= 2) {
    const auto& a = rep.series[rep.series.size() - 2];
    const auto& b = rep.series.back();
    rep.fitted_limit = Rational(static_cast<long>(b.count) - static_cast<long>(a.count),
                                static_cast<long>(b.n) - static_cast<long>(a.n));
    rep.fitted_limit.canonicalize();
    if (rep.fitted_limit < 0) rep.fitted_limit = 0;
  } else {
    rep.fitted_limit = rep.last_ratio;
  }
  bool up = true, down = true;
  double prev_step = -1;
  for (std::size_t i = 0; i < rep.series.size(); ++i) {
    const double dev = std::abs(rep.series[i].ratio.get_d() - rep.fitted_limit.get_d());
    rep.deviations.push_back(dev);
    rep.max_deviation = std::max(rep.max_deviation, dev);
    if (i > 0) {
      if (rep.series[i].ratio < rep.series[i - 1].ratio) up = false;
      if (rep.series[i].ratio > rep.series[i - 1].ratio) down = false;
      const double step = std::abs(Rational(rep.series[i].ratio - rep.series[i - 1].ratio).get_d());
      if (prev_step >= 0 && step > prev_step) rep.cauchy = false;
      prev_step = step;
    }
  }
  rep.monotone = up || down;
  return rep;
}

inline ConvergenceReport estimate_gamma(const SequenceSpec& seq, long j1, long j2, long nu,
                                        std::span<const std::size_t> ladder) {
  if (ladder.empty()) throw std::invalid_argument("ladder must be non-empty");
  for (std::size_t i = 1; i < ladder.size(); ++i)
    if (ladder[i] <= ladder[i - 1]) throw std::invalid_argument("ladder must be strictly increasing");
  const auto terms = counting_terms(seq, ladder.back());
  const auto pairs = solution_pairs(terms, j1, j2, nu);
  return convergence_report(j1, j2, nu, pairs, ladder);
}

struct NearSolution {
  std::size_t k = 0;
  std::size_t l = 0;
  long nu = 0;
};

/// Every (k, l, nu) with |j1 n_k - j2 n_l| = |nu| <= nu_max, excluding (j1,k) == (j2,l).
inline std::vector<NearSolution> near_solutions(std::span<const BigInt> terms, long j1, long j2, long nu_max) {
  std::vector<NearSolution> out;
  BigInt lo, diff;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const BigInt target = terms[k] * j1;
    lo = target - nu_max;
    mpz_cdiv_q_ui(lo.get_mpz_t(), lo.get_mpz_t(), static_cast<unsigned long>(j2));
    auto it = std::lower_bound(terms.begin(), terms.end(), lo);
    for (; it != terms.end(); ++it) {
      diff = target - *it * j2;
      if (diff < -nu_max) break;
      const std::size_t l = static_cast<std::size_t>(it - terms.begin());
      if (j1 == j2 && l == k) continue;
      out.push_back({k + 1, l + 1, diff.get_si()});
    }
  }
  return out;
}

/// Estimated table over 1 <= j1 != j2 <= d_max, |nu| <= nu_max, using the
/// ladder slope of each count. Diagonal weights are dropped (they vanish
/// for Hadamard sequences).
inline GammaTable estimate_gamma_table(const SequenceSpec& seq, long d_max, long nu_max,
                                       std::span<const std::size_t> ladder) {
  if (d_max < 1) throw std::invalid_argument("d_max must be >= 1");
  if (ladder.empty()) throw std::invalid_argument("ladder must be non-empty");
  const auto terms = counting_terms(seq, ladder.back());
  std::vector<std::map<GammaKey, Rational>> rows(static_cast<std::size_t>(d_max));
  parallel_for(static_cast<std::size_t>(d_max), [&](std::size_t row) {
    const long j1 = static_cast<long>(row) + 1;
    for (long j2 = j1 + 1; j2 <= d_max; ++j2) {
      std::map<long, std::vector<SolutionPair>> by_nu;
      for (const auto& s : near_solutions(terms, j1, j2, nu_max)) by_nu[s.nu].push_back({s.k, s.l});
      for (const auto& [nu, pairs] : by_nu) {
        const auto rep = convergence_report(j1, j2, nu, pairs, ladder);
        if (rep.fitted_limit > 0) rows[row][{j1, j2, nu}] = rep.fitted_limit;
      }
    }
  });
  GammaTable table(d_max, TailModel::Complete);
  for (const auto& row : rows)
    for (const auto& [key, g] : row) table.set(key.j1, key.j2, key.nu, g);
  return table;
}

}  // namespace lacunary

#endif  // LACUNARY_DIOPHANTINE_HPP
