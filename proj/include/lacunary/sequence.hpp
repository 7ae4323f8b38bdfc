#ifndef LACUNARY_SEQUENCE_HPP
#define LACUNARY_SEQUENCE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lacunary/rational.hpp"
#include "lacunary/rng.hpp"

namespace lacunary {

enum class Family { Theorem1, Geometric, PowersMinusOne, Explicit };

/// Default denominator for random sample points.
inline BigInt default_denominator() { return two_pow(64); }

/// Largest prime below 2^64. Small bases (2, 3, 4) have multiplicative order
/// above 1e12 modulo this prime, so n_k mod den never collapses to 0.
inline BigInt large_prime_denominator() { return BigInt("18446744073709551557", 10); }

inline constexpr std::size_t kMaxExplicitTerms = 1'000'000;

/// A strictly increasing integer sequence (n_k)_{k>=1}.
class SequenceSpec {
 public:
  /// n_k = 3^{k^2} for odd k, 3^{(k-1)^2+1} - 1 for even k.
  static SequenceSpec theorem1() { return SequenceSpec(Family::Theorem1, 3, {}); }

  static SequenceSpec geometric(unsigned long base) {
    require_base(base);
    return SequenceSpec(Family::Geometric, base, {});
  }

  static SequenceSpec powers_minus_one(unsigned long base) {
    require_base(base);
    return SequenceSpec(Family::PowersMinusOne, base, {});
  }

  static SequenceSpec explicit_list(std::vector<BigInt> terms) {
    if (terms.empty()) throw std::invalid_argument("explicit sequence must be non-empty");
    if (terms.size() > kMaxExplicitTerms)
      throw std::length_error("explicit sequence exceeds " + std::to_string(kMaxExplicitTerms) + " terms");
    if (terms.front() <= 0) throw std::invalid_argument("explicit sequence terms must be positive");
    for (std::size_t i = 1; i < terms.size(); ++i)
      if (terms[i] <= terms[i - 1]) throw std::invalid_argument("explicit sequence must be strictly increasing");
    return SequenceSpec(Family::Explicit, 0, std::move(terms));
  }

  /// Parses the CLI family names: theorem1, geometric, powers-minus-one.
  static SequenceSpec from_name(const std::string& name, unsigned long base) {
    if (name == "theorem1") return theorem1();
    if (name == "geometric") return geometric(base);
    if (name == "powers-minus-one" || name == "pm1") return powers_minus_one(base);
    throw std::invalid_argument("unknown sequence family '" + name + "'");
  }

  Family family() const { return family_; }
  unsigned long base() const { return base_; }

  std::optional<std::size_t> length() const {
    if (family_ == Family::Explicit) return explicit_.size();
    return std::nullopt;
  }

  std::string name() const {
    switch (family_) {
      case Family::Theorem1: return "theorem1";
      case Family::Geometric: return "geometric(" + std::to_string(base_) + ")";
      case Family::PowersMinusOne: return "powers-minus-one(" + std::to_string(base_) + ")";
      case Family::Explicit: return "explicit(" + std::to_string(explicit_.size()) + ")";
    }
    return "?";
  }

  BigInt term(std::size_t k) const {
    check_index(k);
    switch (family_) {
      case Family::Theorem1: {
        const unsigned long e = k % 2 == 1 ? k * k : (k - 1) * (k - 1) + 1;
        BigInt t = pow_ui(3, e);
        if (k % 2 == 0) t -= 1;
        return t;
      }
      case Family::Geometric: return pow_ui(base_, k);
      case Family::PowersMinusOne: return pow_ui(base_, k) - 1;
      case Family::Explicit: return explicit_[k - 1];
    }
    return 0;
  }

  /// n_k mod m in [0, m) without materializing n_k for the closed-form families.
  BigInt term_mod(std::size_t k, const BigInt& m) const {
    check_index(k);
    BigInt r;
    switch (family_) {
      case Family::Theorem1: {
        const unsigned long e = k % 2 == 1 ? k * k : (k - 1) * (k - 1);
        powm(r, 3, e, m);
        if (k % 2 == 0) {
          r = 3 * r - 1;
          mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
        }
        return r;
      }
      case Family::Geometric:
        powm(r, base_, k, m);
        return r;
      case Family::PowersMinusOne:
        powm(r, base_, k, m);
        r -= 1;
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
        return r;
      case Family::Explicit:
        mpz_mod(r.get_mpz_t(), explicit_[k - 1].get_mpz_t(), m.get_mpz_t());
        return r;
    }
    return r;
  }

  std::vector<BigInt> terms(std::size_t count) const {
    std::vector<BigInt> out;
    out.reserve(count);
    for (std::size_t k = 1; k <= count; ++k) out.push_back(term(k));
    return out;
  }

 private:
  SequenceSpec(Family f, unsigned long base, std::vector<BigInt> terms)
      : family_(f), base_(base), explicit_(std::move(terms)) {}

  static void require_base(unsigned long base) {
    if (base < 2) throw std::invalid_argument("sequence base must be >= 2");
  }

  static void powm(BigInt& out, unsigned long base, unsigned long exp, const BigInt& m) {
    const BigInt b(base);
    mpz_powm_ui(out.get_mpz_t(), b.get_mpz_t(), exp, m.get_mpz_t());
  }

  void check_index(std::size_t k) const {
    if (k < 1) throw std::out_of_range("sequence index must be >= 1");
    if (family_ == Family::Explicit && k > explicit_.size())
      throw std::out_of_range("index " + std::to_string(k) + " beyond explicit list of " +
                              std::to_string(explicit_.size()) + " terms");
  }

  Family family_;
  unsigned long base_;
  std::vector<BigInt> explicit_;
};

/// {n_k x}, computed as ((n_k mod den) * num mod den) / den.
inline UnitRational frac_part(const SequenceSpec& seq, std::size_t k, const UnitRational& x) {
  const BigInt den = x.den();
  BigInt r = seq.term_mod(k, den) * x.num();
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), den.get_mpz_t());
  return UnitRational(r, den);
}

/// min_{1<=k<K} n_{k+1}/n_k, exact.
inline Rational gap_ratio_lower_bound(const SequenceSpec& seq, std::size_t K) {
  if (K < 2) throw std::invalid_argument("gap_ratio_lower_bound needs K >= 2");
  BigInt prev = seq.term(1);
  std::optional<Rational> best;
  for (std::size_t k = 1; k < K; ++k) {
    BigInt cur = seq.term(k + 1);
    Rational ratio(cur, prev);
    ratio.canonicalize();
    if (!best || ratio < *best) best = ratio;
    prev = std::move(cur);
  }
  return *best;
}

/// Streams n_1 mod m, n_2 mod m, ... with O(1) big-integer work per step for
/// the geometric families.
class TermModStream {
 public:
  TermModStream(SequenceSpec seq, BigInt modulus) : seq_(std::move(seq)), m_(std::move(modulus)), power_(1) {}

  BigInt next() {
    ++k_;
    switch (seq_.family()) {
      case Family::Geometric:
      case Family::PowersMinusOne: {
        power_ *= seq_.base();
        mpz_mod(power_.get_mpz_t(), power_.get_mpz_t(), m_.get_mpz_t());
        if (seq_.family() == Family::Geometric) return power_;
        BigInt r = power_ - 1;
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m_.get_mpz_t());
        return r;
      }
      default: return seq_.term_mod(k_, m_);
    }
  }

  std::size_t index() const { return k_; }

 private:
  SequenceSpec seq_;
  BigInt m_;
  BigInt power_;
  std::size_t k_ = 0;
};

/// Uniform numerator in [0, den) from the counter RNG.
inline UnitRational random_unit_rational(CounterRng& rng, const BigInt& den) {
  if (den < 1) throw std::invalid_argument("denominator must be >= 1");
  const std::size_t words = mpz_sizeinbase(den.get_mpz_t(), 2) / 64 + 2;
  BigInt acc = 0;
  for (std::size_t i = 0; i < words; ++i) {
    acc <<= 64;
    acc += BigInt(std::to_string(rng.next()), 10);
  }
  mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), den.get_mpz_t());
  return UnitRational(acc, den);
}

}  // namespace lacunary

#endif  // LACUNARY_SEQUENCE_HPP
