#ifndef LACUNARY_BV_FUNCTION_HPP
#define LACUNARY_BV_FUNCTION_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lacunary/rational.hpp"

namespace lacunary {

/// Coefficients of a_j cos(2 pi j x) + b_j sin(2 pi j x).
struct FourierPair {
  double a = 0;
  double b = 0;
};

namespace detail {

/// {j q} as a long double, with the reduction done exactly.
inline long double phase(long j, const Rational& q) {
  const mpz_srcptr num = q.get_num_mpz_t();
  const mpz_srcptr den = q.get_den_mpz_t();
  if (mpz_fits_slong_p(num) && mpz_fits_slong_p(den)) {
    const __int128 d = mpz_get_si(den);
    __int128 r = (static_cast<__int128>(j) * mpz_get_si(num)) % d;
    if (r < 0) r += d;
    return static_cast<long double>(r) / static_cast<long double>(d);
  }
  Rational t = frac(Rational(q * j));
  return static_cast<long double>(t.get_d());
}

inline long double phase(long j, double q) {
  const long double t = static_cast<long double>(j) * static_cast<long double>(q);
  return t - std::floor(t);
}

inline constexpr long double kTwoPi = 2.0L * std::numbers::pi_v<long double>;

}  // namespace detail

/// Fourier coefficients of the centered periodic indicator of [a, b]:
/// a_j = (sin 2 pi j b - sin 2 pi j a)/(pi j), b_j = (cos 2 pi j a - cos 2 pi j b)/(pi j).
template <class T>
FourierPair indicator_fourier(const T& a, const T& b, long j) {
  if (j < 1) throw std::invalid_argument("frequency must be >= 1");
  const long double pa = detail::kTwoPi * detail::phase(j, a);
  const long double pb = detail::kTwoPi * detail::phase(j, b);
  const long double scale = std::numbers::pi_v<long double> * static_cast<long double>(j);
  return {static_cast<double>((std::sin(pb) - std::sin(pa)) / scale),
          static_cast<double>((std::cos(pa) - std::cos(pb)) / scale)};
}

/// 1-periodic step function. Breakpoints 0 = t_0 < ... < t_m < 1; `open_values[i]`
/// holds on (t_i, t_{i+1}) (with t_{m+1} = 1) and `point_values[i]` at t_i.
class StepFunction {
 public:
  StepFunction(std::vector<Rational> breaks, std::vector<Rational> open_values, std::vector<Rational> point_values)
      : breaks_(std::move(breaks)), open_(std::move(open_values)), point_(std::move(point_values)) {
    if (breaks_.empty() || breaks_.front() != 0) throw std::invalid_argument("step breakpoints must start at 0");
    if (open_.size() != breaks_.size() || point_.size() != breaks_.size())
      throw std::invalid_argument("step value lists must match breakpoints");
    for (std::size_t i = 0; i < breaks_.size(); ++i) {
      if (breaks_[i] < 0 || breaks_[i] >= 1) throw std::invalid_argument("step breakpoints must lie in [0,1)");
      if (i > 0 && breaks_[i] <= breaks_[i - 1]) throw std::invalid_argument("step breakpoints must increase");
    }
  }

  /// Right-continuous pieces: value[i] on [t_i, t_{i+1}).
  static StepFunction from_pieces(std::vector<Rational> breaks, std::vector<Rational> values) {
    std::vector<Rational> points = values;
    return StepFunction(std::move(breaks), std::move(values), std::move(points));
  }

  /// Samples `fn` at every breakpoint and every open-interval midpoint.
  static StepFunction from_evaluator(std::vector<Rational> breaks, const std::function<Rational(const Rational&)>& fn) {
    for (auto& b : breaks) b = frac(b);
    breaks.push_back(0);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    std::vector<Rational> open, point;
    for (std::size_t i = 0; i < breaks.size(); ++i) {
      const Rational hi = i + 1 < breaks.size() ? breaks[i + 1] : Rational(1);
      point.push_back(fn(breaks[i]));
      open.push_back(fn(Rational((breaks[i] + hi) / 2)));
    }
    return StepFunction(std::move(breaks), std::move(open), std::move(point));
  }

  /// Periodized indicator of the closed arc [a, b] minus its length b - a.
  static StepFunction centered_indicator(const Rational& a, const Rational& b) {
    const Rational len = b - a;
    if (len < 0 || len >= 1) throw std::invalid_argument("centered indicator needs 0 <= b - a < 1");
    const Rational start = frac(a);
    auto inside = [start, len](const Rational& x) -> Rational {
      const Rational offset = frac(Rational(x - start));
      return Rational(offset <= len ? 1 : 0) - len;
    };
    return from_evaluator({start, Rational(start + len)}, inside);
  }

  const std::vector<Rational>& breaks() const { return breaks_; }
  const std::vector<Rational>& open_values() const { return open_; }
  const std::vector<Rational>& point_values() const { return point_; }

  Rational operator()(const Rational& x) const {
    const Rational t = frac(x);
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
    const std::size_t i = static_cast<std::size_t>(it - breaks_.begin()) - 1;
    return breaks_[i] == t ? point_[i] : open_[i];
  }

  double operator()(double x) const {
    double t = x - std::floor(x);
    std::size_t i = 0;
    while (i + 1 < breaks_.size() && breaks_[i + 1].get_d() <= t) ++i;
    return breaks_[i].get_d() == t ? point_[i].get_d() : open_[i].get_d();
  }

  Rational mean() const {
    Rational m = 0;
    for (std::size_t i = 0; i < breaks_.size(); ++i) m += open_[i] * (upper(i) - breaks_[i]);
    return m;
  }

  /// Total variation over one period (equivalently on [0,1] with f(1) = f(0)).
  Rational variation() const {
    Rational v = 0;
    for (std::size_t i = 0; i < breaks_.size(); ++i) {
      const Rational& left = i == 0 ? open_.back() : open_[i - 1];
      v += abs(Rational(point_[i] - left)) + abs(Rational(open_[i] - point_[i]));
    }
    return v;
  }

  Rational l2_norm_sq() const {
    Rational s = 0;
    for (std::size_t i = 0; i < breaks_.size(); ++i) s += open_[i] * open_[i] * (upper(i) - breaks_[i]);
    return s;
  }

  StepFunction shifted(const Rational& c) const {
    auto open = open_, point = point_;
    for (auto& v : open) v += c;
    for (auto& v : point) v += c;
    return StepFunction(breaks_, std::move(open), std::move(point));
  }

  StepFunction centered() const { return shifted(Rational(-mean())); }

  /// Exact test of f(s) = f(1 - s) for all s.
  bool symmetric_about_half() const {
    std::vector<Rational> probes;
    for (const auto& b : breaks_) {
      probes.push_back(b);
      probes.push_back(frac(Rational(1 - b)));
    }
    std::sort(probes.begin(), probes.end());
    probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
    for (std::size_t i = 0; i < probes.size(); ++i) {
      const Rational hi = i + 1 < probes.size() ? probes[i + 1] : Rational(1);
      const Rational mid = (probes[i] + hi) / 2;
      for (const Rational& s : {probes[i], mid})
        if ((*this)(s) != (*this)(Rational(1 - s))) return false;
    }
    return true;
  }

  FourierPair fourier(long j) const {
    long double a = 0, b = 0;
    for (std::size_t i = 0; i < breaks_.size(); ++i) {
      const long double lo = detail::kTwoPi * detail::phase(j, breaks_[i]);
      const long double hi = detail::kTwoPi * (i + 1 < breaks_.size() ? detail::phase(j, breaks_[i + 1]) : 0.0L);
      const long double u = static_cast<long double>(open_[i].get_d());
      a += u * (std::sin(hi) - std::sin(lo));
      b += u * (std::cos(lo) - std::cos(hi));
    }
    const long double scale = std::numbers::pi_v<long double> * static_cast<long double>(j);
    return {static_cast<double>(a / scale), static_cast<double>(b / scale)};
  }

 private:
  Rational upper(std::size_t i) const { return i + 1 < breaks_.size() ? breaks_[i + 1] : Rational(1); }

  std::vector<Rational> breaks_;
  std::vector<Rational> open_;
  std::vector<Rational> point_;
};

struct TrigTerm {
  long j = 0;
  Rational a;
  Rational b;
};

/// 1-periodic zero-mean function of bounded variation: a finite trigonometric
/// polynomial, a centered indicator of [a, b], or a centered step function.
class BVFunctionSpec {
 public:
  enum class Form { TrigPoly, CenteredIndicator, CenteredStep };

  static BVFunctionSpec trig_poly(std::vector<TrigTerm> terms) {
    std::sort(terms.begin(), terms.end(), [](const TrigTerm& l, const TrigTerm& r) { return l.j < r.j; });
    std::vector<TrigTerm> merged;
    for (auto& t : terms) {
      if (t.j < 1) throw std::invalid_argument("trig polynomial frequencies must be >= 1");
      if (!merged.empty() && merged.back().j == t.j) {
        merged.back().a += t.a;
        merged.back().b += t.b;
      } else {
        merged.push_back(t);
      }
    }
    std::erase_if(merged, [](const TrigTerm& t) { return t.a == 0 && t.b == 0; });
    if (merged.empty()) throw std::invalid_argument("trig polynomial must be non-zero");
    BVFunctionSpec f(Form::TrigPoly);
    f.terms_ = std::move(merged);
    f.init_trig_variation();
    return f;
  }

  static BVFunctionSpec centered_indicator(const Rational& a, const Rational& b) {
    BVFunctionSpec f(Form::CenteredIndicator);
    f.step_ = StepFunction::centered_indicator(a, b);
    f.lo_ = a;
    f.hi_ = b;
    f.exact_variation_ = Rational(2);
    return f;
  }

  /// Centers `s` to zero mean.
  static BVFunctionSpec centered_step(const StepFunction& s) {
    BVFunctionSpec f(Form::CenteredStep);
    f.step_ = s.centered();
    f.exact_variation_ = f.step_->variation();
    if (*f.exact_variation_ == 0) throw std::invalid_argument("step function must be non-constant");
    return f;
  }

  /// "cos:J", "sin:J", "trig:J:A:B[;J:A:B...]", "indicator:A,B".
  static BVFunctionSpec parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("function spec needs a ':' ('" + text + "')");
    const std::string kind = text.substr(0, colon), rest = text.substr(colon + 1);
    if (kind == "indicator") {
      const auto comma = rest.find(',');
      if (comma == std::string::npos) throw std::invalid_argument("indicator spec is indicator:A,B");
      return centered_indicator(parse_rational(rest.substr(0, comma)), parse_rational(rest.substr(comma + 1)));
    }
    if (kind == "cos") return trig_poly({{std::stol(rest), Rational(1), Rational(0)}});
    if (kind == "sin") return trig_poly({{std::stol(rest), Rational(0), Rational(1)}});
    if (kind == "trig") {
      std::vector<TrigTerm> terms;
      std::stringstream ss(rest);
      std::string item;
      while (std::getline(ss, item, ';')) {
        std::stringstream parts(item);
        std::string j, a, b;
        if (!std::getline(parts, j, ':') || !std::getline(parts, a, ':') || !std::getline(parts, b, ':'))
          throw std::invalid_argument("trig term is J:A:B ('" + item + "')");
        terms.push_back({std::stol(j), parse_rational(a), parse_rational(b)});
      }
      return trig_poly(std::move(terms));
    }
    throw std::invalid_argument("unknown function kind '" + kind + "'");
  }

  Form form() const { return form_; }
  const std::vector<TrigTerm>& trig_terms() const { return terms_; }
  const StepFunction* step() const { return step_ ? &*step_ : nullptr; }

  /// Interval endpoints for the centered-indicator form.
  std::optional<std::pair<Rational, Rational>> interval() const {
    if (form_ != Form::CenteredIndicator) return std::nullopt;
    return std::make_pair(lo_, hi_);
  }

  FourierPair fourier(long j) const {
    switch (form_) {
      case Form::TrigPoly:
        for (const auto& t : terms_)
          if (t.j == j) return {t.a.get_d(), t.b.get_d()};
        return {};
      case Form::CenteredIndicator: return indicator_fourier(lo_, hi_, j);
      case Form::CenteredStep: return step_->fourier(j);
    }
    return {};
  }

  /// Highest frequency with a nonzero coefficient (trig polynomials only).
  std::optional<long> degree() const {
    if (form_ != Form::TrigPoly) return std::nullopt;
    return terms_.back().j;
  }

  double variation() const { return exact_variation_ ? exact_variation_->get_d() : numeric_variation_; }
  const std::optional<Rational>& exact_variation() const { return exact_variation_; }

  /// ||f||^2 over one period.
  Rational l2_norm_sq() const {
    if (form_ == Form::TrigPoly) {
      Rational s = 0;
      for (const auto& t : terms_) s += (t.a * t.a + t.b * t.b) / 2;
      return s;
    }
    return step_->l2_norm_sq();
  }

  /// Upper bound on |a_j| and |b_j|: Var f / (pi j), zero beyond a trig degree.
  double coefficient_bound(long j) const {
    if (auto d = degree(); d && j > *d) return 0;
    return variation() / (std::numbers::pi * static_cast<double>(j));
  }

  double operator()(double x) const {
    if (form_ != Form::TrigPoly) return (*step_)(x);
    long double s = 0;
    for (const auto& t : terms_) {
      const long double ang = detail::kTwoPi * detail::phase(t.j, x);
      s += static_cast<long double>(t.a.get_d()) * std::cos(ang) + static_cast<long double>(t.b.get_d()) * std::sin(ang);
    }
    return static_cast<double>(s);
  }

  double operator()(const Rational& x) const {
    if (form_ != Form::TrigPoly) return (*step_)(x).get_d();
    long double s = 0;
    for (const auto& t : terms_) {
      const long double ang = detail::kTwoPi * detail::phase(t.j, x);
      s += static_cast<long double>(t.a.get_d()) * std::cos(ang) + static_cast<long double>(t.b.get_d()) * std::sin(ang);
    }
    return static_cast<double>(s);
  }

  /// f(1/2 - y) = f(1/2 + y). For trig polynomials the difference is
  /// 2 sum (-1)^j b_j sin(2 pi j y), so the test is b_j = 0 for all j.
  bool symmetric_about_half() const {
    if (form_ == Form::TrigPoly)
      return std::all_of(terms_.begin(), terms_.end(), [](const TrigTerm& t) { return t.b == 0; });
    return step_->symmetric_about_half();
  }

  std::string describe() const {
    std::ostringstream os;
    switch (form_) {
      case Form::TrigPoly:
        os << "trig";
        for (const auto& t : terms_) os << (&t == &terms_.front() ? ":" : ";") << t.j << ':' << t.a << ':' << t.b;
        break;
      case Form::CenteredIndicator: os << "indicator:" << lo_ << ',' << hi_; break;
      case Form::CenteredStep: os << "step(" << step_->breaks().size() << " pieces)"; break;
    }
    return os.str();
  }

 private:
  explicit BVFunctionSpec(Form form) : form_(form) {}

  /// Single harmonic r cos(2 pi j x + phi) has variation 4 j r, exact when r is
  /// rational. Otherwise integrate |f'| between the critical points.
  void init_trig_variation() {
    if (terms_.size() == 1) {
      const Rational r2 = terms_[0].a * terms_[0].a + terms_[0].b * terms_[0].b;
      if (mpz_perfect_square_p(r2.get_num_mpz_t()) && mpz_perfect_square_p(r2.get_den_mpz_t())) {
        BigInt n, d;
        mpz_sqrt(n.get_mpz_t(), r2.get_num_mpz_t());
        mpz_sqrt(d.get_mpz_t(), r2.get_den_mpz_t());
        exact_variation_ = Rational(n, d) * 4 * terms_[0].j;
        exact_variation_->canonicalize();
        return;
      }
    }
    auto derivative = [this](double x) {
      double s = 0;
      for (const auto& t : terms_) {
        const double w = 2 * std::numbers::pi * static_cast<double>(t.j);
        s += w * (-t.a.get_d() * std::sin(w * x) + t.b.get_d() * std::cos(w * x));
      }
      return s;
    };
    const long samples = 256 * terms_.back().j + 1024;
    std::vector<double> crit{0.0};
    double prev = derivative(0.0);
    for (long i = 1; i <= samples; ++i) {
      const double hi = static_cast<double>(i) / static_cast<double>(samples);
      const double cur = derivative(hi);
      if ((prev < 0) != (cur < 0)) {
        double lo = static_cast<double>(i - 1) / static_cast<double>(samples), up = hi;
        for (int it = 0; it < 80; ++it) {
          const double mid = 0.5 * (lo + up);
          if ((derivative(lo) < 0) != (derivative(mid) < 0)) up = mid; else lo = mid;
        }
        crit.push_back(0.5 * (lo + up));
      }
      prev = cur;
    }
    crit.push_back(1.0);
    double v = 0;
    for (std::size_t i = 1; i < crit.size(); ++i) v += std::abs((*this)(crit[i]) - (*this)(crit[i - 1]));
    numeric_variation_ = v;
  }

  Form form_;
  std::vector<TrigTerm> terms_;
  std::optional<StepFunction> step_;
  Rational lo_, hi_;
  std::optional<Rational> exact_variation_;
  double numeric_variation_ = 0;
};

}  // namespace lacunary

#endif  // LACUNARY_BV_FUNCTION_HPP
