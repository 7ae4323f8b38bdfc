// lacunary: command-line front end for the lacunary sequence toolkit.
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lacunary/lacunary.hpp"

using namespace lacunary;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Manifest {
  std::string subcommand;
  std::string args;
  std::string seed = "none";
};

/// Sink for one run: a file from --out or stdout, with the manifest header.
class Output {
 public:
  Output(const std::string& path, const Manifest& m) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot open output file '" + path + "'");
    }
    out() << "# lacunary " << kVersion << "\n# subcommand: " << m.subcommand << "\n# args: " << m.args
          << "\n# seed: " << m.seed << "\n";
  }
  std::ostream& out() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<std::size_t> parse_ladder(const std::string& s) {
  std::vector<std::size_t> out;
  for (const auto& t : split(s, ',')) {
    const Rational q = parse_rational(t);
    if (q.get_den() != 1 || q < 1) throw UsageError("ladder entries must be positive integers");
    out.push_back(q.get_num().get_ui());
  }
  return out;
}

std::size_t parse_count(const std::string& s) {
  const Rational q = parse_rational(s);
  if (q.get_den() != 1 || q < 0) throw UsageError("expected a non-negative integer, got '" + s + "'");
  return q.get_num().get_ui();
}

SequenceSpec make_sequence(const std::string& family, unsigned long base, const std::string& terms) {
  if (family == "explicit") {
    std::vector<BigInt> t;
    for (const auto& s : split(terms, ',')) t.emplace_back(s, 10);
    return SequenceSpec::explicit_list(std::move(t));
  }
  return SequenceSpec::from_name(family, base);
}

GammaTable load_table(const std::string& spec, long d_max) {
  if (spec == "theorem1") return gamma_table_theorem1(d_max);
  if (spec == "empty") return GammaTable();
  if (spec == "erdos-fortet") {
    GammaTable t(2);
    t.set(2, 1, -1, Rational(1));
    return t;
  }
  std::ifstream in(spec);
  if (!in) throw UsageError("gamma table must be theorem1, empty, erdos-fortet or a JSON file");
  return GammaTable::from_json(nlohmann::json::parse(in));
}

std::string rat(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

std::string dec(double v) { return to_decimal(v); }

StatisticKind parse_kind(const std::string& s) {
  if (s == "star") return StatisticKind::StarDisc;
  if (s == "extremal") return StatisticKind::ExtremalDisc;
  if (s == "function") return StatisticKind::FunctionSum;
  throw UsageError("kind must be star, extremal or function");
}

struct Line {
  std::ostream& os;
  bool ok = true;
  void check(const std::string& name, bool pass, const std::string& detail) {
    os << name << "," << (pass ? "pass" : "fail") << "," << detail << "\n";
    ok = ok && pass;
  }
};

// verify subcommands; each returns true when every check passes.

bool verify_sigma_suite(std::ostream& os, long grid, long curve_grid) {
  Line l{os};
  os << "check,result,detail\n";
  const auto table = gamma_table_theorem1(kDefaultJMax);
  double worst = 0, worst_excess = -1;
  for (long i = 0; i < grid; ++i)
    for (long k = 0; k < grid; ++k) {
      const Rational a = make_rational(i, grid), x = make_rational(k, grid);
      const auto s = sigma_sq_series(BVFunctionSpec::centered_indicator(Rational(0), a), table, x);
      const double diff = std::abs(s.value - sigma_sq_closed_form_theorem1(a, x).get_d());
      worst = std::max(worst, diff);
      worst_excess = std::max(worst_excess, diff - s.tail_bound);
    }
  l.check("series_within_tail_bound", worst_excess <= 0, "max_diff=" + dec(worst));
  l.check("series_within_1e-3", worst <= 1e-3, "max_diff=" + dec(worst));
  const auto rows = lambda_star_curve(curve_grid);
  double max_diff = 0;
  bool mirror = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    max_diff = std::max(max_diff, rows[i].abs_diff);
    mirror = mirror && lambda_star_theorem1_closed(rows[i].x).radicand ==
                           lambda_star_theorem1_closed(Rational(1 - rows[i].x)).radicand;
  }
  l.check("lambda_star_curve", max_diff <= 1e-6, "max_abs_diff=" + dec(max_diff));
  l.check("lambda_star_mirror", mirror, "exact");
  l.check("lambda_star_7_24", lambda_star_theorem1_closed(Rational(7, 24)).radicand == Rational(1, 4), "1/4");
  l.check("lambda_star_1_2", lambda_star_theorem1_closed(Rational(1, 2)).radicand == Rational(2, 9), "2/9");
  bool sym = true;
  for (long i = 0; i <= 24; ++i)
    for (long k = 0; k <= 24; ++k) sym = sym && symmetry_relation_check(make_rational(i, 24), make_rational(k, 24));
  l.check("symmetry_relation", sym, "grid=25x25");
  return l.ok;
}

bool verify_theorem4(std::ostream& os, long max_n, std::size_t max_terms) {
  Line l{os};
  os << "check,result,detail\n";
  const std::vector<Rational> zs{Rational(1, 5), Rational(1, 3), Rational(1, 2), Rational(3, 4)};
  std::size_t cases = 0, bad = 0;
  std::vector<long> current;
  std::function<void(long)> rec = [&](long start) {
    if (!current.empty()) {
      for (const auto& z : zs) {
        ++cases;
        const auto r = theorem4_exact(current, z);
        bool ok = r.total == z * (1 - z) * static_cast<long>(current.size());
        for (const auto& c : r.cross) ok = ok && c.value == 0;
        if (!ok) ++bad;
      }
    }
    if (current.size() == max_terms) return;
    for (long n = start; n <= max_n; ++n) {
      current.push_back(n);
      rec(n + 1);
      current.pop_back();
    }
  };
  rec(1);
  l.check("theorem4_exact", bad == 0, "cases=" + std::to_string(cases) + " failures=" + std::to_string(bad));
  const Rational p = theorem4_pointwise({1, 2}, Rational(1, 3), Rational(0));
  l.check("pointwise_differs", p != Rational(4, 9), "value=" + rat(p));
  return l.ok;
}

bool verify_koksma(std::ostream& os, std::size_t trials, std::uint64_t seed) {
  Line l{os};
  os << "check,result,detail\n";
  CounterRng rng(seed);
  std::size_t v1 = 0, v2 = 0, v3 = 0;
  auto random_points = [&](CounterRng& r) {
    const std::size_t n = 1 + r.below(200);
    const unsigned long den = 1 + r.below(300);
    std::vector<Rational> pts;
    for (std::size_t i = 0; i < n; ++i) {
      const unsigned long q = 1 + r.below(den);
      Rational x(r.below(q + 1), q);
      x.canonicalize();
      pts.push_back(x);
    }
    return ExactPointSet(std::move(pts));
  };
  auto breaks_from = [](CounterRng& r, std::size_t count, unsigned long den) {
    std::vector<Rational> b;
    for (std::size_t i = 0; i < count; ++i) {
      Rational q(1 + r.below(den - 1), den);
      q.canonicalize();
      b.push_back(q);
    }
    return b;
  };
  auto value = [](CounterRng& r) { return Rational(static_cast<long>(r.below(9)) - 4); };
  for (std::size_t t = 0; t < trials; ++t) {
    CounterRng r = rng.split(t);
    auto b = breaks_from(r, r.below(21), 97);
    b.push_back(Rational(0));
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    std::vector<Rational> open, point;
    for (std::size_t i = 0; i < b.size(); ++i) {
      open.push_back(value(r));
      point.push_back(value(r));
    }
    if (!koksma_check(StepFunction(b, open, point), random_points(r)).holds) ++v1;

    auto half = breaks_from(r, r.below(11), 96);
    for (auto& h : half) h /= 2;
    std::sort(half.begin(), half.end());
    half.erase(std::unique(half.begin(), half.end()), half.end());
    std::vector<Rational> vals;
    for (std::size_t i = 0; i <= 2 * half.size() + 2; ++i) vals.push_back(value(r));
    auto fn = [&](const Rational& s) -> Rational {
      const Rational u = s > Rational(1, 2) ? Rational(1 - s) : s;
      std::size_t idx = 0;
      for (const auto& h : half) {
        if (u == h) return vals[2 * idx + 1];
        if (u > h) ++idx;
      }
      if (u == Rational(1, 2)) return vals.back();
      return vals[2 * idx];
    };
    std::vector<Rational> sb = half;
    sb.push_back(Rational(1, 2));
    for (const auto& h : half) sb.push_back(Rational(1 - h));
    const auto f = StepFunction::from_evaluator(sb, fn);
    const auto r2 = symmetric_koksma_check(f, random_points(r));
    if (!(r2.lhs <= r2.rhs)) ++v2;
    if (!(r2.lhs <= *r2.intermediate && *r2.intermediate <= r2.rhs)) ++v3;
  }
  l.check("koksma", v1 == 0, "trials=" + std::to_string(trials) + " violations=" + std::to_string(v1));
  l.check("symmetric_koksma", v2 == 0, "trials=" + std::to_string(trials) + " violations=" + std::to_string(v2));
  l.check("fold_chain", v3 == 0, "trials=" + std::to_string(trials) + " violations=" + std::to_string(v3));
  return l.ok;
}

bool verify_lemma1(std::ostream& os, std::size_t n_max, long j_max, long nu_max) {
  Line l{os};
  os << "check,result,detail\n";
  const auto terms = counting_terms(SequenceSpec::theorem1(), n_max);
  std::size_t main_bad = 0, other_bad = 0;
  std::uint64_t other_max = 0;
  for (long j1 = 1; j1 <= j_max; ++j1)
    for (long j2 = 1; j2 <= j_max; ++j2)
      for (long nu = -nu_max; nu <= nu_max; ++nu) {
        const auto pairs = solution_pairs(terms, j1, j2, nu);
        const bool main = (j1 == 3 * j2 && nu == j2) || (j2 == 3 * j1 && nu == -j1);
        for (std::size_t n = 1; n <= n_max; ++n) {
          const auto s = count_up_to(pairs, n);
          if (main && s != n / 2) ++main_bad;
          if (!main) {
            other_max = std::max(other_max, s);
            if (s > 2) ++other_bad;
          }
        }
      }
  l.check("main_tuples_floor_half", main_bad == 0, "mismatches=" + std::to_string(main_bad));
  l.check("other_tuples_at_most_2", other_bad == 0, "max_count=" + std::to_string(other_max));
  return l.ok;
}

bool verify_theorem2(std::ostream& os, std::size_t points, std::uint64_t seed, long resolution) {
  Line l{os};
  os << "check,result,detail\n";
  const auto table = gamma_table_theorem1(kDefaultJMax);
  CounterRng rng(seed);
  double worst = 0, min_ext = 1;
  for (std::size_t i = 0; i < points; ++i) {
    const double x = rng.uniform();
    worst = std::max(worst, std::abs(theorem2_average_check(table, x, resolution) - 0.125));
    min_ext = std::min(min_ext, lambda_extremal_numeric(table, x, 48, 1000).value);
  }
  l.check("average_one_eighth", worst <= 1e-4, "max_abs_err=" + dec(worst));
  l.check("lambda_extremal_half", min_ext >= 0.499, "min=" + dec(min_ext));
  const double mean = theorem2_star_mean(table, 1024, 3000);
  l.check("star_mean_quarter", mean >= 0.25 - 1e-6, "mean=" + dec(mean));
  return l.ok;
}

bool verify_bounds(std::ostream& os) {
  Line l{os};
  os << "check,result,detail\n";
  const auto b = gamma_bound_check(BVFunctionSpec::centered_indicator(Rational(0), Rational(1, 2)),
                                   gamma_table_theorem1(300), Rational(8, 3));
  l.check("gamma_bound", b.holds && b.rhs_exact == Rational(64, 15), "lhs=" + dec(b.lhs) + " rhs=" + rat(*b.rhs_exact));
  const double ref[] = {0.720082, 0.707107, 0.608581};
  for (long t = 2; t <= 4; ++t) {
    const double v = fukuyama_reference(t);
    l.check("fukuyama_theta_" + std::to_string(t), std::abs(v - ref[t - 2]) < 5e-7, dec(v));
  }
  l.check("gap_ratio_theorem1", gap_ratio_lower_bound(SequenceSpec::theorem1(), 10) == Rational(8, 3), "8/3");
  return l.ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lacunary sequences: discrepancy, Diophantine counts, limit variances and LIL simulation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  std::string out_path;
  app.add_option("--out", out_path, "Write output to this file instead of stdout");

  std::string family = "theorem1", terms_list;
  unsigned long base = 2;
  auto add_seq = [&](CLI::App* c) {
    c->add_option("--family", family, "theorem1 | geometric | powers-minus-one | explicit")->capture_default_str();
    c->add_option("--base", base, "Base for geometric families")->capture_default_str();
    c->add_option("--terms", terms_list, "Comma-separated terms for the explicit family");
  };

  auto* terms = app.add_subcommand("terms", "Print sequence terms");
  add_seq(terms);
  std::string count_s = "10", mod_s;
  terms->add_option("--count", count_s, "Number of terms")->capture_default_str();
  terms->add_option("--mod", mod_s, "Print terms modulo this integer");

  auto* frac = app.add_subcommand("frac", "Fractional part {n_k x}");
  add_seq(frac);
  std::string k_s = "1", x_s = "0";
  frac->add_option("--k", k_s, "Index k >= 1")->required();
  frac->add_option("--x", x_s, "Point x in [0,1) as P/Q or decimal")->required();

  auto* disc = app.add_subcommand("discrepancy", "Star and extremal discrepancy of a point set");
  std::string points_s, points_file, disc_kind = "both", disc_mode = "exact";
  bool brute = false;
  disc->add_option("--points", points_s, "Comma-separated points (P/Q or decimals)");
  disc->add_option("--file", points_file, "File with one point per line");
  disc->add_option("--kind", disc_kind, "star | extremal | both")->capture_default_str();
  disc->add_option("--mode", disc_mode, "exact | float")->capture_default_str();
  disc->add_flag("--brute", brute, "Also run the brute-force oracle");

  auto* dioph = app.add_subcommand("dioph", "Diophantine solution counts and gamma estimation");
  dioph->require_subcommand(1);
  long j1 = 1, j2 = 1, nu = 0, d_max = 3, nu_max = 16;
  std::string n_s = "10", ladder_s = "100,1000,10000";
  auto* dcount = dioph->add_subcommand("count", "Count solutions of j1 n_k - j2 n_l = nu with k, l <= N");
  add_seq(dcount);
  for (auto* c : {dcount}) {
    c->add_option("--j1", j1)->required();
    c->add_option("--j2", j2)->required();
    c->add_option("--nu", nu)->required();
    c->add_option("--n", n_s, "N")->required();
  }
  auto* dgamma = dioph->add_subcommand("gamma", "Estimate gamma along a ladder of N, or a whole table");
  add_seq(dgamma);
  bool whole_table = false;
  dgamma->add_option("--j1", j1);
  dgamma->add_option("--j2", j2);
  dgamma->add_option("--nu", nu);
  dgamma->add_option("--ladder", ladder_s, "Increasing list of N")->capture_default_str();
  dgamma->add_flag("--table", whole_table, "Estimate a full table as JSON");
  dgamma->add_option("--d-max", d_max, "Largest j for --table")->capture_default_str();
  dgamma->add_option("--nu-max", nu_max, "Largest |nu| for --table")->capture_default_str();

  auto* sigma = app.add_subcommand("sigma", "Limit variance sigma_f^2(x)");
  sigma->require_subcommand(1);
  std::string f_s = "indicator:0,1/2", table_s = "theorem1", a_s = "1/2";
  long j_max = kDefaultJMax, grid = 64;
  auto* seval = sigma->add_subcommand("eval", "sigma_f^2 at one x");
  seval->add_option("--f", f_s, "cos:J | sin:J | trig:J:A:B;... | indicator:A,B")->capture_default_str();
  seval->add_option("--table", table_s, "theorem1 | empty | erdos-fortet | file.json")->capture_default_str();
  seval->add_option("--jmax", j_max)->capture_default_str();
  seval->add_option("--x", x_s)->required();
  auto* scurve = sigma->add_subcommand("curve", "sigma_f^2 on the grid x = i/grid");
  scurve->add_option("--f", f_s)->capture_default_str();
  scurve->add_option("--table", table_s)->capture_default_str();
  scurve->add_option("--jmax", j_max)->capture_default_str();
  scurve->add_option("--grid", grid)->capture_default_str();

  auto* lstar = app.add_subcommand("lambda-star", "Lambda*(x) for the Theorem-1 sequence");
  bool curve = false;
  int resolution = 64;
  lstar->add_option("--x", x_s, "Single point");
  lstar->add_flag("--curve", curve, "Whole curve on x = i/grid");
  lstar->add_option("--grid", grid, "Grid size for --curve")->capture_default_str();
  lstar->add_option("--resolution", resolution, "Search grid in a (>= 64)")->capture_default_str();

  auto* sim = app.add_subcommand("simulate", "LIL trajectories for random x");
  add_seq(sim);
  std::string kind_s = "star", nmax_s = "1e5", samples_s = "10";
  std::uint64_t seed = 1;
  bool seed_given = false;
  sim->add_option("--kind", kind_s, "star | extremal | function")->capture_default_str();
  sim->add_option("--f", f_s, "Function for --kind function");
  sim->add_option("--nmax", nmax_s)->capture_default_str();
  sim->add_option("--samples", samples_s)->capture_default_str();
  sim->add_option("--seed", seed)->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run a verification suite (exit 1 on failure)");
  verify->require_subcommand(1);
  auto* vsigma = verify->add_subcommand("sigma-suite", "Series vs closed form and the Lambda* curve");
  long sigma_grid = 32, curve_grid = 480;
  vsigma->add_option("--grid", sigma_grid)->capture_default_str();
  vsigma->add_option("--curve-grid", curve_grid)->capture_default_str();
  auto* vt4 = verify->add_subcommand("theorem4", "Exact double-integral identity");
  long max_n = 8;
  std::size_t max_terms = 4;
  vt4->add_option("--max-n", max_n, "Largest frequency")->capture_default_str();
  vt4->add_option("--max-terms", max_terms, "Largest subset size")->capture_default_str();
  auto* vkok = verify->add_subcommand("koksma", "Randomized Koksma suites in exact arithmetic");
  std::string trials_s = "10000";
  vkok->add_option("--trials", trials_s)->capture_default_str();
  vkok->add_option("--seed", seed)->capture_default_str();
  auto* vlem = verify->add_subcommand("lemma1", "Exhaustive solution counts for the Theorem-1 sequence");
  std::string lem_n = "40";
  long lem_j = 9, lem_nu = 100;
  vlem->add_option("--n", lem_n)->capture_default_str();
  vlem->add_option("--j", lem_j)->capture_default_str();
  vlem->add_option("--nu", lem_nu)->capture_default_str();
  auto* vt2 = verify->add_subcommand("theorem2-average", "Averaged variance identity and Lambda >= 1/2");
  std::string points_n = "10";
  long quad = 4096;
  vt2->add_option("--points", points_n)->capture_default_str();
  vt2->add_option("--seed", seed)->capture_default_str();
  vt2->add_option("--resolution", quad)->capture_default_str();
  auto* vbounds = verify->add_subcommand("bounds", "Gamma bound and reference constants");

  for (auto* c : {sim, vkok, vt2})
    c->callback([&] { seed_given = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Manifest m;
  for (auto* sub = app.get_subcommands().front(); sub;) {
    m.subcommand += (m.subcommand.empty() ? "" : " ") + sub->get_name();
    auto subs = sub->get_subcommands();
    sub = subs.empty() ? nullptr : subs.front();
  }
  for (int i = 1; i < argc; ++i) m.args += (i > 1 ? " " : "") + std::string(argv[i]);
  if (seed_given) m.seed = std::to_string(seed);

  const auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    Output sink(out_path, m);
    std::ostream& os = sink.out();
    if (terms->parsed()) {
      const auto seq = make_sequence(family, base, terms_list);
      const std::size_t count = parse_count(count_s);
      os << "k,term\n";
      for (std::size_t k = 1; k <= count; ++k)
        os << k << "," << (mod_s.empty() ? seq.term(k) : seq.term_mod(k, BigInt(mod_s, 10))).get_str() << "\n";
    } else if (frac->parsed()) {
      const auto seq = make_sequence(family, base, terms_list);
      const std::size_t k = parse_count(k_s);
      const auto x = UnitRational::parse(x_s);
      const auto f = frac_part(seq, k, x);
      os << "k,x,frac,decimal\n" << k << "," << x.str() << "," << f.str() << "," << dec(f.to_double()) << "\n";
    } else if (disc->parsed()) {
      std::vector<std::string> items = split(points_s, ',');
      if (!points_file.empty()) {
        std::ifstream in(points_file);
        if (!in) throw UsageError("cannot read '" + points_file + "'");
        for (std::string line; std::getline(in, line);)
          if (!line.empty() && line[0] != '#') items.push_back(line);
      }
      if (items.empty()) throw UsageError("no points given (--points or --file)");
      std::vector<DiscrepancyKind> kinds;
      if (disc_kind == "star" || disc_kind == "both") kinds.push_back(DiscrepancyKind::Star);
      if (disc_kind == "extremal" || disc_kind == "both") kinds.push_back(DiscrepancyKind::Extremal);
      if (kinds.empty()) throw UsageError("kind must be star, extremal or both");
      os << "kind,value,exact,witness_a,witness_b,a_closed,b_closed,n\n";
      if (disc_mode == "exact") {
        std::vector<Rational> pts;
        for (const auto& s : items) pts.push_back(parse_rational(s));
        const ExactPointSet ps(pts);
        for (auto k : kinds) {
          const auto r = discrepancy(ps, k);
          os << to_string(k) << "," << dec(r.value.get_d()) << "," << rat(r.value) << "," << rat(r.witness_a) << ","
             << rat(r.witness_b) << "," << r.a_closed << "," << r.b_closed << "," << ps.size() << "\n";
          if (brute) {
            const auto b = brute_force_discrepancy(ps, k);
            os << to_string(k) << "-brute," << dec(b.value.get_d()) << "," << rat(b.value) << "," << rat(b.witness_a)
               << "," << rat(b.witness_b) << "," << b.a_closed << "," << b.b_closed << "," << ps.size() << "\n";
            if (b.value != r.value) code = 1;
          }
        }
      } else if (disc_mode == "float") {
        std::vector<double> pts;
        for (const auto& s : items) pts.push_back(parse_rational(s).get_d());
        const FloatPointSet ps(pts);
        for (auto k : kinds) {
          const auto r = discrepancy(ps, k);
          os << to_string(k) << "," << dec(r.value) << ",," << dec(r.witness_a) << "," << dec(r.witness_b) << ","
             << r.a_closed << "," << r.b_closed << "," << ps.size() << "\n";
        }
      } else {
        throw UsageError("mode must be exact or float");
      }
    } else if (dcount->parsed()) {
      const auto seq = make_sequence(family, base, terms_list);
      const std::size_t n = parse_count(n_s);
      os << "j1,j2,nu,N,count\n"
         << j1 << "," << j2 << "," << nu << "," << n << "," << count_solutions(seq, j1, j2, nu, n) << "\n";
    } else if (dgamma->parsed()) {
      const auto seq = make_sequence(family, base, terms_list);
      const auto ladder = parse_ladder(ladder_s);
      if (whole_table) {
        os << estimate_gamma_table(seq, d_max, nu_max, ladder).to_json().dump(2) << "\n";
      } else {
        const auto rep = estimate_gamma(seq, j1, j2, nu, ladder);
        os << "N,count,ratio,ratio_decimal,deviation\n";
        for (std::size_t i = 0; i < rep.series.size(); ++i)
          os << rep.series[i].n << "," << rep.series[i].count << "," << rat(rep.series[i].ratio) << ","
             << dec(rep.series[i].ratio.get_d()) << "," << dec(rep.deviations[i]) << "\n";
        os << "# fitted_limit: " << rat(rep.fitted_limit) << "\n# monotone: " << rep.monotone
           << "\n# cauchy: " << rep.cauchy << "\n";
      }
    } else if (seval->parsed()) {
      const auto f = BVFunctionSpec::parse(f_s);
      const auto table = load_table(table_s, j_max);
      const auto x = UnitRational::parse(x_s);
      const auto s = sigma_sq_series(f, table, x.value(), j_max);
      os << "x,sigma_sq,tail_bound,j_max,nu_max,table_truncated\n"
         << x.str() << "," << dec(s.value) << "," << dec(s.tail_bound) << "," << s.j_max << "," << s.nu_max << ","
         << s.table_truncated << "\n";
      if (table_s == "theorem1" && f.interval() && f.interval()->first == 0) {
        const auto exact = sigma_sq_closed_form_theorem1(f.interval()->second, x.value());
        os << "# closed_form: " << rat(exact) << " " << dec(exact.get_d()) << "\n";
      }
    } else if (scurve->parsed()) {
      if (grid < 1) throw UsageError("grid must be >= 1");
      const auto f = BVFunctionSpec::parse(f_s);
      const auto table = load_table(table_s, j_max);
      std::vector<SigmaValue> vals(static_cast<std::size_t>(grid) + 1);
      parallel_for(vals.size(),
                   [&](std::size_t i) { vals[i] = sigma_sq_series(f, table, make_rational(static_cast<long>(i), grid), j_max); });
      os << "x,x_decimal,sigma_sq,tail_bound\n";
      for (std::size_t i = 0; i < vals.size(); ++i)
        os << rat(make_rational(static_cast<long>(i), grid)) << "," << dec(static_cast<double>(i) / grid) << ","
           << dec(vals[i].value) << "," << dec(vals[i].tail_bound) << "\n";
    } else if (lstar->parsed()) {
      os << "x,x_decimal,radicand,lambda_closed,lambda_numeric,abs_diff,witness_a\n";
      double worst = 0;
      if (curve) {
        if (grid < 1) throw UsageError("grid must be >= 1");
        for (const auto& r : lambda_star_curve(grid, resolution)) {
          os << rat(r.x) << "," << dec(r.x.get_d()) << "," << rat(lambda_star_theorem1_closed(r.x).radicand) << ","
             << dec(r.lambda_closed) << "," << dec(r.lambda_numeric) << "," << dec(r.abs_diff) << ","
             << dec(r.witness_a) << "\n";
          worst = std::max(worst, r.abs_diff);
        }
      } else {
        const Rational x = parse_rational(x_s);
        const auto c = lambda_star_theorem1_closed(x);
        const auto n = lambda_star_numeric_theorem1(x, resolution);
        worst = std::abs(c.value - n.value);
        os << rat(x) << "," << dec(x.get_d()) << "," << rat(c.radicand) << "," << dec(c.value) << "," << dec(n.value)
           << "," << dec(worst) << "," << dec(n.witness_a) << "\n";
      }
      if (worst > 1e-6) code = 1;
    } else if (sim->parsed()) {
      const auto seq = make_sequence(family, base, terms_list);
      const auto kind = parse_kind(kind_s);
      std::optional<BVFunctionSpec> f;
      if (kind == StatisticKind::FunctionSum) f = BVFunctionSpec::parse(f_s);
      const auto recs = simulate(seq, kind, parse_count(nmax_s), parse_count(samples_s), seed, f);
      os << "x,N,stat,normalized,runmax\n";
      for (const auto& r : recs)
        for (const auto& c : r.checkpoints)
          os << r.x.str() << "," << c.n << "," << dec(c.raw) << "," << dec(c.normalized) << "," << dec(c.running_max)
             << "\n";
    } else if (vsigma->parsed()) {
      code = verify_sigma_suite(os, sigma_grid, curve_grid) ? 0 : 1;
    } else if (vt4->parsed()) {
      if (max_n < 1 || max_n > kTheorem4MaxValue || max_terms < 1 || max_terms > kTheorem4MaxTerms)
        throw UsageError("need 1 <= max-n <= 64 and 1 <= max-terms <= 8");
      code = verify_theorem4(os, max_n, max_terms) ? 0 : 1;
    } else if (vkok->parsed()) {
      code = verify_koksma(os, parse_count(trials_s), seed) ? 0 : 1;
    } else if (vlem->parsed()) {
      code = verify_lemma1(os, parse_count(lem_n), lem_j, lem_nu) ? 0 : 1;
    } else if (vt2->parsed()) {
      code = verify_theorem2(os, parse_count(points_n), seed, quad) ? 0 : 1;
    } else if (vbounds->parsed()) {
      code = verify_bounds(os) ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cerr << "# duration_seconds: " << dec(secs) << "\n";
  return code;
}
