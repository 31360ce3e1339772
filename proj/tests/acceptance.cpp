// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

#include "shapeforge/asymptotics.hpp"
#include "shapeforge/exact.hpp"
#include "shapeforge/paths.hpp"
#include "shapeforge/rna.hpp"
#include "shapeforge/series.hpp"

using namespace shapeforge;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string str(double v) { return format_float(v); }

Outcome bijections() {
  Outcome o;
  for (int n = 0; n <= 9; ++n) {
    std::set<std::string> image;
    for (const auto& p : enumerate_paths(n, PathKind::Motzkin2)) {
      const auto s = encode2(p);
      o.require(decode2(s) == p, "decode2(encode2(" + p.steps() + ")) differs");
      image.insert(s.text());
    }
    o.require(image.size() == catalan(n + 1).get_ui(), "encode2 image size at n=" + std::to_string(n));
  }
  for (int n = 0; n <= 10; ++n) {
    std::set<std::string> image;
    for (const auto& p : enumerate_paths(n, PathKind::Motzkin1)) {
      const auto s = encode1(p);
      o.require(decode1(s) == p, "decode1(encode1(" + p.steps() + ")) differs");
      image.insert(s.text());
    }
    o.require(image.size() == motzkin_number(n).get_ui(), "encode1 image size at n=" + std::to_string(n));
  }
  o.detail = o.ok ? "2-Motzkin n<=9, 1-Motzkin n<=10" : o.detail;
  return o;
}

Outcome worked_example() {
  Outcome o;
  const auto s = encode2(parse_path("UBURDD", PathKind::Motzkin2)).text();
  o.require(s == "(()((())()()))", "got " + s);
  if (o.ok) o.detail = "UBURDD -> " + s;
  return o;
}

Outcome identities() {
  Outcome o;
  const std::tuple<const char*, long, long> runs[] = {
      {"ouriden", 1, 12},  {"coker1", 1, 12},         {"coker2", 1, 12},
      {"touchard", 1, 12}, {"chu_vandermonde", 0, 6}, {"parity_m0m1", 1, 30},
  };
  for (const auto& [name, lo, hi] : runs) {
    const auto r = verify_identity(name, lo, hi);
    o.require(r.passed(), std::string(name) + ": " + r.counterexample.value_or(""));
    o.require(r.instances.size() == std::size_t(hi - lo + 1), std::string(name) + ": instance count");
  }
  if (o.ok) o.detail = "6 identities, all instances exact";
  return o;
}

Outcome island_oracles() {
  Outcome o;
  for (int ell = 1; ell <= 5; ++ell) {
    std::map<std::pair<int, int>, long> generated;
    std::map<std::pair<int, int>, long> decorated;
    for (const auto& d : generate_island_diagrams(ell)) {
      const auto s = d.stats();
      ++generated[{s.hairpins, s.islands}];
    }
    for (const auto& p : enumerate_paths(ell - 1, PathKind::Motzkin2)) {
      for (const auto& d : decorate_islands(p)) {
        const auto s = d.stats();
        ++decorated[{s.hairpins, s.islands}];
      }
    }
    o.require(generated == decorated, "generated vs decorated at ell=" + std::to_string(ell));
    for (int h = 1; h <= 2 * ell; ++h) {
      for (int I = 0; I <= 4 * ell; ++I) {
        const auto it = generated.find({h, I});
        const long g = it == generated.end() ? 0 : it->second;
        o.require(island_count(h, I, ell) == g,
                  "closed form at ell=" + std::to_string(ell) + " h=" + std::to_string(h) + " I=" + std::to_string(I));
      }
    }
  }
  if (o.ok) o.detail = "ell<=5, three sources identical";
  return o;
}

Outcome level0_crosscheck() {
  Outcome o;
  for (int n = 0; n <= 12; ++n) {
    std::map<std::pair<int, int>, long> brute;  // (r0, u)
    for (const auto& p : enumerate_paths(n, PathKind::Motzkin1)) {
      const auto s = path_stats(p);
      ++brute[{s.r0, s.u}];
    }
    ExactInt total = 0;
    for (int r0 = 0; r0 <= n; ++r0) {
      for (int u = 1; 2 * u <= n; ++u) {
        const auto it = brute.find({r0, u});
        const long b = it == brute.end() ? 0 : it->second;
        const auto closed = level0_count(r0, n, u);
        o.require(closed == b, "closed form vs paths at r0=" + std::to_string(r0) + " n=" + std::to_string(n));
        o.require(level0_count_sumform(r0, n, u) == closed,
                  "sum form at r0=" + std::to_string(r0) + " n=" + std::to_string(n) + " u=" + std::to_string(u));
      }
      total += level0_total(r0, n);
    }
    o.require(total == motzkin_number(n), "sum over r0 at n=" + std::to_string(n));
  }
  if (o.ok) o.detail = "0<=r0<=n<=12";
  return o;
}

Outcome series_agreement() {
  Outcome o;
  const auto narayana = expand_G(10, GForm::narayana);
  const auto closed = expand_G(10, GForm::closed);
  const auto motzkin2 = expand_G(10, GForm::motzkin2);
  o.require(narayana == closed, "narayana form vs closed form");
  o.require(narayana == motzkin2, "narayana form vs motzkin2 form");
  const auto m = expand_motzkin_numbers(40);
  for (int n = 0; n <= 40; ++n) o.require(m[n] == Rational(motzkin_number(n)), "Motzkin coefficient " + std::to_string(n));
  const auto l = expand_level0_gf(30);
  for (int n = 0; n <= 30; ++n) {
    for (int r0 = 0; r0 <= n; ++r0) {
      Exponents e{};
      e[std::size_t(Var::t)] = static_cast<std::uint16_t>(r0);
      o.require(l[n].coefficient(e) == Rational(level0_total(r0, n)),
                "level0 coefficient r0=" + std::to_string(r0) + " n=" + std::to_string(n));
    }
  }
  if (o.ok) o.detail = "G to order 10, Motzkin to 40, level0 to 30";
  return o;
}

Outcome level0_limit() {
  Outcome o;
  const auto r = convergence_report(Family::level0, 100, 8);
  o.require(r.max_deviation() <= 0.03, "max deviation " + str(r.max_deviation()));
  double prev = INFINITY;
  std::string errs;
  for (long n : {100L, 200L, 400L}) {
    const double e = std::abs(convergence_report(Family::level0, n, 0).expected_exact.get_d() - 2.0);
    o.require(e < prev, "E(r0) error not decreasing at n=" + std::to_string(n));
    prev = e;
    errs += (errs.empty() ? "" : " ") + str(e);
  }
  o.require(prev <= 0.05, "|E(400)-2| = " + str(prev));
  if (o.ok) o.detail = "max dev " + str(r.max_deviation()) + ", |E-2| " + errs;
  return o;
}

Outcome lambda4_numbers() {
  Outcome o;
  const double zeta = dominant_singularity(4).zeta;
  const auto c = pi_constants(4);
  const double er0 = asym_pi_expected(4);
  o.require(zeta >= 0.7562 && zeta <= 0.7564, "zeta " + str(zeta));
  o.require(std::abs(c.a - 0.3639) <= 0.0005, "a " + str(c.a));
  o.require(std::abs(c.b - 0.3968) <= 0.0005, "b " + str(c.b));
  o.require(std::abs(er0 - 1.316) <= 0.002, "E(r0) " + str(er0));
  o.require(std::abs(er0 + 1 - 2.316) <= 0.002, "E(components) " + str(er0 + 1));
  if (o.ok) o.detail = "zeta " + str(zeta) + ", a " + str(c.a) + ", b " + str(c.b) + ", E(r0) " + str(er0);
  return o;
}

Outcome pi_limit() {
  Outcome o;
  const auto r = convergence_report(Family::pi, 200, 8, 4);
  o.require(r.max_deviation() <= 0.03, "max deviation " + str(r.max_deviation()));
  if (o.ok) o.detail = "max dev " + str(r.max_deviation());
  return o;
}

Outcome count_ratios() {
  Outcome o;
  std::ostringstream d;
  const auto m = asym_count("motzkin_number", {.n = 400});
  o.require(m.ratio >= 0.95 && m.ratio <= 1.05, "M_400 ratio " + str(m.ratio));
  d << "M_n " << str(m.ratio);
  for (long r0 = 0; r0 <= 4; ++r0) {
    const auto l = asym_count("level0_total", {.n = 400, .r0 = r0});
    o.require(l.ratio >= 0.95 && l.ratio <= 1.05, "M(" + std::to_string(r0) + ";400) ratio " + str(l.ratio));
    d << ", r0=" << r0 << " " << str(l.ratio);
  }
  const auto p = asym_count("pi_total", {.lambda = 4, .nu = 300});
  o.require(p.ratio >= 0.90 && p.ratio <= 1.10, "pi_4(300) ratio " + str(p.ratio));
  d << ", pi_4 " << str(p.ratio);
  for (int lambda : {1, 3}) {
    const auto r = verify_identity("pi_parity", 0, 50, lambda);
    o.require(r.passed(), "parity at lambda=" + std::to_string(lambda) + ": " + r.counterexample.value_or(""));
  }
  if (o.ok) o.detail = d.str() + ", parity ok";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"bijection exhaustives", 30, bijections},
      {"worked encode2 example", 1, worked_example},
      {"identity suite", 60, identities},
      {"triple-oracle island counts", 30, island_oracles},
      {"level-0 count cross-check", 30, level0_crosscheck},
      {"series-engine agreement", 60, series_agreement},
      {"level-0 limit distribution", 60, level0_limit},
      {"lambda=4 constants", 1, lambda4_numbers},
      {"pi-shape limit distribution", 60, pi_limit},
      {"asymptotic count ratios", 120, count_ratios},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && secs > c.budget_s) {
      out.ok = false;
      out.detail = "over the " + str(c.budget_s) + " s budget";
    }
    failures += !out.ok;
    std::printf("%s %2d %s (%.2f s): %s\n", out.ok ? "PASS" : "FAIL", index, c.name, secs, out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
