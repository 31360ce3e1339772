#include <doctest.h>

#include <map>
#include <thread>
#include <tuple>
#include <vector>

#include "oracles.hpp"
#include "shapeforge/error.hpp"
#include "shapeforge/exact.hpp"

using namespace shapeforge;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected shapeforge::Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("binomial agrees with Pascal's triangle") {
  CHECK(binomial(7, 4) == oracle::pascal(7, 4));
  CHECK(binomial(7, 4) == 35);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  for (long n = 0; n <= 30; ++n) {
    for (long k = -1; k <= n + 1; ++k) CHECK(binomial(n, k) == oracle::pascal(n, k));
  }
  CHECK(code_of([] { binomial(-1, 0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("exact integers hold 3^2000") {
  ExactInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 3, 2000);
  CHECK(mpz_sizeinbase(p.get_mpz_t(), 3) == 2001);
  CHECK((p * 3 - 1) % 2 == 0);
}

TEST_CASE("catalan matches exhaustive Dyck enumeration") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(10) == 16796);
  for (int k = 0; k <= 10; ++k) {
    CHECK(catalan(k) == oracle::paths(2 * k, "UD").size());
  }
}

TEST_CASE("narayana counts brackets by their () occurrences") {
  CHECK(narayana(4, 2) == 6);
  CHECK(narayana(1, 1) == 1);
  CHECK(narayana(5, 2) == 10);
  CHECK(narayana(5, 0) == 0);
  CHECK(narayana(5, 6) == 0);
  CHECK(code_of([] { narayana(0, 1); }) == ErrorCode::InvalidArgument);
  for (int n = 1; n <= 8; ++n) {
    std::map<int, long> by_k;
    for (const auto& s : oracle::balanced(n)) ++by_k[oracle::count_substr(s, "()")];
    for (int k = 0; k <= n + 1; ++k) CHECK(narayana(n, k) == by_k[k]);
  }
  SUBCASE("rows sum to catalan") {
    for (long n = 1; n <= 12; ++n) {
      ExactInt s = 0;
      for (long k = 1; k <= n; ++k) s += narayana(n, k);
      CHECK(s == catalan(n));
    }
  }
}

TEST_CASE("Motzkin coefficients match exhaustive path enumeration") {
  CHECK(motzkin_poly_coeff(7, 2) == 70);
  CHECK(motzkin_poly_coeff(0, 0) == 1);
  CHECK(motzkin_poly_coeff(4, 2) == 2);
  CHECK(motzkin_poly_coeff(4, 3) == 0);
  CHECK(motzkin_number(4) == 9);
  CHECK(motzkin_number(0) == 1);
  CHECK(motzkin_number(7) == 127);
  for (int n = 0; n <= 11; ++n) {
    std::map<int, long> by_u;
    const auto all = oracle::paths(n, "UDH");
    for (const auto& p : all) ++by_u[oracle::count_char(p, 'U')];
    for (int k = 0; k <= n; ++k) CHECK(motzkin_poly_coeff(n, k) == by_u[k]);
    CHECK(motzkin_number(n) == all.size());
  }
  for (long n = 0; n <= 20; ++n) {
    ExactInt s = 0;
    for (long k = 0; 2 * k <= n; ++k) s += motzkin_poly_coeff(n, k);
    CHECK(s == motzkin_number(n));
  }
}

TEST_CASE("catalan convolution counts Dyck paths by irreducible factors") {
  CHECK(catalan_convolution(3, 1) == 2);
  CHECK(catalan_convolution(3, 2) == 2);
  CHECK(catalan_convolution(3, 3) == 1);
  // 5 = C(4;2) by exhaustive enumeration of the 14 Dyck paths with 4 up steps.
  CHECK(catalan_convolution(4, 2) == 5);
  CHECK(catalan_convolution(4, 0) == 0);
  CHECK(catalan_convolution(4, 5) == 0);
  CHECK(code_of([] { catalan_convolution(0, 0); }) == ErrorCode::InvalidArgument);
  for (int u = 1; u <= 8; ++u) {
    std::map<int, long> by_p;
    for (const auto& d : oracle::paths(2 * u, "UD")) ++by_p[oracle::irreducible_factors(d)];
    for (int p = 0; p <= u + 1; ++p) CHECK(catalan_convolution(u, p) == by_p[p]);
  }
  for (long u = 1; u <= 10; ++u) {
    ExactInt s = 0;
    for (long p = 1; p <= u; ++p) s += catalan_convolution(u, p);
    CHECK(s == catalan(u));
  }
}

TEST_CASE("Fibonacci polynomial coefficients") {
  CHECK(fib_poly_coeff(3, 1) == 1);
  for (long a = 1; a <= 10; ++a) CHECK(fib_poly_coeff(a, 0) == 1);
  CHECK(fib_poly_coeff(2, 2) == 0);
  CHECK(fib_poly_coeff(7, 2) == binomial(4, 2));
}

TEST_CASE("level-0 counts: closed form, sum form and enumeration agree") {
  CHECK(level0_count(0, 4, 2) == 2);
  CHECK(level0_count(1, 4, 1) == 2);
  CHECK(level0_count(0, 2, 1) == 1);
  CHECK(level0_count_sumform(0, 4, 2) == 2);
  CHECK(level0_count_sumform(1, 4, 1) == 2);
  CHECK(level0_count_sumform(0, 2, 1) == 1);
  CHECK(level0_total(4, 4) == 1);
  CHECK(level0_total(0, 4) == 3);
  CHECK(level0_total(3, 4) == 0);
  CHECK(code_of([] { level0_total(5, 4); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { level0_count(0, 4, 0); }) == ErrorCode::InvalidArgument);

  for (long n = 0; n <= 14; ++n) {
    for (long r0 = 0; r0 <= n; ++r0) {
      for (long u = 1; 2 * u <= n; ++u) {
        CHECK(level0_count(r0, n, u) == level0_count_sumform(r0, n, u));
      }
    }
  }

  for (int n = 0; n <= 11; ++n) {
    std::map<std::pair<int, int>, long> by_class;
    std::map<int, long> by_r0;
    for (const auto& p : oracle::paths(n, "UDH")) {
      const int r0 = oracle::level0_horizontals(p);
      ++by_class[{r0, oracle::count_char(p, 'U')}];
      ++by_r0[r0];
    }
    for (int r0 = 0; r0 <= n; ++r0) {
      CHECK(level0_total(r0, n) == by_r0[r0]);
      for (int u = 1; 2 * u <= n; ++u) CHECK(level0_count(r0, n, u) == by_class[{r0, u}]);
    }
  }

  SUBCASE("totals over r0 recover M_n") {
    for (long n = 0; n <= 14; ++n) {
      ExactInt s = 0;
      for (long r0 = 0; r0 <= n; ++r0) s += level0_total(r0, n);
      CHECK(s == motzkin_number(n));
    }
  }
  SUBCASE("M(0;n) - M(1;n) = (-1)^n") {
    for (long n = 1; n <= 30; ++n) {
      CHECK(level0_total(0, n) - level0_total(1, n) == (n % 2 == 0 ? 1 : -1));
    }
  }
  SUBCASE("weighted sum equals the Motzkin self-convolution") {
    CHECK(level0_weighted_sum(0) == 0);
    for (long n = 0; n <= 14; ++n) {
      ExactInt s = 0;
      for (long r0 = 0; r0 <= n; ++r0) s += r0 * level0_total(r0, n);
      CHECK(level0_weighted_sum(n) == s);
    }
  }
}

TEST_CASE("Chu-Vandermonde analog") {
  for (long m = 0; m <= 6; ++m) {
    for (long n = 0; n <= 6; ++n) {
      for (long t = 0; t <= m; ++t) {
        ExactInt s = 0;
        for (long a = 0; a <= n; ++a) s += binomial(m + n - (t + a), n - a) * binomial(t + a, a);
        CHECK(s == binomial(m + n + 1, n));
      }
    }
  }
}

TEST_CASE("island counts match exhaustive insertion") {
  CHECK(island_count(1, 2, 1) == 1);
  CHECK(island_count(1, 3, 2) == 2);
  CHECK(island_count(2, 3, 2) == 1);
  CHECK(island_count(3, 4, 2) == 0);
  for (int ell = 1; ell <= 6; ++ell) {
    std::map<std::pair<int, int>, long> by_hi;
    for (const auto& d : oracle::island_diagrams(ell)) {
      ++by_hi[{oracle::count_substr(d, "(_)"), oracle::islands_of(d)}];
    }
    for (int h = 1; h <= ell + 1; ++h) {
      for (int I = 0; I <= 2 * ell + 1; ++I) CHECK(island_count(h, I, ell) == by_hi[{h, I}]);
    }
  }
  for (long ell = 1; ell <= 8; ++ell) {
    for (long h = 1; h <= ell; ++h) {
      ExactInt s = 0;
      for (long I = 0; I <= 2 * ell + 1; ++I) s += island_count(h, I, ell);
      ExactInt two_pow;
      mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(2 * ell - 1 - h));
      CHECK(s == narayana(ell, h) * two_pow);
    }
  }
}

TEST_CASE("Poly arithmetic") {
  const VarSet xy{Var::x, Var::y};
  const Poly x = Poly::variable(Var::x, xy);
  const Poly y = Poly::variable(Var::y, xy);
  const Poly one(xy, 1);

  Poly sq = (x + y).pow(2);
  CHECK(sq.coefficient(exps({{Var::x, 1}, {Var::y, 1}})) == 2);
  CHECK(sq.size() == 3);
  CHECK((sq - x * x - y * y - Rational(2) * x * y).is_zero());
  CHECK(Poly(xy, 0).is_zero());
  CHECK(one.is_constant());
  CHECK(sq.degree(Var::x) == 2);
  CHECK(sq.to_string() == "x^2 + 2*x*y + y^2");

  SUBCASE("exact division") {
    Poly p = (one + y).pow(3) * (x - Rational(3, 2) * y);
    CHECK(p.divide_exact((one + y).pow(2)) == (one + y) * (x - Rational(3, 2) * y));
    CHECK(code_of([&] { (p + one).divide_exact(one + y); }) == ErrorCode::DivisibilityFailure);
  }
  SUBCASE("evaluation and fractional substitution") {
    Poly p = x * x * y + Rational(3) * x + one;
    CHECK(p.evaluate(Var::x, Rational(1, 2)) == Rational(1, 4) * y + Poly(xy, Rational(5, 2)));
    // p(y/(1+y)) * (1+y)^2
    Poly s = p.substitute_fraction(Var::x, y, one + y, 2);
    CHECK(s == y * y * y + Rational(3) * y * (one + y) + (one + y).pow(2));
  }
  SUBCASE("undeclared variable rejected") {
    Poly p(VarSet{Var::x});
    CHECK(code_of([&] { p.add_term(exps({{Var::z, 1}}), 1); }) == ErrorCode::InvalidArgument);
  }
}

TEST_CASE("CountingCache memoizes per instance and is thread safe") {
  CountingCache a, b;
  CHECK(a.level0_total(2, 20) == level0_total(2, 20));
  CHECK(a.entries() > 0);
  CHECK(b.entries() == 0);
  CHECK(a.motzkin_number(30) == motzkin_number(30));
  CHECK(a.level0_count(3, 30, 5) == level0_count(3, 30, 5));

  std::vector<std::thread> workers;
  std::vector<ExactInt> results(4);
  for (int i = 0; i < 4; ++i) {
    workers.emplace_back([&, i] {
      ExactInt s = 0;
      for (long r0 = 0; r0 <= 40; ++r0) s += b.level0_total(r0, 40);
      results[static_cast<std::size_t>(i)] = s;
    });
  }
  for (auto& w : workers) w.join();
  for (const auto& r : results) CHECK(r == motzkin_number(40));
}
