#include "shapeforge/series.hpp"

#include <functional>
#include <map>
#include <memory>

#include <json.hpp>

namespace shapeforge {

namespace {

constexpr VarSet kXY{Var::x, Var::y};

Poly xy_const(long c) { return Poly(kXY, Rational(c)); }
Poly X() { return Poly::variable(Var::x, kXY); }
Poly Y() { return Poly::variable(Var::y, kXY); }

void require_zero(const Poly& p, const std::string& what) {
  if (!p.is_zero()) throw Error(ErrorCode::DivisibilityFailure, what + " is " + p.to_string() + ", not 0");
}

void check_order(int order) {
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "series order must be nonnegative");
}

}  // namespace

std::string_view to_string(GForm form) noexcept {
  switch (form) {
    case GForm::narayana: return "narayana";
    case GForm::closed: return "closed";
    case GForm::motzkin2: return "motzkin2";
  }
  return "";
}

TruncatedSeries<Poly> expand_motzkin_gf(int order, bool with_v) {
  check_order(order);
  const VarSet vs = with_v ? VarSet{Var::v} : VarSet{};
  const Poly v = with_v ? Poly::variable(Var::v, vs) : Poly(vs, Rational(1));
  TruncatedSeries<Poly> d(Var::w, order + 2, Poly(vs));
  d[0] = Poly(vs, Rational(1));
  d[1] = Poly(vs, Rational(-2));
  d[2] = Poly(vs, Rational(1)) - v * Rational(4);
  const auto root = series_sqrt(d);

  TruncatedSeries<Poly> num = root.scaled(-1);
  num[0] += Poly(vs, Rational(1));
  num[1] -= Poly(vs, Rational(1));
  require_zero(num[0], "w^0 coefficient of the Motzkin numerator");
  require_zero(num[1], "w^1 coefficient of the Motzkin numerator");

  const Poly two_v = v * Rational(2);
  TruncatedSeries<Poly> m(Var::w, order, Poly(vs));
  for (int n = 0; n <= order; ++n) m[n] = num[n + 2].divide_exact(two_v);
  return m;
}

TruncatedSeries<Rational> expand_motzkin_numbers(int order) {
  check_order(order);
  TruncatedSeries<Rational> d(Var::w, order + 2, Rational(0));
  d[0] = 1;
  d[1] = -2;
  d[2] = -3;
  const auto root = series_sqrt(d);
  TruncatedSeries<Rational> m(Var::w, order, Rational(0));
  if (root[1] != -1) throw Error(ErrorCode::DivisibilityFailure, "Motzkin numerator has a w^1 term");
  for (int n = 0; n <= order; ++n) m[n] = -root[n + 2] / 2;
  return m;
}

TruncatedSeries<Poly> expand_G(int order, GForm form) {
  check_order(order);
  const auto limit = enumeration_guard(24);
  if (static_cast<std::size_t>(order) > limit) {
    throw Error(ErrorCode::ResourceGuard, "G expansion limited to order " + std::to_string(limit));
  }
  const Poly x = X(), y = Y(), one = xy_const(1);
  const Poly opy = one + y;
  TruncatedSeries<Poly> g(Var::z, order, Poly(kXY));

  switch (form) {
    case GForm::narayana:
      for (int ell = 1; ell <= order; ++ell) {
        for (int h = 1; h <= ell; ++h) {
          g[ell] += x.pow(unsigned(h)) * y.pow(unsigned(h + 1)) * opy.pow(unsigned(2 * ell - 1 - h)) *
                    Rational(narayana(ell, h));
        }
      }
      break;
    case GForm::motzkin2: {
      const Poly up = x * y * opy.pow(3);
      const Poly flat = opy * (opy + x * y);
      for (int ell = 1; ell <= order; ++ell) {
        for (int u = 0; 2 * u <= ell - 1; ++u) {
          g[ell] += x * y.pow(2) * up.pow(unsigned(u)) * flat.pow(unsigned(ell - 1 - 2 * u)) *
                    Rational(motzkin_poly_coeff(ell - 1, u));
        }
      }
      break;
    }
    case GForm::closed: {
      // With A = z(1+y)^2 and B = xy/(1+y):
      //   A(1+B)       = z (1+y)(1+y+xy)
      //   A^2 (1-B)^2  = z^2 (1+y)^2 (1+y-xy)^2
      const Poly p = opy * (opy + x * y);
      const Poly q = opy * (opy - x * y);
      TruncatedSeries<Poly> disc(Var::z, order + 1, Poly(kXY));
      disc[0] = one;
      if (order + 1 >= 1) disc[1] = p * Rational(-2);
      if (order + 1 >= 2) disc[2] = q * q;
      TruncatedSeries<Poly> num = series_sqrt(disc).scaled(-1);
      num[0] += one;
      num[1] -= p;
      require_zero(num[0], "z^0 coefficient of the closed-form numerator");
      // G = y/(1+y) * num / (2 z (1+y)^2)
      const Poly den = opy.pow(3) * Rational(2);
      for (int ell = 1; ell <= order; ++ell) g[ell] = (y * num[ell + 1]).divide_exact(den);
      break;
    }
  }
  return g;
}

TruncatedSeries<Rational> expand_level0_base(int order) {
  const auto m = expand_motzkin_numbers(order);
  TruncatedSeries<Rational> denom = m.shifted(2).scaled(-1);
  denom[0] += 1;
  return series_inverse(denom);
}

TruncatedSeries<Poly> expand_level0_gf(int order) {
  check_order(order);
  if (order > 200) throw Error(ErrorCode::ResourceGuard, "level-0 expansion in t limited to order 200");
  const VarSet ts{Var::t};
  const auto a = expand_level0_base(order);
  TruncatedSeries<Poly> out(Var::w, order, Poly(ts));
  TruncatedSeries<Rational> power = a;  // A^(k+1), valid to order - k
  for (int k = 0; k <= order; ++k) {
    for (int n = k; n <= order; ++n) {
      if (power[n - k] != 0) out[n].add_term(exps({{Var::t, unsigned(k)}}), power[n - k]);
    }
    if (k < order) power = power.truncated(order - k - 1) * a.truncated(order - k - 1);
  }
  return out;
}

TruncatedSeries<Rational> expand_level0_gf_at(int order, const Rational& t) {
  check_order(order);
  const auto a = expand_level0_base(order);
  TruncatedSeries<Rational> denom = a.shifted(1).scaled(-t);
  denom[0] += 1;
  return a * series_inverse(denom);
}

// ---------------------------------------------------------------------------
// Compatible pi-shapes
// ---------------------------------------------------------------------------

namespace {

long nu_prime(long lambda, long n, long u) { return (lambda + 1) * n + (1 - lambda) * u + lambda + 1; }

}  // namespace

CompatibleTable::CompatibleTable(int lambda, int nu_max) : lambda_(lambda), nu_max_(nu_max) {
  if (lambda < 1) throw Error(ErrorCode::InvalidArgument, "lambda must be at least 1");
  if (nu_max < 0 || nu_max > 2000) throw Error(ErrorCode::InvalidArgument, "nu_max must lie in 0..2000");

  // The smallest nu' for size n is reached at u = floor(n/2) and grows with n.
  long n_max = -1;
  while (nu_prime(lambda, n_max + 1, (n_max + 1) / 2) <= nu_max) ++n_max;
  counts_.assign(static_cast<std::size_t>(nu_max) + 1,
                 std::vector<ExactInt>(static_cast<std::size_t>(std::max(n_max, 0L)) + 1, 0));

  for (long n = 0; n <= n_max; ++n) {
    const long flat = nu_prime(lambda, n, 0);
    if (flat <= nu_max) counts_[std::size_t(flat)][std::size_t(n)] += 1;
    for (long u = 1; 2 * u <= n; ++u) {
      const long nu = nu_prime(lambda, n, u);
      if (nu > nu_max) continue;
      ExactInt choose_u;
      mpz_bin_uiui(choose_u.get_mpz_t(), static_cast<unsigned long>(n + 1), static_cast<unsigned long>(u));
      // C(n - r0 - u - 1, u - 1), walked from r0 = n - 2u downwards.
      ExactInt fib = 1;
      for (long r0 = n - 2 * u; r0 >= 0; --r0) {
        if (r0 < n - 2 * u) {
          const long top = n - r0 - u - 1;
          fib *= top;
          mpz_divexact_ui(fib.get_mpz_t(), fib.get_mpz_t(), static_cast<unsigned long>(top - (u - 1)));
        }
        ExactInt c = choose_u * fib * (r0 + 1);
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n + 1));
        counts_[std::size_t(nu)][std::size_t(r0)] += c;
      }
    }
  }
  for (std::size_t nu = 1; nu < counts_.size(); ++nu) {
    for (std::size_t r0 = 0; r0 < counts_[nu].size(); ++r0) counts_[nu][r0] += counts_[nu - 1][r0];
  }
}

ExactInt CompatibleTable::at(int r0, int nu) const {
  if (nu < 0 || nu > nu_max_) throw Error(ErrorCode::InvalidArgument, "nu outside the table");
  if (r0 < 0 || r0 > max_r0()) return 0;
  return counts_[std::size_t(nu)][std::size_t(r0)];
}

ExactInt CompatibleTable::total(int nu) const {
  if (nu < 0 || nu > nu_max_) throw Error(ErrorCode::InvalidArgument, "nu outside the table");
  ExactInt s = 0;
  for (const auto& c : counts_[std::size_t(nu)]) s += c;
  return s;
}

CompatibleTable compatible_counts(int lambda, int nu_max) { return CompatibleTable(lambda, nu_max); }

// ---------------------------------------------------------------------------
// Identities
// ---------------------------------------------------------------------------

std::pair<Poly, Poly> ouriden_sides(long ell) {
  if (ell < 1) throw Error(ErrorCode::InvalidArgument, "ell must be at least 1");
  const Poly x = X(), y = Y(), one = xy_const(1), opy = one + y;
  Poly lhs(kXY);
  for (long h = 1; h <= ell; ++h) {
    lhs += (x * y).pow(unsigned(h)) * opy.pow(unsigned(2 * ell - h)) * Rational(narayana(ell, h));
  }
  lhs = (y * lhs).divide_exact(opy);

  Poly rhs(kXY);
  const Poly up = x * y * opy.pow(3);
  const Poly flat = opy * (opy + x * y);
  for (long p = 0; 2 * p <= ell - 1; ++p) {
    rhs += up.pow(unsigned(p)) * flat.pow(unsigned(ell - 2 * p - 1)) * Rational(motzkin_poly_coeff(ell - 1, p));
  }
  rhs = x * y.pow(2) * rhs;
  return {lhs, rhs};
}

namespace {

// x -> x/y, divide by y, then y = 0. Returns nullopt when a negative power of
// y would appear.
std::optional<Poly> coker1_specialize(const Poly& p) {
  Poly r(VarSet{Var::x});
  for (const auto& [e, c] : p.terms()) {
    const int a = e[std::size_t(Var::x)];
    const int b = e[std::size_t(Var::y)];
    if (b - a - 1 < 0) return std::nullopt;
    if (b - a - 1 == 0) r.add_term(exps({{Var::x, unsigned(a)}}), c);
  }
  return r;
}

std::pair<Poly, Poly> coker1_sides(long n) {
  const VarSet xs{Var::x};
  const Poly x = Poly::variable(Var::x, xs), one(xs, Rational(1));
  Poly lhs(xs), rhs(xs);
  for (long k = 1; k <= n; ++k) lhs += x.pow(unsigned(k - 1)) * Rational(narayana(n, k));
  for (long k = 0; 2 * k <= n - 1; ++k) {
    rhs += x.pow(unsigned(k)) * (one + x).pow(unsigned(n - 2 * k - 1)) * Rational(catalan(k) * binomial(n - 1, 2 * k));
  }
  return {lhs, rhs};
}

std::pair<Poly, Poly> coker2_sides(long n) {
  const VarSet ys{Var::y};
  const Poly y = Poly::variable(Var::y, ys), opy = Poly(ys, Rational(1)) + y;
  Poly lhs(ys), rhs(ys);
  for (long k = 1; k <= n; ++k) {
    lhs += y.pow(unsigned(2 * (k - 1))) * opy.pow(unsigned(2 * (n - k))) * Rational(narayana(n, k));
    rhs += (y * opy).pow(unsigned(k - 1)) * Rational(catalan(k) * binomial(n - 1, k - 1));
  }
  return {lhs, rhs};
}

using Check = std::function<std::optional<std::string>(long)>;

std::optional<std::string> differ(const Poly& a, const Poly& b, const std::string& what) {
  if (a == b) return std::nullopt;
  return what + ": " + a.to_string() + " != " + b.to_string();
}

std::optional<std::string> check_ouriden(long ell) {
  const auto [lhs, rhs] = ouriden_sides(ell);
  return differ(lhs, rhs, "left side differs from right side");
}

std::optional<std::string> check_coker1(long n) {
  const auto [lhs, rhs] = ouriden_sides(n);
  const auto [c_lhs, c_rhs] = coker1_sides(n);
  if (auto d = differ(c_lhs, c_rhs, "coker1 sides")) return d;
  const Poly x = Poly::variable(Var::x, VarSet{Var::x});
  for (const auto& [side, label] : {std::pair{lhs, "left"}, std::pair{rhs, "right"}}) {
    const auto s = coker1_specialize(side);
    if (!s) return std::string(label) + " side leaves a negative power of y";
    if (auto d = differ(*s, x * c_lhs, std::string("specialized ") + label + " side")) return d;
  }
  return std::nullopt;
}

std::optional<std::string> check_coker2(long n) {
  const auto [lhs, rhs] = ouriden_sides(n);
  const auto [c_lhs, c_rhs] = coker2_sides(n);
  if (auto d = differ(c_lhs, c_rhs, "coker2 sides")) return d;
  const Poly y = Y(), opy = xy_const(1) + y;
  const Poly scale = y.pow(3) * opy.pow(unsigned(n - 1));
  const Poly expected = scale * c_lhs;
  for (const auto& [side, label] : {std::pair{lhs, "left"}, std::pair{rhs, "right"}}) {
    const Poly s = side.substitute_fraction(Var::x, y, opy, unsigned(n));
    if (auto d = differ(s, expected, std::string("substituted ") + label + " side")) return d;
  }
  return std::nullopt;
}

std::optional<std::string> check_touchard(long n) {
  ExactInt sum = 0;
  for (long k = 0; 2 * k <= n - 1; ++k) {
    ExactInt pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(n - 2 * k - 1));
    sum += catalan(k) * binomial(n - 1, 2 * k) * pow2;
  }
  if (sum == catalan(n)) return std::nullopt;
  return "sum " + sum.get_str() + " != C_n " + catalan(n).get_str();
}

// Instance p covers every (m, n) with max(m, n) = p and every 0 <= t <= m.
std::optional<std::string> check_chu_vandermonde(long p) {
  for (long m = 0; m <= p; ++m) {
    for (long n = 0; n <= p; ++n) {
      if (std::max(m, n) != p) continue;
      for (long t = 0; t <= m; ++t) {
        ExactInt sum = 0;
        for (long a = 0; a <= n; ++a) sum += binomial(m + n - (t + a), n - a) * binomial(t + a, a);
        if (sum != binomial(m + n + 1, n)) {
          return "m=" + std::to_string(m) + " n=" + std::to_string(n) + " t=" + std::to_string(t) + ": " +
                 sum.get_str();
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_parity_m0m1(long n) {
  const ExactInt diff = level0_total(0, n) - level0_total(1, n);
  if (diff == (n % 2 == 0 ? 1 : -1)) return std::nullopt;
  return "M(0;n) - M(1;n) = " + diff.get_str();
}

long min_parameter(std::string_view name) {
  if (name == "chu_vandermonde" || name == "pi_parity") return 0;
  return 1;
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = {"ouriden",         "coker1",      "coker2",    "touchard",
                                                 "chu_vandermonde", "parity_m0m1", "pi_parity", "G_forms_agree"};
  return names;
}

IdentityReport verify_identity(std::string_view name, long lo, long hi, int lambda) {
  const auto& names = identity_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw Error(ErrorCode::UnknownIdentity, "unknown identity '" + std::string(name) + "'");
  }
  if (lo < min_parameter(name) || hi < lo) {
    throw Error(ErrorCode::InvalidArgument, "identity " + std::string(name) + " needs " +
                                                std::to_string(min_parameter(name)) + " <= lo <= hi");
  }

  IdentityReport report;
  report.name = std::string(name);
  report.lo = lo;
  report.hi = hi;

  Check check;
  if (name == "ouriden") {
    check = check_ouriden;
  } else if (name == "coker1") {
    check = check_coker1;
  } else if (name == "coker2") {
    check = check_coker2;
  } else if (name == "touchard") {
    check = check_touchard;
  } else if (name == "chu_vandermonde") {
    check = check_chu_vandermonde;
  } else if (name == "parity_m0m1") {
    check = check_parity_m0m1;
  } else if (name == "pi_parity") {
    report.lambda = lambda;
    if (2 * hi + 1 > 2000) throw Error(ErrorCode::InvalidArgument, "pi_parity limited to k <= 999");
    auto table = std::make_shared<CompatibleTable>(lambda, int(2 * hi + 1));
    check = [table](long k) -> std::optional<std::string> {
      const ExactInt even = table->total(int(2 * k)), odd = table->total(int(2 * k + 1));
      if (even == odd) return std::nullopt;
      return "pi(" + std::to_string(2 * k) + ") = " + even.get_str() + " but pi(" + std::to_string(2 * k + 1) +
             ") = " + odd.get_str();
    };
  } else {
    std::map<GForm, TruncatedSeries<Poly>> forms;
    for (auto f : {GForm::narayana, GForm::closed, GForm::motzkin2}) forms.emplace(f, expand_G(int(hi), f));
    check = [forms](long ell) -> std::optional<std::string> {
      const Poly& ref = forms.at(GForm::narayana)[int(ell)];
      for (auto f : {GForm::closed, GForm::motzkin2}) {
        if (auto d = differ(forms.at(f)[int(ell)], ref, std::string(to_string(f)) + " vs narayana")) return d;
      }
      return std::nullopt;
    };
  }

  for (long p = lo; p <= hi; ++p) {
    const auto failure = check(p);
    report.instances.push_back({p, !failure});
    if (failure && !report.counterexample) {
      report.counterexample = "parameter " + std::to_string(p) + ": " + *failure;
    }
  }
  return report;
}

std::string IdentityReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "shapeforge/1";
  j["identity"] = name;
  j["range"] = {{"lo", lo}, {"hi", hi}};
  if (lambda) j["lambda"] = *lambda;
  j["status"] = passed() ? "pass" : "fail";
  auto& inst = j["instances"] = nlohmann::ordered_json::array();
  for (const auto& i : instances) inst.push_back({{"parameter", i.parameter}, {"passed", i.passed}});
  j["counterexample"] = counterexample ? nlohmann::ordered_json(*counterexample) : nlohmann::ordered_json();
  return j.dump(2);
}

}  // namespace shapeforge
