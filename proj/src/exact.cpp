#include "shapeforge/exact.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "shapeforge/error.hpp"

namespace shapeforge {

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorCode::InvalidArgument, what);
}

Exponents add(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (std::size_t i = 0; i < kVarCount; ++i) r[i] = std::uint16_t(a[i] + b[i]);
  return r;
}

void check_declared(VarSet vars, const Exponents& e) {
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (e[i] != 0 && !vars.contains(Var(i))) {
      invalid(std::string("exponent on undeclared variable ") + var_name(Var(i)));
    }
  }
}

// Divides exactly; a nonzero remainder means a formula was mistranscribed.
ExactInt exact_quotient(const ExactInt& num, const ExactInt& den) {
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw Error(ErrorCode::DivisibilityFailure, "inexact integer division");
  }
  ExactInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

// Binomial that also maps a negative top index to zero. Only used where a
// negative top index means "no object" rather than a caller bug.
ExactInt binomial_or_zero(long n, long k) {
  if (n < 0) return 0;
  return binomial(n, k);
}

}  // namespace

char var_name(Var v) noexcept {
  static constexpr char names[kVarCount] = {'x', 'y', 'z', 'v', 'w', 't'};
  return names[static_cast<std::size_t>(v)];
}

Exponents exps(std::initializer_list<std::pair<Var, unsigned>> powers) {
  Exponents e{};
  for (const auto& [v, p] : powers) e[static_cast<std::size_t>(v)] += std::uint16_t(p);
  return e;
}

// ---------------------------------------------------------------------------
// Poly
// ---------------------------------------------------------------------------

Poly::Poly(VarSet vars, const Rational& constant) : vars_(vars) {
  if (constant != 0) terms_.emplace(Exponents{}, constant);
}

Poly Poly::variable(Var v, VarSet vars) {
  if (!vars.contains(v)) invalid(std::string("variable not declared: ") + var_name(v));
  Poly p(vars);
  Exponents e{};
  e[static_cast<std::size_t>(v)] = 1;
  p.terms_.emplace(e, Rational(1));
  return p;
}

Poly Poly::monomial(VarSet vars, const Exponents& e, const Rational& coeff) {
  Poly p(vars);
  p.add_term(e, coeff);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

Rational Poly::constant_term() const { return coefficient(Exponents{}); }

Rational Poly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::degree(Var v) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, int(e[static_cast<std::size_t>(v)]));
  return d;
}

void Poly::add_term(const Exponents& e, const Rational& coeff) {
  if (coeff == 0) return;
  check_declared(vars_, e);
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  vars_ = vars_ | o.vars_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  vars_ = vars_ | o.vars_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(a.vars_ | b.vars_);
  if (a.is_zero() || b.is_zero()) return r;
  Rational prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      prod = ca * cb;
      auto [it, inserted] = r.terms_.try_emplace(add(ea, eb), prod);
      if (!inserted) it->second += prod;
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly& Poly::operator/=(const Rational& c) {
  if (c == 0) invalid("polynomial division by zero");
  for (auto& [e, v] : terms_) v /= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result(vars_, Rational(1));
  Poly base = *this;
  while (e != 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

Poly Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) invalid("polynomial division by zero");
  Poly quotient(vars_ | divisor.vars_);
  Poly rem = *this;
  const auto& [dlead, dcoef] = *divisor.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto& [rlead, rcoef] = *rem.terms_.rbegin();
    Exponents q{};
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (rlead[i] < dlead[i]) {
        throw Error(ErrorCode::DivisibilityFailure,
                    "polynomial " + divisor.to_string() + " does not divide " + to_string());
      }
      q[i] = std::uint16_t(rlead[i] - dlead[i]);
    }
    Poly term = monomial(quotient.vars(), q, rcoef / dcoef);
    quotient += term;
    rem -= term * divisor;
  }
  return quotient;
}

Poly Poly::evaluate(Var var, const Rational& value) const {
  const auto idx = static_cast<std::size_t>(var);
  Poly r(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[idx] = 0;
    Rational f;
    mpz_pow_ui(f.get_num_mpz_t(), value.get_num_mpz_t(), e[idx]);
    mpz_pow_ui(f.get_den_mpz_t(), value.get_den_mpz_t(), e[idx]);
    f.canonicalize();
    r.add_term(rest, c * f);
  }
  return r;
}

Poly Poly::substitute_fraction(Var var, const Poly& num, const Poly& den, unsigned total_degree) const {
  const auto idx = static_cast<std::size_t>(var);
  if (degree(var) > int(total_degree)) invalid("substitution degree below polynomial degree");
  std::vector<Poly> num_pow{Poly(num.vars(), Rational(1))};
  std::vector<Poly> den_pow{Poly(den.vars(), Rational(1))};
  for (unsigned i = 1; i <= total_degree; ++i) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * den);
  }
  Poly r(vars_ | num.vars() | den.vars());
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[idx] = 0;
    const unsigned a = e[idx];
    r += monomial(vars_, rest, c) * num_pow[a] * den_pow[total_degree - a];
  }
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit_monomial = e == Exponents{};
    bool wrote = false;
    if (mag != 1 || unit_monomial) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      os << var_name(Var(i));
      if (e[i] > 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Counting functions
// ---------------------------------------------------------------------------

ExactInt binomial(long n, long k) {
  if (n < 0) invalid("binomial: negative top index " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  ExactInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

ExactInt catalan(long k) {
  if (k < 0) invalid("catalan: negative index");
  return exact_quotient(binomial(2 * k, k), ExactInt(k + 1));
}

ExactInt narayana(long n, long k) {
  if (n < 1) invalid("narayana: n must be positive");
  if (k < 1 || k > n) return 0;
  return exact_quotient(binomial(n, k) * binomial(n, k - 1), ExactInt(n));
}

ExactInt motzkin_poly_coeff(long n, long k) {
  if (n < 0) invalid("motzkin_poly_coeff: negative size");
  if (k < 0 || 2 * k > n) return 0;
  return binomial(n, 2 * k) * catalan(k);
}

ExactInt motzkin_number(long n) {
  if (n < 0) invalid("motzkin_number: negative size");
  ExactInt sum = 0;
  for (long k = 0; 2 * k <= n; ++k) sum += motzkin_poly_coeff(n, k);
  return sum;
}

ExactInt catalan_convolution(long u, long p) {
  if (u < 1) invalid("catalan_convolution: u must be positive");
  if (p < 1 || p > u) return 0;
  return exact_quotient(ExactInt(p) * binomial(2 * u - p - 1, u - 1), ExactInt(u));
}

ExactInt fib_poly_coeff(long a, long b) { return binomial_or_zero(a - b - 1, b); }

ExactInt level0_count(long r0, long n, long u) {
  if (u < 1) invalid("level0_count: u must be positive");
  if (r0 < 0 || n < 0) invalid("level0_count: negative argument");
  ExactInt f = fib_poly_coeff(n - r0 - 1, u - 1);
  if (f == 0) return 0;
  return exact_quotient(ExactInt(r0 + 1) * binomial(n + 1, u) * f, ExactInt(n + 1));
}

ExactInt level0_count_sumform(long r0, long n, long u) {
  if (u < 1) invalid("level0_count_sumform: u must be positive");
  if (r0 < 0 || n < 0) invalid("level0_count_sumform: negative argument");
  ExactInt sum = 0;
  for (long p = 1; p <= u; ++p) {
    sum += binomial(r0 + p, r0) * binomial_or_zero(n - r0 - p - 1, n - 2 * u - r0) *
           catalan_convolution(u, p);
  }
  return sum;
}

ExactInt level0_total(long r0, long n) {
  if (r0 < 0 || n < 0) invalid("level0_total: negative argument");
  if (r0 > n) invalid("level0_total: r0 exceeds n");
  if (r0 == n) return 1;
  ExactInt sum = 0;
  for (long u = 1; 2 * u <= n - r0; ++u) sum += level0_count(r0, n, u);
  return sum;
}

ExactInt level0_weighted_sum(long n) {
  if (n < 0) invalid("level0_weighted_sum: negative size");
  std::vector<ExactInt> m;
  m.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) m.push_back(motzkin_number(i));
  ExactInt sum = 0;
  for (long i = 0; i < n; ++i) sum += m[i] * m[n - 1 - i];
  return sum;
}

ExactInt island_count(long h, long I, long ell) {
  if (h < 1 || ell < 1) invalid("island_count: h and ell must be positive");
  ExactInt n = narayana(ell, h);
  if (n == 0) return 0;
  return n * binomial(2 * ell - 1 - h, I - h - 1);
}

// ---------------------------------------------------------------------------
// CountingCache
// ---------------------------------------------------------------------------

std::size_t CountingCache::KeyHash::operator()(const std::tuple<long, long, long>& k) const noexcept {
  std::size_t h = std::hash<long>{}(std::get<0>(k));
  h = h * 1000003u ^ std::hash<long>{}(std::get<1>(k));
  h = h * 1000003u ^ std::hash<long>{}(std::get<2>(k));
  return h;
}

template <typename F>
ExactInt CountingCache::lookup(Table& table, const std::tuple<long, long, long>& key, F&& compute) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = table.find(key); it != table.end()) return it->second;
  }
  // Computed outside the lock; a racing duplicate computes the same value.
  ExactInt value = compute();
  std::lock_guard lock(mutex_);
  return table.try_emplace(key, std::move(value)).first->second;
}

ExactInt CountingCache::binomial(long n, long k) {
  return lookup(binomials_, {n, k, 0}, [&] { return shapeforge::binomial(n, k); });
}

ExactInt CountingCache::motzkin_number(long n) {
  return lookup(motzkin_, {n, 0, 0}, [&] { return shapeforge::motzkin_number(n); });
}

ExactInt CountingCache::level0_count(long r0, long n, long u) {
  return lookup(level0_, {r0, n, u}, [&]() -> ExactInt {
    if (u < 1) invalid("level0_count: u must be positive");
    if (r0 < 0 || n < 0) invalid("level0_count: negative argument");
    const long top = n - r0 - u - 1;
    if (top < 0) return 0;
    ExactInt f = binomial(top, u - 1);
    if (f == 0) return 0;
    return exact_quotient(ExactInt(r0 + 1) * binomial(n + 1, u) * f, ExactInt(n + 1));
  });
}

ExactInt CountingCache::level0_total(long r0, long n) {
  return lookup(level0_totals_, {r0, n, 0}, [&]() -> ExactInt {
    if (r0 < 0 || n < 0) invalid("level0_total: negative argument");
    if (r0 > n) invalid("level0_total: r0 exceeds n");
    if (r0 == n) return 1;
    ExactInt sum = 0;
    for (long u = 1; 2 * u <= n - r0; ++u) sum += level0_count(r0, n, u);
    return sum;
  });
}

std::size_t CountingCache::entries() const {
  std::lock_guard lock(mutex_);
  return binomials_.size() + motzkin_.size() + level0_.size() + level0_totals_.size();
}

}  // namespace shapeforge
