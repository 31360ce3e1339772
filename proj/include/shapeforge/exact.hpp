#pragma once

/**
 * @file exact.hpp
 * @brief Exact integers, rationals, sparse multivariate polynomials and the
 *        closed-form counting functions for Dyck, Motzkin and island objects.
 *
 * Everything here is exact. There are no floating-point fast paths and no
 * modular shortcuts; callers that need doubles convert at the very end.
 */

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <unordered_map>

#include <gmpxx.h>

namespace shapeforge {

using ExactInt = mpz_class;
using Rational = mpq_class;

// ---------------------------------------------------------------------------
// Sparse multivariate polynomials
// ---------------------------------------------------------------------------

/// Formal variables used across the project: x counts hairpins, y islands,
/// z base pairs (or vertices), v up steps, w path size, t level-0
/// horizontal steps.
enum class Var : std::uint8_t { x = 0, y, z, v, w, t };
inline constexpr std::size_t kVarCount = 6;

char var_name(Var v) noexcept;

class VarSet {
 public:
  constexpr VarSet() = default;
  constexpr VarSet(std::initializer_list<Var> vars) {
    for (Var v : vars) bits_ |= bit(v);
  }

  constexpr bool contains(Var v) const { return (bits_ & bit(v)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr VarSet operator|(VarSet o) const { return from_bits(bits_ | o.bits_); }
  constexpr bool operator==(const VarSet&) const = default;

 private:
  static constexpr std::uint8_t bit(Var v) { return std::uint8_t(1u << unsigned(v)); }
  static constexpr VarSet from_bits(std::uint8_t b) {
    VarSet s;
    s.bits_ = b;
    return s;
  }
  std::uint8_t bits_ = 0;
};

using Exponents = std::array<std::uint16_t, kVarCount>;

/// Polynomial with Rational coefficients over a declared variable set.
/// Zero coefficients are never stored. Binary operations declare the union of
/// the operands' variable sets.
class Poly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  Poly() = default;
  explicit Poly(VarSet vars) : vars_(vars) {}
  Poly(VarSet vars, const Rational& constant);

  static Poly variable(Var v, VarSet vars);
  static Poly monomial(VarSet vars, const Exponents& exps, const Rational& coeff);

  VarSet vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Exponents& exps) const;
  int degree(Var v) const;

  /// Adds `coeff` to the term with the given exponents; drops it if the sum
  /// cancels. Exponents of undeclared variables must be zero.
  void add_term(const Exponents& exps, const Rational& coeff);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);
  Poly& operator/=(const Rational& c);
  Poly operator-() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator/(Poly a, const Rational& c) { return a /= c; }

  /// Equality compares terms only; the declared variable sets may differ.
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly pow(unsigned e) const;

  /// Exact quotient by `divisor` (multivariate division in lex order).
  /// Throws ErrorCode::DivisibilityFailure if the remainder is nonzero.
  Poly divide_exact(const Poly& divisor) const;

  /// Replaces `var` by the rational constant `value`.
  Poly evaluate(Var var, const Rational& value) const;

  /// p(num/den) * den^total_degree where total_degree >= deg_var(p); the result is a
  /// polynomial even though num/den is not.
  Poly substitute_fraction(Var var, const Poly& num, const Poly& den, unsigned total_degree) const;

  std::string to_string() const;

 private:
  VarSet vars_;
  TermMap terms_;
};

Exponents exps(std::initializer_list<std::pair<Var, unsigned>> powers);

// ---------------------------------------------------------------------------
// Closed-form counting functions (pure, not memoized)
// ---------------------------------------------------------------------------

/// C(n,k); zero for k < 0 or k > n. Throws InvalidArgument for n < 0.
ExactInt binomial(long n, long k);

ExactInt catalan(long k);

/// N(n,k) = (1/n) C(n,k) C(n,k-1); zero outside 1 <= k <= n.
ExactInt narayana(long n, long k);

/// M(n,k) = C(n,2k) C_k: Motzkin paths of size n with k up steps.
ExactInt motzkin_poly_coeff(long n, long k);

ExactInt motzkin_number(long n);

/// C(u;p) = (p/u) C(2u-p-1, u-1): Dyck paths with u up steps and p
/// irreducible factors.
ExactInt catalan_convolution(long u, long p);

/// F(a,b) = C(a-b-1, b), zero when the top index is negative.
ExactInt fib_poly_coeff(long a, long b);

/// M(r0;n,u): Motzkin paths of size n with u >= 1 up steps and r0 horizontal
/// steps on the axis, closed form (r0+1)/(n+1) C(n+1,u) F(n-r0-1, u-1).
ExactInt level0_count(long r0, long n, long u);

/// Same count via the sum over irreducible Dyck factors p:
/// sum_p C(r0+p, r0) C(n-r0-p-1, n-2u-r0) C(u;p).
ExactInt level0_count_sumform(long r0, long n, long u);

/// M(r0;n) = sum_u M(r0;n,u), with M(n;n) = 1. Throws for r0 > n.
ExactInt level0_total(long r0, long n);

/// sum_r0 r0 M(r0;n), computed as the Motzkin self-convolution
/// sum_{i+j=n-1} M_i M_j.
ExactInt level0_weighted_sum(long n);

/// g(h,I,ell): island diagrams with h hairpins, I islands and ell base pairs.
///
/// Expanding y^{h+1}(1+y)^{2ell-1-h} by the binomial theorem, the coefficient
/// of y^I is C(2ell-1-h, I-h-1): h+1 islands are forced (one left of every
/// hairpin blank plus the closing one) and each of the 2ell-1-h optional gaps
/// that receives a blank adds one more.
ExactInt island_count(long h, long I, long ell);

// ---------------------------------------------------------------------------
// Memoized front end
// ---------------------------------------------------------------------------

/// Per-instance memo tables over the pure counting functions. Lookups are
/// guarded by a mutex, so one instance can be shared between threads; two
/// instances never share state.
class CountingCache {
 public:
  ExactInt binomial(long n, long k);
  ExactInt motzkin_number(long n);
  ExactInt level0_count(long r0, long n, long u);
  ExactInt level0_total(long r0, long n);

  std::size_t entries() const;

 private:
  struct KeyHash {
    std::size_t operator()(const std::tuple<long, long, long>& k) const noexcept;
  };
  using Table = std::unordered_map<std::tuple<long, long, long>, ExactInt, KeyHash>;

  template <typename F>
  ExactInt lookup(Table& table, const std::tuple<long, long, long>& key, F&& compute);

  mutable std::mutex mutex_;
  Table binomials_;
  Table motzkin_;
  Table level0_;
  Table level0_totals_;
};

}  // namespace shapeforge
