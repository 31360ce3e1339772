#pragma once

/**
 * @file series.hpp
 * @brief Exact truncated power series over Rational or Poly coefficients, the
 *        generating functions built from them, and exact identity checks.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shapeforge/error.hpp"
#include "shapeforge/exact.hpp"

namespace shapeforge {

namespace detail {

inline Rational one_like(const Rational&) { return 1; }
inline Poly one_like(const Poly& p) { return Poly(p.vars(), Rational(1)); }
inline Rational zero_like(const Rational&) { return 0; }
inline Poly zero_like(const Poly& p) { return Poly(p.vars()); }

inline std::optional<Rational> as_constant(const Rational& r) { return r; }
inline std::optional<Rational> as_constant(const Poly& p) {
  if (!p.is_constant()) return std::nullopt;
  return p.constant_term();
}

}  // namespace detail

/// a_0 + a_1 s + ... + a_N s^N in the series variable s, coefficients in R
/// (Rational, or Poly over the remaining variables). Coefficients beyond the
/// order are unknown, so binary operations truncate to the smaller order.
template <typename R>
class TruncatedSeries {
 public:
  TruncatedSeries(Var variable, int order, const R& zero)
      : var_(variable), coeffs_(static_cast<std::size_t>(order < 0 ? 0 : order) + 1, zero) {
    if (order < 0) throw Error(ErrorCode::InvalidArgument, "series order must be nonnegative");
  }

  Var variable() const { return var_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const R& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  R& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<R>& coefficients() const { return coeffs_; }

  TruncatedSeries truncated(int order) const {
    TruncatedSeries r(var_, order, detail::zero_like(coeffs_[0]));
    for (int k = 0; k <= std::min(order, this->order()); ++k) r[k] = (*this)[k];
    return r;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    shrink_to(o.order());
    for (int k = 0; k <= order(); ++k) (*this)[k] += o[k];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    shrink_to(o.order());
    for (int k = 0; k <= order(); ++k) (*this)[k] -= o[k];
    return *this;
  }
  TruncatedSeries& operator*=(const R& c) {
    for (auto& a : coeffs_) a = a * c;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const R& c) { return a *= c; }

  TruncatedSeries scaled(const Rational& c) const {
    TruncatedSeries r = *this;
    for (auto& a : r.coeffs_) a = a * c;
    return r;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries r(a.var_, n, detail::zero_like(a.coeffs_[0]));
    for (int i = 0; i <= n; ++i) {
      if (is_zero(a[i])) continue;
      for (int j = 0; i + j <= n; ++j) {
        if (!is_zero(b[j])) r[i + j] += a[i] * b[j];
      }
    }
    return r;
  }

  /// Multiplies by s^k, dropping terms past the order.
  TruncatedSeries shifted(int k) const {
    TruncatedSeries r(var_, order(), detail::zero_like(coeffs_[0]));
    for (int i = 0; i + k <= order(); ++i) r[i + k] = (*this)[i];
    return r;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
  }

 private:
  static bool is_zero(const Rational& r) { return r == 0; }
  static bool is_zero(const Poly& p) { return p.is_zero(); }
  void shrink_to(int order) {
    if (order < this->order()) coeffs_.resize(static_cast<std::size_t>(order) + 1);
  }

  Var var_;
  std::vector<R> coeffs_;
};

/// Multiplicative inverse; the constant term must be a nonzero constant.
template <typename R>
TruncatedSeries<R> series_inverse(const TruncatedSeries<R>& s) {
  const auto c = detail::as_constant(s[0]);
  if (!c || *c == 0) {
    throw Error(ErrorCode::NonUnitConstantTerm, "series constant term is not invertible");
  }
  const Rational inv = 1 / *c;
  TruncatedSeries<R> r(s.variable(), s.order(), detail::zero_like(s[0]));
  r[0] = detail::one_like(s[0]) * inv;
  for (int n = 1; n <= s.order(); ++n) {
    R acc = detail::zero_like(s[0]);
    for (int k = 1; k <= n; ++k) acc += s[k] * r[n - k];
    r[n] = acc * Rational(-inv);
  }
  return r;
}

/// Square root with constant term 1 by Newton's iteration
/// r <- (r + s/r)/2, doubling the working order each round. The result is
/// squared back and compared with s before it is returned.
template <typename R>
TruncatedSeries<R> series_sqrt(const TruncatedSeries<R>& s) {
  const auto c = detail::as_constant(s[0]);
  if (!c || *c != 1) throw Error(ErrorCode::NonUnitConstantTerm, "series constant term is not 1");
  const Rational half(1, 2);
  TruncatedSeries<R> r(s.variable(), 0, detail::zero_like(s[0]));
  r[0] = detail::one_like(s[0]);
  int prec = 0;
  while (prec < s.order()) {
    prec = std::min(2 * prec + 1, s.order());
    TruncatedSeries<R> cur = r.truncated(prec);
    const auto target = s.truncated(prec);
    r = (cur + target * series_inverse(cur)) * (detail::one_like(s[0]) * half);
  }
  if (r * r != s) {
    throw Error(ErrorCode::DivisibilityFailure, "series square root failed its squaring check");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Generating functions
// ---------------------------------------------------------------------------

/// m(v,w) = (1 - w - sqrt((1-w)^2 - 4 v w^2)) / (2 v w^2), in w up to the
/// given order. Coefficients are polynomials in v, or constants when with_v
/// is false (v = 1).
TruncatedSeries<Poly> expand_motzkin_gf(int order, bool with_v);

/// Same expansion at v = 1 with plain rational coefficients.
TruncatedSeries<Rational> expand_motzkin_numbers(int order);

enum class GForm { narayana, closed, motzkin2 };

std::string_view to_string(GForm form) noexcept;

/// G(x,y,z) in z up to the given order, coefficients in x and y. The closed
/// form computes the numerator series, requires its z^0 coefficient to vanish
/// (DivisibilityFailure otherwise), shifts by one and divides exactly by the
/// polynomial denominator. Throws ResourceGuard above order 24.
TruncatedSeries<Poly> expand_G(int order, GForm form);

/// m(t;w) at v = 1 with coefficients polynomial in t: the coefficient of
/// t^r0 w^n is the number of Motzkin paths of size n with r0 horizontal steps
/// on the axis. Built as sum_k t^k w^k A^(k+1) with A = 1/(1 - w^2 m).
/// Throws ResourceGuard above order 200.
TruncatedSeries<Poly> expand_level0_gf(int order);

/// A/(1 - t w A) at a fixed rational t; no order guard.
TruncatedSeries<Rational> expand_level0_gf_at(int order, const Rational& t);

/// A(w) = 1/(1 - w^2 m(1,w)).
TruncatedSeries<Rational> expand_level0_base(int order);

// ---------------------------------------------------------------------------
// Compatible pi-shapes
// ---------------------------------------------------------------------------

/// pi_lambda(r0; nu) for nu = 0..nu_max. A path class (n, u, r0) is placed at
/// nu' = (lambda+1) n + (1-lambda) u + lambda + 1 and the table is then summed
/// cumulatively in nu.
class CompatibleTable {
 public:
  CompatibleTable(int lambda, int nu_max);

  int lambda() const { return lambda_; }
  int nu_max() const { return nu_max_; }
  int max_r0() const { return static_cast<int>(counts_.empty() ? 0 : counts_[0].size()) - 1; }

  /// pi_lambda(r0; nu); zero for r0 beyond the table.
  ExactInt at(int r0, int nu) const;
  /// pi_lambda(nu) = sum over r0.
  ExactInt total(int nu) const;

 private:
  int lambda_;
  int nu_max_;
  std::vector<std::vector<ExactInt>> counts_;  // [nu][r0], cumulative
};

/// Requires lambda >= 1 and 0 <= nu_max <= 2000.
CompatibleTable compatible_counts(int lambda, int nu_max);

// ---------------------------------------------------------------------------
// Identity checks
// ---------------------------------------------------------------------------

struct IdentityInstance {
  long parameter = 0;
  bool passed = false;
};

struct IdentityReport {
  std::string name;
  long lo = 0;
  long hi = 0;
  std::optional<int> lambda;
  std::vector<IdentityInstance> instances;
  std::optional<std::string> counterexample;  // first failure, described

  bool passed() const { return !counterexample.has_value(); }
  std::string to_json() const;
};

/// Names: ouriden, coker1, coker2, touchard, chu_vandermonde, parity_m0m1,
/// pi_parity, G_forms_agree. The parameter runs over lo..hi (ell, n or k).
/// pi_parity uses lambda (default 1). Throws UnknownIdentity.
IdentityReport verify_identity(std::string_view name, long lo, long hi, int lambda = 1);

/// Every identity name in a fixed order.
const std::vector<std::string>& identity_names();

/// Both sides of the ouriden identity at a given ell, as polynomials in x, y.
std::pair<Poly, Poly> ouriden_sides(long ell);

}  // namespace shapeforge
