#pragma once

/**
 * @file asymptotics.hpp
 * @brief Dominant singularity of the compatible-shape generating function,
 *        leading-order asymptotics for Motzkin and pi-shape counts, and
 *        finite-size convergence tables.
 *
 * The singular polynomial is p_lambda(z) = z^(2l+2) - 4 z^(l+3) - 2 z^(l+1) + 1.
 * Large counts and asymptotics are compared in log space, so nothing here
 * overflows a double even when the values themselves would.
 */

#include <optional>
#include <string>
#include <vector>

#include "shapeforge/exact.hpp"

namespace shapeforge {

/// Exact value of p_lambda at a rational point.
Rational singular_polynomial(int lambda, const Rational& z);
double singular_polynomial(int lambda, double z);

struct DominantSingularity {
  int lambda = 0;
  Rational lo;               // p(lo) and p(hi) have opposite signs
  Rational hi;
  double zeta = 0;           // midpoint of [lo, hi]
  bool odd = false;          // odd lambda: p is even and -zeta is a root too
  std::vector<double> cofactor;      // Q (even) or R (odd), ascending powers; empty until deflated
  double cofactor_at_zeta = 0;       // Q(zeta) or R(zeta)
  double remainder = 0;              // largest synthetic-division remainder
};

/// Scans (0,1) in steps of 1/1000 with exact rational signs, then bisects
/// the first sign change down to width 1e-12. Requires 1 <= lambda <= 32;
/// throws NoRootFound if no sign change turns up.
DominantSingularity find_zeta(int lambda);

/// Divides p by (1 - z/zeta), and also by (1 + z/zeta) when lambda is odd,
/// in doubles. Throws LargeRemainder if a remainder exceeds 1e-8.
DominantSingularity deflate(const DominantSingularity& sing);

/// find_zeta followed by deflate, memoized per lambda.
const DominantSingularity& dominant_singularity(int lambda);

/// Limit of M(r0;n)/M_n: (r0+1)/2^(r0+2).
double asym_level0(int r0);

/// a = zeta^2/(1+zeta^2) and b = (1+zeta^(l+1))/(2(1+zeta^2)).
struct PiDistributionConstants {
  double a = 0;
  double b = 0;
};
PiDistributionConstants pi_constants(int lambda);

/// Limit of pi_lambda(r0;nu)/pi_lambda(nu): (r0+1) a b^r0.
double asym_pi(int lambda, int r0);
/// Limit of the expected r0: (1 - zeta^(l+1))/zeta^2.
double asym_pi_expected(int lambda);
/// The same limit through the distribution: sum (r0) (r0+1) a b^r0 = 2b/(1-b).
double asym_pi_expected_from_distribution(int lambda);

// ---------------------------------------------------------------------------
// Counts against their asymptotics
// ---------------------------------------------------------------------------

struct AsymptoticParams {
  long n = 0;       // path size (Motzkin targets)
  long r0 = 0;
  int lambda = 1;   // pi targets
  long nu = 0;      // sequence length (pi targets)
};

struct AsymptoticReport {
  std::string target;
  AsymptoticParams params;
  ExactInt exact;
  double log_exact = 0;        // natural log; -inf for a zero count
  double log_asymptotic = 0;
  double ratio = 0;            // exact / asymptotic

  /// Asymptotic value in decimal, 12 significant digits, any magnitude.
  std::string asymptotic_text() const;
  std::string to_json() const;
};

/// Targets: motzkin_number (n), level0_total (r0, n), level0_weighted_sum (n),
/// pi_total (lambda, nu), pi_r0 (lambda, r0, nu), pi_weighted_sum (lambda, nu).
/// Throws UnsupportedTarget for anything else and InvalidArgument for n or
/// nu below 1.
AsymptoticReport asym_count(const std::string& target, const AsymptoticParams& params);

const std::vector<std::string>& asymptotic_targets();

// ---------------------------------------------------------------------------
// Convergence tables
// ---------------------------------------------------------------------------

enum class Family { level0, pi };

struct ConvergenceRow {
  int r0 = 0;
  Rational exact;        // normalized frequency
  double asymptotic = 0;
  double deviation = 0;  // |exact - asymptotic|
};

struct ConvergenceReport {
  Family family = Family::level0;
  int lambda = 0;        // pi only
  long size = 0;         // n (level0) or nu (pi)
  std::vector<ConvergenceRow> rows;
  Rational expected_exact;          // sum r0 * frequency over all r0
  double expected_asymptotic = 0;

  double max_deviation() const;
  std::string to_csv() const;
  std::string to_json() const;
};

/// Exact normalized distribution of r0 against its limit for r0 = 0..r0_max.
/// For level0 the size is n (0 allowed); for pi it is nu (needs a nonzero
/// pi_lambda(nu), nu <= 2000).
ConvergenceReport convergence_report(Family family, long size, int r0_max, int lambda = 4);

std::vector<ConvergenceReport> convergence_reports(Family family, const std::vector<long>& sizes, int r0_max,
                                                   int lambda = 4);

/// "%.12g"-style rendering used by every report.
std::string format_float(double value);

}  // namespace shapeforge
