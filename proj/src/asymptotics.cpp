#include "shapeforge/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "shapeforge/error.hpp"
#include "shapeforge/series.hpp"

namespace shapeforge {

namespace {

// Ascending coefficients of p_lambda.
std::vector<long> singular_coefficients(int lambda) {
  std::vector<long> c(static_cast<std::size_t>(2 * lambda + 3), 0);
  c[0] = 1;
  c[std::size_t(lambda + 1)] -= 2;
  c[std::size_t(lambda + 3)] -= 4;
  c[std::size_t(2 * lambda + 2)] += 1;
  return c;
}

void check_lambda(int lambda) {
  if (lambda < 1 || lambda > 32) throw Error(ErrorCode::InvalidArgument, "lambda must lie in 1..32");
}

int sign(const Rational& r) { return sgn(r); }

double log_of(const ExactInt& v) {
  if (v <= 0) return -std::numeric_limits<double>::infinity();
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::numbers::ln2;
}

// -1/Gamma(-1/2) = 1/(2 sqrt(pi)).
const double kLogTransfer = -std::log(2.0 * std::sqrt(std::numbers::pi));

double round12(double v) {
  if (!std::isfinite(v)) return v;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

nlohmann::ordered_json json_number(double v) {
  if (!std::isfinite(v)) return format_float(v);
  return round12(v);
}

}  // namespace

std::string format_float(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

Rational singular_polynomial(int lambda, const Rational& z) {
  const auto c = singular_coefficients(lambda);
  Rational acc = 0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
  return acc;
}

double singular_polynomial(int lambda, double z) {
  const auto c = singular_coefficients(lambda);
  double acc = 0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + double(c[k]);
  return acc;
}

DominantSingularity find_zeta(int lambda) {
  check_lambda(lambda);
  DominantSingularity s;
  s.lambda = lambda;
  s.odd = lambda % 2 == 1;

  Rational prev = 0;
  bool found = false;
  for (int k = 1; k <= 1000 && !found; ++k) {
    const Rational z(k, 1000);
    const int sg = sign(singular_polynomial(lambda, z));
    if (sg == 0) {
      s.lo = s.hi = z;
      found = true;
    } else if (sg < 0) {
      s.lo = prev;
      s.hi = z;
      found = true;
    }
    prev = z;
  }
  if (!found) throw Error(ErrorCode::NoRootFound, "no sign change of the singular polynomial on (0,1]");

  const Rational width(1, 1000000000000L);
  while (s.hi - s.lo > width) {
    Rational mid = (s.lo + s.hi) / 2;
    const int sg = sign(singular_polynomial(lambda, mid));
    if (sg == 0) {
      s.lo = s.hi = mid;
    } else if (sg > 0) {
      s.lo = mid;
    } else {
      s.hi = mid;
    }
  }
  s.zeta = Rational((s.lo + s.hi) / 2).get_d();
  return s;
}

DominantSingularity deflate(const DominantSingularity& sing) {
  DominantSingularity s = sing;
  const auto c = singular_coefficients(s.lambda);
  const double zeta = s.zeta;

  // Synthetic division by (z - r); returns the ascending quotient, stores
  // the remainder.
  auto divide = [](const std::vector<double>& p, double r, double& rem) {
    std::vector<double> q(p.size() - 1, 0.0);
    double carry = 0;
    for (std::size_t k = p.size(); k-- > 1;) {
      carry = p[k] + carry * r;
      q[k - 1] = carry;
    }
    rem = p[0] + carry * r;
    return q;
  };

  std::vector<double> p(c.begin(), c.end());
  double rem1 = 0, rem2 = 0;
  auto q = divide(p, zeta, rem1);
  double scale = -zeta;  // p = (1 - z/zeta) * (-zeta q)
  if (s.odd) {
    q = divide(q, -zeta, rem2);
    scale = -zeta * zeta;  // p = (1 - z/zeta)(1 + z/zeta) * (-zeta^2 q)
  }
  for (auto& v : q) v *= scale;
  s.remainder = std::max(std::abs(rem1), std::abs(rem2));
  if (s.remainder > 1e-8) {
    throw Error(ErrorCode::LargeRemainder, "deflation remainder " + format_float(s.remainder));
  }
  s.cofactor = std::move(q);
  double acc = 0;
  for (std::size_t k = s.cofactor.size(); k-- > 0;) acc = acc * zeta + s.cofactor[k];
  s.cofactor_at_zeta = acc;
  return s;
}

const DominantSingularity& dominant_singularity(int lambda) {
  static std::mutex mutex;
  static std::map<int, DominantSingularity> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(lambda);
  if (it == cache.end()) it = cache.emplace(lambda, deflate(find_zeta(lambda))).first;
  return it->second;
}

double asym_level0(int r0) {
  if (r0 < 0) throw Error(ErrorCode::InvalidArgument, "r0 must be nonnegative");
  return (r0 + 1) / std::ldexp(1.0, r0 + 2);
}

PiDistributionConstants pi_constants(int lambda) {
  const double z = dominant_singularity(lambda).zeta;
  const double z2 = z * z;
  return {z2 / (1 + z2), (1 + std::pow(z, lambda + 1)) / (2 * (1 + z2))};
}

double asym_pi(int lambda, int r0) {
  if (r0 < 0) throw Error(ErrorCode::InvalidArgument, "r0 must be nonnegative");
  const auto [a, b] = pi_constants(lambda);
  return (r0 + 1) * a * std::pow(b, r0);
}

double asym_pi_expected(int lambda) {
  const double z = dominant_singularity(lambda).zeta;
  return (1 - std::pow(z, lambda + 1)) / (z * z);
}

double asym_pi_expected_from_distribution(int lambda) {
  const double b = pi_constants(lambda).b;
  return 2 * b / (1 - b);
}

// ---------------------------------------------------------------------------
// asym_count
// ---------------------------------------------------------------------------

const std::vector<std::string>& asymptotic_targets() {
  static const std::vector<std::string> t = {"motzkin_number", "level0_total",  "level0_weighted_sum",
                                             "pi_total",       "pi_r0",         "pi_weighted_sum"};
  return t;
}

namespace {

// log of 3^(n+3/2) / (sqrt(pi) n^(3/2)).
double log_motzkin_scale(long n) {
  const double dn = double(n);
  return (dn + 1.5) * std::log(3.0) - 0.5 * std::log(std::numbers::pi) - 1.5 * std::log(dn);
}

// log of zeta^(-shift) * sqrt(c) * F * nu^(-3/2) / (2 sqrt(pi)), where for
// even lambda c = Q(zeta) and F = 1/(2(1-zeta)); for odd lambda c = 2 R(zeta)
// and F = (1/(1-zeta) + (-1)^nu/(1+zeta)) / 2.
double log_pi_scale(const DominantSingularity& s, long nu, long shift) {
  const double z = s.zeta;
  double f;
  double c = s.cofactor_at_zeta;
  if (s.odd) {
    c *= 2;
    f = (1 / (1 - z) + ((nu % 2 == 0) ? 1.0 : -1.0) / (1 + z)) / 2;
  } else {
    f = 1 / (2 * (1 - z));
  }
  if (!(c > 0) || !(f > 0)) {
    throw Error(ErrorCode::InvalidArgument, "asymptotic constant is not positive");
  }
  return -double(shift) * std::log(z) + 0.5 * std::log(c) + std::log(f) - 1.5 * std::log(double(nu)) + kLogTransfer;
}

}  // namespace

AsymptoticReport asym_count(const std::string& target, const AsymptoticParams& params) {
  const auto& targets = asymptotic_targets();
  if (std::find(targets.begin(), targets.end(), target) == targets.end()) {
    throw Error(ErrorCode::UnsupportedTarget, "unsupported target '" + target + "'");
  }
  AsymptoticReport r;
  r.target = target;
  r.params = params;
  const bool is_pi = target.rfind("pi_", 0) == 0;
  if (is_pi) {
    if (params.nu < 1 || params.nu > 2000) throw Error(ErrorCode::InvalidArgument, "nu must lie in 1..2000");
  } else if (params.n < 1) {
    throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  }
  if (params.r0 < 0) throw Error(ErrorCode::InvalidArgument, "r0 must be nonnegative");

  if (target == "motzkin_number") {
    r.exact = motzkin_number(params.n);
    r.log_asymptotic = log_motzkin_scale(params.n) - std::log(2.0);
  } else if (target == "level0_total") {
    if (params.r0 > params.n) throw Error(ErrorCode::InvalidArgument, "r0 exceeds n");
    r.exact = level0_total(params.r0, params.n);
    r.log_asymptotic = log_motzkin_scale(params.n) + std::log(double(params.r0 + 1)) -
                       double(params.r0 + 3) * std::numbers::ln2;
  } else if (target == "level0_weighted_sum") {
    r.exact = level0_weighted_sum(params.n);
    r.log_asymptotic = log_motzkin_scale(params.n);
  } else {
    check_lambda(params.lambda);
    const auto& s = dominant_singularity(params.lambda);
    const auto table = compatible_counts(params.lambda, int(params.nu));
    const int nu = int(params.nu);
    const double z = s.zeta;
    if (target == "pi_total") {
      r.exact = table.total(nu);
      r.log_asymptotic = log_pi_scale(s, params.nu, params.nu + 2);
    } else if (target == "pi_weighted_sum") {
      r.exact = 0;
      for (int k = 1; k <= table.max_r0(); ++k) r.exact += k * table.at(k, nu);
      r.log_asymptotic = log_pi_scale(s, params.nu, params.nu + 4) + std::log(1 - std::pow(z, params.lambda + 1));
    } else {
      const long k = params.r0;
      r.exact = table.at(int(k), nu);
      const double z2 = z * z;
      r.log_asymptotic = log_pi_scale(s, params.nu, params.nu) + std::log(double(k + 1)) +
                         double(k) * std::log(1 + std::pow(z, params.lambda + 1)) -
                         double(k + 1) * std::log(1 + z2) - double(k) * std::numbers::ln2;
    }
  }
  r.log_exact = log_of(r.exact);
  r.ratio = std::exp(r.log_exact - r.log_asymptotic);
  return r;
}

std::string AsymptoticReport::asymptotic_text() const {
  const double l10 = log_asymptotic / std::numbers::ln10;
  if (std::abs(l10) < 300) return format_float(std::exp(log_asymptotic));
  double e = std::floor(l10);
  double mant = std::pow(10.0, l10 - e);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.11f", mant);
  if (std::strtod(buf, nullptr) >= 10.0) {
    mant /= 10;
    e += 1;
  }
  std::snprintf(buf, sizeof buf, "%.12ge%+.0f", mant, e);
  return buf;
}

std::string AsymptoticReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "shapeforge/1";
  j["target"] = target;
  auto& p = j["params"];
  if (target.rfind("pi_", 0) == 0) {
    p["lambda"] = params.lambda;
    p["nu"] = params.nu;
    if (target == "pi_r0") p["r0"] = params.r0;
  } else {
    p["n"] = params.n;
    if (target == "level0_total") p["r0"] = params.r0;
  }
  j["exact"] = exact.get_str();
  j["asymptotic"] = asymptotic_text();
  j["ratio"] = json_number(ratio);
  return j.dump(2);
}

// ---------------------------------------------------------------------------
// Convergence tables
// ---------------------------------------------------------------------------

double ConvergenceReport::max_deviation() const {
  double m = 0;
  for (const auto& row : rows) m = std::max(m, row.deviation);
  return m;
}

std::string ConvergenceReport::to_csv() const {
  std::ostringstream os;
  os << "r0,exact,asymptotic,deviation\n";
  for (const auto& row : rows) {
    os << row.r0 << ',' << format_float(row.exact.get_d()) << ',' << format_float(row.asymptotic) << ','
       << format_float(row.deviation) << '\n';
  }
  return os.str();
}

std::string ConvergenceReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "shapeforge/1";
  j["family"] = family == Family::level0 ? "level0" : "pi";
  if (family == Family::pi) {
    j["lambda"] = lambda;
    j["nu"] = size;
  } else {
    j["n"] = size;
  }
  auto& rs = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    rs.push_back({{"r0", row.r0},
                  {"exact", json_number(row.exact.get_d())},
                  {"asymptotic", json_number(row.asymptotic)},
                  {"deviation", json_number(row.deviation)}});
  }
  j["max_deviation"] = json_number(max_deviation());
  j["expected_r0"] = {{"exact", json_number(expected_exact.get_d())},
                      {"asymptotic", json_number(expected_asymptotic)}};
  return j.dump(2);
}

ConvergenceReport convergence_report(Family family, long size, int r0_max, int lambda) {
  if (r0_max < 0) throw Error(ErrorCode::InvalidArgument, "r0_max must be nonnegative");
  if (size < 0) throw Error(ErrorCode::InvalidArgument, "size must be nonnegative");
  ConvergenceReport rep;
  rep.family = family;
  rep.size = size;
  if (family == Family::level0) {
    const ExactInt total = motzkin_number(size);
    for (int r0 = 0; r0 <= r0_max; ++r0) {
      ConvergenceRow row;
      row.r0 = r0;
      row.exact = r0 <= size ? Rational(level0_total(r0, size), total) : Rational(0);
      row.exact.canonicalize();
      row.asymptotic = asym_level0(r0);
      row.deviation = std::abs(row.exact.get_d() - row.asymptotic);
      rep.rows.push_back(row);
    }
    rep.expected_exact = Rational(level0_weighted_sum(size), total);
    rep.expected_exact.canonicalize();
    rep.expected_asymptotic = 2;
  } else {
    check_lambda(lambda);
    rep.lambda = lambda;
    if (size > 2000) throw Error(ErrorCode::InvalidArgument, "nu must lie in 0..2000");
    const auto table = compatible_counts(lambda, int(size));
    const ExactInt total = table.total(int(size));
    if (total == 0) throw Error(ErrorCode::InvalidArgument, "no compatible pi-shape at this nu");
    for (int r0 = 0; r0 <= r0_max; ++r0) {
      ConvergenceRow row;
      row.r0 = r0;
      row.exact = Rational(table.at(r0, int(size)), total);
      row.exact.canonicalize();
      row.asymptotic = asym_pi(lambda, r0);
      row.deviation = std::abs(row.exact.get_d() - row.asymptotic);
      rep.rows.push_back(row);
    }
    ExactInt weighted = 0;
    for (int k = 1; k <= table.max_r0(); ++k) weighted += k * table.at(k, int(size));
    rep.expected_exact = Rational(weighted, total);
    rep.expected_exact.canonicalize();
    rep.expected_asymptotic = asym_pi_expected(lambda);
  }
  return rep;
}

std::vector<ConvergenceReport> convergence_reports(Family family, const std::vector<long>& sizes, int r0_max,
                                                   int lambda) {
  std::vector<ConvergenceReport> out;
  out.reserve(sizes.size());
  for (long s : sizes) out.push_back(convergence_report(family, s, r0_max, lambda));
  return out;
}

}  // namespace shapeforge
