#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "shapeforge/asymptotics.hpp"
#include "shapeforge/error.hpp"
#include "shapeforge/exact.hpp"
#include "shapeforge/paths.hpp"
#include "shapeforge/rna.hpp"
#include "shapeforge/series.hpp"

namespace shapeforge::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSchema = "shapeforge/1";
constexpr long kCountLimit = 2000;

enum class Format { plain, csv, json };

/// Raised for bad flag combinations found after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json json_number(double v) {
  if (!std::isfinite(v)) return format_float(v);
  return std::strtod(format_float(v).c_str(), nullptr);
}

// A table cell: small integers, exact integers (kept as decimal text so JSON
// readers never lose digits), floats and free text.
struct Exact {
  std::string digits;
};
using Cell = std::variant<long, Exact, double, std::string>;

std::string cell_text(const Cell& c) {
  if (auto* v = std::get_if<long>(&c)) return std::to_string(*v);
  if (auto* v = std::get_if<Exact>(&c)) return v->digits;
  if (auto* v = std::get_if<double>(&c)) return format_float(*v);
  return std::get<std::string>(c);
}

Json cell_json(const Cell& c) {
  if (auto* v = std::get_if<long>(&c)) return *v;
  if (auto* v = std::get_if<Exact>(&c)) return v->digits;
  if (auto* v = std::get_if<double>(&c)) return json_number(*v);
  return std::get<std::string>(c);
}

Cell exact(const ExactInt& v) { return Exact{v.get_str()}; }

struct Table {
  Json meta = Json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  std::string render(Format f) const {
    std::ostringstream os;
    if (f == Format::json) {
      Json j;
      j["schema"] = kSchema;
      for (const auto& [k, v] : meta.items()) j[k] = v;
      j["columns"] = columns;
      auto& rs = j["rows"] = Json::array();
      for (const auto& row : rows) {
        Json r = Json::array();
        for (const auto& c : row) r.push_back(cell_json(c));
        rs.push_back(std::move(r));
      }
      os << j.dump(2) << '\n';
      return os.str();
    }
    const char sep = f == Format::csv ? ',' : ' ';
    auto field = [&](const std::string& s) {
      if (f != Format::csv || s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string q = "\"";
      for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
      return q + "\"";
    };
    auto line = [&](const auto& items, auto text) {
      for (std::size_t i = 0; i < items.size(); ++i) os << (i ? std::string(1, sep) : "") << field(text(items[i]));
      os << '\n';
    };
    line(columns, [](const std::string& s) { return s; });
    for (const auto& row : rows) line(row, cell_text);
    return os.str();
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
  return s;
}

void check_limit(const char* flag, long value, long limit) {
  if (value > limit) {
    throw Error(ErrorCode::ResourceGuard,
                std::string(flag) + " = " + std::to_string(value) + " exceeds the guard " + std::to_string(limit));
  }
  if (value < 0) throw Error(ErrorCode::InvalidArgument, std::string(flag) + " must be nonnegative");
}

struct Options {
  std::optional<std::string> in;
  std::optional<std::string> file;
  std::optional<std::string> path;
  std::optional<long> n;
  std::optional<long> ell;
  std::optional<int> lambda;
  std::optional<long> nu;
  std::optional<int> r0_max;
  std::optional<long> r0;
  std::optional<int> order;
  std::optional<long> lo;
  std::optional<long> hi;
  std::string level = "pi";
  std::string positional;
  std::string format_name = "plain";
  Format format = Format::plain;

  std::string input() const {
    if (path) return *path;
    if (in) return *in;
    if (file) return read_file(*file);
    throw UsageError("one of --in or --file is required");
  }
  template <typename T>
  T need(const std::optional<T>& v, const char* flag) const {
    if (!v) throw UsageError(std::string(flag) + " is required");
    return *v;
  }
};

const std::map<std::string, Format> kFormats{{"plain", Format::plain}, {"csv", Format::csv}, {"json", Format::json}};

// ---------------------------------------------------------------------------
// Structures
// ---------------------------------------------------------------------------

std::string cmd_validate(const Options& o) {
  const auto ss = parse_and_validate(o.input());
  const long pairs = static_cast<long>(ss.pairs().size());
  if (o.format == Format::json) {
    Json j;
    j["schema"] = kSchema;
    j["structure"] = ss.text();
    j["valid"] = true;
    j["length"] = ss.size();
    j["base_pairs"] = pairs;
    return j.dump(2) + "\n";
  }
  Table t;
  t.columns = {"valid", "length", "base_pairs"};
  t.rows.push_back({std::string("true"), long(ss.size()), pairs});
  return t.render(o.format);
}

std::optional<std::string> pi_text(const SecondaryStructure& ss) {
  try {
    return to_pi(to_pi_prime(ss)).text();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::EmptyResult) return std::nullopt;
    throw;
  }
}

std::string cmd_analyze(const Options& o) {
  const auto ss = parse_and_validate(o.input());
  const auto r = analyze_elements(ss);
  const auto pi = pi_text(ss);
  std::vector<std::pair<std::string, Cell>> fields{
      {"length", long(ss.size())},
      {"base_pairs", long(ss.pairs().size())},
      {"hairpins", long(r.hairpins.size())},
      {"bulges", long(r.bulges.size())},
      {"interior_loops", long(r.interior_loops.size())},
      {"multiloops", long(r.multiloops.size())},
      {"stacks", long(r.stacks.size())},
      {"islands", long(r.islands.size())},
      {"tails", long(r.tails.size())},
      {"external_components", long(r.external.components)},
      {"island_diagram", to_island_diagram(ss).text()},
      {"pi_prime", to_pi_prime(ss).text()},
      {"pi", pi.value_or("")},
  };
  if (o.format == Format::json) {
    Json j;
    j["schema"] = kSchema;
    j["structure"] = ss.text();
    for (const auto& [k, v] : fields) j[k] = cell_json(v);
    if (!pi) j["pi"] = nullptr;
    return j.dump(2) + "\n";
  }
  Table t;
  t.columns = {"field", "value"};
  for (const auto& [k, v] : fields) t.rows.push_back({k, cell_text(v)});
  return t.render(o.format);
}

std::string cmd_abstract(const Options& o) {
  const auto ss = parse_and_validate(o.input());
  std::string shape;
  if (o.level == "island") {
    shape = to_island_diagram(ss).text();
  } else if (o.level == "pi-prime") {
    shape = to_pi_prime(ss).text();
  } else {
    shape = to_pi(to_pi_prime(ss)).text();
  }
  if (o.format == Format::json) {
    Json j;
    j["schema"] = kSchema;
    j["structure"] = ss.text();
    j["level"] = o.level;
    j["shape"] = shape;
    return j.dump(2) + "\n";
  }
  if (o.format == Format::csv) return "level,shape\n" + o.level + "," + shape + "\n";
  return shape + "\n";
}

std::string cmd_bijection(const Options& o) {
  const std::string text = o.input();
  std::string result;
  if (o.positional == "encode2") {
    result = encode2(parse_path(text, PathKind::Motzkin2)).text();
  } else if (o.positional == "decode2") {
    result = decode2(BracketString::parse(text)).steps();
  } else if (o.positional == "encode1") {
    result = encode1(parse_path(text, PathKind::Motzkin1)).text();
  } else {
    result = decode1(std::string_view(text)).steps();
  }
  if (o.format == Format::json) {
    Json j;
    j["schema"] = kSchema;
    j["op"] = o.positional;
    j["input"] = text;
    j["output"] = result;
    return j.dump(2) + "\n";
  }
  if (o.format == Format::csv) return "op,input,output\n" + o.positional + "," + text + "," + result + "\n";
  return result + "\n";
}

// ---------------------------------------------------------------------------
// Tables
// ---------------------------------------------------------------------------

std::string cmd_count(const Options& o) {
  const std::string& family = o.positional;
  Table t;
  t.meta["family"] = family;
  if (family == "island" || family == "island_series") {
    std::vector<std::pair<long, Poly>> by_ell;
    if (family == "island") {
      const long ell = o.need(o.ell, "--ell");
      check_limit("--ell", ell, 200);
      t.meta["ell"] = ell;
      t.columns = {"h", "I", "count"};
      for (long h = 1; h <= ell; ++h) {
        for (long I = h + 1; I <= 2 * ell; ++I) {
          const auto c = island_count(h, I, ell);
          if (c != 0) t.rows.push_back({h, I, exact(c)});
        }
      }
      return t.render(o.format);
    }
    const int order = o.need(o.order, "--order");
    check_limit("--order", order, 24);
    t.meta["order"] = order;
    t.columns = {"ell", "h", "I", "count"};
    const auto g = expand_G(order, GForm::closed);
    for (int ell = 0; ell <= order; ++ell) {
      for (const auto& [e, c] : g[ell].terms()) {
        t.rows.push_back({long(ell), long(e[std::size_t(Var::x)]), long(e[std::size_t(Var::y)]), exact(c.get_num())});
      }
    }
    return t.render(o.format);
  }
  if (family == "motzkin_series") {
    const int order = o.need(o.order, "--order");
    check_limit("--order", order, kCountLimit);
    t.meta["order"] = order;
    t.columns = {"n", "count"};
    const auto m = expand_motzkin_numbers(order);
    for (int k = 0; k <= order; ++k) t.rows.push_back({long(k), exact(m[k].get_num())});
    return t.render(o.format);
  }
  if (family == "level0_series") {
    const int order = o.need(o.order, "--order");
    check_limit("--order", order, 200);
    t.meta["order"] = order;
    t.columns = {"n", "r0", "count"};
    const auto m = expand_level0_gf(order);
    for (int k = 0; k <= order; ++k) {
      for (const auto& [e, c] : m[k].terms()) t.rows.push_back({long(k), long(e[std::size_t(Var::t)]), exact(c.get_num())});
    }
    return t.render(o.format);
  }

  const long n = o.need(o.n, "--n");
  check_limit("--n", n, kCountLimit);
  t.meta["n"] = n;
  if (family == "catalan") {
    t.columns = {"k", "count"};
    for (long k = 0; k <= n; ++k) t.rows.push_back({k, exact(catalan(k))});
  } else if (family == "motzkin") {
    t.columns = {"n", "count"};
    for (long k = 0; k <= n; ++k) t.rows.push_back({k, exact(motzkin_number(k))});
  } else if (family == "narayana") {
    t.columns = {"k", "count"};
    for (long k = 1; k <= n; ++k) t.rows.push_back({k, exact(narayana(n, k))});
  } else if (family == "motzkin_poly") {
    t.columns = {"k", "count"};
    for (long k = 0; 2 * k <= n; ++k) t.rows.push_back({k, exact(motzkin_poly_coeff(n, k))});
  } else if (family == "level0") {
    t.columns = {"r0", "count"};
    const long r0_max = o.r0_max ? std::min<long>(*o.r0_max, n) : n;
    for (long r0 = 0; r0 <= r0_max; ++r0) t.rows.push_back({r0, exact(level0_total(r0, n))});
  } else {
    t.columns = {"n", "weighted_sum"};
    t.rows.push_back({n, exact(level0_weighted_sum(n))});
  }
  return t.render(o.format);
}

std::string cmd_compatible(const Options& o) {
  const int lambda = o.need(o.lambda, "--lambda");
  const long nu = o.need(o.nu, "--nu");
  check_limit("--nu", nu, kCountLimit);
  const int r0_max = o.r0_max.value_or(4);
  check_limit("--r0-max", r0_max, 64);
  const auto table = compatible_counts(lambda, static_cast<int>(nu));
  Table t;
  t.meta["lambda"] = lambda;
  t.meta["nu_max"] = nu;
  t.columns = {"nu", "total"};
  for (int r0 = 0; r0 <= r0_max; ++r0) t.columns.push_back("r0_" + std::to_string(r0));
  for (int v = 0; v <= nu; ++v) {
    std::vector<Cell> row{long(v), exact(table.total(v))};
    for (int r0 = 0; r0 <= r0_max; ++r0) row.push_back(exact(table.at(r0, v)));
    t.rows.push_back(std::move(row));
  }
  return t.render(o.format);
}

std::string cmd_distribution(const Options& o) {
  const bool pi = o.positional == "pi";
  const int r0_max = o.r0_max.value_or(8);
  check_limit("--r0-max", r0_max, 400);
  const int lambda = o.lambda.value_or(4);
  const long size = pi ? o.nu.value_or(200) : o.n.value_or(100);
  check_limit(pi ? "--nu" : "--n", size, kCountLimit);
  const auto rep = convergence_report(pi ? Family::pi : Family::level0, size, r0_max, lambda);
  if (o.format == Format::json) return rep.to_json() + "\n";
  if (o.format == Format::csv) return rep.to_csv();
  Table t;
  t.columns = {"r0", "exact", "asymptotic", "deviation"};
  for (const auto& row : rep.rows) t.rows.push_back({long(row.r0), row.exact.get_d(), row.asymptotic, row.deviation});
  return t.render(o.format);
}

std::string cmd_asymptotics(const Options& o) {
  if (o.positional == "singularity") {
    const int lambda = o.need(o.lambda, "--lambda");
    const auto& s = dominant_singularity(lambda);
    const auto c = pi_constants(lambda);
    const double er0 = asym_pi_expected(lambda);
    std::vector<std::pair<std::string, Cell>> fields{
        {"lambda", long(lambda)},
        {"zeta", s.zeta},
        {"bracket_lo", s.lo.get_d()},
        {"bracket_hi", s.hi.get_d()},
        {"symmetric_root", std::string(s.odd ? "true" : "false")},
        {"cofactor_at_zeta", s.cofactor_at_zeta},
        {"a", c.a},
        {"b", c.b},
        {"expected_r0", er0},
        {"expected_components", er0 + 1},
    };
    if (o.format == Format::json) {
      Json j;
      j["schema"] = kSchema;
      j["target"] = "singularity";
      for (const auto& [k, v] : fields) j[k] = cell_json(v);
      j["symmetric_root"] = s.odd;
      return j.dump(2) + "\n";
    }
    Table t;
    t.columns = {"field", "value"};
    for (const auto& [k, v] : fields) t.rows.push_back({k, cell_text(v)});
    return t.render(o.format);
  }

  AsymptoticParams p;
  p.n = o.n.value_or(0);
  p.r0 = o.r0.value_or(0);
  p.lambda = o.lambda.value_or(1);
  p.nu = o.nu.value_or(0);
  const bool pi = o.positional.rfind("pi_", 0) == 0;
  if (pi) {
    o.need(o.nu, "--nu");
    if (!o.lambda) throw UsageError("--lambda is required");
  } else {
    o.need(o.n, "--n");
  }
  if ((o.positional == "pi_r0" || o.positional == "level0_total") && !o.r0) throw UsageError("--r0 is required");
  if (!pi) check_limit("--n", p.n, kCountLimit);
  const auto rep = asym_count(o.positional, p);
  if (o.format == Format::json) return rep.to_json() + "\n";
  Table t;
  t.columns = {"target", "exact", "asymptotic", "ratio"};
  t.rows.push_back({rep.target, exact(rep.exact), rep.asymptotic_text(), rep.ratio});
  return t.render(o.format);
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

const std::map<std::string, std::pair<long, long>> kDefaultRanges{
    {"ouriden", {1, 12}},      {"coker1", {1, 12}},      {"coker2", {1, 12}},
    {"touchard", {1, 12}},     {"chu_vandermonde", {0, 6}}, {"parity_m0m1", {1, 30}},
    {"pi_parity", {0, 50}},    {"G_forms_agree", {1, 10}},
};

std::string cmd_verify(const Options& o, bool& failed) {
  std::vector<std::string> names;
  if (o.positional == "all") {
    names = identity_names();
  } else {
    names.push_back(o.positional);
  }
  std::vector<IdentityReport> reports;
  for (const auto& name : names) {
    const auto it = kDefaultRanges.find(name);
    const auto range = it == kDefaultRanges.end() ? std::pair<long, long>{1, 12} : it->second;
    int lambda = o.lambda.value_or(1);
    // the parity identity only holds for odd lambda; check it at 1 and 3
    std::vector<int> lambdas{lambda};
    if (name == "pi_parity" && !o.lambda) lambdas = {1, 3};
    for (int l : lambdas) reports.push_back(verify_identity(name, o.lo.value_or(range.first), o.hi.value_or(range.second), l));
  }
  for (const auto& r : reports) failed = failed || !r.passed();

  if (o.format == Format::json) {
    Json j;
    j["schema"] = kSchema;
    j["passed"] = !failed;
    auto& arr = j["reports"] = Json::array();
    for (const auto& r : reports) {
      auto one = Json::parse(r.to_json());
      one.erase("schema");
      arr.push_back(std::move(one));
    }
    return j.dump(2) + "\n";
  }
  Table t;
  t.columns = {"identity", "lo", "hi", "lambda", "instances", "status", "counterexample"};
  for (const auto& r : reports) {
    t.rows.push_back({r.name, r.lo, r.hi, r.lambda ? Cell(long(*r.lambda)) : Cell(std::string("-")),
                      long(r.instances.size()), std::string(r.passed() ? "pass" : "fail"),
                      r.counterexample.value_or("-")});
  }
  return t.render(o.format);
}

// ---------------------------------------------------------------------------
// Command line
// ---------------------------------------------------------------------------

void add_input(CLI::App* cmd, Options& o) {
  auto* in = cmd->add_option("--in", o.in, "Inline input text");
  auto* file = cmd->add_option("--file", o.file, "Read input from a file");
  in->excludes(file);
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format_name, "Output format: plain, csv or json")
      ->check(CLI::IsMember({"plain", "csv", "json"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact combinatorics of RNA abstract shapes and Motzkin paths", "shapeforge"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string("shapeforge 1.0.0"));

  auto* validate = app.add_subcommand("validate", "Check a dot-bracket structure");
  add_input(validate, o);
  add_format(validate, o);

  auto* analyze = app.add_subcommand("analyze", "Loop decomposition and abstractions of a structure");
  add_input(analyze, o);
  add_format(analyze, o);

  auto* abstract = app.add_subcommand("abstract", "Abstract a structure to an island diagram or shape");
  add_input(abstract, o);
  add_format(abstract, o);
  abstract->add_option("--level", o.level, "island, pi-prime or pi")
      ->check(CLI::IsMember({"island", "pi-prime", "pi"}));

  auto* bijection = app.add_subcommand("bijection", "Path and bracket bijections");
  bijection->add_option("op", o.positional, "encode2, decode2, encode1 or decode1")
      ->required()
      ->check(CLI::IsMember({"encode2", "decode2", "encode1", "decode1"}));
  auto* path_opt = bijection->add_option("--path", o.path, "Step word (U, D, H, R, B)");
  auto* bin = bijection->add_option("--in", o.in, "Input text");
  auto* bfile = bijection->add_option("--file", o.file, "Read input from a file");
  path_opt->excludes(bin)->excludes(bfile);
  bin->excludes(bfile);
  add_format(bijection, o);

  auto* count = app.add_subcommand("count", "Exact count tables");
  count
      ->add_option("family", o.positional,
                   "catalan, motzkin, narayana, motzkin_poly, level0, level0_weighted, island, "
                   "island_series, motzkin_series or level0_series")
      ->required()
      ->check(CLI::IsMember({"catalan", "motzkin", "narayana", "motzkin_poly", "level0", "level0_weighted", "island",
                             "island_series", "motzkin_series", "level0_series"}));
  count->add_option("--n", o.n, "Size");
  count->add_option("--ell", o.ell, "Number of base pairs");
  count->add_option("--order", o.order, "Series order");
  count->add_option("--r0-max", o.r0_max, "Largest r0 row");
  add_format(count, o);

  auto* verify = app.add_subcommand("verify", "Check identities exactly over a parameter range");
  std::vector<std::string> choices = identity_names();
  choices.push_back("all");
  verify->add_option("identity", o.positional, "Identity name or all")->required()->check(CLI::IsMember(choices));
  verify->add_option("--lo", o.lo, "First parameter");
  verify->add_option("--hi", o.hi, "Last parameter");
  verify->add_option("--lambda", o.lambda, "Minimum stack length (pi_parity)");
  add_format(verify, o);

  auto* distribution = app.add_subcommand("distribution", "Exact r0 distribution against its limit");
  distribution->add_option("family", o.positional, "level0 or pi")->required()->check(CLI::IsMember({"level0", "pi"}));
  distribution->add_option("--n", o.n, "Path size (level0, default 100)");
  distribution->add_option("--nu", o.nu, "Sequence length (pi, default 200)");
  distribution->add_option("--lambda", o.lambda, "Minimum stack length (pi, default 4)");
  distribution->add_option("--r0-max", o.r0_max, "Largest r0 row (default 8)");
  add_format(distribution, o);

  auto* asymptotics = app.add_subcommand("asymptotics", "Exact counts against leading-order asymptotics");
  std::vector<std::string> targets = asymptotic_targets();
  targets.push_back("singularity");
  asymptotics->add_option("target", o.positional, "Target or singularity")->required()->check(CLI::IsMember(targets));
  asymptotics->add_option("--n", o.n, "Path size");
  asymptotics->add_option("--r0", o.r0, "Horizontal steps on the axis");
  asymptotics->add_option("--lambda", o.lambda, "Minimum stack length");
  asymptotics->add_option("--nu", o.nu, "Sequence length");
  add_format(asymptotics, o);

  auto* compatible = app.add_subcommand("compatible", "pi-shape counts by sequence length and r0");
  compatible->add_option("--lambda", o.lambda, "Minimum stack length")->required();
  compatible->add_option("--nu", o.nu, "Largest sequence length")->required();
  compatible->add_option("--r0-max", o.r0_max, "Largest r0 column (default 4)");
  add_format(compatible, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out;
    std::ostringstream help_err;
    const int code = app.exit(e, help_out, help_err);
    out << help_out.str();
    std::string msg = help_err.str();
    if (code == 0) return kSuccess;
    while (!msg.empty() && msg.back() == '\n') msg.pop_back();
    err << "usage error: " << msg.substr(0, msg.find('\n')) << '\n';
    return kUsageError;
  }

  o.format = kFormats.at(o.format_name);
  std::string payload;
  bool failed = false;
  try {
    if (validate->parsed()) {
      payload = cmd_validate(o);
    } else if (analyze->parsed()) {
      payload = cmd_analyze(o);
    } else if (abstract->parsed()) {
      payload = cmd_abstract(o);
    } else if (bijection->parsed()) {
      payload = cmd_bijection(o);
    } else if (count->parsed()) {
      payload = cmd_count(o);
    } else if (verify->parsed()) {
      payload = cmd_verify(o, failed);
    } else if (distribution->parsed()) {
      payload = cmd_distribution(o);
    } else if (asymptotics->parsed()) {
      payload = cmd_asymptotics(o);
    } else {
      payload = cmd_compatible(o);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  out << payload;
  if (failed) {
    err << "error: VerificationFailed: at least one identity instance failed\n";
    return kDomainError;
  }
  return kSuccess;
}

}  // namespace shapeforge::cli
