#include <doctest.h>

#include <map>
#include <set>
#include <string>

#include "oracles.hpp"
#include "shapeforge/error.hpp"
#include "shapeforge/exact.hpp"
#include "shapeforge/paths.hpp"

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

LatticePath m1(std::string_view s) { return parse_path(s, PathKind::Motzkin1); }
LatticePath m2(std::string_view s) { return parse_path(s, PathKind::Motzkin2); }

bool has_direct_nesting(const std::string& s) {
  std::vector<int> match(s.size(), -1), stack;
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    if (s[i] == '[') {
      stack.push_back(i);
    } else {
      match[stack.back()] = i;
      stack.pop_back();
    }
  }
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] == '[' && s[i + 1] == '[' && match[i + 1] + 1 == match[i]) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("parse_path") {
  CHECK(m1("UHUHDDH").size() == 7);
  CHECK(m1("").size() == 0);
  CHECK(m2("").size() == 0);
  CHECK(parse_path("", PathKind::Dyck).size() == 0);
  for (auto kind : {PathKind::Dyck, PathKind::Motzkin1, PathKind::Motzkin2}) {
    CHECK(code_of([&] { parse_path("DU", kind); }) == ErrorCode::NegativeHeight);
    CHECK(code_of([&] { parse_path("UUD", kind); }) == ErrorCode::NonzeroFinalHeight);
  }
  CHECK(code_of([] { m1("UBD"); }) == ErrorCode::IllegalCharacter);
  CHECK(code_of([] { m2("UHD"); }) == ErrorCode::IllegalCharacter);
  CHECK(code_of([] { parse_path("URD", PathKind::Dyck); }) == ErrorCode::IllegalCharacter);
}

TEST_CASE("enumerate_paths matches brute force") {
  auto count = [](int n, PathKind k) {
    long c = 0;
    auto gen = enumerate_paths(n, k);
    for (const auto& p : gen) {
      (void)p;
      ++c;
    }
    return c;
  };
  CHECK(count(4, PathKind::Motzkin1) == 9);
  CHECK(count(3, PathKind::Motzkin2) == 14);
  for (auto k : {PathKind::Dyck, PathKind::Motzkin1, PathKind::Motzkin2}) CHECK(count(0, k) == 1);

  for (int n = 0; n <= 9; ++n) {
    for (auto k : {PathKind::Dyck, PathKind::Motzkin1, PathKind::Motzkin2}) {
      std::vector<std::string> got;
      auto gen = enumerate_paths(n, k);
      while (auto p = gen.next()) {
        CHECK(p->kind() == k);
        got.push_back(p->steps());
      }
      CHECK_FALSE(gen.next().has_value());
      CHECK(got == oracle::paths(n, std::string(step_alphabet(k))));
    }
    CHECK(count(n, PathKind::Motzkin1) == motzkin_number(n));
    CHECK(count(n, PathKind::Motzkin2) == catalan(n + 1));
  }
  CHECK(code_of([] { enumerate_paths(17, PathKind::Motzkin1); }) == ErrorCode::ResourceGuard);
  CHECK(code_of([] { enumerate_paths(-1, PathKind::Motzkin1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("encode2 / decode2") {
  CHECK(encode2(m2("UBURDD")).text() == "(()((())()()))");
  CHECK(encode2(m2("")).text() == "()");
  CHECK(encode2(m2("RB")).text() == "()(())");
  CHECK(decode2(BracketString::parse("(()())")).steps() == "UD");
  CHECK(decode2(BracketString::parse("()")).steps() == "");
  CHECK(decode2(BracketString::parse("((()))")).steps() == "BB");
  CHECK(decode2(BracketString::parse("(()((())()()))")).steps() == "UBURDD");

  CHECK(code_of([] { decode2(BracketString::parse("")); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { BracketString::parse("(()"); }) == ErrorCode::UnbalancedBrackets);
  CHECK(code_of([] { BracketString::parse("(x)"); }) == ErrorCode::IllegalCharacter);
  CHECK(code_of([] { encode2(m1("H")); }) == ErrorCode::InvalidArgument);

  for (int n = 0; n <= 9; ++n) {
    std::set<std::string> image;
    auto gen = enumerate_paths(n, PathKind::Motzkin2);
    for (const auto& p : gen) {
      const auto s = encode2(p);
      CHECK(decode2(s) == p);
      image.insert(s.text());
    }
    const auto all = oracle::balanced(n + 1);
    CHECK(image == std::set<std::string>(all.begin(), all.end()));
    CHECK(image.size() == catalan(n + 1));
  }
}

TEST_CASE("encode1 / decode1") {
  CHECK(encode1(m1("UD")).text() == "[[][]]");
  CHECK(encode1(m1("")).text() == "[]");
  CHECK(encode1(m1("H")).text() == "[][]");
  CHECK(decode1("[[][]]").steps() == "UD");
  CHECK(decode1("[]").steps() == "");
  CHECK(decode1("[][]").steps() == "H");
  CHECK(code_of([] { decode1("[[]]"); }) == ErrorCode::DirectlyNested);
  CHECK(code_of([] { encode1(m2("R")); }) == ErrorCode::InvalidArgument);

  for (int n = 0; n <= 10; ++n) {
    std::set<std::string> image;
    auto gen = enumerate_paths(n, PathKind::Motzkin1);
    for (const auto& p : gen) {
      const auto shape = encode1(p);
      CHECK_FALSE(has_direct_nesting(shape.text()));
      CHECK(decode1(shape) == p);
      image.insert(shape.text());

      const auto st = path_stats(p);
      CHECK(pi_stats(shape) == PiStats{st.u + st.r + 1, st.u, st.r0 + 1});
    }
    CHECK(image.size() == motzkin_number(n));
    if (n <= 8) {
      std::set<std::string> shapes;
      for (const auto& s : oracle::balanced(n + 1, '[', ']')) {
        if (!has_direct_nesting(s)) shapes.insert(s);
      }
      // pi-shapes with n+1 pairs outnumber the image; the image is exactly
      // the shapes whose decoded path has n steps.
      for (const auto& s : image) CHECK(shapes.contains(s));
    }
  }
}

TEST_CASE("every pi-shape decodes to a 1-Motzkin path") {
  std::map<int, long> by_size;
  for (int pairs = 1; pairs <= 9; ++pairs) {
    for (const auto& s : oracle::balanced(pairs, '[', ']')) {
      if (has_direct_nesting(s)) continue;
      const auto p = decode1(s);
      CHECK(encode1(p).text() == s);
      ++by_size[p.size()];
    }
  }
  for (int n = 0; n <= 8; ++n) CHECK(by_size[n] == motzkin_number(n));
}

TEST_CASE("path_stats") {
  CHECK(path_stats(m1("H")) == PathStats{0, 0, 1, 0, 1});
  CHECK(path_stats(m1("")) == PathStats{});
  CHECK(path_stats(m1("UHHD")) == PathStats{1, 1, 2, 0, 0});
  CHECK(path_stats(m2("BURDR")) == PathStats{1, 1, 2, 1, 2});
  CHECK(pi_stats(encode1(m1("H"))).components == 2);
  CHECK(pi_stats(encode1(m1(""))).components == 1);

  for (int n = 0; n <= 9; ++n) {
    for (auto k : {PathKind::Motzkin1, PathKind::Motzkin2}) {
      auto gen = enumerate_paths(n, k);
      for (const auto& p : gen) {
        const auto st = path_stats(p);
        CHECK(st.u == st.d);
        CHECK(st.u + st.d + st.r + st.b == n);
        CHECK(st.r0 <= st.r + st.b);
        if (k == PathKind::Motzkin1) CHECK(st.b == 0);
      }
    }
  }
}

TEST_CASE("paths partitioned by level-0 horizontals") {
  for (int n = 0; n <= 12; ++n) {
    std::map<int, long> by_r0;
    auto gen = enumerate_paths(n, PathKind::Motzkin1);
    for (const auto& p : gen) ++by_r0[path_stats(p).r0];
    for (int r0 = 0; r0 <= n; ++r0) CHECK(level0_total(r0, n) == by_r0[r0]);
  }
}

TEST_CASE("decorate_islands") {
  auto texts = [](const LatticePath& p) {
    std::set<std::string> out;
    for (const auto& d : decorate_islands(p)) out.insert(d.text());
    return out;
  };
  CHECK(texts(m2("")) == std::set<std::string>{"(_)"});
  CHECK(texts(m2("R")) == std::set<std::string>{"(_)(_)", "(_)_(_)"});
  CHECK(texts(m2("B")) == std::set<std::string>{"((_))", "(_(_))", "((_)_)", "(_(_)_)"});

  for (int n = 0; n <= 5; ++n) {
    std::set<std::string> all;
    std::size_t total = 0;
    auto gen = enumerate_paths(n, PathKind::Motzkin2);
    for (const auto& p : gen) {
      const auto st = path_stats(p);
      const auto ds = decorate_islands(p);
      CHECK(ds.size() == (std::size_t{1} << (3 * st.u + st.r + 2 * st.b)));
      for (const auto& d : ds) {
        CHECK(d.stats().hairpins == st.u + st.r + 1);
        all.insert(d.text());
      }
      total += ds.size();
    }
    CHECK(total == all.size());
    std::set<std::string> expected;
    for (const auto& d : generate_island_diagrams(n + 1)) expected.insert(d.text());
    CHECK(all == expected);
  }
  CHECK(code_of([] { decorate_islands(m2("RRRRRRRRR")); }) == ErrorCode::ResourceGuard);
}
