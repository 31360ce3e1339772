#include "shapeforge/rna.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "shapeforge/error.hpp"

namespace shapeforge {

namespace {

[[noreturn]] void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

void require_alphabet(std::string_view text, std::string_view alphabet) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (alphabet.find(text[i]) == std::string_view::npos) {
      fail(ErrorCode::IllegalCharacter,
           "illegal character '" + std::string(1, text[i]) + "' at position " + std::to_string(i + 1));
    }
  }
}

// Pairs (i, match[i]) whose interior is exactly one other pair.
bool directly_nested(const std::vector<int>& match, std::size_t i) {
  const int j = match[i];
  if (j < 0 || static_cast<std::size_t>(j) < i + 2) return false;
  return match[i + 1] == j - 1;
}

// Number of child pairs directly inside the pair opening at i.
int child_count(std::string_view text, const std::vector<int>& match, std::size_t i, char open) {
  int children = 0;
  for (std::size_t k = i + 1; k < static_cast<std::size_t>(match[i]);) {
    if (text[k] == open) {
      ++children;
      k = static_cast<std::size_t>(match[k]) + 1;
    } else {
      ++k;
    }
  }
  return children;
}

}  // namespace

std::vector<int> match_brackets(std::string_view text, char open, char close) {
  std::vector<int> match(text.size(), -1);
  std::vector<int> stack;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == open) {
      stack.push_back(static_cast<int>(i));
    } else if (text[i] == close) {
      if (stack.empty()) {
        fail(ErrorCode::UnbalancedBrackets, "unmatched '" + std::string(1, close) + "' at position " +
                                                std::to_string(i + 1));
      }
      match[i] = stack.back();
      match[static_cast<std::size_t>(stack.back())] = static_cast<int>(i);
      stack.pop_back();
    }
  }
  if (!stack.empty()) {
    fail(ErrorCode::UnbalancedBrackets,
         "unmatched '" + std::string(1, open) + "' at position " + std::to_string(stack.back() + 1));
  }
  return match;
}

// ---------------------------------------------------------------------------
// SecondaryStructure
// ---------------------------------------------------------------------------

std::optional<int> SecondaryStructure::partner(int pos) const {
  const int p = partner_[idx(pos)];
  if (p < 0) return std::nullopt;
  return p;
}

std::vector<BasePair> SecondaryStructure::pairs() const {
  std::vector<BasePair> out;
  for (int i = 1; i <= size(); ++i) {
    const int p = partner_[idx(i)];
    if (p > i) out.push_back({i, p});
  }
  return out;
}

SecondaryStructure parse_and_validate(std::string_view dotbracket) {
  require_alphabet(dotbracket, ".()");
  const auto match = match_brackets(dotbracket, '(', ')');
  SecondaryStructure ss;
  ss.text_ = std::string(dotbracket);
  ss.partner_.assign(dotbracket.size(), -1);
  for (std::size_t i = 0; i < match.size(); ++i) {
    if (match[i] < 0) continue;
    if (static_cast<std::size_t>(match[i]) == i + 1) {
      fail(ErrorCode::AdjacentPair, "pair (" + std::to_string(i + 1) + "," + std::to_string(i + 2) +
                                        ") joins adjacent vertices");
    }
    ss.partner_[i] = match[i] + 1;
  }
  return ss;
}

// ---------------------------------------------------------------------------
// Structure elements
// ---------------------------------------------------------------------------

ElementReport analyze_elements(const SecondaryStructure& ss) {
  ElementReport report;
  const int n = ss.size();
  auto partner_of = [&](int pos) { return ss.partner(pos).value_or(0); };

  // Walks the interior (from, to) of a loop, returning the directly enclosed
  // pairs and the unpaired run lengths around them (size = pairs + 1).
  auto scan = [&](int from, int to, std::vector<BasePair>& inner, std::vector<int>& segments) {
    int run = 0;
    for (int k = from; k <= to;) {
      const int p = partner_of(k);
      if (p == 0) {
        ++run;
        ++k;
      } else {
        segments.push_back(run);
        run = 0;
        inner.push_back({k, p});
        k = p + 1;
      }
    }
    segments.push_back(run);
  };

  for (const BasePair& bp : ss.pairs()) {
    std::vector<BasePair> inner;
    std::vector<int> segments;
    scan(bp.open + 1, bp.close - 1, inner, segments);
    if (inner.empty()) {
      report.hairpins.push_back({bp, segments[0]});
    } else if (inner.size() == 1) {
      const int left = segments[0];
      const int right = segments[1];
      if (left > 0 && right > 0) {
        report.interior_loops.push_back({bp, inner[0], left, right});
      } else if (left + right > 0) {
        report.bulges.push_back({bp, inner[0], left + right});
      }
    } else {
      report.multiloops.push_back({bp, static_cast<int>(inner.size()) + 1, segments});
    }

    const bool continues_outer = bp.open > 1 && bp.close < n && partner_of(bp.open - 1) == bp.close + 1;
    if (!continues_outer) {
      int k = 1;
      while (partner_of(bp.open + k) == bp.close - k) ++k;
      report.stacks.push_back({bp, k});
    }
  }

  std::vector<BasePair> top;
  std::vector<int> segments;
  scan(1, n, top, segments);
  report.external.components = static_cast<int>(top.size());
  if (top.empty()) {
    if (n > 0) report.external.segments.push_back(n);
  } else {
    if (segments.front() > 0) report.tails.push_back({1, segments.front()});
    if (segments.back() > 0) report.tails.push_back({n - segments.back() + 1, segments.back()});
    report.external.segments.assign(segments.begin() + 1, segments.end() - 1);
  }

  for (int i = 1; i <= n;) {
    if (!ss.is_paired(i)) {
      ++i;
      continue;
    }
    int j = i;
    while (j + 1 <= n && ss.is_paired(j + 1)) ++j;
    report.islands.push_back({i, j});
    i = j + 1;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Island diagrams
// ---------------------------------------------------------------------------

IslandDiagram IslandDiagram::parse(std::string_view text) {
  require_alphabet(text, "()_");
  const auto match = match_brackets(text, '(', ')');
  if (!text.empty() && (text.front() == '_' || text.back() == '_')) {
    fail(ErrorCode::InvalidShape, "island diagram carries a tail blank");
  }
  if (text.find("__") != std::string_view::npos) {
    fail(ErrorCode::InvalidShape, "island diagram has consecutive blanks");
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '(') continue;
    if (child_count(text, match, i, '(') == 0 && static_cast<std::size_t>(match[i]) != i + 2) {
      fail(ErrorCode::InvalidShape, "hairpin at position " + std::to_string(i + 1) + " must enclose one blank");
    }
  }
  return IslandDiagram(std::string(text));
}

IslandStats IslandDiagram::stats() const {
  IslandStats s;
  bool in_block = false;
  for (std::size_t i = 0; i < text_.size(); ++i) {
    const char c = text_[i];
    if (c == '_') {
      in_block = false;
      continue;
    }
    if (!in_block) ++s.islands;
    in_block = true;
    if (c == '(') {
      ++s.base_pairs;
      if (i + 2 < text_.size() && text_[i + 1] == '_' && text_[i + 2] == ')') ++s.hairpins;
    }
  }
  return s;
}

IslandDiagram to_island_diagram(const SecondaryStructure& ss) {
  const int n = ss.size();
  int first = 1;
  while (first <= n && !ss.is_paired(first)) ++first;
  int last = n;
  while (last >= first && !ss.is_paired(last)) --last;
  std::string out;
  for (int i = first; i <= last; ++i) {
    if (ss.is_paired(i)) {
      out.push_back(ss.text()[static_cast<std::size_t>(i - 1)]);
    } else if (out.back() != '_') {
      out.push_back('_');
    }
  }
  return IslandDiagram(std::move(out));
}

IslandStats island_stats_via_structure(const IslandDiagram& diagram) {
  std::string db = diagram.text();
  std::replace(db.begin(), db.end(), '_', '.');
  const auto report = analyze_elements(parse_and_validate(db));
  IslandStats s;
  s.hairpins = static_cast<int>(report.hairpins.size());
  s.islands = static_cast<int>(report.islands.size());
  for (const auto& st : report.stacks) s.base_pairs += st.length;
  return s;
}

std::vector<IslandDiagram> generate_island_diagrams(int ell) {
  if (ell < 1) fail(ErrorCode::InvalidArgument, "generate_island_diagrams: ell must be positive");
  const std::size_t guard = enumeration_guard(10);
  if (static_cast<std::size_t>(ell) > guard) {
    fail(ErrorCode::ResourceGuard, "generate_island_diagrams: ell=" + std::to_string(ell) +
                                       " exceeds guard " + std::to_string(guard));
  }
  std::vector<IslandDiagram> out;
  std::string brackets;
  std::function<void(int, int)> rec = [&](int opened, int depth) {
    if (opened == ell && depth == 0) {
      std::vector<std::size_t> optional_gaps;
      for (std::size_t i = 0; i + 1 < brackets.size(); ++i) {
        if (!(brackets[i] == '(' && brackets[i + 1] == ')')) optional_gaps.push_back(i);
      }
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << optional_gaps.size()); ++mask) {
        std::string s;
        std::size_t g = 0;
        for (std::size_t i = 0; i < brackets.size(); ++i) {
          s.push_back(brackets[i]);
          if (i + 1 == brackets.size()) break;
          if (brackets[i] == '(' && brackets[i + 1] == ')') {
            s.push_back('_');
          } else if ((mask >> g++) & 1u) {
            s.push_back('_');
          }
        }
        out.push_back(IslandDiagram::parse(s));
      }
      return;
    }
    if (opened < ell) {
      brackets.push_back('(');
      rec(opened + 1, depth + 1);
      brackets.pop_back();
    }
    if (depth > 0) {
      brackets.push_back(')');
      rec(opened, depth - 1);
      brackets.pop_back();
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// pi'-shapes and pi-shapes
// ---------------------------------------------------------------------------

PiPrimeShape PiPrimeShape::parse(std::string_view text) {
  require_alphabet(text, "[]_");
  const auto match = match_brackets(text, '[', ']');
  if (text.find("__") != std::string_view::npos) {
    fail(ErrorCode::InvalidShape, "pi'-shape has consecutive blanks");
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '[' && directly_nested(match, i)) {
      fail(ErrorCode::DirectlyNested, "pi'-shape has a directly nested pair at position " + std::to_string(i + 1));
    }
  }
  return PiPrimeShape(std::string(text));
}

PiPrimeShape to_pi_prime(const SecondaryStructure& ss) {
  const int n = ss.size();
  std::string out;
  auto partner_of = [&](int pos) { return (pos >= 1 && pos <= n) ? ss.partner(pos).value_or(0) : 0; };
  for (int i = 1; i <= n; ++i) {
    const int p = partner_of(i);
    if (p == 0) {
      if (out.empty() || out.back() != '_') out.push_back('_');
      continue;
    }
    const int open = std::min(i, p);
    const int close = std::max(i, p);
    // Only the outermost pair of a stack is drawn.
    const bool stacked_inside = partner_of(open - 1) == close + 1;
    if (!stacked_inside) out.push_back(i == open ? '[' : ']');
  }
  return PiPrimeShape(std::move(out));
}

PiShape PiShape::parse(std::string_view text) {
  if (text.empty()) fail(ErrorCode::EmptyResult, "empty pi-shape");
  require_alphabet(text, "[]");
  const auto match = match_brackets(text, '[', ']');
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '[' && directly_nested(match, i)) {
      fail(ErrorCode::DirectlyNested, "pi-shape has a directly nested pair at position " + std::to_string(i + 1));
    }
  }
  return PiShape(std::string(text));
}

PiShape to_pi(const PiPrimeShape& shape) {
  std::string s;
  for (char c : shape.text()) {
    if (c != '_') s.push_back(c);
  }
  if (s.empty()) fail(ErrorCode::EmptyResult, "pi'-shape " + shape.text() + " has no base pairs");
  bool changed = true;
  while (changed) {
    changed = false;
    const auto match = match_brackets(s, '[', ']');
    std::vector<bool> drop(s.size(), false);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '[' && directly_nested(match, i)) {
        drop[i] = true;
        drop[static_cast<std::size_t>(match[i])] = true;
        changed = true;
      }
    }
    std::string next;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!drop[i]) next.push_back(s[i]);
    }
    s = std::move(next);
  }
  return PiShape(std::move(s));
}

PiStats pi_stats(const PiShape& shape) {
  const std::string& s = shape.text();
  const auto match = match_brackets(s, '[', ']');
  PiStats st;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == ']') {
      --depth;
      continue;
    }
    if (depth == 0) ++st.components;
    ++depth;
    const int children = child_count(s, match, i, '[');
    if (children == 0) ++st.hairpins;
    if (children >= 2) ++st.multiloops;
  }
  return st;
}

}  // namespace shapeforge
