#include "shapeforge/paths.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

#include "shapeforge/error.hpp"

namespace shapeforge {

std::string_view step_alphabet(PathKind kind) noexcept {
  switch (kind) {
    case PathKind::Dyck: return "UD";
    case PathKind::Motzkin1: return "UDH";
    case PathKind::Motzkin2: return "UDRB";
  }
  return "";
}

std::string_view to_string(PathKind kind) noexcept {
  switch (kind) {
    case PathKind::Dyck: return "Dyck";
    case PathKind::Motzkin1: return "Motzkin1";
    case PathKind::Motzkin2: return "Motzkin2";
  }
  return "";
}

namespace {

int delta(char step) { return step == 'U' ? 1 : step == 'D' ? -1 : 0; }

void require_kind(const LatticePath& path, PathKind kind, std::string_view what) {
  if (path.kind() != kind) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(what) + " expects a " + std::string(to_string(kind)) + " path");
  }
}

// Index of the opener matching the last closer, skipping any other character.
// Returns npos if the last bracket is not a closer or has no partner.
std::size_t opener_of_last(std::string_view s) {
  int depth = 0;
  for (std::size_t k = s.size(); k-- > 0;) {
    if (s[k] == ')') {
      ++depth;
    } else if (s[k] == '(') {
      if (depth == 0) return std::string_view::npos;
      if (--depth == 0) return k;
    }
  }
  return std::string_view::npos;
}

int height_of(std::string_view s) {
  int h = 0;
  for (char c : s) h += c == '(' ? 1 : c == ')' ? -1 : 0;
  return h;
}

std::string apply_step(const std::string& s, char step) {
  const std::size_t j = opener_of_last(s);
  if (j == std::string::npos) return {};
  switch (step) {
    case 'U': return s.substr(0, j) + "(" + s.substr(j) + "()";
    case 'D': return s + ")";
    case 'R': return s + "()";
    case 'B': return s.substr(0, j) + "(" + s.substr(j) + ")";
  }
  return {};
}

std::optional<std::string> undo_candidate(const std::string& t, char step) {
  const auto ends_with = [&](std::string_view suffix) {
    return t.size() >= suffix.size() && t.compare(t.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  switch (step) {
    case 'B': {
      if (!ends_with("))")) return std::nullopt;
      const std::size_t j = opener_of_last(t);
      if (j == std::string::npos) return std::nullopt;
      std::string prev = t;
      prev.pop_back();
      prev.erase(j, 1);
      return prev;
    }
    case 'D':
      if (!ends_with("))")) return std::nullopt;
      return t.substr(0, t.size() - 1);
    case 'U': {
      if (!ends_with("()")) return std::nullopt;
      std::string prev = t.substr(0, t.size() - 2);
      const std::size_t j = opener_of_last(prev);
      if (j == std::string::npos || j == 0 || prev[j - 1] != '(') return std::nullopt;
      prev.erase(j - 1, 1);
      return prev;
    }
    case 'R':
      if (!ends_with("()") || t.size() <= 2) return std::nullopt;
      return t.substr(0, t.size() - 2);
  }
  return std::nullopt;
}

// The running bracket height of an intermediate string equals the path height
// after the corresponding prefix, so reachability of "()" depends on the
// string alone and failures can be memoized.
bool replay(const std::string& t, std::unordered_set<std::string>& failed, std::string& reversed) {
  if (t == "()") return true;
  if (failed.contains(t)) return false;
  for (char step : std::string_view("BDUR")) {
    const auto prev = undo_candidate(t, step);
    if (!prev || prev->empty() || prev->back() != ')' || height_of(*prev) < 0) continue;
    if (apply_step(*prev, step) != t) continue;
    reversed.push_back(step);
    if (replay(*prev, failed, reversed)) return true;
    reversed.pop_back();
  }
  failed.insert(t);
  return false;
}

std::string recolour(std::string s, char from_open, char from_close, char to_open, char to_close) {
  for (char& c : s) {
    if (c == from_open) c = to_open;
    else if (c == from_close) c = to_close;
  }
  return s;
}

}  // namespace

LatticePath parse_path(std::string_view text, PathKind kind) {
  const std::string_view alphabet = step_alphabet(kind);
  int h = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (alphabet.find(text[i]) == std::string_view::npos) {
      throw Error(ErrorCode::IllegalCharacter, "step '" + std::string(1, text[i]) + "' at position " +
                                                   std::to_string(i + 1) + " is not in \"" +
                                                   std::string(alphabet) + "\"");
    }
    h += delta(text[i]);
    if (h < 0) {
      throw Error(ErrorCode::NegativeHeight, "path drops below zero at step " + std::to_string(i + 1));
    }
  }
  if (h != 0) throw Error(ErrorCode::NonzeroFinalHeight, "path ends at height " + std::to_string(h));
  return LatticePath(kind, std::string(text));
}

PathGenerator::PathGenerator(int n, PathKind kind)
    : n_(n), kind_(kind), alphabet_(step_alphabet(kind)) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "path size must be nonnegative");
}

std::optional<LatticePath> PathGenerator::next() {
  if (done_) return std::nullopt;
  int pos;
  if (!started_) {
    started_ = true;
    choice_.assign(static_cast<std::size_t>(n_), -1);
    height_.assign(static_cast<std::size_t>(n_) + 1, 0);
    current_.assign(static_cast<std::size_t>(n_), ' ');
    if (n_ == 0) {
      done_ = true;
      return LatticePath(kind_, "");
    }
    pos = 0;
  } else {
    pos = n_ - 1;
  }
  const int k = static_cast<int>(alphabet_.size());
  while (pos >= 0) {
    auto& c = choice_[static_cast<std::size_t>(pos)];
    if (++c >= k) {
      c = -1;
      --pos;
      continue;
    }
    const char step = alphabet_[static_cast<std::size_t>(c)];
    const int h = height_[static_cast<std::size_t>(pos)] + delta(step);
    if (h < 0 || h > n_ - pos - 1) continue;
    height_[static_cast<std::size_t>(pos) + 1] = h;
    current_[static_cast<std::size_t>(pos)] = step;
    if (++pos == n_) return LatticePath(kind_, current_);
  }
  done_ = true;
  return std::nullopt;
}

PathGenerator enumerate_paths(int n, PathKind kind) {
  const auto limit = enumeration_guard(16);
  if (n > 0 && static_cast<std::size_t>(n) > limit) {
    throw Error(ErrorCode::ResourceGuard,
                "path enumeration limited to size " + std::to_string(limit));
  }
  return PathGenerator(n, kind);
}

PathStats path_stats(const LatticePath& path) {
  PathStats st;
  int h = 0;
  for (char step : path.steps()) {
    switch (step) {
      case 'U': ++st.u; break;
      case 'D': ++st.d; break;
      case 'B': ++st.b; break;
      default: ++st.r; break;
    }
    if ((step == 'R' || step == 'H' || step == 'B') && h == 0) ++st.r0;
    h += delta(step);
  }
  return st;
}

BracketString BracketString::parse(std::string_view text) {
  match_brackets(text, '(', ')');
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '(' && text[i] != ')') {
      throw Error(ErrorCode::IllegalCharacter,
                  "character '" + std::string(1, text[i]) + "' at position " + std::to_string(i + 1));
    }
  }
  return BracketString(std::string(text));
}

BracketString encode2(const LatticePath& path) {
  require_kind(path, PathKind::Motzkin2, "encode2");
  std::string s = "()";
  for (char step : path.steps()) s = apply_step(s, step);
  return BracketString(std::move(s));
}

LatticePath decode2(const BracketString& s) {
  if (s.text().empty()) throw Error(ErrorCode::InvalidArgument, "bracket string needs at least one pair");
  std::unordered_set<std::string> failed;
  std::string reversed;
  if (!replay(s.text(), failed, reversed)) {
    throw Error(ErrorCode::NotInImage, "\"" + s.text() + "\" is not the image of any path");
  }
  std::reverse(reversed.begin(), reversed.end());
  return parse_path(reversed, PathKind::Motzkin2);
}

PiShape encode1(const LatticePath& path) {
  require_kind(path, PathKind::Motzkin1, "encode1");
  std::string s = "()";
  for (char step : path.steps()) s = apply_step(s, step == 'H' ? 'R' : step);
  return PiShape::parse(recolour(std::move(s), '(', ')', '[', ']'));
}

LatticePath decode1(const PiShape& shape) {
  const auto path = decode2(BracketString::parse(recolour(shape.text(), '[', ']', '(', ')')));
  std::string steps = path.steps();
  if (steps.find('B') != std::string::npos) {
    throw Error(ErrorCode::NotInImage, "\"" + shape.text() + "\" decodes through a blue step");
  }
  std::replace(steps.begin(), steps.end(), 'R', 'H');
  return parse_path(steps, PathKind::Motzkin1);
}

LatticePath decode1(std::string_view shape_text) { return decode1(PiShape::parse(shape_text)); }

std::vector<IslandDiagram> decorate_islands(const LatticePath& path) {
  require_kind(path, PathKind::Motzkin2, "decorate_islands");
  const auto limit = enumeration_guard(8);
  if (static_cast<std::size_t>(path.size()) > limit) {
    throw Error(ErrorCode::ResourceGuard, "decoration limited to paths of size " + std::to_string(limit));
  }
  const std::string& steps = path.steps();
  std::set<std::string> found;
  std::function<void(std::size_t, const std::string&)> walk = [&](std::size_t i, const std::string& s) {
    if (i == steps.size()) {
      found.insert(s);
      return;
    }
    const std::size_t j = opener_of_last(s);
    const std::string head = s.substr(0, j);
    const std::string tail = s.substr(j);
    for (int a = 0; a < 2; ++a) {
      const std::string ua = a ? "_" : "";
      switch (steps[i]) {
        case 'D': walk(i + 1, s + ua + ")"); break;
        case 'R': walk(i + 1, s + ua + "(_)"); break;
        case 'U':
          for (int b = 0; b < 2; ++b) walk(i + 1, head + "(" + ua + tail + (b ? "_" : "") + "(_)");
          break;
        case 'B':
          for (int b = 0; b < 2; ++b) walk(i + 1, head + "(" + ua + tail + (b ? "_" : "") + ")");
          break;
      }
    }
  };
  walk(0, "(_)");
  std::vector<IslandDiagram> out;
  out.reserve(found.size());
  for (const auto& s : found) out.push_back(IslandDiagram::parse(s));
  return out;
}

}  // namespace shapeforge
