#pragma once

/**
 * @file paths.hpp
 * @brief Dyck, 1-Motzkin and 2-Motzkin lattice paths, the bracket-string
 *        bijection for 2-Motzkin paths, its restriction to pi-shapes, and
 *        the island-diagram decorations of a 2-Motzkin path.
 *
 * Step alphabets: Dyck "UD", 1-Motzkin "UDH", 2-Motzkin "UDRB" (R and B are
 * the two colours of horizontal step).
 */

#include <compare>
#include <cstddef>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shapeforge/rna.hpp"

namespace shapeforge {

enum class PathKind { Dyck, Motzkin1, Motzkin2 };

std::string_view step_alphabet(PathKind kind) noexcept;
std::string_view to_string(PathKind kind) noexcept;

class LatticePath {
 public:
  LatticePath() = default;

  PathKind kind() const { return kind_; }
  const std::string& steps() const { return steps_; }
  int size() const { return static_cast<int>(steps_.size()); }

  auto operator<=>(const LatticePath&) const = default;

  friend LatticePath parse_path(std::string_view text, PathKind kind);

 private:
  LatticePath(PathKind kind, std::string steps) : kind_(kind), steps_(std::move(steps)) {}
  friend class PathGenerator;

  PathKind kind_ = PathKind::Motzkin1;
  std::string steps_;
};

/// Throws IllegalCharacter, NegativeHeight or NonzeroFinalHeight.
LatticePath parse_path(std::string_view text, PathKind kind);

/// Lazy, lexicographic (in alphabet order) enumeration of every valid path
/// of a given size and kind. Usable through next() or a range-for.
class PathGenerator {
 public:
  PathGenerator(int n, PathKind kind);

  std::optional<LatticePath> next();

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = LatticePath;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(PathGenerator* gen) : gen_(gen) { ++*this; }
    const LatticePath& operator*() const { return *current_; }
    const LatticePath* operator->() const { return &*current_; }
    iterator& operator++() {
      current_ = gen_->next();
      if (!current_) gen_ = nullptr;
      return *this;
    }
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return gen_ == nullptr; }

   private:
    PathGenerator* gen_ = nullptr;
    std::optional<LatticePath> current_;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() { return {}; }

 private:
  int n_;
  PathKind kind_;
  std::string alphabet_;
  std::vector<int> choice_;
  std::vector<int> height_;
  std::string current_;
  bool started_ = false;
  bool done_ = false;
};

/// Generator over all paths of size n; throws ResourceGuard above the
/// enumeration guard (default 16).
PathGenerator enumerate_paths(int n, PathKind kind);

struct PathStats {
  int u = 0;
  int d = 0;
  int r = 0;   // plain (1-Motzkin) or red horizontal steps
  int b = 0;   // blue horizontal steps
  int r0 = 0;  // horizontal steps of either colour at height zero
  auto operator<=>(const PathStats&) const = default;
};

PathStats path_stats(const LatticePath& path);

/// Balanced string over "()".
class BracketString {
 public:
  static BracketString parse(std::string_view text);
  const std::string& text() const { return text_; }
  auto operator<=>(const BracketString&) const = default;

 private:
  friend BracketString encode2(const LatticePath&);
  explicit BracketString(std::string text) : text_(std::move(text)) {}
  std::string text_;
};

/// Starts from "()" and, writing the current string as S'(S'') with (S'')
/// the pair closed by the last character, rewrites it step by step:
///   U: S'((S'')()   D: S'(S''))   R: S'(S'')()   B: S'((S''))
/// A path of size n maps to a balanced string of n+1 pairs.
BracketString encode2(const LatticePath& path);

/// Inverse of encode2 by depth-first reverse replay. Undo candidates are tried
/// in the order B, D, U, R; a candidate survives only if re-applying its step
/// reproduces the current string and its running height stays nonnegative.
/// Strings from which "()" is unreachable are memoized. Throws NotInImage if
/// no chain reaches "()" and InvalidArgument for the empty string.
LatticePath decode2(const BracketString& s);

/// encode2 with H read as R, written over "[]". The image never contains a
/// directly nested pair.
PiShape encode1(const LatticePath& path);

/// Inverse of encode1. Throws NotInImage if the reverse replay needs a blue
/// step.
LatticePath decode1(const PiShape& shape);
/// Parses the text first; throws DirectlyNested for "[[...]]"-style input.
LatticePath decode1(std::string_view shape_text);

/// Every island diagram carried by a 2-Motzkin path: start from "(_)"; an up
/// step adds a left bracket (optionally followed by "_") and a hairpin
/// (optionally preceded by "_"); a down step adds a right bracket (optionally
/// preceded by "_"); a red step appends a hairpin with an optional leading
/// "_"; a blue step wraps the last pair, optionally with "_" on either
/// inner side (stack, two bulges, interior loop). Sorted, no duplicates.
/// Throws ResourceGuard above the guard (default 8).
std::vector<IslandDiagram> decorate_islands(const LatticePath& path);

}  // namespace shapeforge
