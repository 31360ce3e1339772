#pragma once

/**
 * @file rna.hpp
 * @brief Dot-bracket secondary structures, their structure elements, and the
 *        island-diagram / pi'-shape / pi-shape abstractions.
 *
 * Text formats (ASCII stand-ins for the usual typeset symbols):
 *   secondary structure  ".()"
 *   island diagram       "()_"
 *   pi'-shape            "[]_"
 *   pi-shape             "[]"
 */

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace shapeforge {

/// A base pair (open < close), 1-based positions.
struct BasePair {
  int open = 0;
  int close = 0;
  auto operator<=>(const BasePair&) const = default;
};

class SecondaryStructure {
 public:
  SecondaryStructure() = default;

  const std::string& text() const { return text_; }
  int size() const { return static_cast<int>(text_.size()); }
  bool is_paired(int pos) const { return partner_[idx(pos)] >= 0; }
  /// Partner of a 1-based position, if paired.
  std::optional<int> partner(int pos) const;
  /// All pairs ordered by opening position.
  std::vector<BasePair> pairs() const;

  friend SecondaryStructure parse_and_validate(std::string_view dotbracket);

 private:
  static std::size_t idx(int pos) { return static_cast<std::size_t>(pos - 1); }
  std::string text_;
  std::vector<int> partner_;  // 1-based partner or -1, indexed by pos-1
};

/// Builds the pairing by bracket matching and checks that no pair joins
/// neighbouring vertices. Crossings and base triples cannot be expressed in
/// dot-bracket text, so they need no separate check.
/// Throws IllegalCharacter, UnbalancedBrackets or AdjacentPair.
SecondaryStructure parse_and_validate(std::string_view dotbracket);

// ---------------------------------------------------------------------------
// Structure elements
// ---------------------------------------------------------------------------

struct UnpairedRun {
  int start = 0;  // 1-based first vertex
  int length = 0;
  bool operator==(const UnpairedRun&) const = default;
};

struct Hairpin {
  BasePair foundation;
  int loop_length = 0;
};

struct Bulge {
  BasePair outer;
  BasePair inner;
  int length = 0;
};

struct InteriorLoop {
  BasePair outer;
  BasePair inner;
  int left = 0;
  int right = 0;
};

struct Multiloop {
  BasePair closing;
  int branches = 0;           // closing pair plus inner pairs, always >= 3
  std::vector<int> segments;  // unpaired run lengths between branches, zeros included
};

struct ExternalLoop {
  int components = 0;         // base pairs on the external loop
  std::vector<int> segments;  // unpaired runs between components (tails excluded)
};

struct StackElement {
  BasePair outer;
  int length = 0;
};

struct Island {
  int first = 0;  // 1-based, inclusive
  int last = 0;
};

struct ElementReport {
  std::vector<Hairpin> hairpins;
  std::vector<Bulge> bulges;
  std::vector<UnpairedRun> tails;
  std::vector<InteriorLoop> interior_loops;
  std::vector<Multiloop> multiloops;
  ExternalLoop external;
  std::vector<StackElement> stacks;
  std::vector<Island> islands;
};

ElementReport analyze_elements(const SecondaryStructure& ss);

// ---------------------------------------------------------------------------
// Abstractions
// ---------------------------------------------------------------------------

struct IslandStats {
  int hairpins = 0;
  int islands = 0;
  int base_pairs = 0;
  auto operator<=>(const IslandStats&) const = default;
};

class IslandDiagram {
 public:
  IslandDiagram() = default;
  /// Validates the island-diagram invariants; throws InvalidShape,
  /// IllegalCharacter or UnbalancedBrackets.
  static IslandDiagram parse(std::string_view text);

  const std::string& text() const { return text_; }
  IslandStats stats() const;

  auto operator<=>(const IslandDiagram&) const = default;

 private:
  friend IslandDiagram to_island_diagram(const SecondaryStructure&);
  explicit IslandDiagram(std::string text) : text_(std::move(text)) {}
  std::string text_;
};

class PiPrimeShape {
 public:
  PiPrimeShape() = default;
  static PiPrimeShape parse(std::string_view text);
  const std::string& text() const { return text_; }
  auto operator<=>(const PiPrimeShape&) const = default;

 private:
  friend PiPrimeShape to_pi_prime(const SecondaryStructure&);
  explicit PiPrimeShape(std::string text) : text_(std::move(text)) {}
  std::string text_;
};

class PiShape {
 public:
  /// Throws DirectlyNested for "[[...]]" with a sole spanning child,
  /// EmptyResult for "", IllegalCharacter/UnbalancedBrackets otherwise.
  static PiShape parse(std::string_view text);
  const std::string& text() const { return text_; }
  auto operator<=>(const PiShape&) const = default;

 private:
  friend PiShape to_pi(const PiPrimeShape&);
  explicit PiShape(std::string text) : text_(std::move(text)) {}
  std::string text_;
};

/// Drops tails and replaces every remaining maximal unpaired run by "_".
IslandDiagram to_island_diagram(const SecondaryStructure& ss);

/// One "[...]" per maximal stack and one "_" per maximal unpaired run, tails
/// included. An all-unpaired structure gives "_", the empty one "".
PiPrimeShape to_pi_prime(const SecondaryStructure& ss);

/// Removes "_" and merges directly nested pairs until none remain.
/// Throws EmptyResult when the input has no brackets.
PiShape to_pi(const PiPrimeShape& shape);

struct PiStats {
  int hairpins = 0;
  int multiloops = 0;
  int components = 0;
  auto operator<=>(const PiStats&) const = default;
};

PiStats pi_stats(const PiShape& shape);

/// Every island diagram with `ell` base pairs, sorted. Throws
/// ResourceGuard above the enumeration guard (default 10).
std::vector<IslandDiagram> generate_island_diagrams(int ell);

/// Reads a diagram back as a dot-bracket structure ("_" -> ".") and
/// recomputes its statistics through analyze_elements.
IslandStats island_stats_via_structure(const IslandDiagram& diagram);

/// Matching partner indices (0-based) for a balanced string over the given
/// bracket characters; other characters map to -1. Throws UnbalancedBrackets.
std::vector<int> match_brackets(std::string_view text, char open, char close);

}  // namespace shapeforge
