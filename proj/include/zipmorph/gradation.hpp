#pragma once

// Finnish consonant gradation: the 11 KOTUS alternations as two-character
// windows (left neighbour, focus). Only the focus (window position 1) is ever
// rewritten; the left neighbour is read-only context.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zipmorph/deletion_writer.hpp"

namespace zipmorph {

enum class Grade { Strong, Weak };

std::string_view to_string(Grade grade);
std::optional<Grade> parse_grade(std::string_view text);

enum class SlotKind { Letter, AnyVowel, Deleted };

struct Slot {
  SlotKind kind;
  char32_t letter;

  static constexpr Slot of(char32_t c) { return {SlotKind::Letter, c}; }
  static constexpr Slot any_vowel() { return {SlotKind::AnyVowel, 0}; }
  static constexpr Slot deleted() { return {SlotKind::Deleted, 0}; }

  // Matches a lowercased character. Deleted never matches.
  bool matches(char32_t lowered) const;
  std::string render() const;
};

enum class PatternType { Quantitative, QualitativeSingle, QualitativeCluster };

std::string_view to_string(PatternType type);

struct GradationPattern {
  int kotus_index;    // 1..11, row number in the KOTUS table
  int priority_rank;  // 0 is tried first
  std::array<Slot, 2> strong;
  std::array<Slot, 2> weak;
  PatternType type;
  std::string_view example_strong;
  std::string_view example_weak;

  // Side that is matched when producing `grade`, and the side that is emitted.
  const std::array<Slot, 2>& source(Grade grade) const { return grade == Grade::Weak ? strong : weak; }
  const std::array<Slot, 2>& target(Grade grade) const { return grade == Grade::Weak ? weak : strong; }

  bool deletes() const { return weak[1].kind == SlotKind::Deleted; }
  // Geminates and clusters: position 0 names a specific consonant.
  bool anchored() const { return strong[0].kind == SlotKind::Letter; }
};

// All 11 patterns in priority order: geminates, clusters, singles.
std::span<const GradationPattern> gradation_patterns();

// Same patterns ordered by KOTUS row number.
std::vector<const GradationPattern*> patterns_by_kotus_index();

// The position-0 wildcard vowel set {a e i o u y ä ö}, lowercased input.
bool is_wildcard_vowel(char32_t lowered);

// True when (focus, right) is the source-side window of a geminate or cluster
// pattern, i.e. the focus is the read-only left half of a higher-priority
// match and must not be rewritten by a single-consonant pattern.
bool is_pos0(char32_t focus, std::optional<char32_t> right, Grade grade);

// First pattern (priority order) whose source window matches (left, focus).
const GradationPattern* find_pattern(std::optional<char32_t> left, char32_t focus, Grade grade);

struct GradationOutcome {
  enum class Kind { Keep, Replace, Delete };
  Kind kind;
  char32_t value;  // Delete carries the original focus character
  const GradationPattern* pattern = nullptr;

  static GradationOutcome keep(char32_t c) { return {Kind::Keep, c, nullptr}; }
};

GradationOutcome gradate_at(const CharZipper& z, Grade grade);

// Writer arrow for one gradation pass. Positions at or beyond `domain_end`
// are left untouched; nullopt means the whole word is in the domain.
WriterArrow gradation_arrow(Grade grade, std::optional<std::size_t> domain_end = std::nullopt);

// Whole-word helpers: one extend from position 0, then materialize.
std::u32string weaken(std::u32string_view word);
std::u32string strengthen(std::u32string_view word);
std::u32string gradate(std::u32string_view word, Grade grade);

// Positions in a (weak-grade) word where a deleting pattern may have removed a
// consonant that strengthen cannot restore: a single p/t/k after a vowel (a
// possible reduced geminate) or a vowel-vowel sequence (a possible dropped k).
std::vector<std::size_t> unrecoverable_sites(std::u32string_view word);

}  // namespace zipmorph
