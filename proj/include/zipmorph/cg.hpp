#pragma once

// CG-lite: sentence-level disambiguation where each rule is a coKleisli arrow
// Zipper<ReadingSet> -> ReadingSet, and a rule list is applied as one extend
// per rule in file order.
//
// Rule syntax, one per line, '#' starts a comment:
//
//   ACTION TARGET [IF ( [NOT] OFFSET TEST )]
//
//   ACTION  SELECT | REMOVE
//   TARGET  POS=tag | POS=tag1|tag2 | BASEFORM=form | tag
//   OFFSET  signed integer, 0 is the token itself
//
// A bare tag means POS=tag. Finnish tag names (lukusana, nimisana, teonsana,
// laatusana, seikkasana) are accepted as aliases of num, noun, verb, adj, adv.
//
// Readings file, one token per line, blank line between sentences:
//
//   surface<TAB>pos:baseform[:feat,feat];pos:baseform...

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zipmorph/zipper.hpp"

namespace zipmorph::cg {

class CgError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public CgError {
 public:
  ParseError(std::size_t line, const std::string& message)
      : CgError("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct Reading {
  std::string baseform;
  std::string pos;
  std::set<std::string> features;

  friend auto operator<=>(const Reading&, const Reading&) = default;
};

// pos:baseform[:f1,f2]
std::string to_string(const Reading& r);

// Non-empty by construction; duplicate readings are collapsed.
class ReadingSet {
 public:
  ReadingSet(std::string surface, std::vector<Reading> readings);

  const std::string& surface() const noexcept { return surface_; }
  const std::vector<Reading>& readings() const noexcept { return readings_; }
  std::size_t size() const noexcept { return readings_.size(); }

  friend bool operator==(const ReadingSet&, const ReadingSet&) = default;

 private:
  std::string surface_;
  std::vector<Reading> readings_;
};

// {noun/kuusi, num/kuusi}
std::string describe(const ReadingSet& rs);

using Sentence = std::vector<ReadingSet>;
using SentenceZipper = Zipper<ReadingSet>;

// Canonical tag for a Finnish CG alias, or the tag itself.
std::string_view canonical_tag(std::string_view tag);

struct Predicate {
  enum class Field { Pos, Baseform };
  Field field;
  std::vector<std::string> values;  // more than one value = class membership

  bool matches(const Reading& r) const;
  std::string to_string() const;

  friend bool operator==(const Predicate&, const Predicate&) = default;
};

struct Condition {
  bool negated = false;
  int offset = 0;
  Predicate test;

  friend bool operator==(const Condition&, const Condition&) = default;
};

enum class Action { Select, Remove };

struct Rule {
  Action action;
  Predicate target;
  std::optional<Condition> condition;

  std::string to_string() const;

  friend bool operator==(const Rule&, const Rule&) = default;
};

std::vector<Rule> parse_rules(std::string_view text);
Rule parse_rule(std::string_view line);

// Existential over the readings at focus+offset; out of range is false
// before negation.
bool eval_condition(const SentenceZipper& z, const Condition& condition);

// Never returns an empty set: a SELECT with no match or a REMOVE that would
// clear the set leaves the focus unchanged.
ReadingSet apply_rule(const SentenceZipper& z, const Rule& rule);

using CgArrow = std::function<ReadingSet(const SentenceZipper&)>;

CgArrow rule_arrow(Rule rule);
// (f >=> g)(z) = g(extend f z)
CgArrow compose(CgArrow f, CgArrow g);

struct Firing {
  std::size_t rule_number;  // 1-based, file order
  std::size_t token_number;  // 1-based
  ReadingSet before;
  ReadingSet after;
};

using FiringSink = std::function<void(const Firing&)>;

// One extend pass per rule. Throws CgError on an empty sentence.
Sentence run_cg(const Sentence& sentence, const std::vector<Rule>& rules, const FiringSink& sink = {});

// "rule N fired at token M: {before} → {after}"
std::string format_firing(const Firing& f);

std::vector<Sentence> parse_readings(std::string_view text);
std::string format_readings(const std::vector<Sentence>& sentences);

}  // namespace zipmorph::cg
