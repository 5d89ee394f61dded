#include "zipmorph/gradation.hpp"

#include <algorithm>

#include "zipmorph/text.hpp"

namespace zipmorph {

namespace {

constexpr Slot L(char32_t c) { return Slot::of(c); }
constexpr Slot kVowel = Slot::any_vowel();
constexpr Slot kGone = Slot::deleted();

// clang-format off
constexpr std::array<GradationPattern, 11> kPatterns{{
    // geminates
    { 1,  0, {L(U'p'), L(U'p')}, {L(U'p'), kGone},   PatternType::Quantitative,       "kaappi", "kaapi"},
    { 2,  1, {L(U't'), L(U't')}, {L(U't'), kGone},   PatternType::Quantitative,       "matto",  "mato"},
    { 3,  2, {L(U'k'), L(U'k')}, {L(U'k'), kGone},   PatternType::Quantitative,       "kukka",  "kuka"},
    // clusters
    { 7,  3, {L(U'm'), L(U'p')}, {L(U'm'), L(U'm')}, PatternType::QualitativeCluster, "kampa",  "kamma"},
    { 8,  4, {L(U'l'), L(U't')}, {L(U'l'), L(U'l')}, PatternType::QualitativeCluster, "kulta",  "kulla"},
    { 9,  5, {L(U'n'), L(U't')}, {L(U'n'), L(U'n')}, PatternType::QualitativeCluster, "ranta",  "ranna"},
    {10,  6, {L(U'r'), L(U't')}, {L(U'r'), L(U'r')}, PatternType::QualitativeCluster, "parta",  "parra"},
    {11,  7, {L(U'n'), L(U'k')}, {L(U'n'), L(U'g')}, PatternType::QualitativeCluster, "kenkä",  "kengä"},
    // single consonants after any vowel
    { 4,  8, {kVowel,  L(U'p')}, {kVowel,  L(U'v')}, PatternType::QualitativeSingle,  "tupa",   "tuva"},
    { 5,  9, {kVowel,  L(U't')}, {kVowel,  L(U'd')}, PatternType::QualitativeSingle,  "katu",   "kadu"},
    { 6, 10, {kVowel,  L(U'k')}, {kVowel,  kGone},   PatternType::QualitativeSingle,  "puku",   "puu"},
}};
// clang-format on

}  // namespace

std::string_view to_string(Grade grade) { return grade == Grade::Weak ? "weak" : "strong"; }

std::optional<Grade> parse_grade(std::string_view text) {
  if (text == "weak") return Grade::Weak;
  if (text == "strong") return Grade::Strong;
  return std::nullopt;
}

std::string_view to_string(PatternType type) {
  switch (type) {
    case PatternType::Quantitative:
      return "quantitative";
    case PatternType::QualitativeSingle:
      return "qualitative-single";
    case PatternType::QualitativeCluster:
      return "qualitative-cluster";
  }
  return "?";
}

bool is_wildcard_vowel(char32_t c) {
  switch (c) {
    case U'a': case U'e': case U'i': case U'o': case U'u': case U'y': case U'ä': case U'ö':
      return true;
    default:
      return false;
  }
}

bool Slot::matches(char32_t lowered) const {
  switch (kind) {
    case SlotKind::Letter:
      return lowered == letter;
    case SlotKind::AnyVowel:
      return is_wildcard_vowel(lowered);
    case SlotKind::Deleted:
      return false;
  }
  return false;
}

std::string Slot::render() const {
  switch (kind) {
    case SlotKind::Letter:
      return encode_utf8(letter);
    case SlotKind::AnyVowel:
      return "V";
    case SlotKind::Deleted:
      return "0";
  }
  return "?";
}

std::span<const GradationPattern> gradation_patterns() { return kPatterns; }

std::vector<const GradationPattern*> patterns_by_kotus_index() {
  std::vector<const GradationPattern*> out;
  for (const auto& p : kPatterns) out.push_back(&p);
  std::sort(out.begin(), out.end(),
            [](const auto* a, const auto* b) { return a->kotus_index < b->kotus_index; });
  return out;
}

bool is_pos0(char32_t focus, std::optional<char32_t> right, Grade grade) {
  if (!right) return false;
  const char32_t c = to_lower(focus);
  const char32_t r = to_lower(*right);
  return std::any_of(kPatterns.begin(), kPatterns.end(), [&](const GradationPattern& p) {
    const auto& window = p.source(grade);
    return p.anchored() && window[0].matches(c) && window[1].matches(r);
  });
}

const GradationPattern* find_pattern(std::optional<char32_t> left, char32_t focus, Grade grade) {
  if (!left) return nullptr;
  const char32_t l = to_lower(*left);
  const char32_t c = to_lower(focus);
  for (const auto& p : kPatterns) {
    const auto& window = p.source(grade);
    if (window[0].matches(l) && window[1].matches(c)) return &p;
  }
  return nullptr;
}

GradationOutcome gradate_at(const CharZipper& z, Grade grade) {
  const char32_t focus = z.extract();
  const char32_t* left = z.peek_left();
  const char32_t* right = z.peek_right();

  if (is_pos0(focus, right ? std::optional(*right) : std::nullopt, grade)) {
    return GradationOutcome::keep(focus);
  }
  const GradationPattern* p = find_pattern(left ? std::optional(*left) : std::nullopt, focus, grade);
  if (p == nullptr) return GradationOutcome::keep(focus);

  const Slot& out = p->target(grade)[1];
  if (out.kind == SlotKind::Deleted) {
    return {GradationOutcome::Kind::Delete, focus, p};
  }
  return {GradationOutcome::Kind::Replace, out.letter, p};
}

WriterArrow gradation_arrow(Grade grade, std::optional<std::size_t> domain_end) {
  return [grade, domain_end](const DeletionSet&, const CharZipper& z) -> Emission {
    if (domain_end && z.position() >= *domain_end) return {{}, z.extract()};
    const GradationOutcome outcome = gradate_at(z, grade);
    if (outcome.kind == GradationOutcome::Kind::Delete) {
      return {DeletionSet::single(z.position()), outcome.value};
    }
    return {{}, outcome.value};
  };
}

std::u32string gradate(std::u32string_view word, Grade grade) {
  if (word.empty()) throw ZipperError("gradation: empty word");
  const WriterZipper start{{}, CharZipper::from_sequence(std::u32string(word), 0)};
  return materialize(writer_extend(gradation_arrow(grade), start));
}

std::u32string weaken(std::u32string_view word) { return gradate(word, Grade::Weak); }

std::u32string strengthen(std::u32string_view word) { return gradate(word, Grade::Strong); }

std::vector<std::size_t> unrecoverable_sites(std::u32string_view word) {
  std::vector<std::size_t> sites;
  for (std::size_t i = 1; i < word.size(); ++i) {
    const char32_t prev = to_lower(word[i - 1]);
    const char32_t cur = to_lower(word[i]);
    const bool single_stop = (cur == U'p' || cur == U't' || cur == U'k') && is_wildcard_vowel(prev) &&
                             (i + 1 >= word.size() || to_lower(word[i + 1]) != cur);
    const bool hiatus = is_wildcard_vowel(prev) && is_wildcard_vowel(cur);
    if (single_stop || hiatus) sites.push_back(i);
  }
  return sites;
}

}  // namespace zipmorph
