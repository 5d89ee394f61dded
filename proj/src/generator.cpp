#include "zipmorph/generator.hpp"

#include "zipmorph/pipeline.hpp"
#include "zipmorph/text.hpp"
#include "zipmorph/vowel_rules.hpp"

namespace zipmorph {

namespace {

struct CaseRow {
  NounCase noun_case;
  std::string_view name;
  CaseTemplate tmpl;
};

// Weak grade before a closed-syllable ending, strong before an open one.
constexpr std::array<CaseRow, 11> kCaseTable{{
    {NounCase::Nominative, "nominative", {U"", Grade::Strong}},
    {NounCase::Genitive, "genitive", {U"n", Grade::Weak}},
    {NounCase::Partitive, "partitive", {U"A", Grade::Strong}},
    {NounCase::Inessive, "inessive", {U"ssA", Grade::Weak}},
    {NounCase::Elative, "elative", {U"stA", Grade::Weak}},
    {NounCase::Illative, "illative", {U"Vn", Grade::Strong}},
    {NounCase::Adessive, "adessive", {U"llA", Grade::Weak}},
    {NounCase::Ablative, "ablative", {U"ltA", Grade::Weak}},
    {NounCase::Allative, "allative", {U"lle", Grade::Weak}},
    {NounCase::Essive, "essive", {U"nA", Grade::Strong}},
    {NounCase::Translative, "translative", {U"ksi", Grade::Weak}},
}};

const CaseRow& row_for(NounCase c) {
  for (const auto& row : kCaseTable) {
    if (row.noun_case == c) return row;
  }
  throw GenerationError("unknown noun case");
}

}  // namespace

std::string_view to_string(NounCase c) { return row_for(c).name; }

std::optional<NounCase> parse_noun_case(std::string_view text) {
  for (const auto& row : kCaseTable) {
    if (row.name == text) return row.noun_case;
  }
  return std::nullopt;
}

CaseTemplate case_template(NounCase c) { return row_for(c).tmpl; }

std::u32string underlying_form(std::u32string_view lemma, NounCase c, bool possessive_3) {
  std::u32string form(lemma);
  const CaseTemplate tmpl = case_template(c);
  form += tmpl.suffix;
  if (possessive_3 && !tmpl.suffix.ends_with(U"Vn")) form += U"Vn";
  return form;
}

std::u32string generate(std::u32string_view lemma, NounCase c, bool possessive_3) {
  if (lemma.empty()) throw GenerationError("generate: empty lemma");
  if (classify_vowel(lemma.back()) == VowelClass::NotVowel) {
    throw GenerationError("generate: unsupported stem '" + encode_utf8(lemma) +
                          "' (only vowel-final lemmas are supported)");
  }
  const CaseTemplate tmpl = case_template(c);
  // Lemmas arrive in the strong grade, so a strong-grade case leaves the stem
  // as is; a weak-grade case weakens the stem only, never the suffix.
  const std::size_t gradable = tmpl.grade == Grade::Weak ? lemma.size() : 0;
  return Pipeline::standard(tmpl.grade, gradable).run(underlying_form(lemma, c, possessive_3)).surface;
}

std::string generate(std::string_view lemma, NounCase c, bool possessive_3) {
  return encode_utf8(generate(std::u32string_view(decode_nfc(lemma)), c, possessive_3));
}

}  // namespace zipmorph
