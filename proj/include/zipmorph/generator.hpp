#pragma once

// Noun inflection by running the morphophonological pipeline forward over
// lemma + case suffix (+ optional third-person possessive -Vn).

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "zipmorph/gradation.hpp"

namespace zipmorph {

enum class NounCase {
  Nominative,
  Genitive,
  Partitive,
  Inessive,
  Elative,
  Illative,
  Adessive,
  Ablative,
  Allative,
  Essive,
  Translative,
};

inline constexpr std::array<NounCase, 11> kAllNounCases{
    NounCase::Nominative, NounCase::Genitive, NounCase::Partitive, NounCase::Inessive,
    NounCase::Elative,    NounCase::Illative, NounCase::Adessive,  NounCase::Ablative,
    NounCase::Allative,   NounCase::Essive,   NounCase::Translative,
};

std::string_view to_string(NounCase c);
std::optional<NounCase> parse_noun_case(std::string_view text);

struct CaseTemplate {
  std::u32string_view suffix;  // lowercase letters plus archiphonemes A O U V
  Grade grade;
};

CaseTemplate case_template(NounCase c);

class GenerationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Underlying form fed to the pipeline, e.g. ("kampa", Elative, true) -> "kampastAVn".
std::u32string underlying_form(std::u32string_view lemma, NounCase c, bool possessive_3);

// Throws GenerationError for empty or consonant-final lemmas.
std::u32string generate(std::u32string_view lemma, NounCase c, bool possessive_3 = false);
std::string generate(std::string_view lemma, NounCase c, bool possessive_3 = false);

}  // namespace zipmorph
