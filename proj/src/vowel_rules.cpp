#include "zipmorph/vowel_rules.hpp"

namespace zipmorph {

std::string_view to_string(VowelClass c) {
  switch (c) {
    case VowelClass::Back:
      return "back";
    case VowelClass::Front:
      return "front";
    case VowelClass::Neutral:
      return "neutral";
    case VowelClass::NotVowel:
      return "not-vowel";
  }
  return "?";
}

std::string_view to_string(HarmonyClass c) { return c == HarmonyClass::Back ? "back" : "front"; }

bool is_archiphoneme(char32_t c) { return c == U'A' || c == U'O' || c == U'U' || c == U'V'; }

VowelClass classify_vowel(char32_t c) {
  switch (c) {
    case U'a': case U'o': case U'u':
      return VowelClass::Back;
    case U'ä': case U'ö': case U'y': case U'Ä': case U'Ö': case U'Y':
      return VowelClass::Front;
    case U'e': case U'i': case U'E': case U'I':
      return VowelClass::Neutral;
    default:
      return VowelClass::NotVowel;
  }
}

HarmonyClass detect_harmony(const CharZipper& z) {
  const auto& left = z.left();
  for (auto it = left.rbegin(); it != left.rend(); ++it) {
    switch (classify_vowel(*it)) {
      case VowelClass::Back:
        return HarmonyClass::Back;
      case VowelClass::Front:
        return HarmonyClass::Front;
      default:
        break;
    }
  }
  return HarmonyClass::Front;
}

char32_t harmony_arrow(const CharZipper& z) {
  const char32_t c = z.extract();
  if (c != U'A' && c != U'O' && c != U'U') return c;
  const bool back = detect_harmony(z) == HarmonyClass::Back;
  switch (c) {
    case U'A':
      return back ? U'a' : U'ä';
    case U'O':
      return back ? U'o' : U'ö';
    default:
      return back ? U'u' : U'y';
  }
}

char32_t possessive_arrow(const CharZipper& z) {
  const char32_t c = z.extract();
  if (c != U'V') return c;
  const auto& left = z.left();
  for (auto it = left.rbegin(); it != left.rend(); ++it) {
    if (classify_vowel(*it) != VowelClass::NotVowel) return *it;
  }
  return c;
}

}  // namespace zipmorph
