#pragma once

// Vowel harmony and possessive vowel copying, both non-deleting arrows over
// the character zipper.
//
// Underlying forms mark archiphonemes with uppercase letters:
//   A -> a / ä, O -> o / ö, U -> u / y   (resolved by harmony)
//   V -> copy of the nearest vowel to the left   (resolved by possessive)

#include <string_view>

#include "zipmorph/deletion_writer.hpp"

namespace zipmorph {

enum class VowelClass { Back, Front, Neutral, NotVowel };
enum class HarmonyClass { Back, Front };

std::string_view to_string(VowelClass c);
std::string_view to_string(HarmonyClass c);

bool is_archiphoneme(char32_t c);

// Back {a o u}, Front {ä ö y}, Neutral {e i}. Uppercase Ä Ö Y E I classify
// like their lowercase forms; A O U V are archiphonemes and are NotVowel.
VowelClass classify_vowel(char32_t c);

// Nearest non-neutral vowel in the left context decides; neutral-only
// (or empty) left context defaults to Front.
HarmonyClass detect_harmony(const CharZipper& z);

char32_t harmony_arrow(const CharZipper& z);

// V becomes the nearest vowel to its left. With no vowel to the left the V is
// returned unchanged; callers can detect it in the output.
char32_t possessive_arrow(const CharZipper& z);

}  // namespace zipmorph
