#pragma once

// UTF-8 <-> code point conversion with NFC normalization on the way in, so
// that precomposed letters such as ä and ö occupy exactly one zipper cell.

#include <stdexcept>
#include <string>
#include <string_view>

namespace zipmorph {

class TextError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Decodes UTF-8 and normalizes to NFC. Throws TextError on malformed input.
std::u32string decode_nfc(std::string_view utf8);

std::string encode_utf8(std::u32string_view text);
std::string encode_utf8(char32_t c);

char32_t to_lower(char32_t c);

}  // namespace zipmorph
