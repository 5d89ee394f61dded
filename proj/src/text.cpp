#include "zipmorph/text.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

namespace zipmorph {

namespace {

void validate_utf8(std::string_view utf8) {
  const auto* bytes = reinterpret_cast<const uint8_t*>(utf8.data());
  const auto length = static_cast<int32_t>(utf8.size());
  int32_t offset = 0;
  while (offset < length) {
    const int32_t start = offset;
    UChar32 c = 0;
    U8_NEXT(bytes, offset, length, c);
    if (c < 0) {
      throw TextError("malformed UTF-8 at byte " + std::to_string(start));
    }
  }
}

}  // namespace

std::u32string decode_nfc(std::string_view utf8) {
  validate_utf8(utf8);
  const icu::UnicodeString raw =
      icu::UnicodeString::fromUTF8(icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));

  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) {
    throw TextError(std::string("NFC normalizer unavailable: ") + u_errorName(status));
  }
  const icu::UnicodeString normalized = nfc->normalize(raw, status);
  if (U_FAILURE(status)) {
    throw TextError(std::string("NFC normalization failed: ") + u_errorName(status));
  }

  std::u32string out;
  out.reserve(static_cast<std::size_t>(normalized.countChar32()));
  for (int32_t i = 0; i < normalized.length(); i = normalized.moveIndex32(i, 1)) {
    out.push_back(static_cast<char32_t>(normalized.char32At(i)));
  }
  return out;
}

std::string encode_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : text) {
    uint8_t buf[U8_MAX_LENGTH];
    int32_t len = 0;
    UBool error = false;
    U8_APPEND(buf, len, U8_MAX_LENGTH, static_cast<UChar32>(c), error);
    if (error) {
      throw TextError("cannot encode code point " + std::to_string(static_cast<uint32_t>(c)));
    }
    out.append(reinterpret_cast<const char*>(buf), static_cast<std::size_t>(len));
  }
  return out;
}

std::string encode_utf8(char32_t c) { return encode_utf8(std::u32string_view(&c, 1)); }

char32_t to_lower(char32_t c) { return static_cast<char32_t>(u_tolower(static_cast<UChar32>(c))); }

}  // namespace zipmorph
