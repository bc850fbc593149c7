#include "pinwords/unicode.hpp"

#include <algorithm>
#include <array>
#include <iterator>

#include "pinwords/errors.hpp"

namespace pinwords {

std::optional<Encoding> encoding_by_name(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "utf-8" || lower == "utf8") return Encoding::Utf8;
  if (lower == "iso-8859-1" || lower == "latin1") return Encoding::Iso8859_1;
  if (lower == "iso-8859-2" || lower == "latin2") return Encoding::Iso8859_2;
  if (lower == "iso-8859-15" || lower == "latin9") return Encoding::Iso8859_15;
  return std::nullopt;
}

namespace uni {
namespace {

struct FoldEntry {
  char32_t cp;
  char base;
};

struct LowerEntry {
  char32_t cp;
  char32_t lower;
};

#include "latin_fold_table.inc"

// ISO-8859-2 0xA0..0xFF; the low half coincides with ASCII/Latin-1.
constexpr char32_t kLatin2High[96] = {
    0x00A0, 0x0104, 0x02D8, 0x0141, 0x00A4, 0x013D, 0x015A, 0x00A7,
    0x00A8, 0x0160, 0x015E, 0x0164, 0x0179, 0x00AD, 0x017D, 0x017B,
    0x00B0, 0x0105, 0x02DB, 0x0142, 0x00B4, 0x013E, 0x015B, 0x02C7,
    0x00B8, 0x0161, 0x015F, 0x0165, 0x017A, 0x02DD, 0x017E, 0x017C,
    0x0154, 0x00C1, 0x00C2, 0x0102, 0x00C4, 0x0139, 0x0106, 0x00C7,
    0x010C, 0x00C9, 0x0118, 0x00CB, 0x011A, 0x00CD, 0x00CE, 0x010E,
    0x0110, 0x0143, 0x0147, 0x00D3, 0x00D4, 0x0150, 0x00D6, 0x00D7,
    0x0158, 0x016E, 0x00DA, 0x0170, 0x00DC, 0x00DD, 0x0162, 0x00DF,
    0x0155, 0x00E1, 0x00E2, 0x0103, 0x00E4, 0x013A, 0x0107, 0x00E7,
    0x010D, 0x00E9, 0x0119, 0x00EB, 0x011B, 0x00ED, 0x00EE, 0x010F,
    0x0111, 0x0144, 0x0148, 0x00F3, 0x00F4, 0x0151, 0x00F6, 0x00F7,
    0x0159, 0x016F, 0x00FA, 0x0171, 0x00FC, 0x00FD, 0x0163, 0x02D9,
};

std::u32string decode_utf8(std::string_view bytes, std::size_t line) {
  std::u32string out;
  out.reserve(bytes.size());
  std::size_t i = 0;
  const auto fail = [&](std::size_t at) -> char32_t {
    throw EncodingError("invalid UTF-8 byte sequence at line " +
                            std::to_string(line) + ", byte offset " +
                            std::to_string(at),
                        line);
  };
  while (i < bytes.size()) {
    const unsigned char b0 = bytes[i];
    char32_t cp;
    std::size_t len;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      fail(i);
      return out;
    }
    if (i + len > bytes.size()) fail(i);
    for (std::size_t k = 1; k < len; ++k) {
      const unsigned char b = bytes[i + k];
      if ((b & 0xC0) != 0x80) fail(i + k);
      cp = (cp << 6) | (b & 0x3F);
    }
    // Reject overlong forms and surrogates.
    constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (len > 1 && cp < kMin[len]) fail(i);
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) fail(i);
    out.push_back(cp);
    i += len;
  }
  return out;
}

}  // namespace

std::u32string decode(std::string_view bytes, Encoding enc, std::size_t line) {
  if (enc == Encoding::Utf8) return decode_utf8(bytes, line);
  std::u32string out;
  out.reserve(bytes.size());
  for (unsigned char b : bytes) {
    char32_t cp = b;
    switch (enc) {
      case Encoding::Iso8859_2:
        if (b >= 0xA0) cp = kLatin2High[b - 0xA0];
        break;
      case Encoding::Iso8859_15:
        switch (b) {
          case 0xA4: cp = 0x20AC; break;
          case 0xA6: cp = 0x0160; break;
          case 0xA8: cp = 0x0161; break;
          case 0xB4: cp = 0x017D; break;
          case 0xB8: cp = 0x017E; break;
          case 0xBC: cp = 0x0152; break;
          case 0xBD: cp = 0x0153; break;
          case 0xBE: cp = 0x0178; break;
          default: break;
        }
        break;
      default:
        break;  // Latin-1: bytes are codepoints
    }
    out.push_back(cp);
  }
  return out;
}

std::string encode_utf8(std::u32string_view codepoints) {
  std::string out;
  out.reserve(codepoints.size());
  for (char32_t cp : codepoints) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

char32_t simple_lower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  const auto* end = std::end(kLatinLower);
  const auto* it =
      std::lower_bound(std::begin(kLatinLower), end, cp,
                       [](const LowerEntry& e, char32_t c) { return e.cp < c; });
  if (it != end && it->cp == cp) return it->lower;
  return cp;
}

std::optional<char> fold_to_ascii(char32_t cp) {
  const auto* end = std::end(kLatinFold);
  const auto* it =
      std::lower_bound(std::begin(kLatinFold), end, cp,
                       [](const FoldEntry& e, char32_t c) { return e.cp < c; });
  if (it != end && it->cp == cp) return it->base;
  return std::nullopt;
}

bool is_combining_mark(char32_t cp) {
  return (cp >= 0x0300 && cp <= 0x036F) || (cp >= 0x1AB0 && cp <= 0x1AFF) ||
         (cp >= 0x1DC0 && cp <= 0x1DFF) || (cp >= 0x20D0 && cp <= 0x20FF);
}

}  // namespace uni
}  // namespace pinwords
