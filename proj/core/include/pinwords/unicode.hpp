#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace pinwords {

enum class Encoding { Utf8, Iso8859_1, Iso8859_2, Iso8859_15 };

std::optional<Encoding> encoding_by_name(std::string_view name);

namespace uni {

// Decodes one line of bytes to codepoints. Throws EncodingError carrying
// `line` when the bytes are not valid under `enc` (only possible for UTF-8;
// the ISO-8859 variants accept every byte).
std::u32string decode(std::string_view bytes, Encoding enc, std::size_t line);

std::string encode_utf8(std::u32string_view codepoints);

// Single-codepoint lowercase over ASCII and the Latin blocks.
char32_t simple_lower(char32_t cp);

// Base ASCII letter left after canonical decomposition with combining
// marks removed, e.g. U+0161 (s with caron) -> 's'. Case is preserved.
std::optional<char> fold_to_ascii(char32_t cp);

bool is_combining_mark(char32_t cp);

}  // namespace uni
}  // namespace pinwords
