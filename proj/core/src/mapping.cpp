#include "pinwords/mapping.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "pinwords/errors.hpp"

namespace pinwords {

Pin::Pin(std::string digits) : digits_(std::move(digits)) {
  if (digits_.empty()) throw UsageError("PIN must not be empty");
  for (char c : digits_) {
    if (c < '0' || c > '9')
      throw UsageError("PIN may contain only digits 0-9, got '" +
                       std::string(1, c) + "'");
  }
}

namespace {

std::array<std::int8_t, 26> forward_from_groups(
    const std::array<std::string_view, 10>& groups) {
  std::array<std::int8_t, 26> fwd;
  fwd.fill(-1);
  for (int d = 0; d < 10; ++d) {
    for (char l : groups[d]) fwd[l - 'a'] = static_cast<std::int8_t>(d);
  }
  return fwd;
}

}  // namespace

LetterDigitMap::LetterDigitMap(std::string name,
                               const std::array<std::int8_t, 26>& forward)
    : name_(std::move(name)), forward_(forward) {
  for (int i = 0; i < 26; ++i) {
    if (forward_[i] >= 0) inverse_[forward_[i]].push_back('a' + i);
  }
}

LetterDigitMap LetterDigitMap::standard() {
  return {"standard", forward_from_groups({"", "", "abc", "def", "ghi", "jkl",
                                           "mno", "pqrs", "tuv", "wxyz"})};
}

LetterDigitMap LetterDigitMap::extended() {
  return {"extended", forward_from_groups({"oz", "li", "abc", "def", "gh",
                                           "jk", "mn", "pqrs", "tuv", "wxy"})};
}

LetterDigitMap LetterDigitMap::stretched() {
  return {"stretched", forward_from_groups({"xyz", "ab", "cd", "ef", "ghi",
                                            "jkl", "mn", "opq", "rst", "uvw"})};
}

std::optional<LetterDigitMap> LetterDigitMap::builtin(std::string_view name) {
  if (name == "standard") return standard();
  if (name == "extended") return extended();
  if (name == "stretched") return stretched();
  return std::nullopt;
}

LetterDigitMap LetterDigitMap::load(std::istream& in, std::string name) {
  std::array<std::int8_t, 26> fwd;
  fwd.fill(-1);
  std::array<bool, 10> seen{};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t'))
      line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos || colon == 0)
      throw ValidationError("mapping config line " + std::to_string(lineno) +
                            ": expected `digit: letters`");
    std::string digit_part = line.substr(0, colon);
    if (digit_part.size() != 1 || !std::isdigit((unsigned char)digit_part[0]))
      throw ValidationError("mapping config line " + std::to_string(lineno) +
                            ": `" + digit_part + "` is not a digit");
    int d = digit_part[0] - '0';
    if (seen[d])
      throw ValidationError("mapping config line " + std::to_string(lineno) +
                            ": digit " + digit_part + " listed twice");
    seen[d] = true;
    for (char c : line.substr(colon + 1)) {
      if (c == ' ' || c == '\t') continue;
      if (c < 'a' || c > 'z')
        throw ValidationError("mapping config line " + std::to_string(lineno) +
                              ": `" + std::string(1, c) +
                              "` is not a lowercase letter");
      if (fwd[c - 'a'] >= 0)
        throw ValidationError("mapping config line " + std::to_string(lineno) +
                              ": letter `" + std::string(1, c) +
                              "` already mapped to digit " +
                              std::to_string(fwd[c - 'a']));
      fwd[c - 'a'] = static_cast<std::int8_t>(d);
    }
  }
  bool any = false;
  for (auto v : fwd) any = any || v >= 0;
  if (!any) throw ValidationError("mapping config defines no letters");
  return {std::move(name), fwd};
}

LetterDigitMap LetterDigitMap::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open mapping config: " + path.string());
  return load(in, path.stem().string());
}

std::optional<int> LetterDigitMap::digit_for(char letter) const {
  if (letter < 'a' || letter > 'z') return std::nullopt;
  std::int8_t d = forward_[letter - 'a'];
  if (d < 0) return std::nullopt;
  return d;
}

bool LetterDigitMap::covers_all_digits() const {
  for (const auto& letters : inverse_)
    if (letters.empty()) return false;
  return true;
}

std::size_t LetterDigitMap::domain_size() const {
  std::size_t n = 0;
  for (auto v : forward_)
    if (v >= 0) ++n;
  return n;
}

Pin word_to_pin(std::string_view word, const LetterDigitMap& map) {
  std::string digits;
  digits.reserve(word.size());
  for (char c : word) {
    if (c >= '0' && c <= '9') {
      digits.push_back(c);
      continue;
    }
    auto d = map.digit_for(c);
    if (!d)
      throw UnmappableError("character '" + std::string(1, c) +
                            "' is not covered by mapping " + map.name());
    digits.push_back(static_cast<char>('0' + *d));
  }
  return Pin(std::move(digits));
}

}  // namespace pinwords
