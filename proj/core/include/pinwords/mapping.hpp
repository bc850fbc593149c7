#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace pinwords {

/// A fixed-length string of decimal digits.
class Pin {
 public:
  explicit Pin(std::string digits);

  const std::string& digits() const { return digits_; }
  int length() const { return static_cast<int>(digits_.size()); }
  int digit_at(int pos) const { return digits_[pos] - '0'; }

  auto operator<=>(const Pin&) const = default;

 private:
  std::string digits_;
};

// Assignment of letters a-z to digits 0-9. May be partial over the
// alphabet (the standard keypad leaves 0 and 1 unreachable); the inverse
// view groups the letters mapped to each digit.
class LetterDigitMap {
 public:
  // abc->2 def->3 ghi->4 jkl->5 mno->6 pqrs->7 tuv->8 wxyz->9
  static LetterDigitMap standard();
  // standard plus l,i->1 and o,z->0
  static LetterDigitMap extended();
  // keypad-order split of the alphabet across all ten digits:
  // ab->1 cd->2 ef->3 ghi->4 jkl->5 mn->6 opq->7 rst->8 uvw->9 xyz->0
  static LetterDigitMap stretched();

  static std::optional<LetterDigitMap> builtin(std::string_view name);

  // Config format: one line per digit, `digit: letters` (e.g. `7: opq`).
  // Blank lines and lines starting with '#' are skipped. Rejects repeated
  // digits and letters claimed by more than one digit.
  static LetterDigitMap load(std::istream& in, std::string name);
  static LetterDigitMap load_file(const std::filesystem::path& path);

  const std::string& name() const { return name_; }
  std::optional<int> digit_for(char letter) const;
  const std::string& letters_for(int digit) const { return inverse_[digit]; }
  bool covers_all_digits() const;
  std::size_t domain_size() const;

 private:
  LetterDigitMap(std::string name, const std::array<std::int8_t, 26>& forward);

  std::string name_;
  std::array<std::int8_t, 26> forward_;  // -1 = unmapped
  std::array<std::string, 10> inverse_;  // sorted letters per digit
};

// Character-wise translation. Digit characters translate to themselves so
// that morphed words like "p7per" go through the same path. Throws
// UnmappableError for characters outside the map's domain.
Pin word_to_pin(std::string_view word, const LetterDigitMap& map);

}  // namespace pinwords
