#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "pinwords/dictionary.hpp"
#include "pinwords/mapping.hpp"

namespace pinwords {

// Multiset of PINs of one length; the raw material for coverage and
// entropy statistics.
class PinDistribution {
 public:
  explicit PinDistribution(int pin_length);

  int pin_length() const { return pin_length_; }
  std::uint64_t total() const { return total_; }
  std::size_t distinct_count() const { return counts_.size(); }
  bool contains(const Pin& pin) const;

  void add(const Pin& pin, std::uint64_t count = 1);

  const std::map<std::string, std::uint64_t>& counts() const { return counts_; }

  void write_tsv(std::ostream& out) const;  // pin<TAB>count per line
  std::string to_json() const;  // {pin_length, total, counts}

 private:
  int pin_length_;
  std::map<std::string, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

enum class Method { Exact, Prefix, Suffix, Polyglot, Morph };

const char* method_name(Method m);
std::optional<Method> method_by_name(std::string_view name);

struct GenerationSpec {
  Method method = Method::Exact;
  int pin_length = 4;
  const LetterDigitMap* map = nullptr;
  std::vector<const Dictionary*> dictionaries;
};

struct GenerationResult {
  PinDistribution distribution;
  std::uint64_t skipped_words = 0;  // words with unmappable characters
};

// Words of length exactly n, translated. Accent variants of a word count
// separately when the dictionary tracks them.
GenerationResult exact_length_pins(const Dictionary& dict, int n,
                                   const LetterDigitMap& map);

// Every word of length >= n contributes its first (resp. last) n letters.
GenerationResult prefix_pins(const Dictionary& dict, int n,
                             const LetterDigitMap& map);
GenerationResult suffix_pins(const Dictionary& dict, int n,
                             const LetterDigitMap& map);

// Exhaustive single-letter-to-digit morphing: every word of length n,
// every position, every digit 0-9, so each word yields exactly 10*n PINs.
GenerationResult morph_pins(const Dictionary& dict, int n,
                            const LetterDigitMap& map);

// Exact-length PINs over the union of two or more dictionaries; a word
// shared between languages is counted once.
GenerationResult polyglot_pins(const std::vector<const Dictionary*>& dicts,
                               int n, const LetterDigitMap& map);

GenerationResult generate(const GenerationSpec& spec);

// Uniform random PIN; identical (length, seed) gives an identical PIN on
// every platform. Lengths 2 through 10.
Pin random_pin(int n, std::uint64_t seed);
std::vector<Pin> random_pins(int n, std::size_t count, std::uint64_t seed);

}  // namespace pinwords
