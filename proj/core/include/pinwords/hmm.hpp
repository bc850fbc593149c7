#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "pinwords/dictionary.hpp"
#include "pinwords/mapping.hpp"

namespace pinwords {

struct DecodeResult {
  std::string word;        // letters, one per PIN digit
  double log_probability;  // natural log; -inf when no path has mass
  bool smoothed = false;   // word comes from the smoothed fallback model
};

// Letter-bigram model of a language: 26 states (a-z), initial
// probabilities from word-initial letters, transitions from in-word
// bigrams. Emissions are fixed by a letter-to-digit map, which makes
// decoding a PIN a constrained search over each digit's preimage letters.
class HmmModel {
 public:
  // Initial probability of letter i is the fraction of words starting
  // with i; transition i->j is the bigram count divided by occurrences of
  // i as a non-final character. Words count with their accent-variant
  // multiplicity. Throws UsageError for an empty dictionary.
  static HmmModel train(const Dictionary& dict, LetterDigitMap map);

  // Most probable letter sequence for the PIN, each letter constrained to
  // its digit's preimage. Ties resolve to the lexicographically smallest
  // word. When every constrained path has probability zero, the word is
  // decoded from an add-alpha smoothed copy of the model and
  // log_probability is -inf. Throws UnmappableError if some digit has no
  // preimage letters.
  DecodeResult viterbi(const Pin& pin) const;

  // Exhaustive-search oracle with identical semantics to viterbi();
  // restricted to PINs of length <= 8 to bound the candidate space.
  DecodeResult brute_force_best(const Pin& pin) const;

  // log pi(w0) + sum log a(w_t, w_t+1), -inf if any factor is zero.
  double sequence_probability(std::string_view word) const;

  double initial(char letter) const;
  double transition(char from, char to) const;
  // True when the letter never occurs as a non-final character, so its
  // transition row carries no probability mass.
  bool dead_row(char letter) const;

  const LetterDigitMap& emission_map() const { return map_; }

  std::string to_json() const;
  static HmmModel from_json(std::string_view text, LetterDigitMap map);

 private:
  HmmModel(LetterDigitMap map) : map_(std::move(map)) {}
  void finalize();  // derives logs and the smoothed fallback tables

  DecodeResult decode(const Pin& pin, bool use_smoothed) const;
  double path_log_prob(std::string_view word, bool use_smoothed) const;

  LetterDigitMap map_;
  std::array<double, 26> initial_{};
  std::array<std::array<double, 26>, 26> transition_{};
  double start_total_ = 0;                // words used for initial counts
  std::array<double, 26> row_totals_{};   // non-final occurrences per letter

  std::array<double, 26> log_initial_{};
  std::array<std::array<double, 26>, 26> log_transition_{};
  std::array<double, 26> log_initial_smoothed_{};
  std::array<std::array<double, 26>, 26> log_transition_smoothed_{};
};

}  // namespace pinwords
