#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "pinwords/pingen.hpp"

namespace pinwords {

struct StatsReport {
  int pin_length = 0;
  std::uint64_t pin_word_total = 0;
  std::uint64_t distinct_pins = 0;
  double coverage_fraction = 0.0;
  int coverage_percent = 0;  // rounded, as reported in tables
  double entropy_bits = 0.0;
  std::vector<std::pair<std::string, std::uint64_t>> top;
};

/// Fraction of the 10^n PIN space reached by the distribution's support.
double coverage(const PinDistribution& dist);
int coverage_percent(const PinDistribution& dist);

// Shannon entropy (bits) of the PIN frequencies. Throws UsageError on an
// empty distribution, where entropy is undefined.
double entropy_bits(const PinDistribution& dist);

// The k most frequent PINs, descending by count, ties by ascending digit
// string. Shorter than k when the support is smaller.
std::vector<std::pair<std::string, std::uint64_t>> top_k(
    const PinDistribution& dist, std::size_t k);

// How many of the externally supplied PINs (e.g. a published most-frequent
// list) appear in the distribution's support. All pins must have the
// distribution's length.
std::size_t overlap_with_list(const PinDistribution& dist,
                              const std::vector<Pin>& external_pins);

StatsReport build_report(const PinDistribution& dist, std::size_t top_count);

// Four-row table: #PIN words, #PINs, Covering, Entropy.
void write_table(std::ostream& out, const StatsReport& report);

std::string report_to_json(const StatsReport& report);

}  // namespace pinwords
