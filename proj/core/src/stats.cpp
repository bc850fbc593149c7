#include "pinwords/stats.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include <json.hpp>

#include "pinwords/errors.hpp"

namespace pinwords {

double coverage(const PinDistribution& dist) {
  double space = std::pow(10.0, dist.pin_length());
  return static_cast<double>(dist.distinct_count()) / space;
}

int coverage_percent(const PinDistribution& dist) {
  return static_cast<int>(std::llround(coverage(dist) * 100.0));
}

double entropy_bits(const PinDistribution& dist) {
  if (dist.total() == 0)
    throw UsageError("entropy is undefined for an empty distribution");
  const double total = static_cast<double>(dist.total());
  double h = 0.0;
  for (const auto& [pin, count] : dist.counts()) {
    const double p = static_cast<double>(count) / total;
    h -= p * std::log2(p);
  }
  return h;
}

std::vector<std::pair<std::string, std::uint64_t>> top_k(
    const PinDistribution& dist, std::size_t k) {
  if (k < 1) throw UsageError("top_k needs k >= 1");
  std::vector<std::pair<std::string, std::uint64_t>> all(
      dist.counts().begin(), dist.counts().end());
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (all.size() > k) all.resize(k);
  return all;
}

std::size_t overlap_with_list(const PinDistribution& dist,
                              const std::vector<Pin>& external_pins) {
  std::size_t hits = 0;
  for (const Pin& pin : external_pins) {
    if (pin.length() != dist.pin_length())
      throw UsageError("external PIN " + pin.digits() + " has length " +
                       std::to_string(pin.length()) + ", distribution has " +
                       std::to_string(dist.pin_length()));
    if (dist.contains(pin)) ++hits;
  }
  return hits;
}

StatsReport build_report(const PinDistribution& dist, std::size_t top_count) {
  StatsReport report;
  report.pin_length = dist.pin_length();
  report.pin_word_total = dist.total();
  report.distinct_pins = dist.distinct_count();
  report.coverage_fraction = coverage(dist);
  report.coverage_percent = coverage_percent(dist);
  report.entropy_bits = dist.total() == 0 ? 0.0 : entropy_bits(dist);
  if (top_count > 0 && dist.total() > 0) report.top = top_k(dist, top_count);
  return report;
}

void write_table(std::ostream& out, const StatsReport& report) {
  out << "#PIN words  " << report.pin_word_total << '\n';
  out << "#PINs       " << report.distinct_pins << '\n';
  out << "Covering    " << report.coverage_percent << "%\n";
  out << "Entropy     " << std::fixed << std::setprecision(2)
      << report.entropy_bits << '\n';
  out.unsetf(std::ios::floatfield);
  if (!report.top.empty()) {
    out << "Top PINs    ";
    bool sep = false;
    for (const auto& [pin, count] : report.top) {
      if (sep) out << ", ";
      out << pin << " (" << count << ")";
      sep = true;
    }
    out << '\n';
  }
}

std::string report_to_json(const StatsReport& report) {
  nlohmann::ordered_json j;
  j["pin_length"] = report.pin_length;
  j["pin_words"] = report.pin_word_total;
  j["pins"] = report.distinct_pins;
  j["coverage"] = report.coverage_fraction;
  j["coverage_percent"] = report.coverage_percent;
  j["entropy_bits"] = report.entropy_bits;
  nlohmann::ordered_json top = nlohmann::ordered_json::array();
  for (const auto& [pin, count] : report.top)
    top.push_back({{"pin", pin}, {"count", count}});
  j["top"] = std::move(top);
  return j.dump(2);
}

}  // namespace pinwords
