#include "pinwords/pingen.hpp"

#include <ostream>
#include <set>

#include <json.hpp>

#include "pinwords/errors.hpp"
#include "pinwords/rng.hpp"

namespace pinwords {

PinDistribution::PinDistribution(int pin_length) : pin_length_(pin_length) {
  if (pin_length < 1)
    throw UsageError("PIN length must be positive");
}

bool PinDistribution::contains(const Pin& pin) const {
  return counts_.find(pin.digits()) != counts_.end();
}

void PinDistribution::add(const Pin& pin, std::uint64_t count) {
  if (pin.length() != pin_length_)
    throw UsageError("PIN " + pin.digits() + " does not have length " +
                     std::to_string(pin_length_));
  if (count == 0) return;
  counts_[pin.digits()] += count;
  total_ += count;
}

void PinDistribution::write_tsv(std::ostream& out) const {
  for (const auto& [pin, count] : counts_)
    out << pin << '\t' << count << '\n';
}

std::string PinDistribution::to_json() const {
  nlohmann::ordered_json j;
  j["pin_length"] = pin_length_;
  j["total"] = total_;
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (const auto& [pin, count] : counts_) counts[pin] = count;
  j["counts"] = std::move(counts);
  return j.dump(2);
}

const char* method_name(Method m) {
  switch (m) {
    case Method::Exact: return "exact";
    case Method::Prefix: return "prefix";
    case Method::Suffix: return "suffix";
    case Method::Polyglot: return "polyglot";
    case Method::Morph: return "morph";
  }
  return "?";
}

std::optional<Method> method_by_name(std::string_view name) {
  if (name == "exact") return Method::Exact;
  if (name == "prefix") return Method::Prefix;
  if (name == "suffix") return Method::Suffix;
  if (name == "polyglot") return Method::Polyglot;
  if (name == "morph") return Method::Morph;
  return std::nullopt;
}

namespace {

// Translates `word` and adds `weight` counts, or bumps the skip counter
// when the word contains letters the map does not cover.
void add_word(GenerationResult& result, std::string_view word,
              std::uint64_t weight, const LetterDigitMap& map) {
  for (char c : word) {
    if (!(c >= '0' && c <= '9') && !map.digit_for(c)) {
      result.skipped_words += weight;
      return;
    }
  }
  result.distribution.add(word_to_pin(word, map), weight);
}

void check_length(int n) {
  if (n < 2 || n > 10)
    throw UsageError("PIN length must be between 2 and 10, got " +
                     std::to_string(n));
}

}  // namespace

GenerationResult exact_length_pins(const Dictionary& dict, int n,
                                   const LetterDigitMap& map) {
  check_length(n);
  GenerationResult result{PinDistribution(n)};
  for (const auto& [word, variants] : dict.entries()) {
    if (static_cast<int>(word.size()) != n) continue;
    add_word(result, word, variants.size(), map);
  }
  return result;
}

GenerationResult prefix_pins(const Dictionary& dict, int n,
                             const LetterDigitMap& map) {
  check_length(n);
  GenerationResult result{PinDistribution(n)};
  for (const auto& [word, variants] : dict.entries()) {
    if (static_cast<int>(word.size()) < n) continue;
    add_word(result, std::string_view(word).substr(0, n), variants.size(),
             map);
  }
  return result;
}

GenerationResult suffix_pins(const Dictionary& dict, int n,
                             const LetterDigitMap& map) {
  check_length(n);
  GenerationResult result{PinDistribution(n)};
  for (const auto& [word, variants] : dict.entries()) {
    if (static_cast<int>(word.size()) < n) continue;
    add_word(result, std::string_view(word).substr(word.size() - n),
             variants.size(), map);
  }
  return result;
}

GenerationResult morph_pins(const Dictionary& dict, int n,
                            const LetterDigitMap& map) {
  check_length(n);
  GenerationResult result{PinDistribution(n)};
  std::string morphed;
  for (const auto& [word, variants] : dict.entries()) {
    if (static_cast<int>(word.size()) != n) continue;
    morphed = word;
    for (int pos = 0; pos < n; ++pos) {
      const char original = morphed[pos];
      for (char d = '0'; d <= '9'; ++d) {
        morphed[pos] = d;
        add_word(result, morphed, variants.size(), map);
      }
      morphed[pos] = original;
    }
  }
  return result;
}

GenerationResult polyglot_pins(const std::vector<const Dictionary*>& dicts,
                               int n, const LetterDigitMap& map) {
  if (dicts.size() < 2)
    throw UsageError("polyglot method needs at least two dictionaries");
  std::set<std::string> names;
  for (const Dictionary* d : dicts) {
    if (!names.insert(d->name()).second)
      throw UsageError("polyglot method given dictionary '" + d->name() +
                       "' twice");
  }
  Dictionary merged = Dictionary::merge(dicts, "polyglot");
  return exact_length_pins(merged, n, map);
}

GenerationResult generate(const GenerationSpec& spec) {
  if (!spec.map) throw UsageError("generation spec has no mapping");
  if (spec.method == Method::Polyglot)
    return polyglot_pins(spec.dictionaries, spec.pin_length, *spec.map);
  if (spec.dictionaries.size() != 1)
    throw UsageError(std::string(method_name(spec.method)) +
                     " method needs exactly one dictionary");
  const Dictionary& dict = *spec.dictionaries.front();
  switch (spec.method) {
    case Method::Exact:
      return exact_length_pins(dict, spec.pin_length, *spec.map);
    case Method::Prefix:
      return prefix_pins(dict, spec.pin_length, *spec.map);
    case Method::Suffix:
      return suffix_pins(dict, spec.pin_length, *spec.map);
    case Method::Morph:
      return morph_pins(dict, spec.pin_length, *spec.map);
    default:
      throw UsageError("unknown generation method");
  }
}

Pin random_pin(int n, std::uint64_t seed) {
  check_length(n);
  std::mt19937_64 rng(seed);
  std::string digits(n, '0');
  for (char& c : digits) c = static_cast<char>('0' + draw_below(rng, 10));
  return Pin(std::move(digits));
}

std::vector<Pin> random_pins(int n, std::size_t count, std::uint64_t seed) {
  check_length(n);
  std::mt19937_64 rng(seed);
  std::vector<Pin> pins;
  pins.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::string digits(n, '0');
    for (char& c : digits) c = static_cast<char>('0' + draw_below(rng, 10));
    pins.emplace_back(std::move(digits));
  }
  return pins;
}

}  // namespace pinwords
