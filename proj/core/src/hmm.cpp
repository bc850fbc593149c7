#include "pinwords/hmm.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include <json.hpp>

#include "pinwords/errors.hpp"

namespace pinwords {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kSmoothingAlpha = 0.01;

int idx(char letter) { return letter - 'a'; }

}  // namespace

HmmModel HmmModel::train(const Dictionary& dict, LetterDigitMap map) {
  if (dict.empty()) throw UsageError("cannot train a model on an empty dictionary");

  HmmModel model(std::move(map));
  std::array<double, 26> start_counts{};
  std::array<std::array<double, 26>, 26> bigram_counts{};
  double words = 0;
  for (const auto& [word, variants] : dict.entries()) {
    const double weight = static_cast<double>(variants.size());
    words += weight;
    start_counts[idx(word.front())] += weight;
    for (std::size_t t = 0; t + 1 < word.size(); ++t)
      bigram_counts[idx(word[t])][idx(word[t + 1])] += weight;
  }

  model.start_total_ = words;
  for (int i = 0; i < 26; ++i) {
    model.initial_[i] = start_counts[i] / words;
    double row = 0;
    for (int j = 0; j < 26; ++j) row += bigram_counts[i][j];
    model.row_totals_[i] = row;
    for (int j = 0; j < 26; ++j)
      model.transition_[i][j] = row > 0 ? bigram_counts[i][j] / row : 0.0;
  }
  model.finalize();
  return model;
}

void HmmModel::finalize() {
  for (int i = 0; i < 26; ++i) {
    log_initial_[i] = initial_[i] > 0 ? std::log(initial_[i]) : kNegInf;
    const double smoothed_pi = (initial_[i] * start_total_ + kSmoothingAlpha) /
                               (start_total_ + 26 * kSmoothingAlpha);
    log_initial_smoothed_[i] = std::log(smoothed_pi);
    for (int j = 0; j < 26; ++j) {
      const double p = transition_[i][j];
      log_transition_[i][j] = p > 0 ? std::log(p) : kNegInf;
      const double smoothed =
          (p * row_totals_[i] + kSmoothingAlpha) /
          (row_totals_[i] + 26 * kSmoothingAlpha);
      log_transition_smoothed_[i][j] = std::log(smoothed);
    }
  }
}

double HmmModel::initial(char letter) const { return initial_[idx(letter)]; }

double HmmModel::transition(char from, char to) const {
  return transition_[idx(from)][idx(to)];
}

bool HmmModel::dead_row(char letter) const {
  return row_totals_[idx(letter)] == 0;
}

double HmmModel::path_log_prob(std::string_view word, bool use_smoothed) const {
  const auto& log_pi = use_smoothed ? log_initial_smoothed_ : log_initial_;
  const auto& log_a = use_smoothed ? log_transition_smoothed_ : log_transition_;
  double sum = log_pi[idx(word[0])];
  for (std::size_t t = 0; t + 1 < word.size(); ++t)
    sum += log_a[idx(word[t])][idx(word[t + 1])];
  return sum;
}

double HmmModel::sequence_probability(std::string_view word) const {
  if (word.empty()) throw UsageError("sequence_probability needs a word");
  for (char c : word)
    if (c < 'a' || c > 'z')
      throw UsageError("word must be lowercase a-z, got '" +
                       std::string(1, c) + "'");
  return path_log_prob(word, false);
}

// Both decode routes share one tie-break rule: among all letter sequences
// whose probability equals the maximum, return the lexicographically
// smallest. Log sums are always accumulated left to right so the DP, the
// reconstruction, and the brute-force oracle agree bit for bit.
DecodeResult HmmModel::decode(const Pin& pin, bool use_smoothed) const {
  const auto& log_pi = use_smoothed ? log_initial_smoothed_ : log_initial_;
  const auto& log_a = use_smoothed ? log_transition_smoothed_ : log_transition_;
  const int n = pin.length();

  std::vector<const std::string*> letters(n);
  for (int t = 0; t < n; ++t) {
    const std::string& set = map_.letters_for(pin.digit_at(t));
    if (set.empty())
      throw UnmappableError("digit " + std::to_string(pin.digit_at(t)) +
                            " has no letters under mapping " + map_.name());
    letters[t] = &set;
  }

  // Forward pass: best[t][j] = max over paths ending in letter j at t.
  std::array<double, 26> best;
  std::array<double, 26> next;
  best.fill(kNegInf);
  for (char c : *letters[0]) best[idx(c)] = log_pi[idx(c)];
  for (int t = 1; t < n; ++t) {
    next.fill(kNegInf);
    for (char cj : *letters[t]) {
      double b = kNegInf;
      for (char ck : *letters[t - 1]) {
        const double v = best[idx(ck)] + log_a[idx(ck)][idx(cj)];
        if (v > b) b = v;
      }
      next[idx(cj)] = b;
    }
    best = next;
  }
  double target = kNegInf;
  for (char c : *letters[n - 1])
    if (best[idx(c)] > target) target = best[idx(c)];

  if (target == kNegInf) {
    if (use_smoothed)
      throw Error("smoothed model produced a zero-probability path");
    DecodeResult fallback = decode(pin, true);
    fallback.log_probability = kNegInf;
    fallback.smoothed = true;
    return fallback;
  }

  // Reconstruct the lexicographically smallest optimal path from the
  // front: fix the smallest letter whose best completion still reaches
  // the target. Completions reuse the same forward recurrence, seeded
  // with the prefix sum, so comparisons against `target` are exact.
  const auto completion_max = [&](double prefix_sum, char at, int t) {
    best.fill(kNegInf);
    best[idx(at)] = prefix_sum;
    for (int u = t + 1; u < n; ++u) {
      next.fill(kNegInf);
      for (char cj : *letters[u]) {
        double b = kNegInf;
        for (char ck : *letters[u - 1]) {
          const double v = best[idx(ck)] + log_a[idx(ck)][idx(cj)];
          if (v > b) b = v;
        }
        next[idx(cj)] = b;
      }
      best = next;
    }
    double m = kNegInf;
    for (char c : *letters[n - 1])
      if (best[idx(c)] > m) m = best[idx(c)];
    return m;
  };

  std::string word;
  word.reserve(n);
  double prefix = 0;
  for (int t = 0; t < n; ++t) {
    bool fixed = false;
    for (char c : *letters[t]) {  // inverse sets are stored sorted
      const double sum =
          t == 0 ? log_pi[idx(c)] : prefix + log_a[idx(word.back())][idx(c)];
      if (completion_max(sum, c, t) == target) {
        word.push_back(c);
        prefix = sum;
        fixed = true;
        break;
      }
    }
    if (!fixed) throw Error("viterbi reconstruction lost the optimal path");
  }
  return DecodeResult{std::move(word), target, use_smoothed};
}

DecodeResult HmmModel::viterbi(const Pin& pin) const {
  DecodeResult result = decode(pin, false);
  if (result.smoothed) return result;
  result.smoothed = false;
  return result;
}

DecodeResult HmmModel::brute_force_best(const Pin& pin) const {
  const int n = pin.length();
  if (n > 8)
    throw UsageError("brute force search is limited to PINs of length 8");
  std::vector<const std::string*> letters(n);
  for (int t = 0; t < n; ++t) {
    const std::string& set = map_.letters_for(pin.digit_at(t));
    if (set.empty())
      throw UnmappableError("digit " + std::to_string(pin.digit_at(t)) +
                            " has no letters under mapping " + map_.name());
    letters[t] = &set;
  }

  const auto search = [&](bool use_smoothed) {
    std::string word(n, 'a');
    std::vector<std::size_t> pos(n, 0);
    for (int t = 0; t < n; ++t) word[t] = (*letters[t])[0];
    std::string best_word;
    double best = kNegInf;
    while (true) {
      const double p = path_log_prob(word, use_smoothed);
      if (p > best) {  // strict: the first maximum wins, lex order
        best = p;
        best_word = word;
      }
      int t = n - 1;
      while (t >= 0 && pos[t] + 1 == letters[t]->size()) {
        pos[t] = 0;
        word[t] = (*letters[t])[0];
        --t;
      }
      if (t < 0) break;
      ++pos[t];
      word[t] = (*letters[t])[pos[t]];
    }
    return std::pair<std::string, double>(best_word, best);
  };

  auto [word, value] = search(false);
  if (value != kNegInf) return DecodeResult{std::move(word), value, false};
  auto [smoothed_word, ignored] = search(true);
  return DecodeResult{std::move(smoothed_word), kNegInf, true};
}

std::string HmmModel::to_json() const {
  nlohmann::ordered_json j;
  j["map_name"] = map_.name();
  j["initial"] = initial_;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : transition_) rows.push_back(row);
  j["transition"] = std::move(rows);
  j["start_total"] = start_total_;
  j["row_totals"] = row_totals_;
  return j.dump(2);
}

HmmModel HmmModel::from_json(std::string_view text, LetterDigitMap map) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ValidationError("model document is not valid JSON");
  try {
    if (j.at("map_name").get<std::string>() != map.name())
      throw ValidationError("model was trained for mapping '" +
                            j.at("map_name").get<std::string>() +
                            "', not '" + map.name() + "'");
    HmmModel model(std::move(map));
    const auto& initial = j.at("initial");
    const auto& transition = j.at("transition");
    if (initial.size() != 26 || transition.size() != 26)
      throw ValidationError("model arrays must cover 26 letters");
    double pi_sum = 0;
    for (int i = 0; i < 26; ++i) {
      model.initial_[i] = initial[i].get<double>();
      pi_sum += model.initial_[i];
      const auto& row = transition[i];
      if (row.size() != 26)
        throw ValidationError("transition rows must cover 26 letters");
      for (int jx = 0; jx < 26; ++jx)
        model.transition_[i][jx] = row[jx].get<double>();
    }
    model.start_total_ = j.at("start_total").get<double>();
    const auto& totals = j.at("row_totals");
    if (totals.size() != 26)
      throw ValidationError("row_totals must cover 26 letters");
    for (int i = 0; i < 26; ++i)
      model.row_totals_[i] = totals[i].get<double>();

    if (std::abs(pi_sum - 1.0) > 1e-9)
      throw ValidationError("initial probabilities do not sum to 1");
    for (int i = 0; i < 26; ++i) {
      double row_sum = 0;
      for (int jx = 0; jx < 26; ++jx) row_sum += model.transition_[i][jx];
      const bool dead = model.row_totals_[i] == 0;
      if (dead && row_sum != 0)
        throw ValidationError("dead transition row carries probability mass");
      if (!dead && std::abs(row_sum - 1.0) > 1e-9)
        throw ValidationError("transition row " + std::string(1, char('a' + i)) +
                              " does not sum to 1");
    }
    model.finalize();
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed model document: ") + e.what());
  }
}

}  // namespace pinwords
