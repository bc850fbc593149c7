#include "pinwords/dictionary.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "pinwords/errors.hpp"

namespace pinwords {

std::map<char32_t, std::string> NormalizeOptions::default_transliterations() {
  return {
      {U'ß', "ss"}, {U'ẞ', "ss"}, {U'œ', "oe"}, {U'Œ', "oe"},
      {U'æ', "ae"}, {U'Æ', "ae"}, {U'đ', "d"},  {U'Đ', "d"},
      {U'ð', "d"},  {U'Ð', "d"},  {U'þ', "th"}, {U'Þ', "th"},
  };
}

NormalizeOptions NormalizeOptions::for_language(std::string_view tag) {
  NormalizeOptions opts;
  opts.strip_english_possessive = (tag == "en");
  return opts;
}

std::vector<RawEntry> parse_dic(std::string_view bytes, Encoding enc) {
  std::vector<RawEntry> entries;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  bool first = true;
  while (pos <= bytes.size()) {
    if (pos == bytes.size() && lineno > 0) break;
    std::size_t eol = bytes.find('\n', pos);
    std::string_view line = (eol == std::string_view::npos)
                                ? bytes.substr(pos)
                                : bytes.substr(pos, eol - pos);
    pos = (eol == std::string_view::npos) ? bytes.size() + 1 : eol + 1;
    ++lineno;

    if (first && line.size() >= 3 &&
        line.substr(0, 3) == std::string_view("\xEF\xBB\xBF", 3))
      line.remove_prefix(3);  // UTF-8 BOM

    while (!line.empty() &&
           (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.remove_suffix(1);

    if (first) {
      first = false;
      // A bare integer on line one is the hunspell entry-count header.
      if (!line.empty() &&
          std::all_of(line.begin(), line.end(),
                      [](char c) { return c >= '0' && c <= '9'; }))
        continue;
    }
    if (line.empty() || line.front() == '#') continue;

    std::size_t slash = line.find('/');
    if (slash != std::string_view::npos) line = line.substr(0, slash);
    if (line.empty()) continue;

    // Decode now so encoding problems surface with a line number; entries
    // are stored re-encoded as UTF-8.
    std::u32string cps = uni::decode(line, enc, lineno);
    entries.push_back(RawEntry{uni::encode_utf8(cps)});
  }
  return entries;
}

namespace {

std::string casefold_utf8(std::string_view utf8) {
  std::u32string cps = uni::decode(utf8, Encoding::Utf8, 0);
  for (char32_t& cp : cps) cp = uni::simple_lower(cp);
  return uni::encode_utf8(cps);
}

}  // namespace

std::optional<std::string> normalize_word(std::string_view raw_utf8,
                                          const NormalizeOptions& opts) {
  std::string_view input = raw_utf8;
  if (opts.strip_english_possessive && input.size() >= 2 &&
      input.substr(input.size() - 2) == "'s")
    input.remove_suffix(2);

  std::u32string cps = uni::decode(input, Encoding::Utf8, 0);
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    if (auto it = opts.transliterations.find(cp);
        it != opts.transliterations.end()) {
      out += it->second;
      continue;
    }
    if (auto base = uni::fold_to_ascii(cp)) {
      out.push_back(*base);
      continue;
    }
    if (uni::is_combining_mark(cp)) continue;
    if ((cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z'))
      out.push_back(static_cast<char>(cp));
    // everything else is non-alphabetic: dropped
  }
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c += 0x20;
  if (out.empty()) return std::nullopt;
  return out;
}

Dictionary::Dictionary(std::string name, std::string language_tag)
    : name_(std::move(name)), language_tag_(std::move(language_tag)) {}

Dictionary Dictionary::build(const std::vector<RawEntry>& entries,
                             const NormalizeOptions& opts, std::string name,
                             std::string language_tag) {
  Dictionary dict(std::move(name), std::move(language_tag));
  dict.source_word_count_ = entries.size();

  // Spellings differing only in case are the same word; fold first.
  std::unordered_set<std::string> seen;
  seen.reserve(entries.size() * 2);
  for (const RawEntry& entry : entries) {
    std::string key = casefold_utf8(entry.text);
    if (!seen.insert(key).second) continue;
    auto normalized = normalize_word(key, opts);
    if (!normalized) continue;
    auto& variants = dict.variants_[*normalized];
    const std::string& variant =
        opts.accent_variants_distinct ? key : *normalized;
    auto it = std::lower_bound(variants.begin(), variants.end(), variant);
    if (it == variants.end() || *it != variant)
      variants.insert(it, variant);
  }
  for (const auto& [word, variants] : dict.variants_)
    dict.pin_word_count_ += variants.size();
  return dict;
}

Dictionary Dictionary::load_dic_file(const std::filesystem::path& path,
                                     Encoding enc,
                                     std::optional<std::string> language_tag,
                                     std::optional<NormalizeOptions> opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open dictionary file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();

  std::string tag;
  if (language_tag) {
    tag = *language_tag;
  } else {
    // "en", "en_US.dic", "fr-classique.dic" all yield the leading letters.
    std::string stem = path.stem().string();
    for (char c : stem) {
      if (!std::isalpha(static_cast<unsigned char>(c))) break;
      tag.push_back(static_cast<char>(std::tolower((unsigned char)c)));
    }
  }
  NormalizeOptions options =
      opts ? *opts : NormalizeOptions::for_language(tag);
  return build(parse_dic(buffer.str(), enc), options, path.stem().string(),
               tag);
}

Dictionary Dictionary::merge(const std::vector<const Dictionary*>& dicts,
                             std::string name) {
  if (dicts.empty()) throw UsageError("merge requires at least one dictionary");
  std::string tag;
  for (const Dictionary* d : dicts) {
    if (!tag.empty()) tag += '+';
    tag += d->language_tag();
  }
  Dictionary merged(std::move(name), std::move(tag));
  for (const Dictionary* d : dicts) {
    merged.source_word_count_ += d->source_word_count_;
    for (const auto& [word, variants] : d->variants_) {
      auto& target = merged.variants_[word];
      for (const std::string& v : variants) {
        auto it = std::lower_bound(target.begin(), target.end(), v);
        if (it == target.end() || *it != v) target.insert(it, v);
      }
    }
  }
  for (const auto& [word, variants] : merged.variants_)
    merged.pin_word_count_ += variants.size();
  return merged;
}

bool Dictionary::contains(std::string_view word) const {
  return variants_.find(std::string(word)) != variants_.end();
}

std::size_t Dictionary::multiplicity(std::string_view word) const {
  auto it = variants_.find(std::string(word));
  return it == variants_.end() ? 0 : it->second.size();
}

}  // namespace pinwords
