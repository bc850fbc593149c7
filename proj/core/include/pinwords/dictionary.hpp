#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pinwords/unicode.hpp"

namespace pinwords {

/// One word line from a .dic file, after affix-flag stripping.
struct RawEntry {
  std::string text;  // UTF-8
};

struct NormalizeOptions {
  // Drop a trailing "'s" before any other rule (used for English).
  bool strip_english_possessive = false;

  // Expansions applied to letters that canonical decomposition cannot
  // reduce to an ASCII base (ss for sharp s, oe/ae for the ligatures...).
  // Values must be non-empty strings over a-z.
  std::map<char32_t, std::string> transliterations = default_transliterations();

  // When true, source spellings that differ only in accents ("mole" and
  // "môle") keep separate counts even though they normalize to the same
  // word. Spellings differing only in letter case always collapse.
  bool accent_variants_distinct = true;

  static std::map<char32_t, std::string> default_transliterations();
  static NormalizeOptions for_language(std::string_view language_tag);
};

// Splits .dic file bytes into word entries:
//  - a first line that is a bare integer is the entry-count header (skipped)
//  - everything from the first '/' onward is an affix flag list (removed)
//  - blank lines and lines starting with '#' are skipped
// Throws EncodingError (with the line number) on undecodable input.
std::vector<RawEntry> parse_dic(std::string_view bytes,
                                Encoding enc = Encoding::Utf8);

// Word normalization: optional possessive stripping, transliteration,
// diacritic removal by canonical decomposition, removal of everything
// non-alphabetic, lowercasing. Returns nullopt when nothing remains.
std::optional<std::string> normalize_word(std::string_view raw_utf8,
                                          const NormalizeOptions& opts);

// A named set of normalized words. Each word carries the distinct source
// spellings (case-folded) that produced it, so PIN-word counts can treat
// accent variants as separate words while the word set stays deduplicated.
class Dictionary {
 public:
  Dictionary(std::string name, std::string language_tag);

  static Dictionary build(const std::vector<RawEntry>& entries,
                          const NormalizeOptions& opts, std::string name,
                          std::string language_tag);

  // Reads and builds in one step; language tag (and with it the possessive
  // default) is derived from the file name unless given.
  static Dictionary load_dic_file(const std::filesystem::path& path,
                                  Encoding enc = Encoding::Utf8,
                                  std::optional<std::string> language_tag = {},
                                  std::optional<NormalizeOptions> opts = {});

  static Dictionary merge(const std::vector<const Dictionary*>& dicts,
                          std::string name);

  const std::string& name() const { return name_; }
  const std::string& language_tag() const { return language_tag_; }

  /// Raw entries seen by build(), before any dedup or rejection.
  std::size_t source_word_count() const { return source_word_count_; }

  /// Set-semantics size: distinct normalized words.
  std::size_t size() const { return variants_.size(); }
  bool empty() const { return variants_.empty(); }
  bool contains(std::string_view word) const;

  /// Multiset-semantics size: counts accent variants separately.
  std::uint64_t pin_word_count() const { return pin_word_count_; }

  std::size_t multiplicity(std::string_view word) const;

  /// Normalized word -> sorted distinct source spellings.
  const std::map<std::string, std::vector<std::string>>& entries() const {
    return variants_;
  }

 private:
  std::string name_;
  std::string language_tag_;
  std::size_t source_word_count_ = 0;
  std::uint64_t pin_word_count_ = 0;
  std::map<std::string, std::vector<std::string>> variants_;
};

}  // namespace pinwords
