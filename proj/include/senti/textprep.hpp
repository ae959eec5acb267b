#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace senti {

using StopwordSet = std::unordered_set<std::string>;

struct NormalizationConfig {
  std::size_t min_token_len = 2;
  std::size_t max_token_len = 30;
  StopwordSet stopwords;
  bool fold_c_cedilla = true;

  // Enforces 1 <= min_token_len <= max_token_len.
  void validate() const;
};

// Lowercases and strips diacritics from Latin letters (canonical
// decomposition + removal of combining marks, with an explicit cedilla
// pre-pass so the rule holds independent of decomposition tables).
// Characters outside [a-z0-9] are preserved; tokenization discards them.
// Idempotent: normalize_text(normalize_text(x)) == normalize_text(x).
std::string normalize_text(std::string_view text, bool fold_c_cedilla = true);

// Splits normalized text into maximal [a-z0-9] runs, drops runs outside
// [min_token_len, max_token_len], then drops stopwords. Order preserved.
std::vector<std::string> tokenize(std::string_view normalized,
                                  const NormalizationConfig& config);

// One word per line, '#' comments and blank lines allowed. Entries are
// normalized before insertion; an entry spanning more than one token is a
// load error naming the line.
StopwordSet load_stopwords(const std::string& path);

// True iff bytes form valid UTF-8.
bool is_valid_utf8(std::string_view bytes);

}  // namespace senti
