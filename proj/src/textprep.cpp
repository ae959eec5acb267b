#include "senti/textprep.hpp"

#include <cstdint>
#include <fstream>
#include <limits>

#include "senti/errors.hpp"

namespace senti {

namespace {

// Decodes one UTF-8 codepoint at s[i]. On malformed input returns the single
// byte value and advances by one so normalization stays total; ingestion
// rejects invalid UTF-8 before text reaches this point.
std::uint32_t decode_utf8(std::string_view s, std::size_t& i) {
  const auto byte = [&](std::size_t k) {
    return static_cast<std::uint32_t>(static_cast<unsigned char>(s[k]));
  };
  const std::uint32_t b0 = byte(i);
  if (b0 < 0x80) {
    i += 1;
    return b0;
  }
  auto cont = [&](std::size_t k) {
    return k < s.size() && (static_cast<unsigned char>(s[k]) & 0xc0) == 0x80;
  };
  if ((b0 & 0xe0) == 0xc0 && cont(i + 1)) {
    const std::uint32_t cp = ((b0 & 0x1f) << 6) | (byte(i + 1) & 0x3f);
    i += 2;
    return cp >= 0x80 ? cp : 0xFFFD;
  }
  if ((b0 & 0xf0) == 0xe0 && cont(i + 1) && cont(i + 2)) {
    const std::uint32_t cp =
        ((b0 & 0x0f) << 12) | ((byte(i + 1) & 0x3f) << 6) | (byte(i + 2) & 0x3f);
    i += 3;
    return cp >= 0x800 ? cp : 0xFFFD;
  }
  if ((b0 & 0xf8) == 0xf0 && cont(i + 1) && cont(i + 2) && cont(i + 3)) {
    const std::uint32_t cp = ((b0 & 0x07) << 18) | ((byte(i + 1) & 0x3f) << 12) |
                             ((byte(i + 2) & 0x3f) << 6) | (byte(i + 3) & 0x3f);
    i += 4;
    return (cp >= 0x10000 && cp <= 0x10FFFF) ? cp : 0xFFFD;
  }
  i += 1;
  return b0;  // stray byte, passed through
}

void encode_utf8(std::uint32_t cp, std::string& out) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xc0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3f));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xe0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3f));
    out += static_cast<char>(0x80 | (cp & 0x3f));
  } else {
    out += static_cast<char>(0xf0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3f));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3f));
    out += static_cast<char>(0x80 | (cp & 0x3f));
  }
}

bool is_combining_mark(std::uint32_t cp) { return cp >= 0x0300 && cp <= 0x036f; }

// Unaccented lowercase ASCII base letter for Latin-1 Supplement and Latin
// Extended-A codepoints that canonically decompose to base + combining
// mark(s); 0 for everything else. Ligatures and stroked letters (ae, o-slash,
// l-slash, eth, thorn, ...) have no canonical decomposition and are preserved.
char latin_base(std::uint32_t cp) {
  if ((cp >= 0xc0 && cp <= 0xc5) || (cp >= 0xe0 && cp <= 0xe5)) return 'a';
  if (cp == 0xc7 || cp == 0xe7) return 'c';
  if ((cp >= 0xc8 && cp <= 0xcb) || (cp >= 0xe8 && cp <= 0xeb)) return 'e';
  if ((cp >= 0xcc && cp <= 0xcf) || (cp >= 0xec && cp <= 0xef)) return 'i';
  if (cp == 0xd1 || cp == 0xf1) return 'n';
  if ((cp >= 0xd2 && cp <= 0xd6) || (cp >= 0xf2 && cp <= 0xf6)) return 'o';
  if ((cp >= 0xd9 && cp <= 0xdc) || (cp >= 0xf9 && cp <= 0xfc)) return 'u';
  if (cp == 0xdd || cp == 0xfd || cp == 0xff) return 'y';
  if (cp >= 0x100 && cp <= 0x105) return 'a';
  if (cp >= 0x106 && cp <= 0x10d) return 'c';
  if (cp >= 0x10e && cp <= 0x10f) return 'd';
  if (cp >= 0x112 && cp <= 0x11b) return 'e';
  if (cp >= 0x11c && cp <= 0x123) return 'g';
  if (cp >= 0x124 && cp <= 0x125) return 'h';
  if (cp >= 0x128 && cp <= 0x130) return 'i';
  if (cp >= 0x134 && cp <= 0x135) return 'j';
  if (cp >= 0x136 && cp <= 0x137) return 'k';
  if (cp >= 0x139 && cp <= 0x13e) return 'l';
  if (cp >= 0x143 && cp <= 0x148) return 'n';
  if (cp >= 0x14c && cp <= 0x151) return 'o';
  if (cp >= 0x154 && cp <= 0x159) return 'r';
  if (cp >= 0x15a && cp <= 0x161) return 's';
  if (cp >= 0x162 && cp <= 0x165) return 't';
  if (cp >= 0x168 && cp <= 0x173) return 'u';
  if (cp >= 0x174 && cp <= 0x175) return 'w';
  if (cp >= 0x176 && cp <= 0x178) return 'y';
  if (cp >= 0x179 && cp <= 0x17e) return 'z';
  return 0;
}

// Lowercase counterparts of the preserved (non-decomposable) Latin letters.
std::uint32_t latin_lower(std::uint32_t cp) {
  switch (cp) {
    case 0xc6: return 0xe6;   // AE
    case 0xd0: return 0xf0;   // eth
    case 0xd8: return 0xf8;   // O-slash
    case 0xde: return 0xfe;   // thorn
    case 0x110: return 0x111; // D-stroke
    case 0x126: return 0x127; // H-stroke
    case 0x132: return 0x133; // IJ
    case 0x141: return 0x142; // L-stroke
    case 0x14a: return 0x14b; // eng
    case 0x152: return 0x153; // OE
    case 0x166: return 0x167; // T-stroke
    default: return cp;
  }
}

bool is_token_char(char ch) {
  return (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9');
}

}  // namespace

std::string normalize_text(std::string_view text, bool fold_c_cedilla) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const std::size_t start = i;
    const std::uint32_t cp = decode_utf8(text, i);
    if (cp < 0x80) {
      char ch = static_cast<char>(cp);
      if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
      out += ch;
      continue;
    }
    if (is_combining_mark(cp)) continue;  // converges NFC/NFD inputs
    if (cp == 0xc7 || cp == 0xe7) {
      if (fold_c_cedilla) {
        out += 'c';
      } else {
        encode_utf8(0xe7, out);
      }
      continue;
    }
    if (const char base = latin_base(cp)) {
      out += base;
      continue;
    }
    const std::uint32_t lowered = latin_lower(cp);
    if (lowered == cp) {
      out.append(text.substr(start, i - start));
    } else {
      encode_utf8(lowered, out);
    }
  }
  return out;
}

void NormalizationConfig::validate() const {
  if (min_token_len < 1 || min_token_len > max_token_len)
    throw DomainError("normalization config requires 1 <= min_token_len <= "
                      "max_token_len, got [" +
                      std::to_string(min_token_len) + ", " +
                      std::to_string(max_token_len) + "]");
}

std::vector<std::string> tokenize(std::string_view normalized,
                                  const NormalizationConfig& config) {
  config.validate();
  std::vector<std::string> tokens;
  std::size_t run_start = 0;
  std::size_t run_len = 0;
  auto flush = [&] {
    if (run_len == 0) return;
    // Length bound first, stopword check second.
    if (run_len >= config.min_token_len && run_len <= config.max_token_len) {
      std::string tok(normalized.substr(run_start, run_len));
      if (config.stopwords.find(tok) == config.stopwords.end())
        tokens.push_back(std::move(tok));
    }
    run_len = 0;
  };
  for (std::size_t i = 0; i < normalized.size(); ++i) {
    if (is_token_char(normalized[i])) {
      if (run_len == 0) run_start = i;
      ++run_len;
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

StopwordSet load_stopwords(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open stopword file: " + path);

  NormalizationConfig permissive;
  permissive.min_token_len = 1;
  permissive.max_token_len = std::numeric_limits<std::size_t>::max();

  StopwordSet set;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::string normalized = normalize_text(line);
    const auto parts = tokenize(normalized, permissive);
    if (parts.size() > 1)
      throw IoError(path + ":" + std::to_string(line_no) +
                    ": stopword entry \"" + line + "\" is not a single token");
    if (parts.size() == 1) set.insert(parts[0]);
  }
  return set;
}

bool is_valid_utf8(std::string_view bytes) {
  std::size_t i = 0;
  while (i < bytes.size()) {
    const unsigned char b0 = static_cast<unsigned char>(bytes[i]);
    std::size_t len;
    std::uint32_t cp;
    if (b0 < 0x80) {
      i += 1;
      continue;
    } else if ((b0 & 0xe0) == 0xc0) {
      len = 2;
      cp = b0 & 0x1f;
    } else if ((b0 & 0xf0) == 0xe0) {
      len = 3;
      cp = b0 & 0x0f;
    } else if ((b0 & 0xf8) == 0xf0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      return false;
    }
    if (i + len > bytes.size()) return false;
    for (std::size_t k = 1; k < len; ++k) {
      const unsigned char b = static_cast<unsigned char>(bytes[i + k]);
      if ((b & 0xc0) != 0x80) return false;
      cp = (cp << 6) | (b & 0x3f);
    }
    // Overlong encodings, surrogates, and values beyond U+10FFFF.
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
        (len == 4 && cp < 0x10000) || cp > 0x10FFFF ||
        (cp >= 0xD800 && cp <= 0xDFFF))
      return false;
    i += len;
  }
  return true;
}

}  // namespace senti
