#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace drekit {

// Canonical whitespace tokenizer used everywhere token offsets appear.
// Splits on Unicode whitespace, then detaches leading/trailing ASCII
// punctuation characters as separate single-character tokens. The byte
// offsets refer to the original input string.
struct Token {
  std::string text;
  std::size_t byte_start = 0;  // inclusive
  std::size_t byte_end = 0;    // exclusive
};

namespace detail {

inline bool is_ascii_ws(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

inline bool is_ascii_punct(unsigned char c) {
  return c < 128 && std::ispunct(c);
}

// Decodes one UTF-8 code point at `i`; advances `i` past it. Malformed
// bytes are consumed one at a time and returned verbatim.
inline char32_t decode_utf8(std::string_view s, std::size_t& i) {
  unsigned char c0 = static_cast<unsigned char>(s[i]);
  if (c0 < 0x80) {
    ++i;
    return c0;
  }
  int extra = 0;
  char32_t cp = 0;
  if ((c0 & 0xE0) == 0xC0) {
    extra = 1;
    cp = c0 & 0x1F;
  } else if ((c0 & 0xF0) == 0xE0) {
    extra = 2;
    cp = c0 & 0x0F;
  } else if ((c0 & 0xF8) == 0xF0) {
    extra = 3;
    cp = c0 & 0x07;
  } else {
    ++i;
    return c0;
  }
  if (i + extra >= s.size()) {
    ++i;
    return c0;
  }
  std::size_t j = i + 1;
  for (int k = 0; k < extra; ++k, ++j) {
    if (j >= s.size() || (static_cast<unsigned char>(s[j]) & 0xC0) != 0x80) {
      ++i;
      return c0;
    }
    cp = (cp << 6) | (static_cast<unsigned char>(s[j]) & 0x3F);
  }
  i = j;
  return cp;
}

inline bool is_unicode_ws(char32_t cp) {
  switch (cp) {
    case 0x0009: case 0x000A: case 0x000B: case 0x000C: case 0x000D:
    case 0x0020: case 0x0085: case 0x00A0: case 0x1680:
    case 0x2028: case 0x2029: case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

}  // namespace detail

inline std::vector<Token> tokenize_with_offsets(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t cp_start = i;
    char32_t cp = detail::decode_utf8(text, i);
    if (detail::is_unicode_ws(cp)) continue;
    // accumulate one whitespace-delimited chunk
    std::size_t chunk_start = cp_start;
    std::size_t chunk_end = i;
    while (i < text.size()) {
      std::size_t p = i;
      char32_t c = detail::decode_utf8(text, i);
      if (detail::is_unicode_ws(c)) break;
      chunk_end = i;
      (void)p;
    }
    // peel ASCII punctuation off both ends of [chunk_start, chunk_end)
    std::size_t lo = chunk_start, hi = chunk_end;
    std::vector<Token> lead, trail;
    while (lo < hi && detail::is_ascii_punct(static_cast<unsigned char>(text[lo]))) {
      lead.push_back({std::string(1, text[lo]), lo, lo + 1});
      ++lo;
    }
    while (hi > lo && detail::is_ascii_punct(static_cast<unsigned char>(text[hi - 1]))) {
      trail.push_back({std::string(1, text[hi - 1]), hi - 1, hi});
      --hi;
    }
    for (auto& t : lead) out.push_back(std::move(t));
    if (lo < hi) out.push_back({std::string(text.substr(lo, hi - lo)), lo, hi});
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) out.push_back(std::move(*it));
  }
  return out;
}

inline std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  for (auto& t : tokenize_with_offsets(text)) out.push_back(std::move(t.text));
  return out;
}

// Collapses whitespace runs to single spaces and trims the ends.
inline std::string normalize_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  bool pending_space = false;
  bool seen_any = false;
  while (i < text.size()) {
    std::size_t start = i;
    char32_t cp = detail::decode_utf8(text, i);
    if (detail::is_unicode_ws(cp)) {
      pending_space = seen_any;
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.append(text.substr(start, i - start));
    seen_any = true;
  }
  return out;
}

inline std::string join_tokens(const std::vector<std::string>& tokens, std::size_t from,
                               std::size_t to_inclusive) {
  std::string out;
  for (std::size_t k = from; k <= to_inclusive && k < tokens.size(); ++k) {
    if (k > from) out.push_back(' ');
    out += tokens[k];
  }
  return out;
}

}  // namespace drekit
