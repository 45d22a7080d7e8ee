#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

// Minimal UTF-8 walking helpers. All public offsets in this library are
// Unicode code points, matching the offset convention of the dataset format;
// bytes appear only at the splice points where std::string is edited.
namespace advqa::utf8 {

// Number of bytes in the sequence starting with lead byte `b`.
// Invalid lead bytes are treated as single-byte units so malformed input
// cannot make a cursor stall.
inline std::size_t seq_len(unsigned char b) {
  if (b < 0x80) return 1;
  if ((b & 0xE0) == 0xC0) return 2;
  if ((b & 0xF0) == 0xE0) return 3;
  if ((b & 0xF8) == 0xF0) return 4;
  return 1;
}

inline std::size_t cp_length(std::string_view s) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < s.size(); i += seq_len(static_cast<unsigned char>(s[i]))) ++n;
  return n;
}

// Byte offset of code point `cp_index`; s.size() when past the end.
inline std::size_t cp_to_byte(std::string_view s, std::size_t cp_index) {
  std::size_t i = 0;
  for (std::size_t n = 0; n < cp_index && i < s.size(); ++n)
    i += seq_len(static_cast<unsigned char>(s[i]));
  return i;
}

inline std::string cp_substr(std::string_view s, std::size_t cp_start, std::size_t cp_len) {
  const std::size_t b0 = cp_to_byte(s, cp_start);
  const std::size_t b1 = cp_to_byte(s, cp_start + cp_len);
  return std::string(s.substr(b0, b1 - b0));
}

// Decodes the code point starting at byte `i` and advances `i`.
inline char32_t decode_at(std::string_view s, std::size_t& i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  const std::size_t len = seq_len(b0);
  if (len == 1 || i + len > s.size()) {
    ++i;
    return b0;
  }
  char32_t cp = b0 & (0xFF >> (len + 1));
  for (std::size_t k = 1; k < len; ++k)
    cp = (cp << 6) | (static_cast<unsigned char>(s[i + k]) & 0x3F);
  i += len;
  return cp;
}

}  // namespace advqa::utf8
