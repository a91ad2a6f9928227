/* Copyright 2026 The lexsent Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "core/text_normalize.hpp"

#include <cstdint>

namespace lexsent {
namespace {

constexpr char32_t kInvalid = 0xFFFFFFFF;

// Decodes one code point starting at s[i] and advances i. Malformed
// sequences consume a single byte and yield kInvalid.
char32_t decode_utf8(std::string_view s, std::size_t& i) {
  const auto lead = static_cast<unsigned char>(s[i]);
  if (lead < 0x80) {
    ++i;
    return lead;
  }
  int extra = 0;
  char32_t cp = 0;
  if ((lead & 0xE0) == 0xC0) {
    extra = 1;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    extra = 2;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    extra = 3;
    cp = lead & 0x07;
  } else {
    ++i;
    return kInvalid;
  }
  if (i + extra >= s.size()) {
    ++i;
    return kInvalid;
  }
  for (int k = 1; k <= extra; ++k) {
    const auto c = static_cast<unsigned char>(s[i + k]);
    if ((c & 0xC0) != 0x80) {
      ++i;
      return kInvalid;
    }
    cp = (cp << 6) | (c & 0x3F);
  }
  i += extra + 1;
  return cp;
}

// Base-letter spelling for U+00C0..U+00FF. Empty entries are separators.
constexpr const char* kLatin1[64] = {
    "a", "a", "a", "a", "a", "a", "ae", "c",   // C0-C7
    "e", "e", "e", "e", "i", "i", "i",  "i",   // C8-CF
    "d", "n", "o", "o", "o", "o", "o",  "",    // D0-D7 (D7 is x-sign)
    "o", "u", "u", "u", "u", "y", "th", "ss",  // D8-DF
    "a", "a", "a", "a", "a", "a", "ae", "c",   // E0-E7
    "e", "e", "e", "e", "i", "i", "i",  "i",   // E8-EF
    "d", "n", "o", "o", "o", "o", "o",  "",    // F0-F7 (F7 is division)
    "o", "u", "u", "u", "u", "y", "th", "y",   // F8-FF
};

struct FoldRange {
  char32_t first;
  char32_t last;
  const char* base;
};

constexpr FoldRange kLatinExtendedA[] = {
    {0x0100, 0x0105, "a"},  {0x0106, 0x010D, "c"},  {0x010E, 0x0111, "d"},
    {0x0112, 0x011B, "e"},  {0x011C, 0x0123, "g"},  {0x0124, 0x0127, "h"},
    {0x0128, 0x0131, "i"},  {0x0132, 0x0133, "ij"}, {0x0134, 0x0135, "j"},
    {0x0136, 0x0138, "k"},  {0x0139, 0x0142, "l"},  {0x0143, 0x014B, "n"},
    {0x014C, 0x0151, "o"},  {0x0152, 0x0153, "oe"}, {0x0154, 0x0159, "r"},
    {0x015A, 0x0161, "s"},  {0x0162, 0x0167, "t"},  {0x0168, 0x0173, "u"},
    {0x0174, 0x0175, "w"},  {0x0176, 0x0178, "y"},  {0x0179, 0x017E, "z"},
    {0x017F, 0x017F, "s"},
};

// Returns the ASCII spelling of cp, "" for a separator, or nullptr for a
// code point that vanishes without splitting (combining marks).
const char* fold(char32_t cp, char (&ascii)[2]) {
  if (cp < 0x80) {
    const auto c = static_cast<char>(cp);
    if (c >= 'A' && c <= 'Z') {
      ascii[0] = static_cast<char>(c - 'A' + 'a');
      return ascii;
    }
    if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) {
      ascii[0] = c;
      return ascii;
    }
    return "";
  }
  if (cp >= 0x0300 && cp <= 0x036F) return nullptr;
  if (cp >= 0x00C0 && cp <= 0x00FF) return kLatin1[cp - 0x00C0];
  for (const auto& r : kLatinExtendedA) {
    if (cp >= r.first && cp <= r.last) return r.base;
  }
  return "";
}

}  // namespace

std::vector<std::string> normalize_tokens(std::string_view utf8) {
  std::vector<std::string> tokens;
  std::string current;
  char ascii[2] = {0, 0};
  std::size_t i = 0;
  while (i < utf8.size()) {
    const char32_t cp = decode_utf8(utf8, i);
    const char* spelled = cp == kInvalid ? "" : fold(cp, ascii);
    if (spelled == nullptr) continue;
    if (*spelled == '\0') {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
      continue;
    }
    current += spelled;
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

bool is_numeric_token(std::string_view token) {
  if (token.empty()) return false;
  for (char c : token) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace lexsent
