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

#include "doctest.h"

using lexsent::normalize_tokens;
using Tokens = std::vector<std::string>;

TEST_CASE("normalize_tokens lowercases and splits on non-alphanumerics") {
  CHECK(normalize_tokens("Aggravated ASSAULT, with-intent!") ==
        Tokens{"aggravated", "assault", "with", "intent"});
  CHECK(normalize_tokens("a\tb\nc\rd") == Tokens{"a", "b", "c", "d"});
  CHECK(normalize_tokens(std::string("assault\0victim", 14)) ==
        Tokens{"assault", "victim"});
  CHECK(normalize_tokens("").empty());
  CHECK(normalize_tokens("  ...  ").empty());
}

TEST_CASE("accents fold to base letters") {
  CHECK(normalize_tokens("café") == Tokens{"cafe"});
  CHECK(normalize_tokens("Māori whānau") == Tokens{"maori", "whanau"});
  CHECK(normalize_tokens("naïve Ærø straße") ==
        Tokens{"naive", "aero", "strasse"});
  // Decomposed form: e followed by U+0301 COMBINING ACUTE ACCENT.
  CHECK(normalize_tokens("cafe\xCC\x81 bar") == Tokens{"cafe", "bar"});
}

TEST_CASE("non-Latin punctuation and invalid bytes separate tokens") {
  CHECK(normalize_tokens("offender\xE2\x80\x99s") == Tokens{"offender", "s"});
  CHECK(normalize_tokens("a\xFF" "b") == Tokens{"a", "b"});
  CHECK(normalize_tokens("x\xC3") == Tokens{"x"});  // truncated sequence
  CHECK(normalize_tokens("5\xC3\x97" "3") == Tokens{"5", "3"});  // U+00D7
}

TEST_CASE("is_numeric_token") {
  CHECK(lexsent::is_numeric_token("14"));
  CHECK(lexsent::is_numeric_token("2019"));
  CHECK_FALSE(lexsent::is_numeric_token("14th"));
  CHECK_FALSE(lexsent::is_numeric_token(""));
}
