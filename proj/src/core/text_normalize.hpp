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

#ifndef LEXSENT_CORE_TEXT_NORMALIZE_HPP_
#define LEXSENT_CORE_TEXT_NORMALIZE_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace lexsent {

// Splits UTF-8 text into lowercase ASCII alphanumeric tokens.
//
// Accented Latin letters (Latin-1 Supplement, Latin Extended-A) fold to their
// base letters, combining diacritical marks are dropped without breaking the
// token, and every other character (punctuation, whitespace, control bytes,
// unsupported scripts, invalid UTF-8) acts as a separator.
std::vector<std::string> normalize_tokens(std::string_view utf8);

bool is_numeric_token(std::string_view token);

}  // namespace lexsent

#endif  // LEXSENT_CORE_TEXT_NORMALIZE_HPP_
