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

#ifndef LEXSENT_CORE_HASH_HPP_
#define LEXSENT_CORE_HASH_HPP_

#include <cstdint>
#include <string>
#include <string_view>

namespace lexsent {

// 64-bit FNV-1a. Used to fingerprint stop-word lists and model files; not a
// cryptographic digest.
std::uint64_t fnv1a64(std::string_view bytes);

// "fnv1a64:" followed by 16 lowercase hex digits.
std::string fingerprint(std::string_view bytes);

}  // namespace lexsent

#endif  // LEXSENT_CORE_HASH_HPP_
