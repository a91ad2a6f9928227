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

#ifndef LEXSENT_CORE_ERROR_HPP_
#define LEXSENT_CORE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace lexsent {

// Base of every error thrown by the core. The C API maps the concrete type
// onto a status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments or configuration values.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Malformed, missing or inconsistent input data (corpus, labels, model file).
class DataError : public Error {
 public:
  using Error::Error;
};

// Raised by load_corpus; carries every problem found, not just the first.
class CorpusError : public DataError {
 public:
  explicit CorpusError(std::vector<std::string> issues);

  const std::vector<std::string>& issues() const { return issues_; }

 private:
  std::vector<std::string> issues_;
};

// Optimisation failed (divergence, non-finite values).
class TrainingError : public Error {
 public:
  using Error::Error;
};

}  // namespace lexsent

#endif  // LEXSENT_CORE_ERROR_HPP_
