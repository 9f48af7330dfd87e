// Copyright 2026 the ucpol authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UCPOL_ERRORS_HPP
#define UCPOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ucpol {

/// Position of a token in a source file. Lines and columns are 1-based.
struct SourceSpan {
  std::string file;
  int start_line = 1;
  int start_col = 1;
  int end_line = 1;
  int end_col = 1;

  std::string to_string() const;
  bool operator==(const SourceSpan&) const = default;
};

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, SourceSpan span)
      : Error(span.to_string() + ": " + what), span_(std::move(span)) {}
  const SourceSpan& span() const { return span_; }

 private:
  SourceSpan span_;
};

class UnknownAttributeError : public Error {
 public:
  explicit UnknownAttributeError(const std::string& what) : Error(what) {}
};

class KindMismatchError : public Error {
 public:
  explicit KindMismatchError(const std::string& what) : Error(what) {}
};

class DuplicateRuleIdError : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

class DuplicateAttributeError : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

class DuplicateAssignmentError : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

class EmptyDomainError : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

class ClockSkewError : public Error {
 public:
  explicit ClockSkewError(const std::string& what) : Error(what) {}
};

class UniverseTooLargeError : public Error {
 public:
  explicit UniverseTooLargeError(const std::string& what) : Error(what) {}
};

class VocabularyMismatchError : public Error {
 public:
  explicit VocabularyMismatchError(const std::string& what) : Error(what) {}
};

}  // namespace ucpol

#endif  // UCPOL_ERRORS_HPP
