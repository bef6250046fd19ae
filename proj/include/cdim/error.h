// Copyright 2026 The cdim Authors.
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

#ifndef CDIM_ERROR_H_
#define CDIM_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cdim {

enum class ErrorCode {
  kFormat,           // Malformed graph6, edge list or DIMACS input.
  kInvalidArgument,  // Out-of-range vertex, bad parameter.
  kEmptyGraph,       // Invariant requested on the graph with no vertices.
  kDisconnected,     // Operation requires a connected graph.
  kInconclusive,     // Search budget or size gate exceeded.
  kUnsatisfied,      // Assignment does not satisfy the formula.
  kLemmaViolation,   // A proven structural property failed to hold.
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Parse failure. `offset` is a byte offset for graph6 and a 1-based line
// number for the line-oriented formats.
class FormatError : public Error {
 public:
  FormatError(std::size_t offset, const std::string& message)
      : Error(ErrorCode::kFormat, message), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace cdim

#endif  // CDIM_ERROR_H_
