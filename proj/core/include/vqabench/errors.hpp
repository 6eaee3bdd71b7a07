// Copyright 2026 The vqabench authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace vqabench {

/// Base class of every error thrown by the toolkit.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define VQABENCH_DEFINE_ERROR(NAME)                                          \
    class NAME : public Error {                                              \
      public:                                                                \
        explicit NAME(const std::string& msg) : Error(msg) {}                \
    }

// Hamiltonian IR parsing.
VQABENCH_DEFINE_ERROR(LengthError);
VQABENCH_DEFINE_ERROR(BitError);
VQABENCH_DEFINE_ERROR(QubitCountError);
VQABENCH_DEFINE_ERROR(NumberError);

// Oracle / engine size guards.
VQABENCH_DEFINE_ERROR(SizeError);
VQABENCH_DEFINE_ERROR(DimensionMismatch);

// QASM parsing and binding.
VQABENCH_DEFINE_ERROR(UnknownGateError);
VQABENCH_DEFINE_ERROR(ArityError);
VQABENCH_DEFINE_ERROR(QubitRangeError);
VQABENCH_DEFINE_ERROR(UnsupportedFeatureError);
VQABENCH_DEFINE_ERROR(GapError);
VQABENCH_DEFINE_ERROR(NonFiniteError);

// Problem construction.
VQABENCH_DEFINE_ERROR(EmptyGraphError);
VQABENCH_DEFINE_ERROR(NonDiagonalError);

// Driver and harness.
VQABENCH_DEFINE_ERROR(NonFiniteCostError);
VQABENCH_DEFINE_ERROR(ConfigError);
VQABENCH_DEFINE_ERROR(MissingBaselineError);

// Analysis.
VQABENCH_DEFINE_ERROR(EmptyInputError);
VQABENCH_DEFINE_ERROR(ZeroTimeError);

// Record files.
VQABENCH_DEFINE_ERROR(SchemaError);
VQABENCH_DEFINE_ERROR(IoError);

#undef VQABENCH_DEFINE_ERROR

/// Parse error with a source position, formatted as "line:col: message".
class SyntaxError : public Error {
  public:
    SyntaxError(int line, int col, const std::string& msg)
        : Error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
          line_(line),
          col_(col) {}

    int line() const noexcept { return line_; }
    int col() const noexcept { return col_; }

  private:
    int line_;
    int col_;
};

}  // namespace vqabench
