// Copyright 2026 The Latroid Authors
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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace latroid {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input (bad ring spec, dimension mismatch, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

// An exhaustive computation would exceed the configured enumeration cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// A structural hypothesis of an operation does not hold (lattice not
// modular, support not modular, matrix not an isometry, ...).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// Height was requested on a lattice that is not graded.
class NotGraded : public HypothesisError {
 public:
  using HypothesisError::HypothesisError;
};

// Enumeration limits. The ambient limit bounds |R|^n for exhaustive scans
// over R^n; it can never be raised above kHardAmbientLimit.
struct Caps {
  static constexpr std::uint64_t kHardAmbientLimit = std::uint64_t{1} << 20;

  std::uint64_t ambient = std::uint64_t{1} << 16;
  std::uint64_t submodule_code = 4096;  // |C| bound for submodule enumeration
  std::uint64_t lattice = 4096;         // element bound for explicit lattices
  std::uint64_t codewords = std::uint64_t{1} << 20;
};

// Process-wide caps. Set once at startup (the CLI does this) before any
// concurrent use.
Caps& caps();

void require_cap(std::uint64_t value, std::uint64_t limit, const std::string& what);

}  // namespace latroid
