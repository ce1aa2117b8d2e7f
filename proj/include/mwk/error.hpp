// Copyright 2026 The mwk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
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

namespace mwk {

enum class ErrorCode {
  NotPrime,
  EvenCharacteristic,
  SizeBound,
  FieldMismatch,
  ZeroPolynomial,
  DegreeBound,
  NotRegularAtPlace,
  NotAUnit,
  Inhomogeneous,
  DegreeMismatch,
  TheoryMismatch,
  NotAUniformizer,
  TorsionViolation,
  NotAdmissible,
  Overflow,
  ParseError,
  UnknownSuite,
  InvalidArgument,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

// Overflow-checked 64-bit arithmetic.
int64_t checked_add(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);

inline int64_t mod_floor(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Upper bound on field sizes; MWK_SIZE_BOUND overrides the default of 10^4.
int64_t field_size_bound();

}  // namespace mwk
