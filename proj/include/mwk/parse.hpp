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

#include <string>

#include "mwk/symbolic.hpp"

namespace mwk {

// Text forms.
//   field:  "3", "9" (F_q) or "3(t)" (F_q(t)).
//   unit:   rational expression in integers, g (the field generator) and,
//           over F_q(t), the variable t: "2*(t+1)^-1*(t^2+1)^3", "g^3".
//   expr:   sum of integer multiples of products of eta, h, eps, <u> and
//           [u1, ..., ur], e.g. "eta^2*[2, t+1, 3] + 5*[2]".
struct FieldSpec {
  const FiniteField* base = nullptr;
  bool rational = false;
  std::string to_string() const;
};

FieldSpec parse_field(const std::string& s);

FFUnit parse_ff_unit(const FiniteField& F, const std::string& s);
RatUnit parse_rat_unit(const FiniteField& F, const std::string& s);
Poly parse_poly(const FiniteField& F, const std::string& s);

std::string unit_to_string(const FFUnit& u);
std::string unit_to_string(const RatUnit& u);

FFExpr parse_ff_expr(const FiniteField& F, const std::string& s);
RatExpr parse_rat_expr(const FiniteField& F, const std::string& s);

template <class U>
std::string expr_to_string(const SymExpr<U>& x);
extern template std::string expr_to_string(const FFExpr&);
extern template std::string expr_to_string(const RatExpr&);

}  // namespace mwk
