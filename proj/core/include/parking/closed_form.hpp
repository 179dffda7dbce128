// Copyright 2026 The Parking Lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Closed-form characterizations and counts.
//
// Nothing in this header runs the parking simulator except
// is_minimally_invariant(), which is the experiment-based oracle the other
// minimal-invariance routes are checked against. Everything else is pure
// arithmetic on y and x so the verify harness can compare it with brute force.

#ifndef PARKING_CLOSED_FORM_HPP_
#define PARKING_CLOSED_FORM_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "parking/types.hpp"

namespace parking {

using BigInt = boost::multiprecision::cpp_int;

// --- nondecreasing lists and constant lengths ------------------------------

// For nondecreasing x: member iff x_i <= 1 + y_1 + ... + y_{i-1} for all i.
// The criterion is the same under both rules. Throws ValidationError if x is
// not nondecreasing or arities differ.
bool nondecreasing_member(const CarLengths& y, const PreferenceList& x, Rule rule);

// Invariance for constant lengths y = (c^n):
//   (1) x_i = 1 (mod c) for every i, and
//   (2) |{i : x_i <= c*j}| >= j for every j in [n].
// Holds for both rules.
bool constant_invariant(int c, std::size_t n, const PreferenceList& x);

// phi(x)_i = 1 + (x_i - 1)/c. Requires x nondecreasing with x_i = 1 (mod c).
PreferenceList phi(const PreferenceList& x, int c);
// psi(z)_i = 1 + (z_i - 1)*c. Requires z nondecreasing with z_i in [i].
PreferenceList psi(const PreferenceList& z, int c);

// --- minimal invariance -----------------------------------------------------

// Oracle: y is minimally invariant iff no w in {2..m} lets every placement of
// w among n-1 ones park under the Assortment rule. At most n*(m-1)
// experiments.
bool is_minimally_invariant(const CarLengths& y);
// The smallest w > 1 with (1^{n-1}, w) invariant, if any.
std::optional<int> invariant_probe(const CarLengths& y);

// Same question answered without the simulator: for each w, look for a car
// position i whose gap (w-1) - (y_1+...+y_{i-1}) cannot be filled exactly by
// the forced greedy sequence of later cars.
bool is_minimally_invariant_alternate(const CarLengths& y);
std::optional<int> invariant_probe_alternate(const CarLengths& y);

// y_1 < y_2. Throws ValidationError unless n == 2.
bool mi_pair(const CarLengths& y);
// y_1 < y_2, y_1 < y_3 and y_1 + y_3 != y_2. Throws unless n == 3.
bool mi_triple(const CarLengths& y);
// The four-car Boolean formula, evaluated as written. Conjectural.
bool mi_quadruple_conjecture(const CarLengths& y);

// --- two and three cars -----------------------------------------------------

// Full invariant set for two cars, sorted lexicographically.
std::vector<PreferenceList> inv_pair_set(const CarLengths& y);

// The 19 equality/order shapes of a length triple, written over a < b < c.
enum class TripleRow {
  AAA,
  AAB,
  ABA_BEq2A,
  ABA_BNe2A,
  BAA_2ALeB,
  BAA_2AGtB,
  ABB,
  BAB,
  BBA,
  ABC,
  ACB_SumEqC,
  ACB_SumNeC,
  BAC,
  BCA_SumEqC,
  BCA_SumNeC,
  CAB_SumLeC,
  CAB_SumGtC,
  CBA_SumLeC,
  CBA_SumGtC,
};

inline constexpr int kTripleRowCount = 19;

struct TriplePattern {
  TripleRow row;
  // Distinct values in increasing order; unused ones are 0.
  int a = 0;
  int b = 0;
  int c = 0;

  friend bool operator==(const TriplePattern&, const TriplePattern&) = default;
};

// "(a,b,a), b=2a" etc.
std::string_view row_label(TripleRow row);
// "ABA_BEq2A" etc.
std::string_view row_id(TripleRow row);

TriplePattern classify_triple(const CarLengths& y);

// Nondecreasing invariant lists for three cars, sorted lexicographically.
std::vector<PreferenceList> inv_triple_set(const CarLengths& y);

// --- counts -------------------------------------------------------------------

enum class FormulaId { Eq1, Eq2, Catalan, FussCatalan, ConstantInvCount };

std::string_view to_string(FormulaId id);

struct CountFormulaResult {
  BigInt value;
  FormulaId formula_id;
};

// |PS_n(y)| = (y_1 + n)(y_1 + y_2 + n - 1) ... (y_1 + ... + y_{n-1} + 2).
// A single car gives the empty product, 1.
CountFormulaResult ps_count_formula(const CarLengths& y);

BigInt binomial(unsigned n, unsigned k);
// C_n = binom(2n, n) / (n + 1), n >= 0.
BigInt catalan(unsigned n);
// A_{k,n} = binom(kn + n, n) / (kn + 1), k >= 1.
BigInt fuss_catalan(unsigned k, unsigned n);
// (n + 1)^(n - 1), n >= 1.
BigInt pf_count(unsigned n);

}  // namespace parking

#endif  // PARKING_CLOSED_FORM_HPP_
