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

// Membership and invariance deciders. Everything here is answered by running
// parking experiments; nothing consults a closed form.

#ifndef PARKING_PREDICATES_HPP_
#define PARKING_PREDICATES_HPP_

#include <optional>
#include <span>
#include <vector>

#include "parking/sim.hpp"
#include "parking/types.hpp"

namespace parking {

// A permutation pi of [n], stored as its one-line image (pi(1), ..., pi(n)).
// Acting on a list: pi(x) = (x_{pi(1)}, ..., x_{pi(n)}).
class Permutation {
 public:
  // One-line notation, 1-based. Throws ValidationError unless a bijection
  // of [n].
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(std::size_t n);
  // s_i swaps positions i and i+1 (1 <= i < n).
  static Permutation adjacent(std::size_t n, std::size_t i);
  // Product of adjacent transpositions s_{w_1} s_{w_2} ... s_{w_k}, acting
  // right to left: the rightmost factor is applied to x first.
  static Permutation from_word(std::size_t n, std::span<const int> word);

  std::size_t size() const { return image_.size(); }
  std::span<const int> one_line() const { return image_; }

  std::vector<int> apply(std::span<const int> x) const;
  PreferenceList apply(const PreferenceList& x) const;

  // (p * q)(x) = p(q(x)).
  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

struct InvarianceWitness {
  PreferenceList rearrangement;
  ParkOutcome outcome;
};

struct InvarianceVerdict {
  bool invariant = true;
  // Present iff !invariant: the lexicographically smallest rearrangement of
  // x that fails to park.
  std::optional<InvarianceWitness> witness;
};

// x in PA_n(y) (Assortment) or PS_n(y) (Sequence).
bool is_member(const CarLengths& y, const PreferenceList& x, Rule rule);

// Every distinct rearrangement of x parks. Scans the multiset permutations
// of x in lexicographic order and stops at the first failure.
InvarianceVerdict is_invariant(const CarLengths& y, const PreferenceList& x,
                               Rule rule);

// Raw fast path for hot loops: same answer as is_invariant(...).invariant,
// reusing `street`. `x` need not be sorted.
bool invariant_fast(std::span<const int> y, std::span<const int> x, Rule rule,
                    Street& street);

// pi(x) parks. Requires x itself to park (PreconditionError otherwise).
bool is_pi_invariant(const CarLengths& y, const PreferenceList& x,
                     const Permutation& pi, Rule rule);

// pi(x) parks for every pi in perms. Same precondition as is_pi_invariant.
bool is_T_invariant(const CarLengths& y, const PreferenceList& x,
                    std::span<const Permutation> perms, Rule rule);

// True iff some x_i satisfies 1 < x_i <= min(y); such x is never invariant.
bool check_minentry_lemma(const CarLengths& y, const PreferenceList& x);

// beta_j(x): drop entry j (1-based) and map every other entry x_k to
// max(1, x_k - y_j). Requires n >= 2 and j in [1, n].
PreferenceList beta_transform(const PreferenceList& x, const CarLengths& y,
                              std::size_t j);

}  // namespace parking

#endif  // PARKING_PREDICATES_HPP_
