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

#include "parking/predicates.hpp"

#include <algorithm>
#include <numeric>

#include "parking/generators.hpp"

namespace parking {

Permutation::Permutation(std::vector<int> one_line) : image_(std::move(one_line)) {
  const int n = static_cast<int>(image_.size());
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw ValidationError("not a permutation of [" + std::to_string(n) +
                            "]: " + format_tuple(image_));
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  if (image_.empty()) throw ValidationError("empty permutation");
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 1);
  return Permutation(std::move(image));
}

Permutation Permutation::adjacent(std::size_t n, std::size_t i) {
  if (i < 1 || i >= n) {
    throw ValidationError("s_" + std::to_string(i) + " undefined for n=" +
                          std::to_string(n));
  }
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 1);
  std::swap(image[i - 1], image[i]);
  return Permutation(std::move(image));
}

Permutation Permutation::from_word(std::size_t n, std::span<const int> word) {
  Permutation out = identity(n);
  for (int i : word) {
    if (i < 1) throw ValidationError("transposition index must be positive");
    out = out * adjacent(n, static_cast<std::size_t>(i));
  }
  return out;
}

std::vector<int> Permutation::apply(std::span<const int> x) const {
  if (x.size() != image_.size()) {
    throw ValidationError("permutation arity does not match list arity");
  }
  std::vector<int> out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    out[k] = x[static_cast<std::size_t>(image_[k] - 1)];
  }
  return out;
}

PreferenceList Permutation::apply(const PreferenceList& x) const {
  return PreferenceList(apply(x.values()));
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw ValidationError("permutation arity mismatch");
  // p(q(x))_k = q(x)_{p(k)} = x_{q(p(k))}
  std::vector<int> image(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    image[k] = q.image_[static_cast<std::size_t>(p.image_[k] - 1)];
  }
  return Permutation(std::move(image));
}

bool is_member(const CarLengths& y, const PreferenceList& x, Rule rule) {
  check_paired(y, x);
  Street street(y.street_length());
  return street.parks_all(y.values(), x.values(), rule);
}

InvarianceVerdict is_invariant(const CarLengths& y, const PreferenceList& x,
                               Rule rule) {
  check_paired(y, x);
  Street street(y.street_length());
  for (const auto& arrangement : MultisetPermutations(x)) {
    if (!street.parks_all(y.values(), arrangement, rule)) {
      PreferenceList failing(arrangement);
      ParkOutcome outcome = park(y, failing, rule);
      return {false, InvarianceWitness{std::move(failing), std::move(outcome)}};
    }
  }
  return {true, std::nullopt};
}

bool invariant_fast(std::span<const int> y, std::span<const int> x, Rule rule,
                    Street& street) {
  std::vector<int> arrangement(x.begin(), x.end());
  std::sort(arrangement.begin(), arrangement.end());
  do {
    if (!street.parks_all(y, arrangement, rule)) return false;
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  return true;
}

namespace {
void require_member(const CarLengths& y, const PreferenceList& x, Rule rule) {
  if (!is_member(y, x, rule)) {
    throw PreconditionError("pi-invariance is defined only for members; " +
                            format_tuple(x.values()) + " does not park under " +
                            std::string(to_string(rule)) + " rules");
  }
}
}  // namespace

bool is_pi_invariant(const CarLengths& y, const PreferenceList& x,
                     const Permutation& pi, Rule rule) {
  require_member(y, x, rule);
  if (pi.size() != x.size()) throw ValidationError("permutation arity mismatch");
  return is_member(y, pi.apply(x), rule);
}

bool is_T_invariant(const CarLengths& y, const PreferenceList& x,
                    std::span<const Permutation> perms, Rule rule) {
  require_member(y, x, rule);
  return std::all_of(perms.begin(), perms.end(), [&](const Permutation& pi) {
    if (pi.size() != x.size()) throw ValidationError("permutation arity mismatch");
    return is_member(y, pi.apply(x), rule);
  });
}

bool check_minentry_lemma(const CarLengths& y, const PreferenceList& x) {
  const int k = *std::min_element(y.values().begin(), y.values().end());
  return std::any_of(x.values().begin(), x.values().end(),
                     [k](int v) { return v > 1 && v <= k; });
}

PreferenceList beta_transform(const PreferenceList& x, const CarLengths& y,
                              std::size_t j) {
  if (x.size() < 2) throw ValidationError("beta transform needs at least two cars");
  if (x.size() != y.size()) throw ValidationError("arity mismatch");
  if (j < 1 || j > x.size()) throw ValidationError("beta index out of range");
  const int shift = y[j - 1];
  std::vector<int> out;
  out.reserve(x.size() - 1);
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k + 1 == j) continue;
    out.push_back(std::max(1, x[k] - shift));
  }
  return PreferenceList(std::move(out));
}

}  // namespace parking
