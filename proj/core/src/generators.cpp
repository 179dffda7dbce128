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

#include "parking/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace parking {

namespace {
constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}
}  // namespace

MultisetPermutations::MultisetPermutations(std::vector<int> values)
    : sorted_(std::move(values)) {
  if (sorted_.empty()) throw ValidationError("cannot permute an empty list");
  std::sort(sorted_.begin(), sorted_.end());
}

MultisetPermutations::iterator& MultisetPermutations::iterator::operator++() {
  // next_permutation skips equal arrangements, so a sorted start yields each
  // distinct rearrangement exactly once.
  done_ = !std::next_permutation(current_.begin(), current_.end());
  return *this;
}

std::uint64_t MultisetPermutations::count() const {
  // Multinomial built incrementally: each step multiplies by C(i, run).
  std::uint64_t total = 1;
  std::size_t placed = 0;
  for (std::size_t i = 0; i < sorted_.size();) {
    std::size_t j = i;
    while (j < sorted_.size() && sorted_[j] == sorted_[i]) ++j;
    placed += j - i;
    total = saturating_mul(total, saturating_binomial(placed, j - i));
    i = j;
  }
  return total;
}

NondecreasingTuples::NondecreasingTuples(std::size_t n, int m) : n_(n), m_(m) {
  if (n < 1 || m < 1) throw ValidationError("nondecreasing tuples need n, m >= 1");
}

NondecreasingTuples::iterator& NondecreasingTuples::iterator::operator++() {
  // Bump the rightmost entry below m, then flatten the suffix to that value.
  std::size_t i = current_.size();
  while (i > 0 && current_[i - 1] == m_) --i;
  if (i == 0) {
    done_ = true;
    return *this;
  }
  const int v = ++current_[i - 1];
  std::fill(current_.begin() + static_cast<std::ptrdiff_t>(i), current_.end(), v);
  return *this;
}

std::uint64_t NondecreasingTuples::count() const {
  return saturating_binomial(static_cast<std::uint64_t>(m_) + n_ - 1, n_);
}

bool next_product_tuple(std::span<int> t, int m) {
  for (std::size_t i = t.size(); i > 0; --i) {
    if (t[i - 1] < m) {
      ++t[i - 1];
      return true;
    }
    t[i - 1] = 1;
  }
  return false;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) out = saturating_mul(out, base);
  return out;
}

std::uint64_t saturating_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // out * (n - k + i) / i stays exact because out is C(n-k+i-1, i-1).
    const std::uint64_t num = n - k + i;
    const std::uint64_t g = std::gcd(out, i);
    const std::uint64_t reduced = saturating_mul(out / g, num / (i / g));
    if (reduced == kSaturated) return kSaturated;
    out = reduced;
  }
  return out;
}

}  // namespace parking
