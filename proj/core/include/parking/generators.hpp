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

// Single-consumer tuple streams used by the deciders and the enumerator.
//
//   for (const auto& p : MultisetPermutations({1, 1, 3})) ...
//     -> (1,1,3) (1,3,1) (3,1,1)
//   for (const auto& t : NondecreasingTuples(2, 2)) ...
//     -> (1,1) (1,2) (2,2)
//
// Both yield lexicographic order without duplicates. The referenced vector
// is owned by the iterator and is overwritten on increment.

#ifndef PARKING_GENERATORS_HPP_
#define PARKING_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <vector>

#include "parking/types.hpp"

namespace parking {

class MultisetPermutations {
 public:
  explicit MultisetPermutations(std::vector<int> values);
  explicit MultisetPermutations(const PreferenceList& x)
      : MultisetPermutations(x.vec()) {}

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = std::vector<int>;
    using difference_type = std::ptrdiff_t;
    using pointer = const std::vector<int>*;
    using reference = const std::vector<int>&;

    iterator() = default;
    explicit iterator(std::vector<int> first) : current_(std::move(first)), done_(false) {}

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done_ == b.done_;
    }

   private:
    std::vector<int> current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(sorted_); }
  iterator end() const { return iterator(); }

  // n! / prod(multiplicity!)
  std::uint64_t count() const;

 private:
  std::vector<int> sorted_;
};

// All nondecreasing n-tuples over [1, m]; there are C(m+n-1, n) of them.
class NondecreasingTuples {
 public:
  NondecreasingTuples(std::size_t n, int m);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = std::vector<int>;
    using difference_type = std::ptrdiff_t;
    using pointer = const std::vector<int>*;
    using reference = const std::vector<int>&;

    iterator() = default;
    iterator(std::size_t n, int m) : current_(n, 1), m_(m), done_(false) {}

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done_ == b.done_;
    }

   private:
    std::vector<int> current_;
    int m_ = 0;
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_, m_); }
  iterator end() const { return iterator(); }

  std::uint64_t count() const;

 private:
  std::size_t n_;
  int m_;
};

// Advances `t` to the next tuple of [1, m]^n in lexicographic order; returns
// false after the last one.
bool next_product_tuple(std::span<int> t, int m);

// Saturating helpers for cost projections.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);
std::uint64_t saturating_binomial(std::uint64_t n, std::uint64_t k);

}  // namespace parking

#endif  // PARKING_GENERATORS_HPP_
