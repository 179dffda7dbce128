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


#include <gtest/gtest.h>

#include <set>

#include "parking/generators.hpp"
#include "reference.hpp"

namespace parking {
namespace {

std::vector<std::vector<int>> collect(const MultisetPermutations& perms) {
  return {perms.begin(), perms.end()};
}

TEST(MultisetPermutations, RepeatedValues) {
  const MultisetPermutations perms(std::vector<int>{3, 1, 1});
  EXPECT_EQ(collect(perms), (std::vector<std::vector<int>>{{1, 1, 3}, {1, 3, 1}, {3, 1, 1}}));
  EXPECT_EQ(perms.count(), 3u);
}

TEST(MultisetPermutations, DistinctAndConstant) {
  EXPECT_EQ(collect(MultisetPermutations(std::vector<int>{1, 2, 3})).size(), 6u);
  EXPECT_EQ(collect(MultisetPermutations(std::vector<int>{1, 1, 1, 1})).size(), 1u);
}

TEST(MultisetPermutations, CountMatchesDistinctOrderings) {
  for (const auto& x : ref::all_lists(4, 3)) {
    std::set<std::vector<int>> distinct;
    std::vector<int> s = x;
    std::sort(s.begin(), s.end());
    do distinct.insert(s);
    while (std::next_permutation(s.begin(), s.end()));
    const MultisetPermutations perms(x);
    const auto listed = collect(perms);
    EXPECT_EQ(listed, std::vector<std::vector<int>>(distinct.begin(), distinct.end()));
    EXPECT_EQ(perms.count(), distinct.size());
  }
}

TEST(NondecreasingTuples, SmallCases) {
  const NondecreasingTuples two(2, 2);
  EXPECT_EQ(std::vector<std::vector<int>>(two.begin(), two.end()),
            (std::vector<std::vector<int>>{{1, 1}, {1, 2}, {2, 2}}));
  const NondecreasingTuples three(3, 3);
  EXPECT_EQ(std::distance(three.begin(), three.end()), 10);
  EXPECT_EQ(three.count(), 10u);
}

TEST(NondecreasingTuples, StarsAndBars) {
  for (int n = 1; n <= 6; ++n) {
    const NondecreasingTuples t(static_cast<std::size_t>(n), n);
    const auto listed = std::vector<std::vector<int>>(t.begin(), t.end());
    EXPECT_EQ(listed.size(), saturating_binomial(2 * n - 1, n));
    EXPECT_EQ(listed, ref::nondecreasing_lists(static_cast<std::size_t>(n), n));
  }
}

TEST(ProductTuples, LexicographicOdometer) {
  std::vector<int> t(3, 1);
  std::vector<std::vector<int>> seen;
  do seen.push_back(t);
  while (next_product_tuple(t, 3));
  EXPECT_EQ(seen, ref::all_lists(3, 3));
}

TEST(Saturating, Arithmetic) {
  EXPECT_EQ(saturating_pow(3, 4), 81u);
  EXPECT_EQ(saturating_pow(10, 30), UINT64_MAX);
  EXPECT_EQ(saturating_binomial(5, 2), 10u);
  EXPECT_EQ(saturating_binomial(3, 5), 0u);
  EXPECT_EQ(saturating_binomial(200, 100), UINT64_MAX);
}

}  // namespace
}  // namespace parking
