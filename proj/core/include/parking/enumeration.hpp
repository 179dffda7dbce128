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

#ifndef PARKING_ENUMERATION_HPP_
#define PARKING_ENUMERATION_HPP_

#include <cstdint>
#include <string_view>
#include <vector>

#include "parking/types.hpp"

namespace parking {

enum class Filter { All, Invariant, Nondecreasing, NondecreasingInvariant };

std::string_view to_string(Filter filter);
// "all" | "invariant" | "nondecreasing" | "nondecreasing-invariant"
Filter parse_filter(std::string_view text);

struct EnumerateOptions {
  std::uint64_t budget = kDefaultBudget;
  // Worker threads; 0 or 1 runs on the calling thread.
  unsigned jobs = 1;
};

struct EnumerationResult {
  CarLengths y;
  Rule rule;
  Filter filter;
  // Sorted lexicographically, duplicate-free.
  std::vector<PreferenceList> items;

  std::size_t count() const { return items.size(); }

  friend bool operator==(const EnumerationResult&, const EnumerationResult&) = default;
};

// Upper bound on parking experiments enumerate() runs for these inputs.
std::uint64_t projected_experiments(const CarLengths& y, Filter filter);

// Materializes PA_n(y) / PS_n(y) (or a filtered subset) by exhaustive search
// over [m]^n. Invariance is decided once per multiset and expanded to all of
// its rearrangements. Throws BudgetExceeded when the projected experiment
// count is over options.budget. The result does not depend on options.jobs.
EnumerationResult enumerate(const CarLengths& y, Rule rule, Filter filter,
                            const EnumerateOptions& options = {});

}  // namespace parking

#endif  // PARKING_ENUMERATION_HPP_
