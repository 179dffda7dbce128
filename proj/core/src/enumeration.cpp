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

#include "parking/enumeration.hpp"

#include <algorithm>

#include "parallel.hpp"
#include "parking/generators.hpp"
#include "parking/predicates.hpp"
#include "parking/sim.hpp"

namespace parking {

std::string_view to_string(Filter filter) {
  switch (filter) {
    case Filter::All: return "all";
    case Filter::Invariant: return "invariant";
    case Filter::Nondecreasing: return "nondecreasing";
    case Filter::NondecreasingInvariant: return "nondecreasing-invariant";
  }
  return "?";
}

Filter parse_filter(std::string_view text) {
  if (text == "all") return Filter::All;
  if (text == "invariant") return Filter::Invariant;
  if (text == "nondecreasing") return Filter::Nondecreasing;
  if (text == "nondecreasing-invariant") return Filter::NondecreasingInvariant;
  throw ValidationError("unknown filter '" + std::string(text) + "'");
}

std::uint64_t projected_experiments(const CarLengths& y, Filter filter) {
  const auto m = static_cast<std::uint64_t>(y.street_length());
  const auto n = static_cast<std::uint64_t>(y.size());
  // Summed over all multisets, distinct rearrangements number exactly m^n,
  // so the invariant filters are bounded by the full product space.
  if (filter == Filter::Nondecreasing) return saturating_binomial(m + n - 1, n);
  return saturating_pow(m, n);
}

namespace {

using Tuples = std::vector<std::vector<int>>;

// All tuples of [m]^n whose first entry is `first`, in lexicographic order.
template <typename Visit>
void for_each_product_tuple(std::size_t n, int m, int first, Visit&& visit) {
  std::vector<int> t(n, 1);
  t[0] = first;
  std::span<int> tail(t.data() + 1, n - 1);
  do {
    visit(t);
  } while (next_product_tuple(tail, m));
}

// Nondecreasing tuples over [m] with first entry `first`.
template <typename Visit>
void for_each_nondecreasing_tuple(std::size_t n, int m, int first, Visit&& visit) {
  std::vector<int> t(n, first);
  while (true) {
    visit(t);
    std::size_t i = n;
    while (i > 1 && t[i - 1] == m) --i;
    if (i <= 1) return;
    const int v = ++t[i - 1];
    std::fill(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(), v);
  }
}

}  // namespace

EnumerationResult enumerate(const CarLengths& y, Rule rule, Filter filter,
                            const EnumerateOptions& options) {
  const std::uint64_t projected = projected_experiments(y, filter);
  if (projected > options.budget) throw BudgetExceeded(projected, options.budget);

  const std::size_t n = y.size();
  const int m = y.street_length();
  const auto lengths = y.values();

  // One task per value of the first coordinate; concatenating task outputs in
  // order keeps product-space scans lexicographic without a global sort.
  std::vector<Tuples> per_first(static_cast<std::size_t>(m));
  internal::parallel_for(per_first.size(), options.jobs, [&](std::size_t task) {
    const int first = static_cast<int>(task) + 1;
    Street street(m);
    Tuples& out = per_first[task];
    switch (filter) {
      case Filter::All:
        for_each_product_tuple(n, m, first, [&](const std::vector<int>& t) {
          if (street.parks_all(lengths, t, rule)) out.push_back(t);
        });
        break;
      case Filter::Nondecreasing:
        for_each_nondecreasing_tuple(n, m, first, [&](const std::vector<int>& t) {
          if (street.parks_all(lengths, t, rule)) out.push_back(t);
        });
        break;
      case Filter::NondecreasingInvariant:
      case Filter::Invariant:
        for_each_nondecreasing_tuple(n, m, first, [&](const std::vector<int>& t) {
          if (!invariant_fast(lengths, t, rule, street)) return;
          if (filter == Filter::NondecreasingInvariant) {
            out.push_back(t);
          } else {
            for (const auto& p : MultisetPermutations(t)) out.push_back(p);
          }
        });
        break;
    }
  });

  std::vector<PreferenceList> items;
  for (auto& chunk : per_first) {
    for (auto& t : chunk) items.emplace_back(std::move(t));
  }
  if (filter == Filter::Invariant) std::sort(items.begin(), items.end());
  return EnumerationResult{y, rule, filter, std::move(items)};
}

}  // namespace parking
