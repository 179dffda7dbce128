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

#include "parking/sim.hpp"

#include <algorithm>
#include <numeric>

namespace parking {

void Street::reset(int street_length) {
  m_ = street_length;
  // One sentinel cell at each end.
  cells_.assign(static_cast<std::size_t>(m_) + 2, kEmptySpot);
}

int Street::place(int car_number, int length, int pref, Rule rule) {
  if (pref < 1 || pref > m_) return 0;
  if (rule == Rule::Assortment) {
    int run = 0;
    for (int j = pref; j <= m_; ++j) {
      if (cells_[j] == kEmptySpot) {
        if (++run == length) {
          const int start = j - length + 1;
          std::fill(cells_.begin() + start, cells_.begin() + j + 1, car_number);
          return start;
        }
      } else {
        run = 0;
      }
    }
    return 0;
  }
  int start = pref;
  while (start <= m_ && cells_[start] != kEmptySpot) ++start;
  const int end = start + length - 1;
  if (start > m_ || end > m_) return 0;
  for (int j = start + 1; j <= end; ++j) {
    if (cells_[j] != kEmptySpot) return 0;
  }
  std::fill(cells_.begin() + start, cells_.begin() + end + 1, car_number);
  return start;
}

int Street::run(std::span<const int> lengths, std::span<const int> prefs,
                Rule rule, std::vector<int>* starts) {
  std::fill(cells_.begin(), cells_.end(), kEmptySpot);
  if (starts) starts->clear();
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    const int start = place(static_cast<int>(i) + 1, lengths[i], prefs[i], rule);
    if (start == 0) return static_cast<int>(i);
    if (starts) starts->push_back(start);
  }
  return -1;
}

std::vector<int> ParkOutcome::occupancy(const CarLengths& y) const {
  const auto& starts = success().starts;
  std::vector<int> cells(static_cast<std::size_t>(y.street_length()), kEmptySpot);
  for (std::size_t i = 0; i < starts.size(); ++i) {
    for (int k = 0; k < y[i]; ++k) {
      cells[static_cast<std::size_t>(starts[i] - 1 + k)] = static_cast<int>(i) + 1;
    }
  }
  return cells;
}

std::vector<int> ParkOutcome::street_order() const {
  const auto& starts = success().starts;
  std::vector<int> order(starts.size());
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return starts[a - 1] < starts[b - 1]; });
  return order;
}

ParkOutcome park(const CarLengths& y, const PreferenceList& x, Rule rule) {
  check_paired(y, x);
  Street street(y.street_length());
  std::vector<int> starts;
  const int failed = street.run(y.values(), x.values(), rule, &starts);
  if (failed < 0) return ParkSuccess{std::move(starts)};
  const auto cells = street.cells();
  return ParkFailure{failed + 1, std::vector<int>(cells.begin(), cells.end())};
}

std::vector<ParkStep> trace_park(const CarLengths& y, const PreferenceList& x,
                                 Rule rule) {
  check_paired(y, x);
  Street street(y.street_length());
  std::vector<ParkStep> steps;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const int car = static_cast<int>(i) + 1;
    const int start = street.place(car, y[i], x[i], rule);
    const auto cells = street.cells();
    steps.push_back(ParkStep{car, x[i],
                             start ? std::optional<int>(start) : std::nullopt,
                             std::vector<int>(cells.begin(), cells.end())});
    if (!start) break;
  }
  return steps;
}

std::string render_occupancy(std::span<const int> occupancy) {
  std::string out;
  for (std::size_t i = 0; i < occupancy.size(); ++i) {
    if (i) out += ' ';
    out += occupancy[i] == kEmptySpot ? "." : std::to_string(occupancy[i]);
  }
  return out;
}

}  // namespace parking
