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

// Simulation of a single parking experiment.
//
// Cars arrive in order 1..n on a one-way street with m = sum(y) spots.
//
//  * Assortment: car i parks at the smallest j >= x_i such that spots
//    j..j+y_i-1 are all free and j+y_i-1 <= m.
//  * Sequence: car i drives to the first free spot j >= x_i and parks there
//    only if spots j..j+y_i-1 are free and inside the street; otherwise it
//    collides and parking fails.
//
// The experiment stops at the first car that cannot park.

#ifndef PARKING_SIM_HPP_
#define PARKING_SIM_HPP_

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "parking/types.hpp"

namespace parking {

// Occupancy cell value for an empty spot. Occupied cells hold the 1-based
// car number.
inline constexpr int kEmptySpot = 0;

struct ParkSuccess {
  // 1-based start spot of each car; car i covers starts[i]..starts[i]+y_i-1.
  std::vector<int> starts;

  friend bool operator==(const ParkSuccess&, const ParkSuccess&) = default;
};

struct ParkFailure {
  // 1-based number of the first car that could not park.
  int first_failed_car = 0;
  // m cells, kEmptySpot or the 1-based car number, as left by cars
  // 1..first_failed_car-1.
  std::vector<int> occupancy_at_failure;

  friend bool operator==(const ParkFailure&, const ParkFailure&) = default;
};

class ParkOutcome {
 public:
  ParkOutcome(ParkSuccess s) : result_(std::move(s)) {}  // NOLINT
  ParkOutcome(ParkFailure f) : result_(std::move(f)) {}  // NOLINT

  bool parked() const { return std::holds_alternative<ParkSuccess>(result_); }
  const ParkSuccess& success() const { return std::get<ParkSuccess>(result_); }
  const ParkFailure& failure() const { return std::get<ParkFailure>(result_); }

  // Final street as m cells of car numbers. Requires parked().
  std::vector<int> occupancy(const CarLengths& y) const;
  // sigma: car numbers in street order, left to right. Requires parked().
  std::vector<int> street_order() const;

  friend bool operator==(const ParkOutcome&, const ParkOutcome&) = default;

 private:
  std::variant<ParkSuccess, ParkFailure> result_;
};

// Runs the parking experiment. Throws ValidationError if x is not paired
// with y; otherwise never throws.
ParkOutcome park(const CarLengths& y, const PreferenceList& x, Rule rule);

// Snapshot of the street after one car arrives.
struct ParkStep {
  int car = 0;          // 1-based
  int preference = 0;
  std::optional<int> start;  // empty when this car failed
  std::vector<int> occupancy;
};

// Full step-by-step history of an experiment; the last step is either the
// last car or the first failing car.
std::vector<ParkStep> trace_park(const CarLengths& y, const PreferenceList& x,
                                 Rule rule);

// Renders occupancy as "1 1 . 2 2" ('.' for empty spots).
std::string render_occupancy(std::span<const int> occupancy);

// Reusable street buffer for hot loops (enumeration, invariance scans).
// Operates on raw spans, performs no validation, and allocates only when the
// street grows.
class Street {
 public:
  Street() = default;
  explicit Street(int street_length) { reset(street_length); }

  void reset(int street_length);

  // Parks all cars; returns the 0-based index of the first failing car, or
  // -1 on success. When `starts` is non-null it receives 1-based starts for
  // the cars that parked.
  int run(std::span<const int> lengths, std::span<const int> prefs, Rule rule,
          std::vector<int>* starts = nullptr);

  bool parks_all(std::span<const int> lengths, std::span<const int> prefs,
                 Rule rule) {
    return run(lengths, prefs, rule) < 0;
  }

  // Cells 1..m (index 0 unused).
  std::span<const int> cells() const {
    return std::span<const int>(cells_).subspan(1, static_cast<std::size_t>(m_));
  }

  // Places one car; returns its 1-based start or 0 if it cannot park.
  int place(int car_number, int length, int pref, Rule rule);

 private:
  int m_ = 0;
  std::vector<int> cells_;
};

}  // namespace parking

#endif  // PARKING_SIM_HPP_
