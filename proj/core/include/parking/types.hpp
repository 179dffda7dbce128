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

#ifndef PARKING_TYPES_HPP_
#define PARKING_TYPES_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace parking {

// Error hierarchy. Every error raised by the library derives from Error so
// callers (the CLI in particular) can map them to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: non-positive lengths, mismatched arity, preferences
// outside the street.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold (e.g. asking for
// pi-invariance of a list that does not itself park).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Projected number of parking experiments exceeds the configured budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t projected, std::uint64_t budget);

  std::uint64_t projected() const { return projected_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t projected_;
  std::uint64_t budget_;
};

// Default experiment budget for exhaustive enumeration and sweeps.
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

enum class Rule { Assortment, Sequence };

std::string_view to_string(Rule rule);
// Accepts "assortment" / "sequence" (case-sensitive). Throws ValidationError.
Rule parse_rule(std::string_view text);

// Car lengths y = (y_1, ..., y_n), every entry >= 1, n >= 1. Storage is
// 0-based; car numbers reported to users are 1-based.
class CarLengths {
 public:
  explicit CarLengths(std::vector<int> lengths);
  CarLengths(std::initializer_list<int> lengths)
      : CarLengths(std::vector<int>(lengths)) {}

  std::size_t size() const { return lengths_.size(); }
  int operator[](std::size_t i) const { return lengths_[i]; }
  std::span<const int> values() const { return lengths_; }
  const std::vector<int>& vec() const { return lengths_; }

  // m = sum of all lengths.
  int street_length() const { return street_length_; }

  // y restricted to its first `count` entries (1 <= count <= n).
  CarLengths restricted(std::size_t count) const;
  // y with the car at 0-based position `index` removed. Requires n >= 2.
  CarLengths without(std::size_t index) const;

  friend bool operator==(const CarLengths&, const CarLengths&) = default;
  friend auto operator<=>(const CarLengths& a, const CarLengths& b) {
    return a.lengths_ <=> b.lengths_;
  }

 private:
  std::vector<int> lengths_;
  int street_length_ = 0;
};

// Preference list x = (x_1, ..., x_n) of 1-based spot indices.
//
// A PreferenceList on its own only guarantees positive entries. Pairing with
// a CarLengths (same arity, entries in [1, m]) is checked by the two-argument
// constructor or by check_paired().
class PreferenceList {
 public:
  explicit PreferenceList(std::vector<int> prefs);
  PreferenceList(std::initializer_list<int> prefs)
      : PreferenceList(std::vector<int>(prefs)) {}
  PreferenceList(std::vector<int> prefs, const CarLengths& lengths);

  std::size_t size() const { return prefs_.size(); }
  int operator[](std::size_t i) const { return prefs_[i]; }
  std::span<const int> values() const { return prefs_; }
  const std::vector<int>& vec() const { return prefs_; }

  bool is_nondecreasing() const;
  // The sorted member of x's rearrangement class.
  PreferenceList sorted() const;

  friend bool operator==(const PreferenceList&, const PreferenceList&) = default;
  friend auto operator<=>(const PreferenceList& a, const PreferenceList& b) {
    return a.prefs_ <=> b.prefs_;
  }

 private:
  std::vector<int> prefs_;
};

// Throws ValidationError unless x has the arity of y and entries in [1, m].
void check_paired(const CarLengths& y, const PreferenceList& x);
// Non-throwing form of check_paired.
bool is_paired(const CarLengths& y, const PreferenceList& x);

// "(1,2,1)"
std::string format_tuple(std::span<const int> values);
std::ostream& operator<<(std::ostream& os, const CarLengths& y);
std::ostream& operator<<(std::ostream& os, const PreferenceList& x);

// Parses "1,2,1" (whitespace around entries tolerated). Throws
// ValidationError on empty input, junk, or non-positive entries.
std::vector<int> parse_positive_list(std::string_view text);

// (1^n)
PreferenceList all_ones(std::size_t n);

}  // namespace parking

#endif  // PARKING_TYPES_HPP_
