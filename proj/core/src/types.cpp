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

#include "parking/types.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>

namespace parking {

BudgetExceeded::BudgetExceeded(std::uint64_t projected, std::uint64_t budget)
    : Error("projected " + std::to_string(projected) +
            " parking experiments exceeds budget of " +
            std::to_string(budget)),
      projected_(projected),
      budget_(budget) {}

std::string_view to_string(Rule rule) {
  return rule == Rule::Assortment ? "assortment" : "sequence";
}

Rule parse_rule(std::string_view text) {
  if (text == "assortment") return Rule::Assortment;
  if (text == "sequence") return Rule::Sequence;
  throw ValidationError("unknown rule '" + std::string(text) +
                        "' (expected assortment or sequence)");
}

CarLengths::CarLengths(std::vector<int> lengths) : lengths_(std::move(lengths)) {
  if (lengths_.empty()) throw ValidationError("car lengths must be non-empty");
  long long total = 0;
  for (int len : lengths_) {
    if (len < 1) {
      throw ValidationError("car lengths must be positive, got " +
                            format_tuple(lengths_));
    }
    total += len;
  }
  if (total > std::numeric_limits<int>::max()) {
    throw ValidationError("street length overflows int");
  }
  street_length_ = static_cast<int>(total);
}

CarLengths CarLengths::restricted(std::size_t count) const {
  if (count < 1 || count > lengths_.size()) {
    throw ValidationError("restriction length out of range");
  }
  return CarLengths(std::vector<int>(lengths_.begin(), lengths_.begin() + count));
}

CarLengths CarLengths::without(std::size_t index) const {
  if (lengths_.size() < 2 || index >= lengths_.size()) {
    throw ValidationError("cannot remove car from lengths " +
                          format_tuple(lengths_));
  }
  std::vector<int> out = lengths_;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(index));
  return CarLengths(std::move(out));
}

PreferenceList::PreferenceList(std::vector<int> prefs) : prefs_(std::move(prefs)) {
  if (prefs_.empty()) throw ValidationError("preference list must be non-empty");
  for (int p : prefs_) {
    if (p < 1) {
      throw ValidationError("preferences must be positive, got " +
                            format_tuple(prefs_));
    }
  }
}

PreferenceList::PreferenceList(std::vector<int> prefs, const CarLengths& lengths)
    : PreferenceList(std::move(prefs)) {
  check_paired(lengths, *this);
}

bool PreferenceList::is_nondecreasing() const {
  return std::is_sorted(prefs_.begin(), prefs_.end());
}

PreferenceList PreferenceList::sorted() const {
  std::vector<int> out = prefs_;
  std::sort(out.begin(), out.end());
  return PreferenceList(std::move(out));
}

bool is_paired(const CarLengths& y, const PreferenceList& x) {
  if (x.size() != y.size()) return false;
  const int m = y.street_length();
  return std::all_of(x.values().begin(), x.values().end(),
                     [m](int p) { return p >= 1 && p <= m; });
}

void check_paired(const CarLengths& y, const PreferenceList& x) {
  if (x.size() != y.size()) {
    throw ValidationError("arity mismatch: " + std::to_string(x.size()) +
                          " preferences for " + std::to_string(y.size()) +
                          " cars");
  }
  if (!is_paired(y, x)) {
    throw ValidationError("preferences " + format_tuple(x.values()) +
                          " must lie in [1, " +
                          std::to_string(y.street_length()) + "]");
  }
}

std::string format_tuple(std::span<const int> values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  out += ')';
  return out;
}

std::ostream& operator<<(std::ostream& os, const CarLengths& y) {
  return os << format_tuple(y.values());
}

std::ostream& operator<<(std::ostream& os, const PreferenceList& x) {
  return os << format_tuple(x.values());
}

std::vector<int> parse_positive_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw ValidationError("cannot parse '" + std::string(text) +
                            "' as a comma-separated list of positive integers");
    }
    if (value < 1) {
      throw ValidationError("entries must be positive in '" + std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

PreferenceList all_ones(std::size_t n) {
  return PreferenceList(std::vector<int>(n, 1));
}

}  // namespace parking
