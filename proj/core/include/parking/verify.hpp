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

// Differential verification: sweep every y in [lo, hi]^n in lexicographic
// order and compare a closed form (or a structural claim) with brute force.
//
// Each check decides for itself whether a given y is an instance. Checks
// about constant lengths only look at y = (c^n), implication checks only at
// y satisfying the premise, and so on; see the table in verify.cpp.

#ifndef PARKING_VERIFY_HPP_
#define PARKING_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parking/sim.hpp"
#include "parking/types.hpp"

namespace parking {

enum class CheckId {
  MiPairVsOracle,
  MiTripleVsOracle,
  MiAlternateVsOracle,
  Table1VsOracle,
  InvPairVsOracle,
  ConstantThmVsOracle,
  Eq2VsEnumeration,
  CatalanCount,
  ConstantInvCount,
  IncreasingImpliesMi,
  RestrictionClosure,
  AppendForm,
  BetaTransfer,
  MinentryLemma,
  RemovalLemma,
  Conjecture4Audit,
  PSsubsetPA,
  SeqAssortAgreeN2,
};

class UnknownCheck : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A replayed witness no longer reproduces the recorded values.
class StaleWitness : public Error {
 public:
  using Error::Error;
};

// Replay was asked for an entry that carries no witness.
class NoWitness : public Error {
 public:
  using Error::Error;
};

std::string_view to_string(CheckId id);
CheckId parse_check(std::string_view text);
const std::vector<CheckId>& all_checks();
// Conjecture checks record findings; they never fail a sweep.
bool is_conjecture(CheckId id);

struct SweepSpec {
  std::size_t arity = 1;
  int lo = 1;
  int hi = 1;
  std::vector<CheckId> checks;

  friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

// Throws ValidationError (or UnknownCheck) when the sweep is malformed or a
// check does not support the requested arity.
void validate(const SweepSpec& spec);

struct Disagreement {
  std::vector<int> y;
  // "x" (a preference list), "w" (a probe preference), "i" (a car index),
  // "y" (the lengths themselves), or "" when there is no witness.
  std::string witness_kind;
  std::vector<int> witness;
  std::string closed_form_value;
  std::string oracle_value;

  friend bool operator==(const Disagreement&, const Disagreement&) = default;
};

struct CheckReport {
  CheckId check;
  std::uint64_t instances_checked = 0;
  std::uint64_t agreements = 0;
  std::vector<Disagreement> disagreements;

  bool conjecture() const { return is_conjecture(check); }
  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

struct SweepReport {
  SweepSpec spec;
  std::vector<CheckReport> checks;
  double wall_time_seconds = 0.0;

  // Any disagreement in a theorem-backed check.
  bool theorem_failure() const;
};

struct SweepOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned jobs = 1;
};

std::uint64_t projected_experiments(const SweepSpec& spec);

SweepReport run_sweep(const SweepSpec& spec, const SweepOptions& options = {});

// Outcome of one check on one y. The record carries both sides' values and,
// when the check has one, a witness, even when the sides agree.
struct Evaluation {
  bool agree = true;
  Disagreement record;
};
// Returns nullopt when y is not an instance of the check.
std::optional<Evaluation> evaluate_check(CheckId check, const CarLengths& y,
                                         std::uint64_t budget = kDefaultBudget);

struct ReplayEntry {
  CheckId check;
  Disagreement entry;
};

struct TraceBlock {
  std::string label;
  std::vector<int> y;
  std::vector<int> x;
  Rule rule;
  bool parked = false;
  std::vector<ParkStep> steps;
};

struct ReplayTrace {
  CheckId check;
  std::vector<int> y;
  std::string closed_form_value;
  std::string oracle_value;
  std::vector<TraceBlock> blocks;

  std::string render() const;
};

// Recomputes both sides for the entry's y and, if they still produce the
// recorded values and witness, returns step-by-step parking traces for the
// witness. Throws NoWitness for entries without a witness and StaleWitness
// when the recorded values do not reproduce.
ReplayTrace replay_witness(const ReplayEntry& entry);

}  // namespace parking

#endif  // PARKING_VERIFY_HPP_
