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


// Acceptance gate. Prints one [PASS]/[FAIL] line per criterion and exits
// non-zero if any criterion fails, other than those listed in kKnownFailures.
// A known failure still prints [FAIL] with its measured evidence; it only
// stops the process status from going red, and if it ever starts passing the
// gate fails so the list gets updated.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json_io.hpp"
#include "parking/closed_form.hpp"
#include "parking/enumeration.hpp"
#include "parking/generators.hpp"
#include "parking/predicates.hpp"
#include "parking/sim.hpp"
#include "parking/verify.hpp"

namespace parking {
namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  double limit_seconds;
  std::function<Verdict()> body;
};

// Criteria whose stated expectation contradicts the parking rule it is
// phrased in; the analysis lives with the project's decision notes.
const std::map<std::string, std::string> kKnownFailures = {
    {"AC3", "the expected sequence-invariant set omits (1,1,3),(1,3,1),(3,1,1), "
            "which park under the sequence rule (e.g. (3,1,1): car 2 takes 1-2, car 3 takes 4)"},
};

std::string set_string(const std::vector<PreferenceList>& items) {
  std::string s = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    s += (i ? "," : "") + format_tuple(items[i].values());
  }
  return s + "}";
}

std::vector<CarLengths> all_lengths(std::size_t n, int hi) {
  std::vector<CarLengths> out;
  std::vector<int> y(n, 1);
  do out.emplace_back(y);
  while (next_product_tuple(y, hi));
  return out;
}

CarLengths constant(int c, std::size_t n) { return CarLengths(std::vector<int>(n, c)); }

// --- criteria ---------------------------------------------------------------

Verdict street_fixtures() {
  Verdict v;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) {
      v.pass = false;
      v.detail += what + "; ";
    }
  };
  const CarLengths y1{1, 3, 1};
  const CarLengths y2{1, 2, 2};
  const auto a = park(y1, {2, 1, 1}, Rule::Assortment);
  expect(a.parked() && a.success().starts == std::vector<int>{2, 3, 1}, "(1,3,1)/(2,1,1) assortment");
  const auto s = park(y1, {2, 1, 1}, Rule::Sequence);
  expect(!s.parked() && s.failure().first_failed_car == 2, "(1,3,1)/(2,1,1) sequence");
  for (Rule r : {Rule::Assortment, Rule::Sequence}) {
    const auto g = park(y2, {1, 2, 1}, r);
    expect(g.parked() && g.success().starts == std::vector<int>{1, 2, 4}, "(1,2,2)/(1,2,1)");
  }
  const auto bs = park(y2, {2, 1, 1}, Rule::Sequence);
  expect(!bs.parked() && bs.failure().first_failed_car == 2, "(1,2,2)/(2,1,1) sequence");
  const auto ba = park(y2, {2, 1, 1}, Rule::Assortment);
  expect(!ba.parked() && ba.failure().first_failed_car == 3, "(1,2,2)/(2,1,1) assortment");
  if (v.pass) v.detail = "6 experiments exact";
  return v;
}

Verdict sequence_counts() {
  std::size_t cases = 0, bad = 0;
  std::string first_bad;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& y : all_lengths(n, 4)) {
      ++cases;
      const auto brute = enumerate(y, Rule::Sequence, Filter::All).count();
      if (ps_count_formula(y).value != brute) {
        if (!bad++) first_bad = format_tuple(y.values());
      }
    }
  }
  for (unsigned n = 1; n <= 5; ++n) {
    ++cases;
    if (enumerate(constant(1, n), Rule::Sequence, Filter::All).count() != pf_count(n)) {
      if (!bad++) first_bad = "(1^" + std::to_string(n) + ")";
    }
  }
  return {bad == 0, std::to_string(cases) + " cases, " + std::to_string(bad) + " mismatches" +
                        (bad ? " first " + first_bad : "")};
}

Verdict short_middle_car_sets() {
  const CarLengths y{1, 2, 1};
  const auto pa = enumerate(y, Rule::Assortment, Filter::Invariant).items;
  const auto ps = enumerate(y, Rule::Sequence, Filter::Invariant).items;
  const std::vector<PreferenceList> want_pa{{1, 1, 1}, {1, 1, 2}, {1, 1, 3}, {1, 2, 1},
                                            {1, 3, 1}, {2, 1, 1}, {3, 1, 1}};
  const std::vector<PreferenceList> want_ps{{1, 1, 1}};
  const bool pa_ok = pa == want_pa;
  const bool ps_ok = ps == want_ps;
  return {pa_ok && ps_ok, std::string("assortment ") + (pa_ok ? "exact (7)" : "got " + set_string(pa)) +
                              "; sequence " +
                              (ps_ok ? "exact" : "got " + set_string(ps) + ", expected {(1,1,1)}")};
}

Verdict constant_theorem() {
  std::uint64_t checked = 0, bad = 0;
  std::string first_bad;
  for (int c = 1; c <= 3; ++c) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const CarLengths y = constant(c, n);
      Street street(y.street_length());
      std::vector<int> x(n, 1);
      do {
        ++checked;
        const bool formula = constant_invariant(c, n, PreferenceList(x));
        const bool a = invariant_fast(y.values(), x, Rule::Assortment, street);
        const bool s = invariant_fast(y.values(), x, Rule::Sequence, street);
        if (formula != a || formula != s) {
          if (!bad++) first_bad = format_tuple(y.values()) + " x=" + format_tuple(x);
        }
      } while (next_product_tuple(x, y.street_length()));
    }
  }
  return {bad == 0, std::to_string(checked) + " lists x both rules, " + std::to_string(bad) +
                        " disagreements" + (bad ? " first " + first_bad : "")};
}

Verdict constant_counts() {
  std::size_t cases = 0;
  std::string problems;
  for (int c = 1; c <= 3; ++c) {
    for (unsigned n = 1; n <= (c == 3 ? 4u : 5u); ++n) {
      ++cases;
      const CarLengths y = constant(c, n);
      const std::string tag = " c=" + std::to_string(c) + " n=" + std::to_string(n);
      const auto up = enumerate(y, Rule::Assortment, Filter::NondecreasingInvariant).items;
      if (catalan(n) != up.size()) problems += "catalan" + tag + "; ";
      if (pf_count(n) != enumerate(y, Rule::Assortment, Filter::Invariant).count()) {
        problems += "constant-inv" + tag + "; ";
      }
      const auto pf_up = enumerate(constant(1, n), Rule::Assortment, Filter::Nondecreasing).items;
      std::vector<PreferenceList> image;
      for (const auto& x : up) {
        PreferenceList z = phi(x, c);
        if (psi(z, c) != x) problems += "psi(phi(x))" + tag + "; ";
        image.push_back(std::move(z));
      }
      std::sort(image.begin(), image.end());
      if (image != pf_up) problems += "phi image" + tag + "; ";
      for (const auto& z : pf_up) {
        if (phi(psi(z, c), c) != z) problems += "phi(psi(z))" + tag + "; ";
      }
    }
  }
  return {problems.empty(),
          std::to_string(cases) + " (c,n) cases" + (problems.empty() ? ", phi bijective" : ": " + problems)};
}

// Deterministic sample of 200 lengths from [4]^4. mt19937 output is fixed by
// the standard; the Fisher-Yates draw below avoids library-specific
// distributions.
std::vector<CarLengths> quadruple_sample() {
  auto pool = all_lengths(4, 4);
  std::mt19937 gen(20260415);
  for (std::size_t i = pool.size() - 1; i > 0; --i) {
    const std::size_t j = gen() % (i + 1);
    std::swap(pool[i], pool[j]);
  }
  pool.erase(pool.begin() + 200, pool.end());
  std::sort(pool.begin(), pool.end());
  return pool;
}

Verdict mi_routes() {
  std::vector<CarLengths> ys;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto& y : all_lengths(n, 5)) ys.push_back(std::move(y));
  }
  for (auto& y : quadruple_sample()) ys.push_back(std::move(y));
  std::size_t bad = 0;
  std::string first_bad;
  for (const auto& y : ys) {
    const bool oracle = is_minimally_invariant(y);
    const bool alternate = is_minimally_invariant_alternate(y);
    const auto up = enumerate(y, Rule::Assortment, Filter::NondecreasingInvariant).items;
    const bool brute = up.size() == 1 && up.front() == all_ones(y.size());
    if (oracle != alternate || oracle != brute) {
      if (!bad++) first_bad = format_tuple(y.values());
    }
  }
  return {bad == 0, std::to_string(ys.size()) + " lengths (155 exhaustive + 200 sampled), " +
                        std::to_string(bad) + " disagreements" + (bad ? " first " + first_bad : "")};
}

Verdict sweep_clean(const std::vector<SweepSpec>& specs, const std::vector<std::uint64_t>& sizes) {
  std::string detail;
  bool pass = true;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto report = run_sweep(specs[i]);
    for (const auto& c : report.checks) {
      const bool ok = c.disagreements.empty() &&
                      (sizes.empty() || c.instances_checked == sizes[i]) &&
                      c.instances_checked == c.agreements + c.disagreements.size();
      pass = pass && ok;
      detail += std::string(to_string(c.check)) + " n=" + std::to_string(specs[i].arity) + ": " +
                std::to_string(c.instances_checked) + "/" + std::to_string(c.disagreements.size()) +
                "; ";
    }
  }
  return {pass, detail + "(instances/disagreements)"};
}

Verdict mi_formulas() {
  return sweep_clean({SweepSpec{2, 1, 6, {CheckId::MiPairVsOracle}},
                      SweepSpec{3, 1, 6, {CheckId::MiTripleVsOracle}}},
                     {36, 216});
}

Verdict invariant_sets() {
  auto v = sweep_clean({SweepSpec{2, 1, 5, {CheckId::InvPairVsOracle}},
                        SweepSpec{3, 1, 5, {CheckId::Table1VsOracle}}},
                       {25, 125});
  std::set<TripleRow> rows;
  for (const auto& y : all_lengths(3, 5)) rows.insert(classify_triple(y).row);
  const bool sub_rows = classify_triple(CarLengths{1, 2, 1}).row == TripleRow::ABA_BEq2A &&
                        classify_triple(CarLengths{1, 3, 1}).row == TripleRow::ABA_BNe2A &&
                        classify_triple(CarLengths{5, 3, 1}).row == TripleRow::CBA_SumLeC &&
                        classify_triple(CarLengths{4, 3, 2}).row == TripleRow::CBA_SumGtC;
  v.pass = v.pass && rows.size() == static_cast<std::size_t>(kTripleRowCount) && sub_rows;
  v.detail += "; rows covered " + std::to_string(rows.size()) + "/19" +
              (sub_rows ? ", split rows hit" : ", split rows MISSED");
  return v;
}

Verdict property_suites() {
  std::vector<SweepSpec> specs;
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<CheckId> checks{CheckId::IncreasingImpliesMi, CheckId::MinentryLemma};
    if (n >= 2) {
      for (CheckId id : {CheckId::RestrictionClosure, CheckId::AppendForm, CheckId::RemovalLemma,
                         CheckId::BetaTransfer}) {
        checks.push_back(id);
      }
    }
    specs.push_back(SweepSpec{n, 1, 4, checks});
  }
  std::uint64_t instances = 0, violations = 0;
  for (const auto& spec : specs) {
    for (const auto& c : run_sweep(spec, SweepOptions{kDefaultBudget, 1}).checks) {
      instances += c.instances_checked;
      violations += c.disagreements.size();
    }
  }
  return {violations == 0, "6 suites over n<=4, entries<=4: " + std::to_string(instances) +
                               " instances, " + std::to_string(violations) + " violations"};
}

Verdict conjecture_audit() {
  const SweepSpec spec{4, 1, 4, {CheckId::Conjecture4Audit}};
  const auto first = run_sweep(spec, SweepOptions{kDefaultBudget, 1});
  const auto again = run_sweep(spec, SweepOptions{kDefaultBudget, 4});
  const auto& c = first.checks.front();
  const bool deterministic = cli::sweep_to_ndjson(first, false) == cli::sweep_to_ndjson(again, false);
  return {c.instances_checked == 256 && deterministic,
          std::to_string(c.instances_checked) + " instances, " +
              std::to_string(c.disagreements.size()) + " findings, " +
              (deterministic ? "deterministic" : "NOT deterministic")};
}

Verdict sweep_determinism() {
  const std::vector<std::vector<std::string>> runs{
      {"verify", "--n", "3", "--range", "1,4", "--format", "json"},
      {"verify", "--n", "4", "--range", "1,3", "--format", "json"},
      {"conjecture4", "--range", "1,3", "--format", "json"}};
  std::size_t bytes = 0;
  for (auto args : runs) {
    std::ostringstream out1, out8, err;
    auto a1 = args;
    a1.insert(a1.end(), {"--jobs", "1"});
    auto a8 = args;
    a8.insert(a8.end(), {"--jobs", "8"});
    const int rc1 = cli::run(a1, out1, err);
    const int rc8 = cli::run(a8, out8, err);
    if (rc1 != rc8 || out1.str() != out8.str() || out1.str().empty()) {
      return {false, "reports differ for: " + args[0] + " " + args[2]};
    }
    bytes += out1.str().size();
  }
  return {true, "3 sweeps byte-identical at --jobs 1 and 8 (" + std::to_string(bytes) + " bytes)"};
}

}  // namespace
}  // namespace parking

int main() {
  using namespace parking;
  const std::vector<Criterion> criteria{
      {"AC1", "park reproduces the two-street fixtures", 0.001, street_fixtures},
      {"AC2", "sequence count formula equals enumeration", 60, sequence_counts},
      {"AC3", "invariant sets for y=(1,2,1) under both rules", 1, short_middle_car_sets},
      {"AC4", "constant-length invariance formula vs brute force", 300, constant_theorem},
      {"AC5", "Catalan and (n+1)^(n-1) counts, phi bijection", 300, constant_counts},
      {"AC6", "minimal invariance: oracle = alternate = brute force", 600, mi_routes},
      {"AC7", "two- and three-car minimal invariance formulas", 30, mi_formulas},
      {"AC8", "two- and three-car invariant sets", 120, invariant_sets},
      {"AC9", "structural property suites", 600, property_suites},
      {"AC10", "four-car conjecture audit completes deterministically", 120, conjecture_audit},
      {"AC11", "verify reports independent of --jobs", 600, sweep_determinism},
  };

  int unexpected = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.body();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = v.pass && in_time;
    std::ostringstream timing;
    timing << secs << " s, limit " << c.limit_seconds << " s";
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << c.id << " " << c.title << ": " << v.detail
              << " (" << timing.str() << (in_time ? "" : ", TOO SLOW") << ")";
    const auto known = kKnownFailures.find(c.id);
    if (known != kKnownFailures.end()) {
      if (pass) {
        std::cout << " [listed as a known failure but passed]";
        ++unexpected;
      } else {
        std::cout << " [known failure: " << known->second << "]";
      }
    } else if (!pass) {
      ++unexpected;
    }
    std::cout << std::endl;
  }
  std::cout << (unexpected ? "acceptance: FAILED" : "acceptance: ok") << " (" << unexpected
            << " unexpected result(s), " << kKnownFailures.size() << " known failure(s))\n";
  return unexpected ? 1 : 0;
}
