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

#include "parking/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <sstream>

#include "parallel.hpp"
#include "parking/closed_form.hpp"
#include "parking/enumeration.hpp"
#include "parking/generators.hpp"
#include "parking/predicates.hpp"

namespace parking {

// Instance selection per check:
//
//   check                 arity   instances
//   MiPairVsOracle        2       every y
//   MiTripleVsOracle      3       every y
//   MiAlternateVsOracle   any     every y
//   Table1VsOracle        3       every y
//   InvPairVsOracle       2       every y
//   ConstantThmVsOracle   any     y = (c^n)
//   Eq2VsEnumeration      any     every y
//   CatalanCount          any     y = (c^n)
//   ConstantInvCount      any     y = (c^n)
//   IncreasingImpliesMi   any     strictly increasing y
//   RestrictionClosure    >= 2    minimally invariant y
//   AppendForm            >= 2    y whose first n-1 entries are minimally invariant
//   BetaTransfer          >= 2    every y
//   MinentryLemma         any     every y
//   RemovalLemma          >= 2    every y
//   Conjecture4Audit      4       every y
//   PSsubsetPA            any     every y
//   SeqAssortAgreeN2      <= 2    every y

namespace {

struct CheckInfo {
  CheckId id;
  std::string_view name;
  bool conjecture;
  std::size_t min_arity;
  std::size_t max_arity;  // 0 = unbounded
};

constexpr std::array<CheckInfo, 18> kChecks{{
    {CheckId::MiPairVsOracle, "MiPairVsOracle", false, 2, 2},
    {CheckId::MiTripleVsOracle, "MiTripleVsOracle", false, 3, 3},
    {CheckId::MiAlternateVsOracle, "MiAlternateVsOracle", false, 1, 0},
    {CheckId::Table1VsOracle, "Table1VsOracle", false, 3, 3},
    {CheckId::InvPairVsOracle, "InvPairVsOracle", false, 2, 2},
    {CheckId::ConstantThmVsOracle, "ConstantThmVsOracle", false, 1, 0},
    {CheckId::Eq2VsEnumeration, "Eq2VsEnumeration", false, 1, 0},
    {CheckId::CatalanCount, "CatalanCount", false, 1, 0},
    {CheckId::ConstantInvCount, "ConstantInvCount", false, 1, 0},
    {CheckId::IncreasingImpliesMi, "IncreasingImpliesMi", false, 1, 0},
    {CheckId::RestrictionClosure, "RestrictionClosure", false, 2, 0},
    {CheckId::AppendForm, "AppendForm", false, 2, 0},
    {CheckId::BetaTransfer, "BetaTransfer", false, 2, 0},
    {CheckId::MinentryLemma, "MinentryLemma", false, 1, 0},
    {CheckId::RemovalLemma, "RemovalLemma", false, 2, 0},
    {CheckId::Conjecture4Audit, "Conjecture4Audit", true, 4, 4},
    {CheckId::PSsubsetPA, "PSsubsetPA", false, 1, 0},
    {CheckId::SeqAssortAgreeN2, "SeqAssortAgreeN2", false, 1, 2},
}};

const CheckInfo& info(CheckId id) { return kChecks[static_cast<std::size_t>(id)]; }

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string set_str(const std::vector<PreferenceList>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    out += format_tuple(items[i].values());
  }
  return out + "}";
}

std::string count_str(const BigInt& v) { return v.str(); }

bool is_constant(const CarLengths& y) {
  return std::all_of(y.values().begin(), y.values().end(),
                     [&](int v) { return v == y[0]; });
}

bool is_strictly_increasing(const CarLengths& y) {
  return std::adjacent_find(y.values().begin(), y.values().end(),
                            std::greater_equal<int>()) == y.values().end();
}

Evaluation make(const CarLengths& y, bool agree, std::string cf, std::string oracle,
                std::string kind = {}, std::vector<int> witness = {}) {
  return Evaluation{agree, Disagreement{y.vec(), std::move(kind), std::move(witness),
                                        std::move(cf), std::move(oracle)}};
}

Evaluation mi_vs_oracle(const CarLengths& y, bool closed_form) {
  const auto probe = invariant_probe(y);
  const bool oracle = !probe.has_value();
  std::vector<int> witness;
  if (probe) witness = {*probe};
  return make(y, closed_form == oracle, bool_str(closed_form), bool_str(oracle),
              witness.empty() ? "" : "w", witness);
}

// First element of the symmetric difference of two sorted sets.
std::optional<PreferenceList> first_difference(const std::vector<PreferenceList>& a,
                                               const std::vector<PreferenceList>& b) {
  std::vector<PreferenceList> diff;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(diff));
  if (diff.empty()) return std::nullopt;
  return diff.front();
}

Evaluation set_vs_oracle(const CarLengths& y, const std::vector<PreferenceList>& closed,
                         const std::vector<PreferenceList>& brute) {
  const auto diff = first_difference(closed, brute);
  if (!diff) return make(y, true, set_str(closed), set_str(brute));
  return make(y, false, set_str(closed), set_str(brute), "x", diff->vec());
}

EnumerateOptions enum_opts(std::uint64_t budget) { return EnumerateOptions{budget, 1}; }

// Visits every x in [m]^n until `visit` returns false.
template <typename Visit>
void for_each_list(const CarLengths& y, Visit&& visit) {
  std::vector<int> x(y.size(), 1);
  do {
    if (!visit(x)) return;
  } while (next_product_tuple(x, y.street_length()));
}

Evaluation constant_theorem(const CarLengths& y) {
  const int c = y[0];
  const std::size_t n = y.size();
  Street street(y.street_length());
  std::uint64_t admitted = 0;
  std::optional<Evaluation> mismatch;
  for_each_list(y, [&](const std::vector<int>& x) {
    const bool formula = constant_invariant(c, n, PreferenceList(x));
    const bool assortment = invariant_fast(y.values(), x, Rule::Assortment, street);
    const bool sequence = invariant_fast(y.values(), x, Rule::Sequence, street);
    if (formula != assortment || formula != sequence) {
      mismatch = make(y, false, "formula=" + bool_str(formula),
                      "assortment=" + bool_str(assortment) +
                          ",sequence=" + bool_str(sequence),
                      "x", x);
      return false;
    }
    admitted += formula;
    return true;
  });
  if (mismatch) return *mismatch;
  const std::string k = std::to_string(admitted);
  return make(y, true, "admits " + k, "assortment " + k + ", sequence " + k);
}

Evaluation eq2(const CarLengths& y, std::uint64_t budget) {
  const BigInt formula = ps_count_formula(y).value;
  const auto brute = enumerate(y, Rule::Sequence, Filter::All, enum_opts(budget)).count();
  const bool agree = formula == brute;
  return make(y, agree, count_str(formula), std::to_string(brute),
              agree ? "" : "y", agree ? std::vector<int>{} : y.vec());
}

Evaluation catalan_count(const CarLengths& y, std::uint64_t budget) {
  const int c = y[0];
  const auto n = static_cast<unsigned>(y.size());
  const auto items =
      enumerate(y, Rule::Assortment, Filter::NondecreasingInvariant, enum_opts(budget)).items;
  const BigInt expected = catalan(n);

  // phi must land exactly on the nondecreasing parking functions, with psi
  // undoing it.
  const auto pf_up = enumerate(CarLengths(std::vector<int>(n, 1)), Rule::Assortment,
                               Filter::Nondecreasing, enum_opts(budget))
                         .items;
  std::vector<PreferenceList> image;
  for (const auto& x : items) {
    const bool residues_ok = std::all_of(x.values().begin(), x.values().end(),
                                         [c](int v) { return (v - 1) % c == 0; });
    if (!residues_ok) {
      return make(y, false, count_str(expected),
                  std::to_string(items.size()) + "; phi undefined", "x", x.vec());
    }
    PreferenceList z = phi(x, c);
    if (psi(z, c) != x) {
      return make(y, false, count_str(expected),
                  std::to_string(items.size()) + "; psi(phi(x)) != x", "x", x.vec());
    }
    image.push_back(std::move(z));
  }
  std::sort(image.begin(), image.end());
  if (auto diff = first_difference(image, pf_up)) {
    return make(y, false, count_str(expected),
                std::to_string(items.size()) + "; phi image differs", "x", diff->vec());
  }
  const bool agree = expected == items.size();
  return make(y, agree, count_str(expected), std::to_string(items.size()),
              agree ? "" : "y", agree ? std::vector<int>{} : y.vec());
}

Evaluation constant_inv_count(const CarLengths& y, std::uint64_t budget) {
  const BigInt expected = pf_count(static_cast<unsigned>(y.size()));
  const auto brute = enumerate(y, Rule::Assortment, Filter::Invariant, enum_opts(budget)).count();
  const bool agree = expected == brute;
  return make(y, agree, count_str(expected), std::to_string(brute),
              agree ? "" : "y", agree ? std::vector<int>{} : y.vec());
}

Evaluation increasing_implies_mi(const CarLengths& y, std::uint64_t budget) {
  const auto items =
      enumerate(y, Rule::Assortment, Filter::NondecreasingInvariant, enum_opts(budget)).items;
  for (const auto& x : items) {
    if (x != all_ones(y.size())) return make(y, false, "true", "false", "x", x.vec());
  }
  return make(y, true, "true", "true");
}

Evaluation restriction_closure(const CarLengths& y) {
  for (std::size_t i = 1; i < y.size(); ++i) {
    if (!is_minimally_invariant(y.restricted(i))) {
      return make(y, false, "true", "false", "i", {static_cast<int>(i)});
    }
  }
  return make(y, true, "true", "true");
}

Evaluation append_form(const CarLengths& y, std::uint64_t budget) {
  const auto items =
      enumerate(y, Rule::Assortment, Filter::NondecreasingInvariant, enum_opts(budget)).items;
  for (const auto& x : items) {
    const auto v = x.values();
    if (!std::all_of(v.begin(), v.end() - 1, [](int e) { return e == 1; })) {
      return make(y, false, "true", "false", "x", x.vec());
    }
  }
  return make(y, true, "true", "true");
}

Evaluation beta_transfer(const CarLengths& y, std::uint64_t budget) {
  const auto items = enumerate(y, Rule::Assortment, Filter::Invariant, enum_opts(budget)).items;
  const std::size_t n = y.size();
  Street street;
  for (const auto& x : items) {
    if (std::count(x.values().begin(), x.values().end(), 1) != 1) continue;
    for (std::size_t j = 1; j <= n; ++j) {
      const PreferenceList b = beta_transform(x, y, j);
      for (std::size_t i = 1; i <= n; ++i) {
        const CarLengths reduced = y.without(i - 1);
        street.reset(reduced.street_length());
        const bool ok = is_paired(reduced, b) &&
                        invariant_fast(reduced.values(), b.values(), Rule::Assortment, street);
        if (!ok) {
          return make(y, false, "true",
                      "false (i=" + std::to_string(i) + ", j=" + std::to_string(j) +
                          ", beta=" + format_tuple(b.values()) + ")",
                      "x", x.vec());
        }
      }
    }
  }
  return make(y, true, "true", "true");
}

Evaluation minentry_lemma(const CarLengths& y) {
  Street street(y.street_length());
  for (const auto& t : NondecreasingTuples(y.size(), y.street_length())) {
    if (!check_minentry_lemma(y, PreferenceList(t))) continue;
    if (invariant_fast(y.values(), t, Rule::Assortment, street)) {
      return make(y, false, "true", "false", "x", t);
    }
  }
  return make(y, true, "true", "true");
}

Evaluation removal_lemma(const CarLengths& y, std::uint64_t budget) {
  const auto items = enumerate(y, Rule::Assortment, Filter::Invariant, enum_opts(budget)).items;
  const CarLengths shorter = y.restricted(y.size() - 1);
  Street street(shorter.street_length());
  for (const auto& x : items) {
    const auto v = x.values();
    const auto k = static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
    std::vector<int> rest = x.vec();
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
    const PreferenceList reduced(rest);
    const bool ok = is_paired(shorter, reduced) &&
                    invariant_fast(shorter.values(), rest, Rule::Assortment, street);
    if (!ok) return make(y, false, "true", "false", "x", x.vec());
  }
  return make(y, true, "true", "true");
}

Evaluation ps_subset_pa(const CarLengths& y) {
  Street seq(y.street_length()), asst(y.street_length());
  std::vector<int> seq_starts, asst_starts;
  std::optional<Evaluation> mismatch;
  for_each_list(y, [&](const std::vector<int>& x) {
    if (seq.run(y.values(), x, Rule::Sequence, &seq_starts) >= 0) return true;
    if (asst.run(y.values(), x, Rule::Assortment, &asst_starts) < 0 &&
        asst_starts == seq_starts) {
      return true;
    }
    mismatch = make(y, false, "true", "false", "x", x);
    return false;
  });
  return mismatch ? *mismatch : make(y, true, "true", "true");
}

Evaluation seq_assort_agree(const CarLengths& y) {
  Street street(y.street_length());
  std::optional<Evaluation> mismatch;
  for_each_list(y, [&](const std::vector<int>& x) {
    const bool s = street.parks_all(y.values(), x, Rule::Sequence);
    const bool a = street.parks_all(y.values(), x, Rule::Assortment);
    if (s == a) return true;
    mismatch = make(y, false, "sequence=" + bool_str(s), "assortment=" + bool_str(a), "x", x);
    return false;
  });
  return mismatch ? *mismatch : make(y, true, "true", "true");
}

// Rough experiment cost of one check on one y, used only for the budget guard.
std::uint64_t cost(CheckId check, const CarLengths& y) {
  const auto m = static_cast<std::uint64_t>(y.street_length());
  const auto n = static_cast<std::uint64_t>(y.size());
  const std::uint64_t space = saturating_pow(m, n);
  auto add = [](std::uint64_t a, std::uint64_t b) {
    return a > UINT64_MAX - b ? UINT64_MAX : a + b;
  };
  switch (check) {
    case CheckId::MiPairVsOracle:
    case CheckId::MiTripleVsOracle:
    case CheckId::MiAlternateVsOracle:
    case CheckId::Conjecture4Audit:
    case CheckId::RestrictionClosure:
      return n * n * m;
    case CheckId::ConstantThmVsOracle: {
      if (!is_constant(y)) return 0;
      std::uint64_t fact = 1;
      for (std::uint64_t k = 2; k <= n; ++k) fact *= k;
      return saturating_pow(space, 1) > UINT64_MAX / (2 * fact) ? UINT64_MAX : 2 * fact * space;
    }
    case CheckId::CatalanCount:
    case CheckId::ConstantInvCount:
      return is_constant(y) ? add(space, saturating_pow(n, n)) : 0;
    case CheckId::IncreasingImpliesMi:
      return is_strictly_increasing(y) ? space : 0;
    case CheckId::Eq2VsEnumeration:
    case CheckId::PSsubsetPA:
    case CheckId::SeqAssortAgreeN2:
      return add(space, space);
    default:
      return space;
  }
}

}  // namespace

std::string_view to_string(CheckId id) { return info(id).name; }

CheckId parse_check(std::string_view text) {
  for (const auto& c : kChecks) {
    if (c.name == text) return c.id;
  }
  throw UnknownCheck("unknown check id '" + std::string(text) + "'");
}

const std::vector<CheckId>& all_checks() {
  static const std::vector<CheckId> ids = [] {
    std::vector<CheckId> out;
    for (const auto& c : kChecks) out.push_back(c.id);
    return out;
  }();
  return ids;
}

bool is_conjecture(CheckId id) { return info(id).conjecture; }

void validate(const SweepSpec& spec) {
  if (spec.arity < 1) throw ValidationError("sweep arity must be at least 1");
  if (spec.lo < 1) throw ValidationError("sweep range must start at 1 or above");
  if (spec.hi < spec.lo) throw ValidationError("sweep range is empty");
  if (spec.checks.empty()) throw ValidationError("sweep needs at least one check");
  for (CheckId id : spec.checks) {
    const auto& c = info(id);
    if (spec.arity < c.min_arity || (c.max_arity && spec.arity > c.max_arity)) {
      throw ValidationError(std::string(c.name) + " does not support arity " +
                            std::to_string(spec.arity));
    }
  }
}

bool SweepReport::theorem_failure() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckReport& r) {
    return !r.conjecture() && !r.disagreements.empty();
  });
}

std::optional<Evaluation> evaluate_check(CheckId check, const CarLengths& y,
                                         std::uint64_t budget) {
  const std::size_t n = y.size();
  const auto& c = info(check);
  if (n < c.min_arity || (c.max_arity && n > c.max_arity)) {
    throw ValidationError(std::string(c.name) + " does not support arity " +
                          std::to_string(n));
  }
  switch (check) {
    case CheckId::MiPairVsOracle:
      return mi_vs_oracle(y, mi_pair(y));
    case CheckId::MiTripleVsOracle:
      return mi_vs_oracle(y, mi_triple(y));
    case CheckId::Conjecture4Audit:
      return mi_vs_oracle(y, mi_quadruple_conjecture(y));
    case CheckId::MiAlternateVsOracle: {
      const auto alt = invariant_probe_alternate(y);
      Evaluation e = mi_vs_oracle(y, !alt.has_value());
      if (e.record.witness.empty() && alt) {
        e.record.witness_kind = "w";
        e.record.witness = {*alt};
      }
      return e;
    }
    case CheckId::Table1VsOracle:
      return set_vs_oracle(
          y, inv_triple_set(y),
          enumerate(y, Rule::Assortment, Filter::NondecreasingInvariant, enum_opts(budget)).items);
    case CheckId::InvPairVsOracle:
      return set_vs_oracle(
          y, inv_pair_set(y),
          enumerate(y, Rule::Assortment, Filter::Invariant, enum_opts(budget)).items);
    case CheckId::ConstantThmVsOracle:
      if (!is_constant(y)) return std::nullopt;
      return constant_theorem(y);
    case CheckId::Eq2VsEnumeration:
      return eq2(y, budget);
    case CheckId::CatalanCount:
      if (!is_constant(y)) return std::nullopt;
      return catalan_count(y, budget);
    case CheckId::ConstantInvCount:
      if (!is_constant(y)) return std::nullopt;
      return constant_inv_count(y, budget);
    case CheckId::IncreasingImpliesMi:
      if (!is_strictly_increasing(y)) return std::nullopt;
      return increasing_implies_mi(y, budget);
    case CheckId::RestrictionClosure:
      if (!is_minimally_invariant(y)) return std::nullopt;
      return restriction_closure(y);
    case CheckId::AppendForm:
      if (!is_minimally_invariant(y.restricted(n - 1))) return std::nullopt;
      return append_form(y, budget);
    case CheckId::BetaTransfer:
      return beta_transfer(y, budget);
    case CheckId::MinentryLemma:
      return minentry_lemma(y);
    case CheckId::RemovalLemma:
      return removal_lemma(y, budget);
    case CheckId::PSsubsetPA:
      return ps_subset_pa(y);
    case CheckId::SeqAssortAgreeN2:
      return seq_assort_agree(y);
  }
  return std::nullopt;
}

namespace {

std::vector<CarLengths> sweep_space(const SweepSpec& spec) {
  std::vector<CarLengths> out;
  std::vector<int> y(spec.arity, spec.lo);
  // Lexicographic odometer over [lo, hi]^n.
  while (true) {
    out.emplace_back(y);
    std::size_t i = y.size();
    while (i > 0 && y[i - 1] == spec.hi) {
      y[i - 1] = spec.lo;
      --i;
    }
    if (i == 0) break;
    ++y[i - 1];
  }
  return out;
}

}  // namespace

std::uint64_t projected_experiments(const SweepSpec& spec) {
  validate(spec);
  std::uint64_t total = 0;
  for (const auto& y : sweep_space(spec)) {
    for (CheckId id : spec.checks) {
      const std::uint64_t c = cost(id, y);
      total = total > UINT64_MAX - c ? UINT64_MAX : total + c;
    }
  }
  return total;
}

SweepReport run_sweep(const SweepSpec& spec, const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t projected = projected_experiments(spec);
  if (projected > options.budget) throw BudgetExceeded(projected, options.budget);

  const auto space = sweep_space(spec);
  SweepReport report{spec, {}, 0.0};
  for (CheckId id : spec.checks) {
    std::vector<std::optional<Evaluation>> results(space.size());
    internal::parallel_for(space.size(), options.jobs, [&](std::size_t i) {
      results[i] = evaluate_check(id, space[i], options.budget);
    });
    CheckReport r{id, 0, 0, {}};
    for (auto& e : results) {
      if (!e) continue;
      ++r.instances_checked;
      if (e->agree) {
        ++r.agreements;
      } else {
        r.disagreements.push_back(std::move(e->record));
      }
    }
    report.checks.push_back(std::move(r));
  }
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

TraceBlock make_block(std::string label, const CarLengths& y, const PreferenceList& x,
                      Rule rule) {
  auto steps = trace_park(y, x, rule);
  const bool parked = steps.size() == y.size() && steps.back().start.has_value();
  return TraceBlock{std::move(label), y.vec(), x.vec(), rule, parked, std::move(steps)};
}

void probe_blocks(const CarLengths& y, int w, std::vector<TraceBlock>& out) {
  for (std::size_t i = 0; i < y.size(); ++i) {
    std::vector<int> x(y.size(), 1);
    x[i] = w;
    out.push_back(make_block("w=" + std::to_string(w) + " at car " + std::to_string(i + 1),
                             y, PreferenceList(x), Rule::Assortment));
  }
}

}  // namespace

ReplayTrace replay_witness(const ReplayEntry& entry) {
  const Disagreement& d = entry.entry;
  if (d.witness.empty() || d.witness_kind.empty()) {
    throw NoWitness("no witness recorded for " + std::string(to_string(entry.check)) +
                    " at y=" + format_tuple(d.y));
  }
  const CarLengths y(d.y);
  const auto now = evaluate_check(entry.check, y);
  if (!now) {
    throw StaleWitness("stale witness: y=" + format_tuple(d.y) + " is not an instance of " +
                       std::string(to_string(entry.check)));
  }
  const Disagreement& r = now->record;
  if (r.closed_form_value != d.closed_form_value || r.oracle_value != d.oracle_value ||
      r.witness_kind != d.witness_kind || r.witness != d.witness) {
    throw StaleWitness("stale witness for " + std::string(to_string(entry.check)) +
                       " at y=" + format_tuple(d.y) + ": recorded closed form '" +
                       d.closed_form_value + "' / oracle '" + d.oracle_value +
                       "', recomputed '" + r.closed_form_value + "' / '" + r.oracle_value +
                       "'");
  }

  ReplayTrace trace{entry.check, d.y, r.closed_form_value, r.oracle_value, {}};
  if (d.witness_kind == "w") {
    probe_blocks(y, d.witness.front(), trace.blocks);
  } else if (d.witness_kind == "i") {
    const CarLengths prefix = y.restricted(static_cast<std::size_t>(d.witness.front()));
    if (const auto w = invariant_probe(prefix)) probe_blocks(prefix, *w, trace.blocks);
  } else if (d.witness_kind == "x") {
    const PreferenceList x(d.witness);
    if (is_paired(y, x)) {
      trace.blocks.push_back(make_block("witness", y, x, Rule::Assortment));
      trace.blocks.push_back(make_block("witness", y, x, Rule::Sequence));
      const auto verdict = is_invariant(y, x, Rule::Assortment);
      if (verdict.witness) {
        trace.blocks.push_back(make_block("failing rearrangement", y,
                                          verdict.witness->rearrangement, Rule::Assortment));
      }
    }
  }
  return trace;
}

std::string ReplayTrace::render() const {
  std::ostringstream os;
  os << "check: " << to_string(check) << "\n";
  os << "y: " << format_tuple(y) << "\n";
  os << "closed form: " << closed_form_value << "\n";
  os << "oracle: " << oracle_value << "\n";
  for (const auto& b : blocks) {
    os << "-- " << b.label << " x=" << format_tuple(b.x) << " [" << to_string(b.rule)
       << "]: " << (b.parked ? "parked" : "failed") << "\n";
    for (const auto& s : b.steps) {
      os << "   car " << s.car << " pref " << s.preference << " -> ";
      if (s.start) {
        os << "start " << *s.start;
      } else {
        os << "FAILS";
      }
      os << " | " << render_occupancy(s.occupancy) << "\n";
    }
  }
  return os.str();
}

}  // namespace parking
