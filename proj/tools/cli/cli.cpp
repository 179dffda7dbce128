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


#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json_io.hpp"
#include "parking/closed_form.hpp"
#include "parking/enumeration.hpp"
#include "parking/predicates.hpp"
#include "parking/sim.hpp"
#include "parking/verify.hpp"

namespace parking::cli {

namespace {

constexpr const char* kExitCodes =
    "Exit codes:\n"
    "  0  success (a car failing to park is a result, not an error)\n"
    "  1  a theorem-backed verify check disagreed with brute force\n"
    "  2  usage error: unknown subcommand or flag, bad flag value, bad --format\n"
    "  3  invalid input: lengths, preferences, arity, check ids, sweep files\n"
    "  4  experiment budget exceeded (--budget or " "PARKING_LAB_BUDGET" ")\n"
    "  5  replay witness missing or stale\n";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Table, Json, Csv };

Format parse_format(const std::string& text, bool csv_ok) {
  if (text == "table") return Format::Table;
  if (text == "json") return Format::Json;
  if (text == "csv") {
    if (!csv_ok) throw UsageError("--format csv is only available for park, enumerate, verify and conjecture4");
    return Format::Csv;
  }
  throw UsageError("unknown --format '" + text + "' (table|json|csv)");
}

struct Args {
  std::string y;
  std::string x;
  std::string rule = "assortment";
  std::string filter = "all";
  std::string format = "table";
  std::string method = "oracle";
  std::string formula;
  std::string range;
  std::string checks;
  std::string spec_file;
  std::string entry_file;
  std::vector<std::string> pis;
  std::vector<std::string> words;
  unsigned jobs = 1;
  std::uint64_t budget_raw = 0;
  std::optional<std::uint64_t> budget;
  unsigned n = 0;
  unsigned k = 0;
  std::size_t index = 0;
  bool trace = false;
  bool timing = false;
};

std::pair<int, int> parse_range(const std::string& text) {
  const auto v = parse_positive_list(text);
  if (v.size() != 2 || v[0] > v[1]) {
    throw ValidationError("--range expects lo,hi with 1 <= lo <= hi, got '" + text + "'");
  }
  return {v[0], v[1]};
}

std::string tuple(std::span<const int> v) { return format_tuple(v); }

std::string bracket(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

void row(std::ostream& out, std::string_view key, const std::string& value) {
  out << std::left << std::setw(20) << key << value << "\n";
}

std::string json_text(const json& j) { return j.dump() + "\n"; }

// --- park / decide / invariant / pi-invariant -------------------------------

int cmd_park(const Args& a, std::ostream& out) {
  const Format format = parse_format(a.format, true);
  const CarLengths y(parse_positive_list(a.y));
  const PreferenceList x(parse_positive_list(a.x), y);
  const Rule rule = parse_rule(a.rule);
  const ParkOutcome outcome = park(y, x, rule);

  if (format == Format::Json) {
    out << json_text(outcome_to_json(y, x, rule, outcome));
    return kOk;
  }
  if (format == Format::Csv) {
    out << "car,length,preference,start\n";
    const std::vector<int> starts = outcome.parked() ? outcome.success().starts : std::vector<int>{};
    const auto steps = trace_park(y, x, rule);
    for (std::size_t i = 0; i < y.size(); ++i) {
      out << i + 1 << ',' << y[i] << ',' << x[i] << ',';
      if (i < steps.size() && steps[i].start) out << *steps[i].start;
      out << "\n";
    }
    return kOk;
  }
  row(out, "rule", std::string(to_string(rule)));
  row(out, "y", tuple(y.values()));
  row(out, "x", tuple(x.values()));
  if (outcome.parked()) {
    row(out, "result", "parked");
    row(out, "starts", bracket(outcome.success().starts));
    row(out, "street", render_occupancy(outcome.occupancy(y)));
  } else {
    row(out, "result", "failed at car " + std::to_string(outcome.failure().first_failed_car));
    row(out, "street", render_occupancy(outcome.failure().occupancy_at_failure));
  }
  if (a.trace) {
    for (const auto& s : trace_park(y, x, rule)) {
      out << "  car " << s.car << " pref " << s.preference << " -> "
          << (s.start ? "start " + std::to_string(*s.start) : std::string("FAILS")) << " | "
          << render_occupancy(s.occupancy) << "\n";
    }
  }
  return kOk;
}

int cmd_decide(const Args& a, std::ostream& out) {
  const Format format = parse_format(a.format, false);
  const CarLengths y(parse_positive_list(a.y));
  const PreferenceList x(parse_positive_list(a.x), y);
  const Rule rule = parse_rule(a.rule);
  const bool member = is_member(y, x, rule);
  if (format == Format::Json) {
    out << json_text(json{{"y", y.vec()}, {"x", x.vec()}, {"rule", std::string(to_string(rule))},
                          {"member", member}});
  } else {
    row(out, "member", member ? "true" : "false");
  }
  return kOk;
}

int cmd_invariant(const Args& a, std::ostream& out) {
  const Format format = parse_format(a.format, false);
  const CarLengths y(parse_positive_list(a.y));
  const PreferenceList x(parse_positive_list(a.x), y);
  const Rule rule = parse_rule(a.rule);
  const auto verdict = is_invariant(y, x, rule);
  if (format == Format::Json) {
    json j{{"y", y.vec()}, {"x", x.vec()}, {"rule", std::string(to_string(rule))},
           {"invariant", verdict.invariant}, {"witness", nullptr}};
    if (verdict.witness) {
      j["witness"] = json{{"x", verdict.witness->rearrangement.vec()},
                          {"failed_car", verdict.witness->outcome.failure().first_failed_car}};
    }
    out << json_text(j);
    return kOk;
  }
  row(out, "invariant", verdict.invariant ? "true" : "false");
  if (verdict.witness) {
    row(out, "witness", tuple(verdict.witness->rearrangement.values()) + " fails at car " +
                            std::to_string(verdict.witness->outcome.failure().first_failed_car));
  }
  return kOk;
}

int cmd_pi_invariant(const Args& a, std::ostream& out) {
  const Format format = parse_format(a.format, false);
  const CarLengths y(parse_positive_list(a.y));
  const PreferenceList x(parse_positive_list(a.x), y);
  const Rule rule = parse_rule(a.rule);
  std::vector<Permutation> perms;
  for (const auto& p : a.pis) perms.emplace_back(parse_positive_list(p));
  for (const auto& w : a.words) perms.push_back(Permutation::from_word(y.size(), parse_positive_list(w)));
  if (perms.empty()) throw UsageError("pi-invariant needs at least one --pi or --word");

  json results = json::array();
  bool all = true;
  for (const auto& pi : perms) {
    const bool parks = is_pi_invariant(y, x, pi, rule);
    all = all && parks;
    const std::vector<int> one_line(pi.one_line().begin(), pi.one_line().end());
    results.push_back(json{{"pi", one_line}, {"image", pi.apply(x).vec()}, {"parks", parks}});
  }
  if (format == Format::Json) {
    out << json_text(json{{"y", y.vec()}, {"x", x.vec()}, {"rule", std::string(to_string(rule))},
                          {"invariant", all}, {"results", results}});
    return kOk;
  }
  for (const auto& r : results) {
    out << "pi " << bracket(r["pi"].get<std::vector<int>>()) << " -> "
        << tuple(r["image"].get<std::vector<int>>()) << " "
        << (r["parks"].get<bool>() ? "parks" : "fails") << "\n";
  }
  row(out, "invariant", all ? "true" : "false");
  return kOk;
}

// --- mininv / count ----------------------------------------------------------

int cmd_mininv(const Args& a, std::ostream& out, std::ostream& err) {
  const Format format = parse_format(a.format, false);
  const CarLengths y(parse_positive_list(a.y));
  bool value = false;
  std::optional<int> probe;
  if (a.method == "oracle") {
    probe = invariant_probe(y);
    value = !probe;
  } else if (a.method == "alternate") {
    probe = invariant_probe_alternate(y);
    value = !probe;
  } else if (a.method == "formula") {
    switch (y.size()) {
      case 2: value = mi_pair(y); break;
      case 3: value = mi_triple(y); break;
      case 4:
        err << "warning: the four-car formula is a conjecture, not a theorem\n";
        value = mi_quadruple_conjecture(y);
        break;
      default:
        throw ValidationError("--method formula needs 2, 3 or 4 cars, got " +
                              std::to_string(y.size()));
    }
  } else {
    throw UsageError("unknown --method '" + a.method + "' (oracle|alternate|formula)");
  }
  if (format == Format::Json) {
    out << json_text(json{{"y", y.vec()}, {"method", a.method}, {"minimally_invariant", value},
                          {"probe", probe ? json(*probe) : json(nullptr)}});
  } else {
    row(out, "minimally invariant", value ? "true" : "false");
    if (probe) row(out, "probe w", std::to_string(*probe));
  }
  return kOk;
}

int cmd_count(const Args& a, std::ostream& out) {
  const Format format = parse_format(a.format, false);
  auto arity = [&]() -> unsigned {
    if (a.n) return a.n;
    if (!a.y.empty()) return static_cast<unsigned>(parse_positive_list(a.y).size());
    throw ValidationError("--formula " + a.formula + " needs --n or --y");
  };
  CountFormulaResult result;
  if (a.formula == "eq2") {
    if (a.y.empty()) throw ValidationError("--formula eq2 needs --y");
    result = ps_count_formula(CarLengths(parse_positive_list(a.y)));
  } else if (a.formula == "pf") {
    result = {pf_count(arity()), FormulaId::Eq1};
  } else if (a.formula == "catalan") {
    result = {catalan(arity()), FormulaId::Catalan};
  } else if (a.formula == "fuss-catalan") {
    result = {fuss_catalan(a.k, arity()), FormulaId::FussCatalan};
  } else if (a.formula == "constant-inv") {
    result = {pf_count(arity()), FormulaId::ConstantInvCount};
  } else {
    throw UsageError("unknown --formula '" + a.formula +
                     "' (eq2|pf|catalan|fuss-catalan|constant-inv)");
  }
  if (format == Format::Json) {
    out << json_text(json{{"formula", std::string(to_string(result.formula_id))},
                          {"value", result.value.str()}});
  } else {
    row(out, std::string(to_string(result.formula_id)), result.value.str());
  }
  return kOk;
}

// --- enumerate ---------------------------------------------------------------

int cmd_enumerate(const Args& a, std::ostream& out) {
  const Format format = parse_format(a.format, true);
  const CarLengths y(parse_positive_list(a.y));
  const Rule rule = parse_rule(a.rule);
  const Filter filter = parse_filter(a.filter);
  const auto result =
      enumerate(y, rule, filter, EnumerateOptions{resolve_budget(a.budget), a.jobs});
  if (format == Format::Json) {
    out << enumeration_to_ndjson(result);
  } else if (format == Format::Csv) {
    out << "rule,filter,y,x\n";
    auto spaced = [](std::span<const int> v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
      return s;
    };
    for (const auto& x : result.items) {
      out << to_string(rule) << ',' << to_string(filter) << ',' << spaced(y.values()) << ','
          << spaced(x.values()) << "\n";
    }
  } else {
    for (const auto& x : result.items) out << tuple(x.values()) << "\n";
    out << "count " << result.count() << "\n";
  }
  return kOk;
}

// --- verify / conjecture4 / replay -------------------------------------------

void print_sweep(const SweepReport& report, Format format, bool timing, std::ostream& out) {
  if (format == Format::Json) {
    out << sweep_to_ndjson(report, timing);
    return;
  }
  if (format == Format::Csv) {
    out << "check,kind,instances_checked,agreements,disagreements\n";
    for (const auto& c : report.checks) {
      out << to_string(c.check) << ',' << (c.conjecture() ? "conjecture" : "theorem") << ','
          << c.instances_checked << ',' << c.agreements << ',' << c.disagreements.size() << "\n";
    }
    return;
  }
  out << "sweep n=" << report.spec.arity << " range [" << report.spec.lo << ","
      << report.spec.hi << "]\n";
  out << std::left << std::setw(22) << "check" << std::setw(12) << "kind" << std::setw(11)
      << "instances" << std::setw(8) << "agree" << "disagree\n";
  for (const auto& c : report.checks) {
    out << std::left << std::setw(22) << to_string(c.check) << std::setw(12)
        << (c.conjecture() ? "conjecture" : "theorem") << std::setw(11) << c.instances_checked
        << std::setw(8) << c.agreements << c.disagreements.size() << "\n";
    for (const auto& d : c.disagreements) {
      out << "  y=" << tuple(d.y);
      if (!d.witness_kind.empty()) out << " " << d.witness_kind << "=" << tuple(d.witness);
      out << " closed form: " << d.closed_form_value << " | oracle: " << d.oracle_value << "\n";
    }
  }
  if (timing) out << "wall time " << report.wall_time_seconds << " s\n";
}

std::vector<CheckId> parse_checks(const std::string& text, std::size_t arity) {
  std::vector<CheckId> out;
  if (text.empty()) {
    // Default: every check that accepts this arity.
    for (CheckId id : all_checks()) {
      try {
        validate(SweepSpec{arity, 1, 1, {id}});
        out.push_back(id);
      } catch (const ValidationError&) {
      }
    }
    return out;
  }
  std::istringstream in(text);
  std::string name;
  while (std::getline(in, name, ',')) out.push_back(parse_check(name));
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
  }
}

int cmd_verify(const Args& a, std::ostream& out) {
  const Format format = parse_format(a.format, true);
  SweepSpec spec;
  if (!a.spec_file.empty()) {
    if (a.n || !a.range.empty() || !a.checks.empty()) {
      throw UsageError("--spec-file cannot be combined with --n, --range or --checks");
    }
    spec = sweep_spec_from_json(read_json_file(a.spec_file));
  } else {
    if (!a.n || a.range.empty()) throw UsageError("verify needs --spec-file, or --n and --range");
    const auto [lo, hi] = parse_range(a.range);
    spec = SweepSpec{a.n, lo, hi, parse_checks(a.checks, a.n)};
  }
  const auto report = run_sweep(
      spec, SweepOptions{resolve_budget(a.budget), a.jobs});
  print_sweep(report, format, a.timing, out);
  return report.theorem_failure() ? kTheoremRegression : kOk;
}

int cmd_conjecture4(const Args& a, std::ostream& out, std::ostream& err) {
  const Format format = parse_format(a.format, true);
  const auto [lo, hi] = parse_range(a.range.empty() ? "1,4" : a.range);
  const SweepSpec spec{4, lo, hi, {CheckId::Conjecture4Audit}};
  const auto report = run_sweep(
      spec, SweepOptions{resolve_budget(a.budget), a.jobs});
  const auto& c = report.checks.front();
  err << "conjecture audit: " << c.disagreements.size() << " finding(s) in "
      << c.instances_checked << " instances (findings are not failures)\n";
  print_sweep(report, format, a.timing, out);
  return kOk;
}

int cmd_replay(const Args& a, std::ostream& out) {
  const Format format = parse_format(a.format, false);
  const auto entry = replay_entry_from_json(read_json_file(a.entry_file), a.index);
  const auto trace = replay_witness(entry);
  if (format == Format::Json) {
    out << json_text(trace_to_json(trace));
  } else {
    out << trace.render();
  }
  return kOk;
}

}  // namespace

std::uint64_t resolve_budget(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv(kBudgetEnv); env && *env) {
    std::uint64_t value = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw UsageError(std::string(kBudgetEnv) + " must be a non-negative integer, got '" +
                       std::string(text) + "'");
    }
    return value;
  }
  return kDefaultBudget;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"parking_lab: parking assortments and sequences workbench", "parking_lab"};
  app.footer(kExitCodes);
  app.require_subcommand(1);
  Args a;

  auto lengths = [&](CLI::App* s) {
    s->add_option("--y", a.y, "car lengths, comma-separated (e.g. 1,3,1)")->required();
  };
  auto prefs = [&](CLI::App* s) {
    s->add_option("--x", a.x, "preferences, comma-separated, each in [1, sum(y)]")->required();
  };
  auto rule = [&](CLI::App* s) {
    s->add_option("--rule", a.rule, "assortment|sequence")->capture_default_str();
  };
  auto format = [&](CLI::App* s) {
    s->add_option("--format", a.format, "table|json|csv")->capture_default_str();
  };
  std::vector<CLI::Option*> budget_opts;
  auto work = [&](CLI::App* s) {
    s->add_option("--jobs", a.jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    budget_opts.push_back(s->add_option(
        "--budget", a.budget_raw, "max parking experiments (default: $PARKING_LAB_BUDGET or 1e8)"));
  };

  auto* park_cmd = app.add_subcommand("park", "run one parking experiment");
  lengths(park_cmd); prefs(park_cmd); rule(park_cmd); format(park_cmd);
  park_cmd->add_flag("--trace", a.trace, "print every car's placement");

  auto* decide_cmd = app.add_subcommand("decide", "is x a parking assortment/sequence for y");
  lengths(decide_cmd); prefs(decide_cmd); rule(decide_cmd); format(decide_cmd);

  auto* inv_cmd = app.add_subcommand("invariant", "does every rearrangement of x park");
  lengths(inv_cmd); prefs(inv_cmd); rule(inv_cmd); format(inv_cmd);

  auto* pi_cmd = app.add_subcommand("pi-invariant", "does pi(x) park for the given permutations");
  lengths(pi_cmd); prefs(pi_cmd); rule(pi_cmd); format(pi_cmd);
  pi_cmd->add_option("--pi", a.pis, "permutation in one-line notation, e.g. 2,1,3 (repeatable)");
  pi_cmd->add_option("--word", a.words,
                     "product of adjacent transpositions, e.g. 1,2 for s_1 s_2 (repeatable)");

  auto* mi_cmd = app.add_subcommand("mininv", "is y minimally invariant");
  lengths(mi_cmd); format(mi_cmd);
  mi_cmd->add_option("--method", a.method, "oracle|alternate|formula")->capture_default_str();

  auto* enum_cmd = app.add_subcommand("enumerate", "list every preference list passing a filter");
  lengths(enum_cmd); rule(enum_cmd); format(enum_cmd); work(enum_cmd);
  enum_cmd->add_option("--filter", a.filter, "all|invariant|nondecreasing|nondecreasing-invariant")
      ->capture_default_str();

  auto* count_cmd = app.add_subcommand("count", "evaluate a counting formula");
  format(count_cmd);
  count_cmd->add_option("--formula", a.formula, "eq2|pf|catalan|fuss-catalan|constant-inv")
      ->required();
  count_cmd->add_option("--y", a.y, "car lengths (eq2; others read n from it)");
  count_cmd->add_option("--n", a.n, "number of cars")->check(CLI::PositiveNumber);
  count_cmd->add_option("--k", a.k, "Fuss-Catalan parameter")->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify", "sweep closed forms against brute force");
  format(verify_cmd); work(verify_cmd);
  verify_cmd->add_option("--spec-file", a.spec_file, "JSON {arity, lo, hi, checks}");
  verify_cmd->add_option("--n", a.n, "arity of y")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--range", a.range, "lo,hi bounds for every entry of y");
  verify_cmd->add_option("--checks", a.checks, "comma-separated check ids (default: all that fit n)");
  verify_cmd->add_flag("--timing", a.timing, "append wall time to the report");

  auto* c4_cmd = app.add_subcommand("conjecture4", "audit the four-car formula over [lo,hi]^4");
  format(c4_cmd); work(c4_cmd);
  c4_cmd->add_option("--range", a.range, "lo,hi (default 1,4)");
  c4_cmd->add_flag("--timing", a.timing, "append wall time to the report");

  auto* replay_cmd = app.add_subcommand("replay", "re-run a recorded witness with full traces");
  format(replay_cmd);
  replay_cmd->add_option("--entry-file", a.entry_file, "JSON entry or sweep report line")
      ->required();
  replay_cmd->add_option("--index", a.index, "disagreement index within a report line")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  for (const auto* opt : budget_opts) {
    if (opt->count() > 0) a.budget = a.budget_raw;
  }

  try {
    if (park_cmd->parsed()) return cmd_park(a, out);
    if (decide_cmd->parsed()) return cmd_decide(a, out);
    if (inv_cmd->parsed()) return cmd_invariant(a, out);
    if (pi_cmd->parsed()) return cmd_pi_invariant(a, out);
    if (mi_cmd->parsed()) return cmd_mininv(a, out, err);
    if (enum_cmd->parsed()) return cmd_enumerate(a, out);
    if (count_cmd->parsed()) return cmd_count(a, out);
    if (verify_cmd->parsed()) return cmd_verify(a, out);
    if (c4_cmd->parsed()) return cmd_conjecture4(a, out, err);
    if (replay_cmd->parsed()) return cmd_replay(a, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const StaleWitness& e) {
    err << "error: " << e.what() << "\n";
    return kBadWitness;
  } catch (const NoWitness& e) {
    err << "error: " << e.what() << "\n";
    return kBadWitness;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  err << "error: no subcommand\n";
  return kUsage;
}

}  // namespace parking::cli
