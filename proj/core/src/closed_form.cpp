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

#include "parking/closed_form.hpp"

#include <algorithm>
#include <array>

#include "parking/sim.hpp"

namespace parking {

namespace {

void require_arity(const CarLengths& y, std::size_t n, std::string_view what) {
  if (y.size() != n) {
    throw ValidationError(std::string(what) + " requires exactly " +
                          std::to_string(n) + " cars, got " +
                          format_tuple(y.values()));
  }
}

}  // namespace

bool nondecreasing_member(const CarLengths& y, const PreferenceList& x, Rule) {
  if (x.size() != y.size()) throw ValidationError("arity mismatch");
  if (!x.is_nondecreasing()) {
    throw ValidationError("expected a nondecreasing list, got " +
                          format_tuple(x.values()));
  }
  long long prefix = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 1 + prefix) return false;
    prefix += y[i];
  }
  return true;
}

bool constant_invariant(int c, std::size_t n, const PreferenceList& x) {
  if (c < 1) throw ValidationError("car length must be positive");
  if (x.size() != n) throw ValidationError("arity mismatch");
  for (int v : x.values()) {
    if ((v - 1) % c != 0) return false;
  }
  for (std::size_t j = 1; j <= n; ++j) {
    const long long bound = static_cast<long long>(c) * static_cast<long long>(j);
    const auto at_most = std::count_if(x.values().begin(), x.values().end(),
                                       [bound](int v) { return v <= bound; });
    if (static_cast<std::size_t>(at_most) < j) return false;
  }
  return true;
}

PreferenceList phi(const PreferenceList& x, int c) {
  if (c < 1) throw ValidationError("car length must be positive");
  if (!x.is_nondecreasing()) throw ValidationError("phi expects a nondecreasing list");
  std::vector<int> out;
  out.reserve(x.size());
  for (int v : x.values()) {
    if ((v - 1) % c != 0) {
      throw ValidationError("phi: entry " + std::to_string(v) +
                            " is not 1 mod " + std::to_string(c));
    }
    out.push_back(1 + (v - 1) / c);
  }
  return PreferenceList(std::move(out));
}

PreferenceList psi(const PreferenceList& z, int c) {
  if (c < 1) throw ValidationError("car length must be positive");
  if (!z.is_nondecreasing()) throw ValidationError("psi expects a nondecreasing list");
  std::vector<int> out;
  out.reserve(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] > static_cast<int>(i) + 1) {
      throw ValidationError("psi: entry " + std::to_string(i + 1) + " of " +
                            format_tuple(z.values()) + " exceeds its index");
    }
    out.push_back(1 + (z[i] - 1) * c);
  }
  return PreferenceList(std::move(out));
}

std::optional<int> invariant_probe(const CarLengths& y) {
  const std::size_t n = y.size();
  const int m = y.street_length();
  Street street(m);
  std::vector<int> prefs(n, 1);
  for (int w = 2; w <= m; ++w) {
    bool all_park = true;
    for (std::size_t i = 0; i < n && all_park; ++i) {
      std::fill(prefs.begin(), prefs.end(), 1);
      prefs[i] = w;
      all_park = street.parks_all(y.values(), prefs, Rule::Assortment);
    }
    if (all_park) return w;
  }
  return std::nullopt;
}

bool is_minimally_invariant(const CarLengths& y) {
  return !invariant_probe(y).has_value();
}

namespace {

// Car i (0-based) prefers w, everyone else prefers spot 1. Cars before i fill
// [1, prefix]; if w lies past that they leave a gap which later cars enter in
// arrival order whenever they fit what remains of it. Parking succeeds iff the
// gap closes exactly.
bool placement_parks(std::span<const int> y, std::size_t i, int w, long long prefix) {
  long long gap = static_cast<long long>(w) - 1 - prefix;
  if (gap <= 0) return true;
  for (std::size_t k = i + 1; k < y.size() && gap > 0; ++k) {
    if (y[k] <= gap) gap -= y[k];
  }
  return gap == 0;
}

}  // namespace

std::optional<int> invariant_probe_alternate(const CarLengths& y) {
  const auto lengths = y.values();
  const int m = y.street_length();
  for (int w = 2; w <= m; ++w) {
    bool some_placement_fails = false;
    long long prefix = 0;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      if (!placement_parks(lengths, i, w, prefix)) {
        some_placement_fails = true;
        break;
      }
      prefix += lengths[i];
    }
    if (!some_placement_fails) return w;
  }
  return std::nullopt;
}

bool is_minimally_invariant_alternate(const CarLengths& y) {
  return !invariant_probe_alternate(y).has_value();
}

bool mi_pair(const CarLengths& y) {
  require_arity(y, 2, "mi_pair");
  return y[0] < y[1];
}

bool mi_triple(const CarLengths& y) {
  require_arity(y, 3, "mi_triple");
  return y[0] < y[1] && y[0] < y[2] && y[0] + y[2] != y[1];
}

bool mi_quadruple_conjecture(const CarLengths& y) {
  require_arity(y, 4, "mi_quadruple_conjecture");
  const int y1 = y[0], y2 = y[1], y3 = y[2], y4 = y[3];
  return (y1 < y2) && (y1 < y3) && (y1 < y4) && (y2 != y1 + y3) &&
         (y2 != y1 + y3 + y4) &&
         ((y2 < y1 + y3) || (y3 != y1 + y4)) &&
         ((y2 > y1 + y3) ||
          ((y2 != y1 + y4) && ((y2 < y3) || (y3 != y1 + y4))));
}

std::vector<PreferenceList> inv_pair_set(const CarLengths& y) {
  require_arity(y, 2, "inv_pair_set");
  if (y[0] < y[1]) return {PreferenceList{1, 1}};
  const int w = y[1] + 1;
  return {PreferenceList{1, 1}, PreferenceList{1, w}, PreferenceList{w, 1}};
}

namespace {

struct RowInfo {
  TripleRow row;
  std::string_view id;
  std::string_view label;
};

constexpr std::array<RowInfo, kTripleRowCount> kRows{{
    {TripleRow::AAA, "AAA", "(a,a,a)"},
    {TripleRow::AAB, "AAB", "(a,a,b)"},
    {TripleRow::ABA_BEq2A, "ABA_BEq2A", "(a,b,a), b=2a"},
    {TripleRow::ABA_BNe2A, "ABA_BNe2A", "(a,b,a), b!=2a"},
    {TripleRow::BAA_2ALeB, "BAA_2ALeB", "(b,a,a), 2a<=b"},
    {TripleRow::BAA_2AGtB, "BAA_2AGtB", "(b,a,a), 2a>b"},
    {TripleRow::ABB, "ABB", "(a,b,b)"},
    {TripleRow::BAB, "BAB", "(b,a,b)"},
    {TripleRow::BBA, "BBA", "(b,b,a)"},
    {TripleRow::ABC, "ABC", "(a,b,c)"},
    {TripleRow::ACB_SumEqC, "ACB_SumEqC", "(a,c,b), a+b=c"},
    {TripleRow::ACB_SumNeC, "ACB_SumNeC", "(a,c,b), a+b!=c"},
    {TripleRow::BAC, "BAC", "(b,a,c)"},
    {TripleRow::BCA_SumEqC, "BCA_SumEqC", "(b,c,a), a+b=c"},
    {TripleRow::BCA_SumNeC, "BCA_SumNeC", "(b,c,a), a+b!=c"},
    {TripleRow::CAB_SumLeC, "CAB_SumLeC", "(c,a,b), a+b<=c"},
    {TripleRow::CAB_SumGtC, "CAB_SumGtC", "(c,a,b), a+b>c"},
    {TripleRow::CBA_SumLeC, "CBA_SumLeC", "(c,b,a), a+b<=c"},
    {TripleRow::CBA_SumGtC, "CBA_SumGtC", "(c,b,a), a+b>c"},
}};

const RowInfo& info(TripleRow row) {
  return kRows[static_cast<std::size_t>(row)];
}

}  // namespace

std::string_view row_label(TripleRow row) { return info(row).label; }
std::string_view row_id(TripleRow row) { return info(row).id; }

TriplePattern classify_triple(const CarLengths& y) {
  require_arity(y, 3, "classify_triple");
  std::vector<int> distinct(y.values().begin(), y.values().end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  // Shape string over {A, B, C}: rank of each entry among the distinct values.
  std::string shape;
  for (int v : y.values()) {
    const auto rank = std::lower_bound(distinct.begin(), distinct.end(), v) - distinct.begin();
    shape += static_cast<char>('A' + rank);
  }

  if (distinct.size() == 1) return {TripleRow::AAA, distinct[0]};

  if (distinct.size() == 2) {
    const int a = distinct[0], b = distinct[1];
    TripleRow row;
    if (shape == "AAB") row = TripleRow::AAB;
    else if (shape == "ABA") row = b == 2 * a ? TripleRow::ABA_BEq2A : TripleRow::ABA_BNe2A;
    else if (shape == "BAA") row = 2 * a <= b ? TripleRow::BAA_2ALeB : TripleRow::BAA_2AGtB;
    else if (shape == "ABB") row = TripleRow::ABB;
    else if (shape == "BAB") row = TripleRow::BAB;
    else row = TripleRow::BBA;
    return {row, a, b};
  }

  const int a = distinct[0], b = distinct[1], c = distinct[2];
  TripleRow row;
  if (shape == "ABC") row = TripleRow::ABC;
  else if (shape == "ACB") row = a + b == c ? TripleRow::ACB_SumEqC : TripleRow::ACB_SumNeC;
  else if (shape == "BAC") row = TripleRow::BAC;
  else if (shape == "BCA") row = a + b == c ? TripleRow::BCA_SumEqC : TripleRow::BCA_SumNeC;
  else if (shape == "CAB") row = a + b <= c ? TripleRow::CAB_SumLeC : TripleRow::CAB_SumGtC;
  else row = a + b <= c ? TripleRow::CBA_SumLeC : TripleRow::CBA_SumGtC;
  return {row, a, b, c};
}

std::vector<PreferenceList> inv_triple_set(const CarLengths& y) {
  const TriplePattern p = classify_triple(y);
  const int a = p.a, b = p.b;
  auto tail = [](std::initializer_list<int> lasts) {
    std::vector<PreferenceList> out{PreferenceList{1, 1, 1}};
    for (int w : lasts) out.push_back(PreferenceList{1, 1, w});
    return out;
  };
  std::vector<PreferenceList> out;
  switch (p.row) {
    case TripleRow::AAA:
    case TripleRow::BAA_2ALeB:
      out = tail({1 + a, 1 + 2 * a});
      out.push_back(PreferenceList{1, 1 + a, 1 + a});
      out.push_back(PreferenceList{1, 1 + a, 1 + 2 * a});
      break;
    case TripleRow::AAB:
    case TripleRow::ABA_BNe2A:
    case TripleRow::BAB:
    case TripleRow::BAC:
    case TripleRow::BCA_SumNeC:
    case TripleRow::CAB_SumGtC:
      out = tail({1 + a});
      break;
    case TripleRow::ABA_BEq2A:
      out = tail({1 + a, 1 + 2 * a});
      break;
    case TripleRow::BAA_2AGtB:
      out = tail({1 + a});
      out.push_back(PreferenceList{1, 1 + a, 1 + a});
      break;
    case TripleRow::ABB:
    case TripleRow::ABC:
    case TripleRow::ACB_SumNeC:
      out = tail({});
      break;
    case TripleRow::BBA:
    case TripleRow::CBA_SumLeC:
      out = tail({1 + a, 1 + b, 1 + a + b});
      break;
    case TripleRow::ACB_SumEqC:
      out = tail({1 + a + b});
      break;
    case TripleRow::BCA_SumEqC:
    case TripleRow::CAB_SumLeC:
      out = tail({1 + a, 1 + a + b});
      break;
    case TripleRow::CBA_SumGtC:
      out = tail({1 + a, 1 + b});
      break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string_view to_string(FormulaId id) {
  switch (id) {
    case FormulaId::Eq1: return "eq1";
    case FormulaId::Eq2: return "eq2";
    case FormulaId::Catalan: return "catalan";
    case FormulaId::FussCatalan: return "fuss-catalan";
    case FormulaId::ConstantInvCount: return "constant-inv";
  }
  return "?";
}

CountFormulaResult ps_count_formula(const CarLengths& y) {
  const std::size_t n = y.size();
  BigInt product = 1;
  BigInt prefix = 0;
  for (std::size_t i = 1; i < n; ++i) {
    prefix += y[i - 1];
    product *= prefix + static_cast<unsigned>(n - i + 1);
  }
  return {product, FormulaId::Eq2};
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (unsigned i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigInt catalan(unsigned n) { return binomial(2 * n, n) / (n + 1); }

BigInt fuss_catalan(unsigned k, unsigned n) {
  if (k < 1) throw ValidationError("fuss_catalan requires k >= 1");
  return binomial(k * n + n, n) / (static_cast<BigInt>(k) * n + 1);
}

BigInt pf_count(unsigned n) {
  if (n < 1) throw ValidationError("pf_count requires n >= 1");
  return boost::multiprecision::pow(BigInt(n + 1), n - 1);
}

}  // namespace parking
