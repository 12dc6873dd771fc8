/*
   Copyright 2026 The knotslice Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "knotslice/knotslice.hpp"

using namespace knotslice;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

const std::vector<TableCheck>& table_checks() {
  static const std::vector<TableCheck> checks = [] {
    std::vector<TableCheck> v;
    for (int n : {11, 17, 23}) v.push_back(verify_table(n));
    return v;
  }();
  return checks;
}

std::string tag(const ObstructionReport& r) { return std::to_string(r.n) + (r.sign > 0 ? "+" : "-"); }

Outcome degree_sequences() {
  Outcome o;
  for (const auto& c : table_checks())
    for (const auto& r : c.reports) o.require(r.degree_sequence == golden_row(r.n, r.sign)->degree_sequence, tag(r));
  return o;
}

Outcome factor_tables() {
  Outcome o;
  for (const auto& c : table_checks())
    for (const auto& r : c.reports) {
      auto remaining = r.factors;
      const auto golden = golden_row(r.n, r.sign);
      for (const auto& desc : golden->factors_descending) {
        std::vector<std::uint64_t> asc(desc.rbegin(), desc.rend());
        auto it = std::find(remaining.begin(), remaining.end(), asc);
        o.require(it != remaining.end(), tag(r) + " factor of degree " + std::to_string(asc.size() - 1));
        if (it != remaining.end()) remaining.erase(it);
      }
    }
  return o;
}

Outcome degree_identity() {
  Outcome o;
  for (const auto& c : table_checks())
    for (const auto& r : c.reports)
      o.require(r.degree_check && r.total_degree == 2 * (r.n - 2) && r.target_degree == 2 * (r.n - 2), tag(r));
  return o;
}

Outcome norm_obstruction() {
  Outcome o;
  for (const auto& c : table_checks())
    for (const auto& r : c.reports) o.require(r.norm_obstructed, tag(r));
  for (int n : {11, 17, 23}) o.require(obstruct(n).verdict == "not slice", "verdict for n=" + std::to_string(n));
  return o;
}

Outcome alexander() {
  Outcome o;
  for (int n : {7, 11, 17, 23}) {
    const auto pn = p_n(n);
    o.require(alexander_polynomial(seifert_matrix(n)) == normalize_up_to_units(pn * pn), "n=" + std::to_string(n));
  }
  return o;
}

Outcome cover_groups() {
  Outcome o;
  for (int n : {11, 17, 23})
    o.require(cover_homology_snf(seifert_matrix(n), 3) == std::vector<Integer>(4, Integer(n)), "n=" + std::to_string(n));
  o.require(cover_homology_snf(seifert_matrix(2), 2) == std::vector<Integer>{5}, "figure-eight");
  return o;
}

Outcome linking() {
  Outcome o;
  for (int n : {11, 17, 23})
    o.require(equal_mod(cover_homology(n).linking, reference_linking_matrix(n), n), "n=" + std::to_string(n));
  return o;
}

Outcome metabolizer_structure() {
  Outcome o;
  for (int n : {11, 17, 23}) {
    const auto h = cover_homology(n);
    const auto mets = enumerate_metabolizers(h);
    const auto orbits = orbit_decomposition(mets, h.r_action);
    const auto ns = std::to_string(n);
    o.require(mets.size() == static_cast<std::size_t>(n + 1), "count n=" + ns);
    o.require(orbits.size() == 2 && orbits[0].size() == 1 && orbits[1].size() == static_cast<std::size_t>(n),
              "orbits n=" + ns);
    o.require(!orbits.empty() && orbits[0].front() == Submodule::P(1, 1, n), "fixed n=" + ns);
    o.require(h.lambda({0, 0, 1, 0}, {0, 0, 1, 0}) == 1 && !is_metabolizer(Submodule::prime(n), h), "P' n=" + ns);
  }
  return o;
}

Outcome properties() {
  Outcome o;
  // relators of phi_chi, exactly over Z[xi_n][t]
  for (int n : {11, 17, 23}) {
    const auto pres = wirtinger_of_closure(family_braid(n));
    for (int sign : {1, -1}) {
      const auto rep = twisted_rep(sign_character(n, sign), pres);
      o.require(pres.relators.size() == static_cast<std::size_t>(2 * n) && homomorphism_failures(rep, pres).empty(),
                "relators " + std::to_string(n));
    }
  }
  // involution
  const auto bl = blanchfield_entries(seifert_matrix(11));
  for (const auto& row : bl.c)
    for (const auto& e : row) o.require(e.involution().involution() == e, "involution");
  o.require(bl.is_hermitian(), "hermitian");
  // SNF chains
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix<Integer> m(5, 5, Integer(0));
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) m(i, j) = entry(rng);
    const auto d = smith_normal_form(m);
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
      if (d[i] != 0) o.require(d[i + 1] % d[i] == 0, "snf chain");
  }
  // factorization round trip
  for (const auto& c : table_checks())
    for (const auto& r : c.reports) {
      const PrimeField f(r.s);
      FpPoly prod = FpPoly::constant(f, 1);
      for (const auto& fac : r.factors) prod = prod * FpPoly(f, fac);
      o.require(prod == twisted_polynomial(r.n, sign_character(r.n, r.sign), r.s, r.theta).polynomial, "round trip");
    }
  // deletion independence
  const auto base = twisted_polynomial(11, sign_character(11, 1), 23, 2).polynomial;
  for (int k : {3, 10, 17}) {
    TwistedOptions opts;
    opts.skip_relator = k;
    opts.skip_generator = (k * 7) % 22;
    o.require(twisted_polynomial(11, sign_character(11, 1), 23, 2, opts).polynomial == base, "deletion");
  }
  // r_* has order n and preserves lambda
  for (int n : {11, 17, 23}) {
    const auto h = cover_homology(n);
    o.require(equal_mod(power(h.r_action, static_cast<unsigned long>(n), n), identity_cover(), n), "r^n");
    o.require(equal_mod(multiply(multiply(transpose(h.r_action), h.linking, n), h.r_action, n), h.linking, n),
              "r preserves lambda");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"reference degree sequences", degree_sequences},
      {"factor tables", factor_tables},
      {"degree identity 2(n-2)", degree_identity},
      {"norm obstruction and verdict", norm_obstruction},
      {"Alexander polynomial p_n^2", alexander},
      {"cover homology", cover_groups},
      {"linking form", linking},
      {"metabolizer structure", metabolizer_structure},
      {"property suites", properties},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " (" << ms << " ms)";
    if (!o.ok) std::cout << " [" << o.detail << "]";
    std::cout << "\n";
    failures += !o.ok;
  }
  return failures ? 1 : 0;
}
