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


#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "knotslice/knotslice.hpp"

using namespace knotslice;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitError = 2;

std::vector<int> parse_ns(const std::vector<std::string>& raw) {
  std::vector<int> ns;
  for (const auto& s : raw) {
    if (s == "all") {
      for (int n : {11, 17, 23}) ns.push_back(n);
      continue;
    }
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size()) throw domain_error("bad --n value '" + s + "'");
    ns.push_back(v);
  }
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  return ns;
}

std::string degrees_str(const std::vector<int>& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) out += (i ? "," : "") + std::to_string(d[i]);
  return out + ")";
}

std::string fraction(long long num, long long n) {
  const long long c = centered(num, n);
  return c == 0 ? "0" : std::to_string(c) + "/" + std::to_string(n);
}

void print_report(const ObstructionReport& r, const std::string& label = {}) {
  std::cout << "  chi_" << (r.sign > 0 ? '+' : '-') << label << "  s=" << r.s << " theta=" << r.theta
            << "  degrees " << degrees_str(r.degree_sequence) << "  deg " << r.total_degree << "/" << r.target_degree
            << (r.degree_check ? "" : " (degree drop)") << "  " << (r.norm_obstructed ? "not a norm" : "norm possible")
            << "\n";
}

void print_diff(int n, const std::vector<std::string>& diffs) {
  nlohmann::json j{{"n", n}, {"status", "mismatch"}, {"differences", diffs}};
  std::cerr << j.dump(2) << "\n";
}

int run_obstruct(const std::vector<int>& ns, const ObstructOptions& opts, bool json, bool csv) {
  std::vector<ObstructionReport> all;
  int code = 0;
  for (int n : ns) {
    const auto out = obstruct(n, opts);
    if (!out.verified_by_reference)
      std::cerr << "warning: n=" << n << " with these (s, theta) is not covered by the reference tables; unverified\n";
    // representative runs with the published parameters are checked against the tables
    if (out.verified_by_reference && !opts.exhaustive) {
      std::vector<std::string> diffs;
      for (const auto& r : out.reports)
        for (auto& d : compare_with_golden(r, *golden_row(n, r.sign))) diffs.push_back(std::move(d));
      if (!diffs.empty()) {
        print_diff(n, diffs);
        code = kExitMismatch;
      }
    }
    if (!json && !csv) {
      std::cout << "K_" << n << ": " << out.verdict << "\n";
      for (std::size_t i = 0; i < out.reports.size(); ++i)
        print_report(out.reports[i], opts.exhaustive ? " [" + out.metabolizers[i].str() + "]" : "");
      if (out.metabolizers_classified) {
        const auto& m = out.reports.front().metabolizer_summary;
        std::cout << "  metabolizers " << m.count << ", orbit sizes";
        for (auto s : m.orbit_sizes) std::cout << ' ' << s;
        std::cout << "\n";
      } else {
        std::cout << "  no metabolizer classification for this n; sign characters only\n";
      }
      if (opts.exhaustive && !out.orbit_mismatches.empty()) {
        std::cout << "  " << out.orbit_mismatches.size() << " metabolizer(s) in the orbit of P_- give a different polynomial:";
        for (const auto& p : out.orbit_mismatches) std::cout << ' ' << p.str();
        std::cout << "\n";
      }
    }
    all.insert(all.end(), out.reports.begin(), out.reports.end());
  }
  if (json) std::cout << (ns.size() == 1 && all.size() == 1 ? nlohmann::json(all.front()) : nlohmann::json(all)).dump(2) << "\n";
  if (csv) std::cout << to_csv(all);
  return code;
}

int run_verify(const std::vector<int>& ns, bool json, bool csv) {
  std::vector<ObstructionReport> all;
  int code = 0;
  for (int n : ns) {
    const auto check = verify_table(n);
    if (!check.ok()) {
      print_diff(n, check.differences);
      code = kExitMismatch;
    }
    if (!json && !csv) {
      std::cout << "K_" << n << ": " << (check.ok() ? "matches" : "MISMATCH") << "\n";
      for (const auto& r : check.reports) print_report(r);
    }
    all.insert(all.end(), check.reports.begin(), check.reports.end());
  }
  if (json) std::cout << nlohmann::json(all).dump(2) << "\n";
  if (csv) std::cout << to_csv(all);
  return code;
}

int run_homology(int n, int q) {
  const auto sd = seifert_matrix(n);
  const auto delta = alexander_polynomial(sd);
  const auto factors = cover_homology_snf(sd, q);
  std::cout << "Delta = " << delta.str() << "\n";
  std::cout << "H_1(Sigma_" << q << ") = ";
  if (factors.empty()) std::cout << "0";
  for (std::size_t i = 0; i < factors.size(); ++i)
    std::cout << (i ? " + " : "") << (factors[i] == 0 ? std::string("Z") : "Z/" + factors[i].str());
  std::cout << "\norder " << branched_cover_order(delta, q).str() << "\n";
  return 0;
}

int run_linking(int n) {
  const auto h = cover_homology(n);
  const char* names[] = {"a", "ta", "b", "tb"};
  std::cout << "linking form on (a, ta, b, tb):\n";
  for (std::size_t i = 0; i < 4; ++i) {
    std::cout << "  " << names[i] << ":";
    for (std::size_t j = 0; j < 4; ++j) std::cout << ' ' << fraction(h.linking[i][j], n);
    std::cout << "\n";
  }
  std::cout << "r_* (columns are images of a, ta, b, tb):\n";
  for (std::size_t i = 0; i < 4; ++i) {
    std::cout << " ";
    for (std::size_t j = 0; j < 4; ++j) std::cout << ' ' << centered(h.r_action[i][j], n);
    std::cout << "\n";
  }
  const bool ok = equal_mod(h.linking, reference_linking_matrix(n), n);
  std::cout << "reference matrix: " << (ok ? "match" : "differs") << "\n";
  return ok ? 0 : kExitMismatch;
}

int run_metabolizers(int n) {
  const auto h = cover_homology(n);
  const auto mets = enumerate_metabolizers(h);
  const auto orbits = orbit_decomposition(mets, h.r_action);
  std::cout << mets.size() << " invariant metabolizers\n";
  for (const auto& o : orbits) {
    std::cout << "  orbit of size " << o.size() << ":";
    for (const auto& p : o) std::cout << ' ' << p.str();
    std::cout << "\n";
  }
  const auto pp = Submodule::prime(n);
  std::cout << "  " << pp.str() << " rejected: lambda(b, b) = " << fraction(h.lambda({0, 0, 1, 0}, {0, 0, 1, 0}), n)
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knotslice: twisted Alexander slice obstructions for the closures of (s1 s2^-1)^n"};
  app.require_subcommand(1);

  std::vector<std::string> n_raw;
  std::optional<std::uint64_t> s, theta;
  bool json = false, csv = false, exhaustive = false;
  int single_n = 11, q = 3;

  auto* ob = app.add_subcommand("obstruct", "run the obstruction for K_n");
  ob->add_option("--n", n_raw, "n (repeatable, or 'all')")->required();
  ob->add_option("--s", s, "prime s with n | s - 1");
  ob->add_option("--theta", theta, "primitive n-th root of unity mod s");
  ob->add_flag("--json", json, "print ObstructionReport JSON");
  ob->add_flag("--csv", csv, "print degree sequences as CSV");
  ob->add_flag("--exhaustive", exhaustive, "one polynomial per metabolizer instead of per orbit");

  auto* vt = app.add_subcommand("verify-table", "compare against the reference factor tables");
  vt->add_option("--n", n_raw, "11, 17, 23 or all")->default_str("all");
  vt->add_flag("--json", json, "print reports as JSON");
  vt->add_flag("--csv", csv, "print degree sequences as CSV");

  auto* ho = app.add_subcommand("homology", "H_1 of the q-fold branched cover");
  ho->add_option("--n", single_n)->required();
  ho->add_option("--q", q)->default_val(3);

  auto* li = app.add_subcommand("linking", "linking form and r_* on H_1 of the 3-fold cover");
  li->add_option("--n", single_n)->required();

  auto* me = app.add_subcommand("metabolizers", "invariant metabolizers and their r_* orbits");
  me->add_option("--n", single_n)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ob) {
      if (theta && !s) throw domain_error("--theta needs --s");
      return run_obstruct(parse_ns(n_raw), ObstructOptions{s, theta, exhaustive}, json, csv);
    }
    if (*vt) return run_verify(parse_ns(n_raw.empty() ? std::vector<std::string>{"all"} : n_raw), json, csv);
    if (*ho) return run_homology(single_n, q);
    if (*li) return run_linking(single_n);
    if (*me) return run_metabolizers(single_n);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return 0;
}
