/* Copyright 2026 The dhseq Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "dhseq/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "dhseq/cyclofield.hpp"
#include "dhseq/cyclotomy.hpp"
#include "dhseq/sequence.hpp"

namespace dhseq {

Suite parse_suite(const std::string& name) {
  if (name == "cyclotomy") return Suite::Cyclotomy;
  if (name == "gauss") return Suite::Gauss;
  if (name == "adic") return Suite::Adic;
  if (name == "fcsr") return Suite::Fcsr;
  if (name == "all") return Suite::All;
  throw std::invalid_argument("unknown suite '" + name + "'");
}

const char* to_string(Suite s) {
  switch (s) {
    case Suite::Cyclotomy: return "cyclotomy";
    case Suite::Gauss: return "gauss";
    case Suite::Adic: return "adic";
    case Suite::Fcsr: return "fcsr";
    case Suite::All: return "all";
  }
  return "all";
}

Report verify_fcsr(const Params& params, std::uint64_t cap) {
  Report r("fcsr");
  if (params.N() > cap) {
    r.skip("fcsr_cross_check",
           "N = " + std::to_string(params.N()) + " exceeds FCSR cap " + std::to_string(cap));
    return r;
  }
  const BinarySeq seq = generate(ClassTable(params));
  const auto prefix = periodic_prefix(seq, 2 * seq.size() + 4);
  const RationalApprox approx = rational_approximation(prefix);
  const ComplexityReport c = two_adic_complexity(seq);
  BigInt reduced;
  mpz_divexact(reduced.get_mpz_t(), c.modulus.get_mpz_t(), c.gcd.get_mpz_t());
  r.add("prefix_congruence", satisfies_prefix(approx, prefix));
  r.add("denominator_equals_reduced_modulus", approx.q == reduced,
        "q = " + approx.q.get_str() + ", (2^N-1)/gcd = " + reduced.get_str());
  r.add("fcsr_cross_check", cross_check(seq, cap));
  return r;
}

namespace {

Report gauss_suite(const ClassTable& table, const Caps& caps) {
  Report r = verify_gauss_theorems(table);
  if (table.N() <= caps.spectral) {
    r.append(verify_spectral_values(table, generate(table)));
  } else {
    r.skip("spectral_values_match_closed_form",
           "N = " + std::to_string(table.N()) + " exceeds spectral cap " +
               std::to_string(caps.spectral));
  }
  return r;
}

void require_classtable_cap(const Params& params, const Caps& caps) {
  if (params.N() > caps.classtable)
    throw CapExceeded("N = " + std::to_string(params.N()) + " exceeds class-table cap " +
                      std::to_string(caps.classtable));
}

}  // namespace

std::vector<Report> run_suite(const Params& params, Suite suite, const Caps& caps) {
  require_classtable_cap(params, caps);
  const ClassTable table(params);
  std::vector<Report> out;
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Cyclotomy) out.push_back(verify_class_lemmas(table));
  if (all || suite == Suite::Gauss) out.push_back(gauss_suite(table, caps));
  if (all || suite == Suite::Adic) out.push_back(verify_adic(params, caps.resultant));
  if (all || suite == Suite::Fcsr) out.push_back(verify_fcsr(params, caps.fcsr));
  return out;
}

std::vector<std::pair<std::uint64_t, unsigned>> sweep_grid(const SweepConfig& config) {
  std::vector<std::uint64_t> primes = config.p_list;
  if (primes.empty()) {
    for (std::uint64_t p = 3; p <= config.p_max; p += 2)
      if (is_prime(p)) primes.push_back(p);
  } else {
    for (auto p : primes)
      if (p < 3 || !is_prime(p))
        throw std::invalid_argument("sweep: p = " + std::to_string(p) + " is not an odd prime");
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  }
  std::vector<std::pair<std::uint64_t, unsigned>> grid;
  for (auto p : primes) {
    std::uint64_t pn = p;
    for (unsigned n = 1; pn <= config.caps.classtable; ++n, pn *= p) {
      if (config.n_max && n > *config.n_max) break;
      grid.emplace_back(p, n);
    }
  }
  return grid;
}

SweepRow sweep_point(std::uint64_t p, unsigned n, const Caps& caps) {
  const Params params = Params::make(p, n);
  require_classtable_cap(params, caps);
  const ClassTable table(params);
  const BinarySeq seq = generate(table);
  const ComplexityReport c = two_adic_complexity(seq);

  SweepRow row;
  row.p = p;
  row.n = n;
  row.N = params.N();
  row.g = params.g();
  row.s2 = c.s2;
  row.gcd = c.gcd;
  row.phi2 = c.phi2;
  row.bound = *c.bound;
  row.bound_ok = c.bound_ok;
  row.maximal = c.maximal;
  if (params.N() <= caps.resultant)
    row.det_match = det_resultant(seq, caps.resultant) == det_closed_form(params) ? Status::Pass
                                                                                   : Status::Fail;
  row.gauss_ok = gauss_suite(table, caps).passed() ? Status::Pass : Status::Fail;
  if (params.N() <= caps.fcsr) row.fcsr_match = cross_check(seq, caps.fcsr) ? Status::Pass : Status::Fail;
  row.lemmas_ok = verify_class_lemmas(table).passed() ? Status::Pass : Status::Fail;
  return row;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  const auto grid = sweep_grid(config);
  std::vector<SweepRow> rows(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < grid.size();) {
      try {
        rows[i] = sweep_point(grid[i].first, grid[i].second, config.caps);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, config.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

}  // namespace dhseq
