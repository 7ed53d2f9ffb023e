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
#ifndef DHSEQ_SWEEP_HPP
#define DHSEQ_SWEEP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dhseq/adic.hpp"
#include "dhseq/fcsr.hpp"
#include "dhseq/numtheory.hpp"
#include "dhseq/report.hpp"

namespace dhseq {

inline constexpr std::uint64_t kDefaultClassTableCap = 2500;
inline constexpr std::uint64_t kDefaultSpectralCap = 343;

struct Caps {
  std::uint64_t resultant = kDefaultResultantCap;
  std::uint64_t fcsr = kDefaultFcsrCap;
  std::uint64_t classtable = kDefaultClassTableCap;
  std::uint64_t spectral = kDefaultSpectralCap;
};

enum class Suite { Cyclotomy, Gauss, Adic, Fcsr, All };

Suite parse_suite(const std::string& name);  // throws std::invalid_argument
const char* to_string(Suite s);

// Runs one suite (or all of them) for a single instance. Checks whose inputs
// exceed a cap are reported as skipped. Throws CapExceeded if N exceeds the
// class-table cap.
std::vector<Report> run_suite(const Params& params, Suite suite, const Caps& caps = {});

// FCSR oracle checks for one instance: denominator match, congruence
// invariant and agreement of floor-logs.
Report verify_fcsr(const Params& params, std::uint64_t cap = kDefaultFcsrCap);

struct SweepConfig {
  std::vector<std::uint64_t> p_list;  // used when non-empty
  std::uint64_t p_max = 13;
  std::optional<unsigned> n_max;
  Caps caps;
  unsigned jobs = 1;
};

/// One grid point. Skipped checks are reported as Status::Skipped.
struct SweepRow {
  std::uint64_t p = 0;
  unsigned n = 0;
  std::uint64_t N = 0;
  std::uint64_t g = 0;
  BigInt s2;
  BigInt gcd;
  std::uint64_t phi2 = 0;
  std::uint64_t bound = 0;
  bool bound_ok = false;
  Status det_match = Status::Skipped;
  Status gauss_ok = Status::Skipped;
  Status fcsr_match = Status::Skipped;
  Status lemmas_ok = Status::Skipped;
  bool maximal = false;  // gcd(S(2), 2^N - 1) == 1
};

// The (p, n) grid: odd primes p (from p_list or up to p_max) and every
// n >= 1 with p^n <= caps.classtable and n <= n_max. Throws
// std::invalid_argument for even or non-prime entries of p_list.
std::vector<std::pair<std::uint64_t, unsigned>> sweep_grid(const SweepConfig& config);

SweepRow sweep_point(std::uint64_t p, unsigned n, const Caps& caps);

// Rows in (p, n) order regardless of how many workers ran.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

}  // namespace dhseq

#endif  // DHSEQ_SWEEP_HPP
