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
#ifndef DHSEQ_FCSR_HPP
#define DHSEQ_FCSR_HPP

#include <cstdint>
#include <span>

#include "dhseq/numtheory.hpp"
#include "dhseq/sequence.hpp"

namespace dhseq {

inline constexpr std::uint64_t kDefaultFcsrCap = 128;

/// f/q as a 2-adic number: q * (sum_{i<prefix_len} s_i 2^i) = f (mod 2^prefix_len),
/// with q odd and positive and gcd(f, q) = 1.
struct RationalApprox {
  BigInt f;
  BigInt q;
  std::uint64_t prefix_len = 0;
};

// Successive lattice approximation over a bit prefix (s_0 first). Returns
// the pair minimizing max(|f|, |q|) among those matching the prefix, reduced
// to lowest terms. The periodic stream with period N has value
// -S(2)/(2^N - 1), so its reduced q is (2^N - 1)/gcd(S(2), 2^N - 1).
// Throws std::invalid_argument for prefixes shorter than 4 bits.
RationalApprox rational_approximation(std::span<const std::uint8_t> prefix);

// Checks the congruence invariant of an approximation against its prefix.
bool satisfies_prefix(const RationalApprox& approx, std::span<const std::uint8_t> prefix);

// Runs the approximation on 2N + 4 bits of the periodic extension and
// compares floor(log2 q) with the value from two_adic_complexity. Throws
// CapExceeded when N > cap.
bool cross_check(const BinarySeq& seq, std::uint64_t cap = kDefaultFcsrCap);

}  // namespace dhseq

#endif  // DHSEQ_FCSR_HPP
