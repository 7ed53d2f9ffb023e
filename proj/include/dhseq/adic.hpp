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
#ifndef DHSEQ_ADIC_HPP
#define DHSEQ_ADIC_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "dhseq/numtheory.hpp"
#include "dhseq/report.hpp"
#include "dhseq/sequence.hpp"

namespace dhseq {

inline constexpr std::uint64_t kDefaultResultantCap = 200;
// Largest N for which det_resultant uses the Sylvester/Bareiss route by default.
inline constexpr std::uint64_t kSylvesterLimit = 60;

struct ComplexityReport {
  std::optional<Params> params;
  std::uint64_t N = 0;
  BigInt s2;
  BigInt modulus;  // 2^N - 1
  BigInt gcd;      // gcd(S(2), 2^N - 1)
  std::uint64_t phi2 = 0;
  // Only present for sequences that carry Params.
  std::optional<std::uint64_t> bound;  // p^n - p^{n-1} - 1
  bool bound_ok = false;
  bool half_period_ok = false;  // phi2 >= ceil((N+1)/2), informational
  bool maximal = false;         // gcd == 1
};

// phi2 = floor(log2((2^N - 1) / gcd)) by exact bit length.
ComplexityReport two_adic_complexity(const BinarySeq& seq);

// The product formula for det(A):
//   ((p^n + 1)/2) * prod_{m<n} ((p^{2m+1} -+ 1)/4)^{p^{n-m-1}(p-1)/2},
// minus sign for p = 1 (mod 4), plus for p = 3 (mod 4). Throws
// std::logic_error if a base factor is not integral.
BigInt det_closed_form(const Params& params);

using IntPoly = std::vector<BigInt>;  // coefficient of x^i at index i

// Fraction-free (Bareiss) determinant with row pivoting.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> matrix);

std::vector<std::vector<BigInt>> sylvester_matrix(const IntPoly& f, const IntPoly& g);
// Res(f, g) as the determinant of the Sylvester matrix.
BigInt resultant_sylvester(const IntPoly& f, const IntPoly& g);
// Res(f, g) by Euclid's algorithm modulo word-size primes, combined by CRT
// until the product of primes exceeds twice the Hadamard bound.
BigInt resultant_modular(const IntPoly& f, const IntPoly& g);

enum class ResultantMethod { Auto, Sylvester, Modular };

// Res(x^N - 1, S(x)), which equals the determinant of the circulant matrix
// a_{k,j} = s_{(k-j) mod N}. Throws CapExceeded when N > cap.
BigInt det_resultant(const BinarySeq& seq, std::uint64_t cap = kDefaultResultantCap,
                     ResultantMethod method = ResultantMethod::Auto);

struct DetReport {
  Params params;
  BigInt det_closed;
  std::optional<BigInt> det_resultant;  // absent when N exceeds the cap
  bool match = false;
  bool divisibility_ok = false;
};

// Closed form, resultant (when N <= cap) and the divisibility check.
DetReport det_report(const Params& params, std::uint64_t cap = kDefaultResultantCap);

// gcd(S(2), 2^N - 1) divides gcd(det, 2^N - 1). Throws std::invalid_argument
// for det == 0.
bool verify_divisibility(const BinarySeq& seq, const BigInt& det);

// Classes -> sequence -> complexity; phi2 >= p^n - p^{n-1} - 1 and
// gcd(S(2), 2^N - 1) | 2^{p^{n-1}} - 1.
Report verify_lower_bound(const Params& params);

// Lower bound, divisibility against the closed-form determinant, the
// Mersenne gcd identity at every level, and closed form vs resultant when
// N <= resultant_cap.
Report verify_adic(const Params& params, std::uint64_t resultant_cap = kDefaultResultantCap);

}  // namespace dhseq

#endif  // DHSEQ_ADIC_HPP
