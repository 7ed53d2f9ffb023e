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
#ifndef DHSEQ_NUMTHEORY_HPP
#define DHSEQ_NUMTHEORY_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace dhseq {

using BigInt = mpz_class;

// Raised when an input exceeds a configured size cap.
class CapExceeded : public std::invalid_argument {
public:
  explicit CapExceeded(const std::string& what) : std::invalid_argument(what) {}
};

inline BigInt to_big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

bool is_prime(std::uint64_t u);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

// a^e mod m, with m < 2^63.
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

// Smallest k >= 1 with a^k = 1 (mod m). Throws std::invalid_argument if
// gcd(a, m) != 1 or m < 2.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

// Euler phi of p^n for prime p.
std::uint64_t phi_prime_power(std::uint64_t p, unsigned n);

// Exact p^n; throws std::overflow_error if it does not fit in 63 bits.
std::uint64_t checked_pow(std::uint64_t p, unsigned n);

// Smallest g >= 2 generating the unit group of Z_{p^n}.
std::uint64_t find_primitive_root(std::uint64_t p, unsigned n);

// 2^k - 1 as a big integer.
BigInt mersenne(std::uint64_t k);

// p-adic valuation of a nonzero x.
unsigned valuation(std::uint64_t x, std::uint64_t p);

/// A sequence-family instance: odd prime p, exponent n, primitive root g
/// of p^n, and the period N = p^n.
///
/// Construction validates everything; an instance that exists is valid.
class Params {
public:
  // Throws std::invalid_argument on a non-prime or even p, n == 0, or a g
  // that is not a primitive root of p^n. When g is omitted the smallest
  // primitive root is used.
  static Params make(std::uint64_t p, unsigned n,
                     std::optional<std::uint64_t> g = std::nullopt);

  std::uint64_t p() const { return p_; }
  unsigned n() const { return n_; }
  std::uint64_t g() const { return g_; }
  std::uint64_t N() const { return N_; }
  // p^k for 0 <= k <= n.
  std::uint64_t p_pow(unsigned k) const;
  bool p_is_1_mod_4() const { return p_ % 4 == 1; }

  friend bool operator==(const Params&, const Params&) = default;

private:
  Params(std::uint64_t p, unsigned n, std::uint64_t g, std::uint64_t N)
      : p_(p), n_(n), g_(g), N_(N) {}

  std::uint64_t p_;
  unsigned n_;
  std::uint64_t g_;
  std::uint64_t N_;
};

struct GcdIdentity {
  BigInt lhs;  // gcd(2^{p^m}-1, (2^N-1)/(2^{p^m}-1))
  BigInt rhs;  // gcd(2^{p^m}-1, p^{n-m})
  bool equal = false;
};

// Throws std::invalid_argument unless 1 <= m <= n-1.
GcdIdentity check_gcd_identity(const Params& params, unsigned m);

}  // namespace dhseq

#endif  // DHSEQ_NUMTHEORY_HPP
