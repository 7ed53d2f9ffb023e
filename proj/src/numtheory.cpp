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
#include "dhseq/numtheory.hpp"

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace dhseq {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t u) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= u; ++d) {
    if (u % d == 0) {
      out.push_back(d);
      while (u % d == 0) u /= d;
    }
  }
  if (u > 1) out.push_back(u);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t u) {
  if (u < 2) return false;
  if (u < 4) return true;
  if (u % 2 == 0) return false;
  for (std::uint64_t d = 3; d <= u / d; d += 2) {
    if (u % d == 0) return false;
  }
  return true;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return result;
}

std::uint64_t phi_prime_power(std::uint64_t p, unsigned n) {
  if (n == 0) return 1;
  return (p - 1) * checked_pow(p, n - 1);
}

std::uint64_t checked_pow(std::uint64_t p, unsigned n) {
  std::uint64_t r = 1;
  for (unsigned k = 0; k < n; ++k) {
    if (r > std::numeric_limits<std::int64_t>::max() / p)
      throw std::overflow_error("p^n does not fit in 63 bits");
    r *= p;
  }
  return r;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("multiplicative_order: modulus must be >= 2");
  a %= m;
  if (gcd_u64(a, m) != 1)
    throw std::invalid_argument("multiplicative_order: gcd(" + std::to_string(a) + ", " +
                                std::to_string(m) + ") != 1");
  // The order divides lambda(m), which divides phi(m); get phi by factoring m.
  std::uint64_t phi = m;
  for (auto q : prime_factors(m)) phi = phi / q * (q - 1);
  std::uint64_t order = phi;
  for (auto q : prime_factors(phi)) {
    while (order % q == 0 && pow_mod(a, order / q, m) == 1) order /= q;
  }
  return order;
}

std::uint64_t find_primitive_root(std::uint64_t p, unsigned n) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("find_primitive_root: p must be an odd prime");
  if (n == 0) throw std::invalid_argument("find_primitive_root: n must be positive");
  const std::uint64_t N = checked_pow(p, n);
  const std::uint64_t phi = phi_prime_power(p, n);
  for (std::uint64_t g = 2; g < N; ++g) {
    if (g % p == 0) continue;
    if (multiplicative_order(g, N) == phi) return g;
  }
  throw std::logic_error("no primitive root found");  // unreachable for odd prime powers
}

BigInt mersenne(std::uint64_t k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r - 1;
}

unsigned valuation(std::uint64_t x, std::uint64_t p) {
  unsigned v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

Params Params::make(std::uint64_t p, unsigned n, std::optional<std::uint64_t> g) {
  if (p == 2) throw std::invalid_argument("p must be odd (p = 2 given)");
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (n == 0) throw std::invalid_argument("n must be positive");
  const std::uint64_t N = checked_pow(p, n);
  std::uint64_t root;
  if (g) {
    root = *g % N;
    if (gcd_u64(root, N) != 1 || multiplicative_order(root, N) != phi_prime_power(p, n))
      throw std::invalid_argument("g = " + std::to_string(*g) + " is not a primitive root of " +
                                  std::to_string(N));
  } else {
    root = find_primitive_root(p, n);
  }
  return Params(p, n, root, N);
}

std::uint64_t Params::p_pow(unsigned k) const {
  if (k > n_) throw std::out_of_range("p_pow: exponent exceeds n");
  std::uint64_t r = 1;
  for (unsigned i = 0; i < k; ++i) r *= p_;
  return r;
}

GcdIdentity check_gcd_identity(const Params& params, unsigned m) {
  if (m < 1 || m + 1 > params.n())
    throw std::invalid_argument("check_gcd_identity: need 1 <= m <= n-1, got m = " +
                                std::to_string(m));
  const BigInt small = mersenne(params.p_pow(m));
  const BigInt full = mersenne(params.N());
  BigInt cofactor;
  mpz_divexact(cofactor.get_mpz_t(), full.get_mpz_t(), small.get_mpz_t());

  GcdIdentity out;
  out.lhs = gcd(small, cofactor);
  out.rhs = gcd(small, to_big(params.p_pow(params.n() - m)));
  out.equal = out.lhs == out.rhs;
  return out;
}

}  // namespace dhseq
