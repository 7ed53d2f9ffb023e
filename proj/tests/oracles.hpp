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
// Brute-force reference computations for the tests. Nothing here calls into
// the library's algorithms; each oracle follows the plain definition.
#ifndef DHSEQ_TESTS_ORACLES_HPP
#define DHSEQ_TESTS_ORACLES_HPP

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

namespace oracle {

inline bool is_prime_naive(std::uint64_t u) {
  if (u < 2) return false;
  for (std::uint64_t d = 2; d < u; ++d)
    if (u % d == 0) return false;
  return true;
}

// Smallest k >= 1 with a^k = 1 (mod m), by walking powers.
inline std::uint64_t order_by_powers(std::uint64_t a, std::uint64_t m) {
  std::uint64_t x = a % m;
  for (std::uint64_t k = 1; k <= m; ++k) {
    if (x == 1) return k;
    x = x * a % m;
  }
  return 0;
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// D_i^{(p^m)} = {g^{2t+i} mod p^m : 0 <= t < (p-1)p^{m-1}/2}.
inline std::set<std::uint64_t> coset_by_definition(std::uint64_t p, unsigned m, std::uint64_t g, int i) {
  const std::uint64_t mod = ipow(p, m);
  const std::uint64_t half = (p - 1) * ipow(p, m - 1) / 2;
  std::set<std::uint64_t> out;
  for (std::uint64_t t = 0; t < half; ++t) {
    std::uint64_t x = 1;
    for (std::uint64_t k = 0; k < 2 * t + static_cast<std::uint64_t>(i); ++k) x = x * (g % mod) % mod;
    out.insert(x);
  }
  return out;
}

// C_1 = U_m p^{n-m} D_1^{(p^m)} u {0}.
inline std::set<std::uint64_t> c1_by_definition(std::uint64_t p, unsigned n, std::uint64_t g) {
  std::set<std::uint64_t> out{0};
  for (unsigned m = 1; m <= n; ++m)
    for (auto x : coset_by_definition(p, m, g, 1)) out.insert(ipow(p, n - m) * x);
  return out;
}

inline std::vector<std::uint8_t> sequence_by_definition(std::uint64_t p, unsigned n, std::uint64_t g) {
  const auto c1 = c1_by_definition(p, n, g);
  std::vector<std::uint8_t> bits(ipow(p, n));
  for (std::uint64_t i = 0; i < bits.size(); ++i) bits[i] = c1.count(i) ? 1 : 0;
  return bits;
}

// det of a_{k,j} = s_{(k-j) mod N} by Gaussian elimination over Q.
inline mpz_class circulant_det(const std::vector<std::uint8_t>& s) {
  const std::size_t N = s.size();
  std::vector<std::vector<mpq_class>> a(N, std::vector<mpq_class>(N));
  for (std::size_t k = 0; k < N; ++k)
    for (std::size_t j = 0; j < N; ++j) a[k][j] = s[(k + N - j) % N];
  mpq_class det = 1;
  for (std::size_t c = 0; c < N; ++c) {
    std::size_t piv = c;
    while (piv < N && a[piv][c] == 0) ++piv;
    if (piv == N) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < N; ++r) {
      if (a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < N; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det.get_num();
}

// min over odd q >= 1 of max(|f|, q) where f = q * alpha (mod 2^T) is taken
// in the symmetric range. Exhaustive in q, so only for short prefixes.
inline mpz_class min_rational_size(const std::vector<std::uint8_t>& prefix) {
  const std::size_t T = prefix.size();
  mpz_class alpha = 0, mod = 1;
  for (std::size_t i = 0; i < T; ++i) {
    if (prefix[i]) alpha += mod;
    mod *= 2;
  }
  mpz_class best = mod;
  for (mpz_class q = 1; q < best; q += 2) {
    mpz_class f = q * alpha % mod;
    if (2 * f > mod) f -= mod;
    mpz_class size = abs(f) > q ? mpz_class(abs(f)) : q;
    if (size < best) best = size;
  }
  return best;
}

inline std::vector<std::uint8_t> random_bits(std::mt19937_64& rng, std::size_t len) {
  std::bernoulli_distribution coin(0.5);
  std::vector<std::uint8_t> out(len);
  for (auto& b : out) b = coin(rng) ? 1 : 0;
  return out;
}

}  // namespace oracle

#endif  // DHSEQ_TESTS_ORACLES_HPP
