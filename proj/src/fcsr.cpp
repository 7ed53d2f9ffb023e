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
#include "dhseq/fcsr.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "dhseq/adic.hpp"

namespace dhseq {

namespace {

struct Pair {
  BigInt num;
  BigInt den;
};

BigInt size_of(const Pair& h) {
  BigInt a = abs(h.num), b = abs(h.den);
  return a < b ? b : a;
}

// Odd integers bracketing t = a/b (b != 0).
void odd_neighbours(const BigInt& a, const BigInt& b, std::vector<BigInt>& out) {
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  BigInt lo = mpz_odd_p(fl.get_mpz_t()) ? fl : BigInt(fl - 1);
  out.push_back(lo);
  out.push_back(lo + 2);
}

// The odd d minimizing max(|u.num + d v.num|, |u.den + d v.den|). The
// objective is convex and piecewise linear in d, so its real minimizer is a
// breakpoint and the best odd integer brackets one.
BigInt best_odd_multiplier(const Pair& u, const Pair& v) {
  std::vector<BigInt> candidates = {BigInt(1), BigInt(-1)};
  if (v.num != 0) odd_neighbours(-u.num, v.num, candidates);
  if (v.den != 0) odd_neighbours(-u.den, v.den, candidates);
  const BigInt dsum = v.num + v.den, dgap = v.num - v.den;
  if (dsum != 0) odd_neighbours(-(u.num + u.den), dsum, candidates);
  if (dgap != 0) odd_neighbours(-(u.num - u.den), dgap, candidates);

  BigInt best_d = candidates.front();
  BigInt best = size_of({u.num + best_d * v.num, u.den + best_d * v.den});
  for (const auto& d : candidates) {
    const BigInt s = size_of({u.num + d * v.num, u.den + d * v.den});
    if (s < best) {
      best = s;
      best_d = d;
    }
  }
  return best_d;
}

}  // namespace

RationalApprox rational_approximation(std::span<const std::uint8_t> prefix) {
  if (prefix.size() < 4) throw std::invalid_argument("rational_approximation: prefix shorter than 4 bits");
  const std::uint64_t T = prefix.size();

  std::uint64_t first = 0;
  while (first < T && prefix[first] == 0) ++first;
  if (first == T) return {BigInt(0), BigInt(1), T};

  // alpha holds the prefix value through bit k. Both pairs satisfy
  // den * alpha = num (mod 2^{k+1}); g is the current best.
  BigInt alpha;
  mpz_setbit(alpha.get_mpz_t(), first);
  Pair f{BigInt(0), BigInt(2)};
  Pair g{alpha, BigInt(1)};

  for (std::uint64_t k = first + 1; k < T; ++k) {
    if (prefix[k]) mpz_setbit(alpha.get_mpz_t(), k);
    BigInt mismatch = g.den * alpha - g.num;
    if (mpz_divisible_2exp_p(mismatch.get_mpz_t(), k + 1)) {
      f.num *= 2;
      f.den *= 2;
    } else if (size_of(g) < size_of(f)) {
      const BigInt d = best_odd_multiplier(f, g);
      Pair next{f.num + d * g.num, f.den + d * g.den};
      f = {2 * g.num, 2 * g.den};
      g = std::move(next);
    } else {
      const BigInt d = best_odd_multiplier(g, f);
      g = {g.num + d * f.num, g.den + d * f.den};
      f.num *= 2;
      f.den *= 2;
    }
  }

  RationalApprox out{g.num, g.den, T};
  const BigInt common = gcd(out.f, out.q);
  if (common > 1) {
    out.f /= common;
    out.q /= common;
  }
  if (out.q < 0) {
    out.f = -out.f;
    out.q = -out.q;
  }
  if (mpz_even_p(out.q.get_mpz_t()))
    throw std::logic_error("rational_approximation: even denominator");
  return out;
}

bool satisfies_prefix(const RationalApprox& approx, std::span<const std::uint8_t> prefix) {
  BigInt value = 0;
  for (std::size_t i = 0; i < prefix.size(); ++i)
    if (prefix[i]) mpz_setbit(value.get_mpz_t(), i);
  BigInt diff = approx.q * value - approx.f;
  return mpz_divisible_2exp_p(diff.get_mpz_t(), prefix.size()) != 0 && gcd(approx.f, approx.q) == 1 &&
         approx.q > 0 && mpz_odd_p(approx.q.get_mpz_t());
}

bool cross_check(const BinarySeq& seq, std::uint64_t cap) {
  if (seq.size() > cap)
    throw CapExceeded("cross_check: N = " + std::to_string(seq.size()) + " exceeds FCSR cap " +
                      std::to_string(cap));
  const auto prefix = periodic_prefix(seq, 2 * seq.size() + 4);
  const RationalApprox approx = rational_approximation(prefix);
  const std::uint64_t log_q = mpz_sizeinbase(approx.q.get_mpz_t(), 2) - 1;
  return log_q == two_adic_complexity(seq).phi2;
}

}  // namespace dhseq
