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
#include <doctest.h>

#include <random>

#include "dhseq/adic.hpp"
#include "dhseq/fcsr.hpp"
#include "oracles.hpp"

using namespace dhseq;

namespace {

BinarySeq seq_for(std::uint64_t p, unsigned n) { return generate(ClassTable(Params::make(p, n))); }

RationalApprox approx_periodic(const BinarySeq& s) {
  return rational_approximation(periodic_prefix(s, 2 * s.size() + 4));
}

}  // namespace

TEST_CASE("rational_approximation on periodic streams") {
  const RationalApprox a = approx_periodic(BinarySeq::from_string("101"));
  CHECK(a.q == 7);
  CHECK(a.f == -5);
  CHECK(a.prefix_len == 10);

  const RationalApprox ones = approx_periodic(BinarySeq::from_string("1111"));
  CHECK(ones.q == 1);
  CHECK(ones.f == -1);

  CHECK(approx_periodic(seq_for(3, 2)).q == 73);

  const RationalApprox zeros = rational_approximation(std::vector<std::uint8_t>{0, 0, 0, 0, 0});
  CHECK(zeros.f == 0);
  CHECK(zeros.q == 1);

  CHECK_THROWS_AS(rational_approximation(std::vector<std::uint8_t>{1, 0, 1}), std::invalid_argument);
}

TEST_CASE("cross_check") {
  CHECK(cross_check(seq_for(3, 1)));
  CHECK(cross_check(seq_for(5, 1)));
  CHECK(cross_check(seq_for(3, 2)));
  CHECK_THROWS_AS(cross_check(seq_for(3, 5)), CapExceeded);
}

TEST_CASE("minimality against exhaustive search") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const auto prefix = oracle::random_bits(rng, 4 + rng() % 11);
    const RationalApprox a = rational_approximation(prefix);
    CHECK(satisfies_prefix(a, prefix));
    const BigInt size = abs(a.f) > a.q ? BigInt(abs(a.f)) : a.q;
    INFO("prefix length " << prefix.size());
    CHECK(size == oracle::min_rational_size(prefix));
  }
}

TEST_CASE("random periodic sequences recover the reduced modulus") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const BinarySeq s = BinarySeq::from_bits(oracle::random_bits(rng, 1 + rng() % 80));
    const auto prefix = periodic_prefix(s, 2 * s.size() + 4);
    const RationalApprox a = rational_approximation(prefix);
    const ComplexityReport c = two_adic_complexity(s);
    CHECK(satisfies_prefix(a, prefix));
    CHECK(mpz_odd_p(a.q.get_mpz_t()));
    CHECK(a.q == c.modulus / c.gcd);
    CHECK(a.f * c.modulus == -c.s2 * a.q);
  }
}
