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

#include "dhseq/sequence.hpp"
#include "oracles.hpp"

using namespace dhseq;

namespace {

BinarySeq seq_for(std::uint64_t p, unsigned n) { return generate(ClassTable(Params::make(p, n))); }

}  // namespace

TEST_CASE("generate") {
  CHECK(to_bit_string(seq_for(3, 2)) == "101001101");
  CHECK(to_bit_string(seq_for(5, 1)) == "10110");
  CHECK(to_bit_string(seq_for(3, 1)) == "101");
  CHECK(to_bit_string(generate(ClassTable(Params::make(3, 2)), Polarity::Complement)) == "010110010");

  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    for (unsigned n = 1; oracle::ipow(p, n) <= 2500; ++n) {
      const BinarySeq s = seq_for(p, n);
      CHECK(s.bits == oracle::sequence_by_definition(p, n, s.params->g()));
      CHECK(weight(s) == (s.size() + 1) / 2);
    }
  }
}

TEST_CASE("s_of_two") {
  CHECK(s_of_two(seq_for(3, 2)) == 357);
  CHECK(s_of_two(seq_for(5, 1)) == 13);
  CHECK(s_of_two(BinarySeq::from_string("0000000")) == 0);
  CHECK(s_of_two_hex(seq_for(3, 2)) == "165");
}

TEST_CASE("weight") {
  CHECK(weight(seq_for(3, 2)) == 5);
  CHECK(weight(seq_for(5, 1)) == 3);
  CHECK(weight(seq_for(3, 1)) == 2);
}

TEST_CASE("complement and polynomial evaluation") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t len = 1 + rng() % 300;
    const BinarySeq s = BinarySeq::from_bits(oracle::random_bits(rng, len));
    CHECK(s_of_two(s) + s_of_two(complement(s)) == mersenne(len));
    BigInt horner = 0;
    for (std::size_t i = len; i-- > 0;) horner = 2 * horner + s.bits[i];
    CHECK(horner == s_of_two(s));
  }
}

TEST_CASE("linear complexity") {
  CHECK(linear_complexity_via_gcd(BinarySeq::from_string("101")) == 2);
  CHECK(berlekamp_massey(BinarySeq::from_string("101")) == 2);
  CHECK(linear_complexity_via_gcd(BinarySeq::from_string("1111111")) == 1);
  CHECK(berlekamp_massey(BinarySeq::from_string("1111111")) == 1);
  CHECK(linear_complexity_via_gcd(BinarySeq::from_string("0000")) == 0);

  // Frozen from an independent GF(2) polynomial gcd.
  CHECK(linear_complexity_via_gcd(seq_for(3, 2)) == 9);
  CHECK(berlekamp_massey(seq_for(3, 2)) == 9);
  CHECK(linear_complexity_via_gcd(seq_for(7, 1)) == 3);
  CHECK(linear_complexity_via_gcd(seq_for(7, 2)) == 25);
  CHECK(linear_complexity_via_gcd(seq_for(5, 3)) == 125);

  SUBCASE("both routes agree") {
    for (std::uint64_t p : {3, 5, 7, 11, 13})
      for (unsigned n = 1; oracle::ipow(p, n) <= 800; ++n) {
        const BinarySeq s = seq_for(p, n);
        CHECK(berlekamp_massey(s) == linear_complexity_via_gcd(s));
      }
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
      const BinarySeq s = BinarySeq::from_bits(oracle::random_bits(rng, 1 + rng() % 64));
      CHECK(berlekamp_massey(s) == linear_complexity_via_gcd(s));
    }
  }
}

TEST_CASE("bit string parsing") {
  CHECK_THROWS_AS(BinarySeq::from_string("10a1"), std::invalid_argument);
  CHECK_THROWS_AS(BinarySeq::from_bits({0, 2}), std::invalid_argument);
  CHECK(periodic_prefix(BinarySeq::from_string("101"), 7) == std::vector<std::uint8_t>{1, 0, 1, 1, 0, 1, 1});
}
