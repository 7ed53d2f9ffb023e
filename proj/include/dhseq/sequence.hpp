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
#ifndef DHSEQ_SEQUENCE_HPP
#define DHSEQ_SEQUENCE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dhseq/cyclotomy.hpp"
#include "dhseq/numtheory.hpp"

namespace dhseq {

/// One period s_0..s_{N-1} of a binary sequence. Sequences built by
/// generate() carry their Params; hand-made ones (bits only) do not.
struct BinarySeq {
  std::optional<Params> params;
  std::vector<std::uint8_t> bits;

  std::size_t size() const { return bits.size(); }
  static BinarySeq from_bits(std::vector<std::uint8_t> bits);
  // Parses a string of '0'/'1' characters.
  static BinarySeq from_string(const std::string& bits);
};

enum class Polarity {
  Standard,    // s_i = 1 on C_1 (classes 1 and zero)
  Complement,  // roles of C_0 and C_1 swapped
};

BinarySeq generate(const ClassTable& table, Polarity polarity = Polarity::Standard);
BinarySeq complement(const BinarySeq& seq);

// S(2) = sum s_i 2^i, s_0 the least significant bit.
BigInt s_of_two(const BinarySeq& seq);
std::uint64_t weight(const BinarySeq& seq);

// Linear complexity of the periodic sequence over GF(2), as
// N - deg gcd(x^N - 1, S(x)).
std::uint64_t linear_complexity_via_gcd(const BinarySeq& seq);
// Iterative shift-register synthesis on an arbitrary bit prefix.
std::uint64_t berlekamp_massey(std::span<const std::uint8_t> prefix);
// Synthesis run over two periods of seq.
std::uint64_t berlekamp_massey(const BinarySeq& seq);

// The first `length` bits of the periodic extension.
std::vector<std::uint8_t> periodic_prefix(const BinarySeq& seq, std::size_t length);

std::string to_bit_string(const BinarySeq& seq);
// Lowercase hex of S(2); bit i of the value is s_i.
std::string s_of_two_hex(const BinarySeq& seq);

}  // namespace dhseq

#endif  // DHSEQ_SEQUENCE_HPP
