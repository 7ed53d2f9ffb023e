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
#include "dhseq/sequence.hpp"

#include <algorithm>
#include <stdexcept>

namespace dhseq {

namespace {

using Gf2Poly = std::vector<std::uint8_t>;  // coefficient i at index i

void trim(Gf2Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b, with b nonzero and trimmed.
void reduce_in_place(Gf2Poly& a, const Gf2Poly& b) {
  const std::size_t db = b.size() - 1;
  trim(a);
  while (a.size() > db) {
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t k = 0; k <= db; ++k) a[shift + k] ^= b[k];
    trim(a);
  }
}

Gf2Poly gf2_gcd(Gf2Poly a, Gf2Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    reduce_in_place(a, b);
    std::swap(a, b);
  }
  return a;
}

}  // namespace

BinarySeq BinarySeq::from_bits(std::vector<std::uint8_t> bits) {
  for (auto b : bits)
    if (b > 1) throw std::invalid_argument("bits must be 0 or 1");
  BinarySeq s;
  s.bits = std::move(bits);
  return s;
}

BinarySeq BinarySeq::from_string(const std::string& text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("bit string may only contain 0 and 1");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return from_bits(std::move(bits));
}

BinarySeq generate(const ClassTable& table, Polarity polarity) {
  BinarySeq s;
  s.params = table.params();
  s.bits.resize(table.N());
  for (std::uint64_t i = 0; i < table.N(); ++i) {
    const Label l = table.label(i);
    const bool in_c1 = l.is_zero() || l.cls == 1;
    s.bits[i] = (in_c1 == (polarity == Polarity::Standard)) ? 1 : 0;
  }
  return s;
}

BinarySeq complement(const BinarySeq& seq) {
  BinarySeq out = seq;
  for (auto& b : out.bits) b ^= 1;
  return out;
}

BigInt s_of_two(const BinarySeq& seq) {
  BigInt v = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (seq.bits[i]) mpz_setbit(v.get_mpz_t(), i);
  return v;
}

std::uint64_t weight(const BinarySeq& seq) {
  return static_cast<std::uint64_t>(std::count(seq.bits.begin(), seq.bits.end(), 1));
}

std::uint64_t linear_complexity_via_gcd(const BinarySeq& seq) {
  const std::size_t N = seq.size();
  if (N == 0) return 0;
  Gf2Poly modulus(N + 1, 0);
  modulus[0] = 1;
  modulus[N] = 1;
  Gf2Poly s(seq.bits.begin(), seq.bits.end());
  trim(s);
  if (s.empty()) return 0;
  const Gf2Poly g = gf2_gcd(modulus, s);
  return N - (g.size() - 1);
}

std::uint64_t berlekamp_massey(std::span<const std::uint8_t> s) {
  const std::size_t len = s.size();
  std::vector<std::uint8_t> c(len + 1, 0), b(len + 1, 0), t;
  c[0] = b[0] = 1;
  std::size_t L = 0;
  std::size_t m = 1;
  for (std::size_t i = 0; i < len; ++i) {
    std::uint8_t d = s[i];
    for (std::size_t k = 1; k <= L; ++k) d ^= c[k] & s[i - k];
    if (d == 0) {
      ++m;
    } else if (2 * L <= i) {
      t = c;
      for (std::size_t k = 0; k + m <= len; ++k) c[k + m] ^= b[k];
      L = i + 1 - L;
      b = t;
      m = 1;
    } else {
      for (std::size_t k = 0; k + m <= len; ++k) c[k + m] ^= b[k];
      ++m;
    }
  }
  return L;
}

std::uint64_t berlekamp_massey(const BinarySeq& seq) {
  const auto two = periodic_prefix(seq, 2 * seq.size());
  return berlekamp_massey(std::span<const std::uint8_t>(two));
}

std::vector<std::uint8_t> periodic_prefix(const BinarySeq& seq, std::size_t length) {
  if (seq.size() == 0) throw std::invalid_argument("periodic_prefix: empty sequence");
  std::vector<std::uint8_t> out(length);
  for (std::size_t i = 0; i < length; ++i) out[i] = seq.bits[i % seq.size()];
  return out;
}

std::string to_bit_string(const BinarySeq& seq) {
  std::string out;
  out.reserve(seq.size());
  for (auto b : seq.bits) out.push_back(b ? '1' : '0');
  return out;
}

std::string s_of_two_hex(const BinarySeq& seq) { return s_of_two(seq).get_str(16); }

}  // namespace dhseq
