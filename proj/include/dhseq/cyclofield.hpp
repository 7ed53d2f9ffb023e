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
#ifndef DHSEQ_CYCLOFIELD_HPP
#define DHSEQ_CYCLOFIELD_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dhseq/cyclotomy.hpp"
#include "dhseq/numtheory.hpp"
#include "dhseq/report.hpp"
#include "dhseq/sequence.hpp"

namespace dhseq {

/// Shape of Z[w] for w a primitive p^n-th root of unity.
struct CycloRing {
  std::uint64_t p = 0;
  unsigned n = 0;
  std::uint64_t N = 0;     // p^n
  std::uint64_t step = 0;  // p^{n-1}
  std::uint64_t phi = 0;   // (p-1) p^{n-1}, the canonical length

  static CycloRing of(const Params& params);
  friend bool operator==(const CycloRing&, const CycloRing&) = default;
};

/// An element of Z[w_{p^n}] in canonical form: the remainder modulo
///   Phi_{p^n}(x) = sum_{k<p} x^{k p^{n-1}},
/// stored as phi(p^n) integer coefficients over 1, x, ..., x^{phi-1}.
/// Two elements are equal in Q(w) iff their coefficient vectors match.
class CycInt {
public:
  explicit CycInt(const CycloRing& ring);

  static CycInt constant(const CycloRing& ring, const BigInt& c);
  // w^k; k is taken mod N.
  static CycInt root_power(const CycloRing& ring, std::uint64_t k);
  // sum_x w^x over a multiset of exponents (each taken mod N).
  static CycInt from_exponents(const CycloRing& ring, std::span<const std::uint64_t> exponents);
  // Canonical form of sum_k c_k w^k for a length-N vector c.
  static CycInt from_cyclic(const CycloRing& ring, std::vector<BigInt> cyclic);

  const CycloRing& ring() const { return ring_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  // True when the element is an integer constant (all higher coefficients 0).
  bool is_constant() const;

  CycInt& operator+=(const CycInt& rhs);
  CycInt& operator-=(const CycInt& rhs);
  CycInt& operator*=(const BigInt& k);

  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(CycInt a, const BigInt& k) { return a *= k; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  friend bool operator==(const CycInt& a, const CycInt& b);

  // Human-readable polynomial in x, e.g. "-1 - 3*x^3".
  std::string to_string() const;

private:
  void require_same_ring(const CycInt& other) const;

  CycloRing ring_;
  std::vector<BigInt> coeffs_;
};

CycInt cyc_reduce(const CycloRing& ring, std::span<const std::uint64_t> exponents);
CycInt cyc_mul(const CycInt& a, const CycInt& b);

// eta_i^{(p^m)} embedded in Z[w_{p^n}]: sum over x in D_i^{(p^m)} of w^{p^{n-m} x}.
CycInt gauss_period(const ClassTable& table, int i, unsigned m);

// Exact checks of the Gauss period results: eta_0 + eta_1 + 1 = 0 at level 1,
// the sum over R vanishes for n >= 2, both periods vanish at every level
// m >= 2, 4 eta_0 eta_1 = 1 -+ p at level 1, the telescoping identity over
// all levels, and agreement of two construction paths for each coset sum.
Report verify_gauss_theorems(const ClassTable& table);

enum class SpectralBranch { Zero, Class0, Class1 };

struct SpectralValue {
  std::uint64_t a = 0;
  SpectralBranch branch = SpectralBranch::Zero;
  unsigned m = 0;  // a = p^m * u with u a unit mod p^{n-m}
  CycInt value;    // S(w^a), computed from the bits
  CycInt expected; // closed form for the branch
  bool matches = false;
};

// S(w^a) = sum_i s_i w^{a i}. Throws std::invalid_argument if a >= N or the
// sequence length differs from N.
CycInt evaluate_at_root(const CycloRing& ring, const BinarySeq& seq, std::uint64_t a);

// S(w^a) alongside its closed form:
//   a = 0                      -> (p^n + 1)/2
//   a in p^m D_0^{(p^{n-m})}   -> (p^m + 1)/2 + p^m eta_1^{(p)}
//   a in p^m D_1^{(p^{n-m})}   -> (p^m + 1)/2 + p^m eta_0^{(p)}
SpectralValue eval_S_at_root(const ClassTable& table, const BinarySeq& seq, std::uint64_t a);

// eval_S_at_root for every a in 0..N-1, one check entry per failure.
Report verify_spectral_values(const ClassTable& table, const BinarySeq& seq);

}  // namespace dhseq

#endif  // DHSEQ_CYCLOFIELD_HPP
