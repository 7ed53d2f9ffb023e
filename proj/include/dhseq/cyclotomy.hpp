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
#ifndef DHSEQ_CYCLOTOMY_HPP
#define DHSEQ_CYCLOTOMY_HPP

#include <cstdint>
#include <vector>

#include "dhseq/numtheory.hpp"
#include "dhseq/report.hpp"

namespace dhseq {

/// Where a residue x of Z_{p^n} sits in the decomposition
///   Z_{p^n} = U_m p^{n-m} D_0^{(p^m)}  u  U_m p^{n-m} D_1^{(p^m)}  u  {0}.
/// level == 0 marks x = 0.
struct Label {
  std::uint8_t level = 0;
  std::uint8_t cls = 0;

  bool is_zero() const { return level == 0; }
  friend bool operator==(const Label&, const Label&) = default;
};

/// Order-2 generalized cyclotomic classes of every level 1..n, plus the
/// per-residue labelling of Z_{p^n}. Immutable once built.
///
/// Level m uses g mod p^m as its generator, so D_i^{(p^m)} is the set of
/// g^{2t+i} mod p^m. Index lookups are O(1); memory is O(N).
class ClassTable {
public:
  explicit ClassTable(const Params& params);

  const Params& params() const { return params_; }
  std::uint64_t N() const { return params_.N(); }

  Label label(std::uint64_t x) const { return labels_[x % params_.N()]; }

  // Class of u in Z_{p^m}: 0 or 1 for units, -1 for multiples of p.
  int class_at_level(unsigned m, std::uint64_t u) const;

  // D_i^{(p^m)} as ascending residues of Z_{p^m}.
  std::vector<std::uint64_t> coset(unsigned m, int i) const;
  // p^{n-m} * D_i^{(p^m)} as ascending residues of Z_{p^n}.
  std::vector<std::uint64_t> embedded_coset(unsigned m, int i) const;
  // R^{(p^m)} = {0, p, 2p, ...} inside Z_{p^m}; m defaults to n.
  std::vector<std::uint64_t> multiples_of_p(unsigned m) const;
  std::vector<std::uint64_t> multiples_of_p() const { return multiples_of_p(params_.n()); }

  // C_0 collects every class-0 coset; C_1 every class-1 coset and 0.
  std::vector<std::uint64_t> c0() const;
  std::vector<std::uint64_t> c1() const;

private:
  Params params_;
  // level_class_[m][u] for m in 1..n; index 0 unused.
  std::vector<std::vector<std::int8_t>> level_class_;
  std::vector<Label> labels_;
};

ClassTable build_classes(const Params& params);

// (i,j) = |(D_i + 1) n D_j| at the top level, by enumeration.
std::uint64_t cyclotomic_number(const ClassTable& table, int i, int j);

// |R n (D_i + 1)| at the top level.
std::uint64_t shifted_class_hits_R(const ClassTable& table, int i);

// Exhaustive checks of the class structure lemmas: R-intersections, the four
// cyclotomic numbers, shifts by elements of R, multiplicative closure,
// reduction between levels, and the class of -1. Also checks the partition
// and the coset sizes.
Report verify_class_lemmas(const ClassTable& table);
Report verify_class_lemmas(const Params& params);

}  // namespace dhseq

#endif  // DHSEQ_CYCLOTOMY_HPP
