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
#include "dhseq/cyclotomy.hpp"

#include <stdexcept>
#include <string>

namespace dhseq {

ClassTable::ClassTable(const Params& params) : params_(params) {
  const unsigned n = params_.n();
  const std::uint64_t p = params_.p();
  level_class_.resize(n + 1);
  for (unsigned m = 1; m <= n; ++m) {
    const std::uint64_t mod = params_.p_pow(m);
    const std::uint64_t phi = phi_prime_power(p, m);
    const std::uint64_t gm = params_.g() % mod;
    auto& cls = level_class_[m];
    cls.assign(mod, -1);
    std::uint64_t x = 1;
    for (std::uint64_t k = 0; k < phi; ++k) {
      if (cls[x] != -1) throw std::logic_error("generator is not primitive modulo p^m");
      cls[x] = static_cast<std::int8_t>(k % 2);
      x = x * gm % mod;
    }
  }

  const std::uint64_t N = params_.N();
  labels_.assign(N, Label{});
  for (std::uint64_t x = 1; x < N; ++x) {
    const unsigned v = valuation(x, p);
    const unsigned m = n - v;
    const std::uint64_t u = x / params_.p_pow(v);
    labels_[x] = Label{static_cast<std::uint8_t>(m),
                       static_cast<std::uint8_t>(level_class_[m][u])};
  }
}

int ClassTable::class_at_level(unsigned m, std::uint64_t u) const {
  if (m < 1 || m > params_.n()) throw std::out_of_range("class_at_level: bad level");
  return level_class_[m][u % params_.p_pow(m)];
}

std::vector<std::uint64_t> ClassTable::coset(unsigned m, int i) const {
  if (m < 1 || m > params_.n()) throw std::out_of_range("coset: bad level");
  std::vector<std::uint64_t> out;
  const auto& cls = level_class_[m];
  for (std::uint64_t u = 0; u < cls.size(); ++u)
    if (cls[u] == i) out.push_back(u);
  return out;
}

std::vector<std::uint64_t> ClassTable::embedded_coset(unsigned m, int i) const {
  auto out = coset(m, i);
  const std::uint64_t scale = params_.p_pow(params_.n() - m);
  for (auto& x : out) x *= scale;
  return out;
}

std::vector<std::uint64_t> ClassTable::multiples_of_p(unsigned m) const {
  std::vector<std::uint64_t> out;
  const std::uint64_t mod = params_.p_pow(m);
  for (std::uint64_t x = 0; x < mod; x += params_.p()) out.push_back(x);
  return out;
}

std::vector<std::uint64_t> ClassTable::c0() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < N(); ++x)
    if (!labels_[x].is_zero() && labels_[x].cls == 0) out.push_back(x);
  return out;
}

std::vector<std::uint64_t> ClassTable::c1() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < N(); ++x)
    if (labels_[x].is_zero() || labels_[x].cls == 1) out.push_back(x);
  return out;
}

ClassTable build_classes(const Params& params) { return ClassTable(params); }

std::uint64_t cyclotomic_number(const ClassTable& table, int i, int j) {
  const unsigned n = table.params().n();
  const std::uint64_t N = table.N();
  std::uint64_t count = 0;
  for (auto x : table.coset(n, i)) {
    const Label l = table.label((x + 1) % N);
    if (l.level == n && l.cls == j) ++count;
  }
  return count;
}

std::uint64_t shifted_class_hits_R(const ClassTable& table, int i) {
  const std::uint64_t p = table.params().p();
  std::uint64_t count = 0;
  for (auto x : table.coset(table.params().n(), i))
    if ((x + 1) % table.N() % p == 0) ++count;
  return count;
}

namespace {

std::string str(std::uint64_t v) { return std::to_string(v); }

void check_partition(const ClassTable& t, Report& r) {
  const Params& pr = t.params();
  const unsigned n = pr.n();
  std::vector<std::uint64_t> sizes(2 * (n + 1), 0);
  std::uint64_t zeros = 0;
  for (std::uint64_t x = 0; x < t.N(); ++x) {
    const Label l = t.label(x);
    if (l.is_zero()) {
      ++zeros;
      if (x != 0) {
        r.add("partition", false, "residue " + str(x) + " labelled zero");
        return;
      }
    } else {
      ++sizes[2 * l.level + l.cls];
    }
  }
  bool ok = zeros == 1;
  std::string detail;
  for (unsigned m = 1; m <= n && ok; ++m) {
    const std::uint64_t want = phi_prime_power(pr.p(), m) / 2;
    for (int i = 0; i < 2; ++i) {
      if (sizes[2 * m + i] != want) {
        ok = false;
        detail = "|p^{n-m} D_" + std::to_string(i) + "^{(p^" + std::to_string(m) + ")}| = " +
                 str(sizes[2 * m + i]) + ", expected " + str(want);
      }
    }
  }
  r.add("partition", ok, detail);

  const auto c0 = t.c0().size(), c1 = t.c1().size();
  r.add("partition.C_sizes", c0 == (t.N() - 1) / 2 && c1 == (t.N() + 1) / 2,
        "|C0| = " + str(c0) + ", |C1| = " + str(c1));
}

void check_lemma1(const ClassTable& t, Report& r) {
  const Params& pr = t.params();
  const std::uint64_t top = pr.p_pow(pr.n() - 1);
  const std::uint64_t hit0 = shifted_class_hits_R(t, 0);
  const std::uint64_t hit1 = shifted_class_hits_R(t, 1);
  const std::uint64_t want0 = pr.p_is_1_mod_4() ? top : 0;
  const std::uint64_t want1 = pr.p_is_1_mod_4() ? 0 : top;
  r.add("lemma1.R_cap_D0_plus_1", hit0 == want0, "got " + str(hit0) + ", expected " + str(want0));
  r.add("lemma1.R_cap_D1_plus_1", hit1 == want1, "got " + str(hit1) + ", expected " + str(want1));
}

void check_lemma2(const ClassTable& t, Report& r) {
  const Params& pr = t.params();
  const std::uint64_t p = pr.p();
  const std::uint64_t top = pr.p_pow(pr.n() - 1);
  std::uint64_t want[2][2];
  if (pr.p_is_1_mod_4()) {
    const std::uint64_t common = top * (p - 1) / 4;
    want[0][1] = want[1][0] = want[1][1] = common;
    want[0][0] = top * (p - 5) / 4;
  } else {
    const std::uint64_t common = top * (p - 3) / 4;
    want[1][0] = want[0][0] = want[1][1] = common;
    want[0][1] = top * (p + 1) / 4;
  }
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const std::uint64_t got = cyclotomic_number(t, i, j);
      r.add("lemma2.(" + std::to_string(i) + "," + std::to_string(j) + ")", got == want[i][j],
            "got " + str(got) + ", expected " + str(want[i][j]));
    }
  }
}

void check_lemma3(const ClassTable& t, Report& r) {
  const Params& pr = t.params();
  const unsigned n = pr.n();
  const std::uint64_t N = t.N();
  const std::uint64_t same = phi_prime_power(pr.p(), n) / 2;
  const auto d0 = t.coset(n, 0), d1 = t.coset(n, 1);
  for (auto rr : t.multiples_of_p()) {
    for (int i = 0; i < 2; ++i) {
      std::uint64_t counts[2] = {0, 0};
      for (auto x : (i == 0 ? d0 : d1)) {
        const Label l = t.label((x + rr) % N);
        if (l.level == n) ++counts[l.cls];
      }
      for (int j = 0; j < 2; ++j) {
        const std::uint64_t want = i == j ? same : 0;
        if (counts[j] != want) {
          r.add("lemma3.shift_by_R", false,
                "r = " + str(rr) + ", |(D_" + std::to_string(i) + "+r) n D_" + std::to_string(j) +
                    "| = " + str(counts[j]) + ", expected " + str(want));
          return;
        }
      }
    }
  }
  r.add("lemma3.shift_by_R", true);
}

void check_lemma4_products(const ClassTable& t, Report& r) {
  const unsigned n = t.params().n();
  const std::uint64_t N = t.N();
  const std::vector<std::uint64_t> d[2] = {t.coset(n, 0), t.coset(n, 1)};
  for (int i = 0; i < 2; ++i) {
    for (auto a : d[i]) {
      for (int j = 0; j < 2; ++j) {
        // a is a unit, so x -> a*x is injective; it suffices that every
        // image lands in the expected class.
        const unsigned want = (i + j) % 2;
        for (auto x : d[j]) {
          const Label l = t.label(static_cast<std::uint64_t>(
              static_cast<unsigned __int128>(a) * x % N));
          if (l.level != n || l.cls != want) {
            r.add("lemma4.products", false,
                  "a = " + str(a) + " in D_" + std::to_string(i) + ", x = " + str(x) + " in D_" +
                      std::to_string(j) + " maps outside D_" + std::to_string(want));
            return;
          }
        }
      }
    }
  }
  r.add("lemma4.products", true);
}

void check_lemma4_reduction(const ClassTable& t, Report& r) {
  const Params& pr = t.params();
  const unsigned n = pr.n();
  if (n < 2) {
    r.skip("lemma4.reduction", "needs n >= 2");
    return;
  }
  for (unsigned n2 = 2; n2 <= n; ++n2) {
    for (unsigned n1 = 1; n1 < n2; ++n1) {
      const std::uint64_t small = pr.p_pow(n1);
      const std::uint64_t mult = pr.p_pow(n2 - n1);
      auto covers = [&](const std::vector<std::uint64_t>& big_set,
                        const std::vector<std::uint64_t>& small_set) {
        std::vector<std::uint64_t> cnt(small, 0);
        for (auto x : big_set) ++cnt[x % small];
        std::vector<bool> in_small(small, false);
        for (auto y : small_set) in_small[y] = true;
        for (std::uint64_t y = 0; y < small; ++y)
          if (cnt[y] != (in_small[y] ? mult : 0)) return false;
        return true;
      };
      const std::string where = " (n1 = " + std::to_string(n1) + ", n2 = " + std::to_string(n2) + ")";
      for (int i = 0; i < 2; ++i) {
        if (!covers(t.coset(n2, i), t.coset(n1, i))) {
          r.add("lemma4.reduction", false, "D_" + std::to_string(i) + where);
          return;
        }
      }
      if (!covers(t.multiples_of_p(n2), t.multiples_of_p(n1))) {
        r.add("lemma4.reduction", false, "R" + where);
        return;
      }
    }
  }
  r.add("lemma4.reduction", true);
}

void check_lemma5(const ClassTable& t, Report& r) {
  const Params& pr = t.params();
  const Label l = t.label(t.N() - 1);
  const unsigned want = pr.p_is_1_mod_4() ? 0 : 1;
  r.add("lemma5.minus_one", l.level == pr.n() && l.cls == want,
        "-1 lies in class " + std::to_string(l.cls) + ", expected " + std::to_string(want));
}

}  // namespace

Report verify_class_lemmas(const ClassTable& table) {
  Report r("cyclotomy");
  check_partition(table, r);
  check_lemma1(table, r);
  check_lemma2(table, r);
  check_lemma3(table, r);
  check_lemma4_products(table, r);
  check_lemma4_reduction(table, r);
  check_lemma5(table, r);
  return r;
}

Report verify_class_lemmas(const Params& params) { return verify_class_lemmas(ClassTable(params)); }

}  // namespace dhseq
