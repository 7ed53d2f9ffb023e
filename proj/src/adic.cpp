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
#include "dhseq/adic.hpp"

#include <stdexcept>
#include <string>

#include "dhseq/cyclotomy.hpp"

namespace dhseq {

ComplexityReport two_adic_complexity(const BinarySeq& seq) {
  ComplexityReport r;
  r.params = seq.params;
  r.N = seq.size();
  r.s2 = s_of_two(seq);
  r.modulus = mersenne(r.N);
  r.gcd = gcd(r.s2, r.modulus);
  BigInt q;
  mpz_divexact(q.get_mpz_t(), r.modulus.get_mpz_t(), r.gcd.get_mpz_t());
  r.phi2 = mpz_sizeinbase(q.get_mpz_t(), 2) - 1;
  r.maximal = r.gcd == 1;
  r.half_period_ok = r.phi2 >= (r.N + 2) / 2;
  if (seq.params) {
    const Params& pr = *seq.params;
    r.bound = pr.N() - pr.p_pow(pr.n() - 1) - 1;
    r.bound_ok = r.phi2 >= *r.bound;
  }
  return r;
}

BigInt det_closed_form(const Params& params) {
  const std::uint64_t p = params.p();
  const unsigned n = params.n();
  const BigInt P = to_big(p);
  BigInt pn;
  mpz_pow_ui(pn.get_mpz_t(), P.get_mpz_t(), n);
  BigInt det = (pn + 1) / 2;
  const int sign = params.p_is_1_mod_4() ? -1 : 1;
  for (unsigned m = 0; m < n; ++m) {
    BigInt base;
    mpz_pow_ui(base.get_mpz_t(), P.get_mpz_t(), 2 * m + 1);
    base += sign;
    if (mpz_divisible_ui_p(base.get_mpz_t(), 4) == 0)
      throw std::logic_error("det_closed_form: base factor for m = " + std::to_string(m) +
                             " is not divisible by 4");
    base /= 4;
    const std::uint64_t e = params.p_pow(n - m - 1) * (p - 1) / 2;
    BigInt term;
    mpz_pow_ui(term.get_mpz_t(), base.get_mpz_t(), e);
    det *= term;
  }
  return det;
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("bareiss_determinant: matrix is not square");
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = a[i][j] * a[k][k];
        mpz_submul(t.get_mpz_t(), a[i][k].get_mpz_t(), a[k][j].get_mpz_t());
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

namespace {

IntPoly trimmed(IntPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

using ModPoly = std::vector<std::uint64_t>;

void trim_mod(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t q) { return pow_mod(a, q - 2, q); }

// a mod b over F_q; b trimmed and nonzero.
ModPoly rem_mod(ModPoly a, const ModPoly& b, std::uint64_t q) {
  const std::size_t db = b.size() - 1;
  const std::uint64_t inv_lc = inv_mod(b.back(), q);
  trim_mod(a);
  while (a.size() > db) {
    const std::uint64_t factor = a.back() * inv_lc % q;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t k = 0; k <= db; ++k) a[shift + k] = (a[shift + k] + (q - factor) * b[k]) % q;
    trim_mod(a);
  }
  return a;
}

std::uint64_t resultant_mod(ModPoly a, ModPoly b, std::uint64_t q) {
  trim_mod(a);
  trim_mod(b);
  if (a.empty() || b.empty()) return 0;
  std::uint64_t result = 1;
  while (true) {
    const std::size_t da = a.size() - 1, db = b.size() - 1;
    if (db == 0) return result * pow_mod(b[0], da, q) % q;
    ModPoly r = rem_mod(a, b, q);
    if (r.empty()) return 0;
    const std::size_t dr = r.size() - 1;
    // Res(a, b) = (-1)^{da db} lc(b)^{da - dr} Res(b, r)
    result = result * pow_mod(b.back(), da - dr, q) % q;
    if ((da * db) % 2 == 1) result = (q - result) % q;
    a = std::move(b);
    b = std::move(r);
  }
}

BigInt sum_of_squares(const IntPoly& f) {
  BigInt s = 0;
  for (const auto& c : f) s += c * c;
  return s;
}

}  // namespace

std::vector<std::vector<BigInt>> sylvester_matrix(const IntPoly& f0, const IntPoly& g0) {
  const IntPoly f = trimmed(f0), g = trimmed(g0);
  if (f.empty() || g.empty()) throw std::invalid_argument("sylvester_matrix: zero polynomial");
  const std::size_t df = f.size() - 1, dg = g.size() - 1;
  const std::size_t size = df + dg;
  std::vector<std::vector<BigInt>> m(size, std::vector<BigInt>(size));
  for (std::size_t r = 0; r < dg; ++r)
    for (std::size_t k = 0; k <= df; ++k) m[r][r + k] = f[df - k];
  for (std::size_t r = 0; r < df; ++r)
    for (std::size_t k = 0; k <= dg; ++k) m[dg + r][r + k] = g[dg - k];
  return m;
}

BigInt resultant_sylvester(const IntPoly& f, const IntPoly& g) {
  if (trimmed(f).empty() || trimmed(g).empty()) return 0;
  return bareiss_determinant(sylvester_matrix(f, g));
}

BigInt resultant_modular(const IntPoly& f0, const IntPoly& g0) {
  const IntPoly f = trimmed(f0), g = trimmed(g0);
  if (f.empty() || g.empty()) return 0;
  const std::size_t df = f.size() - 1, dg = g.size() - 1;

  // |Res|^2 <= |f|^{2 dg} |g|^{2 df}; stop once M^2 > 4 * bound^2.
  BigInt bound_sq, t;
  mpz_pow_ui(bound_sq.get_mpz_t(), sum_of_squares(f).get_mpz_t(), dg);
  mpz_pow_ui(t.get_mpz_t(), sum_of_squares(g).get_mpz_t(), df);
  bound_sq *= t;
  const BigInt target = 4 * bound_sq;

  BigInt value = 0, modulus = 1;
  std::uint64_t q = (std::uint64_t{1} << 31) - 1;
  while (modulus * modulus <= target) {
    for (; q > 2; q -= 2) {
      if (!is_prime(q)) continue;
      if (mpz_fdiv_ui(f.back().get_mpz_t(), q) == 0 || mpz_fdiv_ui(g.back().get_mpz_t(), q) == 0)
        continue;
      break;
    }
    if (q <= 2) throw std::runtime_error("resultant_modular: ran out of primes");
    ModPoly fm(f.size()), gm(g.size());
    for (std::size_t i = 0; i < f.size(); ++i) fm[i] = mpz_fdiv_ui(f[i].get_mpz_t(), q);
    for (std::size_t i = 0; i < g.size(); ++i) gm[i] = mpz_fdiv_ui(g[i].get_mpz_t(), q);
    const std::uint64_t r = resultant_mod(fm, gm, q);

    // CRT: value' = value + modulus * ((r - value) * modulus^{-1} mod q)
    const std::uint64_t vq = mpz_fdiv_ui(value.get_mpz_t(), q);
    const std::uint64_t mq = mpz_fdiv_ui(modulus.get_mpz_t(), q);
    const std::uint64_t k = (r + q - vq) % q * inv_mod(mq, q) % q;
    value += modulus * to_big(k);
    modulus *= to_big(q);
    q -= 2;
  }
  if (2 * value > modulus) value -= modulus;
  return value;
}

BigInt det_resultant(const BinarySeq& seq, std::uint64_t cap, ResultantMethod method) {
  const std::uint64_t N = seq.size();
  if (N == 0) throw std::invalid_argument("det_resultant: empty sequence");
  if (N > cap)
    throw CapExceeded("det_resultant: N = " + std::to_string(N) + " exceeds resultant cap " +
                      std::to_string(cap));
  IntPoly f(N + 1, 0);
  f[0] = -1;
  f[N] = 1;
  IntPoly s(N);
  for (std::uint64_t i = 0; i < N; ++i) s[i] = seq.bits[i];
  if (method == ResultantMethod::Auto)
    method = N <= kSylvesterLimit ? ResultantMethod::Sylvester : ResultantMethod::Modular;
  return method == ResultantMethod::Sylvester ? resultant_sylvester(f, s) : resultant_modular(f, s);
}

bool verify_divisibility(const BinarySeq& seq, const BigInt& det) {
  if (det == 0) throw std::invalid_argument("verify_divisibility: det(A) = 0");
  const BigInt modulus = mersenne(seq.size());
  const BigInt lhs = gcd(s_of_two(seq), modulus);
  const BigInt rhs = gcd(det, modulus);
  return mpz_divisible_p(rhs.get_mpz_t(), lhs.get_mpz_t()) != 0;
}

DetReport det_report(const Params& params, std::uint64_t cap) {
  const BinarySeq seq = generate(ClassTable(params));
  DetReport r{params, det_closed_form(params), std::nullopt, false, false};
  if (params.N() <= cap) {
    r.det_resultant = det_resultant(seq, cap);
    r.match = *r.det_resultant == r.det_closed;
  }
  r.divisibility_ok = r.det_closed != 0 && verify_divisibility(seq, r.det_closed);
  return r;
}

namespace {

void add_lower_bound_checks(const Params& params, const ComplexityReport& c, Report& r) {
  r.add("phi2_ge_bound", c.bound_ok,
        "phi2 = " + std::to_string(c.phi2) + ", bound = " + std::to_string(*c.bound));
  const BigInt lower = mersenne(params.p_pow(params.n() - 1));
  r.add("gcd_divides_2^{p^{n-1}}-1", mpz_divisible_p(lower.get_mpz_t(), c.gcd.get_mpz_t()) != 0,
        "gcd = " + c.gcd.get_str());
}

}  // namespace

Report verify_lower_bound(const Params& params) {
  const BinarySeq seq = generate(ClassTable(params));
  const ComplexityReport c = two_adic_complexity(seq);
  Report r("lower_bound");
  add_lower_bound_checks(params, c, r);
  return r;
}

Report verify_adic(const Params& params, std::uint64_t resultant_cap) {
  const BinarySeq seq = generate(ClassTable(params));
  const ComplexityReport c = two_adic_complexity(seq);
  Report r("adic");
  add_lower_bound_checks(params, c, r);

  const BigInt det = det_closed_form(params);
  r.add("det_nonzero", det != 0);
  if (det != 0) r.add("gcd_S2_divides_gcd_det", verify_divisibility(seq, det));

  if (params.n() >= 2) {
    for (unsigned m = 1; m < params.n(); ++m) {
      const GcdIdentity id = check_gcd_identity(params, m);
      const std::string tag = ".m" + std::to_string(m);
      r.add("mersenne_gcd_identity" + tag, id.equal,
            "lhs = " + id.lhs.get_str() + ", rhs = " + id.rhs.get_str());
      r.add("mersenne_gcd_is_one" + tag, id.lhs == 1, "lhs = " + id.lhs.get_str());
    }
  } else {
    r.skip("mersenne_gcd_identity", "needs n >= 2");
  }

  if (params.N() <= resultant_cap) {
    const BigInt res = det_resultant(seq, resultant_cap);
    r.add("det_closed_equals_resultant", res == det,
          "closed = " + det.get_str() + ", resultant = " + res.get_str());
  } else {
    r.skip("det_closed_equals_resultant",
           "N = " + std::to_string(params.N()) + " exceeds resultant cap " +
               std::to_string(resultant_cap));
  }
  return r;
}

}  // namespace dhseq
