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
#include "dhseq/serialize.hpp"

namespace dhseq {

namespace {

Json params_json(const Params& p) {
  return Json{{"p", p.p()}, {"n", p.n()}, {"g", p.g()}, {"N", p.N()}};
}

}  // namespace

Json to_json(const ClassTable& table) {
  const Params& pr = table.params();
  Json classes = {{"D0", table.coset(pr.n(), 0)},
                  {"D1", table.coset(pr.n(), 1)},
                  {"R", table.multiples_of_p()}};
  return Json{{"p", pr.p()}, {"n", pr.n()}, {"g", pr.g()}, {"classes", classes}, {"C1", table.c1()}};
}

Json to_json(const BinarySeq& seq) {
  Json j = Json::object();
  if (seq.params) {
    j["p"] = seq.params->p();
    j["n"] = seq.params->n();
    j["g"] = seq.params->g();
  }
  j["bits"] = to_bit_string(seq);
  return j;
}

Json to_json(const CycInt& value) {
  Json coeffs = Json::array();
  for (const auto& c : value.coeffs()) coeffs.push_back(c.get_str());
  return Json{{"coeffs", coeffs}, {"is_zero", value.is_zero()}};
}

Json to_json(const ComplexityReport& r) {
  Json j = Json::object();
  if (r.params) {
    j["p"] = r.params->p();
    j["n"] = r.params->n();
    j["g"] = r.params->g();
  }
  j["N"] = r.N;
  j["S2"] = r.s2.get_str();
  j["modulus"] = r.modulus.get_str();
  j["gcd"] = r.gcd.get_str();
  j["phi2"] = r.phi2;
  j["bound"] = r.bound ? Json(*r.bound) : Json(nullptr);
  j["bound_ok"] = r.bound_ok;
  j["half_period_ok"] = r.half_period_ok;
  j["maximal"] = r.maximal;
  return j;
}

Json to_json(const DetReport& r) {
  Json j = params_json(r.params);
  j["det_closed"] = r.det_closed.get_str();
  j["det_resultant"] = r.det_resultant ? Json(r.det_resultant->get_str()) : Json(nullptr);
  j["match"] = r.match;
  j["divisibility_ok"] = r.divisibility_ok;
  return j;
}

Json to_json(const RationalApprox& a) {
  return Json{{"f", a.f.get_str()}, {"q", a.q.get_str()}, {"bits_used", a.prefix_len}};
}

Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks()) {
    Json e{{"name", c.name}, {"status", to_string(c.status)}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  return Json{{"suite", r.suite()}, {"passed", r.passed()}, {"checks", checks}};
}

Json to_json(const SweepRow& row) {
  return Json{{"p", row.p},
              {"n", row.n},
              {"N", row.N},
              {"S2", row.s2.get_str()},
              {"gcd", row.gcd.get_str()},
              {"phi2", row.phi2},
              {"bound", row.bound},
              {"bound_ok", row.bound_ok},
              {"det_match", to_string(row.det_match)},
              {"gauss_ok", to_string(row.gauss_ok)},
              {"fcsr_match", to_string(row.fcsr_match)},
              {"lemmas_ok", to_string(row.lemmas_ok)},
              {"maximal", row.maximal}};
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "p,n,N,S2,gcd,phi2,bound,bound_ok,det_match,gauss_ok,fcsr_match,lemmas_ok,maximal\n";
  for (const auto& r : rows) {
    out << r.p << ',' << r.n << ',' << r.N << ',' << r.s2.get_str() << ',' << r.gcd.get_str() << ','
        << r.phi2 << ',' << r.bound << ',' << (r.bound_ok ? "true" : "false") << ','
        << to_string(r.det_match) << ',' << to_string(r.gauss_ok) << ',' << to_string(r.fcsr_match)
        << ',' << to_string(r.lemmas_ok) << ',' << (r.maximal ? "true" : "false") << '\n';
  }
}

Json sweep_to_json(const std::vector<SweepRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) arr.push_back(to_json(r));
  return Json{{"rows", arr}};
}

}  // namespace dhseq
