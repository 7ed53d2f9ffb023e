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
#ifndef DHSEQ_SERIALIZE_HPP
#define DHSEQ_SERIALIZE_HPP

#include <ostream>
#include <vector>

#include <json.hpp>

#include "dhseq/adic.hpp"
#include "dhseq/cyclofield.hpp"
#include "dhseq/cyclotomy.hpp"
#include "dhseq/fcsr.hpp"
#include "dhseq/report.hpp"
#include "dhseq/sequence.hpp"
#include "dhseq/sweep.hpp"

// JSON views of the library types. Key order is fixed; big integers are
// always decimal strings.
namespace dhseq {

using Json = nlohmann::ordered_json;

Json to_json(const ClassTable& table);
// {"p","n","g","bits"}; bits is a '0'/'1' string with s_0 first.
Json to_json(const BinarySeq& seq);
Json to_json(const CycInt& value);
Json to_json(const ComplexityReport& report);
Json to_json(const DetReport& report);
Json to_json(const RationalApprox& approx);
Json to_json(const Report& report);
Json to_json(const SweepRow& row);

// Columns: p,n,N,S2,gcd,phi2,bound,bound_ok,det_match,gauss_ok,fcsr_match,lemmas_ok,maximal
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
Json sweep_to_json(const std::vector<SweepRow>& rows);

}  // namespace dhseq

#endif  // DHSEQ_SERIALIZE_HPP
