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
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dhseq/adic.hpp"
#include "dhseq/cli.hpp"
#include "dhseq/cyclofield.hpp"
#include "dhseq/cyclotomy.hpp"
#include "dhseq/fcsr.hpp"
#include "dhseq/sequence.hpp"
#include "dhseq/serialize.hpp"
#include "dhseq/sweep.hpp"

namespace py = pybind11;

// mpz_class <-> Python int, through the decimal string.
namespace pybind11::detail {
template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    value = mpz_class(py::str(src).cast<std::string>());
    return true;
  }
  static handle cast(const mpz_class& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

using namespace dhseq;

namespace {

ResultantMethod parse_method(const std::string& m) {
  if (m == "auto") return ResultantMethod::Auto;
  if (m == "sylvester") return ResultantMethod::Sylvester;
  if (m == "modular") return ResultantMethod::Modular;
  throw std::invalid_argument("unknown resultant method '" + m + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ding-Helleseth generalized cyclotomic sequences: exact construction and checks";

  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_ValueError);

  py::class_<Params>(m, "Params")
      .def(py::init([](std::uint64_t p, unsigned n, std::optional<std::uint64_t> g) {
             return Params::make(p, n, g);
           }),
           py::arg("p"), py::arg("n"), py::arg("g") = py::none())
      .def_property_readonly("p", &Params::p)
      .def_property_readonly("n", &Params::n)
      .def_property_readonly("g", &Params::g)
      .def_property_readonly("N", &Params::N)
      .def("__repr__", [](const Params& p) {
        std::ostringstream s;
        s << "Params(p=" << p.p() << ", n=" << p.n() << ", g=" << p.g() << ")";
        return s.str();
      });

  m.def("is_prime", &is_prime);
  m.def("multiplicative_order", &multiplicative_order, py::arg("a"), py::arg("m"));
  m.def("find_primitive_root", &find_primitive_root, py::arg("p"), py::arg("n"));

  py::class_<ClassTable>(m, "ClassTable")
      .def(py::init<const Params&>())
      .def_property_readonly("params", &ClassTable::params)
      .def("label",
           [](const ClassTable& t, std::uint64_t x) -> std::optional<std::pair<unsigned, unsigned>> {
             const Label l = t.label(x);
             if (l.is_zero()) return std::nullopt;
             return std::make_pair(static_cast<unsigned>(l.level), static_cast<unsigned>(l.cls));
           })
      .def("coset", &ClassTable::coset, py::arg("m"), py::arg("i"))
      .def("embedded_coset", &ClassTable::embedded_coset, py::arg("m"), py::arg("i"))
      .def("multiples_of_p", py::overload_cast<>(&ClassTable::multiples_of_p, py::const_))
      .def("c0", &ClassTable::c0)
      .def("c1", &ClassTable::c1)
      .def("to_json", [](const ClassTable& t) { return to_json(t).dump(); });

  m.def("build_classes", &build_classes);
  m.def("cyclotomic_number", &cyclotomic_number, py::arg("table"), py::arg("i"), py::arg("j"));

  py::class_<Check>(m, "Check")
      .def_readonly("name", &Check::name)
      .def_property_readonly("status", [](const Check& c) { return std::string(to_string(c.status)); })
      .def_readonly("detail", &Check::detail);

  py::class_<Report>(m, "Report")
      .def_property_readonly("suite", &Report::suite)
      .def_property_readonly("passed", &Report::passed)
      .def_property_readonly("checks", &Report::checks)
      .def("to_json", [](const Report& r) { return to_json(r).dump(); });

  m.def("verify_class_lemmas", py::overload_cast<const Params&>(&verify_class_lemmas));

  py::class_<BinarySeq>(m, "BinarySeq")
      .def_static("from_bits", &BinarySeq::from_bits)
      .def_static("from_string", &BinarySeq::from_string)
      .def_readonly("params", &BinarySeq::params)
      .def_readonly("bits", &BinarySeq::bits)
      .def("__len__", &BinarySeq::size)
      .def("__str__", &to_bit_string);

  m.def("generate",
        [](const ClassTable& t, bool complement) {
          return generate(t, complement ? Polarity::Complement : Polarity::Standard);
        },
        py::arg("table"), py::arg("complement") = false);
  m.def("s_of_two", &s_of_two);
  m.def("weight", &weight);
  m.def("linear_complexity_via_gcd", &linear_complexity_via_gcd);
  m.def("berlekamp_massey", py::overload_cast<const BinarySeq&>(&berlekamp_massey));

  py::class_<CycInt>(m, "CycInt")
      .def_property_readonly("coeffs", &CycInt::coeffs)
      .def("is_zero", &CycInt::is_zero)
      .def("__add__", [](const CycInt& a, const CycInt& b) { return a + b; })
      .def("__sub__", [](const CycInt& a, const CycInt& b) { return a - b; })
      .def("__mul__", [](const CycInt& a, const CycInt& b) { return a * b; })
      .def("__eq__", [](const CycInt& a, const CycInt& b) { return a == b; })
      .def("__str__", &CycInt::to_string)
      .def("to_json", [](const CycInt& v) { return to_json(v).dump(); });

  m.def("cyc_reduce",
        [](const Params& p, const std::vector<std::uint64_t>& exps) {
          return cyc_reduce(CycloRing::of(p), exps);
        },
        py::arg("params"), py::arg("exponents"));
  m.def("gauss_period", &gauss_period, py::arg("table"), py::arg("i"), py::arg("m"));
  m.def("verify_gauss_theorems", &verify_gauss_theorems);

  py::class_<SpectralValue>(m, "SpectralValue")
      .def_readonly("a", &SpectralValue::a)
      .def_readonly("m", &SpectralValue::m)
      .def_property_readonly("branch",
                             [](const SpectralValue& v) {
                               switch (v.branch) {
                                 case SpectralBranch::Zero: return "zero";
                                 case SpectralBranch::Class0: return "class0";
                                 case SpectralBranch::Class1: return "class1";
                               }
                               return "zero";
                             })
      .def_readonly("value", &SpectralValue::value)
      .def_readonly("expected", &SpectralValue::expected)
      .def_readonly("matches", &SpectralValue::matches);
  m.def("eval_S_at_root", &eval_S_at_root, py::arg("table"), py::arg("seq"), py::arg("a"));

  py::class_<ComplexityReport>(m, "ComplexityReport")
      .def_readonly("N", &ComplexityReport::N)
      .def_readonly("s2", &ComplexityReport::s2)
      .def_readonly("modulus", &ComplexityReport::modulus)
      .def_readonly("gcd", &ComplexityReport::gcd)
      .def_readonly("phi2", &ComplexityReport::phi2)
      .def_readonly("bound", &ComplexityReport::bound)
      .def_readonly("bound_ok", &ComplexityReport::bound_ok)
      .def_readonly("half_period_ok", &ComplexityReport::half_period_ok)
      .def_readonly("maximal", &ComplexityReport::maximal)
      .def("to_json", [](const ComplexityReport& r) { return to_json(r).dump(); });
  m.def("two_adic_complexity", &two_adic_complexity);

  m.def("det_closed_form", &det_closed_form);
  m.def("det_resultant",
        [](const BinarySeq& s, std::uint64_t cap, const std::string& method) {
          return det_resultant(s, cap, parse_method(method));
        },
        py::arg("seq"), py::arg("cap") = kDefaultResultantCap, py::arg("method") = "auto");
  m.def("verify_divisibility", &verify_divisibility, py::arg("seq"), py::arg("det"));
  m.def("verify_lower_bound", &verify_lower_bound);

  py::class_<RationalApprox>(m, "RationalApprox")
      .def_readonly("f", &RationalApprox::f)
      .def_readonly("q", &RationalApprox::q)
      .def_readonly("prefix_len", &RationalApprox::prefix_len);
  m.def("rational_approximation",
        [](const std::vector<std::uint8_t>& bits) { return rational_approximation(bits); });
  m.def("cross_check", &cross_check, py::arg("seq"), py::arg("cap") = kDefaultFcsrCap);

  m.def("run_suite",
        [](const Params& p, const std::string& suite, std::uint64_t resultant_cap, std::uint64_t fcsr_cap) {
          Caps caps;
          caps.resultant = resultant_cap;
          caps.fcsr = fcsr_cap;
          return run_suite(p, parse_suite(suite), caps);
        },
        py::arg("params"), py::arg("suite") = "all", py::arg("resultant_cap") = kDefaultResultantCap,
        py::arg("fcsr_cap") = kDefaultFcsrCap);

  m.def("sweep_csv",
        [](std::uint64_t p_max, std::optional<unsigned> n_max) {
          SweepConfig cfg;
          cfg.p_max = p_max;
          cfg.n_max = n_max;
          std::ostringstream out;
          write_sweep_csv(out, run_sweep(cfg));
          return out.str();
        },
        py::arg("p_max") = 13, py::arg("n_max") = py::none());

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int code = run_cli(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        "Run the command line in-process; returns (exit_code, stdout, stderr).");
}
