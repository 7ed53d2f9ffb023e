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
#include "dhseq/cli.hpp"

#include <fstream>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "dhseq/adic.hpp"
#include "dhseq/cyclotomy.hpp"
#include "dhseq/serialize.hpp"
#include "dhseq/sequence.hpp"
#include "dhseq/sweep.hpp"

namespace dhseq {

namespace {

struct Options {
  std::uint64_t p = 0;
  unsigned n = 0;
  std::optional<std::uint64_t> g;
  std::string format;
  std::string suite = "all";
  std::string method = "both";
  bool complement = false;
  std::vector<std::uint64_t> p_list;
  std::uint64_t p_max = 13;
  std::optional<unsigned> n_max;
  Caps caps;
  unsigned jobs = 1;
  std::string out_path;
};

void add_instance_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--p", o.p, "odd prime p")->required();
  cmd->add_option("--n", o.n, "exponent n >= 1")->required();
  cmd->add_option("--g", o.g, "primitive root of p^n (default: smallest)");
}

void add_cap_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--resultant-cap", o.caps.resultant, "largest N for the resultant determinant");
  cmd->add_option("--fcsr-cap", o.caps.fcsr, "largest N for the rational approximation check");
  cmd->add_option("--classtable-cap", o.caps.classtable, "largest N for class tables");
  cmd->add_option("--spectral-cap", o.caps.spectral, "largest N for exhaustive S(w^a) checks");
}

void check_caps(const Caps& caps) {
  if (caps.resultant == 0 || caps.fcsr == 0 || caps.classtable == 0 || caps.spectral == 0)
    throw std::invalid_argument("caps must be positive");
}

Params instance(const Options& o) {
  Params params = Params::make(o.p, o.n, o.g);
  if (params.N() > o.caps.classtable)
    throw CapExceeded("N = " + std::to_string(params.N()) + " exceeds class-table cap " +
                      std::to_string(o.caps.classtable));
  return params;
}

class Sink {
public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::invalid_argument("cannot open output file " + path);
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }
  void json(const Json& j) { *out_ << j.dump(2) << '\n'; }

private:
  std::ofstream file_;
  std::ostream* out_;
};

int cmd_classes(const Options& o, Sink& sink) {
  sink.json(to_json(ClassTable(instance(o))));
  return kExitOk;
}

int cmd_generate(const Options& o, Sink& sink) {
  const BinarySeq seq =
      generate(ClassTable(instance(o)), o.complement ? Polarity::Complement : Polarity::Standard);
  const std::string fmt = o.format.empty() ? "bits" : o.format;
  if (fmt == "bits") {
    sink.stream() << to_bit_string(seq) << '\n';
  } else if (fmt == "hex") {
    sink.stream() << s_of_two_hex(seq) << '\n';
  } else if (fmt == "json") {
    sink.json(to_json(seq));
  } else {
    throw std::invalid_argument("generate: unknown format '" + fmt + "'");
  }
  return kExitOk;
}

int cmd_complexity(const Options& o, Sink& sink) {
  const Params params = instance(o);
  const BinarySeq seq =
      generate(ClassTable(params), o.complement ? Polarity::Complement : Polarity::Standard);
  sink.json(to_json(two_adic_complexity(seq)));
  return kExitOk;
}

int cmd_det(const Options& o, Sink& sink) {
  const Params params = instance(o);
  if (o.method == "closed") {
    const BigInt det = det_closed_form(params);
    const BinarySeq seq = generate(ClassTable(params));
    DetReport r{params, det, std::nullopt, false, verify_divisibility(seq, det)};
    sink.json(to_json(r));
    return kExitOk;
  }
  if (o.method == "resultant") {
    const BinarySeq seq = generate(ClassTable(params));
    const BigInt det = det_resultant(seq, o.caps.resultant);
    DetReport r{params, det_closed_form(params), det, false, false};
    r.match = r.det_closed == det;
    r.divisibility_ok = det != 0 && verify_divisibility(seq, det);
    Json j = to_json(r);
    j.erase("det_closed");
    j.erase("match");
    sink.json(j);
    return kExitOk;
  }
  if (o.method == "both") {
    if (params.N() > o.caps.resultant)
      throw CapExceeded("N = " + std::to_string(params.N()) + " exceeds resultant cap " +
                        std::to_string(o.caps.resultant));
    const DetReport r = det_report(params, o.caps.resultant);
    sink.json(to_json(r));
    return r.match && r.divisibility_ok ? kExitOk : kExitVerificationFailed;
  }
  throw std::invalid_argument("det: unknown method '" + o.method + "'");
}

int cmd_verify(const Options& o, Sink& sink) {
  const Params params = instance(o);
  const Suite suite = parse_suite(o.suite);
  const auto reports = run_suite(params, suite, o.caps);
  bool ok = true;
  Json suites = Json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    suites.push_back(to_json(r));
  }
  Json j{{"p", params.p()}, {"n", params.n()}, {"g", params.g()}, {"N", params.N()},
         {"suite", to_string(suite)}, {"passed", ok}, {"suites", suites}};
  sink.json(j);
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_sweep(const Options& o, Sink& sink) {
  SweepConfig cfg;
  cfg.p_list = o.p_list;
  cfg.p_max = o.p_max;
  cfg.n_max = o.n_max;
  cfg.caps = o.caps;
  cfg.jobs = o.jobs;
  const auto rows = run_sweep(cfg);
  const std::string fmt = o.format.empty() ? "csv" : o.format;
  if (fmt == "csv") {
    write_sweep_csv(sink.stream(), rows);
  } else if (fmt == "json") {
    sink.json(sweep_to_json(rows));
  } else {
    throw std::invalid_argument("sweep: unknown format '" + fmt + "'");
  }
  for (const auto& r : rows) {
    if (!r.bound_ok || r.det_match == Status::Fail || r.gauss_ok == Status::Fail ||
        r.fcsr_match == Status::Fail || r.lemmas_ok == Status::Fail)
      return kExitVerificationFailed;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ding-Helleseth generalized cyclotomic sequences: construction and exact checks", "dhseq"};
  app.require_subcommand(1);
  Options o;

  auto* classes = app.add_subcommand("classes", "emit the class table as JSON");
  add_instance_options(classes, o);
  classes->add_option("--classtable-cap", o.caps.classtable, "largest N for class tables");

  auto* gen = app.add_subcommand("generate", "emit one period of the sequence");
  add_instance_options(gen, o);
  gen->add_option("--format", o.format, "bits | json | hex (default bits)");
  gen->add_flag("--complement", o.complement, "swap the roles of C0 and C1");
  gen->add_option("--classtable-cap", o.caps.classtable, "largest N for class tables");

  auto* cx = app.add_subcommand("complexity", "emit the 2-adic complexity report");
  add_instance_options(cx, o);
  cx->add_flag("--complement", o.complement, "use the complement sequence");
  cx->add_option("--classtable-cap", o.caps.classtable, "largest N for class tables");

  auto* det = app.add_subcommand("det", "emit the circulant determinant report");
  add_instance_options(det, o);
  det->add_option("--method", o.method, "closed | resultant | both (default both)");
  add_cap_options(det, o);

  auto* ver = app.add_subcommand("verify", "run verification suites");
  add_instance_options(ver, o);
  ver->add_option("--suite", o.suite, "cyclotomy | gauss | adic | fcsr | all (default all)");
  add_cap_options(ver, o);

  auto* sw = app.add_subcommand("sweep", "tabulate checks over a (p, n) grid");
  sw->add_option("--p", o.p_list, "explicit list of odd primes");
  sw->add_option("--p-max", o.p_max, "largest odd prime when --p is absent (default 13)");
  sw->add_option("--n-max", o.n_max, "largest exponent");
  sw->add_option("--format", o.format, "csv | json (default csv)");
  sw->add_option("--jobs", o.jobs, "worker threads");
  add_cap_options(sw, o);

  for (auto* cmd : {classes, gen, cx, det, ver, sw})
    cmd->add_option("--out", o.out_path, "write output to a file instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  try {
    check_caps(o.caps);
    Sink sink(o.out_path, out);
    if (*classes) return cmd_classes(o, sink);
    if (*gen) return cmd_generate(o, sink);
    if (*cx) return cmd_complexity(o, sink);
    if (*det) return cmd_det(o, sink);
    if (*ver) return cmd_verify(o, sink);
    if (*sw) return cmd_sweep(o, sink);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace dhseq
