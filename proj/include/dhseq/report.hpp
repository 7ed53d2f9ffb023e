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
#ifndef DHSEQ_REPORT_HPP
#define DHSEQ_REPORT_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace dhseq {

enum class Status { Pass, Fail, Skipped };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "fail";
}

struct Check {
  std::string name;
  Status status = Status::Fail;
  std::string detail;  // counterexample or offending value on failure
};

/// Named pass/fail entries from one verification suite. Failures are data,
/// not exceptions; a report passes when no entry failed (skips are neutral).
class Report {
public:
  Report() = default;
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  void add(std::string name, bool ok, std::string detail = {}) {
    checks_.push_back({std::move(name), ok ? Status::Pass : Status::Fail, std::move(detail)});
  }
  void skip(std::string name, std::string reason) {
    checks_.push_back({std::move(name), Status::Skipped, std::move(reason)});
  }
  void append(const Report& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  }

  bool passed() const {
    return std::none_of(checks_.begin(), checks_.end(),
                        [](const Check& c) { return c.status == Status::Fail; });
  }
  const std::string& suite() const { return suite_; }
  const std::vector<Check>& checks() const { return checks_; }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks_)
      if (c.name == name) return &c;
    return nullptr;
  }

private:
  std::string suite_;
  std::vector<Check> checks_;
};

}  // namespace dhseq

#endif  // DHSEQ_REPORT_HPP
