#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qmhs {

enum class Status { pass, fail, report_only };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::report_only:
      return "report-only";
  }
  return "?";
}

using ParamValue = std::variant<long long, std::string>;

/// One checked identity instance with both sides rendered exactly.
struct VerificationReport {
  std::string suite;
  std::vector<std::pair<std::string, ParamValue>> params;
  Status status = Status::pass;
  std::string lhs;
  std::string rhs;
  long long micros = 0;

  bool failed() const { return status == Status::fail; }
};

/// Builds a pass/fail report, timing from `start`.
inline VerificationReport make_report(std::string suite, std::vector<std::pair<std::string, ParamValue>> params,
                                      bool ok, std::string lhs, std::string rhs,
                                      std::chrono::steady_clock::time_point start) {
  VerificationReport r;
  r.suite = std::move(suite);
  r.params = std::move(params);
  r.status = ok ? Status::pass : Status::fail;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.micros = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace qmhs
