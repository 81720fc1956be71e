#pragma once

#include <string>
#include <vector>

namespace pec {

// Outcome of one named runtime verifier. Failures are data, not exceptions:
// the verified statements are theorems, so a fail indicates a bug (or an
// input that violates a caller-asserted precondition).
struct CheckResult {
  enum class Status { pass, fail, skipped };
  std::string name;
  Status status = Status::pass;
  std::string detail;
};

inline CheckResult check_pass(std::string name, std::string detail = "") {
  return {std::move(name), CheckResult::Status::pass, std::move(detail)};
}
inline CheckResult check_fail(std::string name, std::string detail) {
  return {std::move(name), CheckResult::Status::fail, std::move(detail)};
}
inline CheckResult check_skip(std::string name, std::string detail) {
  return {std::move(name), CheckResult::Status::skipped, std::move(detail)};
}

}  // namespace pec
