#pragma once

#include <string>
#include <utility>
#include <vector>

namespace chardeg {

enum class Status { Pass, Fail, ExpectedFail, Skipped, AwaitingGenerators, Undecided };

inline const char *to_string(Status s) {
  switch (s) {
  case Status::Pass: return "pass";
  case Status::Fail: return "fail";
  case Status::ExpectedFail: return "expected-fail";
  case Status::Skipped: return "skipped";
  case Status::AwaitingGenerators: return "awaiting-generators";
  case Status::Undecided: return "undecided";
  }
  return "?";
}

/// Fail and Undecided are the only statuses that break a run.
inline bool is_unexpected(Status s) { return s == Status::Fail || s == Status::Undecided; }

/// One verified (or skipped) inequality. Every number in `values` is an exact
/// decimal integer or rational string.
struct CheckReport {
  std::string id;       // stable, sortable identifier, e.g. "alt-base-case/n=07"
  std::string claim;    // the inequality or property being checked
  Status status = Status::Skipped;
  std::vector<std::pair<std::string, std::string>> values;
  std::string witness;
  std::string reason;   // required for skipped / awaiting-generators / expected-fail
  double runtime_ms = 0;

  CheckReport &value(std::string key, std::string v) {
    values.emplace_back(std::move(key), std::move(v));
    return *this;
  }

  const std::string *find(const std::string &key) const {
    for (const auto &[k, v] : values)
      if (k == key) return &v;
    return nullptr;
  }
};

inline CheckReport make_check(std::string id, std::string claim, bool holds) {
  CheckReport r;
  r.id = std::move(id);
  r.claim = std::move(claim);
  r.status = holds ? Status::Pass : Status::Fail;
  return r;
}

inline CheckReport make_skip(std::string id, std::string claim, Status status, std::string reason) {
  CheckReport r;
  r.id = std::move(id);
  r.claim = std::move(claim);
  r.status = status;
  r.reason = std::move(reason);
  return r;
}

} // namespace chardeg
