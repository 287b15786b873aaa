#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace segalwb {

enum class Status { Pass, Fail, Skipped };
const char* to_string(Status s);

struct Entry {
  std::string name;
  std::string anchor;  // the statement being checked
  Status status = Status::Pass;
  nlohmann::json witness;  // counterexample on failure, null otherwise
  nlohmann::json data;     // computed values worth reporting either way
  double seconds = 0;
};

// Outcome of one check body: nullopt passes, a string is the failure witness.
struct CheckResult {
  std::optional<std::string> failure;
  nlohmann::json data;
  bool skipped = false;
};

class Report {
 public:
  // Times `body` and records it; segal::VerificationError counts as a failure.
  void run(const std::string& name, const std::string& anchor, const std::function<CheckResult()>& body);
  void add(Entry e) { entries_.push_back(std::move(e)); }

  const std::vector<Entry>& entries() const { return entries_; }
  bool all_pass() const;

  void write_human(std::ostream& out) const;
  // One JSON object per line; `seconds` is the only non-deterministic field.
  void write_jsonl(std::ostream& out) const;

 private:
  std::vector<Entry> entries_;
};

}  // namespace segalwb
