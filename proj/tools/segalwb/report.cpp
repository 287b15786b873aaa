#include "report.hpp"

#include <chrono>
#include <iomanip>

#include "segal/error.hpp"

namespace segalwb {

namespace {

// Continuation lines of multi-line values stay indented under the key.
void field(std::ostream& out, const std::string& key, const std::string& value) {
  out << "      " << key << ": ";
  for (char ch : value.substr(0, value.find_last_not_of('\n') + 1)) {
    out << ch;
    if (ch == '\n') out << std::string(8 + key.size(), ' ');
  }
  out << "\n";
}

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

void Report::run(const std::string& name, const std::string& anchor, const std::function<CheckResult()>& body) {
  Entry e{name, anchor};
  auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = body();
  } catch (const segal::VerificationError& ex) {
    r.failure = ex.what();
  }
  e.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  e.data = std::move(r.data);
  if (r.skipped) {
    e.status = Status::Skipped;
  } else if (r.failure) {
    e.status = Status::Fail;
    e.witness = *r.failure;
  }
  entries_.push_back(std::move(e));
}

bool Report::all_pass() const {
  for (const auto& e : entries_)
    if (e.status == Status::Fail) return false;
  return true;
}

void Report::write_human(std::ostream& out) const {
  int pass = 0, fail = 0, skip = 0;
  for (const auto& e : entries_) {
    const char* tag = e.status == Status::Pass ? "PASS" : e.status == Status::Fail ? "FAIL" : "SKIP";
    out << tag << "  " << e.name << "  (" << std::fixed << std::setprecision(3) << e.seconds << " s)\n";
    out << "      " << e.anchor << "\n";
    if (!e.data.is_null())
      for (const auto& [k, v] : e.data.items()) field(out, k, v.is_string() ? v.get<std::string>() : v.dump());
    if (!e.witness.is_null()) field(out, "witness", e.witness.get<std::string>());
    (e.status == Status::Pass ? pass : e.status == Status::Fail ? fail : skip)++;
  }
  out << entries_.size() << " checks: " << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
}

void Report::write_jsonl(std::ostream& out) const {
  for (const auto& e : entries_) {
    nlohmann::json j{{"name", e.name},     {"anchor", e.anchor}, {"status", to_string(e.status)},
                     {"witness", e.witness}, {"data", e.data},     {"seconds", e.seconds}};
    out << j.dump() << "\n";
  }
}

}  // namespace segalwb
