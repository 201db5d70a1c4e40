#include "idsem/report.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace idsem {

void Report::merge(const Report& other) {
  for (const auto& r : other.records_) records_.push_back(r);
}

CheckRecord& Report::begin_check(const std::string& id, const std::string& subject) {
  records_.push_back(CheckRecord{id, subject, Status::pass, "", 0, 0, 0.0});
  return records_.back();
}

void Report::note_instance(CheckRecord& rec, bool ok, const std::string& detail) {
  ++rec.instances;
  if (!ok) {
    ++rec.violations;
    if (rec.status != Status::fail) {
      rec.status = Status::fail;
      rec.detail = detail;
    }
  }
}

bool Report::ok() const {
  for (const auto& r : records_)
    if (r.status == Status::fail) return false;
  return true;
}

static const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& r : records_) {
    os << (r.status == Status::fail ? "FAIL" : r.status == Status::skipped ? "SKIP" : "ok  ")
       << "  " << r.id << "  [" << r.subject << "]"
       << "  instances=" << r.instances;
    if (r.violations) os << " violations=" << r.violations;
    if (!r.detail.empty()) os << "\n      " << r.detail;
    os << "\n";
  }
  os << (ok() ? "ALL CHECKS PASSED" : "CHECK FAILURES PRESENT") << "\n";
  return os.str();
}

std::string Report::to_json(bool with_timing) const {
  nlohmann::json j;
  j["format"] = "idsem-report/1";
  j["ok"] = ok();
  auto& arr = j["checks"] = nlohmann::json::array();
  for (const auto& r : records_) {
    nlohmann::json c;
    c["id"] = r.id;
    c["subject"] = r.subject;
    c["status"] = status_name(r.status);
    c["instances"] = r.instances;
    c["violations"] = r.violations;
    if (!r.detail.empty()) c["counterexample"] = r.detail;
    if (with_timing) c["elapsed_s"] = r.elapsed_s;
    arr.push_back(std::move(c));
  }
  return j.dump(2) + "\n";
}

}  // namespace idsem
