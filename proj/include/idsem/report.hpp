#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace idsem {

// Library-wide error with a stable check id (used by reports and exit codes).
struct Error : std::runtime_error {
  std::string id;
  Error(std::string check_id, const std::string& msg)
      : std::runtime_error(check_id + ": " + msg), id(std::move(check_id)) {}
};

enum class Status { pass, fail, skipped };

// One verified (or violated) fact. `id` is a stable check id; `detail`
// holds the first counterexample found, canonically rendered.
struct CheckRecord {
  std::string id;
  std::string subject;
  Status status = Status::pass;
  std::string detail;
  std::size_t instances = 0;
  std::size_t violations = 0;
  double elapsed_s = 0.0;
};

class Report {
 public:
  void add(CheckRecord rec) { records_.push_back(std::move(rec)); }
  void merge(const Report& other);

  // Convenience: count `instances` checked, record first failure only.
  CheckRecord& begin_check(const std::string& id, const std::string& subject);
  void note_instance(CheckRecord& rec, bool ok, const std::string& detail);

  bool ok() const;
  const std::vector<CheckRecord>& records() const { return records_; }

  std::string to_text() const;
  // Structured rendering; timing fields omitted unless with_timing.
  std::string to_json(bool with_timing = false) const;

 private:
  std::vector<CheckRecord> records_;
};

}  // namespace idsem
