// Structured pass/fail results with witness data, shared by every check.

#ifndef IDSEM_REPORT_HPP_
#define IDSEM_REPORT_HPP_

#include <string>
#include <vector>

#include "json.hpp"

namespace idsem {

using Json = nlohmann::ordered_json;

enum class Status { pass, fail, aborted };

std::string to_string(Status s);

struct CheckReport {
  std::string check;
  Status status = Status::pass;
  Json witness;  // null when the check produced no witness
  std::string details;
  double duration_ms = 0.0;
  std::vector<CheckReport> children;

  bool passed() const { return status == Status::pass; }

  static CheckReport pass(std::string name, std::string details,
                          Json witness = nullptr);
  static CheckReport fail(std::string name, std::string details,
                          Json witness = nullptr);
  static CheckReport aborted(std::string name, std::string details);

  // Appends a sub-check and downgrades this status: any failing child
  // makes the composite fail, any aborted child makes it abort.
  void add_child(CheckReport child);
};

// Flattens a report tree into the machine-readable array form; children
// appear after their parent with dotted names. Durations are emitted as
// 0 so that structured reports are byte-stable across runs.
Json to_structured(std::vector<CheckReport> const& reports);

// Stable serialization used for files and golden comparisons.
std::string render_structured(std::vector<CheckReport> const& reports);

// Human-readable rendering, one line per check, children indented.
std::string render_text(std::vector<CheckReport> const& reports,
                        bool with_timings = true);

}  // namespace idsem

#endif  // IDSEM_REPORT_HPP_
