#include "idsem/report.hpp"

#include <cctype>
#include <sstream>

namespace idsem {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::aborted:
      return "aborted";
  }
  return "unknown";
}

CheckReport CheckReport::pass(std::string name, std::string details,
                              Json witness) {
  return {std::move(name), Status::pass, std::move(witness),
          std::move(details), 0.0, {}};
}

CheckReport CheckReport::fail(std::string name, std::string details,
                              Json witness) {
  return {std::move(name), Status::fail, std::move(witness),
          std::move(details), 0.0, {}};
}

CheckReport CheckReport::aborted(std::string name, std::string details) {
  return {std::move(name), Status::aborted, nullptr, std::move(details),
          0.0, {}};
}

void CheckReport::add_child(CheckReport child) {
  if (child.status == Status::fail) {
    status = Status::fail;
  } else if (child.status == Status::aborted && status == Status::pass) {
    status = Status::aborted;
  }
  children.push_back(std::move(child));
}

namespace {

void flatten(CheckReport const& r, std::string const& prefix, Json& out) {
  std::string name = prefix.empty() ? r.check : prefix + "." + r.check;
  Json obj;
  obj["check"] = name;
  obj["status"] = to_string(r.status);
  if (!r.witness.is_null()) {
    obj["witness"] = r.witness;
  }
  obj["details"] = r.details;
  obj["duration"] = 0;
  out.push_back(std::move(obj));
  for (auto const& c : r.children) {
    flatten(c, name, out);
  }
}

void render_line(CheckReport const& r, std::string const& prefix, int depth,
                 bool with_timings, std::ostringstream& os) {
  std::string name = prefix.empty() ? r.check : prefix + "." + r.check;
  std::string tag = to_string(r.status);
  for (auto& ch : tag) {
    ch = char(std::toupper(static_cast<unsigned char>(ch)));
  }
  os << std::string(size_t(depth) * 2, ' ') << "[" << tag << "] " << name;
  if (!r.details.empty()) {
    os << " -- " << r.details;
  }
  if (with_timings) {
    os << " (" << r.duration_ms << " ms)";
  }
  os << "\n";
  for (auto const& c : r.children) {
    render_line(c, name, depth + 1, with_timings, os);
  }
}

}  // namespace

Json to_structured(std::vector<CheckReport> const& reports) {
  Json arr = Json::array();
  for (auto const& r : reports) {
    flatten(r, "", arr);
  }
  return arr;
}

std::string render_structured(std::vector<CheckReport> const& reports) {
  return to_structured(reports).dump(2) + "\n";
}

std::string render_text(std::vector<CheckReport> const& reports,
                        bool with_timings) {
  std::ostringstream os;
  for (auto const& r : reports) {
    render_line(r, "", 0, with_timings, os);
  }
  return os.str();
}

}  // namespace idsem
