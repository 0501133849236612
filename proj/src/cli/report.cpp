#include "octeig/cli/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace octeig::cli {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::discrepancy: return "discrepancy";
  }
  return "fail";
}

Check upper_bound_check(std::string name, double measured, double tol, std::string origin,
                        int criterion) {
  Check c;
  c.name = std::move(name);
  c.measured = {measured};
  c.expected = {0.0};
  c.tolerance = tol;
  c.origin = std::move(origin);
  c.criterion = criterion;
  c.status = measured <= tol ? Status::pass : Status::fail;
  return c;
}

Check lower_bound_check(std::string name, double measured, double bound, std::string origin,
                        int criterion) {
  Check c;
  c.name = std::move(name);
  c.measured = {measured};
  c.expected = {bound};
  c.tolerance = bound;
  c.origin = std::move(origin);
  c.criterion = criterion;
  c.status = measured > bound ? Status::pass : Status::fail;
  c.note = "passes when measured exceeds the bound";
  return c;
}

std::vector<Check> Report::sorted() const {
  std::vector<Check> out = checks_;
  std::stable_sort(out.begin(), out.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
  return out;
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

bool Report::has_failures() const { return count(Status::fail) > 0; }

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [s](const Check& c) { return c.status == s; }));
}

Json Report::to_json() const {
  Json checks = Json::array();
  for (const auto& c : sorted()) {
    Json j = {{"name", c.name},
              {"status", to_string(c.status)},
              {"measured", c.measured},
              {"expected", c.expected},
              {"tolerance", c.tolerance},
              {"origin", c.origin},
              {"criterion", c.criterion}};
    if (!c.note.empty()) j["note"] = c.note;
    checks.push_back(std::move(j));
  }
  return {{"table_convention", table_convention_},
          {"summary",
           {{"pass", count(Status::pass)},
            {"fail", count(Status::fail)},
            {"discrepancy", count(Status::discrepancy)}}},
          {"checks", std::move(checks)}};
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "table: " << table_convention_ << "\n";
  for (const auto& c : sorted()) {
    char buf[64];
    os << to_string(c.status) << "  " << c.name << "  measured=";
    for (std::size_t k = 0; k < c.measured.size(); ++k) {
      std::snprintf(buf, sizeof buf, "%s%.6g", k ? "," : "", c.measured[k]);
      os << buf;
    }
    std::snprintf(buf, sizeof buf, "  tol=%.3g", c.tolerance);
    os << buf;
    if (!c.note.empty()) os << "  (" << c.note << ")";
    os << "\n";
  }
  os << count(Status::pass) << " pass, " << count(Status::fail) << " fail, "
     << count(Status::discrepancy) << " discrepancy\n";
  return os.str();
}

}  // namespace octeig::cli
