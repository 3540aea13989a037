#include "subgauss/report.hpp"

#include <cmath>
#include <cstdio>

namespace subgauss {

BoundReport make_report(std::string name, std::map<std::string, double> params,
                        double lhs, double rhs, std::string note) {
  BoundReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.holds = lhs <= rhs + kReportTol;
  r.slack = rhs - lhs;
  r.note = std::move(note);
  return r;
}

BoundReport make_identity_report(std::string name,
                                 std::map<std::string, double> params,
                                 double abs_err, double tol, std::string note) {
  return make_report(std::move(name), std::move(params), std::fabs(abs_err),
                     tol, std::move(note));
}

BoundReport make_skipped(std::string name, std::map<std::string, double> params,
                         std::string reason) {
  BoundReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.skipped = true;
  r.holds = true;
  r.note = std::move(reason);
  return r;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string to_jsonl(const BoundReport& r) {
  std::string line = "{\"name\":\"" + escape(r.name) + "\",\"params\":{";
  bool first = true;
  for (const auto& [k, v] : r.params) {
    if (!first) line += ',';
    first = false;
    line += '"' + escape(k) + "\":" + fmt17(v);
  }
  line += "},\"lhs\":" + fmt17(r.lhs) + ",\"rhs\":" + fmt17(r.rhs);
  line += std::string(",\"holds\":") + (r.holds ? "true" : "false");
  line += ",\"slack\":" + fmt17(r.slack);
  if (r.skipped) line += ",\"skipped\":true";
  if (!r.note.empty()) line += ",\"note\":\"" + escape(r.note) + '"';
  line += '}';
  return line;
}

void write_jsonl(std::ostream& os, const std::vector<BoundReport>& reports) {
  for (const auto& r : reports) os << to_jsonl(r) << '\n';
}

bool all_hold(const std::vector<BoundReport>& reports) {
  return count_violations(reports) == 0;
}

std::size_t count_violations(const std::vector<BoundReport>& reports) {
  std::size_t bad = 0;
  for (const auto& r : reports) {
    if (!r.skipped && !r.holds) ++bad;
  }
  return bad;
}

}  // namespace subgauss
