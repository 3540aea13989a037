#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace subgauss {

inline constexpr double kReportTol = 1e-12;

// One verified inequality instance. The stored claim is always lhs <= rhs:
// lower-bound statements put the guaranteed bound on the left and the
// measured quantity on the right, so `holds` has a single meaning.
struct BoundReport {
  std::string name;
  std::map<std::string, double> params;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
  double slack = 0.0;
  bool skipped = false;
  std::string note;
};

BoundReport make_report(std::string name, std::map<std::string, double> params,
                        double lhs, double rhs, std::string note = {});

// Equality claim |err| <= tol, stored as lhs = |err|, rhs = tol.
BoundReport make_identity_report(std::string name,
                                 std::map<std::string, double> params,
                                 double abs_err, double tol,
                                 std::string note = {});

BoundReport make_skipped(std::string name, std::map<std::string, double> params,
                         std::string reason);

// 17-significant-digit formatting used for every number we serialize.
std::string fmt17(double v);

std::string to_jsonl(const BoundReport& r);
void write_jsonl(std::ostream& os, const std::vector<BoundReport>& reports);

bool all_hold(const std::vector<BoundReport>& reports);
std::size_t count_violations(const std::vector<BoundReport>& reports);

}  // namespace subgauss
