#include "fibtl/report.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace fibtl {

bool RelationReport::all_pass() const {
  return std::all_of(relations.begin(), relations.end(), [](const RelationResult& r) { return r.pass; });
}

const RelationResult& RelationReport::find(const std::string& relation) const {
  for (const auto& r : relations)
    if (r.relation == relation) return r;
  throw std::out_of_range("no relation named " + relation);
}

std::string format_report(const RelationReport& r) {
  std::size_t width = 8;
  for (const auto& x : r.relations) width = std::max(width, x.relation.size());
  std::string out;
  char buf[512];
  std::snprintf(buf, sizeof buf, "%-*s  %-12s  %s\n", static_cast<int>(width), "relation", "max_residual", "status");
  out += buf;
  for (const auto& x : r.relations) {
    std::snprintf(buf, sizeof buf, "%-*s  %-12.3e  %s\n", static_cast<int>(width), x.relation.c_str(),
                  x.max_residual, x.pass ? "PASS" : "FAIL");
    out += buf;
  }
  return out;
}

nlohmann::json to_json(const RelationReport& r) {
  auto rel = nlohmann::json::array();
  for (const auto& x : r.relations)
    rel.push_back({{"relation", x.relation}, {"max_residual", x.max_residual}, {"pass", x.pass}});
  return {{"n", r.n}, {"tol", r.tol}, {"all_pass", r.all_pass()}, {"relations", std::move(rel)}};
}

}  // namespace fibtl
