#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace fibtl {

struct RelationResult {
  std::string relation;
  double max_residual;
  bool pass;
};

/// Outcome of a relation suite: one line per relation with its worst residual.
struct RelationReport {
  int n = 0;
  double tol = 0.0;
  std::vector<RelationResult> relations;

  bool all_pass() const;
  const RelationResult& find(const std::string& relation) const;
  void add(std::string relation, double residual) {
    relations.push_back(RelationResult{std::move(relation), residual, residual <= tol});
  }
};

// Fixed-width table: relation, max residual, PASS/FAIL.
std::string format_report(const RelationReport& r);
nlohmann::json to_json(const RelationReport& r);

}  // namespace fibtl
