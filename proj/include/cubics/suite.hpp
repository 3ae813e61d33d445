#pragma once

#include <string>
#include <vector>

#include "cubics/context.hpp"

namespace cubics {

struct CriterionResult {
  int criterion = 0;
  std::string id;
  bool pass = false;
  std::string detail;
};

/// Runs one acceptance criterion (1..12); `all_criteria` runs them in order.
std::vector<CriterionResult> run_criterion(Context& ctx, int criterion);
std::vector<CriterionResult> run_all_criteria(Context& ctx);

/// Stable-ordered machine-readable reports (shared by the CLI).
std::string validate_json(Context& ctx);
std::string classes_json(Context& ctx);
std::string decompose_json(Context& ctx, const std::string& name);
std::string find_relation_json(Context& ctx, const std::vector<std::string>& class_names,
                               bool with_F, bool with_Z, int max_degree, bool hilb,
                               int homogeneous_degree);
std::string verify_json(Context& ctx, const std::string& relation_id);
std::string burnside_json(Context& ctx, const std::string& which);  // "a1" | "a2"
std::string fourfold_json(Context& ctx);

}  // namespace cubics
