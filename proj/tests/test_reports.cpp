#include <doctest.h>

#include "cubics/context.hpp"
#include "cubics/suite.hpp"

using namespace cubics;

TEST_CASE("json reports are deterministic and well formed") {
  Context& ctx = Context::get();

  const std::string a = classes_json(ctx);
  const std::string b = classes_json(ctx);
  CHECK(a == b);
  CHECK(a.find("\"S^(4)\"") != std::string::npos);
  CHECK(a.find("\"chi16\"") != std::string::npos);

  const std::string v = validate_json(ctx);
  CHECK(v.find("\"51840\"") != std::string::npos);
  CHECK(v.find("column-orthogonality") != std::string::npos);

  const std::string d = decompose_json(ctx, "S^(3)");
  CHECK(d.find("\"dimension\": \"165\"") != std::string::npos);

  const std::string f1 = find_relation_json(ctx, {}, true, false, 8, false, 2);
  const std::string f2 = find_relation_json(ctx, {}, true, false, 8, false, 2);
  CHECK(f1 == f2);
  CHECK(f1.find("\"nullity_function_field\": 1") != std::string::npos);

  const std::string ver = verify_json(ctx, "szs-sym");
  CHECK(ver.find("\"residual_zero\": true") != std::string::npos);
  CHECK(ver.find("\"forbidden_shape\": true") != std::string::npos);

  const std::string ff = fourfold_json(ctx);
  CHECK(ff.find("\"substitution_oracle_zero\": true") != std::string::npos);
}

TEST_CASE("explicit class list searches") {
  Context& ctx = Context::get();
  const std::string j =
      find_relation_json(ctx, {"1", "S", "S^(2)", "F"}, false, false, 8, false, 0);
  CHECK(j.find("\"nullity_function_field\": 1") != std::string::npos);
}

TEST_CASE("burnside reports") {
  Context& ctx = Context::get();
  const std::string a1 = burnside_json(ctx, "a1");
  CHECK(a1.find("\"all_pass\": true") != std::string::npos);
  CHECK(a1.find("\"virtual_sets\"") != std::string::npos);
  const std::string a2 = burnside_json(ctx, "a2");
  CHECK(a2.find("\"all_pass\": true") != std::string::npos);
  CHECK(a2 == burnside_json(ctx, "a2"));
}
