#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cubics/burnside.hpp"
#include "cubics/chartable.hpp"
#include "cubics/context.hpp"
#include "cubics/relfind.hpp"
#include "cubics/suite.hpp"

namespace {

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream os(out_path, std::ios::trunc);
  os << text << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cubics: exact computations in the graded character ring of W(E6), the\n"
      "Burnside rings of the singular cases, and the free fourfold calculus"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path;
  int max_deg = 8;
  app.add_option("--format", format, "text|json|tsv")->capture_default_str();
  app.add_flag_callback("--json", [&format] { format = "json"; },
                        "shorthand for --format json");
  app.add_option("--out", out_path, "write the report to a file instead of stdout");
  app.add_option("--max-deg", max_deg, "coefficient degree bound for relation searches")
      ->capture_default_str();

  auto* validate = app.add_subcommand("validate", "check both character tables");

  auto* classes = app.add_subcommand("classes", "dump decompositions or raw data");
  std::string what = "decompositions";
  classes->add_option("--what", what,
                      "decompositions|roots|lines|conjugacy|tables")
      ->capture_default_str();

  auto* decompose_cmd = app.add_subcommand("decompose", "decompose a named class");
  std::string class_name;
  decompose_cmd->add_option("name", class_name, "e.g. S, S^(3), S^[4], S*S^(2), F, Z, V")
      ->required();

  auto* find = app.add_subcommand("find-relation", "exact nullspace search");
  std::vector<std::string> find_classes, with_list;
  int degree = 4;
  bool with_f = false, with_z = false, hilb = false;
  find->add_option("--classes", find_classes,
                   "explicit class names (default: all monomials up to --degree)");
  find->add_option("--degree", degree, "formula degree bound for the candidate monomials")
      ->capture_default_str();
  find->add_option("--with", with_list, "auxiliary classes to include: F and/or Z");
  find->add_flag("--with-f", with_f, "include the Fano class F");
  find->add_flag("--with-z", with_z, "include the twisted-cubic class Z");
  find->add_flag("--hilb", hilb, "use Hilbert-scheme monomials");

  auto* verify = app.add_subcommand("verify", "verify a registered relation");
  std::string relation_id;
  std::string ids;
  for (const auto& r : cubics::relation_registry()) ids += (ids.empty() ? "" : ", ") + r.id;
  verify->add_option("id", relation_id, "one of: " + ids)->required();

  auto* burnside = app.add_subcommand("burnside", "singular-case verification report");
  std::string burn_case = "a1";
  burnside->add_option("--case", burn_case, "a1|a2")->capture_default_str();

  auto* fourfold = app.add_subcommand("fourfold", "derive the fourfold relation");
  bool derive = false;
  fourfold->add_flag("--derive", derive, "accepted for compatibility; always derives");

  auto* all = app.add_subcommand("all", "run the full acceptance suite");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    cubics::Context& ctx = cubics::Context::get();

    if (validate->parsed()) {
      const auto rep_e6 = cubics::validate_table(ctx.e6());
      const auto rep_g = cubics::validate_table(ctx.gtable());
      if (format == "json") {
        emit(cubics::validate_json(ctx), out_path);
      } else {
        std::ostringstream os;
        for (const auto* rep : {&rep_e6, &rep_g})
          for (const auto& c : rep->checks)
            os << (c.pass ? "PASS " : "FAIL ") << c.name
               << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
        emit(os.str(), out_path);
      }
      return rep_e6.all_pass() && rep_g.all_pass() ? 0 : 1;
    }

    if (classes->parsed()) {
      if (what == "decompositions") {
        emit(cubics::classes_json(ctx), out_path);
      } else if (what == "roots") {
        emit(cubics::roots_to_tsv(ctx.roots()), out_path);
      } else if (what == "lines") {
        emit(cubics::lines_to_tsv(ctx.lines()), out_path);
      } else if (what == "conjugacy") {
        emit(cubics::classes_to_json(ctx.weyl()), out_path);
      } else if (what == "tables") {
        if (format == "tsv")
          emit(cubics::table_to_tsv(ctx.e6()) + "\n" + cubics::table_to_tsv(ctx.gtable()),
               out_path);
        else
          emit("[" + cubics::table_to_json(ctx.e6()) + ",\n" +
                   cubics::table_to_json(ctx.gtable()) + "]",
               out_path);
      } else {
        std::cerr << "unknown --what " << what << "\n";
        return 2;
      }
      return 0;
    }

    if (decompose_cmd->parsed()) {
      if (format == "text") {
        emit(cubics::decompose(ctx.e6(), ctx.motives().parse(class_name)).pretty(), out_path);
      } else {
        emit(cubics::decompose_json(ctx, class_name), out_path);
      }
      return 0;
    }

    if (find->parsed()) {
      for (const auto& w : with_list) {
        if (w == "F" || w == "f") with_f = true;
        else if (w == "Z" || w == "z") with_z = true;
        else {
          std::cerr << "--with accepts F or Z, got " << w << "\n";
          return 2;
        }
      }
      emit(cubics::find_relation_json(ctx, find_classes, with_f, with_z, max_deg, hilb, degree),
           out_path);
      return 0;
    }

    if (verify->parsed()) {
      const std::string text = cubics::verify_json(ctx, relation_id);
      emit(text, out_path);
      return text.find("\"residual_zero\": true") != std::string::npos ? 0 : 1;
    }

    if (burnside->parsed()) {
      const std::string text = cubics::burnside_json(ctx, burn_case);
      emit(text, out_path);
      return text.find("\"all_pass\": true") != std::string::npos ? 0 : 1;
    }

    if (fourfold->parsed()) {
      emit(cubics::fourfold_json(ctx), out_path);
      return 0;
    }

    if (all->parsed()) {
      const auto results = cubics::run_all_criteria(ctx);
      int failures = 0;
      std::ostringstream os;
      for (const auto& r : results) {
        os << (r.pass ? "PASS" : "FAIL") << " criterion " << r.criterion << " [" << r.id << "]"
           << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
        failures += r.pass ? 0 : 1;
      }
      emit(os.str(), out_path);
      return failures == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
