#include "alcove/cli.hpp"

#include "alcove/errors.hpp"
#include "alcove/report.hpp"

#include <CLI11.hpp>

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace alcove {

namespace {

std::vector<RationalVector> parse_points(const std::string& text) {
  std::vector<RationalVector> out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(';', start);
    std::string item = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    if (item.find_first_not_of(" \t") == std::string::npos) throw InputError("empty point in '" + text + "'");
    out.push_back(parse_rational_vector(item));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact root-system, alcove and centralizer computations"};
  app.name("alcove");
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  SearchLimits limits;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-weyl-order", limits.max_weyl_order, "Largest Weyl group enumerated explicitly")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-states", limits.max_states, "State budget for searches and direct counts")
      ->check(CLI::PositiveNumber);

  std::string type_text, points_text;
  bool all = false, component_steps = false, direct = false;
  long long level = 1;
  int center_node = 0, k = 1;

  auto with_type = [&](CLI::App* sub) {
    sub->add_option("type", type_text, "Simple type such as A2, G2, E8")->required();
    return sub;
  };
  auto* info = with_type(app.add_subcommand("info", "Cartan data, marks, comarks and center"));
  auto* cent = with_type(app.add_subcommand("centralizer", "Centralizer of a tuple of alcove points"));
  cent->add_option("--points", points_text, "Points in coweight coordinates, e.g. \"0,1/2;1/2,0\"")->required();
  auto* bds = with_type(app.add_subcommand("bds", "Maximal-rank subsystems by node deletion"));
  bds->add_flag("--all", all, "Also list every subsystem reached by repeated deletion");
  auto* types = with_type(app.add_subcommand("types", "Centralizer types of single elements"));
  auto* chains = with_type(app.add_subcommand("chains", "Maximal irredundant chain length with a witness"));
  chains->add_flag("--component-steps", component_steps, "Allow a terminal component-group step");
  auto* moduli = with_type(app.add_subcommand("moduli", "Orbit count of commuting torsion pairs"));
  moduli->add_option("--level", level, "Torsion level m")->required();
  moduli->add_flag("--direct", direct, "Also count orbits by explicit enumeration");
  moduli->add_option("--center", center_node, "Special node naming c for the c-pair summary (0 is the identity)");
  auto* cpair = with_type(app.add_subcommand("cpair", "Fixed space of the central action on the alcove"));
  cpair->add_option("--center", center_node, "Special node naming the center element")->required();
  auto* fold = with_type(app.add_subcommand("fold", "Cyclic folding of type A"));
  fold->add_option("--k", k, "Order of the rotation (divides n+1)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    SimpleType type = SimpleType::parse(type_text);
    validate(type);
    RootSystem rs(type);
    Json body;
    std::string command;
    if (*info) {
      command = "info";
      body = info_report(rs);
    } else if (*cent) {
      command = "centralizer";
      body = centralizer_report(rs, parse_points(points_text), limits);
    } else if (*bds) {
      command = "bds";
      body = bds_report(rs, all, limits);
    } else if (*types) {
      command = "types";
      body = types_report(rs, limits);
    } else if (*chains) {
      command = "chains";
      body = chains_report(rs, component_steps, limits);
    } else if (*moduli) {
      command = "moduli";
      body = moduli_report(rs, level, direct, center_node, limits);
    } else if (*cpair) {
      command = "cpair";
      body = cpair_report(rs, center_node);
    } else {
      command = "fold";
      body = fold_report(rs, k);
    }
    Json report{{"schema_version", kSchemaVersion}, {"command", command}, {"type", type.name()}};
    report.update(body);
    if (format == "json") {
      out << report.dump(2) << "\n";
    } else {
      out << render_text(report);
    }
    return kExitOk;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace alcove
