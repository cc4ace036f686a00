#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "crosscut/crosscut.hpp"
#include "crosscut/error.hpp"
#include "crosscut/fixtures.hpp"
#include "crosscut/fpp.hpp"
#include "crosscut/io.hpp"
#include "crosscut/morphisms.hpp"
#include "crosscut/random.hpp"
#include "crosscut/theorem_checks.hpp"

namespace crosscut {

namespace {

std::string read_all(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string read_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw BadParams("cannot open '" + path + "'");
  return read_all(file);
}

SearchOptions search_options() {
  SearchOptions options;
  if (const char* cap = std::getenv("CROSSCUT_SEARCH_CAP")) {
    try {
      std::size_t used = 0;
      options.max_elements = std::stoi(cap, &used);
      if (used != std::string(cap).size() || options.max_elements < 0) throw std::invalid_argument(cap);
    } catch (const std::logic_error&) {
      throw BadParams(std::string("CROSSCUT_SEARCH_CAP must be a non-negative integer, got '") + cap + "'");
    }
  }
  return options;
}

ElementSet parse_labels(const Poset& p, const std::string& text) {
  ElementSet set;
  for (const auto& token : tokenize(text)) {
    const auto x = p.find_label(token);
    if (!x) throw BadParams("unknown element '" + token + "'");
    set.insert(*x);
  }
  return set;
}

void print_show(const Poset& p, std::ostream& out) {
  const auto h = heights(p);
  int height = 0;
  for (int value : h) height = std::max(height, value);
  out << "elements: " << p.size() << '\n';
  out << "covers: " << hasse_covers(p).size() << '\n';
  out << "maximal: " << node_label(p, maximal_elements(p)) << '\n';
  out << "minimal: " << node_label(p, minimal_elements(p)) << '\n';
  out << "components: " << connected_components(p, p.elements()).size() << '\n';
  out << "height: " << height << '\n';
}

CrosscutPoset construction(const Poset& p, const std::string& which) {
  if (which == "d") return d_poset(p);
  if (which == "u") return u_poset(p);
  return c_poset(p);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Crosscut posets and the fixed point property", "crosscut"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string input;
  const auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "Poset file (default: stdin)");
  };

  auto* show = app.add_subcommand("show", "Parse a poset and print basic statistics");
  add_input(show);

  std::string dot_which = "p";
  auto* dot = app.add_subcommand("dot", "Emit a Graphviz DOT diagram");
  add_input(dot);
  dot->add_option("--which", dot_which, "p, d, u or c")->check(CLI::IsMember({"p", "d", "u", "c"}));

  std::string cutset;
  auto* gamma_cmd = app.add_subcommand("gamma", "Crosscut poset with respect to a subset");
  add_input(gamma_cmd);
  gamma_cmd->add_option("--cutset", cutset, "Space-separated element labels")->required();

  auto* dpose = app.add_subcommand("dpose", "Crosscut poset of the maximal elements");
  auto* upose = app.add_subcommand("upose", "Opposite crosscut poset of the minimal elements");
  auto* cpose = app.add_subcommand("cpose", "Union of both with the cross relations");
  for (auto* sub : {dpose, upose, cpose}) add_input(sub);

  bool use_pipeline = false;
  auto* fpp = app.add_subcommand("fpp", "Decide the fixed point property");
  add_input(fpp);
  fpp->add_flag("--pipeline", use_pipeline, "Try the crosscut routes before the direct decision");

  auto* dismantle_cmd = app.add_subcommand("dismantle", "Remove irreducible points down to the core");
  add_input(dismantle_cmd);

  std::string map_file;
  std::string induced_which = "d";
  auto* induced = app.add_subcommand("induced", "Map induced on a crosscut poset by a self-map");
  add_input(induced);
  induced->add_option("--map", map_file, "Map file with lines 'x -> y'")->required();
  induced->add_option("--which", induced_which, "d, u or c")->check(CLI::IsMember({"d", "u", "c"}));

  std::string fixture_name;
  std::vector<int> fixture_params;
  auto* fixture_cmd = app.add_subcommand("fixture", "Print a gallery poset");
  fixture_cmd->add_option("name", fixture_name, "Fixture name")->required()->check(CLI::IsMember(fixture_names()));
  fixture_cmd->add_option("params", fixture_params, "n (crown) or n k (Pnk)");

  CheckOptions check_options;
  auto* check = app.add_subcommand("check-theorems", "Run the property suites on random posets");
  check->add_option("--seeds", check_options.seeds, "Number of random posets")->check(CLI::NonNegativeNumber);
  check->add_option("--max-size", check_options.max_size, "Largest poset size")->check(CLI::Range(1, kRandomPosetCap));
  check->add_option("--seed", check_options.base_seed, "Base seed");

  int random_n = 8;
  double random_density = 0.3;
  std::uint64_t random_seed = 1;
  auto* random_cmd = app.add_subcommand("random", "Print a random poset");
  random_cmd->add_option("--n", random_n, "Number of elements")->check(CLI::Range(1, kRandomPosetCap));
  random_cmd->add_option("--density", random_density, "Relation probability")->check(CLI::Range(0.0, 1.0));
  random_cmd->add_option("--seed", random_seed, "Seed");

  std::vector<std::string> argv_rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv_rest.begin(), argv_rest.end());
  try {
    app.parse(argv_rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const auto load = [&] { return parse_poset(input.empty() ? read_all(in) : read_file(input)); };

  try {
    if (*show) {
      print_show(load(), out);
    } else if (*dot) {
      const Poset p = load();
      if (dot_which == "p") {
        out << emit_dot(p);
      } else {
        DotOptions options;
        options.graph_name = dot_which == "d" ? "D" : dot_which == "u" ? "U" : "C";
        out << emit_dot(construction(p, dot_which), options);
      }
    } else if (*gamma_cmd) {
      const Poset p = load();
      const ElementSet x = parse_labels(p, cutset);
      if (x.empty()) throw EmptyInput("--cutset needs at least one element");
      out << emit_crosscut(gamma(p, x));
    } else if (*dpose || *upose || *cpose) {
      out << emit_crosscut(construction(load(), *dpose ? "d" : *upose ? "u" : "c"));
    } else if (*fpp) {
      const Poset p = load();
      const FppVerdict verdict = use_pipeline ? pipeline_fpp(p, search_options()) : has_fpp(p, search_options());
      out << format_verdict(verdict);
      return verdict.has_fpp ? kExitOk : kExitNegative;
    } else if (*dismantle_cmd) {
      const Poset p = load();
      const DismantlingTrace trace = dismantle(p);
      out << format_trace(p, trace);
      return trace.dismantlable() ? kExitOk : kExitNegative;
    } else if (*induced) {
      const Poset p = load();
      const OrderMap f = parse_map(read_file(map_file), p, p);
      const InducedMap g = induced_which == "d" ? induced_d(f) : induced_which == "u" ? induced_u(f) : induced_c(f);
      out << emit_map(g.map);
    } else if (*fixture_cmd) {
      out << emit_poset(fixture({fixture_name, fixture_params}));
    } else if (*check) {
      const auto results = run_theorem_checks(check_options);
      bool all = true;
      for (const auto& r : results) {
        all = all && r.passed;
        out << std::left << std::setw(3) << r.id << std::setw(5) << (r.passed ? "PASS" : "FAIL") << std::right
            << std::setw(9) << r.cases << "  " << r.name << '\n';
        if (!r.passed) out << "     counterexample: " << r.failure << '\n';
      }
      return all ? kExitOk : kExitNegative;
    } else if (*random_cmd) {
      out << emit_poset(random_poset(random_n, random_density, random_seed));
    }
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace crosscut
