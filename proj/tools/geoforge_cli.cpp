#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "geoforge/caps.hpp"
#include "geoforge/error.hpp"
#include "geoforge/materialize.hpp"
#include "geoforge/pipeline.hpp"
#include "geoforge/streetlight.hpp"

using namespace geoforge;
using json = nlohmann::ordered_json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorCode::InvalidArgument, "cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

json load_spec(const std::string& path) { return parse_spec(slurp(path)); }

int emit(const Report& r) {
  std::cout << r.to_json().dump(2) << "\n";
  return r.exit_code();
}

std::string fresh_name(const json& doc, std::string base) {
  auto taken = [&](const std::string& n) {
    for (const char* s : {"groups", "systems", "actions"})
      if (doc.contains(s) && doc.at(s).contains(n)) return true;
    return false;
  };
  while (taken(base)) base += "_";
  return base;
}

std::vector<std::size_t> parse_reps(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoul(item));
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "bad representative '" + item + "'");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geoforge: coset incidence systems, twistings and checks"};
  app.require_subcommand(1);
  app.fallthrough();

  RunOptions options;
  std::uint64_t cap_closure = 0, cap_product = 0, cap_geometry = 0;
  std::size_t rank_guard = 0;
  bool no_timing = false;
  app.add_option("--cap-closure", cap_closure, "Largest group enumerated by closure");
  app.add_option("--cap-product", cap_product, "Largest product set");
  app.add_option("--cap-geometry", cap_geometry, "Largest materialized geometry");
  app.add_option("--rank-guard", rank_guard, "Largest rank for subset sweeps");
  app.add_flag("--no-timing", no_timing, "Report 0 ms everywhere");

  std::string spec_path;
  auto* check = app.add_subcommand("check", "Run a pipeline spec");
  check->add_option("spec", spec_path)->required();

  std::string alpha, beta, action, reps, system_name;
  std::vector<std::string> checks{"FT", "RC", "THIN"}, omega;
  std::size_t n = 0;
  auto* tw = app.add_subcommand("twist", "Twist two systems of a spec");
  tw->add_option("spec", spec_path)->required();
  tw->add_option("--alpha", alpha)->required();
  tw->add_option("--beta", beta)->required();
  tw->add_option("--action", action)->required();
  tw->add_option("--reps", reps, "Comma-separated orbit representatives");
  tw->add_option("--check", checks, "Checks on the result")->capture_default_str();

  auto* wr = app.add_subcommand("wreath", "Wreath product of two systems of a spec");
  wr->add_option("spec", spec_path)->required();
  wr->add_option("--alpha", alpha)->required();
  wr->add_option("--beta", beta)->required();
  wr->add_option("--n", n, "Size of the permuted index set")->required();
  wr->add_option("--omega", omega, "Permutation of the index set per generator of beta")->required();
  wr->add_option("--reps", reps);
  wr->add_option("--check", checks)->capture_default_str();

  std::string dot, json_out, family;
  std::size_t r = 0;
  auto* mat = app.add_subcommand("materialize", "Materialize a system and export it");
  mat->add_option("spec", spec_path);
  mat->add_option("--system", system_name);
  mat->add_option("--family", family, "Built-in family instead of a spec");
  mat->add_option("--r", r);
  mat->add_option("--dot", dot);
  mat->add_option("--json", json_out);

  std::string g1, g2;
  auto* iso = app.add_subcommand("iso", "Type-preserving isomorphism of two geometry JSON files");
  iso->add_option("g1", g1)->required();
  iso->add_option("g2", g2)->required();

  std::string from, to;
  auto* street = app.add_subcommand("street", "Lamplighter street geometry");
  street->require_subcommand(1);
  auto* path = street->add_subcommand("path", "Shortest path between two street states");
  path->add_option("--from", from)->required();
  path->add_option("--to", to)->required();

  std::string filter;
  auto* suite = app.add_subcommand("paper-suite", "Run the bundled regression criteria");
  suite->add_option("--filter", filter);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (const char* env = std::getenv("GEOFORGE_CAPS")) set_caps(parse_caps(env, caps()));
    if (cap_closure) options.cap_closure = cap_closure;
    if (cap_product) options.cap_product = cap_product;
    if (cap_geometry) options.cap_geometry = cap_geometry;
    if (rank_guard) options.rank_guard = rank_guard;
    options.timing = !no_timing;

    if (*check) return emit(run_pipeline_file(spec_path, options));

    if (*tw || *wr) {
      auto doc = load_spec(spec_path);
      auto bind = fresh_name(doc, *tw ? "twist" : "wreath");
      json args{{"alpha", alpha}, {"beta", beta}};
      if (*tw) args["action"] = action;
      if (*wr) {
        args["n"] = n;
        args["omega"] = omega;
      }
      if (!reps.empty()) args["reps"] = parse_reps(reps);
      doc["pipeline"].push_back({{"op", *tw ? "twist" : "wreath"}, {"args", args}, {"bind", bind}});
      doc["checks"][bind] = checks;
      return emit(run_pipeline(doc.dump(), options));
    }

    if (*mat) {
      json doc;
      if (!family.empty()) {
        doc = {{"schema", 1}, {"systems", {{"family", {{"family", family}, {"r", r}}}}}};
        system_name = "family";
      } else {
        if (spec_path.empty() || system_name.empty())
          fail(ErrorCode::InvalidArgument, "materialize needs a spec and --system, or --family and --r");
        doc = load_spec(spec_path);
      }
      json args{{"system", system_name}};
      if (!dot.empty()) args["dot"] = dot;
      if (!json_out.empty()) args["json"] = json_out;
      doc["pipeline"].push_back({{"op", "materialize"}, {"args", args}});
      return emit(run_pipeline(doc.dump(), options));
    }

    if (*iso) {
      auto a = import_json(slurp(g1)), b = import_json(slurp(g2));
      auto m = colored_isomorphic(a, b);
      json out{{"isomorphic", m.has_value()}};
      if (m) out["map"] = *m;
      std::cout << out.dump() << "\n";
      return m ? 0 : 1;
    }

    if (*path) {
      auto s1 = street::parse_state(from), s2 = street::parse_state(to);
      std::cout << street::to_json(street::street_path(s1, s2)) << "\n";
      return 0;
    }

    if (*suite) {
      Caps c = caps();
      if (options.cap_closure) c.closure = *options.cap_closure;
      if (options.cap_product) c.product = *options.cap_product;
      if (options.cap_geometry) c.geometry = *options.cap_geometry;
      if (options.rank_guard) c.rank_guard = *options.rank_guard;
      ScopedCaps scoped(c);
      return emit(regression_suite(filter, options.timing));
    }
  } catch (const Error& e) {
    std::cerr << json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "InvalidArgument"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }
  return 0;
}
