#include "geoforge/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "geoforge/cgroups.hpp"
#include "geoforge/error.hpp"
#include "geoforge/materialize.hpp"
#include "geoforge/ops.hpp"

namespace geoforge {

using json = nlohmann::ordered_json;

std::string to_string(StepStatus s) {
  switch (s) {
    case StepStatus::Pass: return "pass";
    case StepStatus::Fail: return "fail";
    case StepStatus::Error: return "error";
    case StepStatus::Cap: return "cap";
    case StepStatus::Skipped: return "skipped";
  }
  return "?";
}

bool Report::passed() const {
  for (const auto& s : steps)
    if (s.status != StepStatus::Pass) return false;
  return true;
}

int Report::exit_code() const {
  if (passed()) return 0;
  for (const auto& s : steps)
    if (s.status == StepStatus::Cap) return 3;
  return 1;
}

json Report::to_json() const {
  json doc;
  doc["schema"] = 1;
  doc["steps"] = json::array();
  for (const auto& s : steps)
    doc["steps"].push_back(
        {{"name", s.name}, {"status", to_string(s.status)}, {"witness", s.witness}, {"ms", std::round(s.ms * 10) / 10}});
  if (total_ms) doc["total_ms"] = std::round(*total_ms * 10) / 10;
  return doc;
}

int exit_code_for(const std::exception& e) { return dynamic_cast<const CapExceeded*>(&e) ? 3 : 2; }

namespace {

enum class Kind { Group, System, Action };

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::Group: return "group";
    case Kind::System: return "system";
    case Kind::Action: return "action";
  }
  return "?";
}

[[noreturn]] void malformed(const std::string& where, const std::string& why) {
  fail(ErrorCode::ParseError, where + ": " + why);
}

[[noreturn]] void unresolved(const std::string& where, const std::string& name, Kind k) {
  fail(ErrorCode::UnresolvedReference, where + ": no " + kind_name(k) + " named '" + name + "'");
}

const json& member(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) malformed(where, "missing \"" + key + "\"");
  return obj.at(key);
}

std::string text_of(const json& j, const std::string& where) {
  if (!j.is_string()) malformed(where, "expected a string");
  return j.get<std::string>();
}

std::size_t count_of(const json& j, const std::string& where) {
  if (!j.is_number_unsigned()) malformed(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<std::string> strings_of(const json& j, const std::string& where) {
  if (!j.is_array()) malformed(where, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(text_of(j[k], where + "/" + std::to_string(k)));
  return out;
}

std::vector<std::size_t> counts_of(const json& j, const std::string& where) {
  if (!j.is_array()) malformed(where, "expected an array of integers");
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(count_of(j[k], where + "/" + std::to_string(k)));
  return out;
}

// Argument names per operation that refer to other definitions or bindings.
struct OpSpec {
  std::vector<std::pair<std::string, Kind>> refs;
  std::vector<std::string> optional_refs;  // may be absent
  std::optional<Kind> result;
};

const std::map<std::string, OpSpec>& registry() {
  static const std::map<std::string, OpSpec> ops{
      {"twist", {{{"alpha", Kind::System}, {"beta", Kind::System}, {"action", Kind::Action}}, {}, Kind::System}},
      {"wreath", {{{"alpha", Kind::System}, {"beta", Kind::System}}, {}, Kind::System}},
      {"direct_product", {{{"alpha", Kind::System}, {"beta", Kind::System}}, {}, Kind::System}},
      {"direct_power", {{{"alpha", Kind::System}}, {}, Kind::System}},
      {"self_dual", {{{"group", Kind::Group}}, {}, Kind::System}},
      {"cgroup", {{{"group", Kind::Group}}, {}, Kind::System}},
      {"residue", {{{"system", Kind::System}}, {}, Kind::System}},
      {"halve", {{{"group", Kind::Group}}, {}, Kind::Group}},
      {"search", {{{"group", Kind::Group}}, {}, Kind::Group}},
      {"materialize", {{{"system", Kind::System}}, {}, std::nullopt}},
      {"iso", {{{"system", Kind::System}, {"with", Kind::System}}, {"with"}, std::nullopt}},
  };
  return ops;
}

const std::set<std::string> system_checks{"FT", "FT:triple", "FT:geometry", "RC", "RC:RC2", "RC:intersection",
                                          "FIRM", "THIN", "PI", "ISO:cube"};
const std::set<std::string> group_checks{"STRING", "IP", "IP:reduced", "LINEAR"};

class Runner {
 public:
  Runner(json doc, RunOptions options) : doc_(std::move(doc)), options_(std::move(options)) {}

  Report run() {
    check_shape();
    resolve_all();
    ScopedCaps scoped(effective_caps());
    Report report;
    bool stopped = false;
    const auto& steps = doc_.contains("pipeline") ? doc_.at("pipeline") : empty_;
    for (std::size_t k = 0; k < steps.size(); ++k) {
      const auto& step = steps[k];
      auto op = step.at("op").get<std::string>();
      std::string name = op + (step.contains("bind") ? " -> " + step.at("bind").get<std::string>() : "");
      if (stopped) {
        report.steps.push_back({name, StepStatus::Skipped, nullptr, 0});
        continue;
      }
      report.steps.push_back(timed(name, [&] { return execute(op, step.contains("args") ? step.at("args") : empty_, step); }));
      if (report.steps.back().status == StepStatus::Error || report.steps.back().status == StepStatus::Cap)
        stopped = true;
    }
    if (doc_.contains("checks"))
      for (const auto& [target, list] : doc_.at("checks").items())
        for (const auto& c : list) {
          auto check = c.get<std::string>();
          std::string name = "check " + check + " " + target;
          if (!bound(target)) {
            report.steps.push_back({name, StepStatus::Skipped, nullptr, 0});
            continue;
          }
          report.steps.push_back(timed(name, [&] { return run_check(check, target); }));
        }
    return report;
  }

 private:
  struct Outcome {
    bool pass = true;
    json witness;
  };

  StepReport timed(const std::string& name, const std::function<Outcome()>& fn) {
    StepReport r{name, StepStatus::Pass, nullptr, 0};
    auto start = std::chrono::steady_clock::now();
    try {
      auto out = fn();
      r.status = out.pass ? StepStatus::Pass : StepStatus::Fail;
      r.witness = out.pass ? json(nullptr) : out.witness;
    } catch (const CapExceeded& e) {
      r.status = StepStatus::Cap;
      r.witness = {{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
    } catch (const Error& e) {
      r.status = StepStatus::Error;
      r.witness = {{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
    }
    if (options_.timing)
      r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
  }

  // ---- validation ----

  void check_shape() {
    if (!doc_.is_object()) malformed("/", "expected an object");
    if (!doc_.contains("schema") || doc_.at("schema") != 1) malformed("/schema", "expected 1");
    for (const auto& [key, value] : doc_.items()) {
      static const std::set<std::string> known{"schema", "caps", "groups", "systems", "actions", "pipeline", "checks"};
      if (!known.count(key)) malformed("/" + key, "unknown section");
      if (key != "schema" && key != "pipeline" && !value.is_object()) malformed("/" + key, "expected an object");
    }
    if (doc_.contains("pipeline") && !doc_.at("pipeline").is_array()) malformed("/pipeline", "expected an array");
    for (auto [section, kind] : {std::pair{"groups", Kind::Group}, {"systems", Kind::System}, {"actions", Kind::Action}})
      if (doc_.contains(section))
        for (const auto& [name, def] : doc_.at(section).items()) {
          if (!defined_.emplace(name, kind).second) malformed(std::string("/") + section + "/" + name, "name used twice");
          if (!def.is_object()) malformed(std::string("/") + section + "/" + name, "expected an object");
        }
    for (const auto& [name, def] : section("groups").items()) check_group_def(name, def);
    for (const auto& [name, def] : section("systems").items()) {
      std::string where = "/systems/" + name;
      if (def.contains("family")) continue;
      want(text_of(member(def, def.contains("cgroup") ? "cgroup" : "group", where), where), Kind::Group, where);
    }
    for (const auto& [name, def] : section("actions").items()) {
      std::string where = "/actions/" + name;
      want(text_of(member(def, "actor", where), where + "/actor"), Kind::Group, where);
      want(text_of(member(def, "target", where), where + "/target"), Kind::Group, where);
    }
    std::map<std::string, Kind> binds;
    const auto& steps = doc_.contains("pipeline") ? doc_.at("pipeline") : empty_;
    for (std::size_t k = 0; k < steps.size(); ++k) {
      std::string where = "/pipeline/" + std::to_string(k);
      const auto& step = steps[k];
      auto op = text_of(member(step, "op", where), where + "/op");
      auto it = registry().find(op);
      if (it == registry().end()) malformed(where + "/op", "unknown operation '" + op + "'");
      const json& args = step.contains("args") ? step.at("args") : empty_;
      if (!args.is_object()) malformed(where + "/args", "expected an object");
      for (const auto& [arg, kind] : it->second.refs) {
        bool optional = std::count(it->second.optional_refs.begin(), it->second.optional_refs.end(), arg);
        if (!args.contains(arg) && optional) continue;
        auto ref = text_of(member(args, arg, where + "/args"), where + "/args/" + arg);
        if (op == "iso" && arg == "with" && ref == "cube") continue;
        auto b = binds.find(ref);
        if (b != binds.end()) {
          if (b->second != kind) unresolved(where + "/args/" + arg, ref, kind);
        } else {
          want(ref, kind, where + "/args/" + arg);
        }
      }
      if (step.contains("bind")) {
        auto bind = text_of(step.at("bind"), where + "/bind");
        if (!it->second.result) malformed(where + "/bind", op + " produces nothing to bind");
        if (defined_.count(bind)) malformed(where + "/bind", "'" + bind + "' is already defined");
        binds[bind] = *it->second.result;
      }
    }
    for (const auto& [target, list] : section("checks").items()) {
      std::string where = "/checks/" + target;
      auto kind = binds.count(target) ? binds[target] : defined_.count(target) ? defined_[target] : Kind::Action;
      if (!binds.count(target) && !defined_.count(target)) unresolved(where, target, Kind::System);
      for (const auto& c : strings_of(list, where)) {
        bool ok = kind == Kind::System ? system_checks.count(c) || c.rfind("ISO:", 0) == 0 : kind == Kind::Group && group_checks.count(c);
        if (!ok) malformed(where, "check '" + c + "' does not apply to a " + kind_name(kind));
        if (c.rfind("ISO:", 0) == 0 && c != "ISO:cube") {
          auto other = c.substr(4);
          auto b = binds.find(other);
          if (b == binds.end() ? !defined_.count(other) || defined_[other] != Kind::System : b->second != Kind::System)
            unresolved(where, other, Kind::System);
        }
      }
    }
  }

  void check_group_def(const std::string& name, const json& def) {
    std::string where = "/groups/" + name;
    if (def.contains("product")) {
      for (const auto& f : strings_of(def.at("product"), where + "/product")) want(f, Kind::Group, where);
    } else if (def.contains("semidirect")) {
      auto parts = strings_of(def.at("semidirect"), where + "/semidirect");
      if (parts.size() != 2) malformed(where + "/semidirect", "expected [target, actor]");
      for (const auto& p : parts) want(p, Kind::Group, where);
      want(text_of(member(def, "action", where), where + "/action"), Kind::Action, where);
    } else if (!def.contains("family")) {
      count_of(member(def, "degree", where), where + "/degree");
      member(def, "generators", where);
    }
  }

  void want(const std::string& name, Kind kind, const std::string& where) {
    auto it = defined_.find(name);
    if (it == defined_.end() || it->second != kind) unresolved(where, name, kind);
  }

  const json& section(const char* key) const { return doc_.contains(key) ? doc_.at(key) : empty_object_; }

  Caps effective_caps() const {
    Caps c = caps();
    for (const auto& [key, value] : section("caps").items()) {
      auto n = count_of(value, "/caps/" + key);
      if (key == "closure") c.closure = n;
      else if (key == "product") c.product = n;
      else if (key == "geometry") c.geometry = n;
      else if (key == "involutions") c.involutions = n;
      else if (key == "rank_guard") c.rank_guard = n;
      else malformed("/caps/" + key, "unknown cap");
    }
    if (options_.cap_closure) c.closure = *options_.cap_closure;
    if (options_.cap_product) c.product = *options_.cap_product;
    if (options_.cap_geometry) c.geometry = *options_.cap_geometry;
    if (options_.rank_guard) c.rank_guard = *options_.rank_guard;
    return c;
  }

  // ---- definitions ----

  void resolve_all() {
    ScopedCaps scoped(effective_caps());
    for (const auto& [name, kind] : defined_) switch (kind) {
        case Kind::Group: group(name); break;
        case Kind::System: system(name); break;
        case Kind::Action: action(name); break;
      }
  }

  void enter(const std::string& name) {
    if (!resolving_.insert(name).second) fail(ErrorCode::InvalidArgument, "definition of '" + name + "' refers to itself");
  }

  GroupPtr group(const std::string& name) {
    if (auto it = groups_.find(name); it != groups_.end()) return it->second;
    enter(name);
    const auto& def = section("groups").at(name);
    std::string where = "/groups/" + name;
    GroupPtr g;
    if (def.contains("family")) {
      g = builtin_family(text_of(def.at("family"), where + "/family"), count_of(member(def, "r", where), where + "/r")).group;
    } else if (def.contains("product")) {
      std::vector<GroupPtr> factors;
      for (const auto& f : def.at("product")) factors.push_back(group(f.get<std::string>()));
      g = direct_product_group(factors);
    } else if (def.contains("semidirect")) {
      g = semidirect(group(def.at("semidirect")[0].get<std::string>()), group(def.at("semidirect")[1].get<std::string>()),
                     action(def.at("action").get<std::string>()));
    } else {
      std::size_t degree = def.at("degree").get<std::size_t>();
      const auto& gens = def.at("generators");
      std::vector<Generator> list;
      if (gens.is_object()) {
        for (const auto& [label, perm] : gens.items())
          list.push_back({label, parse_permutation(text_of(perm, where + "/generators/" + label), degree)});
      } else {
        auto texts = strings_of(gens, where + "/generators");
        for (std::size_t k = 0; k < texts.size(); ++k)
          list.push_back({"g" + std::to_string(k), parse_permutation(texts[k], degree)});
      }
      g = Group::permutations(degree, std::move(list));
    }
    resolving_.erase(name);
    return groups_[name] = g;
  }

  CosetSystem system(const std::string& name) {
    if (auto it = systems_.find(name); it != systems_.end()) return it->second;
    const auto& def = section("systems").at(name);
    std::string where = "/systems/" + name;
    std::optional<CosetSystem> s;
    if (def.contains("family")) {
      s = cgroup_system(
          builtin_family(text_of(def.at("family"), where + "/family"), count_of(member(def, "r", where), where + "/r")));
    } else if (def.contains("cgroup")) {
      s = cgroup_system(generator_system(group(def.at("cgroup").get<std::string>())));
    } else {
      auto g = group(def.at("group").get<std::string>());
      auto types = strings_of(member(def, "types", where), where + "/types");
      const auto& parabolics = member(def, "parabolics", where);
      if (!parabolics.is_array()) malformed(where + "/parabolics", "expected an array of label lists");
      std::vector<GroupPtr> subs;
      for (std::size_t k = 0; k < parabolics.size(); ++k) {
        std::vector<Element> gens;
        for (const auto& label : strings_of(parabolics[k], where + "/parabolics/" + std::to_string(k)))
          gens.push_back(generator_of(*g, label, where + "/parabolics/" + std::to_string(k)));
        subs.push_back(generated_by(g->arithmetic_ptr(), gens));
      }
      s = CosetSystem(g, std::move(types), std::move(subs));
    }
    return systems_.emplace(name, *s).first->second;
  }

  Element generator_of(const Group& g, const std::string& label, const std::string& where) {
    for (const auto& gen : g.generators())
      if (gen.label == label) return gen.element;
    fail(ErrorCode::UnresolvedReference, where + ": no generator labelled '" + label + "'");
  }

  ActionPtr action(const std::string& name) {
    if (auto it = actions_.find(name); it != actions_.end()) return it->second;
    enter(name);
    const auto& def = section("actions").at(name);
    std::string where = "/actions/" + name;
    auto actor = group(def.at("actor").get<std::string>());
    auto target = group(def.at("target").get<std::string>());
    auto kind = def.contains("kind") ? text_of(def.at("kind"), where + "/kind") : "conjugation";
    auto level = Validation::Exhaustive;
    if (def.contains("validation")) {
      auto v = text_of(def.at("validation"), where + "/validation");
      if (v == "fast") level = Validation::Fast;
      else if (v != "exhaustive") malformed(where + "/validation", "expected \"fast\" or \"exhaustive\"");
    }
    ActionSpec spec;
    if (kind == "trivial") {
      spec = ActionSpec::trivial(actor, target);
    } else if (kind == "conjugation") {
      spec = ActionSpec::conjugation(actor, target);
    } else if (kind == "automorphisms") {
      if (!target->is_permutation()) malformed(where, "automorphism images need a permutation target");
      std::size_t degree = target->identity().perm().degree();
      std::map<std::string, std::unordered_map<std::string, Element>> images;
      for (const auto& [b, table] : member(def, "images", where).items())
        for (const auto& [a, perm] : table.items())
          images[b].emplace(a, parse_permutation(text_of(perm, where + "/images/" + b + "/" + a), degree));
      spec = ActionSpec::automorphisms(actor, target, std::move(images));
    } else if (kind == "coordinates") {
      const auto& id = target->identity();
      if (id.kind() != Element::Kind::Tuple) malformed(where, "coordinate action needs a product target");
      std::vector<Permutation> coords;
      for (const auto& t : strings_of(member(def, "coordinates", where), where + "/coordinates"))
        coords.push_back(parse_permutation(t, id.parts().size()));
      spec = ActionSpec::coordinate_permutation(actor, target, std::move(coords));
    } else {
      malformed(where + "/kind", "unknown action kind '" + kind + "'");
    }
    auto phi = validate(spec, level);
    resolving_.erase(name);
    return actions_[name] = phi;
  }

  bool bound(const std::string& name) const {
    return systems_.count(name) || groups_.count(name) || bound_systems_.count(name) || bound_groups_.count(name);
  }

  CosetSystem system_ref(const std::string& name) {
    if (auto it = bound_systems_.find(name); it != bound_systems_.end()) return it->second;
    return system(name);
  }

  GroupPtr group_ref(const std::string& name) {
    if (auto it = bound_groups_.find(name); it != bound_groups_.end()) return it->second;
    return group(name);
  }

  // ---- execution ----

  Outcome execute(const std::string& op, const json& args, const json& step) {
    std::optional<CosetSystem> out_system;
    GroupPtr out_group;
    Outcome out;
    auto reps = [&] { return args.contains("reps") ? counts_of(args.at("reps"), "reps") : std::vector<std::size_t>{}; };
    auto str = [&](const char* key) { return args.at(key).get<std::string>(); };
    if (op == "twist") {
      out_system = twist(system_ref(str("alpha")), system_ref(str("beta")), action(str("action")), reps()).system;
    } else if (op == "wreath") {
      auto beta = system_ref(str("beta"));
      auto texts = strings_of(member(args, "omega", "wreath"), "wreath/omega");
      std::size_t n = count_of(member(args, "n", "wreath"), "wreath/n");
      std::vector<Permutation> omega;
      for (const auto& t : texts) omega.push_back(parse_permutation(t, n));
      out_system = wreath(system_ref(str("alpha")), beta, omega, reps()).system;
    } else if (op == "direct_product") {
      out_system = direct_product(system_ref(str("alpha")), system_ref(str("beta")));
    } else if (op == "direct_power") {
      out_system = direct_power(system_ref(str("alpha")), count_of(member(args, "n", "direct_power"), "direct_power/n"));
    } else if (op == "self_dual") {
      auto sd = self_dual_twist(generator_system(group_ref(str("group"))), reps());
      out_system = sd.twist.system;
      out.witness = {{"diagram", sd.diagram.to_string()}, {"linear", sd.diagram.linear}};
    } else if (op == "cgroup") {
      out_system = cgroup_system(generator_system(group_ref(str("group"))));
    } else if (op == "residue") {
      auto s = system_ref(str("system"));
      out_system = residue_system(s, s.type_set(strings_of(member(args, "types", "residue"), "residue/types")));
    } else if (op == "halve") {
      auto h = halve(generator_system(group_ref(str("group"))), count_of(member(args, "a", "halve"), "halve/a"),
                     count_of(member(args, "b", "halve"), "halve/b"));
      out_group = h.system.group;
      if (h.order != h.original_order) {
        out.pass = false;
        out.witness = {{"order", h.order}, {"original_order", h.original_order}};
      }
    } else if (op == "search") {
      auto g = group_ref(str("group"));
      if (!g->is_permutation()) fail(ErrorCode::InvalidArgument, "search needs a permutation group");
      auto t = parse_permutation(str("t"), g->identity().perm().degree());
      out_group = search_rank3_polytope(g, t).group;
    } else if (op == "materialize") {
      auto m = materialize(system_ref(str("system")));
      if (args.contains("dot")) write(str("dot"), export_dot(m.geometry));
      if (args.contains("json")) write(str("json"), export_json(m.geometry));
    } else if (op == "iso") {
      auto lhs = materialize_geometry(system_ref(str("system")));
      std::string with = args.contains("with") ? str("with") : "cube";
      auto rhs = with == "cube" ? cube_reference() : materialize_geometry(system_ref(with));
      if (!colored_isomorphic(lhs, rhs)) {
        out.pass = false;
        out.witness = {{"reason", "no type-preserving isomorphism"}};
      }
    }
    if (step.contains("bind")) {
      auto name = step.at("bind").get<std::string>();
      if (out_system) bound_systems_.insert_or_assign(name, *out_system);
      if (out_group) bound_groups_[name] = out_group;
    }
    if (out.pass) out.witness = nullptr;
    return out;
  }

  void write(const std::string& path, const std::string& text) {
    std::filesystem::path p(path);
    if (p.is_relative()) p = std::filesystem::path(options_.base_dir) / p;
    std::ofstream f(p);
    if (!(f << text)) fail(ErrorCode::InvalidArgument, "cannot write " + p.string());
  }

  static Outcome from(const CheckReport& r) { return {r.pass, r.pass ? json(nullptr) : r.witness}; }

  Outcome run_check(const std::string& check, const std::string& target) {
    if (group_checks.count(check)) {
      auto s = generator_system(group_ref(target));
      if (check == "STRING") return from(check_string_property(s));
      if (check == "IP") return from(check_intersection_property(s));
      if (check == "IP:reduced") return from(check_intersection_property(s, IpMode::Reduced2E16));
      auto d = coxeter_diagram(s);
      return {d.linear, json{{"diagram", d.to_string()}}};
    }
    auto s = system_ref(target);
    if (check == "FT") return from(check_flag_transitive(s, FtMethod::Product));
    if (check == "FT:triple") return from(check_flag_transitive(s, FtMethod::Triple));
    if (check == "FT:geometry") return from(check_flag_transitive(s, FtMethod::Geometry));
    if (check == "RC") return from(check_residually_connected(s, RcVariant::RC1));
    if (check == "RC:RC2") return from(check_residually_connected(s, RcVariant::RC2));
    if (check == "RC:intersection") return from(check_residually_connected(s, RcVariant::Intersection));
    if (check == "FIRM") return from(check_firm_thin(s).first);
    if (check == "THIN") return from(check_firm_thin(s).second);
    if (check == "PI") return from(check_product_of_intersections(s));
    auto lhs = materialize_geometry(s);
    auto other = check.substr(4);
    auto rhs = other == "cube" ? cube_reference() : materialize_geometry(system_ref(other));
    if (colored_isomorphic(lhs, rhs)) return {};
    return {false, json{{"reason", "no type-preserving isomorphism"}}};
  }

  json doc_;
  RunOptions options_;
  const json empty_ = json::array();
  const json empty_object_ = json::object();
  std::map<std::string, Kind> defined_;
  std::set<std::string> resolving_;
  std::map<std::string, GroupPtr> groups_;
  std::map<std::string, CosetSystem> systems_;
  std::map<std::string, ActionPtr> actions_;
  std::map<std::string, GroupPtr> bound_groups_;
  std::map<std::string, CosetSystem> bound_systems_;
};

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
    if (text[k] == '\n') ++line, col = 1;
    else ++col;
  }
  return {line, col};
}

}  // namespace

json parse_spec(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte);
    fail(ErrorCode::ParseError, "line " + std::to_string(line) + ", col " + std::to_string(col) + ": invalid JSON");
  }
}

Report run_pipeline(const std::string& text, const RunOptions& options) {
  return Runner(parse_spec(text), options).run();
}

Report run_pipeline_file(const std::string& path, RunOptions options) {
  std::ifstream f(path);
  if (!f) fail(ErrorCode::InvalidArgument, "cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return run_pipeline(ss.str(), options);
}

}  // namespace geoforge
