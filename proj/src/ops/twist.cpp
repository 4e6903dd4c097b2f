#include <algorithm>
#include <numeric>

#include "geoforge/error.hpp"
#include "geoforge/ops.hpp"
#include "ops_internal.hpp"

namespace geoforge {

TypeAction::TypeAction(GroupPtr actor, std::size_t types, std::vector<Permutation> images)
    : actor_(std::move(actor)), types_(types), images_(std::move(images)) {
  if (images_.size() != actor_->generators().size())
    fail(ErrorCode::InvalidArgument, "expected one type permutation per actor generator");
  for (const auto& p : images_)
    if (p.degree() != types_)
      fail(ErrorCode::DegreeMismatch, "type permutation " + p.to_string() + " is not of degree " +
                                          std::to_string(types_));
  // (b s)(i) = b(s(i))
  table_ = detail::bfs_table<Permutation>(
      *actor_, Permutation(types_), [&](const Permutation& pb, std::size_t s) { return images_[s] * pb; }, true,
      "type action");
  std::vector<bool> seen(types_, false);
  for (std::size_t i = 0; i < types_; ++i) {
    if (seen[i]) continue;
    TypeSet orbit = orbit_under(*actor_, i);
    for (std::size_t k = 0; k < types_; ++k)
      if (has_type(orbit, k)) seen[k] = true;
    orbits_.push_back(orbit);
  }
}

std::size_t TypeAction::image(const Element& b, std::size_t i) const {
  auto it = table_.find(b);
  if (it == table_.end()) fail(ErrorCode::InvalidArgument, "element " + b.to_string() + " outside the actor group");
  return it->second[i];
}

std::size_t TypeAction::orbit_of(std::size_t i) const {
  for (std::size_t k = 0; k < orbits_.size(); ++k)
    if (has_type(orbits_[k], i)) return k;
  fail(ErrorCode::UnknownType, "type index " + std::to_string(i) + " out of range");
}

TypeSet TypeAction::orbit_under(const Group& h, std::size_t i) const {
  TypeSet orbit = single_type(i);
  std::vector<std::size_t> queue{i};
  const auto gens = h.generator_elements();
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (const auto& g : gens) {
      std::size_t j = image(g, queue[q]);
      if (!has_type(orbit, j)) {
        orbit |= single_type(j);
        queue.push_back(j);
      }
    }
  return orbit;
}

TypeAction validate_action(const ActionPtr& phi, const CosetSystem& alpha) {
  if (!phi) fail(ErrorCode::ActionNotValidated, "type action needs a validated action");
  if (!phi->spec().target->same_domain(*alpha.group()))
    fail(ErrorCode::ActionNotValidated, "the action's target is not the group of the system");
  const auto& actor = phi->spec().actor;
  const std::size_t n = alpha.rank();
  std::vector<Permutation> images;
  for (const auto& s : actor->generators()) {
    std::vector<Permutation::Point> img(n);
    std::vector<bool> used(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Element> moved;
      for (const auto& a : alpha.maximal(i)->generator_elements()) moved.push_back(phi->apply(s.element, a));
      auto h = generated_by(alpha.group()->arithmetic_ptr(), moved);
      std::optional<std::size_t> match;
      if (!used[i] && same_subgroup(*h, *alpha.maximal(i))) match = i;
      for (std::size_t j = 0; j < n && !match; ++j)
        if (!used[j] && same_subgroup(*h, *alpha.maximal(j))) match = j;
      if (!match)
        fail(ErrorCode::NotParabolicPermuting, "actor generator " + s.label + " sends the parabolic of type " +
                                                   alpha.types()[i] + " outside the maximal parabolics");
      used[*match] = true;
      img[i] = static_cast<Permutation::Point>(*match);
    }
    images.push_back(Permutation::from_images(std::move(img)));
  }
  return TypeAction(actor, n, std::move(images));
}

std::optional<std::pair<TypeSet, TypeSet>> OrbitTable::ipo_violation() const {
  for (TypeSet m = 0; m < lower.size(); ++m) {
    if ((m & beta_types) != m) continue;
    for (TypeSet k = 0; k < lower.size(); ++k) {
      if ((k & beta_types) != k) continue;
      if ((lower[m] & lower[k]) != lower[m & k]) return std::make_pair(m, k);
    }
  }
  return std::nullopt;
}

OrbitTable orbit_table(const TypeAction& action, const CosetSystem& beta, TypeSet orbit, std::size_t representative) {
  if (!has_type(orbit, representative))
    fail(ErrorCode::RepNotValid, "representative " + std::to_string(representative) + " is not in the orbit");
  OrbitTable t;
  t.orbit = orbit;
  t.representative = representative;
  t.beta_types = beta.all_types();
  t.lower.assign(std::size_t{1} << beta.rank(), 0);
  for (TypeSet m : subsets_of(beta.rank()))
    t.lower[m] = action.orbit_under(*beta.parabolic(t.beta_types & ~m), representative);
  return t;
}

bool Admissibility::admissible() const {
  return std::all_of(valid.begin(), valid.end(), [](const auto& v) { return !v.empty(); });
}

Admissibility check_admissible(const TypeAction& action, const CosetSystem& beta) {
  if (!action.actor()->same_domain(*beta.group()))
    fail(ErrorCode::MixedGroupOperands, "the type action's actor is not the group of beta");
  Admissibility out;
  out.orbits = action.orbits();
  for (TypeSet orbit : out.orbits) {
    out.valid.emplace_back();
    out.rejected.emplace_back();
    for (std::size_t f = 0; f < action.types(); ++f) {
      if (!has_type(orbit, f)) continue;
      auto bad = orbit_table(action, beta, orbit, f).ipo_violation();
      if (bad)
        out.rejected.back().emplace(f, *bad);
      else
        out.valid.back().push_back(f);
    }
  }
  return out;
}

Admissibility check_admissible(const CosetSystem& alpha, const CosetSystem& beta, const ActionPtr& phi) {
  return check_admissible(validate_action(phi, alpha), beta);
}

Twist twist(const CosetSystem& alpha, const CosetSystem& beta, const ActionPtr& phi, std::vector<std::size_t> reps) {
  if (!phi) fail(ErrorCode::ActionNotValidated, "twisting needs a validated action");
  if (!phi->certified())
    fail(ErrorCode::ActionNotValidated, "twisting needs an exhaustively validated action");
  if (!phi->spec().actor->same_domain(*beta.group()))
    fail(ErrorCode::ActionNotValidated, "the action's actor is not the group of beta");
  auto types = validate_action(phi, alpha);
  auto adm = check_admissible(types, beta);
  const auto& orbits = types.orbits();
  for (std::size_t k = 0; k < orbits.size(); ++k)
    if (adm.valid[k].empty())
      fail(ErrorCode::NotAdmissible, "no representative of orbit " + alpha.format(orbits[k]) + " satisfies (IPO)");
  if (reps.empty())
    for (const auto& v : adm.valid) reps.push_back(v.front());
  if (reps.size() != orbits.size())
    fail(ErrorCode::InvalidArgument, "expected " + std::to_string(orbits.size()) + " representatives, got " +
                                         std::to_string(reps.size()));
  std::vector<OrbitTable> tables;
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    const auto& v = adm.valid[k];
    if (std::find(v.begin(), v.end(), reps[k]) == v.end())
      fail(ErrorCode::RepNotValid, "representative " + std::to_string(reps[k]) + " of orbit " +
                                       alpha.format(orbits[k]) + " is not valid");
    tables.push_back(orbit_table(types, beta, orbits[k], reps[k]));
  }

  auto g = semidirect(alpha.group(), beta.group(), phi);
  std::vector<std::string> labels;
  std::vector<GroupPtr> parabolics;
  for (TypeSet orbit : orbits) {
    labels.push_back(alpha.format(orbit));
    parabolics.push_back(semidirect_subgroup(g, *alpha.parabolic(orbit), *beta.group()));
  }
  for (std::size_t i = 0; i < beta.rank(); ++i) {
    TypeSet x = 0;
    for (const auto& t : tables) x |= t.orbit & ~t.upper(single_type(i));
    labels.push_back(beta.types()[i]);
    parabolics.push_back(semidirect_subgroup(g, *alpha.parabolic(x), *beta.maximal(i)));
  }
  CosetSystem sys(g, std::move(labels), std::move(parabolics));
  return Twist{std::move(sys), alpha, beta, phi, std::move(types), std::move(tables), std::move(reps)};
}

GroupPtr twist_parabolic_formula(const Twist& t, TypeSet j) {
  const std::size_t k = t.orbit_count();
  const TypeSet jb = (j >> k) & t.beta.all_types();
  TypeSet covered = 0, chosen = 0;
  for (std::size_t l = 0; l < k; ++l) {
    covered |= t.tables[l].upper(jb);
    if (has_type(j, l)) chosen |= t.tables[l].orbit;
  }
  TypeSet x = (t.alpha.all_types() & ~covered) | chosen;
  return semidirect_subgroup(t.system.group(), *t.alpha.parabolic(x), *t.beta.parabolic(jb));
}

Twist wreath(const CosetSystem& alpha, const CosetSystem& beta, const std::vector<Permutation>& omega,
             std::vector<std::size_t> reps) {
  if (omega.empty() && beta.group()->generators().empty())
    fail(ErrorCode::InvalidArgument, "cannot infer the index set from a trivial actor");
  const std::size_t n = omega.empty() ? 1 : omega.front().degree();
  auto bar = direct_power(alpha, n);
  auto spec = ActionSpec::coordinate_permutation(beta.group(), bar.group(), omega);
  return twist(bar, beta, validate(spec), std::move(reps));
}

namespace {

SelfDualTwist finish_self_dual(Twist t, const GeneratorSystem& s, bool inner) {
  const auto& g = t.system.group();
  const Element id = g->identity();
  std::vector<Generator> gens;
  for (auto f : t.representatives) gens.push_back({s.label(f), Element::pair(s.rho(f), id.second())});
  const auto& tau = t.beta.group()->generators().front();
  gens.push_back({tau.label, Element::pair(id.first(), tau.element)});
  GeneratorSystem sys{Group::make(g->arithmetic_ptr(), std::move(gens))};
  auto diagram = coxeter_diagram(sys);
  return SelfDualTwist{std::move(t), std::move(sys), std::move(diagram), inner};
}

struct DualSetup {
  CosetSystem alpha;
  CosetSystem beta;
  ActionPtr phi;
  bool inner;
};

DualSetup dual_setup(const GeneratorSystem& s) {
  if (!check_string_property(s).pass) fail(ErrorCode::InvalidArgument, "the generator system is not a string group");
  const std::size_t n = s.rank();
  std::unordered_map<std::string, Element> images;
  for (std::size_t i = 0; i < n; ++i) images.emplace(s.label(i), s.rho(n - 1 - i));
  bool inner = false;
  try {
    inner = automorphism_from_images(s.group, images, true).is_inner();
  } catch (const CapExceeded&) {
    throw;
  } catch (const Error& e) {
    fail(ErrorCode::NotSelfDual, std::string("reversing the generators is not an automorphism: ") + e.what());
  }
  auto b = Group::permutations(2, std::vector<Generator>{{"tau", parse_permutation("(1,2)", 2)}});
  CosetSystem beta(b, {"tau"}, {Group::trivial(b->arithmetic_ptr())});
  auto phi = validate(ActionSpec::automorphisms(b, s.group, {{"tau", images}}));
  return {cgroup_system(s), std::move(beta), std::move(phi), inner};
}

}  // namespace

SelfDualTwist self_dual_twist(const GeneratorSystem& s, std::vector<std::size_t> reps) {
  auto setup = dual_setup(s);
  if (reps.empty())
    for (std::size_t i = 0; i < (s.rank() + 1) / 2; ++i) reps.push_back(i);
  return finish_self_dual(twist(setup.alpha, setup.beta, setup.phi, std::move(reps)), s, setup.inner);
}

std::vector<SelfDualTwist> self_dual_choices(const GeneratorSystem& s) {
  auto setup = dual_setup(s);
  auto adm = check_admissible(setup.alpha, setup.beta, setup.phi);
  std::vector<SelfDualTwist> out;
  std::vector<std::size_t> pick(adm.valid.size(), 0);
  while (true) {
    std::vector<std::size_t> reps;
    for (std::size_t k = 0; k < pick.size(); ++k) reps.push_back(adm.valid[k][pick[k]]);
    out.push_back(finish_self_dual(twist(setup.alpha, setup.beta, setup.phi, reps), s, setup.inner));
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == adm.valid[k].size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  return out;
}

}  // namespace geoforge
