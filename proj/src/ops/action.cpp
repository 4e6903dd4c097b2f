#include <algorithm>
#include <set>

#include "geoforge/caps.hpp"
#include "geoforge/error.hpp"
#include "geoforge/ops.hpp"
#include "ops_internal.hpp"

namespace geoforge {

std::string to_string(ActionKind k) {
  switch (k) {
    case ActionKind::Trivial: return "trivial";
    case ActionKind::Conjugation: return "conjugation";
    case ActionKind::AutomorphismImages: return "automorphism-images";
    case ActionKind::CoordinatePermutation: return "coordinate-permutation";
  }
  return "?";
}

std::string to_string(Validation v) { return v == Validation::Fast ? "fast" : "exhaustive"; }

ActionSpec ActionSpec::trivial(GroupPtr actor, GroupPtr target) {
  ActionSpec s;
  s.actor = std::move(actor);
  s.target = std::move(target);
  return s;
}

ActionSpec ActionSpec::conjugation(GroupPtr actor, GroupPtr target) {
  auto s = trivial(std::move(actor), std::move(target));
  s.kind = ActionKind::Conjugation;
  return s;
}

ActionSpec ActionSpec::automorphisms(GroupPtr actor, GroupPtr target,
                                     std::map<std::string, std::unordered_map<std::string, Element>> images) {
  auto s = trivial(std::move(actor), std::move(target));
  s.kind = ActionKind::AutomorphismImages;
  s.images = std::move(images);
  return s;
}

ActionSpec ActionSpec::coordinate_permutation(GroupPtr actor, GroupPtr target, std::vector<Permutation> coordinates) {
  auto s = trivial(std::move(actor), std::move(target));
  s.kind = ActionKind::CoordinatePermutation;
  s.coordinates = std::move(coordinates);
  return s;
}

Element ValidatedAction::apply(const Element& b, const Element& a) const {
  switch (spec_.kind) {
    case ActionKind::Trivial: return a;
    case ActionKind::Conjugation: {
      const auto& ar = spec_.target->arithmetic();
      return ar.multiply(ar.multiply(b, a), ar.inverse(b));
    }
    case ActionKind::AutomorphismImages: {
      auto it = tables_.find(b);
      if (it == tables_.end()) fail(ErrorCode::InvalidArgument, "actor element " + b.to_string() + " is unknown");
      const auto& elements = spec_.target->elements();
      std::size_t k = elements.index_of(a);
      if (k == elements.size()) fail(ErrorCode::InvalidArgument, "element " + a.to_string() + " outside the target");
      return elements[it->second[k]];
    }
    case ActionKind::CoordinatePermutation: {
      auto it = coordinate_images_.find(b);
      if (it == coordinate_images_.end())
        fail(ErrorCode::InvalidArgument, "actor element " + b.to_string() + " is unknown");
      const auto& pi = it->second;
      auto parts = a.parts();
      std::vector<Element> out(parts.size());
      for (std::size_t w = 0; w < parts.size(); ++w) out[w] = parts[pi[w]];
      return Element::tuple(std::move(out));
    }
  }
  return a;
}

namespace {

std::unordered_map<std::string, Element> images_for(const ActionSpec& spec, const std::string& label) {
  auto it = spec.images.find(label);
  if (it == spec.images.end()) fail(ErrorCode::InvalidArgument, "no automorphism given for actor generator " + label);
  return it->second;
}

// Generator images of target generators under one automorphism, in order.
std::vector<Element> ordered_images(const Group& target, const std::unordered_map<std::string, Element>& images,
                                    const std::string& actor_label) {
  std::vector<Element> out;
  for (const auto& g : target.generators()) {
    auto it = images.find(g.label);
    if (it == images.end())
      fail(ErrorCode::InvalidArgument, "actor generator " + actor_label + " gives no image for " + g.label);
    out.push_back(it->second);
  }
  return out;
}

void screen_orders(const Group& target, const std::vector<Element>& imgs, const std::string& actor_label) {
  const auto& gens = target.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j) {
      Element x = i == j ? gens[i].element : target.multiply(gens[i].element, gens[j].element);
      Element y = i == j ? imgs[i] : target.multiply(imgs[i], imgs[j]);
      auto ox = target.element_order(x), oy = target.element_order(y);
      if (ox != oy)
        fail(ErrorCode::NotAHomomorphism, "actor generator " + actor_label + ": order of " + gens[i].label +
                                              (i == j ? "" : "*" + gens[j].label) + " is " + std::to_string(ox) +
                                              " but its image has order " + std::to_string(oy));
    }
}

// Index permutation of the target's elements for the map generated by imgs.
std::vector<std::uint32_t> extend_unchecked(const Group& target, const std::vector<Element>& imgs) {
  const auto& elements = target.elements();
  auto images = detail::bfs_table<Element>(
      target, target.identity(), [&](const Element& fx, std::size_t s) { return target.multiply(fx, imgs[s]); },
      false, "automorphism");
  std::vector<std::uint32_t> out(elements.size());
  std::vector<bool> hit(elements.size(), false);
  for (std::size_t k = 0; k < elements.size(); ++k) {
    std::size_t m = elements.index_of(images.at(elements[k]));
    if (m == elements.size() || hit[m])
      fail(ErrorCode::NotBijective, "generator images do not define a bijection of the target");
    hit[m] = true;
    out[k] = static_cast<std::uint32_t>(m);
  }
  return out;
}

}  // namespace

ActionPtr validate(const ActionSpec& spec, Validation level) {
  if (!spec.actor || !spec.target) fail(ErrorCode::InvalidArgument, "action needs an actor and a target group");
  std::shared_ptr<ValidatedAction> out(new ValidatedAction());
  out->spec_ = spec;
  out->level_ = level;
  out->certified_ = true;
  const Group& actor = *spec.actor;
  const Group& target = *spec.target;
  switch (spec.kind) {
    case ActionKind::Trivial: break;
    case ActionKind::Conjugation: {
      if (!actor.is_permutation() || !target.is_permutation() || !actor.same_domain(target))
        fail(ErrorCode::InvalidArgument, "conjugation needs permutation groups of one degree");
      for (const auto& b : actor.generators())
        for (const auto& a : target.generators()) {
          Element c = target.multiply(target.multiply(b.element, a.element), target.inverse(b.element));
          if (!target.contains(c))
            fail(ErrorCode::InvalidArgument, "actor generator " + b.label + " does not normalize the target: " +
                                                 a.label + " leaves it");
        }
      break;
    }
    case ActionKind::AutomorphismImages: {
      const auto& elements = target.elements();
      const std::uint64_t cells = elements.size() * actor.order();
      if (cells > caps().closure) throw CapExceeded("action table", caps().closure, cells);
      std::vector<std::vector<std::uint32_t>> per_gen;
      for (const auto& b : actor.generators()) {
        auto imgs = images_for(spec, b.label);
        if (level == Validation::Exhaustive) {
          auto f = automorphism_from_images(spec.target, imgs, false);
          std::vector<std::uint32_t> t(elements.size());
          for (std::size_t k = 0; k < elements.size(); ++k)
            t[k] = static_cast<std::uint32_t>(elements.index_of(f(elements[k])));
          per_gen.push_back(std::move(t));
        } else {
          auto ordered = ordered_images(target, imgs, b.label);
          screen_orders(target, ordered, b.label);
          per_gen.push_back(extend_unchecked(target, ordered));
        }
      }
      std::vector<std::uint32_t> id(elements.size());
      for (std::size_t k = 0; k < id.size(); ++k) id[k] = static_cast<std::uint32_t>(k);
      // phi(b s) = phi(b) o phi(s)
      out->tables_ = detail::bfs_table<std::vector<std::uint32_t>>(
          actor, id,
          [&](const std::vector<std::uint32_t>& fb, std::size_t s) {
            std::vector<std::uint32_t> t(fb.size());
            for (std::size_t k = 0; k < t.size(); ++k) t[k] = fb[per_gen[s][k]];
            return t;
          },
          level == Validation::Exhaustive, "action of the actor group");
      out->certified_ = level == Validation::Exhaustive;
      break;
    }
    case ActionKind::CoordinatePermutation: {
      const auto id = target.identity();
      if (id.kind() != Element::Kind::Tuple)
        fail(ErrorCode::InvalidArgument, "coordinate permutation needs a direct product target");
      const std::size_t n = id.parts().size();
      if (spec.coordinates.size() != actor.generators().size())
        fail(ErrorCode::InvalidArgument, "expected one coordinate permutation per actor generator");
      for (const auto& p : spec.coordinates)
        if (p.degree() != n)
          fail(ErrorCode::DegreeMismatch, "coordinate permutation " + p.to_string() + " is not of degree " +
                                              std::to_string(n));
      std::vector<Element> imgs(spec.coordinates.begin(), spec.coordinates.end());
      Homomorphism pi(spec.actor, permutation_arithmetic(n), imgs);
      for (const auto& b : actor.elements()) out->coordinate_images_.emplace(b, pi(b).perm());
      // the coordinates must be copies of one group for the swap to stay inside the target
      for (const auto& g : target.generators())
        for (const auto& b : actor.generators())
          if (!target.contains(out->apply(b.element, g.element)))
            fail(ErrorCode::InvalidArgument, "coordinate permutation leaves the target at " + g.label);
      break;
    }
  }
  return out;
}

GroupPtr semidirect(const GroupPtr& a, const GroupPtr& b, const ActionPtr& phi) {
  if (!phi) fail(ErrorCode::ActionNotValidated, "semidirect product needs a validated action");
  if (!phi->spec().target->same_domain(*a) || !phi->spec().actor->same_domain(*b))
    fail(ErrorCode::ActionNotValidated, "the validated action was built for other groups");
  auto arith = semidirect_arithmetic(a->arithmetic_ptr(), b->arithmetic_ptr(), phi);
  std::vector<Generator> gens;
  std::set<std::string> used;
  auto label = [&](std::string l) {
    while (!used.insert(l).second) l += "'";
    return l;
  };
  for (const auto& g : a->generators()) gens.push_back({label(g.label), Element::pair(g.element, b->identity())});
  for (const auto& g : b->generators()) gens.push_back({label(g.label), Element::pair(a->identity(), g.element)});
  return Group::make(std::move(arith), std::move(gens));
}

GroupPtr semidirect_subgroup(const GroupPtr& g, const Group& x, const Group& y) {
  const Element id = g->identity();
  std::vector<Element> gens;
  for (const auto& a : x.generator_elements()) gens.push_back(Element::pair(a, id.second()));
  for (const auto& b : y.generator_elements()) gens.push_back(Element::pair(id.first(), b));
  return generated_by(g->arithmetic_ptr(), gens);
}

}  // namespace geoforge
