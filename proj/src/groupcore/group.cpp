#include "geoforge/group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "geoforge/caps.hpp"
#include "geoforge/error.hpp"

namespace geoforge {
namespace {

ElementSet closure(const Arithmetic& arith, const std::vector<Element>& gens, std::uint64_t cap) {
  std::unordered_set<Element, ElementHash> seen;
  std::vector<Element> order;
  Element id = arith.identity();
  seen.insert(id);
  order.push_back(id);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& s : gens) {
      Element next = arith.multiply(order[i], s);
      if (seen.insert(next).second) {
        if (seen.size() > cap) throw CapExceeded("closure enumeration", cap, seen.size());
        order.push_back(std::move(next));
      }
    }
  }
  return ElementSet(std::move(order));
}

}  // namespace

Group::Group(Private, ArithmeticPtr arith, std::vector<Generator> gens, std::optional<ElementSet> elements)
    : arith_(std::move(arith)), gens_(std::move(gens)), explicit_(elements.has_value()) {
  if (explicit_) {
    elements_ = std::move(elements);
    std::call_once(elements_once_, [] {});
  } else {
    std::call_once(gens_once_, [] {});
  }
}

GroupPtr Group::make(ArithmeticPtr arith, std::vector<Generator> gens) {
  if (arith->is_permutation()) {
    for (const auto& g : gens) {
      if (!g.element.is_perm())
        fail(ErrorCode::MixedGroupOperands, "generator " + g.label + " is not a permutation");
      if (g.element.perm().degree() != arith->degree())
        fail(ErrorCode::DegreeMismatch, "generator " + g.label + " has degree " +
                                            std::to_string(g.element.perm().degree()) + ", expected " +
                                            std::to_string(arith->degree()));
    }
  }
  return std::make_shared<const Group>(Private{}, std::move(arith), std::move(gens), std::nullopt);
}

GroupPtr Group::permutations(std::size_t degree, std::vector<Generator> gens) {
  return make(permutation_arithmetic(degree), std::move(gens));
}

GroupPtr Group::permutations(std::size_t degree, const std::vector<Permutation>& gens) {
  std::vector<Generator> labeled;
  for (std::size_t i = 0; i < gens.size(); ++i) labeled.push_back({"g" + std::to_string(i), gens[i]});
  return permutations(degree, std::move(labeled));
}

GroupPtr Group::from_elements(ArithmeticPtr arith, ElementSet elements) {
  return std::make_shared<const Group>(Private{}, std::move(arith), std::vector<Generator>{},
                                       std::move(elements));
}

GroupPtr Group::trivial(ArithmeticPtr arith) {
  Element id = arith->identity();
  return from_elements(std::move(arith), ElementSet({id}));
}

void Group::extract_generators() const {
  // Greedy: walk the elements in order and keep each one not yet generated.
  const Arithmetic& arith = *arith_;
  std::vector<Element> picked;
  std::unordered_set<Element, ElementHash> generated{arith.identity()};
  for (const auto& x : elements_->elements()) {
    if (generated.count(x)) continue;
    picked.push_back(x);
    auto now = closure(arith, picked, std::max<std::uint64_t>(elements_->size(), 1));
    generated = std::unordered_set<Element, ElementHash>(now.begin(), now.end());
    if (generated.size() == elements_->size()) break;
  }
  for (std::size_t i = 0; i < picked.size(); ++i) gens_.push_back({"x" + std::to_string(i), picked[i]});
}

const std::vector<Generator>& Group::generators() const {
  std::call_once(gens_once_, [this] { extract_generators(); });
  return gens_;
}

std::vector<Element> Group::generator_elements() const {
  std::vector<Element> out;
  for (const auto& g : generators()) out.push_back(g.element);
  return out;
}

const Element& Group::generator(const std::string& label) const {
  for (const auto& g : generators())
    if (g.label == label) return g.element;
  fail(ErrorCode::UnresolvedReference, "no generator labeled '" + label + "'");
}

Element Group::multiply(const Element& a, const Element& b) const { return arith_->multiply(a, b); }

Element Group::power(const Element& a, std::uint64_t k) const {
  Element result = identity();
  Element base = a;
  while (k) {
    if (k & 1u) result = multiply(result, base);
    base = multiply(base, base);
    k >>= 1u;
  }
  return result;
}

std::uint64_t Group::element_order(const Element& g) const {
  if (g.is_perm()) return g.perm().order();
  Element id = identity();
  Element x = g;
  std::uint64_t k = 1;
  const std::uint64_t limit = caps().closure;
  while (x != id) {
    x = multiply(x, g);
    if (++k > limit) throw CapExceeded("element order search", limit, k);
  }
  return k;
}

const StabilizerChain* Group::chain() const {
  if (!is_permutation()) return nullptr;
  std::call_once(chain_once_, [this] {
    std::vector<Permutation> perms;
    for (const auto& g : generators()) perms.push_back(g.element.perm());
    chain_ = std::make_unique<StabilizerChain>(arith_->degree(), perms);
  });
  return chain_.get();
}

const ElementSet& Group::elements() const {
  std::call_once(elements_once_, [this] {
    const std::uint64_t cap = caps().closure;
    if (is_permutation()) {
      auto n = chain()->order();
      if (n > cap) throw CapExceeded("closure enumeration", cap, n);
    }
    elements_ = closure(*arith_, generator_elements(), cap);
  });
  return *elements_;
}

std::uint64_t Group::order() const {
  if (explicit_) return elements_->size();
  if (is_permutation()) return chain()->order();
  return elements().size();
}

bool Group::contains(const Element& g) const {
  if (explicit_) return elements_->contains(g);
  if (is_permutation()) {
    if (!g.is_perm()) fail(ErrorCode::MixedGroupOperands, "membership of non-permutation " + g.to_string());
    return chain()->contains(g.perm());
  }
  return elements().contains(g);
}

GroupPtr generated_by(const ArithmeticPtr& arith, const std::vector<Element>& elements) {
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < elements.size(); ++i) gens.push_back({"x" + std::to_string(i), elements[i]});
  return Group::make(arith, std::move(gens));
}

GroupPtr join_subgroups(const std::vector<GroupPtr>& groups) {
  if (groups.empty()) fail(ErrorCode::InvalidArgument, "join of no subgroups");
  std::vector<Element> gens;
  for (const auto& g : groups) {
    if (!g->same_domain(*groups.front()))
      fail(ErrorCode::MixedGroupOperands, "join of subgroups from different groups");
    for (const auto& x : g->generator_elements()) gens.push_back(x);
  }
  return generated_by(groups.front()->arithmetic_ptr(), gens);
}

bool contains(const Subgroup& h, const Element& g) { return h.contains(g); }

GroupPtr intersect(const Subgroup& h, const Subgroup& k) {
  if (!h.same_domain(k)) fail(ErrorCode::MixedGroupOperands, "intersection of subgroups from different groups");
  const Subgroup& small = h.order() <= k.order() ? h : k;
  const Subgroup& large = &small == &h ? k : h;
  std::vector<Element> kept;
  for (const auto& x : small.elements())
    if (large.contains(x)) kept.push_back(x);
  return Group::from_elements(h.arithmetic_ptr(), ElementSet(std::move(kept)));
}

ElementSet product_set(const Subgroup& h, const Subgroup& k) {
  if (!h.same_domain(k)) fail(ErrorCode::MixedGroupOperands, "product of subgroups from different groups");
  const std::uint64_t cap = caps().product;
  const std::uint64_t work = h.order() * k.order();
  if (work > cap) throw CapExceeded("product set", cap, work);
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(work));
  for (const auto& x : h.elements())
    for (const auto& y : k.elements()) out.push_back(h.multiply(x, y));
  return ElementSet(std::move(out));
}

bool same_subgroup(const Subgroup& h, const Subgroup& k) {
  if (!h.same_domain(k) || h.order() != k.order()) return false;
  for (const auto& g : h.generators())
    if (!k.contains(g.element)) return false;
  return true;
}

Element canonical_coset_rep(const Subgroup& h, const Element& g) {
  std::optional<Element> best;
  for (const auto& x : h.elements()) {
    Element y = h.multiply(g, x);
    if (!best || y < *best) best = std::move(y);
  }
  return *best;
}

std::vector<Element> left_transversal(const Group& g, const Subgroup& h) {
  if (!g.same_domain(h)) fail(ErrorCode::MixedGroupOperands, "transversal of a subgroup from another group");
  const ElementSet& all = g.elements();
  const ElementSet& sub = h.elements();
  std::vector<bool> covered(all.size(), false);
  std::vector<Element> reps;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (covered[i]) continue;
    reps.push_back(all[i]);  // first uncovered element is the minimum of its coset
    for (const auto& x : sub) {
      std::size_t j = all.index_of(g.multiply(all[i], x));
      if (j == all.size()) fail(ErrorCode::InvalidArgument, "subgroup is not contained in the group");
      covered[j] = true;
    }
  }
  return reps;
}

GroupPtr conjugate(const Subgroup& h, const Element& g) {
  const Arithmetic& arith = h.arithmetic();
  if (arith.is_permutation() && (!g.is_perm() || g.perm().degree() != arith.degree()))
    fail(ErrorCode::DegreeMismatch, "conjugating element " + g.to_string() + " does not match degree " +
                                        std::to_string(arith.degree()));
  Element ginv = arith.inverse(g);
  std::vector<Element> gens;
  for (const auto& x : h.generator_elements()) gens.push_back(arith.multiply(arith.multiply(ginv, x), g));
  return generated_by(h.arithmetic_ptr(), gens);
}

Homomorphism::Homomorphism(GroupPtr domain, ArithmeticPtr codomain, const std::vector<Element>& images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
  const auto& gens = domain_->generators();
  if (images.size() != gens.size())
    fail(ErrorCode::InvalidArgument, "expected " + std::to_string(gens.size()) + " generator images, got " +
                                         std::to_string(images.size()));
  const std::uint64_t cap = caps().closure;
  std::vector<Element> queue{domain_->identity()};
  table_.emplace(domain_->identity(), codomain_->identity());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Element x = queue[i];
    const Element fx = table_.at(x);
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Element y = domain_->multiply(x, gens[s].element);
      Element fy = codomain_->multiply(fx, images[s]);
      auto it = table_.find(y);
      if (it == table_.end()) {
        table_.emplace(y, std::move(fy));
        if (table_.size() > cap) throw CapExceeded("homomorphism table", cap, table_.size());
        queue.push_back(std::move(y));
      } else if (it->second != fy) {
        fail(ErrorCode::NotAHomomorphism,
             "g=" + x.to_string() + " times generator " + gens[s].label + " gives " + y.to_string() +
                 " whose image is both " + it->second.to_string() + " and " + fy.to_string());
      }
    }
  }
}

const Element& Homomorphism::operator()(const Element& g) const {
  auto it = table_.find(g);
  if (it == table_.end()) fail(ErrorCode::InvalidArgument, "element " + g.to_string() + " outside the domain");
  return it->second;
}

bool Homomorphism::is_injective() const {
  std::unordered_set<Element, ElementHash> images;
  for (const auto& [k, v] : table_) images.insert(v);
  return images.size() == table_.size();
}

std::vector<Element> Homomorphism::generator_images() const {
  std::vector<Element> out;
  for (const auto& g : domain_->generators()) out.push_back((*this)(g.element));
  return out;
}

Automorphism automorphism_from_images(const GroupPtr& g,
                                      const std::unordered_map<std::string, Element>& images,
                                      bool search_inner) {
  std::vector<Element> imgs;
  for (const auto& gen : g->generators()) {
    auto it = images.find(gen.label);
    if (it == images.end()) fail(ErrorCode::InvalidArgument, "no image given for generator " + gen.label);
    imgs.push_back(it->second);
  }
  for (const auto& [label, img] : images) {
    (void)img;
    bool known = false;
    for (const auto& gen : g->generators()) known = known || gen.label == label;
    if (!known) fail(ErrorCode::UnresolvedReference, "image given for unknown generator " + label);
  }
  for (const auto& img : imgs)
    if (!g->contains(img)) fail(ErrorCode::NotBijective, "image " + img.to_string() + " lies outside the group");

  Homomorphism map(g, g->arithmetic_ptr(), imgs);
  if (!map.is_injective()) fail(ErrorCode::NotBijective, "generator images do not define a bijection");

  std::optional<Element> inner;
  if (search_inner) {
    for (const auto& x : g->elements()) {
      Element xinv = g->inverse(x);
      bool ok = true;
      for (std::size_t s = 0; s < imgs.size() && ok; ++s)
        ok = g->multiply(g->multiply(xinv, g->generators()[s].element), x) == imgs[s];
      if (ok) {
        inner = x;
        break;
      }
    }
  }
  return Automorphism(std::move(map), std::move(inner), search_inner);
}

}  // namespace geoforge
