#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "geoforge/element.hpp"
#include "geoforge/stabilizer_chain.hpp"

namespace geoforge {

/// phi(b)(a): an action of an actor group on a target group by automorphisms.
class GroupAction {
 public:
  virtual ~GroupAction() = default;
  virtual Element apply(const Element& actor, const Element& target) const = 0;
};

/// Multiplication rule shared by a group and all of its subgroups.
class Arithmetic {
 public:
  virtual ~Arithmetic() = default;
  virtual Element identity() const = 0;
  virtual Element multiply(const Element& a, const Element& b) const = 0;
  virtual Element inverse(const Element& a) const = 0;
  virtual bool is_permutation() const noexcept { return false; }
  virtual std::size_t degree() const noexcept { return 0; }
  /// True when elements of `other` can be multiplied with ours.
  virtual bool compatible(const Arithmetic& other) const noexcept { return this == &other; }
  virtual std::string describe() const = 0;
};

using ArithmeticPtr = std::shared_ptr<const Arithmetic>;

ArithmeticPtr permutation_arithmetic(std::size_t degree);
/// Pairs (a, b) with (a1,b1)(a2,b2) = (a1 * phi(b1)(a2), b1 * b2).
ArithmeticPtr semidirect_arithmetic(ArithmeticPtr target, ArithmeticPtr actor,
                                    std::shared_ptr<const GroupAction> action);
/// Tuples multiplied componentwise.
ArithmeticPtr product_arithmetic(std::vector<ArithmeticPtr> factors);

struct Generator {
  std::string label;
  Element element;
};

class Group;
using GroupPtr = std::shared_ptr<const Group>;
/// Subgroups are groups that share their parent's arithmetic.
using Subgroup = Group;

/// A finite group given by generators. Immutable after construction; order,
/// closure and stabilizer chain are computed once on first use and are safe to
/// query from several threads.
class Group {
 public:
  struct Private {};

  Group(Private, ArithmeticPtr arith, std::vector<Generator> gens,
        std::optional<ElementSet> elements);

  static GroupPtr make(ArithmeticPtr arith, std::vector<Generator> gens);
  static GroupPtr permutations(std::size_t degree, std::vector<Generator> gens);
  /// Convenience: unlabeled generators get labels "g0", "g1", ...
  static GroupPtr permutations(std::size_t degree, const std::vector<Permutation>& gens);
  /// Subgroup given by an explicit, multiplicatively closed element set.
  static GroupPtr from_elements(ArithmeticPtr arith, ElementSet elements);
  static GroupPtr trivial(ArithmeticPtr arith);

  const Arithmetic& arithmetic() const noexcept { return *arith_; }
  const ArithmeticPtr& arithmetic_ptr() const noexcept { return arith_; }
  bool same_domain(const Group& other) const noexcept { return arith_->compatible(*other.arith_); }
  bool is_permutation() const noexcept { return arith_->is_permutation(); }

  /// Generators; for explicit subgroups a small generating set is extracted.
  const std::vector<Generator>& generators() const;
  std::vector<Element> generator_elements() const;
  const Element& generator(const std::string& label) const;

  Element identity() const { return arith_->identity(); }
  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const { return arith_->inverse(a); }
  Element power(const Element& a, std::uint64_t k) const;
  /// Least k >= 1 with g^k = identity.
  std::uint64_t element_order(const Element& g) const;

  std::uint64_t order() const;
  bool contains(const Element& g) const;
  /// Every element, in total order. Throws CapExceeded beyond caps().closure.
  const ElementSet& elements() const;
  /// Stabilizer chain; nullptr for non-permutation groups.
  const StabilizerChain* chain() const;

 private:
  void extract_generators() const;

  ArithmeticPtr arith_;
  mutable std::vector<Generator> gens_;
  mutable std::once_flag gens_once_;
  bool explicit_ = false;

  mutable std::once_flag elements_once_;
  mutable std::optional<ElementSet> elements_;
  mutable std::once_flag chain_once_;
  mutable std::unique_ptr<StabilizerChain> chain_;
};

/// Generators of `g` followed by extra elements, in the same arithmetic.
GroupPtr generated_by(const ArithmeticPtr& arith, const std::vector<Element>& elements);
/// <H_1, ..., H_k>.
GroupPtr join_subgroups(const std::vector<GroupPtr>& groups);

bool contains(const Subgroup& h, const Element& g);
/// Enumerates the smaller side and filters by membership in the larger.
GroupPtr intersect(const Subgroup& h, const Subgroup& k);
/// {hk : h in H, k in K}.
ElementSet product_set(const Subgroup& h, const Subgroup& k);
bool same_subgroup(const Subgroup& h, const Subgroup& k);
/// Order-minimum element of the left coset gH.
Element canonical_coset_rep(const Subgroup& h, const Element& g);
/// One representative per left coset gH, each the minimum of its coset, sorted.
std::vector<Element> left_transversal(const Group& g, const Subgroup& h);
/// <g^-1 h g : h a generator of H>; g must be multiplicable with H's elements.
GroupPtr conjugate(const Subgroup& h, const Element& g);

/// A homomorphism tabulated on every element of its domain, validated by
/// breadth-first search over the Cayley graph.
class Homomorphism {
 public:
  /// images[i] is the image of domain->generators()[i] in `codomain`'s arithmetic.
  Homomorphism(GroupPtr domain, ArithmeticPtr codomain, const std::vector<Element>& images);

  const Element& operator()(const Element& g) const;
  const GroupPtr& domain() const noexcept { return domain_; }
  const ArithmeticPtr& codomain() const noexcept { return codomain_; }
  bool is_injective() const;
  std::vector<Element> generator_images() const;

 private:
  GroupPtr domain_;
  ArithmeticPtr codomain_;
  std::unordered_map<Element, Element, ElementHash> table_;
};

/// A validated automorphism of a finite group.
class Automorphism {
 public:
  const Element& operator()(const Element& g) const { return map_(g); }
  const GroupPtr& group() const noexcept { return map_.domain(); }
  /// Witness x with f(g) = x^-1 g x for all g, when the search ran and found one.
  const std::optional<Element>& inner_witness() const noexcept { return inner_; }
  bool inner_searched() const noexcept { return searched_; }
  bool is_inner() const noexcept { return inner_.has_value(); }

 private:
  friend Automorphism automorphism_from_images(const GroupPtr&, const std::unordered_map<std::string, Element>&, bool);
  Automorphism(Homomorphism map, std::optional<Element> inner, bool searched)
      : map_(std::move(map)), inner_(std::move(inner)), searched_(searched) {}

  Homomorphism map_;
  std::optional<Element> inner_;
  bool searched_;
};

/// Builds the automorphism sending each labeled generator to its image.
/// Errors: NotAHomomorphism (with a witness), NotBijective, CapExceeded.
Automorphism automorphism_from_images(const GroupPtr& g,
                                      const std::unordered_map<std::string, Element>& images,
                                      bool search_inner = true);

}  // namespace geoforge
