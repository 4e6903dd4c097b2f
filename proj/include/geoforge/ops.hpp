#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "geoforge/cgroups.hpp"
#include "geoforge/cosetgeom.hpp"

namespace geoforge {

enum class ActionKind { Trivial, Conjugation, AutomorphismImages, CoordinatePermutation };
enum class Validation { Fast, Exhaustive };

std::string to_string(ActionKind k);
std::string to_string(Validation v);

/// An action phi of an actor group B on a target group A by automorphisms,
/// written phi(b)(a). Composite actor elements act by composing along words:
/// phi(b1 b2) = phi(b1) o phi(b2).
struct ActionSpec {
  ActionKind kind = ActionKind::Trivial;
  GroupPtr actor;
  GroupPtr target;
  /// AutomorphismImages: actor generator label -> target generator label -> image.
  std::map<std::string, std::unordered_map<std::string, Element>> images;
  /// CoordinatePermutation: per actor generator, a permutation of the
  /// coordinates of a product target; phi(b)(a)[w] = a[w^b].
  std::vector<Permutation> coordinates;

  static ActionSpec trivial(GroupPtr actor, GroupPtr target);
  /// phi(b)(a) = b a b^-1 inside a common permutation group.
  static ActionSpec conjugation(GroupPtr actor, GroupPtr target);
  static ActionSpec automorphisms(GroupPtr actor, GroupPtr target,
                                  std::map<std::string, std::unordered_map<std::string, Element>> images);
  static ActionSpec coordinate_permutation(GroupPtr actor, GroupPtr target, std::vector<Permutation> coordinates);
};

/// An ActionSpec that passed validation; the only thing semidirect() accepts.
class ValidatedAction final : public GroupAction {
 public:
  Element apply(const Element& b, const Element& a) const override;
  const ActionSpec& spec() const noexcept { return spec_; }
  Validation level() const noexcept { return level_; }
  /// Word independence has been certified (always true except Fast AutomorphismImages).
  bool certified() const noexcept { return certified_; }

 private:
  friend std::shared_ptr<const ValidatedAction> validate(const ActionSpec&, Validation);
  ValidatedAction() = default;

  ActionSpec spec_;
  Validation level_ = Validation::Fast;
  bool certified_ = false;
  // AutomorphismImages: actor element -> permutation of target element indices.
  std::unordered_map<Element, std::vector<std::uint32_t>, ElementHash> tables_;
  std::unordered_map<Element, Permutation, ElementHash> coordinate_images_;
};

using ActionPtr = std::shared_ptr<const ValidatedAction>;

/// Fast: each generator image preserves the orders of generators and of
/// pairwise generator products. Exhaustive: each image is an automorphism
/// and the generator map extends to a homomorphism B -> Aut(A).
/// Errors: NotAHomomorphism, NotBijective, InvalidArgument, CapExceeded.
ActionPtr validate(const ActionSpec& spec, Validation level = Validation::Exhaustive);

/// A x| B on Pair elements; generators (a, e) then (e, b).
/// Throws ActionNotValidated for a null action or one built for other groups.
GroupPtr semidirect(const GroupPtr& a, const GroupPtr& b, const ActionPtr& phi);
/// The subgroup X x| Y of a semidirect product group.
GroupPtr semidirect_subgroup(const GroupPtr& g, const Group& x, const Group& y);

/// A x B on Tuple elements.
GroupPtr direct_product_group(const std::vector<GroupPtr>& factors);
/// Types of alpha then beta; G_i = A_i x B or A x B_i.
CosetSystem direct_product(const CosetSystem& alpha, const CosetSystem& beta);
/// prod over omega = 1..n of alpha, types "(j,omega)" ordered by omega then j.
CosetSystem direct_power(const CosetSystem& alpha, std::size_t n);

/// The induced action of B on the types of alpha: phi(b)(A_i) = A_{b(i)}.
class TypeAction {
 public:
  /// `images[s][i]` is the type that generator s sends i to (0-based).
  /// Throws NotAHomomorphism when the images do not extend to an action.
  TypeAction(GroupPtr actor, std::size_t types, std::vector<Permutation> images);

  const GroupPtr& actor() const noexcept { return actor_; }
  std::size_t types() const noexcept { return types_; }
  const std::vector<Permutation>& generator_images() const noexcept { return images_; }
  std::size_t image(const Element& b, std::size_t i) const;
  /// Orbits K, ordered by their least member.
  const std::vector<TypeSet>& orbits() const noexcept { return orbits_; }
  std::size_t orbit_of(std::size_t i) const;
  /// Orbit of type i under the subgroup h of the actor.
  TypeSet orbit_under(const Group& h, std::size_t i) const;

 private:
  GroupPtr actor_;
  std::size_t types_;
  std::vector<Permutation> images_;
  std::unordered_map<Element, Permutation, ElementHash> table_;
  std::vector<TypeSet> orbits_;
};

/// Throws NotParabolicPermuting when some phi(s)(A_i) is not a maximal parabolic.
TypeAction validate_action(const ActionPtr& phi, const CosetSystem& alpha);

/// ^LO_M for one orbit L and representative F, for every M subset of I_beta.
struct OrbitTable {
  TypeSet orbit = 0;
  std::size_t representative = 0;
  TypeSet beta_types = 0;
  std::vector<TypeSet> lower;  // indexed by M

  /// ^LO_M: orbit of F under B_{I_beta \ M}.
  TypeSet at(TypeSet m) const { return lower.at(m & beta_types); }
  /// ^LO^J = ^LO_{I_beta \ J}: orbit of F under B_J.
  TypeSet upper(TypeSet j) const { return lower.at(beta_types & ~j); }
  /// First (M, N) with ^LO_M n ^LO_N != ^LO_{M n N}.
  std::optional<std::pair<TypeSet, TypeSet>> ipo_violation() const;
};

OrbitTable orbit_table(const TypeAction& action, const CosetSystem& beta, TypeSet orbit, std::size_t representative);

struct Admissibility {
  std::vector<TypeSet> orbits;
  /// Valid representatives per orbit, ascending.
  std::vector<std::vector<std::size_t>> valid;
  /// Per orbit, the (M, N) violation of each rejected representative.
  std::vector<std::map<std::size_t, std::pair<TypeSet, TypeSet>>> rejected;

  bool admissible() const;
};

Admissibility check_admissible(const TypeAction& action, const CosetSystem& beta);
Admissibility check_admissible(const CosetSystem& alpha, const CosetSystem& beta, const ActionPtr& phi);

struct Twist {
  CosetSystem system;
  CosetSystem alpha;
  CosetSystem beta;
  ActionPtr action;
  TypeAction type_action;
  /// One table per orbit, for the chosen representatives.
  std::vector<OrbitTable> tables;
  std::vector<std::size_t> representatives;
  /// Types of `system`: the orbits K first, then I_beta.
  std::size_t orbit_count() const { return tables.size(); }
};

/// Types are the orbit labels (alpha.format(L)) followed by beta's labels.
/// `reps[k]` is the representative of the k-th orbit; empty picks the least
/// valid one per orbit. Errors: NotAdmissible, RepNotValid, ActionNotValidated.
Twist twist(const CosetSystem& alpha, const CosetSystem& beta, const ActionPtr& phi,
            std::vector<std::size_t> reps = {});

/// A_{[J_alpha]} x| B_{J_beta} for J a subset of the twist's types.
GroupPtr twist_parabolic_formula(const Twist& t, TypeSet j);

/// Twist of prod over Omega of alpha by beta, where `omega[s]` is the
/// permutation of Omega = {1..n} induced by beta's s-th generator (acting on
/// the right). Requires a certified homomorphism.
Twist wreath(const CosetSystem& alpha, const CosetSystem& beta, const std::vector<Permutation>& omega,
             std::vector<std::size_t> reps = {});

struct SelfDualTwist {
  Twist twist;
  /// (rho_F, e) per orbit, then (e, tau).
  GeneratorSystem generators;
  CoxeterDiagram diagram;
  bool tau_inner = false;
};

/// tau(rho_i) = rho_{n-1-i}; beta = (<tau>, ({e})). Default representatives
/// are the least member of each orbit. Errors: NotSelfDual, InvalidArgument
/// (not a string group), RepNotValid.
SelfDualTwist self_dual_twist(const GeneratorSystem& s, std::vector<std::size_t> reps = {});
/// One entry per choice of representatives.
std::vector<SelfDualTwist> self_dual_choices(const GeneratorSystem& s);

}  // namespace geoforge
