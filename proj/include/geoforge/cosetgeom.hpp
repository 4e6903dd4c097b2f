#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "geoforge/group.hpp"
#include "json.hpp"

namespace geoforge {

/// Subset of the declared type order, as a bitmask (bit k = k-th type).
using TypeSet = std::uint32_t;

inline std::size_t type_count(TypeSet s) { return static_cast<std::size_t>(__builtin_popcount(s)); }
inline bool has_type(TypeSet s, std::size_t k) { return (s >> k) & 1u; }
inline TypeSet single_type(std::size_t k) { return TypeSet{1} << k; }

/// All subsets of {0..rank-1}: increasing cardinality, then lexicographic on
/// the sorted index lists. Throws RankGuard beyond caps().rank_guard.
std::vector<TypeSet> subsets_of(std::size_t rank);
/// Subsets of `mask` in the same order.
std::vector<TypeSet> subsets_within(TypeSet mask, std::size_t rank);

/// The coset incidence system Gamma(G, (G_i)). Elements of type i are left
/// cosets gG_i; gG_i and kG_j are incident iff they intersect.
class CosetSystem {
 public:
  CosetSystem(GroupPtr group, std::vector<std::string> types, std::vector<GroupPtr> parabolics);

  const GroupPtr& group() const noexcept { return group_; }
  const std::vector<std::string>& types() const noexcept { return types_; }
  std::size_t rank() const noexcept { return types_.size(); }
  TypeSet all_types() const noexcept { return rank() == 32 ? ~TypeSet{0} : single_type(rank()) - 1; }
  std::size_t type_index(const std::string& label) const;
  TypeSet type_set(const std::vector<std::string>& labels) const;
  std::string format(TypeSet s) const;

  const GroupPtr& maximal(std::size_t i) const { return parabolics_.at(i); }
  const std::vector<GroupPtr>& maximals() const noexcept { return parabolics_; }
  /// G_J = intersection of G_j over J, with G_{} = G. Memoized.
  GroupPtr parabolic(TypeSet j) const;
  /// G^i = G_{I \ {i}}.
  GroupPtr minimal(std::size_t i) const { return parabolic(all_types() & ~single_type(i)); }
  GroupPtr borel() const { return parabolic(all_types()); }

 private:
  GroupPtr group_;
  std::vector<std::string> types_;
  std::vector<GroupPtr> parabolics_;
  struct Cache {
    std::mutex mutex;
    std::map<TypeSet, GroupPtr> parabolics;
  };
  // Shared by copies, which describe the same system.
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

using SystemPtr = std::shared_ptr<const CosetSystem>;

struct CheckReport {
  std::string property;
  std::string method;
  bool pass = true;
  bool conditional = false;
  nlohmann::ordered_json witness;  // null when passing
  nlohmann::ordered_json details;
  std::vector<Element> witness_elements;
  double ms = 0;

  nlohmann::ordered_json to_json() const;
};

/// Every element of G indexed by its position in total order, with the left
/// coset partition of G by each parabolic. Backs the exhaustive checkers and
/// the materializer.
class CosetTables {
 public:
  explicit CosetTables(const CosetSystem& sys);

  const CosetSystem& system() const noexcept { return sys_; }
  std::size_t size() const noexcept { return elements_->size(); }
  const ElementSet& elements() const noexcept { return *elements_; }
  std::size_t index_of(const Element& g) const;
  /// Label of the coset xG_J (labels are the index of the coset's minimum).
  const std::vector<std::uint32_t>& labels(TypeSet j) const;
  /// Index of g * elements()[x].
  std::size_t left_multiply(const Element& g, std::size_t x) const;

 private:
  CosetSystem sys_;
  const ElementSet* elements_;
  mutable std::mutex mutex_;
  mutable std::map<TypeSet, std::vector<std::uint32_t>> labels_;
};

enum class FtMethod { Product, Triple, Geometry };
enum class RcVariant { RC1, RC2, Intersection };

std::string to_string(FtMethod m);
std::string to_string(RcVariant v);

CheckReport check_flag_transitive(const CosetSystem& sys, FtMethod method);
CheckReport check_residually_connected(const CosetSystem& sys, RcVariant variant);
/// (FIRM, THIN). With `waive_ft` the reports are marked conditional instead of
/// checking flag-transitivity first; a failing flag-transitivity check also
/// marks them conditional.
std::pair<CheckReport, CheckReport> check_firm_thin(const CosetSystem& sys, bool waive_ft = false);
/// (G_J n G_H)(G_J n G_K) = G_J n (G_H G_K) for every J, H, K.
CheckReport check_product_of_intersections(const CosetSystem& sys);

/// [G : G_I].
std::uint64_t borel_index(const CosetSystem& sys);

/// Gamma(G_J, (G_{J u {i}})_{i not in J}) over the remaining types.
CosetSystem residue_system(const CosetSystem& sys, TypeSet j);

/// Quotient by a normal Borel subgroup, realized as the action of G on the
/// left cosets of G_I. Throws InvalidArgument when G_I is not normal.
CosetSystem normalize_borel(const CosetSystem& sys);

}  // namespace geoforge
