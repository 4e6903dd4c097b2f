#include <algorithm>
#include <set>
#include <sstream>

#include "geoforge/caps.hpp"
#include "geoforge/cosetgeom.hpp"
#include "geoforge/error.hpp"

namespace geoforge {

std::vector<TypeSet> subsets_within(TypeSet mask, std::size_t rank) {
  if (rank > caps().rank_guard || rank > 31)
    fail(ErrorCode::RankGuard, "rank " + std::to_string(rank) + " exceeds the rank guard " +
                                   std::to_string(caps().rank_guard));
  std::vector<TypeSet> out;
  for (TypeSet s = mask;; s = (s - 1) & mask) {
    out.push_back(s);
    if (s == 0) break;
  }
  auto key = [rank](TypeSet s) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < rank; ++k)
      if (has_type(s, k)) idx.push_back(k);
    return idx;
  };
  std::sort(out.begin(), out.end(), [&](TypeSet a, TypeSet b) {
    if (type_count(a) != type_count(b)) return type_count(a) < type_count(b);
    return key(a) < key(b);
  });
  return out;
}

std::vector<TypeSet> subsets_of(std::size_t rank) {
  if (rank > caps().rank_guard || rank > 31)
    fail(ErrorCode::RankGuard, "rank " + std::to_string(rank) + " exceeds the rank guard " +
                                   std::to_string(caps().rank_guard));
  return subsets_within(single_type(rank) - 1, rank);
}

CosetSystem::CosetSystem(GroupPtr group, std::vector<std::string> types, std::vector<GroupPtr> parabolics)
    : group_(std::move(group)), types_(std::move(types)), parabolics_(std::move(parabolics)) {
  if (types_.empty()) fail(ErrorCode::EmptyTypeSet, "a coset system needs at least one type");
  if (types_.size() > 31) fail(ErrorCode::RankGuard, "rank " + std::to_string(types_.size()) + " is too large");
  std::set<std::string> seen;
  for (const auto& t : types_)
    if (!seen.insert(t).second) fail(ErrorCode::TypeLabelCollision, "type label '" + t + "' appears twice");
  if (parabolics_.size() != types_.size())
    fail(ErrorCode::InvalidArgument, std::to_string(types_.size()) + " types but " +
                                         std::to_string(parabolics_.size()) + " parabolic subgroups");
  for (std::size_t i = 0; i < parabolics_.size(); ++i) {
    if (!parabolics_[i]->same_domain(*group_))
      fail(ErrorCode::MixedGroupOperands, "parabolic " + types_[i] + " lives in another group");
    for (const auto& g : parabolics_[i]->generators())
      if (!group_->contains(g.element))
        fail(ErrorCode::InvalidArgument, "parabolic " + types_[i] + " has generator " + g.element.to_string() +
                                             " outside the group");
  }
}

std::size_t CosetSystem::type_index(const std::string& label) const {
  auto it = std::find(types_.begin(), types_.end(), label);
  if (it == types_.end()) fail(ErrorCode::UnknownType, "unknown type '" + label + "'");
  return static_cast<std::size_t>(it - types_.begin());
}

TypeSet CosetSystem::type_set(const std::vector<std::string>& labels) const {
  TypeSet s = 0;
  for (const auto& l : labels) s |= single_type(type_index(l));
  return s;
}

std::string CosetSystem::format(TypeSet s) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::size_t k = 0; k < rank(); ++k) {
    if (!has_type(s, k)) continue;
    os << (first ? "" : ",") << types_[k];
    first = false;
  }
  os << '}';
  return os.str();
}

GroupPtr CosetSystem::parabolic(TypeSet j) const {
  j &= all_types();
  if (j == 0) return group_;
  if (type_count(j) == 1) return parabolics_[static_cast<std::size_t>(__builtin_ctz(j))];
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->parabolics.find(j); it != cache_->parabolics.end()) return it->second;
  }
  const std::size_t top = 31u - static_cast<std::size_t>(__builtin_clz(j));
  GroupPtr result = intersect(*parabolic(j & ~single_type(top)), *parabolics_[top]);
  std::lock_guard lock(cache_->mutex);
  return cache_->parabolics.emplace(j, std::move(result)).first->second;
}

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json out;
  out["property"] = property;
  out["method"] = method;
  out["pass"] = pass;
  if (conditional) out["conditional"] = true;
  if (!witness.is_null()) out["witness"] = witness;
  if (!details.is_null()) out["details"] = details;
  out["ms"] = ms;
  return out;
}

CosetTables::CosetTables(const CosetSystem& sys) : sys_(sys), elements_(&sys.group()->elements()) {}

std::size_t CosetTables::index_of(const Element& g) const {
  std::size_t k = elements_->index_of(g);
  if (k == elements_->size()) fail(ErrorCode::InvalidArgument, "element " + g.to_string() + " is not in the group");
  return k;
}

std::size_t CosetTables::left_multiply(const Element& g, std::size_t x) const {
  return index_of(sys_.group()->multiply(g, (*elements_)[x]));
}

const std::vector<std::uint32_t>& CosetTables::labels(TypeSet j) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = labels_.find(j); it != labels_.end()) return it->second;
  }
  const auto& h = sys_.parabolic(j)->elements();
  const auto& group = *sys_.group();
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> label(size(), unset);
  for (std::size_t x = 0; x < size(); ++x) {
    if (label[x] != unset) continue;
    for (const auto& y : h) label[index_of(group.multiply((*elements_)[x], y))] = static_cast<std::uint32_t>(x);
  }
  std::lock_guard lock(mutex_);
  return labels_.emplace(j, std::move(label)).first->second;
}

std::uint64_t borel_index(const CosetSystem& sys) { return sys.group()->order() / sys.borel()->order(); }

CosetSystem residue_system(const CosetSystem& sys, TypeSet j) {
  j &= sys.all_types();
  if (j == sys.all_types()) fail(ErrorCode::InvalidArgument, "residue of a chamber has no types");
  std::vector<std::string> types;
  std::vector<GroupPtr> parabolics;
  for (std::size_t k = 0; k < sys.rank(); ++k) {
    if (has_type(j, k)) continue;
    types.push_back(sys.types()[k]);
    parabolics.push_back(sys.parabolic(j | single_type(k)));
  }
  return CosetSystem(sys.parabolic(j), std::move(types), std::move(parabolics));
}

CosetSystem normalize_borel(const CosetSystem& sys) {
  const auto& group = *sys.group();
  auto borel = sys.borel();
  for (const auto& g : group.generators())
    for (const auto& b : borel->generators()) {
      Element c = group.multiply(group.multiply(group.inverse(g.element), b.element), g.element);
      if (!borel->contains(c))
        fail(ErrorCode::InvalidArgument, "Borel subgroup is not normal: conjugating " + b.element.to_string() +
                                             " by " + g.label + " leaves it");
    }
  auto reps = left_transversal(group, *borel);
  if (reps.size() > 65535) throw CapExceeded("Borel quotient degree", 65535, reps.size());
  auto image = [&](const Element& g) {
    Element ginv = group.inverse(g);
    std::vector<Permutation::Point> img(reps.size());
    for (std::size_t p = 0; p < reps.size(); ++p) {
      Element c = canonical_coset_rep(*borel, group.multiply(ginv, reps[p]));
      img[p] = static_cast<Permutation::Point>(std::lower_bound(reps.begin(), reps.end(), c) - reps.begin());
    }
    return Element(Permutation::from_images(std::move(img)));
  };
  std::vector<Generator> gens;
  for (const auto& g : group.generators()) gens.push_back({g.label, image(g.element)});
  auto quotient = Group::permutations(reps.size(), std::move(gens));
  std::vector<GroupPtr> parabolics;
  for (const auto& p : sys.maximals()) {
    std::vector<Element> imgs;
    for (const auto& g : p->generators()) imgs.push_back(image(g.element));
    parabolics.push_back(generated_by(quotient->arithmetic_ptr(), imgs));
  }
  return CosetSystem(quotient, sys.types(), std::move(parabolics));
}

}  // namespace geoforge
