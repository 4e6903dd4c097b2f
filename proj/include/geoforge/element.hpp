#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "geoforge/permutation.hpp"

namespace geoforge {

/// A group element. Permutation groups use Perm; semidirect products
/// A x| B use Pair(a, b); direct products use Tuple. All elements of one
/// group share one shape. The total order (kind, then lexicographic on the
/// underlying data) picks canonical coset representatives.
class Element {
 public:
  enum class Kind : std::uint8_t { Perm, Pair, Tuple };

  Element() = default;
  Element(Permutation p);  // NOLINT(google-explicit-constructor): a perm is an element

  static Element pair(Element a, Element b);
  static Element tuple(std::vector<Element> parts);

  Kind kind() const noexcept { return kind_; }
  bool is_perm() const noexcept { return kind_ == Kind::Perm; }
  const Permutation& perm() const;
  const Element& first() const;
  const Element& second() const;
  std::span<const Element> parts() const noexcept { return parts_; }

  std::size_t hash() const noexcept;
  std::string to_string() const;

  friend bool operator==(const Element& a, const Element& b);
  friend std::strong_ordering operator<=>(const Element& a, const Element& b);

 private:
  Kind kind_ = Kind::Perm;
  Permutation perm_;
  std::vector<Element> parts_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept { return e.hash(); }
};

/// A deduplicated set of elements, iterated in the global total order.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::vector<Element> elements);  // sorts and dedups

  bool contains(const Element& e) const;
  std::size_t size() const noexcept { return sorted_.size(); }
  bool empty() const noexcept { return sorted_.empty(); }
  /// Position of e in iteration order, or size() when absent.
  std::size_t index_of(const Element& e) const;
  const Element& operator[](std::size_t i) const { return sorted_[i]; }
  auto begin() const noexcept { return sorted_.begin(); }
  auto end() const noexcept { return sorted_.end(); }
  const std::vector<Element>& elements() const noexcept { return sorted_; }

  ElementSet intersection(const ElementSet& other) const;
  bool is_subset_of(const ElementSet& other) const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<Element> sorted_;
};

}  // namespace geoforge

template <>
struct std::hash<geoforge::Element> {
  std::size_t operator()(const geoforge::Element& e) const noexcept { return e.hash(); }
};
