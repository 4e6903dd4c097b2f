#include "geoforge/element.hpp"

#include <algorithm>
#include <sstream>

#include "geoforge/error.hpp"

namespace geoforge {

Element::Element(Permutation p) : kind_(Kind::Perm), perm_(std::move(p)) {}

Element Element::pair(Element a, Element b) {
  Element e;
  e.kind_ = Kind::Pair;
  e.parts_.reserve(2);
  e.parts_.push_back(std::move(a));
  e.parts_.push_back(std::move(b));
  return e;
}

Element Element::tuple(std::vector<Element> parts) {
  Element e;
  e.kind_ = Kind::Tuple;
  e.parts_ = std::move(parts);
  return e;
}

const Permutation& Element::perm() const {
  if (kind_ != Kind::Perm) fail(ErrorCode::MixedGroupOperands, "element " + to_string() + " is not a permutation");
  return perm_;
}

const Element& Element::first() const {
  if (kind_ != Kind::Pair) fail(ErrorCode::MixedGroupOperands, "element " + to_string() + " is not a pair");
  return parts_[0];
}

const Element& Element::second() const {
  if (kind_ != Kind::Pair) fail(ErrorCode::MixedGroupOperands, "element " + to_string() + " is not a pair");
  return parts_[1];
}

std::size_t Element::hash() const noexcept {
  std::size_t h = static_cast<std::size_t>(kind_) * 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  if (kind_ == Kind::Perm) {
    for (auto p : perm_.images()) mix(p);
  } else {
    for (const auto& part : parts_) mix(part.hash());
  }
  return h;
}

std::string Element::to_string() const {
  switch (kind_) {
    case Kind::Perm: return perm_.to_string();
    case Kind::Pair: return "<" + parts_[0].to_string() + ", " + parts_[1].to_string() + ">";
    case Kind::Tuple: {
      std::ostringstream os;
      os << '[';
      for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "; " : "") << parts_[i].to_string();
      os << ']';
      return os.str();
    }
  }
  return {};
}

bool operator==(const Element& a, const Element& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ == Element::Kind::Perm) return a.perm_ == b.perm_;
  return a.parts_ == b.parts_;
}

std::strong_ordering operator<=>(const Element& a, const Element& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (a.kind_ == Element::Kind::Perm) return a.perm_ <=> b.perm_;
  return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(), b.parts_.begin(),
                                                b.parts_.end());
}

ElementSet::ElementSet(std::vector<Element> elements) : sorted_(std::move(elements)) {
  std::sort(sorted_.begin(), sorted_.end());
  sorted_.erase(std::unique(sorted_.begin(), sorted_.end()), sorted_.end());
}

bool ElementSet::contains(const Element& e) const {
  return std::binary_search(sorted_.begin(), sorted_.end(), e);
}

std::size_t ElementSet::index_of(const Element& e) const {
  auto it = std::lower_bound(sorted_.begin(), sorted_.end(), e);
  if (it == sorted_.end() || *it != e) return sorted_.size();
  return static_cast<std::size_t>(it - sorted_.begin());
}

ElementSet ElementSet::intersection(const ElementSet& other) const {
  std::vector<Element> out;
  std::set_intersection(sorted_.begin(), sorted_.end(), other.sorted_.begin(), other.sorted_.end(),
                        std::back_inserter(out));
  ElementSet s;
  s.sorted_ = std::move(out);
  return s;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  return std::includes(other.sorted_.begin(), other.sorted_.end(), sorted_.begin(), sorted_.end());
}

}  // namespace geoforge
