#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace geoforge {

/// A permutation of {1..degree}, stored 0-based.
///
/// Permutations act on the right: the image of p under g is written p^g, and
/// a product g*h first applies g and then h, so p^(gh) = (p^g)^h. This is
/// the convention used by GAP and by permutation representation graphs
/// (an i-edge {a,b} whenever a^rho_i = b).
class Permutation {
 public:
  using Point = std::uint16_t;

  Permutation() = default;
  explicit Permutation(std::size_t degree);

  /// 0-based images; throws PointOutOfRange / NotBijective on bad input.
  static Permutation from_images(std::vector<Point> images);
  /// 1-based images, as printed in the docs.
  static Permutation from_images_one_based(const std::vector<std::size_t>& images);
  /// Product of the given transpositions (1-based points).
  static Permutation from_transpositions(std::size_t degree,
                                         const std::vector<std::pair<std::size_t, std::size_t>>& swaps);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t p) const noexcept { return images_[p]; }
  /// Image of the 1-based point p.
  std::size_t image(std::size_t p) const { return images_.at(p - 1) + 1u; }
  const std::vector<Point>& images() const noexcept { return images_; }
  std::vector<std::size_t> images_one_based() const;

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation conjugate_by(const Permutation& g) const;  // g^-1 * this * g
  bool is_identity() const noexcept;
  std::size_t order() const;
  /// First point (0-based) moved by the permutation, or degree() if none.
  std::size_t first_moved_point() const noexcept;
  /// Disjoint cycles of length >= 2, 1-based, each starting at its minimum.
  std::vector<std::vector<std::size_t>> cycles() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// Parses cycle notation: perm := "e" | cycle+ ; cycle := "(" int ("," int)+ ")".
/// Whitespace is ignored. Cycles compose left to right.
Permutation parse_permutation(std::string_view text, std::size_t degree);

}  // namespace geoforge
