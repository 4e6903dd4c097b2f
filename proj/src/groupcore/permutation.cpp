#include "geoforge/permutation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "geoforge/error.hpp"

namespace geoforge {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (auto p : images) {
    if (p >= images.size())
      fail(ErrorCode::PointOutOfRange, "image " + std::to_string(p + 1) + " exceeds degree " +
                                           std::to_string(images.size()));
    if (seen[p]) fail(ErrorCode::NotBijective, "image " + std::to_string(p + 1) + " repeated");
    seen[p] = true;
  }
  Permutation out;
  out.images_ = std::move(images);
  return out;
}

Permutation Permutation::from_images_one_based(const std::vector<std::size_t>& images) {
  std::vector<Point> zero(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] == 0 || images[i] > images.size())
      fail(ErrorCode::PointOutOfRange, "image " + std::to_string(images[i]) + " out of range");
    zero[i] = static_cast<Point>(images[i] - 1);
  }
  return from_images(std::move(zero));
}

Permutation Permutation::from_transpositions(
    std::size_t degree, const std::vector<std::pair<std::size_t, std::size_t>>& swaps) {
  Permutation out(degree);
  for (auto [a, b] : swaps) {
    if (a == 0 || b == 0 || a > degree || b > degree)
      fail(ErrorCode::PointOutOfRange, "transposition point outside 1.." + std::to_string(degree));
    Permutation t(degree);
    std::swap(t.images_[a - 1], t.images_[b - 1]);
    out = out * t;
  }
  return out;
}

std::vector<std::size_t> Permutation::images_one_based() const {
  std::vector<std::size_t> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1u;
  return out;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree())
    fail(ErrorCode::DegreeMismatch, "cannot multiply permutations of degree " +
                                        std::to_string(degree()) + " and " +
                                        std::to_string(rhs.degree()));
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t p = 0; p < images_.size(); ++p) out.images_[p] = rhs.images_[images_[p]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t p = 0; p < images_.size(); ++p) out.images_[images_[p]] = static_cast<Point>(p);
  return out;
}

Permutation Permutation::conjugate_by(const Permutation& g) const {
  return g.inverse() * *this * g;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t p = 0; p < images_.size(); ++p)
    if (images_[p] != p) return false;
  return true;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  for (const auto& c : cycles()) result = std::lcm(result, c.size());
  return result;
}

std::size_t Permutation::first_moved_point() const noexcept {
  for (std::size_t p = 0; p < images_.size(); ++p)
    if (images_[p] != p) return p;
  return images_.size();
}

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      cycle.push_back(p + 1);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "e";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ')';
  }
  return os.str();
}

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  if (compact == "e") return Permutation(degree);
  if (compact.empty()) fail(ErrorCode::MalformedCycle, "empty permutation text");

  Permutation result(degree);
  std::size_t pos = 0;
  while (pos < compact.size()) {
    if (compact[pos] != '(')
      fail(ErrorCode::MalformedCycle, "expected '(' at offset " + std::to_string(pos) + " in '" +
                                          compact + "'");
    ++pos;
    std::vector<std::size_t> cycle;
    while (true) {
      std::size_t start = pos;
      std::size_t value = 0;
      while (pos < compact.size() && std::isdigit(static_cast<unsigned char>(compact[pos]))) {
        value = value * 10 + static_cast<std::size_t>(compact[pos] - '0');
        if (value > 1'000'000) fail(ErrorCode::PointOutOfRange, "point too large in '" + compact + "'");
        ++pos;
      }
      if (pos == start) fail(ErrorCode::MalformedCycle, "expected a point in '" + compact + "'");
      if (value == 0 || value > degree)
        fail(ErrorCode::PointOutOfRange, "point " + std::to_string(value) + " outside 1.." +
                                             std::to_string(degree));
      for (auto q : cycle)
        if (q == value)
          fail(ErrorCode::RepeatedPointWithinCycle,
               "point " + std::to_string(value) + " repeated in a cycle of '" + compact + "'");
      cycle.push_back(value);
      if (pos >= compact.size()) fail(ErrorCode::MalformedCycle, "unterminated cycle in '" + compact + "'");
      if (compact[pos] == ',') { ++pos; continue; }
      if (compact[pos] == ')') { ++pos; break; }
      fail(ErrorCode::MalformedCycle, "unexpected '" + std::string(1, compact[pos]) + "' in '" + compact + "'");
    }
    if (cycle.size() < 2) fail(ErrorCode::MalformedCycle, "cycle needs at least two points in '" + compact + "'");
    std::vector<Permutation::Point> images(degree);
    std::iota(images.begin(), images.end(), Permutation::Point{0});
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i] - 1] = static_cast<Permutation::Point>(cycle[(i + 1) % cycle.size()] - 1);
    result = result * Permutation::from_images(std::move(images));
  }
  return result;
}

}  // namespace geoforge
