#pragma once

#include <cstdint>
#include <string_view>

namespace geoforge {

/// Global enumeration limits. Every exhaustive routine consults these before
/// it commits to work whose size is not known up front.
struct Caps {
  std::uint64_t closure = 2'000'000;   // elements enumerated by closure
  std::uint64_t product = 2'000'000;   // |H|*|K| for product sets
  std::uint64_t geometry = 10'000;     // elements of a materialized geometry
  std::uint64_t involutions = 100'000; // group order for involution sweeps
  std::size_t rank_guard = 12;         // largest type set for subset sweeps
};

Caps caps();
void set_caps(const Caps& c);

/// Parses "closure=N,geometry=N,product=N,rank_guard=N,involutions=N" on top
/// of `base`. Unknown keys raise ParseError.
Caps parse_caps(std::string_view text, Caps base);

/// RAII override, used by tests and the CLI.
class ScopedCaps {
 public:
  explicit ScopedCaps(const Caps& c);
  ~ScopedCaps();
  ScopedCaps(const ScopedCaps&) = delete;
  ScopedCaps& operator=(const ScopedCaps&) = delete;

 private:
  Caps saved_;
};

}  // namespace geoforge
