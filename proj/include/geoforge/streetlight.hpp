#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <variant>
#include <vector>

namespace geoforge::street {

using Pos = std::int64_t;

/// Finite set of lit lamp positions, stored sorted.
class LampConfig {
 public:
  LampConfig() = default;
  LampConfig(std::initializer_list<Pos> on);
  explicit LampConfig(std::vector<Pos> on);

  const std::vector<Pos>& on() const noexcept { return on_; }
  bool empty() const noexcept { return on_.empty(); }
  std::size_t size() const noexcept { return on_.size(); }
  bool contains(Pos p) const;

  LampConfig shifted(Pos s) const;
  LampConfig toggled(Pos p) const;
  LampConfig without(Pos p) const;
  LampConfig symmetric_difference(const LampConfig& o) const;
  std::string to_string() const;

  auto operator<=>(const LampConfig&) const = default;

 private:
  std::vector<Pos> on_;
};

/// Element (c, s) of C2 wr Z: c is the lamp configuration, s the shift.
struct LamplighterElement {
  LampConfig config;
  Pos shift = 0;

  static LamplighterElement identity() { return {}; }
  /// The lamp toggle at 0.
  static LamplighterElement a() { return {LampConfig{0}, 0}; }
  /// The unit shift.
  static LamplighterElement t() { return {{}, 1}; }
  std::string to_string() const;

  auto operator<=>(const LamplighterElement&) const = default;
};

/// (c1, s1)(c2, s2) = (c1 D (c2 + s1), s1 + s2).
LamplighterElement ll_mul(const LamplighterElement& x, const LamplighterElement& y);
LamplighterElement ll_inv(const LamplighterElement& x);
LamplighterElement ll_pow(const LamplighterElement& x, std::int64_t n);

/// Type 0: a coset g<t>, i.e. a street state.
struct State {
  LampConfig config;
  auto operator<=>(const State&) const = default;
};

/// Type 1: a coset g<a>, a street state with the lamp at `position` unknown.
struct Uncertain {
  LampConfig known;  // never contains position
  Pos position = 0;

  Uncertain() = default;
  Uncertain(LampConfig k, Pos p);
  auto operator<=>(const Uncertain&) const = default;
};

using StreetElement = std::variant<State, Uncertain>;

enum class StreetType { State = 0, Uncertain = 1 };

std::size_t type_of(const StreetElement& e);
std::string to_string(const StreetElement& e);

StreetElement canonical_street(const LamplighterElement& g, StreetType type);
/// A group element whose coset is e.
LamplighterElement preimage(const StreetElement& e);

bool incident(const State& s, const Uncertain& u);
/// Same type and equal, or different types and incident.
bool incident(const StreetElement& x, const StreetElement& y);

/// The two states that settle the unknown lamp: off, then on.
std::pair<State, State> resolve(const Uncertain& u);
std::vector<Uncertain> uncertainties_in_window(const State& s, Pos lo, Pos hi);

/// Toggles the differing lamps in increasing order, each through its
/// uncertain midpoint. Excludes `from`; ends at `to`; 2|from D to| long.
std::vector<StreetElement> street_path(const State& from, const State& to);

/// Left multiplication on the underlying coset.
StreetElement street_act(const LamplighterElement& g, const StreetElement& e);

/// "on=3,5 shift=2"; either part may be omitted. Throws ParseError.
LamplighterElement parse_lamplighter(const std::string& text);
/// "on=3,5"; a shift, if present, must be 0. Throws ParseError.
State parse_state(const std::string& text);

/// {"type":"state","on":[..]} or {"type":"uncertain","known":[..],"position":p}.
std::string to_json(const std::vector<StreetElement>& path);

}  // namespace geoforge::street
