#include "geoforge/streetlight.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include "geoforge/error.hpp"

namespace geoforge::street {

LampConfig::LampConfig(std::initializer_list<Pos> on) : LampConfig(std::vector<Pos>(on)) {}

LampConfig::LampConfig(std::vector<Pos> on) : on_(std::move(on)) {
  std::sort(on_.begin(), on_.end());
  on_.erase(std::unique(on_.begin(), on_.end()), on_.end());
}

bool LampConfig::contains(Pos p) const { return std::binary_search(on_.begin(), on_.end(), p); }

LampConfig LampConfig::shifted(Pos s) const {
  LampConfig out = *this;
  for (auto& p : out.on_) p += s;
  return out;
}

LampConfig LampConfig::toggled(Pos p) const { return symmetric_difference(LampConfig{p}); }

LampConfig LampConfig::without(Pos p) const {
  LampConfig out = *this;
  auto it = std::lower_bound(out.on_.begin(), out.on_.end(), p);
  if (it != out.on_.end() && *it == p) out.on_.erase(it);
  return out;
}

LampConfig LampConfig::symmetric_difference(const LampConfig& o) const {
  LampConfig out;
  std::set_symmetric_difference(on_.begin(), on_.end(), o.on_.begin(), o.on_.end(), std::back_inserter(out.on_));
  return out;
}

std::string LampConfig::to_string() const {
  std::string s = "{";
  for (std::size_t k = 0; k < on_.size(); ++k) s += (k ? "," : "") + std::to_string(on_[k]);
  return s + "}";
}

std::string LamplighterElement::to_string() const {
  return "(" + config.to_string() + ", " + std::to_string(shift) + ")";
}

LamplighterElement ll_mul(const LamplighterElement& x, const LamplighterElement& y) {
  return {x.config.symmetric_difference(y.config.shifted(x.shift)), x.shift + y.shift};
}

LamplighterElement ll_inv(const LamplighterElement& x) { return {x.config.shifted(-x.shift), -x.shift}; }

LamplighterElement ll_pow(const LamplighterElement& x, std::int64_t n) {
  LamplighterElement base = n < 0 ? ll_inv(x) : x, out;
  for (std::uint64_t k = n < 0 ? -static_cast<std::uint64_t>(n) : n; k; k >>= 1) {
    if (k & 1) out = ll_mul(out, base);
    base = ll_mul(base, base);
  }
  return out;
}

Uncertain::Uncertain(LampConfig k, Pos p) : known(k.without(p)), position(p) {}

std::size_t type_of(const StreetElement& e) { return e.index(); }

std::string to_string(const StreetElement& e) {
  if (auto s = std::get_if<State>(&e)) return "State" + s->config.to_string();
  const auto& u = std::get<Uncertain>(e);
  return "Uncertain(" + u.known.to_string() + ", " + std::to_string(u.position) + ")";
}

StreetElement canonical_street(const LamplighterElement& g, StreetType type) {
  if (type == StreetType::State) return State{g.config};
  return Uncertain(g.config, g.shift);
}

LamplighterElement preimage(const StreetElement& e) {
  if (auto s = std::get_if<State>(&e)) return {s->config, 0};
  const auto& u = std::get<Uncertain>(e);
  return {u.known, u.position};
}

bool incident(const State& s, const Uncertain& u) {
  auto d = s.config.symmetric_difference(u.known);
  return d.empty() || (d.size() == 1 && d.on()[0] == u.position);
}

bool incident(const StreetElement& x, const StreetElement& y) {
  if (x.index() == y.index()) return x == y;
  if (auto s = std::get_if<State>(&x)) return incident(*s, std::get<Uncertain>(y));
  return incident(std::get<State>(y), std::get<Uncertain>(x));
}

std::pair<State, State> resolve(const Uncertain& u) { return {State{u.known}, State{u.known.toggled(u.position)}}; }

std::vector<Uncertain> uncertainties_in_window(const State& s, Pos lo, Pos hi) {
  std::vector<Uncertain> out;
  for (Pos p = lo; p <= hi; ++p) out.emplace_back(s.config, p);
  return out;
}

std::vector<StreetElement> street_path(const State& from, const State& to) {
  std::vector<StreetElement> out;
  LampConfig cur = from.config;
  const auto diff = from.config.symmetric_difference(to.config);
  for (Pos p : diff.on()) {
    out.emplace_back(Uncertain(cur, p));
    cur = cur.toggled(p);
    out.emplace_back(State{cur});
  }
  return out;
}

StreetElement street_act(const LamplighterElement& g, const StreetElement& e) {
  return canonical_street(ll_mul(g, preimage(e)), static_cast<StreetType>(e.index()));
}

namespace {

[[noreturn]] void bad(const std::string& text, std::size_t col, const std::string& why) {
  fail(ErrorCode::ParseError, "col " + std::to_string(col + 1) + ": " + why + " in '" + text + "'");
}

Pos number(const std::string& text, std::size_t begin, std::size_t end) {
  Pos v = 0;
  const char* first = text.data() + begin;
  if (begin < end && text[begin] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, text.data() + end, v);
  if (ec != std::errc() || ptr != text.data() + end || begin == end) bad(text, begin, "expected an integer");
  return v;
}

}  // namespace

LamplighterElement parse_lamplighter(const std::string& text) {
  LamplighterElement g;
  bool seen_on = false, seen_shift = false;
  std::size_t k = 0;
  while (k < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[k]))) {
      ++k;
      continue;
    }
    std::size_t end = k;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::size_t eq = text.find('=', k);
    if (eq == std::string::npos || eq > end) bad(text, k, "expected key=value");
    std::string key = text.substr(k, eq - k);
    if (key == "on") {
      if (seen_on) bad(text, k, "repeated 'on'");
      seen_on = true;
      std::vector<Pos> on;
      for (std::size_t b = eq + 1; b < end;) {
        std::size_t c = std::min(text.find(',', b), end);
        on.push_back(number(text, b, c));
        b = c + 1;
        if (c + 1 == end) bad(text, c, "trailing comma");
      }
      g.config = LampConfig(std::move(on));
    } else if (key == "shift") {
      if (seen_shift) bad(text, k, "repeated 'shift'");
      seen_shift = true;
      g.shift = number(text, eq + 1, end);
    } else {
      bad(text, k, "unknown key '" + key + "'");
    }
    k = end;
  }
  return g;
}

State parse_state(const std::string& text) {
  auto g = parse_lamplighter(text);
  if (g.shift != 0) fail(ErrorCode::ParseError, "a state has no shift: '" + text + "'");
  return State{g.config};
}

std::string to_json(const std::vector<StreetElement>& path) {
  auto doc = nlohmann::ordered_json::array();
  for (const auto& e : path) {
    nlohmann::ordered_json j;
    if (auto s = std::get_if<State>(&e)) {
      j["type"] = "state";
      j["on"] = s->config.on();
    } else {
      const auto& u = std::get<Uncertain>(e);
      j["type"] = "uncertain";
      j["known"] = u.known.on();
      j["position"] = u.position;
    }
    doc.push_back(std::move(j));
  }
  return doc.dump();
}

}  // namespace geoforge::street
