#include "geoforge/caps.hpp"

#include <charconv>
#include <mutex>
#include <string>

#include "geoforge/error.hpp"

namespace geoforge {
namespace {

std::mutex caps_mutex;
Caps current_caps;

std::uint64_t parse_number(std::string_view key, std::string_view value) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size())
    fail(ErrorCode::ParseError, "cap '" + std::string(key) + "' expects an integer, got '" +
                                    std::string(value) + "'");
  return out;
}

}  // namespace

Caps caps() {
  std::lock_guard lock(caps_mutex);
  return current_caps;
}

void set_caps(const Caps& c) {
  std::lock_guard lock(caps_mutex);
  current_caps = c;
}

Caps parse_caps(std::string_view text, Caps base) {
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos)
      fail(ErrorCode::ParseError, "cap entry '" + std::string(item) + "' lacks '='");
    auto key = item.substr(0, eq);
    auto value = parse_number(key, item.substr(eq + 1));
    if (key == "closure") base.closure = value;
    else if (key == "product") base.product = value;
    else if (key == "geometry") base.geometry = value;
    else if (key == "involutions") base.involutions = value;
    else if (key == "rank_guard") base.rank_guard = static_cast<std::size_t>(value);
    else fail(ErrorCode::ParseError, "unknown cap '" + std::string(key) + "'");
  }
  return base;
}

ScopedCaps::ScopedCaps(const Caps& c) : saved_(caps()) { set_caps(c); }
ScopedCaps::~ScopedCaps() { set_caps(saved_); }

}  // namespace geoforge
