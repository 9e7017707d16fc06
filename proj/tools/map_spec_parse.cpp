#include "map_spec_parse.hpp"

#include <charconv>
#include <string>

#include "amzeta/errors.hpp"
#include "amzeta/numtheory.hpp"

namespace amzeta::cli {

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return std::string(s);
}

template <typename T>
T parse_int(std::string_view text, const char* what) {
  const std::string s = trim(text);
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InvalidArgument(std::string("bad ") + what + ": '" + s + "'");
  }
  return value;
}

std::uint32_t parse_prime(std::string_view text) {
  const auto p = parse_int<std::uint32_t>(text, "prime");
  if (!nt::is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  return p;
}

// Splits off the next comma-separated field; returns the remainder.
std::string_view take_field(std::string_view& rest, const char* what) {
  const std::size_t comma = rest.find(',');
  if (comma == std::string_view::npos) {
    throw InvalidArgument(std::string("map spec is missing ") + what);
  }
  std::string_view head = rest.substr(0, comma);
  rest.remove_prefix(comma + 1);
  return head;
}

bool looks_numeric(std::string_view s) {
  const std::string t = trim(s);
  if (t.empty()) return false;
  for (char c : t) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

MapSpec parse_map_spec(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw InvalidArgument("map spec needs a kind prefix, e.g. power:3,2");
  }
  const std::string kind = trim(text.substr(0, colon));
  std::string_view rest = text.substr(colon + 1);

  if (kind == "power") {
    const std::uint32_t p = parse_prime(take_field(rest, "p"));
    return MapSpec::power(p, parse_int<std::uint64_t>(rest, "exponent"));
  }
  if (kind == "additive") {
    const std::uint32_t p = parse_prime(take_field(rest, "p"));
    const auto m = parse_int<unsigned>(take_field(rest, "m"), "extension degree");
    const FieldDesc& field = FieldDesc::get(p, m);
    return MapSpec::additive(parse_element(rest, field));
  }
  if (kind == "pthpow" || kind == "general") {
    const std::uint32_t p = parse_prime(take_field(rest, "p"));
    unsigned m = 1;
    // The degree is optional for pthpow; the polynomial itself never starts
    // with a bare integer followed by a comma.
    const std::size_t comma = rest.find(',');
    if (comma != std::string_view::npos && looks_numeric(rest.substr(0, comma))) {
      m = parse_int<unsigned>(take_field(rest, "m"), "extension degree");
    } else if (kind == "general") {
      throw InvalidArgument("general map spec is general:p,m,\"poly\"");
    }
    Poly f = parse_poly(rest, FieldDesc::get(p, m));
    return kind == "pthpow" ? MapSpec::pth_power_coeff(std::move(f))
                            : MapSpec::general(std::move(f));
  }
  throw InvalidArgument("unknown map kind '" + kind + "'");
}

std::pair<std::uint64_t, std::uint64_t> parse_range(std::string_view text) {
  const std::size_t dots = text.find("..");
  if (dots == std::string_view::npos) {
    const auto n = parse_int<std::uint64_t>(text, "index");
    return {n, n};
  }
  const auto lo = parse_int<std::uint64_t>(text.substr(0, dots), "range start");
  const auto hi = parse_int<std::uint64_t>(text.substr(dots + 2), "range end");
  if (lo > hi) throw InvalidArgument("empty range " + std::string(text));
  return {lo, hi};
}

std::pair<std::uint32_t, unsigned> parse_field(std::string_view text) {
  const std::size_t caret = text.find('^');
  if (caret == std::string_view::npos) return {parse_prime(text), 1};
  return {parse_prime(text.substr(0, caret)),
          parse_int<unsigned>(text.substr(caret + 1), "field degree")};
}

std::vector<std::uint64_t> parse_uint_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  if (trim(text).empty()) return out;
  for (;;) {
    const std::size_t comma = text.find(',');
    out.push_back(parse_int<std::uint64_t>(text.substr(0, comma), "list entry"));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  if (trim(text).empty()) return out;
  for (;;) {
    const std::size_t comma = text.find(',');
    out.push_back(parse_int<std::int64_t>(text.substr(0, comma), "list entry"));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace amzeta::cli
