#include <cctype>
#include <charconv>
#include <string>

#include "amzeta/errors.hpp"
#include "amzeta/polynomial.hpp"

namespace amzeta {

namespace {

constexpr std::uint64_t kMaxParsedExponent = 10'000'000;

std::string strip(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) {
    s = s.substr(1, s.size() - 2);
  }
  return s;
}

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InvalidArgument("malformed " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return v;
}

std::uint32_t parse_residue(std::string_view s, std::uint32_t p) {
  const std::uint64_t v = parse_uint(s, "coefficient");
  if (v >= p) {
    throw InvalidArgument("coefficient " + std::string(s) + " is not a residue mod " +
                          std::to_string(p));
  }
  return static_cast<std::uint32_t>(v);
}

}  // namespace

FieldElem parse_element(std::string_view text, const FieldDesc& field) {
  const std::string s = strip(text);
  if (s.empty()) throw InvalidArgument("empty field element");
  if (s.front() != '[') return field.from_int(parse_residue(s, field.characteristic()));
  if (s.back() != ']') throw InvalidArgument("unterminated element: '" + s + "'");
  std::vector<std::uint32_t> residues;
  const std::string_view body(s.data() + 1, s.size() - 2);
  std::size_t start = 0;
  while (start <= body.size()) {
    const std::size_t comma = body.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? body.size() : comma;
    residues.push_back(parse_residue(body.substr(start, end - start), field.characteristic()));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return field.from_coeffs(residues);
}

Poly parse_poly(std::string_view text, const FieldDesc& field) {
  const std::string s = strip(text);
  if (s.empty()) throw InvalidArgument("empty polynomial");
  Poly result(field);
  std::size_t i = 0;
  while (i < s.size()) {
    bool negate = false;
    if (s[i] == '+' || s[i] == '-') {
      negate = s[i] == '-';
      ++i;
    } else if (i != 0) {
      throw InvalidArgument("expected '+' or '-' at position " + std::to_string(i));
    }
    // term extends to the next sign outside brackets
    std::size_t end = i;
    int depth = 0;
    while (end < s.size() && (depth > 0 || (s[end] != '+' && s[end] != '-'))) {
      if (s[end] == '[') ++depth;
      if (s[end] == ']') --depth;
      ++end;
    }
    const std::string_view term(s.data() + i, end - i);
    if (term.empty()) throw InvalidArgument("empty term in '" + s + "'");

    FieldElem coeff = field.one();
    std::size_t exponent = 0;
    const std::size_t xpos = term.find('x');
    if (xpos == std::string_view::npos) {
      coeff = parse_element(term, field);
    } else {
      std::string_view c = term.substr(0, xpos);
      if (!c.empty() && c.back() == '*') c.remove_suffix(1);
      if (!c.empty()) coeff = parse_element(c, field);
      const std::string_view rest = term.substr(xpos + 1);
      if (rest.empty()) {
        exponent = 1;
      } else if (rest.front() == '^') {
        const std::uint64_t e = parse_uint(rest.substr(1), "exponent");
        if (e > kMaxParsedExponent) {
          throw ResourceLimit("exponent " + std::to_string(e) + " too large",
                              std::to_string(e));
        }
        exponent = static_cast<std::size_t>(e);
      } else {
        throw InvalidArgument("malformed term '" + std::string(term) + "'");
      }
    }
    if (negate) coeff = -coeff;
    result += Poly::monomial(coeff, exponent);
    i = end;
  }
  return result;
}

}  // namespace amzeta
