#pragma once

#include <charconv>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "element.hpp"
#include "subset.hpp"

namespace nil2 {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline Coord parse_coord(std::string_view tok, const std::string& where) {
  tok = strip(tok);
  Coord value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || tok.empty())
    throw ParseError(where + ": bad integer '" + std::string(tok) + "'");
  return value;
}

inline std::vector<Coord> parse_coord_list(std::string_view body, const std::string& where) {
  std::vector<Coord> out;
  if (body.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = body.find(',', start);
    const std::string_view tok =
        body.substr(start, comma == std::string_view::npos ? body.size() - start : comma - start);
    out.push_back(parse_coord(tok, where));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline void append_coord_list(std::string& out, const std::vector<Coord>& xs) {
  for (std::size_t t = 0; t < xs.size(); ++t) {
    if (t) out.push_back(',');
    out += std::to_string(xs[t]);
  }
}

}  // namespace detail

// "gens:a1,...,an;comms:e12,e13,...,e(n-1)n" with comms empty for n = 1
inline std::string to_text(const MalcevElement& g) {
  std::string out = "gens:";
  detail::append_coord_list(out, g.gens);
  out += ";comms:";
  detail::append_coord_list(out, g.comms);
  return out;
}

inline MalcevElement element_from_text(std::string_view text) {
  const std::string_view s = detail::strip(text);
  constexpr std::string_view kGens = "gens:";
  constexpr std::string_view kComms = "comms:";
  if (s.substr(0, kGens.size()) != kGens) throw ParseError("element must start with 'gens:'");
  const std::size_t semi = s.find(';');
  if (semi == std::string_view::npos) throw ParseError("element is missing ';' before 'comms:'");
  const std::string_view comms_part = detail::strip(s.substr(semi + 1));
  if (comms_part.substr(0, kComms.size()) != kComms)
    throw ParseError("element is missing the 'comms:' block");
  MalcevElement g;
  g.gens = detail::parse_coord_list(s.substr(kGens.size(), semi - kGens.size()), "gens");
  g.comms = detail::parse_coord_list(comms_part.substr(kComms.size()), "comms");
  if (g.gens.empty()) throw ParseError("element needs at least one generator exponent");
  const std::size_t n = g.gens.size();
  if (g.comms.size() != n * (n - 1) / 2)
    throw ParseError("element has " + std::to_string(g.comms.size()) + " commutator exponents; " +
                     std::to_string(n * (n - 1) / 2) + " expected for " + std::to_string(n) +
                     " generators");
  return g;
}

// Subset file: a header "n=<rank>", then one element per line. Blank lines
// and lines starting with '#' are skipped. Duplicate elements are an error.
inline std::string to_subset_file(const Subset& s) {
  std::string out = "n=" + std::to_string(s.context().generators()) + "\n";
  for (const auto& g : s) {
    out += to_text(g);
    out.push_back('\n');
  }
  return out;
}

inline Subset subset_from_stream(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  int n = -1;
  std::vector<MalcevElement> elems;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = detail::strip(line);
    if (body.empty() || body.front() == '#') continue;
    if (n < 0) {
      constexpr std::string_view kHeader = "n=";
      if (body.substr(0, kHeader.size()) != kHeader)
        throw ParseError("line " + std::to_string(line_no) + ": expected header 'n=<rank>'");
      const Coord rank = detail::parse_coord(body.substr(kHeader.size()), "header");
      if (rank < 1 || rank > 64)
        throw ParseError("line " + std::to_string(line_no) + ": rank must be in [1, 64]");
      n = static_cast<int>(rank);
      continue;
    }
    MalcevElement g;
    try {
      g = element_from_text(body);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (g.gens.size() != static_cast<std::size_t>(n))
      throw ParseError("line " + std::to_string(line_no) + ": element has " +
                       std::to_string(g.gens.size()) + " generator exponents; header says " +
                       std::to_string(n));
    for (const auto& seen : elems)
      if (seen == g)
        throw ParseError("line " + std::to_string(line_no) + ": duplicate element " + to_text(g));
    elems.push_back(std::move(g));
  }
  if (n < 0) throw ParseError("missing header 'n=<rank>'");
  if (elems.empty()) throw ParseError("subset file has no elements");
  return Subset::from_elements(GroupContext(n), std::move(elems));
}

inline Subset subset_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return subset_from_stream(in);
}

}  // namespace nil2
