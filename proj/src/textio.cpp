#include "knotpoly/textio.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace knotpoly {

namespace {

struct Token {
  std::string text;
  size_t offset;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    tokens.push_back({text.substr(start, i - start), start});
  }
  return tokens;
}

long parse_integer(const Token& tok) {
  if (tok.text.empty()) throw ParseError("empty token", tok.offset);
  size_t i = (tok.text[0] == '-' || tok.text[0] == '+') ? 1 : 0;
  if (i == tok.text.size()) throw ParseError("not an integer: '" + tok.text + "'", tok.offset);
  for (size_t j = i; j < tok.text.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(tok.text[j])))
      throw ParseError("not an integer: '" + tok.text + "'", tok.offset);
  errno = 0;
  long v = std::strtol(tok.text.c_str(), nullptr, 10);
  if (errno == ERANGE) throw ParseError("integer out of range: '" + tok.text + "'", tok.offset);
  return v;
}

}  // namespace

BraidWord parse_braid(const std::string& text, std::optional<int> strands) {
  std::vector<Token> tokens = tokenize(text);
  std::vector<int> letters;
  int max_index = 0;
  for (const Token& tok : tokens) {
    long v = parse_integer(tok);
    if (v == 0) throw ParseError("zero is not a braid letter", tok.offset);
    if (std::abs(v) > 1'000'000) throw ParseError("letter out of range", tok.offset);
    letters.push_back(static_cast<int>(v));
    max_index = std::max(max_index, static_cast<int>(std::abs(v)));
  }
  int n = strands.value_or(std::max(max_index + 1, 1));
  if (n < 1) throw ParseError("strand count must be positive", 0);
  if (max_index >= n) {
    for (const Token& tok : tokens) {
      long v = parse_integer(tok);
      if (std::abs(v) >= n)
        throw ParseError("letter " + tok.text + " not a generator of B_" + std::to_string(n),
                         tok.offset);
    }
  }
  return {n, std::move(letters)};
}

std::string serialize_braid(const BraidWord& b) {
  std::ostringstream out;
  for (size_t i = 0; i < b.letters.size(); ++i) {
    if (i) out << ' ';
    out << b.letters[i];
  }
  return out.str();
}

PDCode parse_pd(const std::string& text) {
  PDCode pd;
  std::istringstream in(text);
  std::string line;
  size_t offset = 0;
  while (std::getline(in, line)) {
    size_t line_start = offset;
    offset += line.size() + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) continue;
    for (Token& tok : tokens) tok.offset += line_start;
    if (tokens[0].text == "X") {
      if (tokens.size() != 5)
        throw ParseError("X line needs exactly four arc ids", tokens[0].offset);
      std::array<int, 4> t;
      for (int s = 0; s < 4; ++s) {
        long v = parse_integer(tokens[static_cast<size_t>(s + 1)]);
        if (v <= 0 || v > 1'000'000'000)
          throw ParseError("arc id must be a positive integer",
                           tokens[static_cast<size_t>(s + 1)].offset);
        t[static_cast<size_t>(s)] = static_cast<int>(v);
      }
      pd.crossings.push_back(t);
    } else if (tokens[0].text == "O") {
      if (tokens.size() != 2) throw ParseError("O line needs one count", tokens[0].offset);
      long m = parse_integer(tokens[1]);
      if (m < 0) throw ParseError("circle count must be nonnegative", tokens[1].offset);
      pd.free_circles += static_cast<int>(m);
    } else {
      throw ParseError("expected 'X a b c d' or 'O m'", tokens[0].offset);
    }
  }
  if (pd.crossings.empty() && pd.free_circles == 0)
    throw ParseError("diagram has no components", 0);
  if (!pd.crossings.empty()) {
    try {
      DiagramInfo info(pd);  // validates arcs and traversability
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), 0);
    }
  }
  return pd;
}

std::string serialize_pd(const PDCode& pd) {
  std::ostringstream out;
  for (const auto& t : pd.crossings)
    out << "X " << t[0] << ' ' << t[1] << ' ' << t[2] << ' ' << t[3] << '\n';
  if (pd.free_circles > 0) out << "O " << pd.free_circles << '\n';
  return out.str();
}

namespace {

LaurentPoly from_terms(std::initializer_list<std::pair<long, long>> terms) {
  LaurentPoly p;
  for (auto [e, c] : terms) p += LaurentPoly::monomial(c, e);
  return p;
}

}  // namespace

const std::vector<Fixture>& fixture_table() {
  static const std::vector<Fixture> table = {
      {"unknot", BraidWord(1, {}), from_terms({{0, 1}})},
      {"unlink2", BraidWord(2, {}), from_terms({{2, -1}, {-2, -1}})},
      {"hopf-neg", BraidWord(2, {-1, -1}), from_terms({{10, -1}, {2, -1}})},
      {"trefoil-right", BraidWord(2, {1, 1, 1}), from_terms({{-4, 1}, {-12, 1}, {-16, -1}})},
      {"trefoil-left", BraidWord(2, {-1, -1, -1}), from_terms({{4, 1}, {12, 1}, {16, -1}})},
      {"figure-eight", BraidWord(3, {1, -2, 1, -2}),
       from_terms({{8, 1}, {4, -1}, {0, 1}, {-4, -1}, {-8, 1}})},
  };
  return table;
}

const Fixture* find_fixture(const std::string& name) {
  for (const Fixture& f : fixture_table())
    if (f.name == name) return &f;
  return nullptr;
}

}  // namespace knotpoly
