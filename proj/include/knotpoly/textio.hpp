#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotpoly/braid.hpp"
#include "knotpoly/diagram.hpp"
#include "knotpoly/laurent.hpp"

namespace knotpoly {

/// Input text rejected; position is a 0-based character offset into the text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, size_t position)
      : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

/// Braid word grammar: whitespace-separated nonzero integers. Strand count
/// defaults to max |letter| + 1 (1 for the empty word).
BraidWord parse_braid(const std::string& text, std::optional<int> strands = std::nullopt);
std::string serialize_braid(const BraidWord& b);

/// PD text format: one crossing per line as `X a b c d`, an optional `O m`
/// line for m free circles, `#` comments. The result is validated (arc-twice
/// rule, traversability, consecutive numbering).
PDCode parse_pd(const std::string& text);
std::string serialize_pd(const PDCode& pd);

// Built-in table of worked examples keyed by braid words, with expected Jones
// values in A-form.
struct Fixture {
  std::string name;
  BraidWord word;
  LaurentPoly expected_A;
};

const std::vector<Fixture>& fixture_table();
const Fixture* find_fixture(const std::string& name);  // nullptr if unknown

}  // namespace knotpoly
