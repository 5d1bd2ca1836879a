#pragma once

// Text form of ring elements.
//
//   expr   := ["-"] term (("+" | "-") term)*
//   term   := factor ("*" factor)*
//   factor := atom ("^" uint)?
//   atom   := rational | "z" | "theta" | "e" uint | "(" expr ")"
//
// A rational literal is "p" or "p/q". U+2212 is read as "-".

#include "symcurve/gca.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace symcurve {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::string input, std::size_t column);

    /// Zero-based column, counted in code points.
    [[nodiscard]] std::size_t column() const { return column_; }
    [[nodiscard]] const std::string& input() const { return input_; }
    /// Message, the input line and a caret under the offending column.
    [[nodiscard]] std::string diagnostic() const;

private:
    std::string input_;
    std::size_t column_;
};

/// Parses over Lambda(e_1..e_2g)[z]; e<k> must satisfy 1 <= k <= 2g.
Element parse_expression(std::string_view text, int genus);

/// Grammar form: monomials in descending order, e.g. "z^2 - 1/2*e1*e3*z".
std::string render(const Element& x);

/// beta = sum_i (-1)^i theta^i/i! z^{g-i} written in theta and z, e.g.
/// "z^2 - theta*z + 1/2*theta^2".
std::string render_beta(int genus);

}  // namespace symcurve
