#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "algres/forms.hpp"
#include "algres/restriction.hpp"
#include "algres/upoly.hpp"

namespace algres {

/// Syntax error with a 1-based position and the set of tokens that would
/// have been accepted there.
class ParseError : public InputError {
 public:
  ParseError(int line, int column, const std::string& found, std::set<std::string> expected);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::set<std::string>& expected() const { return expected_; }

 private:
  int line_, column_;
  std::set<std::string> expected_;
};

/// Values for parameter identifiers such as c, c1, c2.
using ParamValues = std::map<std::string, Rational>;

/// Grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (('*'|'^'|'/') factor)*
///   factor := atom ('^' INT)*
///   atom   := NUMBER | 'x'INT | 'dx'INT | 't' | IDENT | '(' expr ')'
/// '^' followed by an integer is a power, otherwise a wedge product; '*' is
/// also a wedge product (plain multiplication when one side is a function).
/// Division is only by nonzero constants.
DifferentialForm parse_form(const std::string& text, std::size_t nvars, const ParamValues& params = {});
Polynomial parse_polynomial(const std::string& text, std::size_t nvars, const ParamValues& params = {});
/// "(e1, e2, ...)" or "e1, e2, ..."; the parentheses are optional.
std::vector<Polynomial> parse_polynomial_list(const std::string& text, std::size_t nvars,
                                              const ParamValues& params = {});
/// Map components as a polynomial list; source dimension nvars.
PolyMap parse_map(const std::string& text, std::size_t nvars, const ParamValues& params = {});
/// Curve components in the variable t, e.g. "(t^4, t^5 + c1*t^7, t^6)".
std::vector<UPoly> parse_curve(const std::string& text, const ParamValues& params = {});
/// Linear combination of basis labels ("a9 + 2*a11- - 3/2*a13+", "a11^+" is
/// accepted too) or a coordinate list "[1, 0, 3/2, ...]".
AlgRestriction parse_restriction(const std::string& text, const RestrictionBasis& b,
                                 const ParamValues& params = {});
Rational parse_scalar(const std::string& text, const ParamValues& params = {});

}  // namespace algres
