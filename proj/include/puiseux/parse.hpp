#pragma once

#include <string>
#include <vector>

#include "puiseux/orderspec.hpp"
#include "puiseux/puiseux_poly.hpp"
#include "puiseux/ypoly.hpp"

namespace puiseux {

/// Parses an expression over the declared variables into a Puiseux
/// polynomial (arity vars.size()). Grammar: integers, "/", "+", "-", "*",
/// "^" with integer or parenthesized rational exponents, parentheses.
PuiseuxPoly parse_puiseux(const std::string& src, const std::vector<std::string>& vars);

/// Parses an expression in vars plus the distinguished unknown.
YPoly parse_expression(const std::string& src, const std::vector<std::string>& vars,
                       const std::string& unknown);

/// Order spec syntax: rows "(e1,...,en)" separated by ";", entries
/// "a", "b*sqrt(d)" or "a+b*sqrt(d)" (also "a-b*sqrt(d)", "sqrt(d)",
/// "1/sqrt(d)"). A single row is completed with unit tie-break rows.
OrderSpec parse_order(const std::string& src);

}  // namespace puiseux
