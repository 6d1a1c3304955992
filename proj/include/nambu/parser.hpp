#ifndef NAMBU_PARSER_HPP
#define NAMBU_PARSER_HPP

#include <string>

#include "nambu/exppoly.hpp"

namespace nambu {

/// Parses the expression grammar: + - * / ^, integer literals, rationals
/// via division, coordinates x1..x8, exp/sin/cos of real linear forms,
/// parameters as identifiers. Parameters bound in `env` are substituted
/// during parsing (enables exact division like x4/a at bound values);
/// unbound parameters stay symbolic. Division is legal only by nonzero
/// constants and exponential units.
ExpPoly parse(const std::string& src, const ParamEnv& env = {});

}  // namespace nambu

#endif
