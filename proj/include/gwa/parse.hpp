// Recursive-descent parser for the expression grammar used on the command
// line: scalar literals in q, the A-generators x+ x- z+ z-, the B-generators
// x y z, spinor markers s+ s-, one-form markers w- w0 w+, and the operators
// + - * / ^ with parentheses. The printers on each element type emit the
// same grammar.
#pragma once

#include "gwa/calculus.hpp"
#include "gwa/spin.hpp"

namespace gwa {

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

Scalar parse_scalar(const std::string& text);
ZPoly parse_zpoly(const std::string& text);
AlgElem parse_a_expr(const std::string& text, const CtxPtr& ctx);
BElem parse_b_expr(const std::string& text, const CtxPtr& ctx);
Spinor parse_spinor(const std::string& text, const CtxPtr& ctx);
OmegaElem parse_omega(const std::string& text, const CtxPtr& ctx);

}  // namespace gwa
