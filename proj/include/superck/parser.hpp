#pragma once

#include <string>

#include "superck/element.hpp"

namespace sck {

struct parse_error : std::runtime_error {
    parse_error(const std::string& what, size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), pos(position) {}
    size_t pos;
};

// Grammar (the noncommutative algebra product, precedence ^ > * / > + -):
//   expr    := uterm (('+'|'-') uterm)*
//   uterm   := '-' uterm | term
//   term    := factor (('*'|'/') factor)*
//   factor  := atom ('^' int)?
//   atom    := rational | var | 'sqrtpi' | 'logx0'
//            | 'X(' block ')' | 'IP(' block ',' block ')' | 'NORM2(' block ')'
//            | '(' expr ')'
// Division requires an invertible (single-term, log-free, Clifford-scalar)
// divisor; negative powers likewise.
SuperElement parse_expression(const std::string& text, const SigPtr& sig);

}  // namespace sck
