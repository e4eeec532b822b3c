#pragma once

#include <string>

#include "ringforge/ring.hpp"

namespace ringforge {

/**
 * Constructor expressions:
 *   zmod:N
 *   mat:N:<expr>
 *   tri:N:<expr>
 *   grpalg:q=Q:cyclic=N
 *   pathalg:q=Q:vertices=V:arrows=1>2,2>1:rel=rad2
 *   prod:(<expr>),(<expr>)[,(<expr>)...]
 * Throws ParseError with position information.
 */
FiniteRing ring_from_expression(const std::string& expr);

// A path to a ring-spec JSON file, or a constructor expression.
FiniteRing load_ring_input(const std::string& input);

}  // namespace ringforge
