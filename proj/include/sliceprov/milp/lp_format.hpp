#pragma once

#include <string>

#include "sliceprov/milp/model.hpp"

namespace sliceprov::milp {

// Serializes the model in CPLEX-LP-style text. Deterministic: variables and
// constraints appear in declaration order, coefficients printed with %.17g so
// that write(parse(write(m))) is byte-identical to write(m).
std::string write_lp(const Model& m);

// Parses text produced by write_lp (and plain hand-written LP files using the
// same subset: Minimize/Subject To/Bounds/General/Binary/End sections).
Model parse_lp(const std::string& text);

}  // namespace sliceprov::milp
