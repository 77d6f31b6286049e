#pragma once

#include <vector>

#include "superck/scalar.hpp"

namespace sck {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;  // row major

// Exact Gaussian elimination. Solves A x = b; free variables are set to zero.
// Returns false when the system is inconsistent.
bool solve_linear(QMat a, QVec b, QVec& x);

// Basis of the null space of A (columns = unknowns).
std::vector<QVec> null_space(QMat a);

}  // namespace sck
