#pragma once

#include <cstdint>
#include <vector>

#include "platoon/poly/monomial.hpp"

namespace platoon::poly {

// All monomials in `nvars` variables with total degree in [deg_min, deg_max],
// in graded-lex order.
std::vector<Monomial> monomial_basis(int nvars, int deg_min, int deg_max);

// Number of monomials of total degree exactly `deg` in `nvars` variables,
// i.e. C(nvars + deg - 1, deg).
uint64_t monomial_count(int nvars, int deg);

}  // namespace platoon::poly
