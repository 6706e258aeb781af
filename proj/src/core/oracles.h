#pragma once

#include "field.h"
#include "stability.h"

namespace frds {

// Direct iteration of the scalar three-term recurrence
// (3/2 + mu t + k t) u^n = (2 + 2 rho t + 2 k t) u^{n-1} - (1/2 + rho t + k t) u^{n-2},
// returning u^0 .. u^steps. Independent of the spectral solver; used to
// cross-check both the stepper on linear models and the stability verdicts.
std::vector<cplx> recurrence_oracle(const StabilityQuery& q, cplx u0, cplx u1, int steps);

// Per-step growth factor of the recurrence from (1,1), measured over the
// trailing half of `steps` iterations with periodic renormalization so that
// strongly growing or decaying sequences stay in floating-point range.
double recurrence_growth_factor(const StabilityQuery& q, int steps);

// Rectangle-rule L2 norm sqrt(sum f(x_j)^2 h1 h2); for band-limited fields
// this matches the spectral l2_norm (Parseval).
double quadrature_oracle(const PhysicalField& f);

// (-Laplacian)^(alpha/2) by explicit O(n^4) mode sums with direct complex
// exponentials; no FFT involved. Grids capped at n <= 16.
PhysicalField dense_operator_oracle(const PhysicalField& f, double alpha);

}  // namespace frds
