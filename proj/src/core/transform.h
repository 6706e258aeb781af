#pragma once

#include "field.h"

namespace frds {

// DFT pair with the convention u_hat = DFT(u)/n^2, so u_hat(0,0) is the mean
// of u and synthesis is the plain unnormalized inverse DFT.
SpectralField forward_transform(const PhysicalField& f);

// Imaginary content above `imag_tol` max-abs signals broken conjugate
// symmetry upstream and raises ComputationError; below, it is discarded.
PhysicalField inverse_transform(const SpectralField& s, double imag_tol = 1e-10);

// Inverse without the symmetry check, for callers that inspect the result
// themselves (returns the raw complex synthesis).
std::vector<cplx> inverse_transform_complex(const SpectralField& s);

}  // namespace frds
