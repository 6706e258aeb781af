#pragma once

#include "field.h"
#include "transform.h"

namespace frds {

// Symbol of K*(-Laplacian)^(alpha/2) at integer mode (k,l):
// K * ((s1*k)^2 + (s2*l)^2)^(alpha/2) with s_i = 2*pi/L_i.
// alpha must lie in (1,2]; K >= 0.
double multiplier(const GridSpec& grid, int k, int l, double alpha, double k_diff);

// Full table of the symbol in storage order (s1*n + s2), for per-mode loops.
std::vector<double> multiplier_table(const GridSpec& grid, double alpha, double k_diff);

// Multiplies each coefficient by the symbol. k_diff = 1 gives the bare
// operator; callers fold their diffusion coefficient in via k_diff.
SpectralField apply_fractional_laplacian(const SpectralField& s, double alpha,
                                         double k_diff = 1.0);

// Orthogonal truncation to the band [-m/2, m/2-1]^2; m even, 4 <= m <= n.
SpectralField project(const SpectralField& s, int m);

// Continuous L2 norm over the rectangle via Parseval:
// ||u||^2 = L1*L2 * sum |u_hat|^2.
double l2_norm(const SpectralField& s);

// Seminorm |u|_r^2 = L1*L2 * sum_{(k,l) != 0} |u_hat|^2 * ((s1 k)^2+(s2 l)^2)^r.
double hr_seminorm(const SpectralField& s, double r);

void require_alpha(double alpha);

}  // namespace frds
