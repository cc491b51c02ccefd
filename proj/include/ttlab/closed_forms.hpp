#ifndef TTLAB_CLOSED_FORMS_HPP
#define TTLAB_CLOSED_FORMS_HPP

#include "ttlab/report.hpp"
#include "ttlab/tau.hpp"

namespace ttlab {

// Jacobi ensemble normalization at pair-interaction exponent one:
//   int_{[-1,1]^n} Delta^2 prod (1-z)^alpha (1+z)^beta dz
//     = 2^{n(n+alpha+beta)} prod_{j=1}^n j! Gamma(j+alpha) Gamma(j+beta)
//       / Gamma(n+j+alpha+beta).
PiRational selberg_jacobi(int n, const Rat& alpha, const Rat& beta);

// Group volumes from the closed product formulas (the normalization the
// one-time integrals use); `ell` is
// the matrix size for the orthogonal groups and the index for Sp.
PiRational selberg_volume(GroupKind kind, int ell);

// Averages over the Jacobi ensemble in the a = alpha+beta, b = alpha-beta
// parameters.
enum class AomotoKind { y1, y1y2, y1sq, gamma_n, H_prime_zero };
Rat aomoto(AomotoKind kind, int n, const Rat& a, const Rat& b);

// Volume formulas against raw determinant normalizations, the first/second
// moment averages against deformed-determinant derivatives at the origin,
// and the f''(0) = 2 table.
CheckList closed_forms_report();

}  // namespace ttlab

#endif
