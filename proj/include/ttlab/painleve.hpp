#ifndef TTLAB_PAINLEVE_HPP
#define TTLAB_PAINLEVE_HPP

#include <vector>

#include "ttlab/report.hpp"
#include "ttlab/tau.hpp"

namespace ttlab {

// Series solutions and residuals of the three Painleve V families, the
// third-order Jacobi equation, its first integral, and the coefficient
// recursion of the orthogonal family.  All residuals act on the
// denominator-cleared polynomial form of the equations.

// f = x d/dx log E_{O(ell+1)+-} e^{x tr M}; starts x^2 +- x^{ell+1}/ell!.
Series f_orth(int ell, int sign, int D);

// g = (d/dx)(x d/dx) log E_{U(ell)} e^{sqrt x tr(M+Mbar)}; starts 1 - x^ell/(ell!)^2.
Series g_unitary(int ell, int D);

// h = 1/(ell+k) (x d/dx log tau - ell x) on the (1+z)^k circle weight at the
// sign-resolved locus s_1 = -x; starts x(k-ell)/(k+ell).  locus_sign = -1
// gives the opposite (printed) exponential sign for comparison.
Series h_words(int ell, int k, int D, int locus_sign = +1);

// H = x d/dx log tau_n(scale * x) for the Jacobi weight, optionally with the
// e^{-cx} prefactor of the tilde variant.
Series H_jacobi(int n, const Rat& alpha, const Rat& beta, const Rat& scale, const Rat& c, int D);

// Coefficients a_2.. of f = x^2 + sum_{i>=3} a_i x^i from the recursion
//   (i+1)(i^2-l^2) a_{i+1} - 16(i-2) a_{i-1}
//   + sum_{n+m=i+1, 2<=n,m<=i-1} n a_n (6m-4) a_m = 0,
// seeded by a_{ell+1} = sign/ell!.  Requires ell >= 3.
std::vector<Rat> f_recursive_coeffs(int ell, int sign, int order);

struct OdeSpec {
    enum class Kind { orth3, unitary2, words3, jacobi3, jacobi3_tilde, cosgrove_integral };
    Kind kind = Kind::orth3;
    int ell = 0;
    int k = 0;
    int n = 0;
    Rat a{0}, b{0}, c{0};  // jacobi parameters / integration constant
};

// Residual of the cleared polynomial form of the chosen equation.
Series ode_residual(const OdeSpec& spec, const Series& f);

// Canonical Painleve V parameters from the quadratic first integral of the
// orthogonal family: alpha = -beta = (ell+1)^2/8, gamma = 0, delta = -8.
struct PvParams {
    Rat alpha, beta, gamma, delta;
};
PvParams orth_pv_params(int ell);

// Verifies the first integral at c = 0 and the canonical parameter map.
CheckList cosgrove_check(const Series& f, int ell, int order);

// Derivation-chain residual for the words family: solve the two linear
// relations for b_n, b_n^*, substitute into the Toeplitz relation, clear
// denominators.
Series words_chain_residual(const Series& h, int n, int k);

// Float cross-check of the unitary family: Bessel determinant vs fixed-step
// RK4 integration of the second-order equation.
struct CrosscheckResult {
    double max_deviation = 0;
    double halving_change = 0;
    int grid_points = 0;
};
CrosscheckResult numeric_crosscheck(int ell, double x0, double x_max, double step);

// Suite-sized reports.
CheckList painleve_orth_report(int order);
CheckList painleve_unitary_report(int order);
CheckList painleve_words_report(int order);

}  // namespace ttlab

#endif
