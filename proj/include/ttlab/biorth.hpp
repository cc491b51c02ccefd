#ifndef TTLAB_BIORTH_HPP
#define TTLAB_BIORTH_HPP

#include <vector>

#include "ttlab/report.hpp"
#include "ttlab/tau.hpp"

namespace ttlab {

using SeriesMat = std::vector<std::vector<Series>>;

// Bi-orthogonal data of a moment matrix: the LDU factorization pivots
// h_n = tau_{n+1}/tau_n, the monic polynomial coefficient rows of
// p_n^(1), p_n^(2), and the lattice variables x_n = p_n^(1)(0),
// y_n = p_n^(2)(0).  For the Jacobi model every entry carries pi^pi_power,
// which is uniform and therefore stripped from the stored series.
struct BiorthSystem {
    int N = 0;
    TablePtr table;
    int order = 0;
    int pi_power = 0;
    std::vector<Series> tau;                // principal minors tau_0..tau_N
    std::vector<Series> h;                  // h_0..h_{N-1}
    std::vector<std::vector<Series>> p1;    // row n: coefficients of p_n^(1)
    std::vector<std::vector<Series>> p2;    // row n: coefficients of p_n^(2)
    std::vector<Series> x, y;               // x_n, y_n for n = 0..N-1
};

// Rank-two dressed shift matrices L1 and K2 := h L2^T h^{-1}, truncated to
// N x N.  Entries with row index > interior touch the truncation edge and
// are not exact.
struct LatticeMatrices {
    SeriesMat L1;
    SeriesMat K2;
    int interior = 0;
};

BiorthSystem factor_biorth(const WeightSpec& spec, int N, int D, TablePtr table = nullptr);

// Factor an explicit unit-pivot series matrix (used by tests as well).
BiorthSystem factor_biorth_matrix(const SeriesMat& m, int pi_power);

LatticeMatrices lattice_matrices(const BiorthSystem& sys);

// Structure identities on the circle model: the shift recurrences linking
// the two polynomial families, the
// unsymmetric and symmetrized pair-product identities, and the rank-two
// lower-triangular form of L1 and h L2^T h^{-1}.
CheckList structure_report(const BiorthSystem& sys, const LatticeMatrices& mats);

// Flow identities: the first and second Hamiltonian flows of the lattice
// variables, the Lax form of the t_1/s_1 deformations, and the expression of
// x_n, y_n as scaled-partial polynomials of tau_n.
CheckList flow_report(const BiorthSystem& sys, const LatticeMatrices& mats);

// One-dimensional Toda chain for the orthogonal-group integrals
// q_l = log e_l I_{l+2}/I_l.  Two readings of the neighbor index are
// checked: the chain as printed with site step 1 (which interleaves the two
// Jacobi families and fails at order l-2), and the same-parity chain with
// site step 2, where (1/4) q_l'' = -e^{q_l - q_{l-2}} + e^{q_{l+2} - q_l}
// holds exactly with the stated constants.  A ratio-normalized variant of
// the printed form (all constant factors dropped) is evaluated as well.
struct TodaCase {
    int sign = +1;
    int ell = 0;
    bool printed_pass = false;     // step-1 neighbors, stated constants
    bool normalized_pass = false;  // step-1 neighbors, constants dropped
    bool parity_pass = false;      // step-2 neighbors, stated constants
    int order = 0;
    std::string detail;
};
std::vector<TodaCase> toda_chain_report(int sign, int ell_min, int ell_max, int order);

// Discrete sinh-Gordon for the bivariate unitary integrals
// q_l = log(I_{l+1}/I_l), d^2 q_l/dxdy = e^{q_l-q_{l-1}} - e^{q_{l+1}-q_l}.
CheckList sinh_gordon_report(int ell_max, int order);

}  // namespace ttlab

#endif
