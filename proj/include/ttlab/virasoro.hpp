#ifndef TTLAB_VIRASORO_HPP
#define TTLAB_VIRASORO_HPP

#include <vector>

#include "ttlab/diffop.hpp"
#include "ttlab/report.hpp"
#include "ttlab/schur.hpp"
#include "ttlab/tau.hpp"

namespace ttlab {

// Heisenberg generators J^(1)_k over one time family:
//   d/dt_k (k > 0), (1/beta)(-k) t_{-k} (k < 0), 0 (k = 0).
DiffOp op_J1(const TablePtr& table, const TimeFamily& fam, int k, const Rat& beta);

// Quadratic generators J^(2)_k:
//   sum_{i+j=k} d_i d_j + (2/beta) sum_{j-i=k} i t_i d_j
//   + (1/beta^2) sum_{i+j=-k} (i t_i)(j t_j),
// with sums truncated to the variables present in the family.
DiffOp op_J2(const TablePtr& table, const TimeFamily& fam, int k, const Rat& beta);

// Vector components at lattice index n:
//   JJ1_k(n) = J^(1)_k + n delta_{k,0}
//   JJ2_k(n) = (beta/2) J^(2)_k + (n beta + (k+1)(1 - beta/2)) J^(1)_k
//              + n((n-1) beta + 2)/2 delta_{k,0}
DiffOp op_JJ1(const TablePtr& table, const TimeFamily& fam, int k, int n, const Rat& beta);
DiffOp op_JJ2(const TablePtr& table, const TimeFamily& fam, int k, int n, const Rat& beta);

// Hankel-side constraint operator at beta = 2 for a weight with
// -rho'/rho = (sum b_k z^k)/(sum a_k z^k):
//   sum_{k>=0} ( -a_k (J^(2)_{k+m} + 2n J^(1)_{k+m} + n^2 delta_{k+m,0})
//                + b_k (J^(1)_{k+m+1} + n delta_{k+m+1,0}) ).
DiffOp hankel_constraint_op(const TablePtr& table, int m, int n, const std::vector<Rat>& a,
                            const std::vector<Rat>& b);

// Jacobi weight data a = (1, 0, -1), b = (alpha - beta, alpha + beta).
DiffOp hankel_constraint_op_jacobi(const TablePtr& table, int m, int n, const Rat& alpha,
                                   const Rat& beta);

// Toeplitz-side constraint operator at beta = 1,
//   V_k = JJ2_k(t) - JJ2_{-k}(-s) - k (theta JJ1_k(t) + (1-theta) JJ1_{-k}(-s)),
// annihilating tau only for k = -1 (theta = 0), k = 0 (any theta),
// k = 1 (theta = 1).  |k| > 1 is allowed only as an explicit negative
// control.
DiffOp toeplitz_constraint_op(const TablePtr& table, int k, const Rat& theta, int n,
                              bool allow_noncanonical = false);

// Residual op(tau_n)/tau_n of the Hankel or Toeplitz constraints on the
// normalized tau series.
Series hankel_constraint_residual(const Rat& alpha, const Rat& beta, int n, int m, int D);
Series toeplitz_constraint_residual(int n, int k, const Rat& theta, int D,
                                    bool allow_noncanonical = false);

// Bilinear PDE residuals on consecutive tau's.
enum class PdeKind { kp_t, kp_s, toda_ii, toda_iii, toeplitz_relation };
Series pde_residual(PdeKind kind, const WeightSpec& spec, int n, int D);

// Commutation relation [JJ2_k, JJ2_l] = (k-l) JJ2_{k+l}
// + c (k^3-k)/12 delta_{k,-l} with c = -2 at beta 1 and c = 1 at beta 2,
// applied to a probe at fixed lattice index n.
CheckResult commutator_check(int k, int l, const Rat& beta, int n, const Series& probe);

Rat central_charge(const Rat& beta);

// Suite-sized reports.
CheckList virasoro_hankel_report(int nmax, int order);
CheckList virasoro_toeplitz_report(int nmax, int order);
CheckList virasoro_negative_controls(int order);
CheckList commutator_report(unsigned seed, int probes, int order);
CheckList pde_report(int order_kp, int order_rest);

}  // namespace ttlab

#endif
