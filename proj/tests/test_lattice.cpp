#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ttlab/biorth.hpp"

using namespace ttlab;

namespace {

void require_all(const CheckList& checks, int at_least = 1) {
    CHECK(static_cast<int>(checks.size()) >= at_least);
    for (const auto& c : checks) {
        INFO(c.check_id, " ", c.mismatch ? c.mismatch->where + ": " + c.mismatch->lhs + " vs " +
                                               c.mismatch->rhs
                                         : "");
        CHECK(c.pass);
    }
}

}  // namespace

TEST_CASE("factorization of the undeformed circle model is trivial") {
    WeightSpec spec = WeightSpec::circle(1, 1);
    TablePtr tab = tau_table(spec);
    BiorthSystem sys = factor_biorth(spec, 4, 0, tab);  // order 0: t = s = 0
    for (int n = 0; n < 4; ++n) {
        CHECK(sys.h[n].constant_term() == Rat(1));
        for (int k = 0; k < n; ++k) {
            CHECK(sys.p1[n][k].is_zero());
            CHECK(sys.p2[n][k].is_zero());
        }
        CHECK(sys.p1[n][n].constant_term() == Rat(1));
    }
    LatticeMatrices mats = lattice_matrices(sys);
    // L1 is exactly the shift
    for (int i = 0; i <= mats.interior; ++i)
        for (int j = 0; j < 4; ++j) {
            if (j == i + 1)
                CHECK(mats.L1[i][j].constant_term() == Rat(1));
            else
                CHECK(mats.L1[i][j].is_zero());
        }
}

TEST_CASE("bi-orthogonality holds exactly to order") {
    WeightSpec spec = WeightSpec::circle(2, 2);
    TablePtr tab = tau_table(spec);
    int N = 4, D = 5;
    BiorthSystem sys = factor_biorth(spec, N, D, tab);
    CircleMoments cm(tab, D, 0);
    for (int n = 0; n < N; ++n) CHECK(sys.p1[n][n] == Series::constant(tab, D, Rat(1)));
    for (int n = 0; n < N; ++n)
        for (int m = 0; m < N; ++m) {
            Series acc(tab, D);
            for (int a = 0; a <= n; ++a)
                for (int b = 0; b <= m; ++b) acc += sys.p1[n][a] * cm.entry(a, b) * sys.p2[m][b];
            if (n == m)
                CHECK(acc == sys.h[n]);
            else
                CHECK(acc.is_zero());
        }
}

TEST_CASE("boundary values of the lattice variables") {
    WeightSpec spec = WeightSpec::circle(2, 2);
    BiorthSystem sys = factor_biorth(spec, 5, 4);
    CHECK(sys.x[0].constant_term() == Rat(1));
    CHECK(sys.y[0].constant_term() == Rat(1));
    for (int n = 1; n < 5; ++n) {
        CHECK(sys.x[n].constant_term() == Rat(0));  // vanish at t = s = 0
        CHECK(sys.y[n].constant_term() == Rat(0));
    }
}

TEST_CASE("jacobi model pivots") {
    WeightSpec spec = WeightSpec::jacobi(Rat(-1, 2), Rat(-1, 2), 1);
    BiorthSystem sys = factor_biorth(spec, 2, 3);
    CHECK(sys.pi_power == 1);  // each h_n carries one factor of pi
    CHECK(sys.h[0].constant_term() == Rat(1));      // pi stripped: M_0/pi = 1
    CHECK(sys.h[1].constant_term() == Rat(1, 2));   // (M_0 M_2 - M_1^2)/(pi M_0) = 1/2
}

TEST_CASE("x_1 against the determinant path") {
    WeightSpec spec = WeightSpec::circle(3, 3);
    TablePtr tab = tau_table(spec);
    int D = 4;
    BiorthSystem sys = factor_biorth(spec, 3, D, tab);
    TimeFamily ftm = t_family(tab, -1);
    Series rhs = schur_p_partials(1, sys.tau[1], ftm) / sys.tau[1];
    CHECK(sys.x[1] == rhs.truncated(sys.x[1].order() - 1));
}

TEST_CASE("structure identities on the circle model") {
    WeightSpec spec = WeightSpec::circle(3, 3);
    BiorthSystem sys = factor_biorth(spec, 7, 6);
    LatticeMatrices mats = lattice_matrices(sys);
    require_all(structure_report(sys, mats), 50);
}

TEST_CASE("flow identities on the circle model") {
    WeightSpec spec = WeightSpec::circle(2, 2);
    BiorthSystem sys = factor_biorth(spec, 7, 6);
    LatticeMatrices mats = lattice_matrices(sys);
    require_all(flow_report(sys, mats), 30);
}

TEST_CASE("toda chain on the orthogonal integrals") {
    for (int sign : {+1, -1}) {
        auto cases = toda_chain_report(sign, sign > 0 ? 2 : 3, 6, 5);
        for (const auto& c : cases) {
            INFO("sign ", sign, " ell ", c.ell, " ", c.detail);
            // the same-parity chain holds with the stated constants
            CHECK(c.parity_pass);
            // the chain as printed interleaves the two families and fails,
            // which is reported verbatim
            CHECK(!c.printed_pass);
            CHECK(!c.detail.empty());
        }
    }
}

TEST_CASE("discrete sinh-gordon") {
    require_all(sinh_gordon_report(2, 5), 2);
}
