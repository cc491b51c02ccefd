#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ttlab/tau.hpp"

using namespace ttlab;

TEST_CASE("circle tau at the sqrt locus: U(1) exponential sum") {
    TablePtr x = make_single("x");
    Series e = unitary_expectation_x(1, x, 6);
    for (int m = 0; m <= 6; ++m) {
        Rat f(factorial(m));
        CHECK(e.coeff1(m) == Rat(1) / (f * f));
    }
}

TEST_CASE("circle tau_2 at the sqrt locus has the S_3 count at x^3") {
    // #{pi in S_3 : lis <= 2} = 5 out of 6, so the x^3 coefficient is 5/36
    TablePtr x = make_single("x");
    Series e = unitary_expectation_x(2, x, 5);
    CHECK(e.coeff1(3) == Rat(5, 36));
    CHECK(e.coeff1(0) == Rat(1));
}

TEST_CASE("jacobi tau_1 normalization is the bare moment") {
    WeightSpec spec = WeightSpec::jacobi(Rat(-1, 2), Rat(-1, 2), 1);
    TauSeries t = tau(spec, 1, 4);
    CHECK(t.normalization == PiRational(Rat(1), 1));  // pi
    CHECK(t.series.constant_term() == Rat(1));
}

TEST_CASE("tau_0 is identically one") {
    WeightSpec spec = WeightSpec::circle(1, 1);
    TauSeries t = tau(spec, 0, 4);
    CHECK(t.series == Series::constant(t.series.table(), 4, Rat(1)));
}

TEST_CASE("circle tau at t=s=0 is exactly 1 for any binomial power") {
    for (int k = 0; k <= 3; ++k) {
        WeightSpec spec = WeightSpec::circle(1, 1, k);
        for (int n = 1; n <= 3; ++n) {
            TauSeries t = tau(spec, n, 3);
            CHECK(t.normalization == PiRational(Rat(1), 0));
        }
    }
}

TEST_CASE("three construction paths agree: determinant, shifted window, schur expansion") {
    const int D = 6;
    WeightSpec spec = WeightSpec::circle(D, D);
    TablePtr tab = tau_table(spec);
    int W = 3 + D;
    // identity initial data = Lebesgue circle weight
    std::vector<std::vector<Rat>> id(W, std::vector<Rat>(W, Rat(0)));
    for (int i = 0; i < W; ++i) id[i][i] = Rat(1);
    for (int n = 1; n <= 3; ++n) {
        TauSeries direct = tau(spec, n, D, tab);
        Series windowed = tau_shifted_window(id, n, tab, D);
        Series schur = tau_schur_expansion(id, n, tab, D);
        CHECK(direct.series == windowed);
        CHECK(direct.series == schur);
    }
}

TEST_CASE("schur expansion on identity collapses to the diagonal sum") {
    // tau_1 with identity initial data: sum over one-row diagrams of
    // s_lambda(t) s_lambda(-s); at order 2 this is 1 - t1 s1 + ...
    const int D = 2;
    TablePtr tab = make_ts_table(D, D);
    int W = 1 + D;
    std::vector<std::vector<Rat>> id(W, std::vector<Rat>(W, Rat(0)));
    for (int i = 0; i < W; ++i) id[i][i] = Rat(1);
    Series s = tau_schur_expansion(id, 1, tab, D);
    Mono m(tab->size(), 0);
    m[tab->find("t1")] = 1;
    m[tab->find("s1")] = 1;
    CHECK(s.constant_term() == Rat(1));
    CHECK(s.coeff(m) == Rat(-1));
}

TEST_CASE("random toeplitz window: shifted-window path matches schur expansion") {
    const int D = 4;
    TablePtr tab = make_ts_table(D, D);
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> val(-3, 3);
    int n = 2, W = n + D;
    // Toeplitz initial data so the window is constant along diagonals
    std::vector<int> diag(2 * W - 1);
    for (auto& d : diag) d = val(rng);
    std::vector<std::vector<Rat>> m0(W, std::vector<Rat>(W));
    for (int i = 0; i < W; ++i)
        for (int j = 0; j < W; ++j) m0[i][j] = Rat(diag[j - i + W - 1]);
    CHECK(tau_shifted_window(m0, n, tab, D) == tau_schur_expansion(m0, n, tab, D));
}

TEST_CASE("window too small is rejected") {
    TablePtr tab = make_ts_table(2, 2);
    std::vector<std::vector<Rat>> tiny(2, std::vector<Rat>(2, Rat(1)));
    CHECK_THROWS_AS(tau_schur_expansion(tiny, 2, tab, 4), std::invalid_argument);
}

TEST_CASE("sqrt locus cancellation holds for n <= 3") {
    // only integer powers of x survive at t1 = sqrt(x), s1 = -sqrt(x)
    TablePtr x = make_single("x");
    for (int n = 1; n <= 3; ++n) CHECK_NOTHROW(unitary_expectation_x(n, x, 4));
}

TEST_CASE("orthogonal group volumes and expectations") {
    TablePtr x = make_single("x");
    // volume of O(2)+ is pi
    ScaledSeries o2 = group_integral(GroupKind::OPlus, 2, x, 4);
    CHECK(o2.scale == PiRational(Rat(1), 1));
    // O(3)-: E = exp(x^2/2 - x^3/3! + O(x^4)) per the ell = 2 gap estimate
    Series e = group_expectation(GroupKind::OMinus, 3, x, 3);
    Series lg = e.log();
    CHECK(lg.coeff1(1) == Rat(0));
    CHECK(lg.coeff1(2) == Rat(1, 2));
    CHECK(lg.coeff1(3) == Rat(-1, 6));
    // O(2)- consists of reflections: trace is 0, expectation is constant
    Series e2 = group_expectation(GroupKind::OMinus, 2, x, 4);
    CHECK(e2 == Series::constant(x, 4, Rat(1)));
    // Sp(n) identifies with O(2n+2)-
    CHECK(group_expectation(GroupKind::Sp, 1, x, 4) ==
          group_expectation(GroupKind::OMinus, 4, x, 4));
}

TEST_CASE("words expectation at k=2, ell=1") {
    // brute force: words over 2 letters with weak lis <= 1 are "", "1", "2", "21"
    TablePtr x = make_single("x");
    Series plus = words_expectation(1, 2, +1, x, 3);
    CHECK(plus.coeff1(0) == Rat(1));
    CHECK(plus.coeff1(1) == Rat(2));
    CHECK(plus.coeff1(2) == Rat(1, 2));
    CHECK(plus.coeff1(3) == Rat(0));
    // the opposite exponential sign flips odd coefficients
    Series minus = words_expectation(1, 2, -1, x, 3);
    CHECK(minus.coeff1(1) == Rat(-2));
}
