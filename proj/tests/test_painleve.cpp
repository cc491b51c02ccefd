#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ttlab/painleve.hpp"

using namespace ttlab;

TEST_CASE("orthogonal series leading terms") {
    // f = x^2 +- x^{l+1}/l! with nothing in between
    Series f2m = f_orth(2, -1, 6);
    CHECK(f2m.coeff1(2) == Rat(1));
    CHECK(f2m.coeff1(3) == Rat(-1, 2));
    Series f4p = f_orth(4, +1, 7);
    CHECK(f4p.coeff1(3) == Rat(0));
    CHECK(f4p.coeff1(4) == Rat(0));
    CHECK(f4p.coeff1(5) == Rat(1, 24));
}

TEST_CASE("recursion forces the gap") {
    // 3(4 - l^2) a_3 = 0 makes a_3 = 0 for l = 3, and inductively up to a_l
    auto a3 = f_recursive_coeffs(3, +1, 8);
    CHECK(a3[3] == Rat(0));
    CHECK(a3[4] == Rat(1, 6));
    auto a4 = f_recursive_coeffs(4, +1, 9);
    CHECK(a4[3] == Rat(0));
    CHECK(a4[4] == Rat(0));
    CHECK(a4[5] == Rat(1, 24));
    CHECK_THROWS_AS(f_recursive_coeffs(2, +1, 6), std::invalid_argument);
}

TEST_CASE("unitary series") {
    Series g2 = g_unitary(2, 5);
    CHECK(g2.coeff1(0) == Rat(1));
    CHECK(g2.coeff1(1) == Rat(0));
    CHECK(g2.coeff1(2) == Rat(-1, 4));
    Series g1 = g_unitary(1, 4);
    CHECK(g1.coeff1(0) == Rat(1));  // g(0+) -> 1
}

TEST_CASE("words series leading terms") {
    Series h = h_words(1, 2, 5);
    CHECK(h.coeff1(1) == Rat(1, 3));
    CHECK(h.coeff1(2) == Rat(-1, 2) * Rat(binomial(2, 1)));  // -x^2/2! * C(2,1)
}

TEST_CASE("trivial fixed point of the unitary equation") {
    TablePtr t = make_single("x");
    Series one = Series::constant(t, 8, Rat(1));
    OdeSpec spec;
    spec.kind = OdeSpec::Kind::unitary2;
    spec.ell = 1;
    CHECK(ode_residual(spec, one).is_zero());
}

TEST_CASE("jacobi equation and initial data") {
    // H = x d/dx log tau_n(x), H(0)=0, H'(0) = -n b/(a+2n)
    Rat alpha(1, 2), beta(-1, 2);
    int n = 1;
    Series H = H_jacobi(n, alpha, beta, Rat(1), Rat(0), 12);
    Rat a = alpha + beta, b = alpha - beta;
    CHECK(H.coeff1(0) == Rat(0));
    CHECK(H.coeff1(1) == -Rat(n) * b / (a + 2 * n));  // -1/2 here
    OdeSpec spec;
    spec.kind = OdeSpec::Kind::jacobi3;
    spec.n = n;
    spec.a = a;
    spec.b = b;
    CHECK(ode_residual(spec, H).truncated(8).is_zero());
}

TEST_CASE("tilde variant of the jacobi equation") {
    // H~ = x d/dx log e^{-cx} tau_n(2x) with the even-minus parameters
    int n = 1;
    Rat a(0), b(-1), c(1);
    Series H = H_jacobi(n, Rat(-1, 2), Rat(1, 2), Rat(2), c, 12);
    OdeSpec spec;
    spec.kind = OdeSpec::Kind::jacobi3_tilde;
    spec.n = n;
    spec.a = a;
    spec.b = b;
    spec.c = c;
    CHECK(ode_residual(spec, H).truncated(8).is_zero());
    CHECK(H.coeff1(1) == -(2 * Rat(n) * (b + c) + a * c) / (a + 2 * Rat(n)));
}

TEST_CASE("orthogonal family satisfies its equation and first integral") {
    for (int ell : {2, 3}) {
        for (int sign : {+1, -1}) {
            Series f = f_orth(ell, sign, 12);
            OdeSpec spec;
            spec.kind = OdeSpec::Kind::orth3;
            spec.ell = ell;
            CHECK(ode_residual(spec, f).truncated(8).is_zero());
            OdeSpec ci;
            ci.kind = OdeSpec::Kind::cosgrove_integral;
            ci.ell = ell;
            ci.c = Rat(0);
            CHECK(ode_residual(ci, f).truncated(8).is_zero());
        }
    }
}

TEST_CASE("canonical pv parameters at ell = 3") {
    PvParams p = orth_pv_params(3);
    CHECK(p.alpha == Rat(2));
    CHECK(p.beta == Rat(-2));
    CHECK(p.gamma == Rat(0));
    CHECK(p.delta == Rat(-8));
}

TEST_CASE("full orth report") {
    for (const auto& c : painleve_orth_report(10)) {
        INFO(c.check_id, " ", c.mismatch ? c.mismatch->where + " " + c.mismatch->lhs : "");
        CHECK(c.pass);
    }
}

TEST_CASE("full unitary report") {
    for (const auto& c : painleve_unitary_report(10)) {
        INFO(c.check_id);
        CHECK(c.pass);
    }
}

TEST_CASE("full words report") {
    for (const auto& c : painleve_words_report(8)) {
        INFO(c.check_id, " ", c.note);
        CHECK(c.pass);
    }
}

TEST_CASE("numeric crosscheck at ell = 2, coarse grid") {
    // the full-resolution run lives in the acceptance suite; this coarse grid
    // keeps the unit test fast
    CrosscheckResult r = numeric_crosscheck(2, 0.01, 0.5, 1e-3);
    CHECK(r.max_deviation <= 1e-6);
    CHECK(r.halving_change <= 1e-6);
    // degenerate interval
    CrosscheckResult r0 = numeric_crosscheck(2, 0.01, 0.01, 1e-3);
    CHECK(r0.max_deviation <= 1e-9);
}
