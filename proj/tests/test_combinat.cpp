#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ttlab/combinat.hpp"
#include "ttlab/tau.hpp"

using namespace ttlab;

TEST_CASE("longest increasing subsequence") {
    CHECK(lis_strict({3, 1, 2}) == 2);
    CHECK(lis_strict({1, 2, 3, 4, 5}) == 5);
    CHECK(lis_strict({5, 4, 3, 2, 1}) == 1);
    CHECK(lis_weak({2, 1}) == 1);
    CHECK(lis_weak({1, 1}) == 2);  // weakly increasing
    CHECK(lis_weak({2, 1, 1, 2}) == 3);
}

TEST_CASE("count examples") {
    // fixed-point free involutions of S_4 with no bound: (2n)!/(2^n n!) = 3
    CHECK(count_class({ClassId::fp_free_involution, 4, 4, 0}) == 3);
    // Catalan number C_4 = 14 counts S_4 with lis <= 2
    CHECK(count_class({ClassId::perm, 4, 2, 0}) == 14);
    // only "21" among the 4 words of length 2 over 2 letters has weak lis <= 1
    CHECK(count_class({ClassId::word, 2, 1, 2}) == 1);
}

TEST_CASE("marginals at the trivial bound") {
    for (int n = 0; n <= 6; ++n) {
        CHECK(count_class({ClassId::perm, n, n, 0}) == factorial(n).get_si());
        CHECK(count_class({ClassId::word, n, n, 2}) == (1LL << n));
    }
    // words with lis bound >= n are unconstrained
    for (int n = 0; n <= 4; ++n)
        for (int k = 2; k <= 3; ++k)
            CHECK(count_class({ClassId::word, n, n, k}) ==
                  static_cast<long long>(std::llround(std::pow(k, n))));
}

TEST_CASE("words are unconstrained below the bound") {
    // every word of length n <= ell has weak lis <= ell
    for (int k : {2, 3})
        for (int ell = 1; ell <= 4; ++ell)
            for (int n = 0; n <= ell; ++n)
                CHECK(count_class({ClassId::word, n, ell, k}) ==
                      static_cast<long long>(std::llround(std::pow(k, n))));
}

TEST_CASE("monotone in the bound") {
    for (int ell = 1; ell < 5; ++ell)
        CHECK(count_class({ClassId::perm, 5, ell, 0}) <= count_class({ClassId::perm, 5, ell + 1, 0}));
}

TEST_CASE("generating functions of the unbounded counts") {
    // sum x^{2m}/(2m)! fp_free(2m) = e^{x^2/2}; involutions give e^{x^2/2 + x}
    TablePtr x = make_single("x");
    int D = 8;
    Series fp(x, D), inv(x, D);
    for (int m = 0; 2 * m <= D; ++m) {
        Series t(x, D);
        Mono mm(1, static_cast<uint16_t>(2 * m));
        t.set_coeff(mm, to_rat(count_class({ClassId::fp_free_involution, 2 * m, 2 * m, 0})) /
                            Rat(factorial(2 * m)));
        fp += t;
    }
    for (int m = 0; m <= D; ++m) {
        Series t(x, D);
        Mono mm(1, static_cast<uint16_t>(m));
        t.set_coeff(mm, to_rat(count_class({ClassId::involution, m, m, 0})) / Rat(factorial(m)));
        inv += t;
    }
    Series xv = Series::variable(x, D, 0);
    CHECK(fp == (xv * xv * Rat(1, 2)).exp());
    CHECK(inv == (xv * xv * Rat(1, 2) + xv).exp());
}

TEST_CASE("budget guards") {
    CHECK_THROWS_AS(count_class({ClassId::perm, 10, 3, 0}), std::runtime_error);
    CHECK_THROWS_AS(count_class({ClassId::word, 25, 3, 3}), std::runtime_error);
}

TEST_CASE("small paired-involution classes by hand") {
    // S_4, iota = (4321): involutions commuting with iota, fixed-point free,
    // pi(y) != iota(y): candidates are products of two 2-cycles; direct
    // inspection leaves (12)(34) and (13)(24)... (14)(23) pairs y with iota(y).
    CHECK(count_class({ClassId::fp_free_iota_involution, 4, 4, 0}) == 2);
    // (pi iota)^2 = 1 with pi(y) != iota(y) on S_2: pi = rho iota, rho the
    // unique fp-free involution of S_2, so pi = id.
    CHECK(count_class({ClassId::iota_matching_nofix, 2, 2, 0}) == 1);
    // iota-commuting permutations of S_4: 2^2 * 2! = 8
    CHECK(count_class({ClassId::iota_commuting, 4, 4, 0}) == 8);
}

TEST_CASE("identity 1 (gessel) at small order") {
    for (int ell = 1; ell <= 3; ++ell) {
        IdentityReport rep = identity_check(1, ell, 8);
        CHECK(rep.pass);
    }
}

TEST_CASE("identity 3 at ell = 2") {
    IdentityReport rep = identity_check(3, 2, 8);
    CHECK(rep.pass);
}

TEST_CASE("identity 9 words matches the positive exponential sign") {
    IdentityReport rep = identity_check(9, 1, 6, 2);
    CHECK(rep.pass);
    CHECK(rep.note == "matches e^{+x tr Mbar}");
}

TEST_CASE("gap checks") {
    GapReport o = gap_check_orth(-1, 3, 5);  // O(4)-: x^2/2 - x^4/4!
    CHECK(o.pass);
    GapReport u = gap_check_unitary(2, 4);  // x - x^3/36
    CHECK(u.pass);
    GapReport w = gap_check_words(1, 1, 3);  // x - x^2/2
    CHECK(w.pass);
}
