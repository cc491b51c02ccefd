#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ttlab/closed_forms.hpp"

using namespace ttlab;

TEST_CASE("volumes of the small orthogonal groups") {
    CHECK(selberg_volume(GroupKind::OPlus, 2) == PiRational(Rat(1), 1));   // pi
    CHECK(selberg_volume(GroupKind::OPlus, 3) == PiRational(Rat(1), 1));   // pi
    CHECK(selberg_volume(GroupKind::OMinus, 3) == PiRational(Rat(1), 1));  // pi
    CHECK(selberg_volume(GroupKind::OMinus, 2) == PiRational(Rat(1), 0));  // 1
    CHECK(selberg_volume(GroupKind::OPlus, 4) == PiRational(Rat(1), 2));   // pi^2
    CHECK(selberg_volume(GroupKind::U, 5) == PiRational(Rat(1), 0));
}

TEST_CASE("ensemble formula matches the direct moment determinant") {
    // 2x2 determinant of raw moments times 2! equals the ensemble integral
    for (auto [a, b] : std::vector<std::pair<Rat, Rat>>{{Rat(-1, 2), Rat(-1, 2)},
                                                        {Rat(1, 2), Rat(1, 2)},
                                                        {Rat(3, 2), Rat(1, 2)}}) {
        JacobiWeight w(a, b);
        auto M = jacobi_moments(w, 2);
        PiRational det = M[0] * M[2] - M[1] * M[1];
        det.value *= 2;
        CHECK(selberg_jacobi(2, a, b) == det);
    }
}

TEST_CASE("aomoto averages") {
    CHECK(aomoto(AomotoKind::y1, 2, Rat(0), Rat(1)) == Rat(-1, 4));
    CHECK(aomoto(AomotoKind::gamma_n, 3, Rat(-1), Rat(0)) == Rat(2));
    CHECK(aomoto(AomotoKind::gamma_n, 2, Rat(1), Rat(0)) == Rat(2));
    CHECK(aomoto(AomotoKind::gamma_n, 5, Rat(0), Rat(1)) == Rat(4));
    CHECK(aomoto(AomotoKind::gamma_n, 4, Rat(0), Rat(-1)) == Rat(4));
    CHECK(aomoto(AomotoKind::H_prime_zero, 1, Rat(0), Rat(1)) == Rat(-1, 2));
    CHECK_THROWS_AS(aomoto(AomotoKind::y1, 0, Rat(0), Rat(1)), std::domain_error);
}

TEST_CASE("full closed-forms report") {
    for (const auto& c : closed_forms_report()) {
        INFO(c.check_id, " ", c.mismatch ? c.mismatch->lhs + " vs " + c.mismatch->rhs : "");
        CHECK(c.pass);
    }
}
