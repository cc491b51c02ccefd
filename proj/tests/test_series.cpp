#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ttlab/pi_rational.hpp"
#include "ttlab/series.hpp"

using namespace ttlab;

namespace {

Series var(const TablePtr& tab, int D, const std::string& name) {
    return Series::variable(tab, D, tab->find(name));
}

}  // namespace

TEST_CASE("difference of squares") {
    TablePtr tab = make_t_table(2);
    int D = 4;
    Series one = Series::constant(tab, D, Rat(1));
    Series t1 = var(tab, D, "t1");
    Series lhs = (one + t1) * (one - t1);
    Series rhs = one - t1 * t1;
    CHECK(lhs == rhs);
}

TEST_CASE("geometric series via division") {
    TablePtr tab = make_t_table(1);
    int D = 7;
    Series one = Series::constant(tab, D, Rat(1));
    Series t1 = var(tab, D, "t1");
    Series inv = one / (one - t1);
    Series expect(tab, D);
    for (int k = 0; k <= D; ++k) {
        Mono m(1, static_cast<uint16_t>(k));
        expect.set_coeff(m, Rat(1));
    }
    CHECK(inv == expect);
    CHECK((inv * (one - t1)) == one);
}

TEST_CASE("division preconditions") {
    TablePtr tab = make_t_table(1);
    Series t1 = var(tab, 4, "t1");
    Series one = Series::constant(tab, 4, Rat(1));
    CHECK_THROWS_AS(one / t1, std::domain_error);
}

TEST_CASE("ring laws on random series") {
    TablePtr tab = make_t_table(3);
    std::mt19937 rng(20260809);
    for (int trial = 0; trial < 40; ++trial) {
        int D = 8;
        Series a = random_series(tab, D, rng);
        Series b = random_series(tab, D, rng);
        Series c = random_series(tab, D, rng);
        CHECK((a + b) == (b + a));
        CHECK((a * b) == (b * a));
        CHECK(((a + b) + c) == (a + (b + c)));
        CHECK(((a * b) * c) == (a * (b * c)));
        CHECK((a * (b + c)) == (a * b + a * c));
    }
}

TEST_CASE("truncation discipline") {
    TablePtr tab = make_t_table(1);
    Series a = Series::constant(tab, 6, Rat(1)) + var(tab, 6, "t1");
    Series b = Series::constant(tab, 3, Rat(1)) + var(tab, 3, "t1");
    CHECK((a * b).order() == 3);
    CHECK((a + b).order() == 3);
}

TEST_CASE("exp and log") {
    TablePtr tab = make_t_table(2);
    int D = 8;
    Series t1 = var(tab, D, "t1");
    Series t2 = var(tab, D, "t2");

    Series e = t1.exp();
    Rat acc(1);
    for (int k = 0; k <= D; ++k) {
        Mono m(2, 0);
        m[0] = static_cast<uint16_t>(k);
        CHECK(e.coeff(m) == Rat(1) / Rat(factorial(k)));
    }
    (void)acc;

    Series f = (t1 + t2).exp();
    CHECK(f.log() == (t1 + t2));

    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        Series u = random_series(tab, 6, rng, 5, true);  // unit constant term
        CHECK(u.log().exp() == u);
    }

    CHECK_THROWS_AS((Series::constant(tab, 4, Rat(2))).exp(), std::domain_error);
    CHECK_THROWS_AS((Series::constant(tab, 4, Rat(2))).log(), std::domain_error);
}

TEST_CASE("mixed partials commute, integrate inverts") {
    TablePtr tab = make_t_table(3);
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        Series f = random_series(tab, 8, rng);
        CHECK(f.partial(0).partial(1) == f.partial(1).partial(0));
        // d/dt1 of the t1-antiderivative gives f back (up to truncation)
        CHECK(f.integrate(0).partial(0).truncated(7) == f.truncated(7));
    }
}

TEST_CASE("product rule for exp of weighted product, by hand to weight 6") {
    // d/dt1 exp(t1 t2) = t2 exp(t1 t2); expand both sides independently
    TablePtr tab = make_t_table(2);
    int D = 6;
    Series t1 = var(tab, D, "t1");
    Series t2 = var(tab, D, "t2");
    Series u = t1 * t2;  // weight 3 per power
    Series lhs = u.exp().partial(tab->find("t1"));
    // by hand: exp(u) = 1 + u + u^2/2, so t2 * (1 + u) at weight <= 5
    Series rhs = t2 * (Series::constant(tab, D, Rat(1)) + u);
    CHECK(lhs == rhs.truncated(lhs.order()));
}

TEST_CASE("pi rational arithmetic") {
    PiRational pi1(Rat(1), 1);
    PiRational pi2 = pi1 * pi1;
    CHECK(pi2.pi_power == 2);
    CHECK(pi2.value == Rat(1));

    PiRational half_pi(Rat(1, 2), 1);
    CHECK((pi1 + half_pi).value == Rat(3, 2));
    CHECK_THROWS_AS(pi1 + pi2, std::domain_error);

    PiRational zero(Rat(0), 0);
    CHECK((zero + pi2) == pi2);
    CHECK((pi2 / pi1) == pi1);
    CHECK(PiRational(Rat(2, 4), 0).value == Rat(1, 2));  // canonical form
}

TEST_CASE("substitution and even decimation") {
    TablePtr ts = make_ts_table(1, 1);
    int D = 6;
    Series t1 = var(ts, D, "t1");
    Series s1 = var(ts, D, "s1");
    Series f = Series::constant(ts, D, Rat(1)) - t1 * s1;  // even in q after t1 -> q, s1 -> -q
    TablePtr q = make_single("q");
    std::map<int, Series> repl;
    repl[ts->find("t1")] = Series::variable(q, D, 0);
    repl[ts->find("s1")] = -Series::variable(q, D, 0);
    Series g = f.substituted(q, D, repl);
    Series x = g.even_decimated(make_single("x"));
    CHECK(x.coeff1(0) == Rat(1));
    CHECK(x.coeff1(1) == Rat(1));  // -t1 s1 -> +q^2 -> x
}
