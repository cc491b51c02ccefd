#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ttlab/schur.hpp"

using namespace ttlab;

namespace {

Mono mono(const TablePtr& tab, std::initializer_list<std::pair<const char*, int>> entries) {
    Mono m(tab->size(), 0);
    for (const auto& [name, e] : entries) m[tab->find(name)] = static_cast<uint16_t>(e);
    return m;
}

}  // namespace

TEST_CASE("elementary schur polynomials") {
    TablePtr tab = make_t_table(4);
    int D = 6;
    TimeFamily ft = t_family(tab);

    Series p1 = schur_p(tab, D, 1, ft);
    CHECK(p1.coeff(mono(tab, {{"t1", 1}})) == Rat(1));

    Series p2 = schur_p(tab, D, 2, ft);
    CHECK(p2.coeff(mono(tab, {{"t1", 2}})) == Rat(1, 2));
    CHECK(p2.coeff(mono(tab, {{"t2", 1}})) == Rat(1));

    // p_3(-t) = -t1^3/6 + t1 t2 - t3
    TimeFamily fmt = t_family(tab, -1);
    Series p3m = schur_p(tab, D, 3, fmt);
    CHECK(p3m.coeff(mono(tab, {{"t1", 3}})) == Rat(-1, 6));
    CHECK(p3m.coeff(mono(tab, {{"t1", 1}, {"t2", 1}})) == Rat(1));
    CHECK(p3m.coeff(mono(tab, {{"t3", 1}})) == Rat(-1));

    CHECK(schur_p(tab, D, -2, ft).is_zero());
}

TEST_CASE("schur generating identity with z as an extra weight-1 variable") {
    // sum_k p_k(t) z^k = exp(sum t_i z^i), checked to combined weight D with
    // z adjoined as its own variable of weight 1
    int kmax = 3, D = 6;
    std::vector<std::string> names = {"t1", "t2", "t3", "z"};
    std::vector<int> weights = {1, 2, 3, 1};
    TablePtr tab = std::make_shared<VariableTable>(names, weights);
    int zv = tab->find("z");
    Series z = Series::variable(tab, D, zv);
    Series arg(tab, D);
    Series zp = Series::constant(tab, D, Rat(1));
    for (int i = 1; i <= kmax; ++i) {
        zp *= z;
        arg += Series::variable(tab, D, tab->find("t" + std::to_string(i))) * zp;
    }
    Series lhs = arg.exp();
    TimeFamily ft = t_family(tab);
    Series rhs(tab, D);
    Series zk = Series::constant(tab, D, Rat(1));
    for (int k = 0; k <= D; ++k) {
        rhs += schur_p(tab, D, k, ft) * zk;
        zk *= z;
    }
    CHECK(lhs == rhs);
}

TEST_CASE("weight homogeneity and recurrence") {
    TablePtr tab = make_t_table(5);
    int D = 8;
    TimeFamily ft = t_family(tab);
    auto plist = schur_p_list(tab, D, 5, ft);
    for (int k = 1; k <= 5; ++k) {
        for (const auto& [m, c] : plist[k].terms()) {
            int w = 0;
            for (int v = 0; v < tab->size(); ++v) w += m[v] * tab->weight(v);
            CHECK(w == k);
        }
        // k p_k = sum i t_i p_{k-i}
        Series acc(tab, D);
        for (int i = 1; i <= k; ++i)
            acc += Series::variable(tab, D, tab->find("t" + std::to_string(i)), Rat(i)) *
                   plist[k - i];
        CHECK(acc == plist[k] * Rat(k));
    }
}

TEST_CASE("jacobi-trudi schur functions") {
    TablePtr tab = make_t_table(4);
    int D = 6;
    TimeFamily ft = t_family(tab);

    Series s1 = schur_s(tab, D, {1}, ft);
    CHECK(s1.coeff(mono(tab, {{"t1", 1}})) == Rat(1));

    Series s11 = schur_s(tab, D, {1, 1}, ft);
    CHECK(s11.coeff(mono(tab, {{"t1", 2}})) == Rat(1, 2));
    CHECK(s11.coeff(mono(tab, {{"t2", 1}})) == Rat(-1));

    Series s2 = schur_s(tab, D, {2}, ft);
    CHECK(s2 == schur_p(tab, D, 2, ft));

    CHECK_THROWS_AS(schur_s(tab, D, {1, 2}, ft), std::invalid_argument);
}

TEST_CASE("hirota low orders") {
    TablePtr tab = make_ts_table(3, 1);
    int D = 7;
    TimeFamily ft = t_family(tab);
    std::mt19937 rng(101);
    Series f = random_series(tab, D, rng);
    Series g = random_series(tab, D, rng);

    CHECK(hirota(0, f, g, ft) == f * g);

    // p_1(d~) f.g = g df/dt1 - f dg/dt1
    int t1 = tab->find("t1");
    Series h1 = hirota(1, f, g, ft);
    Series expect = (g * f.partial(t1) - f * g.partial(t1)).truncated(h1.order());
    CHECK(h1 == expect);
}

TEST_CASE("hirota against an independent doubled-variable expansion") {
    // p_j(d~_y) f(t+y) g(t-y) at y = 0, with y adjoined as fresh variables
    TablePtr tab = make_t_table(2);
    int D = 6;
    std::mt19937 rng(55);
    Series f = random_series(tab, D, rng);
    Series g = random_series(tab, D, rng);

    std::vector<std::string> names = {"t1", "t2", "y1", "y2"};
    std::vector<int> weights = {1, 2, 1, 2};
    TablePtr big = std::make_shared<VariableTable>(names, weights);
    auto lift = [&](const Series& h, int ysign) {
        std::map<int, Series> repl;
        repl[tab->find("t1")] = Series::variable(big, D, big->find("t1")) +
                                Series::variable(big, D, big->find("y1")) * Rat(ysign);
        repl[tab->find("t2")] = Series::variable(big, D, big->find("t2")) +
                                Series::variable(big, D, big->find("y2")) * Rat(ysign);
        return h.substituted(big, D, repl);
    };
    Series doubled = lift(f, +1) * lift(g, -1);

    for (int j = 2; j <= 3; ++j) {
        // independent oracle: apply p_j of the scaled y-partials, then set y=0
        TimeFamily fy;
        fy.sign = 1;
        fy.var_of_degree = {-1, big->find("y1"), big->find("y2")};
        for (int d = 3; d <= j; ++d) fy.var_of_degree.push_back(-1);
        Series applied = schur_p_partials(j, doubled, fy);
        std::map<int, Series> at0;
        at0[big->find("t1")] = Series::variable(tab, D, tab->find("t1"));
        at0[big->find("t2")] = Series::variable(tab, D, tab->find("t2"));
        Series oracle = applied.substituted(tab, applied.order(), at0);

        Series h = hirota(j, f, g, t_family(tab));
        CHECK(h == oracle.truncated(h.order()));
    }
}

TEST_CASE("hirota swap duality from y -> -y") {
    // swapping the arguments is the same as flipping every scaled partial,
    // i.e. flipping the direction prefix; for j <= 1 this is the plain sign
    // (-1)^j, and on equal arguments every odd-order term cancels
    TablePtr tab = make_t_table(3);
    std::mt19937 rng(77);
    TimeFamily plus = t_family(tab, +1);
    TimeFamily minus = t_family(tab, -1);
    for (int trial = 0; trial < 6; ++trial) {
        Series f = random_series(tab, 7, rng);
        Series g = random_series(tab, 7, rng);
        for (int j = 0; j <= 3; ++j) CHECK(hirota(j, g, f, plus) == hirota(j, f, g, minus));
        CHECK(hirota(1, g, f, plus) == -hirota(1, f, g, plus));
        // p_1(d~) f o f = 0
        CHECK(hirota(1, f, f, plus).is_zero());
    }
}
