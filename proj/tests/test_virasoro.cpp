#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ttlab/virasoro.hpp"

using namespace ttlab;

namespace {

Mono mono(const TablePtr& tab, std::initializer_list<std::pair<const char*, int>> entries) {
    Mono m(tab->size(), 0);
    for (const auto& [name, e] : entries) m[tab->find(name)] = static_cast<uint16_t>(e);
    return m;
}

}  // namespace

TEST_CASE("heisenberg generators") {
    TablePtr tab = make_t_table(4);
    TimeFamily ft = t_family(tab);
    // J1(k > 0) is the bare partial
    DiffOp j1 = op_J1(tab, ft, 2, Rat(2));
    CHECK(j1 == DiffOp::partial(tab, tab->find("t2")));
    // J1(-k) multiplies by (k/beta) t_k
    DiffOp j1m = op_J1(tab, ft, -3, Rat(2));
    CHECK(j1m == DiffOp::mult(tab, tab->find("t3"), 1, Rat(3, 2)));
    // [J1(k), J1(-k)] = k/beta
    DiffOp c = op_J1(tab, ft, 3, Rat(2)).commutator(op_J1(tab, ft, -3, Rat(2)));
    CHECK(c == DiffOp::constant(tab, Rat(3, 2)));
}

TEST_CASE("diffop composition and application") {
    TablePtr tab = make_t_table(2);
    int D = 6;
    Series t1 = Series::variable(tab, D, tab->find("t1"));
    // d/dt1 applied to t1^2 is 2 t1
    DiffOp d1 = DiffOp::partial(tab, tab->find("t1"));
    CHECK(d1.apply(t1 * t1) == (t1 * Rat(2)).truncated(5));
    // [d/dt1, t1] = 1
    DiffOp m1 = DiffOp::mult(tab, tab->find("t1"), 1);
    CHECK(d1.commutator(m1) == DiffOp::constant(tab, Rat(1)));
    // linearity and the Leibniz product structure on random input
    std::mt19937 rng(5);
    Series f = random_series(tab, D, rng);
    Series g = random_series(tab, D, rng);
    DiffOp op = op_J2(tab, t_family(tab), 1, Rat(2));
    CHECK(op.apply(f + g) == op.apply(f) + op.apply(g));
    // first-order generators act as derivations
    DiffOp der = op_J1(tab, t_family(tab), 1, Rat(2));
    Series lhs = der.apply(f * g);
    Series rhs = der.apply(f) * g + f * der.apply(g);
    CHECK(lhs == rhs.truncated(lhs.order()));
}

TEST_CASE("euler operator kernel") {
    // V_0 = sum i t_i d_i - i s_i d_i kills any function of the products t_i s_i
    int D = 6;
    WeightSpec spec = WeightSpec::circle(2, 2);
    TablePtr tab = tau_table(spec);
    DiffOp v0 = toeplitz_constraint_op(tab, 0, Rat(1, 2), 3);
    Series u = Series::variable(tab, D, tab->find("t1")) *
                   Series::variable(tab, D, tab->find("s1")) +
               Series::variable(tab, D, tab->find("t2")) *
                   Series::variable(tab, D, tab->find("s2")) * Rat(5);
    Series f = u.exp();
    CHECK(v0.apply(f).is_zero());
}

TEST_CASE("toeplitz operators match their displayed form") {
    WeightSpec spec = WeightSpec::circle(3, 3);
    TablePtr tab = tau_table(spec);
    int n = 2;
    // V_{-1} = sum (i+1) t_{i+1} d_{t_i} - sum (i-1) s_{i-1} d_{s_i} + n (t_1 + d_{s_1})
    DiffOp vm1 = toeplitz_constraint_op(tab, -1, Rat(0), n);
    DiffOp expect(tab);
    for (int i = 1; i + 1 <= 3; ++i) {
        Mono mult(tab->size(), 0), ders(tab->size(), 0);
        mult[tab->find("t" + std::to_string(i + 1))] = 1;
        ders[tab->find("t" + std::to_string(i))] = 1;
        expect.add_term(Rat(i + 1), mult, ders);
    }
    for (int i = 2; i <= 3; ++i) {
        Mono mult(tab->size(), 0), ders(tab->size(), 0);
        mult[tab->find("s" + std::to_string(i - 1))] = 1;
        ders[tab->find("s" + std::to_string(i))] = 1;
        expect.add_term(Rat(-(i - 1)), mult, ders);
    }
    expect += DiffOp::mult(tab, tab->find("t1"), 1, Rat(n));
    expect += DiffOp::partial(tab, tab->find("s1"), Rat(n));
    CHECK(vm1 == expect);

    // V_0 = sum_i i (t_i d_{t_i} - s_i d_{s_i})
    DiffOp v0 = toeplitz_constraint_op(tab, 0, Rat(1), n);
    DiffOp expect0(tab);
    for (int i = 1; i <= 3; ++i) {
        Mono mult(tab->size(), 0), ders(tab->size(), 0);
        mult[tab->find("t" + std::to_string(i))] = 1;
        ders[tab->find("t" + std::to_string(i))] = 1;
        expect0.add_term(Rat(i), mult, ders);
        Mono mult2(tab->size(), 0), ders2(tab->size(), 0);
        mult2[tab->find("s" + std::to_string(i))] = 1;
        ders2[tab->find("s" + std::to_string(i))] = 1;
        expect0.add_term(Rat(-i), mult2, ders2);
    }
    CHECK(v0 == expect0);

    CHECK_THROWS_AS(toeplitz_constraint_op(tab, 2, Rat(0), n), std::invalid_argument);
    CHECK_THROWS_AS(toeplitz_constraint_op(tab, 1, Rat(0), n), std::invalid_argument);
}

TEST_CASE("hankel constraints annihilate the jacobi tau") {
    // one spot check here; the full sweep lives in the suite report
    Series r = hankel_constraint_residual(Rat(1, 2), Rat(-1, 2), 2, -1, 7);
    CHECK(r.order() >= 5);
    CHECK(r.truncated(5).is_zero());
    Series r0 = hankel_constraint_residual(Rat(1, 2), Rat(1, 2), 1, 0, 7);
    CHECK(r0.order() >= 5);
    CHECK(r0.truncated(5).is_zero());
}

TEST_CASE("toeplitz constraints annihilate the circle tau") {
    for (int k = -1; k <= 1; ++k) {
        Rat theta = k == -1 ? Rat(0) : (k == 1 ? Rat(1) : Rat(1, 2));
        Series r = toeplitz_constraint_residual(2, k, theta, 6);
        CHECK(r.order() >= 5);
        CHECK(r.truncated(5).is_zero());
    }
}

TEST_CASE("negative controls do not annihilate") {
    for (const auto& c : virasoro_negative_controls(5)) {
        INFO(c.check_id);
        CHECK(c.pass);
    }
}

TEST_CASE("commutation relations on probes") {
    TablePtr tab = make_t_table(8);
    std::mt19937 rng(2026);
    Series probe = random_series(tab, 8, rng, 8);
    // beta = 2, k = 1, l = -1: central term vanishes since k^3 - k = 0
    CheckResult r1 = commutator_check(1, -1, Rat(2), 1, probe);
    CHECK(r1.pass);
    // beta = 1, k = 2, l = -2: central contribution c (8-2)/12 = -1
    CheckResult r2 = commutator_check(2, -2, Rat(1), 2, probe);
    CHECK(r2.pass);
    CHECK(central_charge(Rat(1)) == Rat(-2));
    CHECK(central_charge(Rat(2)) == Rat(1));
}

TEST_CASE("full commutator sweep") {
    CheckList all = commutator_report(7, 4, 7);
    int n_fail = 0;
    for (const auto& c : all)
        if (!c.pass) ++n_fail;
    CHECK(n_fail == 0);
    CHECK(all.size() > 100);
}

TEST_CASE("pde identities") {
    for (const auto& c : pde_report(6, 5)) {
        INFO(c.check_id, " ", c.mismatch ? c.mismatch->where : "");
        CHECK(c.pass);
        CHECK(c.order_verified >= 5);
    }
}

TEST_CASE("kp applies to jacobi tau at full claimed order") {
    WeightSpec spec = WeightSpec::jacobi(Rat(-1, 2), Rat(-1, 2), 4);
    Series r = pde_residual(PdeKind::kp_t, spec, 2, 12);
    CHECK(r.order() >= 8);
    CHECK(r.truncated(8).is_zero());
}
