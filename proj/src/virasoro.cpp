#include "ttlab/virasoro.hpp"

#include <sstream>
#include <stdexcept>

namespace ttlab {

namespace {

int family_reach(const TimeFamily& fam) { return fam.max_degree(); }

void add_single(DiffOp& op, const TablePtr& table, const TimeFamily& fam, int var_degree,
                bool is_partial, const Rat& c) {
    int v = fam.var(var_degree);
    if (v < 0) return;  // variable frozen at zero
    Mono mult(table->size(), 0), ders(table->size(), 0);
    (is_partial ? ders : mult)[v] = 1;
    op.add_term(c * Rat(fam.sign), std::move(mult), std::move(ders));
}

}  // namespace

DiffOp op_J1(const TablePtr& table, const TimeFamily& fam, int k, const Rat& beta) {
    DiffOp op(table);
    if (k > 0)
        add_single(op, table, fam, k, true, Rat(1));
    else if (k < 0)
        add_single(op, table, fam, -k, false, Rat(-k) / beta);
    return op;
}

DiffOp op_J2(const TablePtr& table, const TimeFamily& fam, int k, const Rat& beta) {
    DiffOp op(table);
    const int reach = family_reach(fam);
    // second partials, i + j = k
    for (int i = 1; i < k; ++i) {
        int j = k - i;
        int vi = fam.var(i), vj = fam.var(j);
        if (vi < 0 || vj < 0) continue;
        Mono mult(table->size(), 0), ders(table->size(), 0);
        ders[vi] += 1;
        ders[vj] += 1;
        op.add_term(Rat(1), std::move(mult), std::move(ders));  // sign^2 = 1
    }
    // mixed terms i t_i d_{i+k}
    for (int i = 1; i <= reach; ++i) {
        int j = i + k;
        if (j < 1 || j > reach) continue;
        int vi = fam.var(i), vj = fam.var(j);
        if (vi < 0 || vj < 0) continue;
        Mono mult(table->size(), 0), ders(table->size(), 0);
        mult[vi] = 1;
        ders[vj] = 1;
        op.add_term(Rat(2) / beta * Rat(i), std::move(mult), std::move(ders));
    }
    // multiplication terms, i + j = -k
    for (int i = 1; i < -k; ++i) {
        int j = -k - i;
        int vi = fam.var(i), vj = fam.var(j);
        if (vi < 0 || vj < 0) continue;
        Mono mult(table->size(), 0), ders(table->size(), 0);
        mult[vi] += 1;
        mult[vj] += 1;
        op.add_term(Rat(i) * Rat(j) / (beta * beta), std::move(mult), std::move(ders));
    }
    op.normalize();
    return op;
}

DiffOp op_JJ1(const TablePtr& table, const TimeFamily& fam, int k, int n, const Rat& beta) {
    DiffOp op = op_J1(table, fam, k, beta);
    if (k == 0 && n != 0) op += DiffOp::constant(table, Rat(n));
    return op;
}

DiffOp op_JJ2(const TablePtr& table, const TimeFamily& fam, int k, int n, const Rat& beta) {
    DiffOp op = op_J2(table, fam, k, beta) * (beta / 2);
    Rat lin = Rat(n) * beta + Rat(k + 1) * (Rat(1) - beta / 2);
    if (lin != 0) op += op_J1(table, fam, k, beta) * lin;
    if (k == 0) {
        Rat c = Rat(n) * (Rat(n - 1) * beta + 2) / 2;
        if (c != 0) op += DiffOp::constant(table, c);
    }
    op.normalize();
    return op;
}

DiffOp hankel_constraint_op(const TablePtr& table, int m, int n, const std::vector<Rat>& a,
                            const std::vector<Rat>& b) {
    TimeFamily ft = t_family(table);
    const Rat beta(2);
    DiffOp op(table);
    for (int k = 0; k < static_cast<int>(a.size()); ++k) {
        if (a[k] == 0) continue;
        op += op_J2(table, ft, k + m, beta) * (-a[k]);
        op += op_J1(table, ft, k + m, beta) * (Rat(-2 * n) * a[k]);
        if (k + m == 0) op += DiffOp::constant(table, Rat(-n) * Rat(n) * a[k]);
    }
    for (int k = 0; k < static_cast<int>(b.size()); ++k) {
        if (b[k] == 0) continue;
        op += op_J1(table, ft, k + m + 1, beta) * b[k];
        if (k + m + 1 == 0) op += DiffOp::constant(table, Rat(n) * b[k]);
    }
    op.normalize();
    return op;
}

DiffOp hankel_constraint_op_jacobi(const TablePtr& table, int m, int n, const Rat& alpha,
                                   const Rat& beta) {
    std::vector<Rat> a = {Rat(1), Rat(0), Rat(-1)};
    std::vector<Rat> b = {alpha - beta, alpha + beta};
    return hankel_constraint_op(table, m, n, a, b);
}

DiffOp toeplitz_constraint_op(const TablePtr& table, int k, const Rat& theta, int n,
                              bool allow_noncanonical) {
    if (!allow_noncanonical) {
        bool canonical = (k == -1 && theta == 0) || k == 0 || (k == 1 && theta == 1);
        if (!canonical)
            throw std::invalid_argument(
                "toeplitz_constraint_op: only k = -1 (theta 0), k = 0, k = 1 (theta 1) "
                "annihilate tau");
    }
    const Rat beta(1);
    TimeFamily ft = t_family(table, +1);
    TimeFamily fsm = s_family(table, -1);
    DiffOp op = op_JJ2(table, ft, k, n, beta);
    op -= op_JJ2(table, fsm, -k, n, beta);
    if (k != 0) {
        op -= op_JJ1(table, ft, k, n, beta) * (Rat(k) * theta);
        op -= op_JJ1(table, fsm, -k, n, beta) * (Rat(k) * (Rat(1) - theta));
    }
    op.normalize();
    return op;
}

Series hankel_constraint_residual(const Rat& alpha, const Rat& beta, int n, int m, int D) {
    WeightSpec spec = WeightSpec::jacobi(alpha, beta, D);
    TablePtr table = tau_table(spec);
    TauSeries t = tau(spec, n, D, table);
    DiffOp op = hankel_constraint_op_jacobi(table, m, n, alpha, beta);
    return op.apply(t.series) / t.series;
}

Series toeplitz_constraint_residual(int n, int k, const Rat& theta, int D,
                                    bool allow_noncanonical) {
    WeightSpec spec = WeightSpec::circle(D, D);
    TablePtr table = tau_table(spec);
    TauSeries t = tau(spec, n, D, table);
    DiffOp op = toeplitz_constraint_op(table, k, theta, n, allow_noncanonical);
    return op.apply(t.series) / t.series;
}

namespace {

Series kp_residual_on(const Series& tau_n, int v1, int v2, int v3) {
    Series F = tau_n.log();
    Series F11 = F.partial(v1).partial(v1);
    Series r = F11.partial(v1).partial(v1);
    r += F11 * F11 * Rat(6);
    r += F.partial(v2).partial(v2) * Rat(3);
    r -= F.partial(v1).partial(v3) * Rat(4);
    return r;
}

}  // namespace

Series pde_residual(PdeKind kind, const WeightSpec& spec, int n, int D) {
    TablePtr table = tau_table(spec);
    if (kind == PdeKind::kp_t || kind == PdeKind::kp_s) {
        const char* base = kind == PdeKind::kp_t ? "t" : "s";
        int v1 = table->find(std::string(base) + "1");
        int v2 = table->find(std::string(base) + "2");
        int v3 = table->find(std::string(base) + "3");
        if (v1 < 0 || v2 < 0 || v3 < 0)
            throw std::invalid_argument("pde_residual: need three active variables for the kp form");
        return kp_residual_on(tau(spec, n, D, table).series, v1, v2, v3);
    }
    int t1 = table->find("t1");
    int s1 = table->find("s1");
    if (t1 < 0 || s1 < 0) throw std::invalid_argument("pde_residual: need t1 and s1");
    Series tau_prev = tau(spec, n - 1, D, table).series;
    Series tau_n = tau(spec, n, D, table).series;
    if (kind == PdeKind::toda_ii) {
        Series tau_next = tau(spec, n + 1, D, table).series;
        return tau_n.log().partial(s1).partial(t1) +
               tau_prev * tau_next / (tau_n * tau_n);
    }
    if (kind == PdeKind::toda_iii) {
        int s2 = table->find("s2");
        if (s2 < 0) throw std::invalid_argument("pde_residual: need s2 for this identity");
        Series F = tau_n.log();
        Series ratio = (tau_n / tau_prev).log();
        return F.partial(s2).partial(t1) + ratio.partial(s1) * F.partial(s1).partial(t1) * Rat(2) +
               F.partial(s1).partial(s1).partial(t1);
    }
    // toeplitz_relation
    Series F = tau_n.log();
    Series ratio = (tau_n / tau_prev).log();
    Series one = Series::constant(table, D, Rat(1));
    Series B = F.partial(s1).partial(t1);
    return ratio.partial(t1) * ratio.partial(s1) +
           (one + B) * (one + B - ratio.partial(t1).partial(s1));
}

Rat central_charge(const Rat& beta) {
    if (beta == 1) return Rat(-2);
    if (beta == 2) return Rat(1);
    throw std::invalid_argument("central_charge: only beta = 1 and beta = 2 are rational here");
}

CheckResult commutator_check(int k, int l, const Rat& beta, int n, const Series& probe) {
    TablePtr table = probe.table();
    TimeFamily ft = t_family(table);
    DiffOp A = op_JJ2(table, ft, k, n, beta);
    DiffOp B = op_JJ2(table, ft, l, n, beta);
    DiffOp lhs = A.commutator(B);
    DiffOp rhs = op_JJ2(table, ft, k + l, n, beta) * Rat(k - l);
    if (k + l == 0) {
        Rat cc = central_charge(beta) * Rat((k * k * k - k)) / 12;
        if (cc != 0) rhs += DiffOp::constant(table, cc);
    }
    Series a = lhs.apply(probe);
    Series b = rhs.apply(probe);
    std::ostringstream id;
    id << "virasoro.commutator." << k << "." << l << ".beta" << beta.get_str() << ".n" << n;
    CheckResult r = CheckResult::ok(id.str(), "virasoro-commutation", std::min(a.order(), b.order()));
    auto diff = a.truncated(r.order_verified).first_difference(b.truncated(r.order_verified));
    if (diff) {
        r.pass = false;
        r.mismatch = Mismatch{a.mono_str(diff->first), diff->second.first.get_str(),
                              diff->second.second.get_str()};
    }
    r.params["k"] = std::to_string(k);
    r.params["l"] = std::to_string(l);
    r.params["beta"] = beta.get_str();
    r.params["n"] = std::to_string(n);
    return r;
}

namespace {

CheckResult residual_check(std::string id, std::string tag, const Series& resid, int order) {
    Series r = resid.truncated(std::min(order, resid.order()));
    CheckResult out = CheckResult::ok(std::move(id), std::move(tag), r.order());
    if (!r.is_zero()) {
        out.pass = false;
        auto& [m, c] = *r.terms().begin();
        out.mismatch = Mismatch{r.mono_str(m), c.get_str(), "0"};
    }
    return out;
}

}  // namespace

CheckList virasoro_hankel_report(int nmax, int order) {
    CheckList out;
    const int D = order + 4;  // the m = 2 operator removes up to weight 4
    std::vector<std::pair<Rat, Rat>> weights = {{Rat(-1, 2), Rat(-1, 2)},
                                                {Rat(1, 2), Rat(-1, 2)},
                                                {Rat(-1, 2), Rat(1, 2)},
                                                {Rat(1, 2), Rat(1, 2)}};
    for (const auto& [al, be] : weights) {
        WeightSpec spec = WeightSpec::jacobi(al, be, D);
        TablePtr table = tau_table(spec);
        for (int n = 1; n <= nmax; ++n) {
            TauSeries t = tau(spec, n, D, table);
            for (int m = -1; m <= 2; ++m) {
                DiffOp op = hankel_constraint_op_jacobi(table, m, n, al, be);
                Series resid = op.apply(t.series) / t.series;
                std::ostringstream id;
                id << "virasoro.hankel.a" << al.get_str() << ".b" << be.get_str() << ".n" << n
                   << ".m" << m;
                CheckResult r =
                    residual_check(id.str(), "hankel-virasoro-constraint", resid, order);
                r.params["alpha"] = al.get_str();
                r.params["beta"] = be.get_str();
                r.params["n"] = std::to_string(n);
                r.params["m"] = std::to_string(m);
                out.push_back(std::move(r));
            }
        }
    }
    return out;
}

CheckList virasoro_toeplitz_report(int nmax, int order) {
    CheckList out;
    const int D = order + 2;
    WeightSpec spec = WeightSpec::circle(D, D);
    TablePtr table = tau_table(spec);
    std::vector<Rat> thetas = {Rat(0), Rat(1, 2), Rat(1)};
    for (int n = 1; n <= nmax; ++n) {
        TauSeries t = tau(spec, n, D, table);
        for (int k = -1; k <= 1; ++k) {
            std::vector<Rat> sweep = k == 0 ? thetas : std::vector<Rat>{k == -1 ? Rat(0) : Rat(1)};
            for (const Rat& theta : sweep) {
                DiffOp op = toeplitz_constraint_op(table, k, theta, n);
                Series resid = op.apply(t.series) / t.series;
                std::ostringstream id;
                id << "virasoro.toeplitz.n" << n << ".k" << k << ".theta" << theta.get_str();
                CheckResult r =
                    residual_check(id.str(), "toeplitz-virasoro-constraint", resid, order);
                r.params["n"] = std::to_string(n);
                r.params["k"] = std::to_string(k);
                r.params["theta"] = theta.get_str();
                out.push_back(std::move(r));
            }
        }
    }
    return out;
}

CheckList virasoro_negative_controls(int order) {
    CheckList out;
    const int D = order + 2;
    // Hankel m = -2 does not annihilate
    {
        Series resid = hankel_constraint_residual(Rat(1, 2), Rat(-1, 2), 2, -2, D);
        CheckResult r = CheckResult::ok("virasoro.negative.hankel.m-2", "negative-control",
                                        std::min(order, resid.order()));
        r.pass = !resid.truncated(r.order_verified).is_zero();
        if (!r.pass) r.note = "unexpectedly annihilated";
        out.push_back(r);
    }
    // Toeplitz |k| = 2 does not annihilate, any theta
    for (int k : {-2, 2}) {
        Series resid = toeplitz_constraint_residual(1, k, Rat(1, 2), D, true);
        CheckResult r = CheckResult::ok("virasoro.negative.toeplitz.k" + std::to_string(k),
                                        "negative-control", std::min(order, resid.order()));
        r.pass = !resid.truncated(r.order_verified).is_zero();
        if (!r.pass) r.note = "unexpectedly annihilated";
        out.push_back(r);
    }
    return out;
}

CheckList commutator_report(unsigned seed, int probes, int order) {
    CheckList out;
    TablePtr table = make_t_table(order);
    std::mt19937 rng(seed);
    std::vector<int> ns = {0, 1, 3};
    for (int p = 0; p < probes; ++p) {
        Series probe = random_series(table, order, rng, 8);
        int n = ns[p % ns.size()];
        for (const Rat& beta : {Rat(1), Rat(2)}) {
            for (int k = -3; k <= 3; ++k) {
                for (int l = k; l <= 3; ++l) {
                    CheckResult r = commutator_check(k, l, beta, n, probe);
                    r.check_id += ".p" + std::to_string(p);
                    out.push_back(std::move(r));
                }
            }
        }
    }
    return out;
}

CheckList pde_report(int order_kp, int order_rest) {
    CheckList out;
    // KP on the Hankel tau_2 in t
    {
        WeightSpec spec = WeightSpec::jacobi(Rat(1, 2), Rat(-1, 2), 4);
        Series resid = pde_residual(PdeKind::kp_t, spec, 2, order_kp + 4);
        out.push_back(residual_check("pde.kp.hankel.n2", "kp-bilinear", resid, order_kp));
    }
    // KP on the Toeplitz tau_2, in t and in s separately
    {
        WeightSpec spec = WeightSpec::circle(4, 4);
        Series rt = pde_residual(PdeKind::kp_t, spec, 2, order_rest + 4);
        out.push_back(residual_check("pde.kp.toeplitz.t.n2", "kp-bilinear", rt, order_rest));
        Series rs = pde_residual(PdeKind::kp_s, spec, 2, order_rest + 4);
        out.push_back(residual_check("pde.kp.toeplitz.s.n2", "kp-bilinear", rs, order_rest));
    }
    // nearest-neighbor identities and the Toeplitz relation on the circle
    {
        WeightSpec spec = WeightSpec::circle(2, 2);
        for (int n = 1; n <= 2; ++n) {
            Series r2 = pde_residual(PdeKind::toda_ii, spec, n, order_rest + 2);
            out.push_back(residual_check("pde.toda_ii.n" + std::to_string(n),
                                         "two-toda-neighbor", r2, order_rest));
            Series r3 = pde_residual(PdeKind::toda_iii, spec, n, order_rest + 3);
            out.push_back(residual_check("pde.toda_iii.n" + std::to_string(n),
                                         "two-toda-neighbor", r3, order_rest));
            Series rt = pde_residual(PdeKind::toeplitz_relation, spec, n, order_rest + 2);
            out.push_back(residual_check("pde.toeplitz_relation.n" + std::to_string(n),
                                         "toeplitz-relation", rt, order_rest));
        }
    }
    return out;
}

}  // namespace ttlab
