#include "ttlab/closed_forms.hpp"

#include <sstream>
#include <stdexcept>

namespace ttlab {

PiRational selberg_jacobi(int n, const Rat& alpha, const Rat& beta) {
    if (n < 0) throw std::invalid_argument("selberg_jacobi: n >= 0");
    if (n == 0) return PiRational(Rat(1), 0);
    GammaValue acc;
    for (int j = 1; j <= n; ++j) {
        acc.r *= Rat(factorial(j));
        acc *= gamma_exact(Rat(j) + alpha);
        acc *= gamma_exact(Rat(j) + beta);
        acc /= gamma_exact(Rat(n + j) + alpha + beta);
    }
    Rat ab = alpha + beta;
    if (ab.get_den() != 1) throw std::domain_error("selberg_jacobi: alpha+beta not integral");
    PiRational out = acc.to_pi_rational();
    out.value *= rat_pow(Rat(2), n * (n + static_cast<int>(ab.get_num().get_si())));
    return PiRational(out.value, out.pi_power);
}

PiRational selberg_volume(GroupKind kind, int ell) {
    if (ell < 0) throw std::invalid_argument("selberg_volume: bad size");
    if (kind == GroupKind::U) return PiRational(Rat(1), 0);
    if (kind == GroupKind::Sp) return selberg_jacobi(ell, Rat(1, 2), Rat(1, 2));
    if (ell == 0) return PiRational(Rat(1), 0);
    bool odd = ell % 2 != 0;
    int n = ell / 2;
    GammaValue acc;
    if (odd) {
        // 2^{n^2} prod j! (j-1/2) Gamma^2(j-1/2) / (n+j-1)!
        for (int j = 1; j <= n; ++j) {
            acc.r *= Rat(factorial(j)) * (Rat(j) - Rat(1, 2));
            acc *= gamma_exact(Rat(j) - Rat(1, 2));
            acc *= gamma_exact(Rat(j) - Rat(1, 2));
            acc.r /= Rat(factorial(n + j - 1));
        }
        PiRational out = acc.to_pi_rational();
        out.value *= rat_pow(Rat(2), n * n);
        return PiRational(out.value, out.pi_power);
    }
    if (kind == GroupKind::OPlus) {
        // 2^{n(n-1)} prod j! Gamma^2(j-1/2) / (n+j-2)!
        for (int j = 1; j <= n; ++j) {
            acc.r *= Rat(factorial(j));
            acc *= gamma_exact(Rat(j) - Rat(1, 2));
            acc *= gamma_exact(Rat(j) - Rat(1, 2));
            acc.r /= Rat(factorial(n + j - 2));
        }
    } else {
        // 2^{n(n-1)} prod_{j=1}^{n-1} j! Gamma^2(j+1/2) / (n+j-1)!
        for (int j = 1; j <= n - 1; ++j) {
            acc.r *= Rat(factorial(j));
            acc *= gamma_exact(Rat(j) + Rat(1, 2));
            acc *= gamma_exact(Rat(j) + Rat(1, 2));
            acc.r /= Rat(factorial(n + j - 1));
        }
    }
    PiRational out = acc.to_pi_rational();
    out.value *= rat_pow(Rat(2), n * (n - 1));
    return PiRational(out.value, out.pi_power);
}

Rat aomoto(AomotoKind kind, int n, const Rat& a, const Rat& b) {
    Rat d = a + 2 * Rat(n);
    if (d == 0 || d == 1 || d == -1)
        throw std::domain_error("aomoto: degenerate denominator a + 2n in {-1, 0, 1}");
    switch (kind) {
        case AomotoKind::y1:
            return -b / d;
        case AomotoKind::y1y2:
            return (b * b - a - 2 * Rat(n)) / ((d - 1) * d);
        case AomotoKind::y1sq:
            return (b * b * (a + Rat(n)) + Rat(n) * d * d - d) / ((d - 1) * d * (d + 1));
        case AomotoKind::gamma_n:
            return Rat(8) * Rat(n) * (d * (b * b * Rat(n) + a + Rat(n)) - b * b) /
                   ((d - 1) * d * (d + 1));
        case AomotoKind::H_prime_zero:
            return -Rat(n) * b / d;
    }
    throw std::invalid_argument("aomoto: unknown kind");
}

namespace {

CheckResult equal_pi(std::string id, std::string tag, const PiRational& lhs,
                     const PiRational& rhs) {
    CheckResult r = CheckResult::ok(std::move(id), std::move(tag), 0);
    r.pass = (lhs == rhs);
    if (!r.pass) r.mismatch = Mismatch{"value", lhs.str(), rhs.str()};
    return r;
}

CheckResult equal_rat(std::string id, std::string tag, const Rat& lhs, const Rat& rhs) {
    CheckResult r = CheckResult::ok(std::move(id), std::move(tag), 0);
    r.pass = (lhs == rhs);
    if (!r.pass) r.mismatch = Mismatch{"value", lhs.get_str(), rhs.get_str()};
    return r;
}

// n! tau_n(0) for a Jacobi weight, from the raw moment determinant
PiRational hankel_normalization(int n, const Rat& alpha, const Rat& beta) {
    if (n == 0) return PiRational(Rat(1), 0);
    WeightSpec spec = WeightSpec::jacobi(alpha, beta, 1);
    TauSeries t = tau(spec, n, 0);
    PiRational out = t.normalization;
    out.value *= Rat(factorial(n));
    return out;
}

}  // namespace

CheckList closed_forms_report() {
    CheckList out;

    struct VolCase {
        GroupKind kind;
        int ell;
        int tau_n;
        Rat alpha, beta;
    };
    std::vector<VolCase> vols;
    for (int n : {1, 2}) {
        vols.push_back({GroupKind::OPlus, 2 * n + 1, n, Rat(1, 2), Rat(-1, 2)});
        vols.push_back({GroupKind::OMinus, 2 * n + 1, n, Rat(-1, 2), Rat(1, 2)});
        vols.push_back({GroupKind::OPlus, 2 * n, n, Rat(-1, 2), Rat(-1, 2)});
        vols.push_back({GroupKind::OMinus, 2 * n, n - 1, Rat(1, 2), Rat(1, 2)});
        vols.push_back({GroupKind::Sp, n, n, Rat(1, 2), Rat(1, 2)});
    }
    for (const auto& v : vols) {
        PiRational closed = selberg_volume(v.kind, v.ell);
        PiRational det = hankel_normalization(v.tau_n, v.alpha, v.beta);
        std::string name = group_name(v.kind, v.ell);
        out.push_back(
            equal_pi("closed.volume." + name, "group-volume-vs-determinant", closed, det));
        // and the pair-exponent-one closed form evaluates to the same number
        PiRational ens = selberg_jacobi(v.tau_n, v.alpha, v.beta);
        out.push_back(equal_pi("closed.volume.ensemble." + name,
                               "group-volume-vs-ensemble-formula", closed, ens));
    }

    // moment averages against deformed determinant derivatives at the origin
    std::vector<std::pair<Rat, Rat>> weights = {{Rat(-1, 2), Rat(-1, 2)},
                                                {Rat(1, 2), Rat(-1, 2)},
                                                {Rat(-1, 2), Rat(1, 2)},
                                                {Rat(1, 2), Rat(1, 2)},
                                                {Rat(3, 2), Rat(1, 2)}};
    for (const auto& [alpha, beta] : weights) {
        Rat a = alpha + beta, b = alpha - beta;
        for (int n : {1, 2, 3}) {
            Rat d = a + 2 * Rat(n);
            if (d == -1 || d == 0 || d == 1) continue;  // outside the convergence region
            WeightSpec spec = WeightSpec::jacobi(alpha, beta, 2);
            TablePtr tab = tau_table(spec);
            TauSeries t = tau(spec, n, 2, tab);
            int t1 = tab->find("t1"), t2 = tab->find("t2");
            Mono m1(tab->size(), 0), m2(tab->size(), 0), m11(tab->size(), 0);
            m1[t1] = 1;
            m2[t2] = 1;
            m11[t1] = 2;
            Rat d1 = t.series.coeff(m1);            // d/dt1 tau / tau at 0
            Rat sum_sq = t.series.coeff(m2);        // sum <y_i^2>
            Rat d11 = t.series.coeff(m11) * 2;      // d^2/dt1^2 tau / tau at 0
            std::string base = "closed.aomoto.a" + a.get_str() + ".b" + b.get_str() + ".n" +
                               std::to_string(n);
            out.push_back(equal_rat(base + ".y1", "first-moment-average", d1 / Rat(n),
                                    aomoto(AomotoKind::y1, n, a, b)));
            out.push_back(equal_rat(base + ".Hprime", "log-derivative-at-zero", d1,
                                    aomoto(AomotoKind::H_prime_zero, n, a, b)));
            out.push_back(equal_rat(base + ".y1sq", "second-moment-average", sum_sq / Rat(n),
                                    aomoto(AomotoKind::y1sq, n, a, b)));
            if (n >= 2) {
                Rat y1y2 = (d11 - sum_sq) / (Rat(n) * Rat(n - 1));
                out.push_back(equal_rat(base + ".y1y2", "mixed-moment-average", y1y2,
                                        aomoto(AomotoKind::y1y2, n, a, b)));
            }
            // gamma(n) = 8 <(sum y)^2> against the closed form
            out.push_back(equal_rat(base + ".gamma", "trace-square-average", Rat(8) * d11,
                                    aomoto(AomotoKind::gamma_n, n, a, b)));
        }
    }

    // the f''(0) = 2 table across the four orthogonal families; the a = -1
    // entry needs n >= 2 to stay in the convergence region
    for (int n : {2, 3, 4}) {
        Rat g1 = aomoto(AomotoKind::gamma_n, n, Rat(-1), Rat(0));
        Rat g2 = aomoto(AomotoKind::gamma_n, n, Rat(1), Rat(0));
        Rat g3 = aomoto(AomotoKind::gamma_n, n, Rat(0), Rat(1));
        Rat g4 = aomoto(AomotoKind::gamma_n, n, Rat(0), Rat(-1));
        CheckResult r = CheckResult::ok("closed.fpp0.table.n" + std::to_string(n),
                                        "second-derivative-table", 0);
        r.pass = g1 == 2 && g2 == 2 && g3 == 4 && g4 == 4 && (g3 - 2) == 2 && (g4 - 2) == 2;
        r.note = "gamma values " + g1.get_str() + "," + g2.get_str() + "," + g3.get_str() + "," +
                 g4.get_str();
        out.push_back(r);
    }
    return out;
}

}  // namespace ttlab
