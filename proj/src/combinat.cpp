#include "ttlab/combinat.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "ttlab/tau.hpp"

namespace ttlab {

int lis_strict(const std::vector<int>& seq) {
    std::vector<int> tops;
    for (int x : seq) {
        auto it = std::lower_bound(tops.begin(), tops.end(), x);
        if (it == tops.end())
            tops.push_back(x);
        else
            *it = x;
    }
    return static_cast<int>(tops.size());
}

int lis_weak(const std::vector<int>& seq) {
    std::vector<int> tops;
    for (int x : seq) {
        auto it = std::upper_bound(tops.begin(), tops.end(), x);
        if (it == tops.end())
            tops.push_back(x);
        else
            *it = x;
    }
    return static_cast<int>(tops.size());
}

std::string class_id_name(ClassId id) {
    switch (id) {
        case ClassId::perm: return "perm";
        case ClassId::word: return "word";
        case ClassId::involution: return "involution";
        case ClassId::fp_free_involution: return "fp_free_involution";
        case ClassId::iota_involution: return "iota_involution";
        case ClassId::iota_matching_nofix: return "iota_matching_nofix";
        case ClassId::iota_commuting: return "iota_commuting";
        case ClassId::fp_free_iota_involution: return "fp_free_iota_involution";
    }
    return "?";
}

namespace {

constexpr int kPermBudget = 9;
constexpr int kPairedBudget = 16;
constexpr long long kWordBudget = 1000000;

// enumerate involutions of {1..n} (optionally fixed-point free), as 1-based
// permutation arrays
void for_each_involution(int n, bool fp_free, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> pi(n + 1, 0);
    auto rec = [&](auto&& self, int i) -> void {
        while (i <= n && pi[i] != 0) ++i;
        if (i > n) {
            fn(pi);
            return;
        }
        if (!fp_free) {
            pi[i] = i;
            self(self, i + 1);
            pi[i] = 0;
        }
        for (int j = i + 1; j <= n; ++j) {
            if (pi[j] != 0) continue;
            pi[i] = j;
            pi[j] = i;
            self(self, i + 1);
            pi[i] = pi[j] = 0;
        }
    };
    rec(rec, 1);
}

// involutions commuting with iota, no fixed points, pi(y) != iota(y);
// built as matchings closed under the mirror (i,j) -> (iota i, iota j)
void for_each_mirror_matching(int n, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> pi(n + 1, 0);
    auto iota = [n](int v) { return n + 1 - v; };
    auto rec = [&](auto&& self, int i) -> void {
        while (i <= n && pi[i] != 0) ++i;
        if (i > n) {
            fn(pi);
            return;
        }
        for (int j = i + 1; j <= n; ++j) {
            if (pi[j] != 0 || j == iota(i)) continue;
            int mi = iota(i), mj = iota(j);
            // the mirror pair must land on free slots
            if (mi != i && mi != j && (pi[mi] != 0 || pi[mj] != 0)) continue;
            pi[i] = j;
            pi[j] = i;
            bool mirrored = (mi != j);
            if (mirrored) {
                pi[mi] = mj;
                pi[mj] = mi;
            }
            self(self, i + 1);
            pi[i] = pi[j] = 0;
            if (mirrored) pi[mi] = pi[mj] = 0;
        }
    };
    rec(rec, 1);
}

// permutations commuting with iota: choose one representative value from
// each mirror pair for positions 1..n/2 (n even here)
void for_each_iota_commuting(int n, const std::function<void(const std::vector<int>&)>& fn) {
    int half = n / 2;
    std::vector<int> pi(n + 1, 0);
    std::vector<bool> used_pair(half + 1, false);
    auto iota = [n](int v) { return n + 1 - v; };
    auto rec = [&](auto&& self, int i) -> void {
        if (i > half) {
            fn(pi);
            return;
        }
        for (int p = 1; p <= half; ++p) {
            if (used_pair[p]) continue;
            used_pair[p] = true;
            for (int v : {p, iota(p)}) {
                pi[i] = v;
                pi[iota(i)] = iota(v);
                self(self, i + 1);
            }
            pi[i] = pi[iota(i)] = 0;
            used_pair[p] = false;
        }
    };
    rec(rec, 1);
}

long long count_perms(int n, int ell) {
    if (n == 0) return 1;
    std::vector<int> pi(n);
    std::iota(pi.begin(), pi.end(), 1);
    long long cnt = 0;
    do {
        if (lis_strict(pi) <= ell) ++cnt;
    } while (std::next_permutation(pi.begin(), pi.end()));
    return cnt;
}

long long count_words(int n, int k, int ell) {
    if (n == 0) return 1;
    std::vector<int> w(n, 1);
    long long cnt = 0;
    while (true) {
        if (lis_weak(w) <= ell) ++cnt;
        int pos = n - 1;
        while (pos >= 0 && w[pos] == k) w[pos--] = 1;
        if (pos < 0) break;
        ++w[pos];
    }
    return cnt;
}

std::vector<int> strip(const std::vector<int>& pi1) {
    return std::vector<int>(pi1.begin() + 1, pi1.end());
}

}  // namespace

long long count_class(const ClassSpec& spec) {
    const int n = spec.n;
    const int ell = spec.ell;
    if (n < 0 || ell < 0) throw std::invalid_argument("count_class: bad parameters");
    switch (spec.id) {
        case ClassId::perm:
            if (n > kPermBudget) throw std::runtime_error("count_class: permutation budget exceeded");
            return count_perms(n, ell);
        case ClassId::word: {
            if (spec.k <= 0) throw std::invalid_argument("count_class: word class needs k");
            double total = std::pow(static_cast<double>(spec.k), n);
            if (total > static_cast<double>(kWordBudget))
                throw std::runtime_error("count_class: word budget exceeded");
            return count_words(n, spec.k, ell);
        }
        case ClassId::involution: {
            if (n > kPairedBudget) throw std::runtime_error("count_class: involution budget exceeded");
            long long cnt = 0;
            for_each_involution(n, false, [&](const std::vector<int>& pi) {
                if (lis_strict(strip(pi)) <= ell) ++cnt;
            });
            return cnt;
        }
        case ClassId::fp_free_involution: {
            if (n > kPairedBudget) throw std::runtime_error("count_class: involution budget exceeded");
            if (n % 2 != 0) return 0;
            long long cnt = 0;
            for_each_involution(n, true, [&](const std::vector<int>& pi) {
                if (lis_strict(strip(pi)) <= ell) ++cnt;
            });
            return cnt;
        }
        case ClassId::iota_involution: {
            // (iota pi)^2 = 1  <=>  pi = iota rho with rho an involution
            if (n > kPairedBudget) throw std::runtime_error("count_class: involution budget exceeded");
            long long cnt = 0;
            for_each_involution(n, false, [&](const std::vector<int>& rho) {
                std::vector<int> pi(n);
                for (int i = 1; i <= n; ++i) pi[i - 1] = n + 1 - rho[i];
                if (lis_strict(pi) <= ell) ++cnt;
            });
            return cnt;
        }
        case ClassId::iota_matching_nofix: {
            // (pi iota)^2 = 1, pi(y) != iota(y)  <=>  pi = rho iota with rho a
            // fixed-point free involution
            if (n > kPairedBudget) throw std::runtime_error("count_class: involution budget exceeded");
            if (n % 2 != 0) return 0;
            long long cnt = 0;
            for_each_involution(n, true, [&](const std::vector<int>& rho) {
                std::vector<int> pi(n);
                for (int i = 1; i <= n; ++i) pi[i - 1] = rho[n + 1 - i];
                if (lis_strict(pi) <= ell) ++cnt;
            });
            return cnt;
        }
        case ClassId::iota_commuting: {
            if (n % 2 != 0) return 0;
            if (n > kPairedBudget) throw std::runtime_error("count_class: budget exceeded");
            long long cnt = 0;
            for_each_iota_commuting(n, [&](const std::vector<int>& pi) {
                if (lis_strict(strip(pi)) <= ell) ++cnt;
            });
            return cnt;
        }
        case ClassId::fp_free_iota_involution: {
            if (n % 2 != 0) return 0;
            if (n > kPairedBudget) throw std::runtime_error("count_class: budget exceeded");
            long long cnt = 0;
            for_each_mirror_matching(n, [&](const std::vector<int>& pi) {
                if (lis_strict(strip(pi)) <= ell) ++cnt;
            });
            return cnt;
        }
    }
    throw std::invalid_argument("count_class: unknown class");
}

std::vector<CountRow> count_table(ClassId id, int n_max, int ell, int k) {
    std::vector<CountRow> rows;
    for (int n = 0; n <= n_max; ++n) {
        ClassSpec s{id, n, ell, k};
        rows.push_back(CountRow{id, n, ell, k, count_class(s)});
    }
    return rows;
}

namespace {

// generating function sum_n count(n) * weight(n) * x^{power(n)}
Series counts_to_series(const TablePtr& xtab, int order, const std::vector<long long>& counts,
                        const std::function<Rat(int)>& weight, const std::function<int(int)>& power) {
    Series out(xtab, order);
    for (size_t n = 0; n < counts.size(); ++n) {
        int p = power(static_cast<int>(n));
        if (p > order) continue;
        Series term(xtab, order);
        Mono m(1, static_cast<uint16_t>(p));
        term.set_coeff(m, weight(static_cast<int>(n)) * to_rat(counts[n]));
        out += term;
    }
    return out;
}

CoeffCheck make_check(int p, const Series& lhs, const Series& rhs) {
    Mono m(1, static_cast<uint16_t>(p));
    CoeffCheck c;
    c.power = p;
    c.lhs = lhs.coeff(m);
    c.rhs = rhs.coeff(m);
    c.equal = (c.lhs == c.rhs);
    return c;
}

}  // namespace

IdentityReport identity_check(int identity, int ell, int n_max, int k) {
    IdentityReport rep;
    rep.identity = identity;
    rep.ell = ell;
    rep.k = k;
    rep.n_max = n_max;
    TablePtr xtab = make_single("x");
    const int D = n_max;

    Series lhs(xtab, D), rhs(xtab, D);
    auto inv_fact = [](int m) -> Rat { return Rat(1) / Rat(factorial(m)); };
    auto inv_fact_sq = [](int m) -> Rat {
        Rat f(factorial(m));
        return Rat(1) / (f * f);
    };

    switch (identity) {
        case 1: {  // perms vs E_U e^{x tr(M+Mbar)}
            std::vector<long long> c;
            for (int n = 0; 2 * n <= n_max; ++n)
                c.push_back(count_class({ClassId::perm, n, ell, 0}));
            lhs = counts_to_series(xtab, D, c, inv_fact_sq, [](int n) { return 2 * n; });
            Series ex = unitary_expectation_x(ell, xtab, (D + 1) / 2);  // series in x = q^2
            rhs = Series(xtab, D);
            for (const auto& [m, cc] : ex.terms()) {
                Series t(xtab, D);
                Mono mm(1, static_cast<uint16_t>(2 * m[0]));
                t.set_coeff(mm, cc);
                rhs += t;
            }
            rep.lhs_desc = "sum x^{2n}/(n!)^2 #{S_n, lis <= ell}";
            rep.rhs_desc = "E_{U(ell)} e^{x tr(M+Mbar)}";
            break;
        }
        case 2: {  // paired involutions in S_{4n} vs the same unitary series
            std::vector<long long> c;
            for (int n = 0; 2 * n <= n_max; ++n)
                c.push_back(count_class({ClassId::fp_free_iota_involution, 4 * n, 2 * ell, 0}));
            lhs = counts_to_series(
                xtab, D, c, [&](int n) -> Rat { return Rat(1) / Rat(factorial(2 * n)); },
                [](int n) { return 2 * n; });
            Series ex = unitary_expectation_x(ell, xtab, (D + 1) / 2);
            rhs = Series(xtab, D);
            for (const auto& [m, cc] : ex.terms()) {
                Series t(xtab, D);
                Mono mm(1, static_cast<uint16_t>(2 * m[0]));
                t.set_coeff(mm, cc);
                rhs += t;
            }
            rep.lhs_desc = "sum x^{2n}/(2n)! #{S_4n paired involutions, lis <= 2 ell}";
            rep.rhs_desc = "E_{U(ell)} e^{x tr(M+Mbar)}";
            break;
        }
        case 3: {  // 2 * fp-free involutions vs E_{O-(ell)} + E_{O+(ell)}
            std::vector<long long> c;
            for (int n = 0; 2 * n <= n_max; ++n)
                c.push_back(count_class({ClassId::fp_free_involution, 2 * n, ell, 0}));
            lhs = counts_to_series(
                      xtab, D, c, [&](int n) -> Rat { return Rat(1) / Rat(factorial(2 * n)); },
                      [](int n) { return 2 * n; }) *
                  Rat(2);
            rhs = group_expectation(GroupKind::OMinus, ell, xtab, D) +
                  group_expectation(GroupKind::OPlus, ell, xtab, D);
            rep.lhs_desc = "2 sum x^{2n}/(2n)! #{fp-free involutions, lis <= ell}";
            rep.rhs_desc = "E_{O-(ell)} + E_{O+(ell)}";
            break;
        }
        case 4:    // involutions vs e^x E_{O-(ell+1)}
        case 5: {  // iota-involutions vs the same right-hand side
            ClassId id = identity == 4 ? ClassId::involution : ClassId::iota_involution;
            std::vector<long long> c;
            for (int n = 0; n <= n_max; ++n) c.push_back(count_class({id, n, ell, 0}));
            lhs = counts_to_series(xtab, D, c, inv_fact, [](int n) { return n; });
            rhs = (exp_cx(xtab, D, Rat(1)) * group_expectation(GroupKind::OMinus, ell + 1, xtab, D))
                      .truncated(D);
            rep.lhs_desc = identity == 4 ? "sum x^n/n! #{involutions, lis <= ell}"
                                         : "sum x^n/n! #{(iota pi)^2 = 1, lis <= ell}";
            rep.rhs_desc = "e^x E_{O-(ell+1)}";
            break;
        }
        case 6: {  // rho iota with rho fp-free vs E_{O-(2 ell + 2)}
            std::vector<long long> c;
            for (int n = 0; 2 * n <= n_max; ++n)
                c.push_back(count_class({ClassId::iota_matching_nofix, 2 * n, 2 * ell, 0}));
            lhs = counts_to_series(
                xtab, D, c, [&](int n) -> Rat { return Rat(1) / Rat(factorial(2 * n)); },
                [](int n) { return 2 * n; });
            rhs = group_expectation(GroupKind::OMinus, 2 * ell + 2, xtab, D);
            rep.lhs_desc = "sum x^{2n}/(2n)! #{(pi iota)^2 = 1, pi(y) != iota(y), lis <= 2 ell}";
            rep.rhs_desc = "E_{O-(2 ell + 2)}";
            break;
        }
        case 7: {  // iota-commuting, even bound, vs E_U^2
            std::vector<long long> c;
            for (int n = 0; 2 * n <= n_max; ++n)
                c.push_back(count_class({ClassId::iota_commuting, 2 * n, 2 * ell, 0}));
            lhs = counts_to_series(xtab, D, c, inv_fact_sq, [](int n) { return 2 * n; });
            Series ex = unitary_expectation_x(ell, xtab, (D + 1) / 2);
            Series exx(xtab, D);
            for (const auto& [m, cc] : ex.terms()) {
                Series t(xtab, D);
                Mono mm(1, static_cast<uint16_t>(2 * m[0]));
                t.set_coeff(mm, cc);
                exx += t;
            }
            rhs = exx * exx;
            rep.lhs_desc = "sum x^{2n}/(n!)^2 #{pi iota = iota pi, lis <= 2 ell}";
            rep.rhs_desc = "E_{U(ell)}^2";
            break;
        }
        case 8: {  // iota-commuting, odd bound, vs E_{U(ell)} E_{U(ell+1)}
            std::vector<long long> c;
            for (int n = 0; 2 * n <= n_max; ++n)
                c.push_back(count_class({ClassId::iota_commuting, 2 * n, 2 * ell + 1, 0}));
            lhs = counts_to_series(xtab, D, c, inv_fact_sq, [](int n) { return 2 * n; });
            auto blow = [&](const Series& ex) {
                Series out(xtab, D);
                for (const auto& [m, cc] : ex.terms()) {
                    Series t(xtab, D);
                    Mono mm(1, static_cast<uint16_t>(2 * m[0]));
                    t.set_coeff(mm, cc);
                    out += t;
                }
                return out;
            };
            rhs = blow(unitary_expectation_x(ell, xtab, (D + 1) / 2)) *
                  blow(unitary_expectation_x(ell + 1, xtab, (D + 1) / 2));
            rep.lhs_desc = "sum x^{2n}/(n!)^2 #{pi iota = iota pi, lis <= 2 ell + 1}";
            rep.rhs_desc = "E_{U(ell)} E_{U(ell+1)}";
            break;
        }
        case 9: {  // words; both exponential signs are tried, the matching one is recorded
            if (k <= 0) throw std::invalid_argument("identity_check: words identity needs k");
            std::vector<long long> c;
            for (int n = 0; n <= n_max; ++n) c.push_back(count_class({ClassId::word, n, ell, k}));
            lhs = counts_to_series(xtab, D, c, inv_fact, [](int n) { return n; });
            Series plus = words_expectation(ell, k, +1, xtab, D);
            Series minus = words_expectation(ell, k, -1, xtab, D);
            bool plus_ok = (lhs == plus);
            rhs = plus_ok ? plus : minus;
            rep.note = plus_ok ? "matches e^{+x tr Mbar}"
                               : (lhs == minus ? "matches e^{-x tr Mbar}" : "matches neither sign");
            rep.lhs_desc = "sum x^n/n! #{words(k), weak lis <= ell}";
            rep.rhs_desc = "E_{U(ell)} det(1+M)^k e^{x tr Mbar} (sign recorded)";
            break;
        }
        default:
            throw std::invalid_argument("identity_check: identity must be 1..9");
    }

    rep.pass = true;
    for (int p = 0; p <= n_max; ++p) {
        CoeffCheck c = make_check(p, lhs, rhs);
        rep.pass = rep.pass && c.equal;
        rep.coeffs.push_back(std::move(c));
    }
    return rep;
}

namespace {

GapReport gap_from_log(const std::string& family, int ell, int k, const Series& logE, int D,
                       const std::vector<std::pair<int, Rat>>& expected, int gap_from, int gap_to) {
    GapReport rep;
    rep.family = family;
    rep.ell = ell;
    rep.k = k;
    rep.pass = true;
    std::string detail;
    auto coeff = [&](int p) {
        Mono m(1, static_cast<uint16_t>(p));
        return logE.coeff(m);
    };
    // accumulate stated terms by power (at ell = 1 the quadratic terms merge)
    std::map<int, Rat> want;
    for (const auto& [p, w] : expected) want[p] += w;
    for (const auto& [p, w] : want) {
        if (p > D) continue;
        if (coeff(p) != w) {
            rep.pass = false;
            detail += "coeff x^" + std::to_string(p) + " = " + coeff(p).get_str() +
                      ", expected " + w.get_str() + "; ";
        }
    }
    for (int p = gap_from; p <= std::min(gap_to, D); ++p) {
        if (want.count(p)) continue;
        if (coeff(p) != 0) {
            rep.pass = false;
            detail += "gap violated at x^" + std::to_string(p) + " = " + coeff(p).get_str() + "; ";
        }
    }
    rep.detail = detail.empty() ? "leading terms and gap as stated" : detail;
    return rep;
}

}  // namespace

GapReport gap_check_orth(int sign, int ell, int D) {
    TablePtr xtab = make_single("x");
    Series E = group_expectation(sign > 0 ? GroupKind::OPlus : GroupKind::OMinus, ell + 1, xtab, D);
    Series logE = E.log();
    std::vector<std::pair<int, Rat>> expected = {
        {1, Rat(0)},
        {2, Rat(1, 2)},
        {ell + 1, Rat(sign) / Rat(factorial(ell + 1))}};
    return gap_from_log(std::string("O(") + std::to_string(ell + 1) + (sign > 0 ? ")+" : ")-"), ell,
                        0, logE, D, expected, 3, ell);
}

GapReport gap_check_unitary(int ell, int D) {
    TablePtr xtab = make_single("x");
    Series E = unitary_expectation_x(ell, xtab, D);
    Series logE = E.log();
    Rat f(factorial(ell + 1));
    std::vector<std::pair<int, Rat>> expected = {{1, Rat(1)}, {ell + 1, Rat(-1) / (f * f)}};
    return gap_from_log("U(" + std::to_string(ell) + ")", ell, 0, logE, D, expected, 2, ell);
}

GapReport gap_check_words(int ell, int k, int D) {
    TablePtr xtab = make_single("x");
    Series E = words_expectation(ell, k, +1, xtab, D);
    Series logE = E.log();
    std::vector<std::pair<int, Rat>> expected = {
        {1, Rat(k)},
        {ell + 1, Rat(-binomial(k + ell, ell + 1)) / Rat(factorial(ell + 1))}};
    return gap_from_log("words(" + std::to_string(k) + ")", ell, k, logE, D, expected, 2, ell);
}

}  // namespace ttlab
