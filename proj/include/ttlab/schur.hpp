#ifndef TTLAB_SCHUR_HPP
#define TTLAB_SCHUR_HPP

#include <map>
#include <vector>

#include "ttlab/series.hpp"

namespace ttlab {

// A view of one time family inside a table: var_of_degree[i] is the table
// index of the degree-i variable (t_i or s_i), or -1 when that variable is
// frozen at zero.  sign = -1 encodes the (-t) / (-s) prefix.
struct TimeFamily {
    std::vector<int> var_of_degree;  // index 0 unused
    int sign = 1;

    int var(int i) const {
        return (i >= 1 && i < static_cast<int>(var_of_degree.size())) ? var_of_degree[i] : -1;
    }
    int max_degree() const { return static_cast<int>(var_of_degree.size()) - 1; }
};

inline TimeFamily t_family(const TablePtr& table, int sign = 1, int max_degree = -1) {
    TimeFamily fam;
    fam.sign = sign;
    if (max_degree < 0) {
        max_degree = 0;
        for (int v = 0; v < table->size(); ++v)
            if (table->name(v)[0] == 't') max_degree = std::max(max_degree, table->weight(v));
    }
    fam.var_of_degree.assign(max_degree + 1, -1);
    for (int i = 1; i <= max_degree; ++i) fam.var_of_degree[i] = table->find("t" + std::to_string(i));
    return fam;
}

inline TimeFamily s_family(const TablePtr& table, int sign = 1, int max_degree = -1) {
    TimeFamily fam;
    fam.sign = sign;
    if (max_degree < 0) {
        max_degree = 0;
        for (int v = 0; v < table->size(); ++v)
            if (table->name(v)[0] == 's') max_degree = std::max(max_degree, table->weight(v));
    }
    fam.var_of_degree.assign(max_degree + 1, -1);
    for (int i = 1; i <= max_degree; ++i) fam.var_of_degree[i] = table->find("s" + std::to_string(i));
    return fam;
}

// Elementary Schur polynomials p_0..p_kmax of the family, defined by
// e^{sum_i u_i z^i} = sum_k p_k(u) z^k and computed from the recurrence
// k p_k = sum_{i=1..k} i u_i p_{k-i}.  Each p_k is weight-homogeneous of
// weight k.  Variables missing from the family count as zero.
inline std::vector<Series> schur_p_list(const TablePtr& table, int order, int kmax,
                                        const TimeFamily& fam) {
    std::vector<Series> p;
    p.reserve(kmax + 1);
    p.push_back(Series::constant(table, order, Rat(1)));
    for (int k = 1; k <= kmax; ++k) {
        Series acc(table, order);
        for (int i = 1; i <= k; ++i) {
            int v = fam.var(i);
            if (v < 0) continue;
            acc += Series::variable(table, order, v, Rat(i * fam.sign)) * p[k - i];
        }
        p.push_back(acc * Rat(1, k));
    }
    return p;
}

inline Series schur_p(const TablePtr& table, int order, int k, const TimeFamily& fam) {
    if (k < 0) return Series(table, order);  // p_k = 0 for k < 0
    return schur_p_list(table, order, k, fam)[k];
}

// Determinant of a small series matrix by cofactor expansion (no division).
inline Series series_det(const std::vector<std::vector<Series>>& m) {
    int n = static_cast<int>(m.size());
    if (n == 0) throw std::invalid_argument("series_det: empty matrix");
    if (n == 1) return m[0][0];
    Series out(m[0][0].table(), m[0][0].order());
    std::vector<int> cols(n);
    for (int j = 0; j < n; ++j) cols[j] = j;
    // recursive lambda over remaining columns
    auto rec = [&](auto&& self, int row, std::vector<int>& rem) -> Series {
        if (static_cast<int>(rem.size()) == 1) return m[row][rem[0]];
        Series acc(m[0][0].table(), m[0][0].order());
        for (size_t idx = 0; idx < rem.size(); ++idx) {
            int col = rem[idx];
            if (m[row][col].is_zero()) continue;
            std::vector<int> sub;
            sub.reserve(rem.size() - 1);
            for (size_t j = 0; j < rem.size(); ++j)
                if (j != idx) sub.push_back(rem[j]);
            Series minor = self(self, row + 1, sub);
            Series term = m[row][col] * minor;
            if (idx % 2) term = -term;
            acc += term;
        }
        return acc;
    };
    return rec(rec, 0, cols);
}

// Schur polynomial s_lambda via the Jacobi-Trudi determinant
// s_lambda = det(p_{lambda_i - i + j}).
inline Series schur_s(const TablePtr& table, int order, const std::vector<int>& lambda,
                      const TimeFamily& fam) {
    int n = static_cast<int>(lambda.size());
    if (n == 0) return Series::constant(table, order, Rat(1));
    for (int i = 0; i + 1 < n; ++i)
        if (lambda[i] < lambda[i + 1])
            throw std::invalid_argument("schur_s: partition must be weakly decreasing");
    if (lambda.back() < 0) throw std::invalid_argument("schur_s: negative part");
    int kmax = lambda[0] + n - 1;
    std::vector<Series> p = schur_p_list(table, order, kmax, fam);
    std::vector<std::vector<Series>> m(n, std::vector<Series>(n, Series(table, order)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int k = lambda[i] - (i + 1) + (j + 1);
            if (k >= 0 && k <= kmax) m[i][j] = p[k];
        }
    return series_det(m);
}

// Monomial expansion of p_j over an auxiliary ring, used to drive the Hirota
// operation: returns pairs (exponents a_1..a_j, coefficient).
inline std::vector<std::pair<std::vector<int>, Rat>> schur_p_monomials(int j) {
    TablePtr aux = make_t_table(j);
    TimeFamily fam = t_family(aux);
    Series pj = schur_p(aux, j, j, fam);
    std::vector<std::pair<std::vector<int>, Rat>> out;
    for (const auto& [m, c] : pj.terms()) {
        std::vector<int> a(j + 1, 0);
        for (int v = 0; v < aux->size(); ++v) a[v + 1] = m[v];
        out.emplace_back(std::move(a), c);
    }
    return out;
}

// Customary Hirota symbol p_j(±tilde-d) f∘g, with tilde-d the scaled partials
// (d_1, d_2/2, d_3/3, ...) of the given family.  Degrees whose variable is
// absent from the table contribute zero.
inline Series hirota(int j, const Series& f, const Series& g, const TimeFamily& fam) {
    if (j < 0) return Series(f.table(), f.order());
    if (j == 0) return f * g;
    TablePtr table = f.table();
    int order = std::min(f.order(), g.order());
    // cache of scaled mixed partials, keyed by exponent vector
    std::map<std::vector<int>, Series> df_cache, dg_cache;
    auto scaled_partial = [&](const Series& base, std::map<std::vector<int>, Series>& cache,
                              const std::vector<int>& b) -> const Series& {
        auto it = cache.find(b);
        if (it != cache.end()) return it->second;
        Series cur = base.truncated(order);
        Rat scale(1);
        for (int i = 1; i < static_cast<int>(b.size()); ++i) {
            int v = fam.var(i);
            for (int rep = 0; rep < b[i]; ++rep) {
                if (v < 0)
                    cur = Series(table, order);
                else
                    cur = cur.partial(v);
                scale *= i;
            }
        }
        cur *= Rat(1) / scale;
        return cache.emplace(b, std::move(cur)).first->second;
    };

    Series acc(table, order);
    for (const auto& [a, c] : schur_p_monomials(j)) {
        int tot = 0;
        for (int i = 1; i <= j; ++i) tot += a[i];
        Rat coeff = c * rat_pow(Rat(fam.sign), tot);
        // expand prod_i D_i^{a_i} f.g into sum over splittings b <= a
        std::vector<int> b(a.size(), 0);
        auto rec = [&](auto&& self, int i) -> void {
            if (i == static_cast<int>(a.size())) {
                Rat mult = coeff;
                std::vector<int> ab(a.size());
                int flips = 0;
                for (int d = 1; d <= j; ++d) {
                    mult *= Rat(binomial(a[d], b[d]));
                    ab[d] = a[d] - b[d];
                    flips += a[d] - b[d];
                }
                if (flips % 2) mult = -mult;
                const Series& df = scaled_partial(f, df_cache, b);
                if (df.is_zero()) return;
                const Series& dg = scaled_partial(g, dg_cache, ab);
                if (dg.is_zero()) return;
                acc += df * dg * mult;
                return;
            }
            for (b[i] = 0; b[i] <= a[i]; ++b[i]) self(self, i + 1);
            b[i] = 0;
        };
        rec(rec, 1);
    }
    // every p_j monomial removes total weight j, so the result is exact only
    // to order - j
    return acc.truncated(order - j);
}

// Plain application of p_j(±tilde-d) to a single series (no bilinear pairing).
inline Series schur_p_partials(int j, const Series& f, const TimeFamily& fam) {
    if (j < 0) return Series(f.table(), f.order());
    TablePtr table = f.table();
    int order = f.order();
    Series acc(table, order);
    for (const auto& [a, c] : schur_p_monomials(j)) {
        Series cur = f;
        Rat scale = c;
        for (int i = 1; i <= j; ++i) {
            int v = fam.var(i);
            for (int rep = 0; rep < a[i]; ++rep) {
                if (v < 0)
                    cur = Series(table, order);
                else
                    cur = cur.partial(v);
                scale *= Rat(fam.sign, i);
            }
        }
        acc += cur * scale;
    }
    return acc;
}

}  // namespace ttlab

#endif
