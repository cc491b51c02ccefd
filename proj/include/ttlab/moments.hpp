#ifndef TTLAB_MOMENTS_HPP
#define TTLAB_MOMENTS_HPP

#include <stdexcept>
#include <vector>

#include "ttlab/pi_rational.hpp"
#include "ttlab/series.hpp"

namespace ttlab {

// Gamma at integer or half-integer arguments, tracked as r * pi^(h/2) with
// exact rational r.  A product with an odd aggregate count of sqrt(pi)
// factors is rejected where a PiRational is required.
struct GammaValue {
    Rat r{1};
    int half_pi{0};

    GammaValue& operator*=(const GammaValue& o) {
        r *= o.r;
        half_pi += o.half_pi;
        return *this;
    }
    GammaValue& operator/=(const GammaValue& o) {
        r /= o.r;
        half_pi -= o.half_pi;
        return *this;
    }
    PiRational to_pi_rational() const {
        if (half_pi % 2 != 0)
            throw std::domain_error("GammaValue: odd power of sqrt(pi), not a PiRational");
        return PiRational(r, half_pi / 2);
    }
};

// Gamma(x) for positive integer or half-integer x.
inline GammaValue gamma_exact(const Rat& x) {
    if (x <= 0) throw std::domain_error("gamma_exact: requires positive argument");
    GammaValue g;
    if (x.get_den() == 1) {
        g.r = Rat(factorial(static_cast<int>(x.get_num().get_si()) - 1));
    } else if (x.get_den() == 2) {
        g.r = 1;
        g.half_pi = 1;  // Gamma(1/2) = sqrt(pi)
        for (Rat v(1, 2); v < x; v += 1) g.r *= v;
    } else {
        throw std::domain_error("gamma_exact: not an integer or half-integer");
    }
    return g;
}

// Jacobi weight (1-z)^alpha (1+z)^beta on [-1,1].  Supported parameters:
// alpha, beta both half-integers or both integers, each > -1, which keeps
// every moment an exact rational multiple of a fixed power of pi.
struct JacobiWeight {
    Rat alpha;
    Rat beta;

    JacobiWeight(Rat a_, Rat b_) : alpha(std::move(a_)), beta(std::move(b_)) {
        if (alpha <= -1 || beta <= -1)
            throw std::domain_error("JacobiWeight: requires alpha, beta > -1");
        bool both_half = alpha.get_den() == 2 && beta.get_den() == 2;
        bool both_int = alpha.get_den() == 1 && beta.get_den() == 1;
        if (!both_half && !both_int)
            throw std::domain_error("JacobiWeight: (alpha,beta) outside the pi-rational family");
    }

    Rat a() const { return alpha + beta; }   // a = alpha + beta
    Rat b() const { return alpha - beta; }   // b = alpha - beta
};

// M_0 = 2^{alpha+beta+1} Gamma(alpha+1) Gamma(beta+1) / Gamma(alpha+beta+2).
inline PiRational jacobi_moment0(const JacobiWeight& w) {
    GammaValue g = gamma_exact(w.alpha + 1);
    g *= gamma_exact(w.beta + 1);
    g /= gamma_exact(w.alpha + w.beta + 2);
    Rat ab = w.alpha + w.beta;  // integral for both supported families
    PiRational out = g.to_pi_rational();
    out.value *= rat_pow(Rat(2), static_cast<int>(ab.get_num().get_si()) + 1);
    return out;
}

// Moments M_0..M_mmax of the Jacobi weight from the three-term recurrence
// (m + alpha + beta + 2) M_{m+1} = m M_{m-1} + (beta - alpha) M_m,
// obtained by integrating d/dz [ z^m (1-z)^{alpha+1} (1+z)^{beta+1} ] over
// [-1,1]; the boundary terms vanish for alpha, beta > -1.
inline std::vector<PiRational> jacobi_moments(const JacobiWeight& w, int mmax) {
    std::vector<PiRational> M(mmax + 1);
    M[0] = jacobi_moment0(w);
    int pp = M[0].pi_power;
    for (int m = 0; m < mmax; ++m) {
        Rat acc = (w.beta - w.alpha) * M[m].value;
        if (m >= 1) acc += Rat(m) * M[m - 1].value;
        Rat den = Rat(m) + w.alpha + w.beta + 2;
        M[m + 1] = PiRational(acc / den, pp);
    }
    return M;
}

inline PiRational jacobi_moment(int m, const JacobiWeight& w) {
    if (m < 0) throw std::invalid_argument("jacobi_moment: m >= 0 required");
    return jacobi_moments(w, m)[m];
}

// Coefficient of z^r in (1+z)^k exp(sum_i t_i z^i - sum_i s_i z^{-i}),
// as a weighted series over the table's active t/s variables.  Satisfies
// d/dt_i mu(r) = mu(r-i) and d/ds_i mu(r) = -mu(r+i).
class CircleMoments {
   public:
    CircleMoments(TablePtr table, int order, int binom_k = 0)
        : table_(std::move(table)), order_(order), binom_k_(binom_k) {
        if (binom_k < 0) throw std::invalid_argument("CircleMoments: binomial power must be >= 0");
        std::vector<int> t_vars, s_vars;
        for (int v = 0; v < table_->size(); ++v) {
            if (table_->name(v)[0] == 't')
                t_vars.push_back(v);
            else if (table_->name(v)[0] == 's')
                s_vars.push_back(v);
        }
        gather(t_vars, false, t_terms_);
        gather(s_vars, true, s_terms_);
    }

    int order() const { return order_; }
    TablePtr table() const { return table_; }

    Series moment(int r) const {
        Series out(table_, order_);
        const int nv = table_->size();
        for (const auto& pt : t_terms_) {
            for (const auto& ps : s_terms_) {
                if (pt.weight + ps.weight > order_) continue;
                int j = r - pt.z_deg - ps.z_deg;  // taken from (1+z)^k
                if (j < 0 || j > binom_k_) continue;
                Rat c = pt.c * ps.c * Rat(binomial(binom_k_, j));
                Mono m(nv, 0);
                for (int v = 0; v < nv; ++v) m[v] = static_cast<uint16_t>(pt.mono[v] + ps.mono[v]);
                Series term(table_, order_);
                term.set_coeff(m, c);
                out += term;
            }
        }
        return out;
    }

    // Toeplitz matrix entry (i, j) = mu_{ij} = coefficient of z^{j-i}.
    Series entry(int i, int j) const { return moment(j - i); }

   private:
    struct Piece {
        int weight;
        int z_deg;  // signed z-degree carried by the monomial
        Mono mono;
        Rat c;
    };

    void gather(const std::vector<int>& vars, bool is_s, std::vector<Piece>& out) {
        Mono m(table_->size(), 0);
        auto rec = [&](auto&& self, size_t idx, int weight, int zdeg, Rat c) -> void {
            if (idx == vars.size()) {
                out.push_back(Piece{weight, zdeg, m, std::move(c)});
                return;
            }
            int v = vars[idx];
            int wv = table_->weight(v);
            for (int e = 0; weight + e * wv <= order_; ++e) {
                m[v] = static_cast<uint16_t>(e);
                Rat ce = c / Rat(factorial(e));
                if (is_s && e % 2 == 1) ce = -ce;
                self(self, idx + 1, weight + e * wv, zdeg + (is_s ? -e * wv : e * wv), std::move(ce));
            }
            m[v] = 0;
        };
        rec(rec, 0, 0, 0, Rat(1));
    }

    TablePtr table_;
    int order_;
    int binom_k_;
    std::vector<Piece> t_terms_, s_terms_;
};

// Deformed Hankel entries mu_{ij}(t) = sum_a prod_i t_i^{a_i}/a_i! *
// M_{i+j+sum i*a_i}, over the rational parts of the Jacobi moments.  All
// moments of a supported weight share one power of pi, reported separately
// so tau determinants can divide it out before taking logs.
class HankelMoments {
   public:
    HankelMoments(TablePtr table, int order, const JacobiWeight& w, int max_index)
        : table_(std::move(table)), order_(order) {
        std::vector<PiRational> M = jacobi_moments(w, max_index + order_);
        pi_power_ = M[0].pi_power;
        rats_.reserve(M.size());
        for (const auto& mm : M) rats_.push_back(mm.value);
    }

    int pi_power() const { return pi_power_; }
    int order() const { return order_; }
    TablePtr table() const { return table_; }

    // entry (i, j) as a series in the active t variables, with pi stripped
    Series entry(int i, int j) const {
        Series out(table_, order_);
        Mono m(table_->size(), 0);
        auto rec = [&](auto&& self, int v, int weight, Rat c) -> void {
            if (v == table_->size()) {
                int idx = i + j + weight;
                if (idx < static_cast<int>(rats_.size()) && rats_[idx] != 0) {
                    Series term(table_, order_);
                    term.set_coeff(m, c * rats_[idx]);
                    out += term;
                }
                return;
            }
            int wv = table_->weight(v);
            for (int e = 0; weight + e * wv <= order_; ++e) {
                m[v] = static_cast<uint16_t>(e);
                self(self, v + 1, weight + e * wv, c / Rat(factorial(e)));
            }
            m[v] = 0;
        };
        rec(rec, 0, 0, Rat(1));
        return out;
    }

   private:
    TablePtr table_;
    int order_;
    int pi_power_ = 0;
    std::vector<Rat> rats_;
};

}  // namespace ttlab

#endif
