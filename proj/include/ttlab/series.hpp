#ifndef TTLAB_SERIES_HPP
#define TTLAB_SERIES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "ttlab/rational.hpp"

namespace ttlab {

// Ordered list of variables with positive integer weights.  Weights follow
// the grading deg t_i = deg s_i = i, so coefficient extraction from Laurent
// exponentials is a finite sum at any truncation order.  Immutable.
class VariableTable {
   public:
    VariableTable(std::vector<std::string> names, std::vector<int> weights)
        : names_(std::move(names)), weights_(std::move(weights)) {
        if (names_.size() != weights_.size())
            throw std::invalid_argument("VariableTable: names/weights size mismatch");
        for (int w : weights_)
            if (w <= 0) throw std::invalid_argument("VariableTable: weights must be positive");
    }

    int size() const { return static_cast<int>(names_.size()); }
    int weight(int v) const { return weights_[v]; }
    const std::string& name(int v) const { return names_[v]; }

    int find(const std::string& nm) const {
        for (int i = 0; i < size(); ++i)
            if (names_[i] == nm) return i;
        return -1;
    }

   private:
    std::vector<std::string> names_;
    std::vector<int> weights_;
};

using TablePtr = std::shared_ptr<const VariableTable>;

// t_1..t_nt followed by s_1..s_ns, weight(t_i) = weight(s_i) = i.
inline TablePtr make_ts_table(int nt, int ns) {
    std::vector<std::string> names;
    std::vector<int> weights;
    for (int i = 1; i <= nt; ++i) {
        names.push_back("t" + std::to_string(i));
        weights.push_back(i);
    }
    for (int i = 1; i <= ns; ++i) {
        names.push_back("s" + std::to_string(i));
        weights.push_back(i);
    }
    return std::make_shared<VariableTable>(std::move(names), std::move(weights));
}

inline TablePtr make_t_table(int nt) { return make_ts_table(nt, 0); }

inline TablePtr make_single(const std::string& name) {
    return std::make_shared<VariableTable>(std::vector<std::string>{name}, std::vector<int>{1});
}

using Mono = std::vector<uint16_t>;

// Multivariate power series over the rationals, truncated at a total weight.
// Exponent maps are sparse; zero coefficients are never stored.  Arithmetic
// never raises the truncation order: combining two series truncates to the
// smaller order.
class Series {
   public:
    Series() = default;
    Series(TablePtr table, int order) : table_(std::move(table)), order_(order) {
        if (order_ < 0) throw std::invalid_argument("Series: negative order");
    }

    static Series constant(TablePtr table, int order, Rat c) {
        Series s(std::move(table), order);
        if (c != 0) s.terms_[Mono(s.table_->size(), 0)] = std::move(c);
        return s;
    }
    static Series variable(TablePtr table, int order, int v, Rat c = Rat(1)) {
        Series s(std::move(table), order);
        if (s.table_->weight(v) <= order && c != 0) {
            Mono m(s.table_->size(), 0);
            m[v] = 1;
            s.terms_[std::move(m)] = std::move(c);
        }
        return s;
    }

    TablePtr table() const { return table_; }
    int order() const { return order_; }
    const std::map<Mono, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int mono_weight(const Mono& m) const {
        int w = 0;
        for (int v = 0; v < table_->size(); ++v) w += m[v] * table_->weight(v);
        return w;
    }

    Rat coeff(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }
    Rat constant_term() const { return coeff(Mono(table_->size(), 0)); }

    // Coefficient of v^e in a univariate series.
    Rat coeff1(int e) const {
        if (table_->size() != 1) throw std::logic_error("coeff1: not univariate");
        Mono m(1, static_cast<uint16_t>(e));
        return coeff(m);
    }

    void set_coeff(const Mono& m, Rat c) {
        if (mono_weight(m) > order_) return;
        if (c == 0)
            terms_.erase(m);
        else
            terms_[m] = std::move(c);
    }

    Series truncated(int new_order) const {
        Series out(table_, std::min(order_, new_order));
        for (const auto& [m, c] : terms_)
            if (mono_weight(m) <= out.order_) out.terms_.emplace(m, c);
        return out;
    }

    Series& operator+=(const Series& o) {
        check_same_table(o);
        if (o.order_ < order_) *this = truncated(o.order_);
        for (const auto& [m, c] : o.terms_) {
            if (mono_weight(m) > order_) continue;
            auto [it, fresh] = terms_.emplace(m, c);
            if (!fresh) {
                it->second += c;
                if (it->second == 0) terms_.erase(it);
            }
        }
        return *this;
    }
    Series& operator-=(const Series& o) { return *this += -o; }
    Series operator-() const {
        Series out(table_, order_);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }

    Series& operator*=(const Rat& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }
    friend Series operator*(Series a, const Rat& c) { return a *= c; }
    friend Series operator*(const Rat& c, Series a) { return a *= c; }

    friend Series operator*(const Series& a, const Series& b) {
        a.check_same_table(b);
        Series out(a.table_, std::min(a.order_, b.order_));
        const int nv = a.table_->size();
        // per-multiplication dense convolution over the sparse maps
        for (const auto& [ma, ca] : a.terms_) {
            int wa = a.mono_weight(ma);
            if (wa > out.order_) continue;
            for (const auto& [mb, cb] : b.terms_) {
                int wb = b.mono_weight(mb);
                if (wa + wb > out.order_) continue;
                Mono m(nv);
                for (int v = 0; v < nv; ++v) m[v] = static_cast<uint16_t>(ma[v] + mb[v]);
                Rat prod = ca * cb;
                auto [it, fresh] = out.terms_.emplace(std::move(m), prod);
                if (!fresh) {
                    it->second += prod;
                    if (it->second == 0) out.terms_.erase(it);
                }
            }
        }
        return out;
    }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    // Division by a series with invertible constant term; (a/b)*b == a up to
    // truncation.
    friend Series operator/(const Series& a, const Series& b) {
        a.check_same_table(b);
        Rat b0 = b.constant_term();
        if (b0 == 0) throw std::domain_error("Series: division by series with zero constant term");
        int D = std::min(a.order_, b.order_);
        // peel off terms of b by weight
        std::vector<Series> b_by_w(D + 1, Series(a.table_, D));
        for (const auto& [m, c] : b.terms_) {
            int w = b.mono_weight(m);
            if (w <= D) b_by_w[w].terms_.emplace(m, c);
        }
        std::vector<Series> q_by_w(D + 1, Series(a.table_, D));
        std::vector<Series> a_by_w(D + 1, Series(a.table_, D));
        for (const auto& [m, c] : a.terms_) {
            int w = a.mono_weight(m);
            if (w <= D) a_by_w[w].terms_.emplace(m, c);
        }
        Series q(a.table_, D);
        for (int w = 0; w <= D; ++w) {
            Series rhs = a_by_w[w];
            for (int u = 1; u <= w; ++u)
                if (!b_by_w[u].is_zero() && !q_by_w[w - u].is_zero()) rhs -= b_by_w[u] * q_by_w[w - u];
            rhs *= Rat(1) / b0;
            q_by_w[w] = rhs;
            q += rhs;
        }
        return q;
    }
    Series& operator/=(const Series& o) { return *this = *this / o; }

    Series partial(int v) const {
        Series out(table_, std::max(0, order_ - table_->weight(v)));
        for (const auto& [m, c] : terms_) {
            if (m[v] == 0) continue;
            Mono d = m;
            d[v] -= 1;
            out.terms_.emplace(std::move(d), c * m[v]);
        }
        return out;
    }

    Series integrate(int v) const {
        Series out(table_, order_);
        for (const auto& [m, c] : terms_) {
            Mono u = m;
            u[v] += 1;
            if (out.mono_weight(u) > order_) continue;
            out.terms_.emplace(std::move(u), c / Rat(m[v] + 1));
        }
        return out;
    }

    // exp(f) for f with zero constant term
    Series exp() const {
        if (constant_term() != 0)
            throw std::domain_error("Series::exp: nonzero constant term (normalize first)");
        Series out = Series::constant(table_, order_, Rat(1));
        Series pw = Series::constant(table_, order_, Rat(1));
        Rat fact(1);
        for (int k = 1; k <= order_; ++k) {
            pw *= *this;
            if (pw.is_zero()) break;
            fact *= k;
            out += pw * (Rat(1) / fact);
        }
        return out;
    }

    // log(f) for f with constant term 1
    Series log() const {
        if (constant_term() != 1)
            throw std::domain_error("Series::log: constant term is not 1 (normalize first)");
        Series u = *this - Series::constant(table_, order_, Rat(1));
        Series out(table_, order_);
        Series pw = Series::constant(table_, order_, Rat(1));
        for (int k = 1; k <= order_; ++k) {
            pw *= u;
            if (pw.is_zero()) break;
            out += pw * (Rat((k % 2) ? 1 : -1, k));
        }
        return out;
    }

    // Substitute each variable by a series over the target table.  Absent
    // entries map the variable to zero.
    Series substituted(TablePtr target, int target_order,
                       const std::map<int, Series>& repl) const {
        Series out(target, target_order);
        std::map<std::pair<int, int>, Series> pow_cache;
        auto power_of = [&](int v, int e) {
            auto key = std::make_pair(v, e);
            auto it = pow_cache.find(key);
            if (it != pow_cache.end()) return it->second;
            Series p = Series::constant(target, target_order, Rat(1));
            auto rit = repl.find(v);
            if (rit == repl.end()) {
                p = Series(target, target_order);  // variable frozen at zero
            } else {
                for (int i = 0; i < e; ++i) p *= rit->second;
            }
            pow_cache.emplace(key, p);
            return p;
        };
        for (const auto& [m, c] : terms_) {
            Series term = Series::constant(target, target_order, c);
            bool dead = false;
            for (int v = 0; v < table_->size() && !dead; ++v) {
                if (m[v] == 0) continue;
                Series p = power_of(v, m[v]);
                if (p.is_zero()) {
                    dead = true;
                    break;
                }
                term *= p;
            }
            if (!dead) out += term;
        }
        return out;
    }

    // Maps a univariate series in q with only even exponents to the series in
    // x = q^2; throws if an odd power survived.
    Series even_decimated(TablePtr target) const {
        if (table_->size() != 1) throw std::logic_error("even_decimated: not univariate");
        Series out(target, order_ / 2);
        for (const auto& [m, c] : terms_) {
            if (m[0] % 2 != 0)
                throw std::domain_error("even_decimated: odd power did not cancel");
            Mono u(1, static_cast<uint16_t>(m[0] / 2));
            out.terms_.emplace(std::move(u), c);
        }
        return out;
    }

    // Univariate rescale v -> c*v.
    Series scaled_var(const Rat& c) const {
        if (table_->size() != 1) throw std::logic_error("scaled_var: not univariate");
        Series out(table_, order_);
        for (const auto& [m, c0] : terms_) out.terms_.emplace(m, c0 * rat_pow(c, m[0]));
        return out;
    }

    double eval_double(const std::vector<double>& xs) const {
        double acc = 0;
        for (const auto& [m, c] : terms_) {
            double t = rat_double(c);
            for (int v = 0; v < table_->size(); ++v)
                for (int e = 0; e < m[v]; ++e) t *= xs[v];
            acc += t;
        }
        return acc;
    }

    // First term in graded-lex order where *this and o differ, if any.
    std::optional<std::pair<Mono, std::pair<Rat, Rat>>> first_difference(const Series& o) const {
        check_same_table(o);
        int D = std::min(order_, o.order_);
        std::map<std::pair<int, Mono>, char> keys;
        for (const auto& [m, c] : terms_)
            if (mono_weight(m) <= D) keys[{mono_weight(m), m}] = 1;
        for (const auto& [m, c] : o.terms_)
            if (mono_weight(m) <= D) keys[{o.mono_weight(m), m}] = 1;
        for (const auto& [key, _] : keys) {
            const Mono& m = key.second;
            Rat a = coeff(m), b = o.coeff(m);
            if (a != b) return std::make_pair(m, std::make_pair(a, b));
        }
        return std::nullopt;
    }

    std::string mono_str(const Mono& m) const {
        std::string out;
        for (int v = 0; v < table_->size(); ++v) {
            if (m[v] == 0) continue;
            if (!out.empty()) out += " ";
            out += table_->name(v);
            if (m[v] > 1) out += "^" + std::to_string(m[v]);
        }
        return out.empty() ? "1" : out;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::map<std::pair<int, Mono>, Rat> ordered;
        for (const auto& [m, c] : terms_) ordered[{mono_weight(m), m}] = c;
        std::string out;
        for (const auto& [key, c] : ordered) {
            if (!out.empty()) out += " + ";
            out += "(" + c.get_str() + ")*" + mono_str(key.second);
        }
        return out;
    }

    friend bool operator==(const Series& a, const Series& b) {
        a.check_same_table(b);
        int D = std::min(a.order_, b.order_);
        return !a.truncated(D).first_difference(b.truncated(D)).has_value();
    }

   private:
    void check_same_table(const Series& o) const {
        if (table_ != o.table_) throw std::invalid_argument("Series: variable tables differ");
    }

    TablePtr table_;
    int order_ = 0;
    std::map<Mono, Rat> terms_;
};

// Random sparse series, for property tests and seeded probes.
inline Series random_series(TablePtr table, int order, std::mt19937& rng, int n_terms = 6,
                            bool unit_constant = false) {
    Series out = unit_constant ? Series::constant(table, order, Rat(1)) : Series(table, order);
    std::uniform_int_distribution<int> expo(0, 2);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    for (int t = 0; t < n_terms; ++t) {
        Mono m(table->size(), 0);
        int w = 0;
        for (int v = 0; v < table->size(); ++v) {
            m[v] = static_cast<uint16_t>(expo(rng));
            w += m[v] * table->weight(v);
        }
        int n = num(rng);
        if (n == 0) n = 1;
        Rat c = rat(n, den(rng));
        if (w > order || (unit_constant && w == 0)) continue;
        Series tmp(table, order);
        tmp.set_coeff(m, c);
        out += tmp;
    }
    return out;
}

}  // namespace ttlab

#endif
