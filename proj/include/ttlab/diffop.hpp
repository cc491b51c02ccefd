#ifndef TTLAB_DIFFOP_HPP
#define TTLAB_DIFFOP_HPP

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "ttlab/series.hpp"

namespace ttlab {

// Formal linear combination of normal-ordered monomial operators
// c * u^mult * d^ders (all multiplications to the left of all partials).
// Application is linear; composition produces the normal-ordered form via
// the Leibniz rule, so commutators are exact.
class DiffOp {
   public:
    struct Term {
        Rat c;
        Mono mult;
        Mono ders;
    };

    explicit DiffOp(TablePtr table) : table_(std::move(table)) {}

    TablePtr table() const { return table_; }
    const std::vector<Term>& terms() const { return terms_; }

    static DiffOp zero(TablePtr table) { return DiffOp(std::move(table)); }
    static DiffOp constant(TablePtr table, Rat c) {
        DiffOp op(std::move(table));
        op.add_term(std::move(c), Mono(op.table_->size(), 0), Mono(op.table_->size(), 0));
        return op;
    }
    // c * t_v^e as a multiplication operator
    static DiffOp mult(TablePtr table, int v, int e, Rat c = Rat(1)) {
        DiffOp op(std::move(table));
        Mono m(op.table_->size(), 0), d(op.table_->size(), 0);
        m[v] = static_cast<uint16_t>(e);
        op.add_term(std::move(c), std::move(m), std::move(d));
        return op;
    }
    // c * d/dt_v
    static DiffOp partial(TablePtr table, int v, Rat c = Rat(1)) {
        DiffOp op(std::move(table));
        Mono m(op.table_->size(), 0), d(op.table_->size(), 0);
        d[v] = 1;
        op.add_term(std::move(c), std::move(m), std::move(d));
        return op;
    }

    void add_term(Rat c, Mono mult_, Mono ders_) {
        if (c == 0) return;
        terms_.push_back(Term{std::move(c), std::move(mult_), std::move(ders_)});
    }

    DiffOp& operator+=(const DiffOp& o) {
        check(o);
        for (const auto& t : o.terms_) terms_.push_back(t);
        normalize();
        return *this;
    }
    DiffOp& operator-=(const DiffOp& o) { return *this += o * Rat(-1); }
    friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
    friend DiffOp operator*(DiffOp a, const Rat& c) {
        if (c == 0) {
            a.terms_.clear();
            return a;
        }
        for (auto& t : a.terms_) t.c *= c;
        return a;
    }
    friend DiffOp operator*(const Rat& c, DiffOp a) { return std::move(a) * c; }

    // Merge identical (mult, ders) shapes and drop zeros.
    void normalize() {
        std::map<std::pair<Mono, Mono>, Rat> acc;
        for (auto& t : terms_) acc[{t.mult, t.ders}] += t.c;
        terms_.clear();
        for (auto& [key, c] : acc)
            if (c != 0) terms_.push_back(Term{c, key.first, key.second});
    }

    // Weight added by a term (negative when the term lowers weight).
    int term_shift(const Term& t) const {
        int s = 0;
        for (int v = 0; v < table_->size(); ++v)
            s += (t.mult[v] - t.ders[v]) * table_->weight(v);
        return s;
    }

    // Exact application; result truncated at the order the input guarantees,
    // i.e. input order plus the worst (most negative) weight shift.  The
    // monomial multiplication is applied as an exponent shift so that a term
    // like t_9 d/dt_10 keeps its full validity even though the intermediate
    // derivative alone is exact only to a very low weight.
    Series apply(const Series& f) const {
        const int nv = table_->size();
        int D = f.order();
        int valid = D;
        for (const auto& t : terms_) valid = std::min(valid, D + term_shift(t));
        Series out(table_, std::max(0, valid));
        for (const auto& t : terms_) {
            Series cur = f;
            for (int v = 0; v < nv; ++v)
                for (int rep = 0; rep < t.ders[v]; ++rep) cur = cur.partial(v);
            if (cur.is_zero()) continue;
            Series term(table_, out.order());
            for (const auto& [m, c] : cur.terms()) {
                Mono mm = m;
                for (int v = 0; v < nv; ++v) mm[v] = static_cast<uint16_t>(mm[v] + t.mult[v]);
                term.set_coeff(std::move(mm), c * t.c);  // shift is injective
            }
            out += term;
        }
        return out;
    }

    // Normal-ordered composition (this then acting after `o`):
    // (c1 u^a d^b)(c2 u^g d^e) = sum_k c1 c2 C(b,k) (g)_k u^{a+g-k} d^{b-k+e}.
    DiffOp compose(const DiffOp& o) const {
        check(o);
        DiffOp out(table_);
        const int nv = table_->size();
        for (const auto& lhs : terms_) {
            for (const auto& rhs : o.terms_) {
                // iterate over contraction exponents k <= min(lhs.ders, rhs.mult)
                Mono kmax(nv, 0);
                for (int v = 0; v < nv; ++v)
                    kmax[v] = std::min(lhs.ders[v], rhs.mult[v]);
                Mono k(nv, 0);
                auto rec = [&](auto&& self, int v) -> void {
                    if (v == nv) {
                        Rat c = lhs.c * rhs.c;
                        for (int u = 0; u < nv; ++u) {
                            c *= Rat(binomial(lhs.ders[u], k[u]));
                            c *= Rat(falling(rhs.mult[u], k[u]));
                        }
                        if (c == 0) return;
                        Mono m(nv, 0), d(nv, 0);
                        for (int u = 0; u < nv; ++u) {
                            m[u] = static_cast<uint16_t>(lhs.mult[u] + rhs.mult[u] - k[u]);
                            d[u] = static_cast<uint16_t>(lhs.ders[u] - k[u] + rhs.ders[u]);
                        }
                        out.add_term(std::move(c), std::move(m), std::move(d));
                        return;
                    }
                    for (k[v] = 0; k[v] <= kmax[v]; ++k[v]) self(self, v + 1);
                    k[v] = 0;
                };
                rec(rec, 0);
            }
        }
        out.normalize();
        return out;
    }

    DiffOp commutator(const DiffOp& o) const { return compose(o) - o.compose(*this); }

    bool operator==(const DiffOp& o) const {
        DiffOp d = *this - o;
        return d.terms_.empty();
    }

   private:
    void check(const DiffOp& o) const {
        if (table_ != o.table_) throw std::invalid_argument("DiffOp: variable tables differ");
    }

    TablePtr table_;
    std::vector<Term> terms_;
};

}  // namespace ttlab

#endif
