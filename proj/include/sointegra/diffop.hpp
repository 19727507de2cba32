#pragma once

#include "pauli.hpp"

#include <map>
#include <utility>
#include <vector>

namespace sointegra {

// derivative multi-index (orders in d/dx, d/dy, d/dz)
using DIdx = std::array<int, 3>;

namespace detail {

inline long binomial(int n, int k) {
    long r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

// product of per-component binomials C(a_i, g_i)
inline long multi_binomial(const DIdx& a, const DIdx& g) {
    return binomial(a[0], g[0]) * binomial(a[1], g[1]) * binomial(a[2], g[2]);
}

} // namespace detail

// Normal-ordered matrix differential operator: sum over multi-indices of
// PauliCoeff * d^idx, with all function coefficients left of all derivatives.
class DiffOp {
  public:
    DiffOp() = default;

    static DiffOp zero() { return DiffOp(); }
    static DiffOp coefficient(PauliCoeff p) { return derivative({0, 0, 0}, std::move(p)); }
    static DiffOp scalar(FieldC f) { return coefficient(PauliCoeff(std::move(f))); }
    static DiffOp identity() { return scalar(FieldC::one()); }
    static DiffOp derivative(DIdx idx, PauliCoeff p = PauliCoeff(FieldC::one())) {
        DiffOp d;
        d.add_term(idx, std::move(p));
        return d;
    }

    const std::map<DIdx, PauliCoeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int momentum_order() const {
        int o = 0;
        for (auto& [idx, p] : terms_) o = std::max(o, idx[0] + idx[1] + idx[2]);
        return o;
    }

    void add_term(const DIdx& idx, PauliCoeff p) {
        if (p.is_zero()) return;
        auto it = terms_.find(idx);
        if (it == terms_.end()) {
            terms_.emplace(idx, std::move(p));
        } else {
            it->second = it->second + p;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const PauliCoeff& coefficient_at(const DIdx& idx) const {
        static const PauliCoeff kZero{};
        auto it = terms_.find(idx);
        return it == terms_.end() ? kZero : it->second;
    }

    bool operator==(const DiffOp& o) const { return terms_ == o.terms_; }
    bool operator!=(const DiffOp& o) const { return !(*this == o); }

    DiffOp operator-() const {
        DiffOp r;
        for (auto& [idx, p] : terms_) r.terms_.emplace(idx, -p);
        return r;
    }
    DiffOp& operator+=(const DiffOp& o) {
        for (auto& [idx, p] : o.terms_) add_term(idx, p);
        return *this;
    }
    DiffOp& operator-=(const DiffOp& o) {
        for (auto& [idx, p] : o.terms_) add_term(idx, -p);
        return *this;
    }
    friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }

    DiffOp scaled(const FieldC& f) const {
        DiffOp r;
        if (f.is_zero()) return r;
        for (auto& [idx, p] : terms_) r.add_term(idx, p.scaled(f));
        return r;
    }

    // d^a (Q d^b) = sum over g <= a of C(a,g) (d^(a-g) Q) d^(g+b)
    friend DiffOp compose(const DiffOp& a, const DiffOp& b) {
        DiffOp out;
        for (auto& [bidx, bq] : b.terms_) {
            std::map<DIdx, PauliCoeff> derivs;
            derivs.emplace(DIdx{0, 0, 0}, bq);
            for (auto& [aidx, ap] : a.terms_) {
                DIdx g{};
                for (g[0] = 0; g[0] <= aidx[0]; ++g[0])
                    for (g[1] = 0; g[1] <= aidx[1]; ++g[1])
                        for (g[2] = 0; g[2] <= aidx[2]; ++g[2]) {
                            DIdx d{aidx[0] - g[0], aidx[1] - g[1], aidx[2] - g[2]};
                            const PauliCoeff& dq = derived(derivs, d);
                            if (dq.is_zero()) continue;
                            long m = detail::multi_binomial(aidx, g);
                            PauliCoeff term = ap * dq;
                            if (m != 1) term = term.scaled(FieldC::from_int(m));
                            out.add_term({g[0] + bidx[0], g[1] + bidx[1], g[2] + bidx[2]},
                                         std::move(term));
                        }
            }
        }
        return out;
    }

    friend DiffOp commutator(const DiffOp& a, const DiffOp& b) {
        return compose(a, b) - compose(b, a);
    }
    friend DiffOp anticommutator(const DiffOp& a, const DiffOp& b) {
        return compose(a, b) + compose(b, a);
    }

    // formal adjoint under integration by parts: (P d^a)+ = (-1)^|a| d^a (P+ .)
    DiffOp adjoint() const {
        DiffOp out;
        for (auto& [aidx, ap] : terms_) {
            PauliCoeff ph = ap.hermitian();
            std::map<DIdx, PauliCoeff> derivs;
            derivs.emplace(DIdx{0, 0, 0}, std::move(ph));
            int sign = ((aidx[0] + aidx[1] + aidx[2]) % 2 == 0) ? 1 : -1;
            DIdx g{};
            for (g[0] = 0; g[0] <= aidx[0]; ++g[0])
                for (g[1] = 0; g[1] <= aidx[1]; ++g[1])
                    for (g[2] = 0; g[2] <= aidx[2]; ++g[2]) {
                        DIdx d{aidx[0] - g[0], aidx[1] - g[1], aidx[2] - g[2]};
                        const PauliCoeff& dq = derived(derivs, d);
                        if (dq.is_zero()) continue;
                        long m = sign * detail::multi_binomial(aidx, g);
                        out.add_term(g, dq.scaled(FieldC::from_int(m)));
                    }
        }
        return out;
    }

    // all coefficients at the given total derivative order
    std::vector<std::pair<DIdx, PauliCoeff>> momentum_coefficients(int order) const {
        std::vector<std::pair<DIdx, PauliCoeff>> out;
        for (auto& [idx, p] : terms_)
            if (idx[0] + idx[1] + idx[2] == order) out.emplace_back(idx, p);
        return out;
    }

    std::string raw_str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto& [idx, p] : terms_) {
            if (!s.empty()) s += "\n";
            s += "d(" + std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "," +
                 std::to_string(idx[2]) + ") " + p.raw_str();
        }
        return s;
    }

  private:
    // lazily computed coordinate derivatives of a fixed coefficient
    static const PauliCoeff& derived(std::map<DIdx, PauliCoeff>& memo, const DIdx& d) {
        auto it = memo.find(d);
        if (it != memo.end()) return it->second;
        for (int j = 0; j < 3; ++j) {
            if (d[j] == 0) continue;
            DIdx prev = d;
            --prev[j];
            const PauliCoeff& base = derived(memo, prev);
            Var v = (j == 0) ? Var::X : (j == 1 ? Var::Y : Var::Z);
            return memo.emplace(d, base.differentiate(v)).first->second;
        }
        return memo.at(d);
    }

    std::map<DIdx, PauliCoeff> terms_;
};

} // namespace sointegra
