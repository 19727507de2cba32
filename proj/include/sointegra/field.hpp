#pragma once

#include <map>
#include <optional>
#include <string>
#include <type_traits>

#include "poly.hpp"

namespace sointegra {

struct EvalError : Error {
    using Error::Error;
};

// point with exact rational coordinates; radical values are derived and must
// come out rational, otherwise evaluation reports an error
struct EvalPoint {
    BigRational x{0}, y{0}, z{0};
    BigRational r{0}; // used by the radial context only
    std::map<Var, BigRational> params;

    EvalPoint& with(Var v, BigRational value) {
        params[v] = std::move(value);
        return *this;
    }
};

inline EvalPoint cartesian_point(BigRational x, BigRational y, BigRational z) {
    EvalPoint p;
    p.x = std::move(x);
    p.y = std::move(y);
    p.z = std::move(z);
    return p;
}

inline EvalPoint radial_point(BigRational r) {
    EvalPoint p;
    p.r = std::move(r);
    return p;
}

// Element of the rational-function field with radicals r, s, t adjoined.
// Canonical form: numerator and denominator in lowest terms, denominator
// radical-free with real coefficients and leading coefficient +1.
template <class Ctx>
class FieldElem {
  public:
    using P = Poly<Ctx>;

    FieldElem() : num_(P::zero()), den_(P::one()) {}

    FieldElem(P num, P den) { canonicalize(std::move(num), std::move(den)); }

    static FieldElem zero() { return FieldElem(); }
    static FieldElem one() { return from_int(1); }
    static FieldElem from_int(long v) { return reduced(P::constant(GaussRat(v)), P::one()); }
    static FieldElem from_rational(BigRational q) {
        return reduced(P::constant(GaussRat(std::move(q))), P::one());
    }
    static FieldElem from_coeff(GaussRat c) { return reduced(P::constant(std::move(c)), P::one()); }
    static FieldElem i() { return from_coeff(GaussRat::i()); }
    static FieldElem var(Var v) { return reduced(P::variable(v), P::one()); }

    const P& numerator() const { return num_; }
    const P& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_real() const { return num_.is_real(); }
    bool has_var(Var v) const { return num_.has_var(v) || den_.has_var(v); }
    GaussRat constant_value() const {
        if (!is_constant()) throw Error("field element is not constant");
        return num_.constant_value() / den_.constant_value();
    }

    bool operator==(const FieldElem& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    FieldElem operator-() const { return reduced(-num_, den_); }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return FieldElem(a.num_ + b.num_, a.den_);
        P g = detail::plain_gcd(a.den_, b.den_);
        if (g.is_constant()) return reduced_monic(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
        P bd = *b.den_.divided_by(g);
        P t = a.num_ * bd + b.num_ * *a.den_.divided_by(g);
        if (t.is_zero()) return zero();
        P h = fraction_gcd(t, g);
        if (h.is_constant()) return reduced_monic(t, a.den_ * bd);
        return reduced_monic(*t.divided_by(h), *a.den_.divided_by(h) * bd);
    }
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        P g1 = fraction_gcd(a.num_, b.den_);
        P g2 = fraction_gcd(b.num_, a.den_);
        P n = (g1.is_constant() ? a.num_ : *a.num_.divided_by(g1)) *
              (g2.is_constant() ? b.num_ : *b.num_.divided_by(g2));
        P d = (g2.is_constant() ? a.den_ : *a.den_.divided_by(g2)) *
              (g1.is_constant() ? b.den_ : *b.den_.divided_by(g1));
        if (a.num_.has_radical() || b.num_.has_radical()) return FieldElem(std::move(n), std::move(d));
        return reduced_monic(std::move(n), std::move(d));
    }
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b) {
        if (b.is_zero()) throw Error("division by zero");
        return a * FieldElem(b.den_, b.num_);
    }
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
    FieldElem& operator/=(const FieldElem& o) { return *this = *this / o; }

    FieldElem pow(int e) const {
        if (e < 0) return one() / pow(-e);
        FieldElem out = one(), base = *this;
        while (e > 0) {
            if (e & 1) out *= base;
            if (e >>= 1) base *= base;
        }
        return out;
    }

    FieldElem conj() const { return reduced(num_.conj(), den_); }
    FieldElem real_part() const { return FieldElem(num_.real_part(), den_); }
    FieldElem imag_part() const { return FieldElem(num_.imag_part(), den_); }

    // derivative of a polynomial as a field element (chain rule through the
    // radicals: dr/dx = x*r/q, ds/dx = beta*x*s/(1+beta*q), ...)
    static FieldElem poly_derivative(const P& p, Var wrt) {
        bool used[3] = {false, false, false};
        const Var rads[3] = {Var::R, Var::S, Var::T};
        for (auto& [m, c] : p.terms())
            for (int k = 0; k < 3; ++k)
                if (Ctx::is_radical(rads[k]) && m[static_cast<int>(rads[k])] > 0) used[k] = true;
        P D = P::one(), sq[3], dsq[3], cof[3];
        for (int k = 0; k < 3; ++k)
            if (used[k]) {
                sq[k] = P::radical_square(rads[k]);
                dsq[k] = plain_derivative(sq[k], wrt);
                D *= sq[k];
            }
        for (int k = 0; k < 3; ++k)
            if (used[k]) {
                cof[k] = P::one();
                for (int j = 0; j < 3; ++j)
                    if (used[j] && j != k) cof[k] *= sq[j];
            }
        P N;
        int iw = static_cast<int>(wrt);
        for (auto& [m, c] : p.terms()) {
            if (m[iw] > 0) {
                Mono m2 = m;
                --m2[iw];
                N += P::term(m2, c * GaussRat(m[iw])) * D;
            }
            for (int k = 0; k < 3; ++k) {
                if (!used[k] || m[static_cast<int>(rads[k])] == 0) continue;
                N += P::term(m, c / GaussRat(2)) * dsq[k] * cof[k];
            }
        }
        return FieldElem(std::move(N), std::move(D));
    }

    FieldElem differentiate(Var wrt) const {
        if constexpr (std::is_same_v<Ctx, CartesianCtx>) {
            if (wrt != Var::X && wrt != Var::Y && wrt != Var::Z)
                throw Error("derivative only in x, y, z");
        } else {
            if (wrt != Var::R) throw Error("radial derivative only in r");
        }
        FieldElem np = poly_derivative(num_, wrt);
        P dd = plain_derivative(den_, wrt);
        // (n/d)' = (n'*d - n*d') / d^2
        P n = np.num_ * den_ - num_ * dd * np.den_;
        P d = np.den_ * den_ * den_;
        return FieldElem(std::move(n), std::move(d));
    }

    GaussRat eval_exact(const EvalPoint& pt) const {
        auto value_of = [&](Var v) -> GaussRat { return GaussRat(scalar_value(pt, v)); };
        GaussRat d = den_.eval(value_of);
        if (d.is_zero()) throw EvalError("pole: denominator vanishes at the evaluation point");
        return num_.eval(value_of) / d;
    }

    FieldElem substitute_param(Var v, const BigRational& value) const {
        if (!is_parameter(v)) throw Error("only parameters can be substituted");
        if (v == Var::Beta && (num_.has_var(Var::S) || den_.has_var(Var::S)))
            throw Error("cannot substitute beta while s is present");
        if (v == Var::Cst && (num_.has_var(Var::T) || den_.has_var(Var::T)))
            throw Error("cannot substitute c while t is present");
        GaussRat g{value};
        return FieldElem(num_.substitute(v, g), den_.substitute(v, g));
    }

    // diagnostic form: num / den with monomials in descending order
    std::string raw_str() const {
        std::string out = poly_raw_str(num_);
        if (!den_.is_constant() || !den_.constant_value().is_one())
            out = "(" + out + ") / (" + poly_raw_str(den_) + ")";
        return out;
    }

    static std::string poly_raw_str(const P& p) {
        if (p.is_zero()) return "0";
        std::string out;
        for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
            auto& [m, c] = *it;
            if (!out.empty()) out += " + ";
            std::string mono;
            for (int i = 0; i < kVarCount; ++i) {
                if (m[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += var_name(static_cast<Var>(i));
                if (m[i] > 1) mono += "^" + std::to_string(m[i]);
            }
            std::string cs = c.str();
            if (mono.empty())
                out += cs;
            else if (cs == "1")
                out += mono;
            else if (cs == "-1")
                out += "-" + mono;
            else
                out += "(" + cs + ")*" + mono;
        }
        return out;
    }

  private:
    static P plain_derivative(const P& p, Var wrt) {
        P out;
        int iw = static_cast<int>(wrt);
        for (auto& [m, c] : p.terms()) {
            if (m[iw] == 0) continue;
            Mono m2 = m;
            --m2[iw];
            out.add_term(m2, c * GaussRat(m[iw]));
        }
        return out;
    }

    BigRational scalar_value(const EvalPoint& pt, Var v) const {
        switch (v) {
            case Var::X:
            case Var::Y:
            case Var::Z:
                if constexpr (std::is_same_v<Ctx, RadialCtx>)
                    throw EvalError("cartesian coordinate in radial element");
                return v == Var::X ? pt.x : (v == Var::Y ? pt.y : pt.z);
            case Var::R: {
                if constexpr (std::is_same_v<Ctx, RadialCtx>) return pt.r;
                BigRational q = pt.x * pt.x + pt.y * pt.y + pt.z * pt.z;
                auto root = sqrt_exact(q);
                if (!root) throw EvalError("radius is irrational at the evaluation point");
                return *root;
            }
            case Var::S: {
                BigRational r2 = radius_squared(pt);
                auto it = pt.params.find(Var::Beta);
                if (it == pt.params.end()) throw EvalError("beta not assigned");
                auto root = sqrt_exact(1 + it->second * r2);
                if (!root) throw EvalError("s = sqrt(1+beta*r^2) is irrational at the point");
                return *root;
            }
            case Var::T: {
                BigRational r2 = radius_squared(pt);
                auto it = pt.params.find(Var::Cst);
                if (it == pt.params.end()) throw EvalError("c not assigned");
                auto root = sqrt_exact(4 * r2 * r2 + it->second);
                if (!root) throw EvalError("t = sqrt(4r^4+c) is irrational at the point");
                return *root;
            }
            default: {
                auto it = pt.params.find(v);
                if (it == pt.params.end())
                    throw EvalError(std::string("parameter not assigned: ") + std::string(var_name(v)));
                return it->second;
            }
        }
    }

    static BigRational radius_squared(const EvalPoint& pt) {
        if constexpr (std::is_same_v<Ctx, RadialCtx>) return pt.r * pt.r;
        return pt.x * pt.x + pt.y * pt.y + pt.z * pt.z;
    }

    static FieldElem reduced(P num, P den) {
        FieldElem f(no_canon{});
        if (num.is_zero()) {
            f.num_ = P::zero();
            f.den_ = P::one();
            return f;
        }
        f.num_ = std::move(num);
        f.den_ = std::move(den);
        return f;
    }

    static FieldElem reduced_monic(P num, P den) {
        if (num.is_zero()) return zero();
        const GaussRat& lc = den.lead_coeff();
        if (!lc.is_one()) {
            GaussRat inv = GaussRat(1) / lc;
            num = num.scaled(inv);
            den = den.scaled(inv);
        }
        return reduced(std::move(num), std::move(den));
    }

    void canonicalize(P num, P den) {
        if (den.is_zero()) throw Error("division by zero");
        if (num.is_zero()) {
            num_ = P::zero();
            den_ = P::one();
            return;
        }
        // rationalize: clear radicals from the denominator
        while (den.has_radical()) {
            Var rad = Var::R;
            for (Var v : {Var::T, Var::S, Var::R})
                if (Ctx::is_radical(v) && den.has_var(v)) {
                    rad = v;
                    break;
                }
            int iv = static_cast<int>(rad);
            P conj;
            for (auto& [m, c] : den.terms()) {
                if (m[iv] > 0)
                    conj.add_term(m, -c);
                else
                    conj.add_term(m, c);
            }
            num *= conj;
            den *= conj;
        }
        // clear the imaginary unit from the denominator
        if (!den.is_real()) {
            P dc = den.conj();
            num *= dc;
            den *= dc;
        }
        P g = fraction_gcd(num, den);
        if (!g.is_constant()) {
            num = *num.divided_by(g);
            den = *den.divided_by(g);
        }
        *this = reduced_monic(std::move(num), std::move(den));
    }

    struct no_canon {};
    explicit FieldElem(no_canon) {}

    P num_, den_;
};

using FieldC = FieldElem<CartesianCtx>;
using FieldR = FieldElem<RadialCtx>;

// embed a radial function into the Cartesian field (r^2 collapses to
// x^2+y^2+z^2 on the way in)
inline FieldC radial_to_cartesian(const FieldR& f) {
    auto lift = [](const Poly<RadialCtx>& p) {
        Poly<CartesianCtx> out;
        for (auto& [m, c] : p.terms()) out.add_term(m, c);
        return out;
    };
    return FieldC(lift(f.numerator()), lift(f.denominator()));
}

} // namespace sointegra
