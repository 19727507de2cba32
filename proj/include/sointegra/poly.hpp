#pragma once

#include <algorithm>
#include <cassert>
#include <climits>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "rational.hpp"
#include "variables.hpp"

namespace sointegra {

// Geometry contexts. Cartesian treats r as the radical sqrt(x^2+y^2+z^2);
// the radial context keeps r as a free variable (univariate radial functions).
struct CartesianCtx {
    static constexpr bool is_radical(Var v) { return v == Var::R || v == Var::S || v == Var::T; }
    static constexpr bool allows(Var) { return true; }
};

struct RadialCtx {
    static constexpr bool is_radical(Var v) { return v == Var::S || v == Var::T; }
    static constexpr bool allows(Var v) { return v != Var::X && v != Var::Y && v != Var::Z; }
};

// Multivariate polynomial over Gaussian rationals with the context's radical
// relations applied eagerly: every stored monomial has exponent 0 or 1 in each
// radical variable.
template <class Ctx>
class Poly {
  public:
    using Terms = std::map<Mono, GaussRat>;

    Poly() = default;

    static Poly zero() { return Poly(); }
    static Poly constant(GaussRat c) {
        Poly p;
        if (!c.is_zero()) p.terms_[kUnitMono] = std::move(c);
        return p;
    }
    static Poly one() { return constant(GaussRat(1)); }
    static Poly variable(Var v, int e = 1) {
        assert(Ctx::allows(v));
        Poly p;
        p.add_term(mono_of(v, e), GaussRat(1));
        return p;
    }
    static Poly term(Mono m, GaussRat c) {
        Poly p;
        p.add_term(m, std::move(c));
        return p;
    }

    // defining polynomial of radical^2, already in reduced form
    static Poly radical_square(Var v);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == kUnitMono);
    }
    GaussRat constant_value() const {
        if (terms_.empty()) return GaussRat(0);
        assert(is_constant());
        return terms_.begin()->second;
    }
    size_t size() const { return terms_.size(); }

    bool has_var(Var v) const {
        int i = static_cast<int>(v);
        for (auto& [m, c] : terms_)
            if (m[i] > 0) return true;
        return false;
    }
    bool has_radical() const {
        for (auto& [m, c] : terms_)
            for (Var rv : {Var::R, Var::S, Var::T})
                if (Ctx::is_radical(rv) && m[static_cast<int>(rv)] > 0) return true;
        return false;
    }
    bool is_real() const {
        for (auto& [m, c] : terms_)
            if (c.im != 0) return false;
        return true;
    }
    int degree(Var v) const {
        int i = static_cast<int>(v), d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[i]));
        return d;
    }
    int total_degree() const {
        int d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, mono_total_degree(m));
        return d;
    }

    void add_term(Mono m, GaussRat c) {
        if (c.is_zero()) return;
        for (Var rv : {Var::R, Var::S, Var::T}) {
            if (!Ctx::is_radical(rv)) continue;
            int i = static_cast<int>(rv);
            if (m[i] >= 2) {
                int half = m[i] / 2;
                m[i] = static_cast<int16_t>(m[i] % 2);
                Poly sq = radical_square(rv).pow(half);
                for (auto& [m2, c2] : sq.terms_) add_term(mono_mul(m, m2), c * c2);
                return;
            }
        }
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly operator-() const {
        Poly p;
        for (auto& [m, c] : terms_) p.terms_.emplace(m, -c);
        return p;
    }
    Poly& operator+=(const Poly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly p;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) p.add_term(mono_mul(ma, mb), ca * cb);
        return p;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const GaussRat& c) const {
        Poly p;
        if (c.is_zero()) return p;
        for (auto& [m, k] : terms_) p.terms_.emplace(m, k * c);
        return p;
    }
    Poly pow(int e) const {
        assert(e >= 0);
        Poly out = one(), base = *this;
        while (e > 0) {
            if (e & 1) out *= base;
            if (e >>= 1) base *= base;
        }
        return out;
    }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly conj() const {
        Poly p;
        for (auto& [m, c] : terms_) p.terms_.emplace(m, c.conj());
        return p;
    }
    Poly real_part() const {
        Poly p;
        for (auto& [m, c] : terms_)
            if (c.re != 0) p.terms_.emplace(m, GaussRat(c.re));
        return p;
    }
    Poly imag_part() const {
        Poly p;
        for (auto& [m, c] : terms_)
            if (c.im != 0) p.terms_.emplace(m, GaussRat(c.im));
        return p;
    }

    // lexicographically greatest monomial and its coefficient
    const Mono& lead_mono() const {
        assert(!terms_.empty());
        return terms_.rbegin()->first;
    }
    const GaussRat& lead_coeff() const {
        assert(!terms_.empty());
        return terms_.rbegin()->second;
    }

    GaussRat eval(const std::function<GaussRat(Var)>& value_of) const {
        GaussRat acc(0);
        for (auto& [m, c] : terms_) {
            GaussRat t = c;
            for (int i = 0; i < kVarCount; ++i)
                if (m[i] != 0) t = t * value_of(static_cast<Var>(i)).pow(m[i]);
            acc += t;
        }
        return acc;
    }

    Poly substitute(Var v, const GaussRat& value) const {
        assert(!Ctx::is_radical(v));
        int i = static_cast<int>(v);
        Poly p;
        for (auto& [m, c] : terms_) {
            Mono m2 = m;
            m2[i] = 0;
            p.add_term(m2, c * value.pow(m[i]));
        }
        return p;
    }

    // positive rational content (gcd of all numerators / lcm of denominators,
    // taken over both real and imaginary coefficient parts)
    BigRational content_rational() const {
        BigInt gn = 0, ld = 1;
        auto fold = [&](const BigRational& q) {
            if (q == 0) return;
            gn = boost::multiprecision::gcd(gn, boost::multiprecision::numerator(q));
            BigInt d = boost::multiprecision::denominator(q);
            ld = ld / boost::multiprecision::gcd(ld, d) * d;
        };
        for (auto& [m, c] : terms_) {
            fold(c.re);
            fold(c.im);
        }
        if (gn == 0) return BigRational(1);
        return BigRational(gn, ld);
    }

    // exact division by a radical-free divisor; nullopt if not divisible
    std::optional<Poly> divided_by(const Poly& g) const {
        assert(!g.is_zero());
        assert(!g.has_radical());
        if (is_zero()) return zero();
        if (g.is_constant()) {
            GaussRat inv = GaussRat(1) / g.constant_value();
            return scaled(inv);
        }
        // split off radical monomial factors: each component is divided in the
        // plain subring, where leading-term division terminates
        std::map<Mono, Poly> comps = split_radical_components();
        Poly out;
        for (auto& [rad, comp] : comps) {
            std::optional<Poly> q = divide_plain(comp, g);
            if (!q) return std::nullopt;
            for (auto& [m, c] : q->terms_) out.add_term(mono_mul(m, rad), c);
        }
        return out;
    }

    // radical monomial -> radical-free cofactor
    std::map<Mono, Poly> split_radical_components() const {
        std::map<Mono, Poly> comps;
        for (auto& [m, c] : terms_) {
            Mono rad{}, plain = m;
            for (Var rv : {Var::R, Var::S, Var::T}) {
                if (!Ctx::is_radical(rv)) continue;
                int i = static_cast<int>(rv);
                rad[i] = m[i];
                plain[i] = 0;
            }
            comps[rad].terms_[plain] = c;
        }
        return comps;
    }

  private:
    // plain leading-term division; both radical-free
    static std::optional<Poly> divide_plain(const Poly& f, const Poly& g) {
        Poly r = f, q;
        const Mono& gl = g.lead_mono();
        const GaussRat& gc = g.lead_coeff();
        while (!r.is_zero()) {
            const Mono& rl = r.lead_mono();
            if (!mono_divides(gl, rl)) return std::nullopt;
            Mono m = mono_div(rl, gl);
            GaussRat c = r.lead_coeff() / gc;
            q.add_term(m, c);
            Poly sub;
            for (auto& [mg, cg] : g.terms_) sub.terms_.emplace(mono_mul(m, mg), c * cg);
            r -= sub;
        }
        return q;
    }

    Terms terms_;
};

template <>
inline Poly<CartesianCtx> Poly<CartesianCtx>::radical_square(Var v) {
    using P = Poly<CartesianCtx>;
    P q;
    q.add_term(mono_of(Var::X, 2), GaussRat(1));
    q.add_term(mono_of(Var::Y, 2), GaussRat(1));
    q.add_term(mono_of(Var::Z, 2), GaussRat(1));
    switch (v) {
        case Var::R:
            return q;
        case Var::S: {
            P p = P::one();
            for (auto& [m, c] : q.terms()) p.add_term(mono_mul(m, mono_of(Var::Beta)), c);
            return p;
        }
        case Var::T: {
            P p = (q * q).scaled(GaussRat(4));
            p.add_term(mono_of(Var::Cst), GaussRat(1));
            return p;
        }
        default:
            assert(false && "not a radical");
            return P::zero();
    }
}

template <>
inline Poly<RadialCtx> Poly<RadialCtx>::radical_square(Var v) {
    using P = Poly<RadialCtx>;
    switch (v) {
        case Var::S: {
            P p = P::one();
            p.add_term(mono_mul(mono_of(Var::Beta), mono_of(Var::R, 2)), GaussRat(1));
            return p;
        }
        case Var::T: {
            P p;
            p.add_term(mono_of(Var::R, 4), GaussRat(4));
            p.add_term(mono_of(Var::Cst), GaussRat(1));
            return p;
        }
        default:
            assert(false && "not a radical");
            return P::zero();
    }
}

// ---- gcd over the plain (radical-free, real-coefficient) subring ----------

namespace detail {

// shared main variable with the shortest expected remainder sequence
template <class Ctx>
int shared_var(const Poly<Ctx>& a, const Poly<Ctx>& b) {
    int best = -1, score = INT_MAX;
    for (int i = 0; i < kVarCount; ++i) {
        Var v = static_cast<Var>(i);
        int da = a.degree(v), db = b.degree(v);
        if (da == 0 || db == 0) continue;
        int s = std::min(da, db);
        if (s < score) {
            score = s;
            best = i;
        }
    }
    return best;
}

template <class Ctx>
Mono mono_content(const Poly<Ctx>& p) {
    Mono g;
    bool first = true;
    for (auto& [m, c] : p.terms()) {
        if (first) {
            g = m;
            first = false;
        } else {
            for (int i = 0; i < kVarCount; ++i) g[i] = std::min(g[i], m[i]);
        }
    }
    return g;
}

template <class Ctx>
Poly<Ctx> strip_mono(const Poly<Ctx>& p, const Mono& m) {
    Poly<Ctx> out;
    for (auto& [mm, c] : p.terms()) out.add_term(mono_div(mm, m), c);
    return out;
}

// coefficients of f viewed as univariate in v (index = power)
template <class Ctx>
std::vector<Poly<Ctx>> uni_view(const Poly<Ctx>& f, Var v) {
    int iv = static_cast<int>(v);
    std::vector<Poly<Ctx>> out(static_cast<size_t>(f.degree(v)) + 1);
    for (auto& [m, c] : f.terms()) {
        Mono m2 = m;
        int e = m2[iv];
        m2[iv] = 0;
        out[static_cast<size_t>(e)].add_term(m2, c);
    }
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return out;
}

template <class Ctx>
Poly<Ctx> from_uni_view(const std::vector<Poly<Ctx>>& cs, Var v) {
    Poly<Ctx> f;
    for (size_t e = 0; e < cs.size(); ++e)
        for (auto& [m, c] : cs[e].terms()) f.add_term(mono_mul(m, mono_of(v, static_cast<int>(e))), c);
    return f;
}

// divide out rational content and fix the sign of the leading coefficient
template <class Ctx>
Poly<Ctx> normalize_assoc(const Poly<Ctx>& p) {
    if (p.is_zero()) return p;
    BigRational c = p.content_rational();
    if (p.lead_coeff().re < 0) c = -c;
    return p.scaled(GaussRat(BigRational(1) / c));
}

template <class Ctx>
Poly<Ctx> plain_gcd(Poly<Ctx> a, Poly<Ctx> b);

// Heuristic gcd over the integers: evaluate one variable at a large point,
// recurse, rebuild the candidate from its base-xi digits and accept it only
// if it exactly divides both inputs. Falls back to the remainder sequence
// when the candidate never verifies.
using HPoly = std::map<Mono, BigInt>;

inline BigInt hpoly_norm(const HPoly& p) {
    BigInt n = 0;
    for (auto& [m, c] : p) {
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (a > n) n = a;
    }
    return n;
}

inline long hpoly_degree(const HPoly& p, int iv) {
    long d = 0;
    for (auto& [m, c] : p) d = std::max<long>(d, m[iv]);
    return d;
}

inline HPoly hpoly_eval(const HPoly& p, int iv, const BigInt& xi) {
    long d = hpoly_degree(p, iv);
    std::vector<BigInt> pw(static_cast<size_t>(d) + 1);
    pw[0] = 1;
    for (long e = 1; e <= d; ++e) pw[static_cast<size_t>(e)] = pw[static_cast<size_t>(e - 1)] * xi;
    HPoly out;
    for (auto& [m, c] : p) {
        Mono m2 = m;
        int e = m2[iv];
        m2[iv] = 0;
        BigInt& slot = out[m2];
        slot += c * pw[static_cast<size_t>(e)];
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

// base-xi digit expansion with symmetric remainders; empty result means the
// expansion needs more than dcap+1 digits and the attempt should be rejected
inline HPoly hpoly_interp(HPoly g, int iv, const BigInt& xi, long dcap) {
    HPoly out;
    for (long e = 0; !g.empty(); ++e) {
        if (e > dcap) return HPoly{};
        for (auto it = g.begin(); it != g.end();) {
            BigInt r = it->second % xi;
            if (r < 0) r += xi;
            if (2 * r > xi) r -= xi;
            if (r != 0) {
                Mono m2 = it->first;
                m2[iv] = static_cast<int16_t>(e);
                out[m2] = r;
            }
            BigInt q = (it->second - r) / xi;
            if (q == 0)
                it = g.erase(it);
            else
                (it++)->second = std::move(q);
        }
    }
    return out;
}

inline BigInt hpoly_content(const HPoly& p) {
    BigInt c = 0;
    for (auto& [m, v] : p) {
        c = boost::multiprecision::gcd(c, v);
        if (c == 1) break;
    }
    return c;
}

inline void hpoly_primitive(HPoly& p) {
    BigInt c = hpoly_content(p);
    if (p.rbegin()->second < 0) c = -c;
    if (c != 0 && c != 1)
        for (auto& [m, v] : p) v /= c;
}

inline bool hpoly_divides(const HPoly& num, const HPoly& den) {
    if (den.size() == 1 && den.begin()->first == kUnitMono) return true;
    HPoly rem = num;
    auto [dm, dc] = *den.rbegin();
    while (!rem.empty()) {
        auto [nm, nc] = *rem.rbegin();
        if (!mono_divides(dm, nm)) return false;
        if (nc % dc != 0) return false;
        BigInt q = nc / dc;
        Mono shift = mono_div(nm, dm);
        for (auto& [m, c] : den) {
            Mono tm = mono_mul(m, shift);
            auto it = rem.find(tm);
            if (it == rem.end()) {
                rem.emplace(tm, -q * c);
            } else {
                it->second -= q * c;
                if (it->second == 0) rem.erase(it);
            }
        }
    }
    return true;
}

inline std::optional<HPoly> heu_gcd_rec(HPoly f, HPoly g, const std::vector<int>& vars,
                                        size_t vi) {
    // gcd(f, g) = gcd(content f, content g) * gcd(pp f, pp g)
    BigInt cf = hpoly_content(f), cg = hpoly_content(g);
    BigInt cont = boost::multiprecision::gcd(cf, cg);
    if (vi == vars.size()) {
        HPoly out;
        out[kUnitMono] = cont;
        return out;
    }
    if (cf != 1)
        for (auto& [m, v] : f) v /= cf;
    if (cg != 1)
        for (auto& [m, v] : g) v /= cg;

    int iv = vars[vi];
    BigInt nf = hpoly_norm(f), ng = hpoly_norm(g);
    long df = hpoly_degree(f, iv), dg = hpoly_degree(g, iv);
    long dcap = std::min(df, dg);
    BigInt xi = 2 * (nf < ng ? nf : ng) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        size_t bits = boost::multiprecision::msb(xi) + 1;
        if (bits * static_cast<size_t>(std::max(df, dg) + 1) > 4000000) return std::nullopt;
        HPoly fe = hpoly_eval(f, iv, xi), ge = hpoly_eval(g, iv, xi);
        if (!fe.empty() && !ge.empty()) {
            auto h = heu_gcd_rec(std::move(fe), std::move(ge), vars, vi + 1);
            if (!h) return std::nullopt;
            HPoly cand = hpoly_interp(std::move(*h), iv, xi, dcap);
            if (!cand.empty()) {
                hpoly_primitive(cand);
                if (hpoly_divides(f, cand) && hpoly_divides(g, cand)) {
                    if (cont != 1)
                        for (auto& [m, v] : cand) v *= cont;
                    return cand;
                }
            }
        }
        xi = xi * 73794 / 27011;
    }
    return std::nullopt;
}

template <class Ctx>
std::optional<Poly<Ctx>> heu_gcd(const Poly<Ctx>& a, const Poly<Ctx>& b) {
    if (!a.is_real() || !b.is_real()) return std::nullopt;
    Poly<Ctx> pa = normalize_assoc(a), pb = normalize_assoc(b);
    std::vector<std::pair<long, int>> order;
    for (int i = 0; i < kVarCount; ++i) {
        Var v = static_cast<Var>(i);
        long d = std::max<long>(pa.degree(v), pb.degree(v));
        if (d > 0) order.emplace_back(-d, i);
    }
    std::sort(order.begin(), order.end());
    std::vector<int> vars;
    vars.reserve(order.size());
    for (auto& [d, i] : order) vars.push_back(i);

    auto to_h = [](const Poly<Ctx>& p) {
        HPoly h;
        for (auto& [m, c] : p.terms()) {
            assert(boost::multiprecision::denominator(c.re) == 1);
            h[m] = boost::multiprecision::numerator(c.re);
        }
        return h;
    };
    auto r = heu_gcd_rec(to_h(pa), to_h(pb), vars, 0);
    if (!r) return std::nullopt;
    Poly<Ctx> out;
    for (auto& [m, c] : *r) out.add_term(m, GaussRat(BigRational(c)));
    return normalize_assoc(out);
}

template <class Ctx>
Poly<Ctx> content_of_list(const std::vector<Poly<Ctx>>& cs) {
    Poly<Ctx> g = Poly<Ctx>::zero();
    for (auto& c : cs) {
        if (c.is_zero()) continue;
        g = plain_gcd(g, c);
        if (g.is_constant() && !g.is_zero()) return Poly<Ctx>::one();
    }
    return g;
}

template <class Ctx>
std::vector<Poly<Ctx>> divide_list(const std::vector<Poly<Ctx>>& cs, const Poly<Ctx>& g) {
    std::vector<Poly<Ctx>> out;
    out.reserve(cs.size());
    for (auto& c : cs) {
        if (c.is_zero()) {
            out.push_back(c);
        } else {
            auto q = c.divided_by(g);
            assert(q);
            out.push_back(std::move(*q));
        }
    }
    return out;
}

template <class Ctx>
long degree_of_list(const std::vector<Poly<Ctx>>& v) {
    long d = static_cast<long>(v.size()) - 1;
    while (d >= 0 && v[static_cast<size_t>(d)].is_zero()) --d;
    return d;
}

// standard pseudo-remainder lb^(deg A - deg B + 1) * A mod B
template <class Ctx>
std::vector<Poly<Ctx>> prem(std::vector<Poly<Ctx>> A, const std::vector<Poly<Ctx>>& B) {
    size_t db = B.size() - 1;
    const Poly<Ctx>& lb = B.back();
    long da = degree_of_list(A);
    long needed = da - static_cast<long>(db) + 1, done = 0;
    while (da >= static_cast<long>(db)) {
        Poly<Ctx> la = A[static_cast<size_t>(da)];
        for (auto& c : A) c = c * lb;
        ++done;
        size_t shift = static_cast<size_t>(da) - db;
        for (size_t k = 0; k <= db; ++k) A[k + shift] -= la * B[k];
        long nd = degree_of_list(A);
        assert(nd < da);
        da = nd;
    }
    if (da < 0) {
        A.assign(1, Poly<Ctx>::zero());
        return A;
    }
    A.resize(static_cast<size_t>(da) + 1);
    if (done < needed) {
        Poly<Ctx> scale = lb.pow(static_cast<int>(needed - done));
        for (auto& c : A) c = c * scale;
    }
    return A;
}

template <class Ctx>
Poly<Ctx> gcd_core(const Poly<Ctx>& a, const Poly<Ctx>& b) {
    if (a.is_constant() || b.is_constant()) return Poly<Ctx>::one();
    int iv = shared_var(a, b);
    if (iv < 0) return Poly<Ctx>::one();
    Var v = static_cast<Var>(iv);

    auto A = uni_view(a, v), B = uni_view(b, v);
    Poly<Ctx> ca = content_of_list(A), cb = content_of_list(B);
    Poly<Ctx> d = plain_gcd(ca, cb);
    A = divide_list(A, ca);
    B = divide_list(B, cb);
    if (A.size() < B.size()) std::swap(A, B);

    // common case: the smaller primitive part already divides the larger
    Poly<Ctx> fb = from_uni_view(B, v);
    if (from_uni_view(A, v).divided_by(fb).has_value()) return d * normalize_assoc(fb);

    // subresultant polynomial remainder sequence
    Poly<Ctx> g = Poly<Ctx>::one(), h = Poly<Ctx>::one();
    while (true) {
        long db = degree_of_list(B);
        if (db == 0) return normalize_assoc(d);
        long delta = degree_of_list(A) - db;
        auto R = prem(A, B);
        if (degree_of_list(R) < 0) break;
        A = std::move(B);
        Poly<Ctx> divisor = g * h.pow(static_cast<int>(delta));
        B = divide_list(R, divisor);
        g = A.back();
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            auto q = g.pow(static_cast<int>(delta)).divided_by(h.pow(static_cast<int>(delta - 1)));
            assert(q);
            h = *q;
        }
    }
    Poly<Ctx> last = from_uni_view(B, v);
    Poly<Ctx> cl = content_of_list(B);
    auto pp = last.divided_by(cl);
    assert(pp);
    return normalize_assoc(d * *pp);
}

template <class Ctx>
Poly<Ctx> plain_gcd(Poly<Ctx> a, Poly<Ctx> b) {
    assert(!a.has_radical() && !b.has_radical());
    if (a.is_zero()) return normalize_assoc(b);
    if (b.is_zero()) return normalize_assoc(a);
    if (a.is_constant() || b.is_constant()) return Poly<Ctx>::one();

    Mono ma = mono_content(a), mb = mono_content(b), mg{};
    for (int i = 0; i < kVarCount; ++i) mg[i] = std::min(ma[i], mb[i]);
    Poly<Ctx> sa = strip_mono(a, ma), sb = strip_mono(b, mb);
    Poly<Ctx> core;
    if (auto h = heu_gcd(sa, sb))
        core = std::move(*h);
    else
        core = gcd_core(sa, sb);
    return normalize_assoc(core * Poly<Ctx>::term(mg, GaussRat(1)));
}

} // namespace detail

// gcd of a numerator (arbitrary element) with a radical-free real denominator;
// used to keep field elements in lowest terms
template <class Ctx>
Poly<Ctx> fraction_gcd(const Poly<Ctx>& num, const Poly<Ctx>& den) {
    assert(!den.has_radical() && den.is_real());
    std::vector<Poly<Ctx>> parts;
    for (auto& [rad, comp] : num.split_radical_components()) {
        Poly<Ctx> re = comp.real_part(), im = comp.imag_part();
        if (!re.is_zero()) parts.push_back(std::move(re));
        if (!im.is_zero()) parts.push_back(std::move(im));
    }
    std::sort(parts.begin(), parts.end(),
              [](const Poly<Ctx>& a, const Poly<Ctx>& b) { return a.size() < b.size(); });
    Poly<Ctx> g = detail::normalize_assoc(den);
    for (auto& p : parts) {
        if (g.is_constant()) return Poly<Ctx>::one();
        g = detail::plain_gcd(g, p);
    }
    if (g.is_constant()) return Poly<Ctx>::one();
    return g;
}

} // namespace sointegra
