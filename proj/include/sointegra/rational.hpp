#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace sointegra {

using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// exact square root of a rational, if it is one
inline std::optional<BigRational> sqrt_exact(const BigRational& q) {
    if (q < 0) return std::nullopt;
    BigInt n = boost::multiprecision::numerator(q);
    BigInt d = boost::multiprecision::denominator(q);
    BigInt sn = boost::multiprecision::sqrt(n);
    BigInt sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return BigRational(sn, sd);
}

inline BigRational rat_pow(BigRational base, long e) {
    if (e < 0) {
        if (base == 0) throw Error("0 raised to a negative power");
        base = BigRational(boost::multiprecision::denominator(base),
                           boost::multiprecision::numerator(base));
        e = -e;
    }
    BigRational out(1);
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

// Gaussian rational a + b*i
struct GaussRat {
    BigRational re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(long v) : re(v), im(0) {}
    GaussRat(BigRational r) : re(std::move(r)), im(0) {}
    GaussRat(BigRational r, BigRational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat i() { return GaussRat(BigRational(0), BigRational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRat conj() const { return GaussRat(re, -im); }
    BigRational norm() const { return re * re + im * im; }

    GaussRat operator-() const { return GaussRat(-re, -im); }
    GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
    GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
    GaussRat operator+(const GaussRat& o) const { return GaussRat(re + o.re, im + o.im); }
    GaussRat operator-(const GaussRat& o) const { return GaussRat(re - o.re, im - o.im); }
    GaussRat operator*(const GaussRat& o) const {
        return GaussRat(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    GaussRat operator/(const GaussRat& o) const {
        BigRational n = o.norm();
        if (n == 0) throw Error("division by zero (coefficient)");
        GaussRat p = *this * o.conj();
        return GaussRat(p.re / n, p.im / n);
    }
    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussRat& o) const { return !(*this == o); }

    GaussRat pow(long e) const {
        if (e < 0) return GaussRat(1) / pow(-e);
        GaussRat out(1), base = *this;
        while (e > 0) {
            if (e & 1) out = out * base;
            base = base * base;
            e >>= 1;
        }
        return out;
    }

    double to_double() const {
        if (im != 0) throw Error("complex value has no double conversion");
        return re.convert_to<double>();
    }

    std::string str() const {
        auto rs = [](const BigRational& v) {
            std::ostringstream os;
            os << v;
            return os.str();
        };
        if (im == 0) return rs(re);
        if (re == 0) return rs(im) + "*i";
        return rs(re) + (im > 0 ? "+" : "") + rs(im) + "*i";
    }
};

} // namespace sointegra
