// Exact scalar arithmetic: arbitrary-precision rationals and Gaussian
// rationals (a + b*i with a, b rational). All algebra coefficients live here;
// no floating point anywhere in the engine.
#ifndef ENDOSTAR_SCALAR_HPP
#define ENDOSTAR_SCALAR_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace endostar {

using Rational = mpq_class;

// mpq_class does not canonicalize on construction from num/den or strings.
inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

// Exact square root of a nonnegative rational, when it exists.
std::optional<Rational> rational_sqrt_exact(const Rational& q);

struct Scalar {
    Rational re;
    Rational im;

    Scalar() : re(0), im(0) {}
    Scalar(Rational r) : re(std::move(r)), im(0) {}
    Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Scalar integer(long n) { return Scalar(make_rational(n)); }
    static Scalar i() { return Scalar(make_rational(0), make_rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Scalar conj() const { return Scalar(re, Rational(-im)); }
    Rational abs_sq() const { return re * re + im * im; }

    Scalar operator-() const { return Scalar(Rational(-re), Rational(-im)); }
    Scalar operator+(const Scalar& o) const { return Scalar(re + o.re, im + o.im); }
    Scalar operator-(const Scalar& o) const { return Scalar(re - o.re, im - o.im); }
    Scalar operator*(const Scalar& o) const {
        return Scalar(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    Scalar& operator+=(const Scalar& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        *this = *this * o;
        return *this;
    }

    bool operator==(const Scalar& o) const { return re == o.re && im == o.im; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // Total order for deterministic iteration and grouping (not a field order).
    bool operator<(const Scalar& o) const {
        if (re != o.re) return re < o.re;
        return im < o.im;
    }

    std::string str() const;
};

}  // namespace endostar

#endif
