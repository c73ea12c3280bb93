#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fss {

// Exact rational, always in lowest terms with positive denominator.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Gaussian rational re + im*i. All arithmetic is exact; equality is structural.
struct Scalar {
    Rational re;
    Rational im;

    Scalar() : re(0), im(0) {}
    Scalar(long n) : re(n), im(0) {}
    Scalar(Rational r) : re(std::move(r)), im(0) {}
    Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Scalar ratio(long num, long den) { return Scalar(make_rational(num, den)); }
    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Scalar conj() const { return Scalar(re, -im); }

    // |x|^2, a nonnegative rational
    Rational norm() const { return re * re + im * im; }

    Scalar inv() const
    {
        if (is_zero())
            throw std::domain_error("division by zero");
        Rational n = norm();
        return Scalar(re / n, -im / n);
    }

    Scalar operator-() const { return Scalar(-re, -im); }

    Scalar& operator+=(const Scalar& o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
    Scalar& operator-=(const Scalar& o)
    {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Scalar& operator*=(const Scalar& o)
    {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // total order for canonical term sorting (not a field order)
    friend bool operator<(const Scalar& a, const Scalar& b)
    {
        if (a.re != b.re)
            return a.re < b.re;
        return a.im < b.im;
    }
};

std::string to_string(const Rational& r);

/// Canonical literal form: "a/b", "a/b+c/di", "i", "-2i", "1/2-i", ...
std::string to_string(const Scalar& s);

/// Parse the literal syntax used by .fss files and the CLI.
/// Accepts "1/2", "i", "-i", "i/3", "2i", "1/3i", "1/2+1/3i", "1/2+1/2 i".
std::optional<Scalar> parse_scalar(std::string_view text);

} // namespace fss
