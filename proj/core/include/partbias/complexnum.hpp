#ifndef PARTBIAS_COMPLEXNUM_HPP
#define PARTBIAS_COMPLEXNUM_HPP

#include <string>

#include "partbias/real.hpp"

namespace partbias {

/// Complex number over Real. sqrt and log use the principal branch.
struct Complex {
    Real re;
    Real im;

    explicit Complex(long prec = Real::kDefaultPrecision) : re(prec), im(prec) {}
    explicit Complex(Real r) : re(std::move(r)), im(re.precision()) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    long precision() const { return std::max(re.precision(), im.precision()); }
    Complex conj() const { return Complex(re, -im); }
    bool is_finite() const { return re.is_finite() && im.is_finite(); }

    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);
    Complex operator-() const { return Complex(-re, -im); }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend Complex operator*(const Real& a, Complex b) {
        b.re *= a;
        b.im *= a;
        return b;
    }
    friend Complex operator/(Complex a, const Real& b) {
        a.re /= b;
        a.im /= b;
        return a;
    }

    /// "a+bi" / "a-bi" with both parts in decimal scientific form.
    std::string to_string() const;
};

Real abs(const Complex& z);
Complex exp(const Complex& z);
Complex sqrt(const Complex& z);
Complex log(const Complex& z);
Complex pow_int(Complex z, long e);

}  // namespace partbias

#endif
