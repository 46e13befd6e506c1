#include "partbias/complexnum.hpp"

namespace partbias {

Complex& Complex::operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
}

Complex& Complex::operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

Complex& Complex::operator*=(const Complex& o) {
    Real nre = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(nre);
    return *this;
}

Complex& Complex::operator/=(const Complex& o) {
    Real den = o.re * o.re + o.im * o.im;
    Real nre = (re * o.re + im * o.im) / den;
    im = (im * o.re - re * o.im) / den;
    re = std::move(nre);
    return *this;
}

std::string Complex::to_string() const {
    std::string s = re.to_string();
    if (im.sign() < 0) {
        s += "-" + (-im).to_string();
    } else {
        s += "+" + im.to_string();
    }
    return s + "i";
}

Real abs(const Complex& z) {
    Real r(z.precision());
    mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
    return r;
}

Complex exp(const Complex& z) {
    const long prec = z.precision();
    Real mag = exp(z.re);
    Real s(prec), c(prec);
    sin_cos(s, c, z.im);
    return Complex(mag * c, mag * s);
}

Complex sqrt(const Complex& z) {
    // principal branch: re(sqrt) >= 0
    const long prec = z.precision();
    Real m = abs(z);
    Real half(prec);
    mpfr_set_d(half.raw(), 0.5, MPFR_RNDN);
    Real re_part = sqrt((m + z.re) * half);
    Real im_abs = sqrt(max((m - z.re) * half, Real(0, prec)));
    if (z.im.sign() < 0) im_abs = -im_abs;
    return Complex(std::move(re_part), std::move(im_abs));
}

Complex log(const Complex& z) {
    return Complex(log(abs(z)), atan2(z.im, z.re));
}

Complex pow_int(Complex z, long e) {
    Complex acc(Real(1, z.precision()), Real(0, z.precision()));
    while (e > 0) {
        if (e & 1) acc *= z;
        e >>= 1;
        if (e) z *= z;
    }
    return acc;
}

}  // namespace partbias
