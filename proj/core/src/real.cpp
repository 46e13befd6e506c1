#include "partbias/real.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace partbias {

Real::Real(long prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

Real::Real(long value, long prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, value, MPFR_RNDN);
}

Real::Real(const mpz_class& value, long prec) {
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const mpq_class& value, long prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    if (this != &other) mpfr_swap(v_, other.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::from_double(double value, long prec) {
    Real r(prec);
    mpfr_set_d(r.v_, value, MPFR_RNDN);
    return r;
}

Real Real::from_string(const std::string& s, long prec) {
    Real r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("Real::from_string: cannot parse '" + s + "'");
    return r;
}

Real Real::pi(long prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

Real Real::log2(long prec) {
    Real r(prec);
    mpfr_const_log2(r.v_, MPFR_RNDN);
    return r;
}

std::string Real::to_string() const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    if (mpfr_zero_p(v_)) return "0";
    mpfr_exp_t e;
    char* raw = mpfr_get_str(nullptr, &e, 10, 0, v_, MPFR_RNDN);
    std::string digits(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (digits[0] == '-') {
        sign = "-";
        digits.erase(0, 1);
    }
    // strip trailing zeros (keeps round-trip: fewer digits only drops zeros)
    size_t last = digits.find_last_not_of('0');
    digits.erase(last + 1);
    std::string mant = digits.substr(0, 1);
    if (digits.size() > 1) mant += "." + digits.substr(1);
    return sign + mant + "e" + std::to_string(static_cast<long>(e) - 1);
}

Real& Real::operator+=(const Real& o) {
    if (precision() < o.precision()) *this = *this + o;
    else mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator-=(const Real& o) {
    if (precision() < o.precision()) *this = *this - o;
    else mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator*=(const Real& o) {
    if (precision() < o.precision()) *this = *this * o;
    else mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator/=(const Real& o) {
    if (precision() < o.precision()) *this = *this / o;
    else mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator+=(long o) {
    mpfr_add_si(v_, v_, o, MPFR_RNDN);
    return *this;
}
Real& Real::operator-=(long o) {
    mpfr_sub_si(v_, v_, o, MPFR_RNDN);
    return *this;
}
Real& Real::operator*=(long o) {
    mpfr_mul_si(v_, v_, o, MPFR_RNDN);
    return *this;
}
Real& Real::operator/=(long o) {
    mpfr_div_si(v_, v_, o, MPFR_RNDN);
    return *this;
}

Real Real::operator-() const {
    Real r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::pick(const Real& a, const Real& b, Binop op) {
    Real r(std::max(a.precision(), b.precision()));
    op(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator-(long a, const Real& b) {
    Real r(b.precision());
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}

Real operator/(long a, const Real& b) {
    Real r(b.precision());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}

Real sqrt(const Real& a) {
    Real r(a.precision());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
}
Real exp(const Real& a) {
    Real r(a.precision());
    mpfr_exp(r.v_, a.v_, MPFR_RNDN);
    return r;
}
Real log(const Real& a) {
    Real r(a.precision());
    mpfr_log(r.v_, a.v_, MPFR_RNDN);
    return r;
}
Real abs(const Real& a) {
    Real r(a.precision());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
}
Real pow(const Real& base, const Real& expo) {
    Real r(std::max(base.precision(), expo.precision()));
    mpfr_pow(r.v_, base.raw(), expo.raw(), MPFR_RNDN);
    return r;
}
Real pow(const Real& base, long expo) {
    Real r(base.precision());
    mpfr_pow_si(r.v_, base.raw(), expo, MPFR_RNDN);
    return r;
}
Real atan2(const Real& y, const Real& x) {
    Real r(std::max(y.precision(), x.precision()));
    mpfr_atan2(r.v_, y.raw(), x.raw(), MPFR_RNDN);
    return r;
}
Real erfc(const Real& a) {
    Real r(a.precision());
    mpfr_erfc(r.v_, a.v_, MPFR_RNDN);
    return r;
}
void sin_cos(Real& s, Real& c, const Real& a) {
    mpfr_set_prec(s.v_, a.precision());
    mpfr_set_prec(c.v_, a.precision());
    mpfr_sin_cos(s.v_, c.v_, a.v_, MPFR_RNDN);
}
Real ldexp(const Real& a, long e) {
    Real r(a.precision());
    mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
}

}  // namespace partbias
