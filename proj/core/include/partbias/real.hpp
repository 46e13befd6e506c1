#ifndef PARTBIAS_REAL_HPP
#define PARTBIAS_REAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace partbias {

/// Arbitrary-precision real number (MPFR, round-to-nearest). Binary
/// operations carry the larger precision of the two operands.
class Real {
  public:
    static constexpr long kDefaultPrecision = 128;

    explicit Real(long prec = kDefaultPrecision);
    Real(long value, long prec);
    Real(const mpz_class& value, long prec);
    Real(const mpq_class& value, long prec);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    static Real from_double(double value, long prec = kDefaultPrecision);
    /// Parses a decimal string (as produced by to_string).
    static Real from_string(const std::string& s, long prec = kDefaultPrecision);
    static Real pi(long prec);
    static Real log2(long prec);

    long precision() const { return mpfr_get_prec(v_); }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Shortest decimal string that parses back to the same value at this
    /// precision ("d.ddd...e<exp>" scientific form).
    std::string to_string() const;

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);
    Real& operator+=(long o);
    Real& operator-=(long o);
    Real& operator*=(long o);
    Real& operator/=(long o);
    Real operator-() const;

    friend Real operator+(Real a, const Real& b) { return pick(a, b, mpfr_add); }
    friend Real operator-(Real a, const Real& b) { return pick(a, b, mpfr_sub); }
    friend Real operator*(Real a, const Real& b) { return pick(a, b, mpfr_mul); }
    friend Real operator/(Real a, const Real& b) { return pick(a, b, mpfr_div); }
    friend Real operator+(Real a, long b) { return a += b; }
    friend Real operator-(Real a, long b) { return a -= b; }
    friend Real operator*(Real a, long b) { return a *= b; }
    friend Real operator/(Real a, long b) { return a /= b; }
    friend Real operator+(long a, const Real& b) { return b + a; }
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator-(long a, const Real& b);
    friend Real operator/(long a, const Real& b);

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
    friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
    friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
    friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }

    friend Real sqrt(const Real& a);
    friend Real exp(const Real& a);
    friend Real log(const Real& a);
    friend Real abs(const Real& a);
    friend Real pow(const Real& base, const Real& expo);
    friend Real pow(const Real& base, long expo);
    friend Real atan2(const Real& y, const Real& x);
    friend Real erfc(const Real& a);
    friend void sin_cos(Real& s, Real& c, const Real& a);
    friend Real ldexp(const Real& a, long e);  // a * 2^e
    friend Real min(const Real& a, const Real& b) { return a < b ? a : b; }
    friend Real max(const Real& a, const Real& b) { return a > b ? a : b; }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

  private:
    using Binop = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    static Real pick(const Real& a, const Real& b, Binop op);

    mpfr_t v_;
};

/// Converts a rational to Real at the given precision.
inline Real to_real(const mpq_class& q, long prec) { return Real(q, prec); }

}  // namespace partbias

#endif
