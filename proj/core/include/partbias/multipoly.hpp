#ifndef PARTBIAS_MULTIPOLY_HPP
#define PARTBIAS_MULTIPOLY_HPP

#include <gmpxx.h>

#include <map>
#include <vector>

#include "partbias/real.hpp"

namespace partbias {

/// Multivariate polynomial in u_1..u_dim with exact rational coefficients.
/// Zero coefficients are never stored.
class MultiPoly {
  public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, mpq_class>;

    explicit MultiPoly(int dim) : dim_(dim) {}
    static MultiPoly constant(int dim, const mpq_class& c);
    /// c * u_var^power (var is 0-based)
    static MultiPoly monomial(int dim, int var, int power, const mpq_class& c);

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    /// Total degree; 0 for the zero polynomial.
    int total_degree() const;
    mpq_class coefficient(const Exponents& e) const;
    void add_term(const Exponents& e, const mpq_class& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const mpq_class& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const mpq_class& c) { return a *= c; }
    bool operator==(const MultiPoly& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

    /// Partial derivative with respect to u_var (0-based).
    MultiPoly derivative(int var) const;
    /// Substitution u_src := u_dst (collapses variable src onto dst).
    MultiPoly substitute_equal(int src, int dst) const;

    mpq_class eval(const std::vector<mpq_class>& point) const;
    Real eval(const std::vector<Real>& point, long prec) const;

    std::string to_string() const;

  private:
    int dim_;
    TermMap terms_;
};

}  // namespace partbias

#endif
