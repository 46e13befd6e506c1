#ifndef PARTBIAS_SADDLE_HPP
#define PARTBIAS_SADDLE_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "partbias/halfseries.hpp"
#include "partbias/multipoly.hpp"
#include "partbias/real.hpp"
#include "partbias/residue.hpp"

namespace partbias {

/// Bernoulli numbers B_0..B_up_to (B_1 = -1/2 convention).
std::vector<mpq_class> bernoulli_numbers(int up_to);
mpq_class bernoulli_number(int r);

/// r-th Bernoulli polynomial as a univariate MultiPoly (dim 1, variable 0).
MultiPoly bernoulli_poly(int r);

/// Li_{-k}(1/2), exact. Computed by the recurrence
/// Li_{-k}(x) = x d/dx Li_{-k+1}(x) from Li_0(x) = x/(1-x).
mpq_class polylog_neg_half(int k);

/// The log of the saddle-point expansion factor as a formal half-power
/// series: coefficient k multiplies z^{k/2}, truncated to R half-orders.
/// Has no constant term; its exponential has the C_r as coefficients.
HalfSeries<MultiPoly> phi_series(const ResidueConfig& cfg, int R);

/// C_0..C_{R-1}: coefficients of exp(phi). C_0 = 1, deg(C_r) <= 3r
/// (checked).
std::vector<MultiPoly> c_polynomials(const ResidueConfig& cfg, int R);

/// Boundary-correction coefficients of the shifted lattice summation, as
/// exact rationals; `residue` is the smallest positive representative of
/// ell_alpha - ell_beta mod N. W_0 = 1/2 - residue/N.
std::vector<mpq_class> w_exact(int residue, int N, int R);
std::vector<Real> w_coefficients(const ResidueConfig& cfg, const LatticeClass& ell, int R,
                                 long prec);

/// Exact constant of the form sum of q * 2^(i/2) * pi^(j/2) with q
/// rational. Closed under addition and multiplication; evaluates to Real.
class RadicalSum {
  public:
    RadicalSum() = default;
    static RadicalSum rational(const mpq_class& q);
    /// q * 2^(two_pow/2) * pi^(pi_pow/2)
    static RadicalSum term(const mpq_class& q, int two_pow, int pi_pow);

    bool is_zero() const { return terms_.empty(); }
    RadicalSum& operator+=(const RadicalSum& o);
    RadicalSum& operator*=(const mpq_class& c);
    friend RadicalSum operator+(RadicalSum a, const RadicalSum& b) { return a += b; }
    friend RadicalSum operator*(const RadicalSum& a, const RadicalSum& b);
    friend RadicalSum operator*(RadicalSum a, const mpq_class& c) { return a *= c; }

    Real to_real(long prec) const;
    const std::map<std::pair<int, int>, mpq_class>& terms() const { return terms_; }

  private:
    // key: (power of sqrt(2) in {0,1}, power of sqrt(pi) >= 0)
    std::map<std::pair<int, int>, mpq_class> terms_;
};

/// Integral of P(u) e^{-u^T u} over the half space { u_alpha >= u_beta },
/// exact (alpha, beta are 1-based coordinate labels).
RadicalSum gaussian_halfspace_exact(const MultiPoly& P, int alpha, int beta);
Real gaussian_halfspace_integral(const MultiPoly& P, int alpha, int beta, long prec);

/// V_{j,r} for r >= -N, exact. C must contain at least C_0..C_j. For
/// r = -N this is the half-space integral of C_j / N^N; for r > -N it is
/// W_{r+N-1}/N^{N-1} times the full-space integral of the (r+N-1)-th
/// u_alpha-derivative of C_j e^{-u^T u} at u_alpha = u_beta.
RadicalSum v_exact(const ResidueConfig& cfg, int residue, int j, int r,
                   const std::vector<MultiPoly>& C);
std::vector<Real> v_coefficients(const ResidueConfig& cfg, const LatticeClass& ell, int j,
                                 int r_min, int r_max, long prec);

/// The computed expansion coefficients for one residue class, at a working
/// precision. E[r] = sum_{j<=r} V[{j, r-j-N}]. E_delta[r] is the relative
/// change of E[r] under doubling of the working precision.
struct ExpansionLadder {
    ResidueConfig cfg;
    int residue;  // [ell_alpha - ell_beta]_N; the only ell-dependence
    long precision;
    std::vector<Real> W;
    std::map<std::pair<int, int>, Real> V;  // (j, r), r >= -N
    std::vector<Real> E;
    std::vector<Real> E_delta;

    std::string to_json() const;
};

ExpansionLadder e_coefficients(const ResidueConfig& cfg, const LatticeClass& ell, int R,
                               long prec);
ExpansionLadder e_coefficients_residue(const ResidueConfig& cfg, int residue, int R, long prec);

/// Exact E_{ell,r} ladder entries (test/diagnostic access).
std::vector<RadicalSum> e_exact(const ResidueConfig& cfg, int residue, int R);

/// Gamma(num)/Gamma(den) for half-integer arguments of equal parity,
/// exact; by the functional equation this is prod_{i=0}^{2r-1}(den + i)
/// when num = den + 2r. Returns 0 if den is a pole (reciprocal-Gamma
/// convention).
mpq_class gamma_half_ratio(const mpq_class& num, const mpq_class& den);

/// c_{A,B,r} = (-1/(4B))^r B^{A+1/2} Gamma(A+r+3/2) /
/// (2 sqrt(pi) r! Gamma(A-r+3/2)); A a half-integer >= 0, B > 0. Value 0
/// when the denominator Gamma sits at a pole.
Real c_abr(const mpq_class& A, const Real& B, int r, long prec);

}  // namespace partbias

#endif
