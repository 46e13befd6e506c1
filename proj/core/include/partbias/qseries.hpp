#ifndef PARTBIAS_QSERIES_HPP
#define PARTBIAS_QSERIES_HPP

#include "partbias/complexnum.hpp"
#include "partbias/real.hpp"
#include "partbias/residue.hpp"
#include "partbias/saddle.hpp"

namespace partbias {

/// An evaluation point z = epsilon (1 + i y) with Re(z) = epsilon > 0.
/// radius bounds the lattice max-norm for direct summation; radius = 0
/// selects it automatically from the certified tail bound.
struct EvaluationPoint {
    Real epsilon;
    Real y;
    long precision = Real::kDefaultPrecision;
    long radius = 0;

    Complex z() const { return Complex(epsilon, epsilon * y); }
};

/// A directly summed value together with a certified bound on the
/// discarded tail.
struct SumWithTail {
    Complex value;
    Real tail_bound;
};

/// Dilogarithm by its defining series; requires |w| <= 1/2.
Complex dilog(const Complex& w, long prec);

/// Lambda(y) = N (pi^2/6 - log(2)^2 (1+iy)^2 / 2 - Li_2(2^{-(1+iy)})).
/// Lambda(0) = pi^2 N / 12.
Complex lambda_y(const Real& y, int N, long prec);

/// s(y) = Re(Lambda(y)/(1+iy) - pi^2 N / 12); zero at y = 0, negative
/// elsewhere, ~ N (log(2)^2 - pi^2/12) y^2 near 0.
Real s_y(const Real& y, int N, long prec);

/// Main-term approximation pi^2/(6z) + Log(z/(2pi))/2 - z/24 of
/// -Log((q;q)_inf), q = e^{-z} (principal logarithm).
Complex log_pochhammer_asym(const Complex& z, long prec);

/// -Log((q;q)_inf) by direct summation of -sum_k Log(1 - q^k), with a
/// certified tail bound. Requires Re(z) > 0.
SumWithTail log_pochhammer_direct(const Complex& z, long prec);

/// Direct truncated summation of the class-restricted lattice sum
/// g(z) = sum e^{-H(n) z} / prod_j (e^{-z}; e^{-z})_{n_j} over n == ell
/// (mod N), n_alpha > n_beta. Throws if the certified tail bound exceeds
/// 2^{-precision/2} of the result magnitude (insufficient radius).
SumWithTail g_function_numeric(const ResidueConfig& cfg, const LatticeClass& ell,
                               const EvaluationPoint& point);

/// Truncated expansion e^{pi^2 N/(12 z)}/(2^{K+1/2} pi^{N/2}) sum_{r<R}
/// E_{ell,r} z^{r/2}, principal branch of z^{1/2}.
Complex expansion_numeric(const ResidueConfig& cfg, const LatticeClass& ell,
                          const EvaluationPoint& point, int R);
Complex expansion_numeric(const ExpansionLadder& ladder, const Complex& z);

}  // namespace partbias

#endif
