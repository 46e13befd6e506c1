#include "partbias/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace partbias {

Complex dilog(const Complex& w, long prec) {
    const Real mag = abs(w);
    const Real half(mpq_class(1, 2), prec);
    if (mag > half + ldexp(Real(1, prec), -prec / 2))
        throw std::domain_error("dilog: series evaluation requires |w| <= 1/2");
    Complex sum(prec);
    Complex wn(Real(1, prec), Real(0, prec));
    const Real cutoff = ldexp(Real(1, prec), -(prec + 8));
    Real bound(1, prec);
    long n = 1;
    while (true) {
        wn *= w;
        bound *= mag;
        sum += wn / Real(static_cast<long>(n) * n, prec);
        if (bound <= cutoff && n > 2) break;
        ++n;
    }
    return sum;
}

Complex lambda_y(const Real& y, int N, long prec) {
    const Real pi = Real::pi(prec);
    const Real l2 = Real::log2(prec);
    const Complex one_iy(Real(1, prec), y);
    const Complex w = exp(Complex(-l2, -(l2 * y)));  // 2^{-(1+iy)}
    Complex val(pi * pi / 6, Real(0, prec));
    val -= Real(mpq_class(1, 2), prec) * ((l2 * l2) * (one_iy * one_iy));
    val -= dilog(w, prec);
    return Real(N, prec) * val;
}

Real s_y(const Real& y, int N, long prec) {
    const Complex lam = lambda_y(y, N, prec);
    const Complex one_iy(Real(1, prec), y);
    const Real pi = Real::pi(prec);
    return (lam / one_iy).re - pi * pi * N / 12;
}

Complex log_pochhammer_asym(const Complex& z, long prec) {
    const Real pi = Real::pi(prec);
    Complex out = Complex(pi * pi / 6, Real(0, prec)) / z;
    out += Real(mpq_class(1, 2), prec) * log(z / Complex(2 * pi, Real(0, prec)));
    out -= Real(mpq_class(1, 24), prec) * z;
    return out;
}

SumWithTail log_pochhammer_direct(const Complex& z, long prec) {
    if (!(z.re > 0)) throw std::domain_error("log_pochhammer_direct: Re(z) must be > 0");
    const Complex q = exp(-z);
    const Real qabs = abs(q);
    const Complex one(Real(1, prec), Real(0, prec));
    Complex sum(prec);
    Complex qk = one;
    const Real cutoff = ldexp(Real(1, prec), -(prec + 8));
    Real qk_abs(1, prec);
    long k = 1;
    while (true) {
        qk *= q;
        qk_abs *= qabs;
        sum -= log(one - qk);
        // |sum_{j>k} Log(1-q^j)| <= |q|^{k+1} / ((1-|q|)(1-|q|^{k+1}))
        Real next_abs = qk_abs * qabs;
        Real tail = next_abs / ((1 - qabs) * (1 - next_abs));
        if (tail <= cutoff) return {sum, tail};
        ++k;
        if (k > 100000000)
            throw std::runtime_error("log_pochhammer_direct: series does not reach target");
    }
}

namespace {

// Lower bound on (rho; rho)_inf for 0 < rho < 1:
// log prod >= sum_{k<=m} log(1-rho^k) - rho^{m+1}/((1-rho)(1-rho^{m+1}))
Real pochhammer_inf_lower(const Real& rho, long prec) {
    Real logsum(prec);
    Real rk(1, prec);
    const Real cutoff = ldexp(Real(1, prec), -prec / 2);
    long k = 1;
    while (true) {
        rk *= rho;
        logsum += log(1 - rk);
        Real rem = (rk * rho) / ((1 - rho) * (1 - rk * rho));
        if (rem < cutoff || k > 10000000) {
            logsum -= rem;
            break;
        }
        ++k;
    }
    return exp(logsum);
}

// Bound on the discarded summand mass beyond max-norm `radius`: a summand of
// max-norm s has |term| <= M^N e^{-eps s(s-1)/2} (the largest coordinate
// contributes H >= s(s-1)/2, the rest are nonnegative, and each reciprocal
// Pochhammer is bounded by 1/(rho;rho)_inf); a shell holds at most
// N (s+1)^{N-1} lattice points.
Real shell_tail_bound(int N, const Real& eps, const Real& poch_low, long radius, long prec) {
    Real mfac = pow(1 / poch_low, static_cast<long>(N));
    Real total(prec);
    Real prev(prec);
    for (long s = radius + 1;; ++s) {
        Real shell = Real(N, prec) * pow(Real(s + 1, prec), static_cast<long>(N - 1)) * mfac *
                     exp(-(eps * Real(s, prec) * Real(s - 1, prec) / 2));
        total += shell;
        if (s > radius + 2 && shell < prev / 2) {
            total += shell;  // closes the geometric remainder (ratio is decreasing)
            break;
        }
        prev = shell;
        if (s > radius + 200000)
            throw std::runtime_error("shell_tail_bound: tail did not close");
    }
    return 2 * total;  // rounding slack
}

}  // namespace

SumWithTail g_function_numeric(const ResidueConfig& cfg, const LatticeClass& ell,
                               const EvaluationPoint& point) {
    const long prec = point.precision;
    const int N = cfg.N;
    if (!(point.epsilon > 0) || point.epsilon > Real(mpq_class(1, 5), prec))
        throw std::domain_error("g_function_numeric: validated regime is 0 < epsilon <= 0.2");
    if (abs(point.y) > Real(1, prec))
        throw std::domain_error("g_function_numeric: validated regime is |y| <= 1");
    const QuadraticData qd = quad_data(cfg);
    const Complex z = point.z();
    const Real eps = point.epsilon;
    const Real pi = Real::pi(prec);

    // result magnitude estimate (leading expansion term) for the tail target
    Real re_inv = (Complex(pi * pi * N / 12, Real(0, prec)) / z).re;
    Real mag_est = ldexp(exp(re_inv), -(cfg.K + 2));
    for (int i = 0; i < N; ++i) mag_est /= N;
    const Real target = ldexp(mag_est, -(prec / 2 + 6));

    const Real poch_low = pochhammer_inf_lower(exp(-eps), 64);
    long radius = point.radius;
    Real tail(prec);
    if (radius == 0) {
        const double e = eps.to_double();
        radius = static_cast<long>(0.7 / e + 10.0 / std::sqrt(e)) + 3 * N;
        while (true) {
            tail = shell_tail_bound(N, eps, poch_low, radius, prec);
            if (tail <= target) break;
            radius += std::max<long>(8, radius / 8);
            if (radius > 1000000)
                throw std::runtime_error("g_function_numeric: cannot certify tail at any radius");
        }
    } else {
        tail = shell_tail_bound(N, eps, poch_low, radius, prec);
    }

    // per-coordinate factor tables: exp(-(m^2/2 + b_j m) z) / (q;q)_m
    const Complex q = exp(-z);
    const Complex one(Real(1, prec), Real(0, prec));
    std::vector<Complex> recip_poch(radius + 1, one);
    {
        Complex qm = one;
        Complex acc = one;
        for (long m = 1; m <= radius; ++m) {
            qm *= q;
            acc *= one - qm;
            recip_poch[m] = one / acc;
        }
    }
    std::vector<std::vector<Complex>> factor(N);
    for (int j = 0; j < N; ++j) {
        factor[j].reserve(radius + 1);
        for (long m = 0; m <= radius; ++m) {
            mpq_class hj(m * m, 2);
            hj.canonicalize();
            hj += qd.b[j] * m;
            factor[j].push_back(exp(-(Real(hj, prec) * z)) * recip_poch[m]);
        }
    }

    Complex total(prec);
    std::vector<long> n(N, 0);
    auto descend = [&](auto&& self, int j, const Complex& partial) -> void {
        if (j == N) {
            if (n[cfg.alpha - 1] > n[cfg.beta - 1]) total += partial;
            return;
        }
        for (long m = ell.ell[j]; m <= radius; m += N) {
            n[j] = m;
            self(self, j + 1, partial * factor[j][m]);
        }
    };
    descend(descend, 0, one);

    if (tail > ldexp(abs(total), -(prec / 2)))
        throw std::runtime_error(
            "g_function_numeric: certified tail bound " + tail.to_string() +
            " exceeds 2^-precision/2 of the result; increase the truncation radius");
    return {total, tail};
}

Complex expansion_numeric(const ExpansionLadder& ladder, const Complex& z) {
    const long prec = ladder.precision;
    const int N = ladder.cfg.N;
    const Real pi = Real::pi(prec);
    const Complex sqrt_z = sqrt(z);
    Complex sum(prec);
    Complex zpow(Real(1, prec), Real(0, prec));
    for (const auto& e : ladder.E) {
        sum += e * zpow;
        zpow *= sqrt_z;
    }
    Complex pref = exp(Complex(pi * pi * N / 12, Real(0, prec)) / z);
    Real denom = pow(Real(2, prec), Real(ladder.cfg.K + mpq_class(1, 2), prec)) *
                 pow(pi, Real(mpq_class(N, 2), prec));
    return pref * sum / denom;
}

Complex expansion_numeric(const ResidueConfig& cfg, const LatticeClass& ell,
                          const EvaluationPoint& point, int R) {
    const ExpansionLadder ladder = e_coefficients(cfg, ell, R, point.precision);
    return expansion_numeric(ladder, point.z());
}

}  // namespace partbias
