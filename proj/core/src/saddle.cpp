#include "partbias/saddle.hpp"

#include <stdexcept>

namespace partbias {

namespace {

mpz_class factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

// (k)!! for odd k >= -1
mpz_class double_factorial(long k) {
    mpz_class r(1);
    while (k > 1) {
        r *= k;
        k -= 2;
    }
    return r;
}

mpz_class pow2(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

}  // namespace

std::vector<mpq_class> bernoulli_numbers(int up_to) {
    std::vector<mpq_class> B(up_to + 1);
    B[0] = 1;
    for (int n = 1; n <= up_to; ++n) {
        mpq_class s(0);
        for (int k = 0; k < n; ++k) s += mpq_class(binomial(n + 1, k)) * B[k];
        s /= n + 1;
        B[n] = -s;
    }
    return B;
}

mpq_class bernoulli_number(int r) { return bernoulli_numbers(r)[r]; }

MultiPoly bernoulli_poly(int r) {
    if (r < 0) throw std::invalid_argument("bernoulli_poly: r must be >= 0");
    const auto B = bernoulli_numbers(r);
    MultiPoly p(1);
    for (int k = 0; k <= r; ++k) {
        p += MultiPoly::monomial(1, 0, k, mpq_class(binomial(r, k)) * B[r - k]);
    }
    return p;
}

mpq_class polylog_neg_half(int k) {
    if (k < 0) throw std::invalid_argument("polylog_neg_half: k must be >= 0");
    // Li_{-k}(x) = A_k(x) / (1-x)^{k+1} with A_0 = x and
    // A_{m+1} = x((1-x) A_m' + (m+1) A_m)
    std::vector<mpq_class> A = {0, 1};
    for (int m = 0; m < k; ++m) {
        std::vector<mpq_class> d(A.size() > 1 ? A.size() - 1 : 0);
        for (size_t j = 0; j + 1 < A.size(); ++j) d[j] = mpq_class(j + 1) * A[j + 1];
        std::vector<mpq_class> s(A.size() + 1, mpq_class(0));
        for (size_t j = 0; j < d.size(); ++j) {
            s[j] += d[j];
            s[j + 1] -= d[j];
        }
        for (size_t j = 0; j < A.size(); ++j) s[j] += mpq_class(m + 1) * A[j];
        std::vector<mpq_class> next(s.size() + 1, mpq_class(0));
        for (size_t j = 0; j < s.size(); ++j) next[j + 1] = s[j];
        A = std::move(next);
    }
    mpq_class val(0);
    mpq_class x_pow(1);
    const mpq_class half(1, 2);
    for (const auto& a : A) {
        val += a * x_pow;
        x_pow *= half;
    }
    return val * mpq_class(pow2(k + 1));
}

HalfSeries<MultiPoly> phi_series(const ResidueConfig& cfg, int R) {
    if (R < 1) throw std::invalid_argument("phi_series: R must be >= 1");
    const int N = cfg.N;
    const QuadraticData qd = quad_data(cfg);
    HalfSeries<MultiPoly> phi;
    phi.coeff.assign(R, MultiPoly(N));
    // -b^T u at half-order 1
    if (R > 1) {
        for (int j = 0; j < N; ++j)
            phi.coeff[1] += MultiPoly::monomial(N, j, 1, mpq_class(-qd.b[j]));
    }
    // -(N/24) z at half-order 2
    if (R > 2) {
        mpq_class c(-N, 24);
        c.canonicalize();
        phi.coeff[2] += MultiPoly::constant(N, c);
    }
    // per-coordinate corrections: for each r >= 2 the term
    //   -(B_r(-u_j z^{-1/2}) - delta_{r,2} u_j^2/z) Li_{2-r}(1/2) z^{r-1}/r!
    // spreads over half-orders 2r-2-k, k = 0..r.
    const auto B = bernoulli_numbers(R + 2);
    for (int r = 2; r - 2 <= R - 1; ++r) {
        const mpq_class li = polylog_neg_half(r - 2);
        const mpq_class scale = -li / mpq_class(factorial(r));
        for (int k = 0; k <= r; ++k) {
            const int order = 2 * r - 2 - k;
            if (order >= R) continue;
            mpq_class c = scale * mpq_class(binomial(r, k)) * B[r - k];
            if (k % 2 == 1) c = -c;
            if (c == 0) continue;
            for (int j = 0; j < N; ++j) phi.coeff[order] += MultiPoly::monomial(N, j, k, c);
        }
        if (r == 2) {
            const mpq_class c = li / mpq_class(factorial(2));
            for (int j = 0; j < N; ++j) phi.coeff[0] += MultiPoly::monomial(N, j, 2, c);
        }
    }
    if (!phi.coeff[0].is_zero())
        throw std::logic_error("phi_series: unexpected constant term");
    return phi;
}

std::vector<MultiPoly> c_polynomials(const ResidueConfig& cfg, int R) {
    const auto phi = phi_series(cfg, R);
    const MultiPoly zero(cfg.N);
    const MultiPoly one = MultiPoly::constant(cfg.N, 1);
    auto div_int = [](const MultiPoly& p, unsigned long k) { return p * mpq_class(1, k); };
    auto expd = series_exp(phi, R, zero, one, div_int);
    for (int r = 0; r < R; ++r) {
        if (expd.coeff[r].total_degree() > 3 * r)
            throw std::logic_error("c_polynomials: degree bound exceeded");
    }
    if (!(expd.coeff[0] == one)) throw std::logic_error("c_polynomials: C_0 != 1");
    return std::move(expd.coeff);
}

std::vector<mpq_class> w_exact(int residue, int N, int R) {
    if (R < 1) throw std::invalid_argument("w_exact: R must be >= 1");
    if (residue < 1 || residue > N)
        throw std::invalid_argument("w_exact: residue must lie in 1..N");
    const mpq_class m(residue);
    const auto B = bernoulli_numbers(R + 1);
    std::vector<mpq_class> W;
    W.reserve(R);
    W.push_back(mpq_class(1, 2) - m / N);
    for (int r = 1; r < R; ++r) {
        mpq_class mpow_r(1);
        for (int i = 0; i < r; ++i) mpow_r *= m;
        mpq_class w = (mpq_class(1, 2) - m / (2 * N)) * mpow_r / mpq_class(factorial(r));
        const int tmax = (r + 1) / 2;  // ceil(r/2)
        for (int t = 1; t <= tmax; ++t) {
            mpq_class m2t(1), N2t(1), mrest(1);
            for (int i = 0; i < 2 * t; ++i) {
                m2t *= m;
                N2t *= N;
            }
            for (int i = 0; i < r - 2 * t + 1; ++i) mrest *= m;
            w += B[2 * t] * (m2t - N2t) * mrest /
                 (mpq_class(factorial(2 * t) * factorial(r - 2 * t + 1)) * N);
        }
        if (r % 2 == 1) {
            mpq_class mr1(1);
            for (int i = 0; i < r + 1; ++i) mr1 *= m;
            w -= B[r + 1] * mr1 / (mpq_class(factorial(r + 1)) * N);
        }
        W.push_back(w);
    }
    return W;
}

std::vector<Real> w_coefficients(const ResidueConfig& cfg, const LatticeClass& ell, int R,
                                 long prec) {
    const int residue =
        smallest_positive_residue(ell.ell[cfg.alpha - 1] - ell.ell[cfg.beta - 1], cfg.N);
    const auto exact = w_exact(residue, cfg.N, R);
    std::vector<Real> out;
    out.reserve(exact.size());
    for (const auto& q : exact) out.emplace_back(q, prec);
    return out;
}

RadicalSum RadicalSum::rational(const mpq_class& q) { return term(q, 0, 0); }

RadicalSum RadicalSum::term(const mpq_class& q, int two_pow, int pi_pow) {
    RadicalSum r;
    if (q == 0) return r;
    mpq_class c = q;
    c.canonicalize();
    while (two_pow >= 2) {
        two_pow -= 2;
        c *= 2;
    }
    while (two_pow < 0) {
        two_pow += 2;
        c /= 2;
    }
    r.terms_[{two_pow, pi_pow}] = c;
    return r;
}

RadicalSum& RadicalSum::operator+=(const RadicalSum& o) {
    for (const auto& [k, v] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_[k] = v;
        } else {
            it->second += v;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

RadicalSum& RadicalSum::operator*=(const mpq_class& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& [k, v] : terms_) v *= c;
    }
    return *this;
}

RadicalSum operator*(const RadicalSum& a, const RadicalSum& b) {
    RadicalSum r;
    for (const auto& [ka, va] : a.terms_) {
        for (const auto& [kb, vb] : b.terms_) {
            r += RadicalSum::term(va * vb, ka.first + kb.first, ka.second + kb.second);
        }
    }
    return r;
}

Real RadicalSum::to_real(long prec) const {
    const Real sqrt2 = sqrt(Real(2, prec));
    const Real sqrtpi = sqrt(Real::pi(prec));
    Real out(prec);
    for (const auto& [k, v] : terms_) {
        Real t(v, prec);
        if (k.first == 1) t *= sqrt2;
        for (int i = 0; i < k.second; ++i) t *= sqrtpi;
        out += t;
    }
    return out;
}

namespace {

// int_R u^k e^{-u^2} du
RadicalSum gauss_full(int k) {
    if (k % 2) return RadicalSum();
    return RadicalSum::term(mpq_class(double_factorial(k - 1), pow2(k / 2)), 0, 1);
}

// int_R u^k e^{-2u^2} du
RadicalSum gauss_full_doubled(int k) {
    if (k % 2) return RadicalSum();
    return RadicalSum::term(mpq_class(double_factorial(k - 1), pow2(k + 1)), 1, 1);
}

// int_0^inf s^k e^{-s^2} ds
RadicalSum gauss_half(int k) {
    if (k % 2 == 0)
        return RadicalSum::term(mpq_class(double_factorial(k - 1), pow2(k / 2 + 1)), 0, 1);
    return RadicalSum::rational(mpq_class(factorial((k - 1) / 2), 2));
}

// int over { u_alpha >= u_beta } of u_alpha^a u_beta^b e^{-u_a^2-u_b^2},
// via the rotation s = (u_alpha - u_beta)/sqrt2, t = (u_alpha + u_beta)/sqrt2.
RadicalSum halfplane_pair(int a, int b) {
    RadicalSum acc;
    for (int i = 0; i <= a; ++i) {
        for (int j = 0; j <= b; ++j) {
            RadicalSum t = gauss_full(i + j) * gauss_half(a + b - i - j);
            mpq_class c(binomial(a, i) * binomial(b, j));
            if ((b - j) % 2) c = -c;
            acc += t * c;
        }
    }
    return acc * RadicalSum::term(1, -(a + b), 0);
}

}  // namespace

RadicalSum gaussian_halfspace_exact(const MultiPoly& P, int alpha, int beta) {
    const int N = P.dim();
    if (alpha < 1 || alpha > N || beta < 1 || beta > N || alpha == beta)
        throw std::invalid_argument("gaussian_halfspace_exact: bad alpha/beta");
    RadicalSum out;
    for (const auto& [e, c] : P.terms()) {
        RadicalSum mono = halfplane_pair(e[alpha - 1], e[beta - 1]);
        if (mono.is_zero()) continue;
        bool dead = false;
        for (int j = 0; j < N && !dead; ++j) {
            if (j == alpha - 1 || j == beta - 1) continue;
            RadicalSum g = gauss_full(e[j]);
            if (g.is_zero()) {
                dead = true;
            } else {
                mono = mono * g;
            }
        }
        if (!dead) out += mono * c;
    }
    return out;
}

Real gaussian_halfspace_integral(const MultiPoly& P, int alpha, int beta, long prec) {
    if (prec < 64)
        throw std::invalid_argument("gaussian_halfspace_integral: precision must be >= 64 bits");
    return gaussian_halfspace_exact(P, alpha, beta).to_real(prec);
}

RadicalSum v_exact(const ResidueConfig& cfg, int residue, int j, int r,
                   const std::vector<MultiPoly>& C) {
    const int N = cfg.N;
    if (r < -N) throw std::invalid_argument("v_exact: r must be >= -N");
    if (j < 0 || j >= static_cast<int>(C.size()))
        throw std::invalid_argument("v_exact: C_j not supplied");
    mpq_class NpowN(1);
    for (int i = 0; i < N; ++i) NpowN *= N;
    if (r == -N) {
        return gaussian_halfspace_exact(C[j], cfg.alpha, cfg.beta) * (1 / NpowN);
    }
    const int k = r + N - 1;
    // k-th u_alpha derivative of C_j e^{-u^T u}, polynomial factor:
    // P <- dP/du_alpha - 2 u_alpha P
    MultiPoly P = C[j];
    const int va = cfg.alpha - 1;
    const int vb = cfg.beta - 1;
    const MultiPoly minus_two_ua = MultiPoly::monomial(N, va, 1, mpq_class(-2));
    for (int i = 0; i < k; ++i) P = P.derivative(va) + minus_two_ua * P;
    P = P.substitute_equal(va, vb);
    // integrate over the remaining N-1 coordinates: weight e^{-2 u_beta^2}
    // on the doubled variable, e^{-u^2} elsewhere
    RadicalSum integral;
    for (const auto& [e, c] : P.terms()) {
        RadicalSum mono = gauss_full_doubled(e[vb]);
        if (mono.is_zero()) continue;
        bool dead = false;
        for (int i = 0; i < N && !dead; ++i) {
            if (i == va || i == vb) continue;
            RadicalSum g = gauss_full(e[i]);
            if (g.is_zero()) {
                dead = true;
            } else {
                mono = mono * g;
            }
        }
        if (!dead) integral += mono * c;
    }
    const mpq_class w = w_exact(residue, N, k + 1)[k];
    return integral * (w * N / NpowN);
}

std::vector<Real> v_coefficients(const ResidueConfig& cfg, const LatticeClass& ell, int j,
                                 int r_min, int r_max, long prec) {
    const int residue =
        smallest_positive_residue(ell.ell[cfg.alpha - 1] - ell.ell[cfg.beta - 1], cfg.N);
    const auto C = c_polynomials(cfg, j + 1);
    std::vector<Real> out;
    out.reserve(r_max - r_min + 1);
    for (int r = r_min; r <= r_max; ++r) out.push_back(v_exact(cfg, residue, j, r, C).to_real(prec));
    return out;
}

std::vector<RadicalSum> e_exact(const ResidueConfig& cfg, int residue, int R) {
    if (R < 1) throw std::invalid_argument("e_exact: R must be >= 1");
    const auto C = c_polynomials(cfg, R);
    std::vector<RadicalSum> E(R);
    for (int r = 0; r < R; ++r) {
        for (int j = 0; j <= r; ++j) E[r] += v_exact(cfg, residue, j, r - j - cfg.N, C);
    }
    return E;
}

ExpansionLadder e_coefficients_residue(const ResidueConfig& cfg, int residue, int R, long prec) {
    ExpansionLadder ladder{cfg, residue, prec, {}, {}, {}, {}};
    const auto W = w_exact(residue, cfg.N, R);
    for (const auto& w : W) ladder.W.emplace_back(w, prec);
    const auto C = c_polynomials(cfg, R);
    std::vector<RadicalSum> exact(R);
    for (int r = 0; r < R; ++r) {
        for (int j = 0; j <= r; ++j) {
            const RadicalSum v = v_exact(cfg, residue, j, r - j - cfg.N, C);
            ladder.V.insert({{j, r - j - cfg.N}, v.to_real(prec)});
            exact[r] += v;
        }
    }
    for (const auto& e : exact) {
        Real lo = e.to_real(prec);
        Real hi = e.to_real(2 * prec);
        Real delta = hi.is_zero() ? abs(lo) : abs((lo - hi) / hi);
        ladder.E.push_back(std::move(lo));
        ladder.E_delta.push_back(std::move(delta));
    }
    return ladder;
}

ExpansionLadder e_coefficients(const ResidueConfig& cfg, const LatticeClass& ell, int R,
                               long prec) {
    const int residue =
        smallest_positive_residue(ell.ell[cfg.alpha - 1] - ell.ell[cfg.beta - 1], cfg.N);
    return e_coefficients_residue(cfg, residue, R, prec);
}

std::string ExpansionLadder::to_json() const {
    std::string out = "{\"N\":" + std::to_string(cfg.N) + ",\"K\":" + std::to_string(cfg.K) +
                      ",\"alpha\":" + std::to_string(cfg.alpha) +
                      ",\"beta\":" + std::to_string(cfg.beta) +
                      ",\"res\":" + std::to_string(residue) +
                      ",\"precision\":" + std::to_string(precision) + ",\"E\":[";
    for (size_t i = 0; i < E.size(); ++i) {
        if (i) out += ',';
        out += "\"" + E[i].to_string() + "\"";
    }
    return out + "]}";
}

mpq_class gamma_half_ratio(const mpq_class& num, const mpq_class& den) {
    mpq_class diff = num - den;
    diff.canonicalize();
    if (diff.get_den() != 1 || diff < 0)
        throw std::invalid_argument("gamma_half_ratio: num - den must be a nonnegative integer");
    mpq_class d = den;
    d.canonicalize();
    if (d.get_den() == 1 && d <= 0) return 0;  // reciprocal Gamma vanishes at the pole
    mpq_class prod(1);
    mpq_class x = den;
    for (mpz_class i = 0; i < diff.get_num(); ++i) {
        prod *= x;
        x += 1;
    }
    return prod;
}

Real c_abr(const mpq_class& A_in, const Real& B, int r, long prec) {
    mpq_class A = A_in;
    A.canonicalize();
    mpq_class twoA = A * 2;
    if (twoA.get_den() != 1) throw std::invalid_argument("c_abr: A must be a half-integer");
    if (A < 0) throw std::invalid_argument("c_abr: A must be >= 0");
    if (r < 0) throw std::invalid_argument("c_abr: r must be >= 0");
    if (!(B > 0)) throw std::invalid_argument("c_abr: B must be > 0");
    const mpq_class lower = A - r + mpq_class(3, 2);
    const mpq_class upper = A + r + mpq_class(3, 2);
    const mpq_class ratio = gamma_half_ratio(upper, lower);
    if (ratio == 0) return Real(0, prec);
    Real value = pow(Real(-1, prec) / (4 * B), static_cast<long>(r));
    value *= pow(B, Real(A + mpq_class(1, 2), prec));
    value *= Real(ratio, prec);
    value /= 2 * sqrt(Real::pi(prec)) * Real(mpz_class(factorial(r)), prec);
    return value;
}

}  // namespace partbias
