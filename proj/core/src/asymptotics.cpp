#include "partbias/asymptotics.hpp"

#include <map>
#include <stdexcept>

#include "partbias/saddle.hpp"

namespace partbias {

namespace {

// N H(ell) mod N for an integer class vector, via exact integer arithmetic:
// N H(n) = sum_j [ N n_j(n_j-1)/2 + j n_j + N e_j n_j ].
int nh_mod_N(const std::vector<int>& ell, const ResidueConfig& cfg) {
    long acc = 0;
    for (int j = 0; j < cfg.N; ++j) {
        const long m = ell[j];
        acc += cfg.N * (m * (m - 1) / 2) + (j + 1) * m;  // e-part vanishes mod N
        acc %= cfg.N;
    }
    return static_cast<int>(acc % cfg.N);
}

// iterate over (Z/NZ)^N; f(ell) for every vector
template <class F>
void for_each_class(int N, F&& f) {
    std::vector<int> ell(N, 0);
    while (true) {
        f(ell);
        int j = 0;
        while (j < N && ++ell[j] == N) ell[j++] = 0;
        if (j == N) break;
    }
}

void check_guard(const ResidueConfig& cfg, long n, bool allow_large_N) {
    if (n < 1) throw std::invalid_argument("estimate: n must be >= 1");
    if (cfg.N > 6 && !allow_large_N)
        throw std::domain_error(
            "estimate: class enumeration is N^N; N > 6 needs the explicit override");
}

Real exp_main(long n, long prec) {
    // e^{pi sqrt(n/3)}
    return exp(Real::pi(prec) * sqrt(Real(n, prec) / 3));
}

}  // namespace

std::string AsymptoticEstimate::to_json() const {
    std::string out = "{\"n\":" + std::to_string(n) + ",\"R\":" + std::to_string(order) +
                      ",\"value\":\"" + value.to_string() + "\",\"terms\":[";
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i) out += ',';
        out += "{\"r\":" + std::to_string(terms[i].first) + ",\"value\":\"" +
               terms[i].second.to_string() + "\"}";
    }
    return out + "]}";
}

AsymptoticEstimate main_two_term(const ResidueConfig& cfg, long n, long prec,
                                 bool allow_large_N) {
    check_guard(cfg, n, allow_large_N);
    const QuadraticData qd = quad_data(cfg);
    const int target = static_cast<int>(n % cfg.N);
    long count = 0;
    long corr_num_sum = 0;  // sum of integer correction numerators
    for_each_class(cfg.N, [&](const std::vector<int>& ell) {
        if (nh_mod_N(ell, cfg) != target) return;
        ++count;
        const int m = smallest_positive_residue(ell[cfg.alpha - 1] - ell[cfg.beta - 1], cfg.N);
        corr_num_sum += static_cast<long>(cfg.N) * cfg.N - 2L * cfg.N * m + cfg.beta - cfg.alpha +
                        cfg.N * (qd.e[cfg.beta - 1] - qd.e[cfg.alpha - 1]);
    });
    const Real n_r(n, prec);
    const Real three_q = pow(Real(3, prec), Real(mpq_class(1, 4), prec));  // 3^{1/4}
    Real npow(1, prec);
    for (int i = 0; i < cfg.N - 1; ++i) npow *= cfg.N;
    Real pref = exp_main(n, prec) /
                (ldexp(Real(1, prec), cfg.K + 3) * three_q * npow * pow(n_r, Real(mpq_class(3, 4), prec)));
    Real term0 = pref * count;
    Real term1 = pref * Real(corr_num_sum, prec) /
                 (2 * three_q * sqrt(Real(cfg.N, prec)) * pow(n_r, Real(mpq_class(1, 4), prec)));
    AsymptoticEstimate est{n, 2, term0 + term1, {}, "two-term"};
    est.terms.emplace_back(0, std::move(term0));
    est.terms.emplace_back(1, std::move(term1));
    return est;
}

AsymptoticEstimate main_simplified(const ResidueConfig& cfg, long n, long prec) {
    if (cfg.N == 3 || cfg.N == 4)
        throw std::domain_error(
            "main_simplified requires N = 2 or N >= 5 (the estimate depends on n mod N "
            "otherwise); use main_two_term");
    if (n < 1) throw std::invalid_argument("estimate: n must be >= 1");
    const QuadraticData qd = quad_data(cfg);
    const long corr_num =
        -cfg.N + cfg.beta - cfg.alpha + cfg.N * (qd.e[cfg.beta - 1] - qd.e[cfg.alpha - 1]);
    const Real n_r(n, prec);
    const Real three_q = pow(Real(3, prec), Real(mpq_class(1, 4), prec));
    Real pref = exp_main(n, prec) /
                (ldexp(Real(1, prec), cfg.K + 3) * three_q * pow(n_r, Real(mpq_class(3, 4), prec)));
    Real term1 = pref * Real(corr_num, prec) /
                 (2 * three_q * sqrt(Real(cfg.N, prec)) * pow(n_r, Real(mpq_class(1, 4), prec)));
    AsymptoticEstimate est{n, 2, pref + term1, {}, "simplified"};
    est.terms.emplace_back(0, pref);
    est.terms.emplace_back(1, std::move(term1));
    return est;
}

Real parity_bias_estimate(int K, long n, long prec) {
    if (K < 0 || n < 1) throw std::invalid_argument("parity_bias_estimate: K >= 0, n >= 1");
    Real val = exp_main(n, prec) /
               (ldexp(Real(1, prec), K + 3) * sqrt(Real(6, prec)) * Real(n, prec));
    if (K % 2) val = -val;
    return val;
}

Real mod3_bias_estimate(long n, long prec) {
    if (n < 1) throw std::invalid_argument("mod3_bias_estimate: n must be >= 1");
    static const int num[3] = {1, 1, -1};
    static const int den[3] = {24, 6, 12};
    const int r = static_cast<int>(n % 3);
    mpq_class branch(num[r], den[r]);
    return exp_main(n, prec) * Real(branch, prec) / Real(n, prec);
}

AsymptoticEstimate full_series_estimate(const ResidueConfig& cfg, long n, int R, long prec,
                                        bool allow_large_N) {
    check_guard(cfg, n, allow_large_N);
    if (R < 1) throw std::invalid_argument("full_series_estimate: R must be >= 1");
    const int target = static_cast<int>(n % cfg.N);
    // classes collapse to the residue [ell_alpha - ell_beta]_N
    std::map<int, long> count_by_residue;
    for_each_class(cfg.N, [&](const std::vector<int>& ell) {
        if (nh_mod_N(ell, cfg) != target) return;
        const int m = smallest_positive_residue(ell[cfg.alpha - 1] - ell[cfg.beta - 1], cfg.N);
        ++count_by_residue[m];
    });
    std::map<int, std::vector<Real>> ladder_by_residue;
    for (const auto& [m, cnt] : count_by_residue) {
        (void)cnt;
        ladder_by_residue[m] = e_coefficients_residue(cfg, m, R, prec).E;
    }
    const Real B = Real::pi(prec) / 2 * sqrt(Real(cfg.N, prec) / 3);
    const Real n_over = Real(cfg.N, prec) / Real(n, prec);
    Real pref = exp_main(n, prec) /
                (pow(Real(2, prec), Real(cfg.K + mpq_class(1, 2), prec)) *
                 pow(Real::pi(prec), Real(mpq_class(cfg.N, 2), prec)));
    AsymptoticEstimate est{n, R, Real(prec), {}, "series"};
    for (int r = 0; r < R; ++r) {
        Real term(prec);
        for (int j = 0; 2 * j <= r; ++j) {
            const Real c = c_abr(mpq_class(r - 2 * j, 2), B, j, prec);
            for (const auto& [m, cnt] : count_by_residue) {
                term += c * ladder_by_residue[m][r - 2 * j] * cnt;
            }
        }
        term *= pref * pow(n_over, Real(mpq_class(r + 3, 4), prec));
        est.value += term;
        est.terms.emplace_back(r, std::move(term));
    }
    return est;
}

long lattice_class_count(int N, int r, int ell_alpha, int ell_beta, int alpha, int beta) {
    if (N < 3) throw std::invalid_argument("lattice_class_count: N must be >= 3");
    if (alpha < 1 || alpha > N || beta < 1 || beta > N || alpha == beta)
        throw std::invalid_argument("lattice_class_count: bad alpha/beta");
    if (ell_alpha < 0 || ell_alpha >= N || ell_beta < 0 || ell_beta >= N)
        throw std::invalid_argument("lattice_class_count: class entries must lie in 0..N-1");
    const int target = ((r % N) + N) % N;
    // K is irrelevant: N e_j ell_j == 0 mod N
    const ResidueConfig cfg(N, 0, alpha, beta);
    long count = 0;
    std::vector<int> ell(N, 0);
    ell[alpha - 1] = ell_alpha;
    ell[beta - 1] = ell_beta;
    std::vector<int> free_idx;
    for (int j = 0; j < N; ++j) {
        if (j != alpha - 1 && j != beta - 1) free_idx.push_back(j);
    }
    std::vector<int> state(free_idx.size(), 0);
    while (true) {
        for (size_t i = 0; i < free_idx.size(); ++i) ell[free_idx[i]] = state[i];
        if (nh_mod_N(ell, cfg) == target) ++count;
        size_t j = 0;
        while (j < state.size() && ++state[j] == N) state[j++] = 0;
        if (j == state.size()) break;
    }
    return count;
}

}  // namespace partbias
