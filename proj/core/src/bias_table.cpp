#include "partbias/bias_table.hpp"

#include <stdexcept>

namespace partbias {

namespace {

// Largest possible number of parts in a partition of weight <= n_max into
// distinct positive parts: t(t+1)/2 <= n_max. The signed alpha/beta
// imbalance is bounded by this.
long imbalance_bound(long n_max) {
    long t = 0;
    while ((t + 1) * (t + 2) / 2 <= n_max) ++t;
    return t;
}

}  // namespace

std::string BiasTable::to_csv(long from) const {
    std::string out = "n,d_ab,d_ba,diff\n";
    for (long n = from; n <= n_max(); ++n) {
        const BiasRow& r = rows_[n];
        out += std::to_string(n);
        out += ',';
        out += r.d_ab.get_str();
        out += ',';
        out += r.d_ba.get_str();
        out += ',';
        out += r.diff.get_str();
        out += '\n';
    }
    return out;
}

std::string BiasTable::to_json(long from) const {
    std::string out = "[";
    for (long n = from; n <= n_max(); ++n) {
        const BiasRow& r = rows_[n];
        if (n > from) out += ',';
        out += "{\"n\":" + std::to_string(n) + ",\"d_ab\":\"" + r.d_ab.get_str() +
               "\",\"d_ba\":\"" + r.d_ba.get_str() + "\",\"diff\":\"" + r.diff.get_str() + "\"}";
    }
    out += "]";
    return out;
}

BiasTable count_bias_table(const ResidueConfig& cfg, long n_max) {
    if (n_max < 0) throw std::invalid_argument("count_bias_table: n_max must be >= 0");
    const long T = imbalance_bound(n_max);
    const long width = 2 * T + 1;
    // dp[t][n], imbalance t - T
    std::vector<std::vector<mpz_class>> dp(width, std::vector<mpz_class>(n_max + 1));
    dp[T][0] = 1;
    for (long k = cfg.K + 1; k <= n_max; ++k) {
        const int r = smallest_positive_residue(k, cfg.N);
        const int sigma = r == cfg.alpha ? 1 : (r == cfg.beta ? -1 : 0);
        if (sigma == 0) {
            for (long t = 0; t < width; ++t) {
                auto& band = dp[t];
                for (long n = n_max; n >= k; --n) {
                    if (sgn(band[n - k]) != 0) band[n] += band[n - k];
                }
            }
        } else if (sigma == 1) {
            for (long t = width - 1; t >= 1; --t) {
                auto& src = dp[t - 1];
                auto& band = dp[t];
                for (long n = n_max; n >= k; --n) {
                    if (sgn(src[n - k]) != 0) band[n] += src[n - k];
                }
            }
        } else {
            for (long t = 0; t + 1 < width; ++t) {
                auto& src = dp[t + 1];
                auto& band = dp[t];
                for (long n = n_max; n >= k; --n) {
                    if (sgn(src[n - k]) != 0) band[n] += src[n - k];
                }
            }
        }
    }
    BiasTable table(cfg, n_max);
    for (long n = 0; n <= n_max; ++n) {
        BiasRow& row = table.row(n);
        for (long t = T + 1; t < width; ++t) row.d_ab += dp[t][n];
        for (long t = 0; t < T; ++t) row.d_ba += dp[t][n];
        row.diff = row.d_ab - row.d_ba;
        table.equal_count(n) = dp[T][n];
    }
    return table;
}

namespace {

void enumerate_rec(const ResidueConfig& cfg, long remaining, long max_part, long imbalance,
                   mpz_class& d_ab, mpz_class& d_ba) {
    if (remaining == 0) {
        if (imbalance > 0)
            ++d_ab;
        else if (imbalance < 0)
            ++d_ba;
        return;
    }
    for (long part = std::min(remaining, max_part); part > cfg.K; --part) {
        const int r = smallest_positive_residue(part, cfg.N);
        const long delta = r == cfg.alpha ? 1 : (r == cfg.beta ? -1 : 0);
        enumerate_rec(cfg, remaining - part, part - 1, imbalance + delta, d_ab, d_ba);
    }
}

}  // namespace

std::pair<mpz_class, mpz_class> enumerate_oracle(const ResidueConfig& cfg, long n) {
    if (n < 0) throw std::invalid_argument("enumerate_oracle: n must be >= 0");
    if (n > 60)
        throw std::domain_error("enumerate_oracle: refusing n > 60 (combinatorial explosion)");
    mpz_class d_ab = 0, d_ba = 0;
    enumerate_rec(cfg, n, n, 0, d_ab, d_ba);
    return {d_ab, d_ba};
}

namespace {

// Coefficients of 1/(q^N;q^N)_m, truncated at n_max, for m = 0..m_max.
std::vector<std::vector<mpz_class>> inverse_pochhammers(int N, long n_max) {
    const long m_max = n_max / N + 1;
    std::vector<std::vector<mpz_class>> inv(m_max + 1, std::vector<mpz_class>(n_max + 1));
    inv[0][0] = 1;
    for (long m = 1; m <= m_max; ++m) {
        inv[m] = inv[m - 1];
        const long step = N * m;
        for (long n = step; n <= n_max; ++n) inv[m][n] += inv[m][n - step];
    }
    return inv;
}

// Minimal weight contributed by coordinate j (1-based) at occupancy m: the
// sum of the m smallest admissible parts in class j, N m(m-1)/2 + (j+N e_j) m.
long coord_weight(int N, long ej, int j, long m) {
    return N * (m * (m - 1) / 2) + (j + N * ej) * m;
}

struct LatticeSummer {
    const ResidueConfig& cfg;
    const QuadraticData qd;
    long n_max;
    std::vector<std::vector<mpz_class>> inv;
    // classified accumulators: index 0: n_alpha > n_beta, 1: <, 2: ==
    std::vector<std::vector<mpz_class>> acc;
    std::vector<long> occupancy;
    const LatticeClass* restrict_class = nullptr;

    LatticeSummer(const ResidueConfig& c, long nm)
        : cfg(c), qd(quad_data(c)), n_max(nm), inv(inverse_pochhammers(c.N, nm)),
          acc(3, std::vector<mpz_class>(nm + 1)), occupancy(c.N, 0) {}

    void run() {
        std::vector<mpz_class> one(n_max + 1);
        one[0] = 1;
        descend(0, 0, one);
    }

    // product holds prod_{i<j} inv[occupancy_i], truncated; weight is the
    // accumulated minimal weight N*H of the prefix.
    void descend(int j, long weight, const std::vector<mpz_class>& product) {
        if (j == cfg.N) {
            const long a = occupancy[cfg.alpha - 1];
            const long b = occupancy[cfg.beta - 1];
            const int slot = a > b ? 0 : (a < b ? 1 : 2);
            auto& out = acc[slot];
            for (long i = 0; weight + i <= n_max; ++i) {
                if (sgn(product[i]) != 0) out[weight + i] += product[i];
            }
            return;
        }
        const long start = restrict_class ? restrict_class->ell[j] : 0;
        const long step = restrict_class ? cfg.N : 1;
        for (long m = start;; m += step) {
            const long w = coord_weight(cfg.N, qd.e[j], j + 1, m);
            if (weight + w > n_max) break;
            occupancy[j] = m;
            if (m == 0) {
                descend(j + 1, weight, product);
            } else {
                std::vector<mpz_class> next(n_max + 1);
                const auto& pm = inv[m];
                const long budget = n_max - weight - w;
                for (long i = 0; i <= budget; ++i) {
                    if (sgn(product[i]) == 0) continue;
                    for (long l = 0; i + l <= budget; ++l) {
                        if (sgn(pm[l]) != 0) next[i + l] += product[i] * pm[l];
                    }
                }
                descend(j + 1, weight + w, next);
            }
        }
        occupancy[j] = 0;
    }
};

}  // namespace

BiasTable nahm_lattice_oracle(const ResidueConfig& cfg, long n_max) {
    if (n_max < 0) throw std::invalid_argument("nahm_lattice_oracle: n_max must be >= 0");
    LatticeSummer summer(cfg, n_max);
    summer.run();
    BiasTable table(cfg, n_max);
    for (long n = 0; n <= n_max; ++n) {
        BiasRow& row = table.row(n);
        row.d_ab = summer.acc[0][n];
        row.d_ba = summer.acc[1][n];
        row.diff = row.d_ab - row.d_ba;
        table.equal_count(n) = summer.acc[2][n];
    }
    return table;
}

std::vector<mpz_class> class_restricted_series(const ResidueConfig& cfg, const LatticeClass& ell,
                                               long n_max) {
    if (n_max < 0) throw std::invalid_argument("class_restricted_series: n_max must be >= 0");
    LatticeSummer summer(cfg, n_max);
    summer.restrict_class = &ell;
    summer.run();
    return std::move(summer.acc[0]);
}

}  // namespace partbias
