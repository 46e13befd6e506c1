#ifndef PARTBIAS_ASYMPTOTICS_HPP
#define PARTBIAS_ASYMPTOTICS_HPP

#include <string>
#include <utility>
#include <vector>

#include "partbias/real.hpp"
#include "partbias/residue.hpp"

namespace partbias {

/// A truncated asymptotic value for d_ab(n) together with its per-order
/// contributions (value is always their sum).
struct AsymptoticEstimate {
    long n;
    int order;
    Real value;
    std::vector<std::pair<int, Real>> terms;
    std::string source;

    std::string to_json() const;
};

/// Two-term estimate: the residue-class sum over lattice classes with
/// N H(ell) == n (mod N), each contributing the main term and the
/// n^{-1/4} correction. Enumerates N^N classes; guarded to N <= 6 unless
/// allow_large_N.
AsymptoticEstimate main_two_term(const ResidueConfig& cfg, long n, long prec,
                                 bool allow_large_N = false);

/// Simplified estimate, valid for N = 2 or N >= 5 (independent of
/// n mod N). Throws std::domain_error for N in {3, 4}.
AsymptoticEstimate main_simplified(const ResidueConfig& cfg, long n, long prec);

/// Leading parity-bias difference estimate for N = 2:
/// (-1)^K e^{pi sqrt(n/3)} / (2^{K+3} sqrt(6) n).
Real parity_bias_estimate(int K, long n, long prec);

/// Leading mod-3 difference estimate (N=3, K=0, alpha=1, beta=2): branch
/// constants 1/24, 1/6, -1/12 for n = 0, 1, 2 (mod 3), times
/// e^{pi sqrt(n/3)} / n.
Real mod3_bias_estimate(long n, long prec);

/// General truncated expansion of order R driven by the E-ladder and the
/// c_{A,B,r} coefficients. R = 2 coincides with main_two_term.
AsymptoticEstimate full_series_estimate(const ResidueConfig& cfg, long n, int R, long prec,
                                        bool allow_large_N = false);

/// Number of ways to complete (ell_alpha, ell_beta) to a class vector with
/// N H(ell) == r (mod N), counting the N-2 free coordinates. Equals
/// N^{N-3} for every input when N >= 5.
long lattice_class_count(int N, int r, int ell_alpha, int ell_beta, int alpha = 1, int beta = 2);

}  // namespace partbias

#endif
