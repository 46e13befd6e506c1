#ifndef PARTBIAS_RESIDUE_HPP
#define PARTBIAS_RESIDUE_HPP

#include <gmpxx.h>

#include <vector>

namespace partbias {

/// Fixed problem parameters: modulus N >= 2, part floor K >= 0, and the two
/// distinguished residue classes alpha != beta in 1..N.
struct ResidueConfig {
    int N;
    int K;
    int alpha;
    int beta;

    ResidueConfig(int N_, int K_, int alpha_, int beta_);

    /// Same parameters with alpha and beta exchanged.
    ResidueConfig swapped() const { return ResidueConfig(N, K, beta, alpha); }
};

/// Smallest positive integer congruent to l mod N; multiples of N map to N.
int smallest_positive_residue(long l, int N);

/// The shift data of the quadratic form: e has entry sum K with entries in
/// {floor(K/N), floor(K/N)+1} (the first K mod N entries carry the +1), and
/// b_j = j/N - 1/2 + e_j, so that sum_j b_j = K + 1/2.
struct QuadraticData {
    std::vector<long> e;
    std::vector<mpq_class> b;
};

QuadraticData quad_data(const ResidueConfig& cfg);

/// H(n) = (1/2) n^T n + b^T n, exact. Throws std::invalid_argument on a
/// length mismatch.
mpq_class quad_form_H(const std::vector<long>& n, const QuadraticData& qd);

/// N * H(n), which is a (nonnegative, for n >= 0) integer for integer n.
mpz_class nh_integer(const std::vector<long>& n, const QuadraticData& qd, int N);

/// A residue class of the summation lattice: a vector in {0,..,N-1}^N.
struct LatticeClass {
    std::vector<int> ell;

    LatticeClass(std::vector<int> ell_, int N);
};

}  // namespace partbias

#endif
