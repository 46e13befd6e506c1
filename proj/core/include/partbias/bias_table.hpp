#ifndef PARTBIAS_BIAS_TABLE_HPP
#define PARTBIAS_BIAS_TABLE_HPP

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "partbias/residue.hpp"

namespace partbias {

struct BiasRow {
    mpz_class d_ab;
    mpz_class d_ba;
    mpz_class diff;
};

/// Exact counts d_ab(n), d_ba(n) and their difference for n = 0..n_max.
/// equal_count(n) is the zero-imbalance slice (a by-product of the DP; not
/// serialized), so d_ab + d_ba + equal_count is the number of partitions of
/// n into distinct parts all > K.
class BiasTable {
  public:
    BiasTable(ResidueConfig cfg, long n_max)
        : cfg_(cfg), rows_(n_max + 1), equal_(n_max + 1) {}

    const ResidueConfig& config() const { return cfg_; }
    long n_max() const { return static_cast<long>(rows_.size()) - 1; }
    const BiasRow& row(long n) const { return rows_.at(n); }
    BiasRow& row(long n) { return rows_.at(n); }
    const mpz_class& equal_count(long n) const { return equal_.at(n); }
    mpz_class& equal_count(long n) { return equal_.at(n); }

    /// CSV with header "n,d_ab,d_ba,diff", LF line endings.
    std::string to_csv(long from = 0) const;
    /// JSON array of row objects; integers as decimal strings.
    std::string to_json(long from = 0) const;

  private:
    ResidueConfig cfg_;
    std::vector<BiasRow> rows_;
    std::vector<mpz_class> equal_;
};

/// Exact table via the signed-imbalance dynamic program over the Euler
/// product of parts k > K (factor 1 + t^{sigma(k)} q^k, sigma = +1 on class
/// alpha, -1 on class beta, 0 otherwise).
BiasTable count_bias_table(const ResidueConfig& cfg, long n_max);

/// Brute-force oracle: explicitly enumerates every partition of n into
/// distinct parts > K and classifies part residues. Guarded to n <= 60.
std::pair<mpz_class, mpz_class> enumerate_oracle(const ResidueConfig& cfg, long n);

/// Independent oracle: truncated summation of the lattice generating
/// function sum_n q^{N H(n)} / prod_j (q^N;q^N)_{n_j} over n_alpha > n_beta
/// (resp. <, =), expanded as a power series to order n_max.
BiasTable nahm_lattice_oracle(const ResidueConfig& cfg, long n_max);

/// Coefficients of the lattice sum restricted to the residue class
/// n == ell (mod N) componentwise (still with n_alpha > n_beta). Summing
/// over all N^N classes reproduces the d_ab column.
std::vector<mpz_class> class_restricted_series(const ResidueConfig& cfg, const LatticeClass& ell,
                                               long n_max);

}  // namespace partbias

#endif
