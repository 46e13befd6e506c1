#include "partbias/residue.hpp"

#include <stdexcept>
#include <string>

namespace partbias {

ResidueConfig::ResidueConfig(int N_, int K_, int alpha_, int beta_)
    : N(N_), K(K_), alpha(alpha_), beta(beta_) {
    if (N < 2) throw std::invalid_argument("ResidueConfig: N must be >= 2");
    if (K < 0) throw std::invalid_argument("ResidueConfig: K must be >= 0");
    if (alpha < 1 || alpha > N || beta < 1 || beta > N)
        throw std::invalid_argument("ResidueConfig: alpha, beta must lie in 1..N");
    if (alpha == beta) throw std::invalid_argument("ResidueConfig: alpha must differ from beta");
}

int smallest_positive_residue(long l, int N) {
    long r = l % N;
    if (r < 0) r += N;
    return r == 0 ? N : static_cast<int>(r);
}

QuadraticData quad_data(const ResidueConfig& cfg) {
    QuadraticData qd;
    const long base = cfg.K / cfg.N;
    const int extra = cfg.K % cfg.N;
    qd.e.reserve(cfg.N);
    qd.b.reserve(cfg.N);
    for (int j = 1; j <= cfg.N; ++j) {
        const long ej = base + (j <= extra ? 1 : 0);
        qd.e.push_back(ej);
        mpq_class bj(j, cfg.N);
        bj.canonicalize();
        bj -= mpq_class(1, 2);
        bj += ej;
        qd.b.push_back(bj);
    }
    return qd;
}

mpq_class quad_form_H(const std::vector<long>& n, const QuadraticData& qd) {
    if (n.size() != qd.b.size())
        throw std::invalid_argument("quad_form_H: vector length " + std::to_string(n.size()) +
                                    " does not match dimension " + std::to_string(qd.b.size()));
    mpq_class h(0);
    for (size_t j = 0; j < n.size(); ++j) {
        mpq_class sq(n[j] * n[j], 2);
        sq.canonicalize();
        h += sq + qd.b[j] * n[j];
    }
    return h;
}

mpz_class nh_integer(const std::vector<long>& n, const QuadraticData& qd, int N) {
    mpq_class nh = quad_form_H(n, qd);
    nh *= N;
    if (nh.get_den() != 1)
        throw std::logic_error("nh_integer: N*H(n) is not an integer");
    return nh.get_num();
}

LatticeClass::LatticeClass(std::vector<int> ell_, int N) : ell(std::move(ell_)) {
    if (static_cast<int>(ell.size()) != N)
        throw std::invalid_argument("LatticeClass: vector length must equal N");
    for (int v : ell) {
        if (v < 0 || v >= N)
            throw std::invalid_argument("LatticeClass: entries must lie in 0..N-1");
    }
}

}  // namespace partbias
