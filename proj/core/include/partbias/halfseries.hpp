#ifndef PARTBIAS_HALFSERIES_HPP
#define PARTBIAS_HALFSERIES_HPP

#include <stdexcept>
#include <vector>

namespace partbias {

/// Truncated formal series in x = z^{1/2}: coeff[k] multiplies z^{k/2}.
/// The coefficient ring T needs +=, *, and an is_zero() predicate supplied
/// by the helpers below; MultiPoly and Real both qualify.
template <class T>
struct HalfSeries {
    std::vector<T> coeff;

    size_t order() const { return coeff.size(); }
    const T& operator[](size_t k) const { return coeff.at(k); }
    T& operator[](size_t k) { return coeff.at(k); }
};

template <class T>
HalfSeries<T> series_mul(const HalfSeries<T>& a, const HalfSeries<T>& b, size_t trunc,
                         const T& zero) {
    HalfSeries<T> r;
    r.coeff.assign(trunc, zero);
    for (size_t i = 0; i < a.coeff.size() && i < trunc; ++i) {
        for (size_t j = 0; j < b.coeff.size() && i + j < trunc; ++j) {
            r.coeff[i + j] += a.coeff[i] * b.coeff[j];
        }
    }
    return r;
}

/// exp of a series with zero constant term, truncated to `trunc`
/// half-orders. DivInt divides a coefficient by an unsigned integer (used
/// for the 1/k! factors).
template <class T, class DivInt>
HalfSeries<T> series_exp(const HalfSeries<T>& s, size_t trunc, const T& zero, const T& one,
                         DivInt div_int) {
    if (!s.coeff.empty() && !(s.coeff[0] == zero))
        throw std::invalid_argument("series_exp: nonzero constant term");
    HalfSeries<T> out;
    out.coeff.assign(trunc, zero);
    if (trunc == 0) return out;
    out.coeff[0] = one;
    HalfSeries<T> term;
    term.coeff.assign(trunc, zero);
    term.coeff[0] = one;
    for (size_t k = 1; k < trunc; ++k) {
        term = series_mul(term, s, trunc, zero);
        for (auto& c : term.coeff) c = div_int(c, k);
        for (size_t i = 0; i < trunc; ++i) out.coeff[i] += term.coeff[i];
    }
    return out;
}

}  // namespace partbias

#endif
