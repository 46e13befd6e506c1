#include "partbias/multipoly.hpp"

#include <numeric>
#include <stdexcept>

namespace partbias {

MultiPoly MultiPoly::constant(int dim, const mpq_class& c) {
    MultiPoly p(dim);
    if (c != 0) p.terms_[Exponents(dim, 0)] = c;
    return p;
}

MultiPoly MultiPoly::monomial(int dim, int var, int power, const mpq_class& c) {
    if (var < 0 || var >= dim) throw std::invalid_argument("MultiPoly::monomial: bad variable");
    MultiPoly p(dim);
    if (c != 0) {
        Exponents e(dim, 0);
        e[var] = power;
        p.terms_[std::move(e)] = c;
    }
    return p;
}

int MultiPoly::total_degree() const {
    int deg = 0;
    for (const auto& [e, c] : terms_)
        deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
    return deg;
}

mpq_class MultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const mpq_class& c) {
    if (static_cast<int>(e.size()) != dim_)
        throw std::invalid_argument("MultiPoly::add_term: exponent length mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0) terms_[e] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("MultiPoly: dimension mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("MultiPoly: dimension mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, mpq_class(-c));
    return *this;
}

MultiPoly& MultiPoly::operator*=(const mpq_class& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& [e, v] : terms_) v *= c;
    }
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("MultiPoly: dimension mismatch");
    MultiPoly r(a.dim_);
    MultiPoly::Exponents e(a.dim_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.dim_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly r(dim_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        --d[var];
        r.add_term(d, c * e[var]);
    }
    return r;
}

MultiPoly MultiPoly::substitute_equal(int src, int dst) const {
    MultiPoly r(dim_);
    for (const auto& [e, c] : terms_) {
        Exponents d = e;
        d[dst] += d[src];
        d[src] = 0;
        r.add_term(d, c);
    }
    return r;
}

mpq_class MultiPoly::eval(const std::vector<mpq_class>& point) const {
    if (static_cast<int>(point.size()) != dim_)
        throw std::invalid_argument("MultiPoly::eval: point length mismatch");
    mpq_class sum(0);
    for (const auto& [e, c] : terms_) {
        mpq_class term = c;
        for (int i = 0; i < dim_; ++i) {
            for (int k = 0; k < e[i]; ++k) term *= point[i];
        }
        sum += term;
    }
    return sum;
}

Real MultiPoly::eval(const std::vector<Real>& point, long prec) const {
    if (static_cast<int>(point.size()) != dim_)
        throw std::invalid_argument("MultiPoly::eval: point length mismatch");
    Real sum(prec);
    for (const auto& [e, c] : terms_) {
        Real term(c, prec);
        for (int i = 0; i < dim_; ++i) {
            if (e[i] != 0) term *= pow(point[i], static_cast<long>(e[i]));
        }
        sum += term;
    }
    return sum;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.get_str();
        for (int i = 0; i < dim_; ++i) {
            if (e[i] > 0) {
                out += "*u" + std::to_string(i + 1);
                if (e[i] > 1) out += "^" + std::to_string(e[i]);
            }
        }
    }
    return out;
}

}  // namespace partbias
