#include "sumcone/weight_poly.hpp"

namespace sumcone {

WeightPolynomial WeightPolynomial::monomial(std::vector<Int> exponent, Rat coeff) {
    WeightPolynomial p;
    if (coeff != 0) p.terms_.emplace(std::move(exponent), std::move(coeff));
    return p;
}

void WeightPolynomial::add_term(const std::vector<Int>& exponent, const Rat& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        terms_.emplace(exponent, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

WeightPolynomial& WeightPolynomial::operator+=(const WeightPolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

WeightPolynomial& WeightPolynomial::operator-=(const WeightPolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

WeightPolynomial WeightPolynomial::operator+(const WeightPolynomial& rhs) const {
    WeightPolynomial out = *this;
    out += rhs;
    return out;
}

WeightPolynomial WeightPolynomial::operator-(const WeightPolynomial& rhs) const {
    WeightPolynomial out = *this;
    out -= rhs;
    return out;
}

WeightPolynomial WeightPolynomial::shifted(const std::vector<Int>& shift) const {
    WeightPolynomial out;
    for (const auto& [e, c] : terms_) {
        std::vector<Int> k(e.size());
        if (e.size() != shift.size()) throw error("weight polynomial shift: dimension mismatch");
        for (std::size_t i = 0; i < e.size(); ++i) k[i] = e[i] + shift[i];
        out.terms_.emplace(std::move(k), c);
    }
    return out;
}

Rat WeightPolynomial::eval_at_ones() const {
    Rat s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

}  // namespace sumcone
