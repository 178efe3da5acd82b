#pragma once

// Laurent polynomials with integer exponent vectors and exact rational
// coefficients, used as monomial-weight generating functions of point sets.

#include "sumcone/numeric.hpp"

#include <map>

namespace sumcone {

class WeightPolynomial {
  public:
    using Terms = std::map<std::vector<Int>, Rat>;

    WeightPolynomial() = default;

    static WeightPolynomial monomial(std::vector<Int> exponent, Rat coeff = Rat(1));

    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const std::vector<Int>& exponent, const Rat& coeff);

    WeightPolynomial& operator+=(const WeightPolynomial& rhs);
    WeightPolynomial& operator-=(const WeightPolynomial& rhs);
    WeightPolynomial operator+(const WeightPolynomial& rhs) const;
    WeightPolynomial operator-(const WeightPolynomial& rhs) const;
    bool operator==(const WeightPolynomial& rhs) const = default;

    // Multiply by the monomial x^shift (exponent translation).
    WeightPolynomial shifted(const std::vector<Int>& shift) const;

    // Evaluation at x = (1,...,1): the coefficient sum.
    Rat eval_at_ones() const;

  private:
    Terms terms_;  // no zero coefficients stored
};

}  // namespace sumcone
