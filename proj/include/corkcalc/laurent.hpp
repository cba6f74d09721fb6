#pragma once

#include "corkcalc/errors.hpp"
#include "corkcalc/matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace corkcalc {

/* Integer-coefficient Laurent polynomial in t.  Invariant: no zero terms are
 * stored; the zero polynomial is the empty map. */
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    LaurentPolynomial(Int c, int e) { add_term(std::move(c), e); }
    explicit LaurentPolynomial(Int c) { add_term(std::move(c), 0); }
    static LaurentPolynomial t(int e = 1) { return LaurentPolynomial(Int(1), e); }

    const std::map<int, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int min_exp() const;
    int max_exp() const;
    Int coeff(int e) const;
    void add_term(Int c, int e);

    bool operator==(const LaurentPolynomial& o) const = default;
    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-() const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;

    LaurentPolynomial times_monomial(const Int& c, int e) const;
    /* t -> t^-1 */
    LaurentPolynomial reciprocal() const;
    Int eval_at_one() const;

    /* Multiply by the unit ±t^k making the polynomial symmetric in t <-> 1/t
     * with value 1 at t = 1; verifies both.  Error "Normalization" if the
     * input is not a unit multiple of such a polynomial. */
    LaurentPolynomial normalized_alexander() const;

    /* "1*t^-1 - 3*t^0 + 1*t^1"; zero polynomial is "0" */
    std::string to_string() const;
    static LaurentPolynomial parse(const std::string& text);

private:
    std::map<int, Int> terms_;
};

/* gcd in Z[t] up to sign and powers of t; canonical result has lowest
 * exponent 0 and positive leading coefficient. */
LaurentPolynomial laurent_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

/* Exact determinant of a square matrix of Laurent polynomials, up to the
 * unit ±t^k (row scaling by powers of t is used to stay in Z[t]). */
LaurentPolynomial laurent_det(const std::vector<std::vector<LaurentPolynomial>>& m);

}  // namespace corkcalc
