#pragma once

#include <map>
#include <string>
#include <vector>

#include "pwlent/rational.hpp"

namespace pwlent {

// Integer polynomial, coefficient index = degree.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    // {{degree, coefficient}, ...}
    static IntPolynomial from_terms(std::initializer_list<std::pair<unsigned, long>> terms);
    static IntPolynomial monomial(unsigned degree, const BigInt& c = 1);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return c_; }
    BigInt coeff(unsigned i) const { return i < c_.size() ? c_[i] : BigInt(0); }
    const BigInt& leading() const;

    BigRational eval(const BigRational& x) const;
    int sign_at(const BigRational& x) const { return eval(x).sign(); }
    IntPolynomial derivative() const;
    // Divide out the largest power of λ.
    IntPolynomial strip_lambda() const;
    // Divide by the positive gcd of the coefficients.
    IntPolynomial primitive() const;

    IntPolynomial operator-() const;
    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

    // e.g. "λ^7 - λ^4 - 2"
    std::string str(const std::string& var = "λ") const;

private:
    void trim();
    std::vector<BigInt> c_;
};

// Pseudo-remainder scaled by a positive factor; keeps the sign pattern Sturm needs.
IntPolynomial positive_pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

struct RootInterval {
    BigRational lo, hi;
    IntPolynomial poly;

    bool exact() const { return lo == hi; }
    BigRational width() const { return hi - lo; }
    BigRational mid() const { return (lo + hi) / 2; }
};

unsigned descartes_positive_sign_changes(const IntPolynomial& p);

// Cauchy bound 1 + max|a_i/a_n|; every real root has absolute value below it.
BigRational cauchy_bound(const IntPolynomial& p);

// Requires exactly one sign change. Result width < 10^-digits or an exact root.
RootInterval isolate_unique_positive_root(const IntPolynomial& p, unsigned digits);

// Sturm sequence of p (p, p', -rem, ...), primitive parts.
std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p);
// Number of distinct real roots in (a, b].
unsigned sturm_count(const std::vector<IntPolynomial>& seq, const BigRational& a, const BigRational& b);

// Largest real root of p, isolated by Sturm counting and exact bisection.
// Throws if p has no real root.
RootInterval isolate_largest_real_root(const IntPolynomial& p, unsigned digits);

// Shrink an enclosure in place until width < 10^-digits.
void refine(RootInterval& r, unsigned digits);

// Laurent polynomial in λ: exponent -> coefficient; zero coefficients never stored.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    static LaurentPolynomial term(int exponent, const BigInt& c = 1);

    bool is_zero() const { return t_.empty(); }
    const std::map<int, BigInt>& terms() const { return t_; }
    int min_exponent() const;
    int max_exponent() const;

    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.t_ == b.t_; }

    // Multiply by λ^shift; all resulting exponents must be >= 0.
    IntPolynomial shifted(int shift) const;

private:
    std::map<int, BigInt> t_;
};

using LaurentMatrix = std::vector<std::vector<LaurentPolynomial>>;

// Exact determinant by Laplace expansion along rows, memoized over column subsets.
LaurentPolynomial laurent_poly_det(const LaurentMatrix& m);

}  // namespace pwlent
