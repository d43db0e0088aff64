#pragma once

#include <gmpxx.h>

#include <complex>
#include <vector>

namespace partosc::exact {

// Dense polynomial over Z, coefficients stored lowest degree first.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);

    static IntPolynomial monomial(int degree, mpz_class c = 1);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    mpz_class coeff(int k) const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

    // Remainder of *this modulo a monic divisor; exact integer arithmetic.
    IntPolynomial remainder_by_monic(const IntPolynomial& divisor) const;

    // Exact quotient; throws if the division leaves a remainder.
    IntPolynomial divide_exact(const IntPolynomial& divisor) const;

    std::complex<double> evaluate(std::complex<double> x) const;

    const std::vector<mpz_class>& coefficients() const { return coeffs_; }

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

// d-th cyclotomic polynomial, computed by exact division of x^d - 1 by the
// lower-order cyclotomic factors.  Cached; safe for concurrent use.
const IntPolynomial& cyclotomic_polynomial(int d);

// Element of Z[x]/(x^b - 1) representing sum_a coeffs[a] * zeta_b^a, with
// zeta_b = e^{2 pi i / b}.  Addition and multiplication reduce exponents
// mod b; numerical evaluation at zeta_b is independent of the representative.
class CyclotomicInteger {
public:
    explicit CyclotomicInteger(int b);
    CyclotomicInteger(int b, std::vector<mpz_class> coeffs);

    int modulus() const { return b_; }
    const mpz_class& coeff(int a) const { return coeffs_[static_cast<std::size_t>(a)]; }
    mpz_class& coeff(int a) { return coeffs_[static_cast<std::size_t>(a)]; }

    CyclotomicInteger operator+(const CyclotomicInteger& o) const;
    CyclotomicInteger operator-(const CyclotomicInteger& o) const;
    CyclotomicInteger operator*(const CyclotomicInteger& o) const;
    bool operator==(const CyclotomicInteger& o) const;

    // Complex conjugation, i.e. exponent map a -> -a mod b.
    CyclotomicInteger conjugate() const;

    // Representative reduced mod Phi_b (degree < phi(b)).  Evaluation at
    // zeta_b is unchanged, and the reduction removes the huge cancelling
    // parts of the coefficients, so the subsequent double evaluation is
    // accurate.
    IntPolynomial reduced() const;

    // Value at zeta_b as binary64 complex, computed from the reduced
    // representative.
    std::complex<double> evaluate() const;

private:
    int b_ = 0;
    std::vector<mpz_class> coeffs_;
};

class PartCountTable;

// Q_n(zeta_b^j) as an exact cyclotomic integer:
// coeff(c) = sum of p(a,b,n) over residues a with j*a == c (mod b).
CyclotomicInteger qn_exact(const PartCountTable& table, int b, int j, int n);

}  // namespace partosc::exact
