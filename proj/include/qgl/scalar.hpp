// Exact arithmetic in Q(p): rational functions in one indeterminate with
// arbitrary-precision integer coefficients, plus q-integer combinatorics and
// an evaluation homomorphism to Q.  This is the base field of all linear
// algebra in the library.
//
// Note on the indeterminate: the printed symbol is always "p".  For the
// bundled R-matrix the generator is the deformation parameter of the matrix
// entries, and the Hecke parameter of that symmetry equals the *square* of
// the generator; bracket formulas therefore take an explicit base argument
// (q_int_at) so they can run at the Hecke parameter of any symmetry.

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace qgl {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};
struct PoleError : Error {
    explicit PoleError(const std::string& msg) : Error(msg) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};
struct BudgetError : Error {
    explicit BudgetError(const std::string& msg) : Error(msg) {}
};

// Dense integer-coefficient polynomial in p.  coeff[i] is the coefficient of
// p^i; trailing zeros are never stored, the zero polynomial has no terms.
class Poly {
public:
    Poly() = default;
    explicit Poly(const mpz_class& c);
    explicit Poly(long c);
    explicit Poly(std::vector<mpz_class> coeffs);

    static Poly variable();
    static Poly monomial(const mpz_class& c, int k);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const mpz_class& coeff(int i) const;
    const mpz_class& leading() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    bool operator==(const Poly&) const = default;

    // gcd of coefficients carrying the sign of the leading coefficient;
    // 0 for the zero polynomial.
    mpz_class content_signed() const;
    Poly divided_by(const mpz_class& c) const;  // exact, throws otherwise

    static Poly div_exact(const Poly& a, const Poly& b);  // throws if inexact
    static Poly gcd(const Poly& a, const Poly& b);  // primitive, leading > 0

    mpq_class eval(const mpq_class& x) const;
    std::string str() const;
    static Poly parse(const std::string& s);

private:
    void trim();
    std::vector<mpz_class> c_;
};

// Evaluation point for the fast backend.  Must be neither 0 nor a root of
// unity; for exact rationals the only roots of unity are +1/-1, but the
// screen still walks powers up to unity_bound to honor the contract for any
// future subfield embedding.
struct EvalPoint {
    mpq_class q0;
    explicit EvalPoint(mpq_class v, int unity_bound = 64);
};

// Canonical rational function c * n(p)/d(p) with c rational, n and d
// primitive with positive leading coefficient and gcd(n, d) = 1.  The zero
// element is c = 0, n = d = 1.  This normal form is unique, so equality is
// component-wise.
class Scalar {
public:
    Scalar();
    Scalar(long v);  // NOLINT: implicit by design, mirrors field literals
    explicit Scalar(const mpz_class& v);
    explicit Scalar(const mpq_class& v);

    static Scalar generator();
    static Scalar from_poly(const Poly& n);
    static Scalar ratio(Poly num, Poly den);  // throws on zero denominator

    bool is_zero() const { return sgn(c_) == 0; }
    bool is_one() const;
    bool is_constant() const { return n_.degree() <= 0 && d_.degree() <= 0; }
    mpq_class as_rational() const;  // requires is_constant

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b);
    Scalar& operator-=(const Scalar& b);
    Scalar& operator*=(const Scalar& b);
    Scalar& operator/=(const Scalar& b);
    Scalar operator-() const;
    Scalar inv() const;  // throws PoleError on zero
    Scalar pow(long e) const;
    bool operator==(const Scalar&) const = default;

    // Numerator/denominator with integer contents folded in: num/den is the
    // reduced fraction form used by the textual serialization.
    Poly num() const;
    Poly den() const;

    mpq_class eval(const EvalPoint& pt) const;  // PoleError if den vanishes
    std::string str() const;
    static Scalar parse(const std::string& s);

private:
    Scalar(mpq_class c, Poly n, Poly d);  // assumes canonical parts
    mpq_class c_;
    Poly n_, d_;
};

// Brackets at the field generator: [n] = (p^n - 1)/(p - 1), any integer n.
Scalar q_int(long n);
Scalar q_factorial(long n);  // n >= 0

// Brackets at an arbitrary base (used with a symmetry's Hecke parameter).
// Computed additively, so base = 1 yields the classical values [n] = n.
Scalar q_int_at(const Scalar& base, long n);
Scalar q_factorial_at(const Scalar& base, long n);

}  // namespace qgl
