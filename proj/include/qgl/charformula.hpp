// Formal characters: integer Laurent polynomials in x1, x2, x3, y, Schur
// polynomials via the bialternant, and the closed-form character expressions
// for the module families produced by the Koszul-complex machinery.  All
// divisions are exact (a failure throws) and all equalities are decided by
// cross-multiplication, never by division in a fraction field.

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "qgl/scalar.hpp"

namespace qgl {

// Exponents are capped at |e| <= 64 per variable; exceeding the cap is a
// hard error, not wraparound.
class LaurentChar {
public:
    using Exp = std::array<int, 4>;  // (x1, x2, x3, y) exponents

    LaurentChar() = default;
    static LaurentChar one();
    static LaurentChar monomial(int a1, int a2, int a3, int b, long long c = 1);
    static LaurentChar var(int which);  // 0..2 -> x_{which+1}, 3 -> y

    bool is_zero() const { return t_.empty(); }
    long long coeff(const Exp& e) const;
    long long dim() const;  // evaluation at x1=x2=x3=y=1
    const std::map<Exp, long long>& terms() const { return t_; }

    friend LaurentChar operator+(const LaurentChar& a, const LaurentChar& b);
    friend LaurentChar operator-(const LaurentChar& a, const LaurentChar& b);
    friend LaurentChar operator*(const LaurentChar& a, const LaurentChar& b);
    LaurentChar operator-() const;
    LaurentChar& operator+=(const LaurentChar& b);
    LaurentChar& operator-=(const LaurentChar& b);
    LaurentChar& operator*=(const LaurentChar& b);
    LaurentChar times(long long c) const;
    LaurentChar pow(int e) const;  // e >= 0, or monomial inverses
    bool operator==(const LaurentChar&) const = default;

    LaurentChar dual() const;  // x_i -> 1/x_i, y -> 1/y

    void add_term(const Exp& e, long long c);
    std::string str() const;  // sorted "c*x1^a*x2^b*x3^c*y^d" terms

private:
    std::map<Exp, long long> t_;
};

// Exact division in the Laurent ring; throws Error if the quotient is not a
// Laurent polynomial (flags a transcription bug in a closed form).
LaurentChar exact_div(const LaurentChar& num, const LaurentChar& den);

// Ratio held unevaluated; equality against polynomials goes through
// cross-multiplication.
struct RationalCharExpr {
    LaurentChar num, den;
};

struct CharCompare {
    bool equal = true;
    std::optional<LaurentChar::Exp> witness;  // first differing monomial
};
CharCompare char_equal(const LaurentChar& a, const LaurentChar& b);
CharCompare char_equal(const RationalCharExpr& a, const LaurentChar& b);
CharCompare char_equal(const RationalCharExpr& a, const RationalCharExpr& b);

// Schur polynomial S(m,n,p) in x1,x2,x3 for a dominant triple m >= n >= p
// (negative parts allowed: Laurent shift of the bialternant).
LaurentChar schur3(int m, int n, int p);

// Classical factor characters of the symmetric/exterior spaces of a (3|1)
// super vector space; used as independent cross-checks and in plan assembly.
LaurentChar sym_char(int n);        // 0 for n < 0
LaurentChar ext_char(int k);        // 0 for k < 0
LaurentChar berezinian_char();      // x1*x2*x3*y^-1

// Closed-form characters of the constructed module families.
// Hook weights (m,n,p|0) with m >= n >= p >= 0: three display branches
// (p >= 1 product form; p = 0 two-row and one-row forms, both secretly
// polynomial rational expressions).
LaurentChar module_char_hook(int m, int n, int p);
// Image of the Koszul differential out of degree (k,l); valid k >= 2, k-l != 2.
LaurentChar module_char_image(int k, int l);
// Complements extracted from the double complex loops.
LaurentChar module_char_x(int i, int a);             // i >= 0, a+i >= 0
LaurentChar module_char_y(int i, int k, int a);      // k >= 2, a+i+k >= 0

}  // namespace qgl
