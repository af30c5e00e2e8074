#include "qgl/charformula.hpp"

#include <algorithm>

namespace qgl {

namespace {
constexpr int kMaxExp = 64;

void check_exp(const LaurentChar::Exp& e) {
    for (int v : e)
        if (v > kMaxExp || v < -kMaxExp) throw Error("LaurentChar: exponent out of range");
}

LaurentChar::Exp add_exp(const LaurentChar::Exp& a, const LaurentChar::Exp& b) {
    LaurentChar::Exp r;
    for (int i = 0; i < 4; ++i) r[i] = a[i] + b[i];
    check_exp(r);
    return r;
}
}  // namespace

LaurentChar LaurentChar::one() { return monomial(0, 0, 0, 0); }

LaurentChar LaurentChar::monomial(int a1, int a2, int a3, int b, long long c) {
    LaurentChar r;
    r.add_term({a1, a2, a3, b}, c);
    return r;
}

LaurentChar LaurentChar::var(int which) {
    Exp e{0, 0, 0, 0};
    e.at(which) = 1;
    LaurentChar r;
    r.add_term(e, 1);
    return r;
}

long long LaurentChar::coeff(const Exp& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? 0 : it->second;
}

long long LaurentChar::dim() const {
    long long s = 0;
    for (const auto& [e, c] : t_) s += c;
    return s;
}

void LaurentChar::add_term(const Exp& e, long long c) {
    if (c == 0) return;
    check_exp(e);
    auto [it, inserted] = t_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

LaurentChar operator+(const LaurentChar& a, const LaurentChar& b) {
    LaurentChar r = a;
    for (const auto& [e, c] : b.t_) r.add_term(e, c);
    return r;
}

LaurentChar operator-(const LaurentChar& a, const LaurentChar& b) {
    LaurentChar r = a;
    for (const auto& [e, c] : b.t_) r.add_term(e, -c);
    return r;
}

LaurentChar operator*(const LaurentChar& a, const LaurentChar& b) {
    LaurentChar r;
    for (const auto& [e1, c1] : a.t_)
        for (const auto& [e2, c2] : b.t_) r.add_term(add_exp(e1, e2), c1 * c2);
    return r;
}

LaurentChar LaurentChar::operator-() const {
    LaurentChar r;
    for (const auto& [e, c] : t_) r.t_[e] = -c;
    return r;
}

LaurentChar& LaurentChar::operator+=(const LaurentChar& b) { return *this = *this + b; }
LaurentChar& LaurentChar::operator-=(const LaurentChar& b) { return *this = *this - b; }
LaurentChar& LaurentChar::operator*=(const LaurentChar& b) { return *this = *this * b; }

LaurentChar LaurentChar::times(long long c) const {
    LaurentChar r;
    if (c == 0) return r;
    for (const auto& [e, k] : t_) r.t_[e] = k * c;
    return r;
}

LaurentChar LaurentChar::pow(int e) const {
    if (e < 0) {
        if (t_.size() != 1) throw Error("LaurentChar: negative power of a non-monomial");
        const auto& [ex, c] = *t_.begin();
        if (c != 1 && c != -1) throw Error("LaurentChar: negative power of a non-unit");
        Exp inv;
        for (int i = 0; i < 4; ++i) inv[i] = -ex[i];
        return monomial(inv[0], inv[1], inv[2], inv[3], c).pow(-e);
    }
    LaurentChar r = one(), base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

LaurentChar LaurentChar::dual() const {
    LaurentChar r;
    for (const auto& [e, c] : t_) r.t_[{-e[0], -e[1], -e[2], -e[3]}] = c;
    return r;
}

std::string LaurentChar::str() const {
    if (t_.empty()) return "0";
    static const char* names[4] = {"x1", "x2", "x3", "y"};
    std::string out;
    // Descending lex so x1-heavy monomials print first.
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [e, c] = *it;
        long long mag = c < 0 ? -c : c;
        std::string vars;
        for (int i = 0; i < 4; ++i) {
            if (e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += names[i];
            if (e[i] != 1) vars += "^" + std::to_string(e[i]);
        }
        std::string term;
        if (vars.empty())
            term = std::to_string(mag);
        else
            term = (mag == 1) ? vars : std::to_string(mag) + "*" + vars;
        if (out.empty())
            out = (c < 0 ? "-" : "") + term;
        else
            out += (c < 0 ? " - " : " + ") + term;
    }
    return out;
}

LaurentChar exact_div(const LaurentChar& num, const LaurentChar& den) {
    if (den.is_zero()) throw Error("LaurentChar: division by zero");
    if (num.is_zero()) return LaurentChar();
    // Shift each operand into the polynomial quadrant by its own valuation.
    // Per-variable valuations are additive under multiplication, so the
    // shifted division is exact iff the Laurent division is; the quotient is
    // restored by the monomial x^(alpha-beta) at the end.  (A common shift
    // would wrongly reject quotients with negative exponents.)
    LaurentChar::Exp alpha = num.terms().begin()->first, beta = den.terms().begin()->first;
    for (const auto& [e, c] : num.terms())
        for (int i = 0; i < 4; ++i) alpha[i] = std::min(alpha[i], e[i]);
    for (const auto& [e, c] : den.terms())
        for (int i = 0; i < 4; ++i) beta[i] = std::min(beta[i], e[i]);
    LaurentChar n, d;
    for (const auto& [e, c] : num.terms())
        n.add_term({e[0] - alpha[0], e[1] - alpha[1], e[2] - alpha[2], e[3] - alpha[3]}, c);
    for (const auto& [e, c] : den.terms())
        d.add_term({e[0] - beta[0], e[1] - beta[1], e[2] - beta[2], e[3] - beta[3]}, c);
    const auto& dlt = *d.terms().rbegin();
    LaurentChar q, r = n;
    while (!r.is_zero()) {
        const auto& rlt = *r.terms().rbegin();
        LaurentChar::Exp qe;
        for (int i = 0; i < 4; ++i) {
            qe[i] = rlt.first[i] - dlt.first[i];
            if (qe[i] < 0) throw Error("LaurentChar: inexact division (exponent)");
        }
        if (rlt.second % dlt.second != 0)
            throw Error("LaurentChar: inexact division (coefficient)");
        long long qc = rlt.second / dlt.second;
        LaurentChar qt = LaurentChar::monomial(qe[0], qe[1], qe[2], qe[3], qc);
        q += qt;
        r -= qt * d;
    }
    return q * LaurentChar::monomial(alpha[0] - beta[0], alpha[1] - beta[1], alpha[2] - beta[2],
                                     alpha[3] - beta[3]);
}

CharCompare char_equal(const LaurentChar& a, const LaurentChar& b) {
    CharCompare r;
    LaurentChar diff = a - b;
    if (!diff.is_zero()) {
        r.equal = false;
        r.witness = diff.terms().rbegin()->first;
    }
    return r;
}

CharCompare char_equal(const RationalCharExpr& a, const LaurentChar& b) {
    return char_equal(a.num, b * a.den);
}

CharCompare char_equal(const RationalCharExpr& a, const RationalCharExpr& b) {
    return char_equal(a.num * b.den, b.num * a.den);
}

// ---------------------------------------------------------------- Schur ----

namespace {
// Alternant det(x_i^{e_j}) for strictly decreasing exponents e.
LaurentChar alternant3(int e1, int e2, int e3) {
    static const int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                   {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    LaurentChar r;
    const int es[3] = {e1, e2, e3};
    for (int s = 0; s < 6; ++s) {
        LaurentChar::Exp e{0, 0, 0, 0};
        for (int i = 0; i < 3; ++i) e[perm[s][i]] = es[i];
        r.add_term(e, s < 3 ? 1 : -1);
    }
    return r;
}

LaurentChar vandermonde3() {
    LaurentChar x1 = LaurentChar::var(0), x2 = LaurentChar::var(1), x3 = LaurentChar::var(2);
    return (x1 - x2) * (x2 - x3) * (x1 - x3);
}

LaurentChar xyz_pow(int e) {
    return LaurentChar::monomial(e, e, e, 0);
}

// Complete homogeneous h_n in x1, x2, x3.
LaurentChar h3(int n) {
    if (n < 0) return LaurentChar();
    LaurentChar r;
    for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b) r.add_term({a, b, n - a - b, 0}, 1);
    return r;
}

// Elementary e_j in x1, x2, x3.
LaurentChar e3(int j) {
    switch (j) {
        case 0: return LaurentChar::one();
        case 1: return LaurentChar::monomial(1, 0, 0, 0) + LaurentChar::monomial(0, 1, 0, 0) +
                       LaurentChar::monomial(0, 0, 1, 0);
        case 2: return LaurentChar::monomial(1, 1, 0, 0) + LaurentChar::monomial(1, 0, 1, 0) +
                       LaurentChar::monomial(0, 1, 1, 0);
        case 3: return LaurentChar::monomial(1, 1, 1, 0);
        default: return LaurentChar();
    }
}

// (x1+y)(x2+y)(x3+y), the character of the top exterior power.
LaurentChar odd_product() {
    LaurentChar y = LaurentChar::var(3);
    LaurentChar r = LaurentChar::one();
    for (int i = 0; i < 3; ++i) r *= LaurentChar::var(i) + y;
    return r;
}
}  // namespace

LaurentChar schur3(int m, int n, int p) {
    if (!(m >= n && n >= p)) throw Error("schur3: non-dominant triple");
    // Laurent shift to a partition with third part zero.
    LaurentChar shifted = exact_div(alternant3(m - p + 2, n - p + 1, 0), vandermonde3());
    return shifted * xyz_pow(p);
}

LaurentChar sym_char(int n) {
    if (n < 0) return LaurentChar();
    return h3(n) + h3(n - 1) * LaurentChar::var(3);
}

LaurentChar ext_char(int k) {
    if (k < 0) return LaurentChar();
    LaurentChar r;
    for (int j = 0; j <= std::min(3, k); ++j)
        r += e3(j) * LaurentChar::monomial(0, 0, 0, k - j);
    return r;
}

LaurentChar berezinian_char() { return LaurentChar::monomial(1, 1, 1, -1); }

LaurentChar module_char_hook(int m, int n, int p) {
    if (!(m >= n && n >= p && p >= 0)) throw Error("module_char_hook: not a 3-part partition");
    if (p >= 1) return xyz_pow(p - 1) * odd_product() * schur3(m - p, n - p, 0);
    if (m == 0) return LaurentChar::one();
    // p = 0 branches: cyclic rational displays over the Vandermonde.  Each
    // cyclic term drops one (x_i + y) factor against the top product.
    LaurentChar y = LaurentChar::var(3);
    auto mono = [](int i, int e) {
        LaurentChar::Exp ex{0, 0, 0, 0};
        ex.at(i) = e;
        return LaurentChar::monomial(ex[0], ex[1], ex[2], ex[3]);
    };
    LaurentChar numsum;
    for (int c = 0; c < 3; ++c) {
        int i2 = (c + 1) % 3, i3 = (c + 2) % 3;
        LaurentChar core = mono(i2, m + 1) * mono(i3, n) - mono(i2, n) * mono(i3, m + 1);
        numsum += (LaurentChar::var(i2) + y) * (LaurentChar::var(i3) + y) * core;
    }
    return exact_div(numsum, vandermonde3());
}

LaurentChar module_char_image(int k, int l) {
    if (k < 2 || l < 0 || k - l == 2) throw Error("module_char_image: out of range");
    return odd_product() * LaurentChar::monomial(0, 0, 0, k - 3) * xyz_pow(-l) *
           schur3(l, l, 0);
}

LaurentChar module_char_x(int i, int a) {
    if (i < 0 || a + i < 0) throw Error("module_char_x: out of range");
    LaurentChar y = LaurentChar::var(3);
    auto mono = [](int v, int e) {
        LaurentChar::Exp ex{0, 0, 0, 0};
        ex.at(v) = e;
        return LaurentChar::monomial(ex[0], ex[1], ex[2], ex[3]);
    };
    LaurentChar numsum;
    for (int c = 0; c < 3; ++c) {
        int i1 = c, i2 = (c + 1) % 3, i3 = (c + 2) % 3;
        LaurentChar core =
            mono(i2, -a - i - 1) * mono(i3, i + 2) - mono(i2, i + 2) * mono(i3, -a - i - 1);
        numsum += (LaurentChar::var(i2) + y) * (LaurentChar::var(i3) + y) *
                  LaurentChar::var(i1) * core;
    }
    return exact_div(numsum, vandermonde3() * y);
}

LaurentChar module_char_y(int i, int k, int a) {
    // The closed form below only matches the defining direct-sum split for
    // k >= 2 (dimension check fails already at (0,1,0)); refuse k = 1.
    if (i < 0 || k < 2 || a + i + k < 0) throw Error("module_char_y: out of range");
    return odd_product() * LaurentChar::monomial(0, 0, 0, k - 3) * xyz_pow(-(a + i + k + 1)) *
           schur3(a + 2 * i + k + 2, a + i + k + 1, 0);
}

}  // namespace qgl
