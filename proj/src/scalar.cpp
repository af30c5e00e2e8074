#include "qgl/scalar.hpp"

#include <cctype>
#include <utility>

namespace qgl {

namespace {
const mpz_class kZero = 0;

mpz_class zgcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

mpq_class make_q(const mpz_class& num, const mpz_class& den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}
}  // namespace

// ---------------------------------------------------------------- Poly ----

Poly::Poly(const mpz_class& c) {
    if (c != 0) c_.push_back(c);
}

Poly::Poly(long c) : Poly(mpz_class(c)) {}

Poly::Poly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::variable() { return monomial(1, 1); }

Poly Poly::monomial(const mpz_class& c, int k) {
    Poly r;
    if (c != 0) {
        r.c_.assign(k + 1, mpz_class(0));
        r.c_[k] = c;
    }
    return r;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

const mpz_class& Poly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<mpz_class> r(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<mpz_class> r(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return Poly(std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

mpz_class Poly::content_signed() const {
    if (is_zero()) return 0;
    mpz_class g = 0;
    for (const auto& x : c_) g = zgcd(g, x);
    if (leading() < 0) g = -g;
    return g;
}

Poly Poly::divided_by(const mpz_class& c) const {
    if (c == 0) throw Error("Poly: division by zero constant");
    Poly r = *this;
    for (auto& x : r.c_) {
        mpz_class q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        if (rem != 0) throw Error("Poly: inexact constant division");
        x = q;
    }
    return r;
}

Poly Poly::div_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error("Poly: division by zero polynomial");
    Poly r = a;
    std::vector<mpz_class> q(a.is_zero() ? 0 : std::max(0, a.degree() - b.degree()) + 1,
                             mpz_class(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        mpz_class c, rem;
        mpz_tdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), r.leading().get_mpz_t(),
                    b.leading().get_mpz_t());
        if (rem != 0) throw Error("Poly: inexact division (leading coefficient)");
        int k = r.degree() - b.degree();
        q[k] = c;
        r = r - monomial(c, k) * b;
    }
    if (!r.is_zero()) throw Error("Poly: inexact division (nonzero remainder)");
    return Poly(std::move(q));
}

// Primitive polynomial remainder sequence.
Poly Poly::gcd(const Poly& a, const Poly& b) {
    auto prim_abs = [](const Poly& f) {
        if (f.is_zero()) return Poly();
        return f.divided_by(f.content_signed());
    };
    Poly u = prim_abs(a), v = prim_abs(b);
    if (u.is_zero()) return v.is_zero() ? Poly(1) : v;
    while (!v.is_zero()) {
        Poly r = u;
        while (!r.is_zero() && r.degree() >= v.degree()) {
            // r := lc(v)*r - lc(r)*p^k*v, strictly dropping the degree.
            int k = r.degree() - v.degree();
            r = r * Poly(v.leading()) - monomial(r.leading(), k) * v;
        }
        u = v;
        v = prim_abs(r);
    }
    return u;
}

mpq_class Poly::eval(const mpq_class& x) const {
    mpq_class r = 0;
    for (int i = degree(); i >= 0; --i) r = r * x + mpq_class(c_[i]);
    return r;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        mpz_class mag = abs(c_[i]);
        std::string term;
        if (i == 0) {
            term = mag.get_str();
        } else {
            std::string pw = (i == 1) ? "p" : "p^" + std::to_string(i);
            term = (mag == 1) ? pw : mag.get_str() + "*" + pw;
        }
        if (out.empty()) {
            out = (c_[i] < 0 ? "-" : "") + term;
        } else {
            out += (c_[i] < 0 ? " - " : " + ") + term;
        }
    }
    return out;
}

Poly Poly::parse(const std::string& s) {
    size_t i = 0;
    auto skipws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto read_uint = [&]() -> mpz_class {
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw ParseError("Poly: expected integer in \"" + s + "\"");
        return mpz_class(s.substr(start, i - start), 10);
    };
    std::vector<mpz_class> coeffs;
    auto add_term = [&](const mpz_class& c, long k) {
        if (k < 0 || k > 512) throw ParseError("Poly: exponent out of range");
        if (coeffs.size() < static_cast<size_t>(k + 1)) coeffs.resize(k + 1, mpz_class(0));
        coeffs[k] += c;
    };
    skipws();
    if (i == s.size()) throw ParseError("Poly: empty input");
    bool first = true;
    while (true) {
        skipws();
        int sign = 1;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            sign = (s[i] == '-') ? -1 : 1;
            ++i;
        } else if (!first) {
            throw ParseError("Poly: expected '+' or '-' in \"" + s + "\"");
        }
        skipws();
        mpz_class coef = 1;
        bool have_coef = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coef = read_uint();
            have_coef = true;
            skipws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                skipws();
            }
        }
        long expn = 0;
        if (i < s.size() && s[i] == 'p') {
            ++i;
            expn = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                expn = read_uint().get_si();
            }
        } else if (!have_coef) {
            throw ParseError("Poly: expected term in \"" + s + "\"");
        }
        add_term(sign * coef, expn);
        first = false;
        skipws();
        if (i == s.size()) break;
        if (s[i] != '+' && s[i] != '-')
            throw ParseError("Poly: trailing garbage in \"" + s + "\"");
    }
    return Poly(std::move(coeffs));
}

// ----------------------------------------------------------- EvalPoint ----

EvalPoint::EvalPoint(mpq_class v, int unity_bound) : q0(std::move(v)) {
    q0.canonicalize();
    if (q0 == 0) throw Error("EvalPoint: 0 is not allowed");
    mpq_class pw = 1;
    for (int k = 1; k <= unity_bound; ++k) {
        pw *= q0;
        if (pw == 1) throw Error("EvalPoint: root of unity of order " + std::to_string(k));
        if (abs(pw.get_num()) != abs(pw.get_den()) && k >= 2) break;  // |q0| != 1
    }
}

// -------------------------------------------------------------- Scalar ----

Scalar::Scalar() : c_(0), n_(Poly(1)), d_(Poly(1)) {}

Scalar::Scalar(long v) : c_(v), n_(Poly(1)), d_(Poly(1)) {}

Scalar::Scalar(const mpz_class& v) : c_(v), n_(Poly(1)), d_(Poly(1)) {}

Scalar::Scalar(const mpq_class& v) : c_(v), n_(Poly(1)), d_(Poly(1)) {
    c_.canonicalize();
}

Scalar::Scalar(mpq_class c, Poly n, Poly d)
    : c_(std::move(c)), n_(std::move(n)), d_(std::move(d)) {}

Scalar Scalar::generator() { return Scalar(mpq_class(1), Poly::variable(), Poly(1)); }

Scalar Scalar::from_poly(const Poly& n) { return ratio(n, Poly(1)); }

Scalar Scalar::ratio(Poly num, Poly den) {
    if (den.is_zero()) throw PoleError("Scalar: zero denominator");
    if (num.is_zero()) return Scalar();
    mpz_class cn = num.content_signed();
    mpz_class cd = den.content_signed();
    Poly n = num.divided_by(cn);
    Poly d = den.divided_by(cd);
    Poly g = Poly::gcd(n, d);
    if (!g.is_one()) {
        n = Poly::div_exact(n, g);
        d = Poly::div_exact(d, g);
    }
    return Scalar(make_q(cn, cd), std::move(n), std::move(d));
}

bool Scalar::is_one() const { return c_ == 1 && n_.is_one() && d_.is_one(); }

mpq_class Scalar::as_rational() const {
    if (!is_constant()) throw Error("Scalar: not a constant: " + str());
    if (is_zero()) return mpq_class(0);
    return c_ * make_q(n_.coeff(0), d_.coeff(0));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const mpz_class &p1 = a.c_.get_num(), &q1 = a.c_.get_den();
    const mpz_class &p2 = b.c_.get_num(), &q2 = b.c_.get_den();
    if (a.d_ == b.d_) {
        Poly num = Poly(p1 * q2) * a.n_ + Poly(p2 * q1) * b.n_;
        return Scalar::ratio(num, Poly(q1 * q2) * a.d_);
    }
    Poly g = Poly::gcd(a.d_, b.d_);
    Poly da = g.is_one() ? a.d_ : Poly::div_exact(a.d_, g);
    Poly db = g.is_one() ? b.d_ : Poly::div_exact(b.d_, g);
    Poly num = Poly(p1 * q2) * a.n_ * db + Poly(p2 * q1) * b.n_ * da;
    Poly den = Poly(q1 * q2) * a.d_ * db;
    return Scalar::ratio(num, den);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar();
    // Cross-cancellation keeps all four parts primitive and the result
    // reduced without a final gcd pass.
    Poly g1 = Poly::gcd(a.n_, b.d_);
    Poly g2 = Poly::gcd(b.n_, a.d_);
    Poly n = (g1.is_one() ? a.n_ : Poly::div_exact(a.n_, g1)) *
             (g2.is_one() ? b.n_ : Poly::div_exact(b.n_, g2));
    Poly d = (g2.is_one() ? a.d_ : Poly::div_exact(a.d_, g2)) *
             (g1.is_one() ? b.d_ : Poly::div_exact(b.d_, g1));
    return Scalar(a.c_ * b.c_, std::move(n), std::move(d));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

Scalar& Scalar::operator+=(const Scalar& b) { return *this = *this + b; }
Scalar& Scalar::operator-=(const Scalar& b) { return *this = *this - b; }
Scalar& Scalar::operator*=(const Scalar& b) { return *this = *this * b; }
Scalar& Scalar::operator/=(const Scalar& b) { return *this = *this / b; }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.c_ = -r.c_;
    return r;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw PoleError("Scalar: inverse of zero");
    return Scalar(mpq_class(1) / c_, d_, n_);
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Scalar r(1), base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

Poly Scalar::num() const { return Poly(c_.get_num()) * n_; }
Poly Scalar::den() const { return Poly(c_.get_den()) * d_; }

mpq_class Scalar::eval(const EvalPoint& pt) const {
    mpq_class dv = d_.eval(pt.q0);
    if (dv == 0) throw PoleError("Scalar: pole at evaluation point: " + str());
    return c_ * n_.eval(pt.q0) / dv;
}

std::string Scalar::str() const {
    Poly dd = den();
    if (dd.is_one()) return num().str();
    return "(" + num().str() + ")/(" + dd.str() + ")";
}

Scalar Scalar::parse(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    size_t e = s.find_last_not_of(" \t\r\n");
    if (b == std::string::npos) throw ParseError("Scalar: empty input");
    std::string t = s.substr(b, e - b + 1);
    if (t.front() == '(') {
        size_t sep = t.find(")/(");
        if (sep == std::string::npos || t.back() != ')')
            throw ParseError("Scalar: malformed fraction \"" + t + "\"");
        return ratio(Poly::parse(t.substr(1, sep - 1)),
                     Poly::parse(t.substr(sep + 3, t.size() - sep - 4)));
    }
    return from_poly(Poly::parse(t));
}

// ----------------------------------------------------------- brackets ----

Scalar q_int_at(const Scalar& base, long n) {
    if (n == 0) return Scalar();
    if (n < 0) return -(base.pow(n) * q_int_at(base, -n));
    Scalar r;
    for (long i = 0; i < n; ++i) r = r * base + Scalar(1);
    return r;
}

Scalar q_factorial_at(const Scalar& base, long n) {
    if (n < 0) throw Error("q_factorial: negative argument");
    Scalar r(1);
    for (long i = 2; i <= n; ++i) r *= q_int_at(base, i);
    return r;
}

Scalar q_int(long n) { return q_int_at(Scalar::generator(), n); }

Scalar q_factorial(long n) { return q_factorial_at(Scalar::generator(), n); }

}  // namespace qgl
