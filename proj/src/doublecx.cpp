#include "qgl/doublecx.hpp"

#include <set>
#include <sstream>

namespace qgl {

namespace {

// [n] - [-2] at base p, the recurring numerator shape of the loop spectra.
Scalar gap(const Scalar& p, long n) { return q_int_at(p, n) - q_int_at(p, -2); }

void push_unique(std::vector<Scalar>& out, const Scalar& v) {
    for (const auto& u : out)
        if (u == v) return;
    out.push_back(v);
}

// Super binomial dimensions for a vector space of dimension (r|s).
long long binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long long b = 1;
    for (long long t = 1; t <= k; ++t) b = b * (n - k + t) / t;
    return b;
}

long long sym_dim(const SuperDim& d, int n) {
    if (n < 0) return 0;
    long long total = 0;
    for (int j = 0; j <= std::min(d.s, n); ++j) total += binom(d.s, j) * binom(d.r + (n - j) - 1, n - j);
    return total;
}

long long ext_dim(const SuperDim& d, int k) {
    if (k < 0) return 0;
    long long total = 0;
    for (int j = 0; j <= k; ++j) total += binom(d.r, k - j) * binom(d.s + j - 1, j);
    return total;
}

// dim Ker P_{i,k}, through Ker P_{i,k} = Im P_{i+1,k-1} and Ker P_{0,k} = Lambda_k.
long long ker_dim(const SuperDim& d, int i, int k) {
    if (k <= 0) return 0;
    if (i == 0) return ext_dim(d, k);
    long long amb = sym_dim(d, i + 1) * ext_dim(d, k - 1);
    return amb - ker_dim(d, i + 1, k - 1);
}

long long predict_dim(const SuperDim& d, const std::string& op, const std::vector<int>& params) {
    if (op == "loop_S" && params.size() == 2) {
        int i = params[0], a = params[1];
        return sym_dim(d, i) * sym_dim(d, a + i);
    }
    if (op == "loop_ker" && params.size() == 3) {
        int i = params[0], k = params[1], a = params[2];
        return ker_dim(d, i, k + 1) * sym_dim(d, a + i + k + 1);
    }
    throw Error("eigen_check: unknown operator or arity: " + op);
}

template <class Field>
LinMap<Field> build_loop(KoszulContext<Field>& C, const std::string& op, const std::vector<int>& params) {
    if (op == "loop_S") return loop_S(C, params.at(0), params.at(1));
    if (op == "loop_ker") return loop_ker(C, params.at(0), params.at(1), params.at(2));
    throw Error("eigen_check: unknown operator " + op);
}

// Column-wise product of (M - v) over vals applied to every basis vector.
template <class Field>
bool annihilates(const LinMap<Field>& m, const std::vector<typename Field::Elem>& vals) {
    for (long long j = 0; j < m.rows; ++j) {
        SpCol<Field> w{{j, Field::one()}};
        for (const auto& v : vals) {
            SpCol<Field> next = mat_apply<Field>(m, w);
            typename Field::Elem neg = Field::zero() - v;
            col_axpy<Field>(next, neg, w);
            w = std::move(next);
            if (w.empty()) break;
        }
        if (!w.empty()) return false;
    }
    return true;
}

template <class Field>
long long shifted_rank(const LinMap<Field>& m, const typename Field::Elem& v) {
    EchelonBuilder<Field> eb(m.rows);
    for (long long j = 0; j < m.rows; ++j) {
        SpCol<Field> c = m.cols[static_cast<size_t>(j)];
        SpCol<Field> unit{{j, Field::one()}};
        typename Field::Elem neg = Field::zero() - v;
        col_axpy<Field>(c, neg, unit);
        eb.insert(std::move(c));
    }
    return eb.rank();
}

struct PoolEntry {
    Scalar value;
    std::string form;
};

// Candidate eigenvalues with the same bracket shape as the claimed family,
// swept over a window of numerator indices.  Used only when the claimed set
// fails, to record what the operator actually does.
std::vector<PoolEntry> empirical_pool(const Scalar& p, const std::string& op, const std::vector<int>& params) {
    std::vector<PoolEntry> pool;
    auto add = [&pool](const Scalar& v, std::string f) {
        for (const auto& e : pool)
            if (e.value == v) return;
        pool.push_back(PoolEntry{v, std::move(f)});
    };
    if (op == "loop_S") {
        int i = params.at(0), a = params.at(1);
        Scalar den = q_int_at(p, i + 1) * q_int_at(p, a + i + 1);
        for (int x = a - 3; x <= a + 2 * i + 5; ++x)
            for (int j = 1; j <= i + 2; ++j) {
                std::ostringstream f;
                f << "([" << x << "]-[-2])[" << j << "]/([" << i + 1 << "][" << a + i + 1 << "])";
                add(gap(p, x) * q_int_at(p, j) / den, f.str());
            }
        add(Scalar(0), "0");
        return pool;
    }
    int i = params.at(0), k = params.at(1), a = params.at(2);
    Scalar den = q_int_at(p, i + 1) * q_int_at(p, k + 1) * q_int_at(p, k + 1) * q_int_at(p, a + i + k + 2);
    Scalar pk = p.pow(k);
    for (int x = a - 3; x <= a + k + 2 * i + 5; ++x)
        for (int j = 1; j <= i + k + 2; ++j) {
            std::ostringstream f;
            f << "p^" << k << "([" << x << "]-[-2])[" << j << "]/([" << i + 1 << "][" << k + 1 << "]^2["
              << a + i + k + 2 << "])";
            add(pk * gap(p, x) * q_int_at(p, j) / den, f.str());
        }
    add(Scalar(0), "0");
    return pool;
}

template <class Field>
struct BackendRun {
    LinMap<Field> m;
    bool annihilation = false;
    std::vector<bool> attained;
    bool invertible = false;
};

template <class Field>
BackendRun<Field> run_backend(KoszulContext<Field>& C, const std::string& op, const std::vector<int>& params,
                              const std::vector<Scalar>& claimed) {
    BackendRun<Field> out;
    out.m = build_loop(C, op, params);
    std::vector<typename Field::Elem> vals;
    vals.reserve(claimed.size());
    for (const auto& s : claimed) vals.push_back(C.engine().convert(s));
    out.annihilation = annihilates<Field>(out.m, vals);
    for (const auto& v : vals) out.attained.push_back(shifted_rank<Field>(out.m, v) < out.m.rows);
    typename Field::Elem z = Field::zero();
    out.invertible = shifted_rank<Field>(out.m, z) == out.m.rows;
    return out;
}

// Attained pool entries that annihilate the operator, or an empty list when
// even the widened pool cannot explain it.
template <class Field>
std::vector<std::string> scan_pool(KoszulContext<Field>& C, const LinMap<Field>& m,
                                   const std::vector<PoolEntry>& pool) {
    std::vector<std::string> out;
    std::vector<typename Field::Elem> vals;
    for (const auto& e : pool) {
        typename Field::Elem v = C.engine().convert(e.value);
        if (shifted_rank<Field>(m, v) < m.rows) {
            out.push_back(e.form + " = " + e.value.str());
            vals.push_back(std::move(v));
        }
    }
    if (!annihilates<Field>(m, vals)) return {};
    return out;
}

}  // namespace

std::vector<Scalar> loop_S_spectrum(const Scalar& p, int i, int a) {
    std::vector<Scalar> out;
    Scalar den = q_int_at(p, i + 1) * q_int_at(p, a + i + 1);
    for (int j = 1; j <= i + 1; ++j) push_unique(out, gap(p, a + 2 * i + 1 - j) * q_int_at(p, j) / den);
    return out;
}

std::vector<Scalar> loop_ker_spectrum(const Scalar& p, int i, int k, int a) {
    std::vector<Scalar> out;
    Scalar den = q_int_at(p, i + 1) * q_int_at(p, k + 1) * q_int_at(p, k + 1) * q_int_at(p, a + i + k + 2);
    Scalar pk = p.pow(k);
    std::vector<int> js;
    for (int j = 1; j <= i + 1; ++j) js.push_back(j);
    js.push_back(i + k + 1);
    for (int j : js) push_unique(out, pk * gap(p, a + k + 2 * i - j + 2) * q_int_at(p, j) / den);
    return out;
}

LoopReport eigen_check(const HeckeSymmetry& H, const std::string& op, const std::vector<int>& params,
                       long long exact_dim) {
    LoopReport rep;
    rep.operator_name = op;
    rep.params = params;
    long long dim = predict_dim(H.dims, op, params);  // also rejects unknown operators
    const Scalar& p = H.heckeParam;
    rep.claimed = (op == "loop_S") ? loop_S_spectrum(p, params.at(0), params.at(1))
                                   : loop_ker_spectrum(p, params.at(0), params.at(1), params.at(2));
    if (dim <= exact_dim) {
        KoszulContext<ExactField> C(H);
        BackendRun<ExactField> run = run_backend<ExactField>(C, op, params, rep.claimed);
        rep.dim = run.m.rows;
        rep.annihilation = run.annihilation;
        rep.attained = run.attained;
        rep.invertible = run.invertible;
        rep.backend = "exact";
        if (!rep.annihilation) {
            rep.empirical = scan_pool<ExactField>(C, run.m, empirical_pool(p, op, params));
            if (rep.empirical.empty()) rep.empirical = {"no annihilating set found in the bracket pool"};
        }
        rep.matrix = std::move(run.m);
    } else {
        KoszulContext<EvalField> C1(H, EvalField(EvalPoint(mpq_class(7, 5))));
        KoszulContext<EvalField> C2(H, EvalField(EvalPoint(mpq_class(11, 7))));
        BackendRun<EvalField> r1 = run_backend<EvalField>(C1, op, params, rep.claimed);
        BackendRun<EvalField> r2 = run_backend<EvalField>(C2, op, params, rep.claimed);
        rep.dim = r1.m.rows;
        rep.annihilation = r1.annihilation && r2.annihilation;
        for (size_t t = 0; t < rep.claimed.size(); ++t) rep.attained.push_back(r1.attained[t] && r2.attained[t]);
        rep.invertible = r1.invertible && r2.invertible;
        rep.backend = "evaluated(7/5;11/7)";
        if (!rep.annihilation) {
            std::vector<std::string> s1 = scan_pool<EvalField>(C1, r1.m, empirical_pool(p, op, params));
            std::vector<std::string> s2 = scan_pool<EvalField>(C2, r2.m, empirical_pool(p, op, params));
            rep.empirical = (s1 == s2 && !s1.empty()) ? s1
                            : std::vector<std::string>{"no stable annihilating set found in the bracket pool"};
        }
    }
    rep.all_attained = !rep.attained.empty();
    for (bool b : rep.attained) rep.all_attained = rep.all_attained && b;
    return rep;
}

LoopReport eigen_check_exact(KoszulContext<ExactField>& C, const std::string& op,
                             const std::vector<int>& params) {
    LoopReport rep;
    rep.operator_name = op;
    rep.params = params;
    predict_dim(C.dims(), op, params);  // validates operator name and arity
    const Scalar& p = C.engine().param();
    rep.claimed = (op == "loop_S") ? loop_S_spectrum(p, params.at(0), params.at(1))
                                   : loop_ker_spectrum(p, params.at(0), params.at(1), params.at(2));
    BackendRun<ExactField> run = run_backend<ExactField>(C, op, params, rep.claimed);
    rep.dim = run.m.rows;
    rep.annihilation = run.annihilation;
    rep.attained = run.attained;
    rep.invertible = run.invertible;
    rep.backend = "exact";
    if (!rep.annihilation) {
        rep.empirical = scan_pool<ExactField>(C, run.m, empirical_pool(p, op, params));
        if (rep.empirical.empty()) rep.empirical = {"no annihilating set found in the bracket pool"};
    }
    rep.matrix = std::move(run.m);
    rep.all_attained = !rep.attained.empty();
    for (bool b : rep.attained) rep.all_attained = rep.all_attained && b;
    return rep;
}

}  // namespace qgl
