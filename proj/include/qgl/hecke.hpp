// Hecke symmetries and everything the Hecke algebra does on tensor powers:
// the bundled deformed super-permutation operator, axiom verification with
// witnesses, the generator action R_i, q-(anti)symmetrizers X_n / Y_n with
// their images S_n / Lambda_n, and the simple comodules M_lambda cut out of
// V^(x)n by hook partitions.
//
// The engine below is templated over the field backend so the same assembly
// code produces exact Scalar matrices and evaluated mpq matrices.  All
// symmetrizers are built by the right-coset recursion
//     Sum_n = (Sum_{n-1} (x) id) * (id + sum_j c_j R_j...R_{n-1})
// over the minimal coset representatives R_{n-1}R_{n-2}...R_j (lengths add
// against S_{n-1}, so every group element appears exactly once) instead of a
// literal sum over n! elements; for n above the cache ceiling they are never
// materialized, only applied column by column.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgl/tensorspace.hpp"

namespace qgl {

enum class SymKind { sym, ext };

struct HeckeSymmetry {
    SuperDim dims;
    LinMap<ExactField> R;  // on V (x) V
    Scalar heckeParam;     // the p with (R - p)(R + 1) = 0
    LinMap<ExactField> P;  // closure matrix, P^{im}_{jn} R^{nk}_{ml} = delta^i_l delta^k_j
    LinMap<ExactField> C;  // d x d partial trace C^i_j = P^{il}_{jl}
};

struct ClosurePair {
    LinMap<ExactField> P;
    LinMap<ExactField> C;
};

struct AxiomCheck {
    bool ok = true;
    std::string witness;  // first offending entry when ok is false
};

// check_hecke_symmetry never throws on a bad operator; it reports.
struct HeckeReport {
    AxiomCheck even;
    AxiomCheck yang_baxter;
    AxiomCheck hecke;
    AxiomCheck closure;
    bool param_detected = false;
    Scalar param;             // detected Hecke parameter, valid if param_detected
    LinMap<ExactField> P, C;  // freshly solved closure data (empty if singular)
    bool all_ok() const { return even.ok && yang_baxter.ok && hecke.ok && closure.ok; }
};

// The deformed super-permutation operator on a (r|s) space.  Entries, with
// upper indices = output letters:
//   R^{ii}_{ii} = q^2 (i even), -1 (i odd)
//   R^{ij}_{ij} = q^2 - 1 for i < j
//   R^{ji}_{ij} = (-1)^{par(i)par(j)} q for i != j
// At q = 1 this is the plain super permutation.  heckeParam = q^2.
HeckeSymmetry build_standard_r(int r, int s, const Scalar& q = Scalar::generator());

// Solve the closure identity for P (a d^2 x d^2 dense exact solve) and fold
// the partial trace C.  Throws Error when the system is singular, which
// already disqualifies R as a Hecke symmetry.
ClosurePair compute_p_matrix(const SuperDim& dims, const LinMap<ExactField>& R);

// The Hecke parameter is pinned entrywise from R^2 + R = p (R + 1); returns
// nullopt when no scalar fits.
std::optional<Scalar> detect_hecke_param(const LinMap<ExactField>& R);

HeckeReport check_hecke_symmetry(const HeckeSymmetry& H);

// rho(T_w) = R_{w1} ... R_{wm} on V^(x)n for a *reduced* word; non-reduced
// words are an error by design, callers must not rely on rewriting.
LinMap<ExactField> hecke_action(const HeckeSymmetry& H, int n, const std::vector<int>& word);

bool word_is_reduced(int n, const std::vector<int>& word);

// Reduced word (1-based generator indices) for the permutation given in
// one-line notation with 0-based values, harvested from a bubble sort.
std::vector<int> reduced_word_of(const std::vector<int>& one_line);

// Exact symmetrizer matrix on V^(x)n (n <= 8).
LinMap<ExactField> symmetrizer(const HeckeSymmetry& H, int n, SymKind kind);

// dim Lambda_n for n = 0..N at a generic evaluation point (N <= 6).
std::vector<long long> poincare_dims(const HeckeSymmetry& H, int N, const EvalPoint& at);

// Build a HeckeSymmetry from JSON text of the form
//   {"r": 3, "s": 1, "entries": [{"i":1,"j":1,"k":1,"l":1,"value":"p^2"}, ...]}
// where an entry sets R^{ij}_{kl} (upper = output letters, 1-based) and the
// value is either an integer or a Scalar string in the field generator.
// Detects the Hecke parameter and solves the closure matrix; run
// check_hecke_symmetry for the full axiom verdict.
HeckeSymmetry load_hecke_json(const std::string& json_text);

template <class Field>
LinMap<Field> convert_map(const Field& fld, const LinMap<ExactField>& m) {
    LinMap<Field> out(m.rows, m.ncols());
    for (long long j = 0; j < m.ncols(); ++j)
        for (const auto& [i, v] : m.cols[static_cast<size_t>(j)]) {
            typename Field::Elem w = fld.convert(v);
            if (!Field::is_zero(w)) out.cols[static_cast<size_t>(j)].emplace_back(i, std::move(w));
        }
    return out;
}

// Per-backend workhorse bound to one HeckeSymmetry: converted matrices,
// cached symmetrizers up to the cache ceiling, and column-wise application
// above it.  Dual legs take the same operators transposed (same index
// order); the `transposed` flags serve that convention.
template <class Field>
class HeckeEngine {
public:
    static constexpr int hard_cap = 8;

    HeckeEngine(const HeckeSymmetry& H, Field fld, int cache_cap = 6)
        : fld_(std::move(fld)),
          dims_(H.dims),
          param_(H.heckeParam),
          cap_(std::min(std::max(cache_cap, 1), hard_cap)),
          r_(convert_map(fld_, H.R)),
          rt_(r_.transpose()),
          p_(convert_map(fld_, H.P)),
          c_(convert_map(fld_, H.C)) {}

    const Field& field() const { return fld_; }
    const SuperDim& dims() const { return dims_; }
    const Scalar& param() const { return param_; }
    int cache_cap() const { return cap_; }

    // bracket at the Hecke parameter, converted into the backend
    typename Field::Elem qint(long n) const { return fld_.convert(q_int_at(param_, n)); }
    typename Field::Elem convert(const Scalar& s) const { return fld_.convert(s); }

    const LinMap<Field>& r_matrix() const { return r_; }
    const LinMap<Field>& r_matrix_t() const { return rt_; }
    const LinMap<Field>& p_matrix() const { return p_; }
    const LinMap<Field>& c_matrix() const { return c_; }

    // R acting on ambient legs (leg, leg+1)
    SpCol<Field> apply_r(const SpCol<Field>& v, const BasisIndex& ambient, int leg,
                         bool transposed = false) const {
        return apply_on_legs<Field>(transposed ? rt_ : r_, ambient, leg, 2, v);
    }

    const LinMap<Field>& sym_matrix(int n, SymKind kind) {
        check_degree(n);
        if (n > cap_)
            throw BudgetError("sym_matrix: degree " + std::to_string(n) +
                              " above the cache ceiling, use apply_sym");
        auto key = std::make_pair(n, kind);
        auto it = norm_.find(key);
        if (it != norm_.end()) return it->second;
        LinMap<Field> m = mat_scale(sum_matrix(n, kind), fld_.convert(norm_scalar(n, kind)));
        return norm_.emplace(key, std::move(m)).first->second;
    }

    const LinMap<Field>& sym_matrix_t(int n, SymKind kind) {
        auto key = std::make_pair(n, kind);
        auto it = normt_.find(key);
        if (it != normt_.end()) return it->second;
        LinMap<Field> m = sym_matrix(n, kind).transpose();
        return normt_.emplace(key, std::move(m)).first->second;
    }

    // X_n / Y_n (or their transposes) applied to v on ambient legs
    // [leg0, leg0 + n); above the cache ceiling the coset factor is applied
    // column-wise and the recursion drops to n - 1.
    SpCol<Field> apply_sym(const SpCol<Field>& v, const BasisIndex& ambient, int leg0, int n,
                           SymKind kind, bool transposed = false) {
        check_degree(n);
        if (n <= 1) return v;
        if (n <= cap_) {
            const LinMap<Field>& m = transposed ? sym_matrix_t(n, kind) : sym_matrix(n, kind);
            return apply_on_legs<Field>(m, ambient, leg0, n, v);
        }
        typename Field::Elem level = fld_.convert(level_scalar(n, kind));
        if (!transposed) {
            // Horner form of sum_j c_j R_{n-1}...R_j applied to v
            SpCol<Field> acc = col_scale<Field>(v, fld_.convert(coset_coeff(n, 1, kind)));
            acc = apply_r(acc, ambient, leg0);
            for (int j = 2; j <= n - 1; ++j) {
                col_axpy<Field>(acc, fld_.convert(coset_coeff(n, j, kind)), v);
                acc = apply_r(acc, ambient, leg0 + j - 1);
            }
            SpCol<Field> w = col_add<Field>(v, acc);
            return col_scale<Field>(apply_sym(w, ambient, leg0, n - 1, kind, false), level);
        }
        // transposed: the factor comes last, and (R_{n-1}...R_j)^T applies
        // its R_j^T... factors left to right, so a running product works
        SpCol<Field> w = apply_sym(v, ambient, leg0, n - 1, kind, true);
        SpCol<Field> acc;
        SpCol<Field> t = w;
        for (int j = n - 1; j >= 1; --j) {
            t = apply_r(t, ambient, leg0 + j - 1, true);
            col_axpy<Field>(acc, fld_.convert(coset_coeff(n, j, kind)), t);
        }
        return col_scale<Field>(col_add<Field>(w, acc), level);
    }

    // S_n or Lambda_n as an echelonized subspace of V^(x)n (n <= ceiling)
    const Subspace<Field>& sym_image(int n, SymKind kind) {
        auto key = std::make_pair(n, kind);
        auto it = images_.find(key);
        if (it != images_.end()) return it->second;
        const LinMap<Field>& m = sym_matrix(n, kind);
        EchelonBuilder<Field> eb(m.rows);
        for (const auto& col : m.cols) eb.insert(col);
        return images_.emplace(key, eb.take()).first->second;
    }

    long long image_dim(int n, SymKind kind) { return sym_image(n, kind).dim(); }

private:
    void check_degree(int n) const {
        if (n < 0) throw Error("symmetrizer degree must be nonnegative");
        if (n > hard_cap)
            throw BudgetError("symmetrizer degree " + std::to_string(n) + " above the n <= " +
                              std::to_string(hard_cap) + " cap");
    }

    // coefficient of R_j...R_{n-1} in the level-n coset factor
    Scalar coset_coeff(int n, int j, SymKind kind) const {
        if (kind == SymKind::sym) return Scalar(1);
        return (-param_).pow(j - n);
    }

    // scalar tying the normalized level-n symmetrizer to level n-1:
    // X_n = (1/[n]) X_{n-1} F_n,  Y_n = (p^{n-1}/[n]) Y_{n-1} F_n
    Scalar level_scalar(int n, SymKind kind) const {
        Scalar inv_bracket = q_int_at(param_, n).inv();
        if (kind == SymKind::sym) return inv_bracket;
        return param_.pow(n - 1) * inv_bracket;
    }

    Scalar norm_scalar(int n, SymKind kind) const {
        Scalar inv_fact = q_factorial_at(param_, n).inv();
        if (kind == SymKind::sym) return inv_fact;
        return param_.pow(static_cast<long>(n) * (n - 1) / 2) * inv_fact;
    }

    LinMap<Field> placed_r(int nlegs, int j) const {
        int d = dims_.d();
        long long left = 1, right = 1;
        for (int t = 0; t < j - 1; ++t) left *= d;
        for (int t = j + 1; t < nlegs; ++t) right *= d;
        return mat_kron(LinMap<Field>::identity(left), mat_kron(r_, LinMap<Field>::identity(right)));
    }

    const LinMap<Field>& sum_matrix(int n, SymKind kind) {
        auto key = std::make_pair(n, kind);
        auto it = sums_.find(key);
        if (it != sums_.end()) return it->second;
        int d = dims_.d();
        LinMap<Field> m;
        if (n <= 1) {
            long long sz = 1;
            for (int t = 0; t < n; ++t) sz *= d;
            m = LinMap<Field>::identity(sz);
        } else {
            long long sz = 1;
            for (int t = 0; t < n; ++t) sz *= d;
            LinMap<Field> factor = LinMap<Field>::identity(sz);
            LinMap<Field> g;
            for (int j = n - 1; j >= 1; --j) {
                g = (j == n - 1) ? placed_r(n, j) : mat_mul(g, placed_r(n, j));
                factor = mat_add(factor, mat_scale(g, fld_.convert(coset_coeff(n, j, kind))));
            }
            const LinMap<Field>& prev = sum_matrix(n - 1, kind);
            m = mat_mul(mat_kron(prev, LinMap<Field>::identity(d)), factor);
        }
        return sums_.emplace(key, std::move(m)).first->second;
    }

    Field fld_;
    SuperDim dims_;
    Scalar param_;
    int cap_;
    LinMap<Field> r_, rt_, p_, c_;
    std::map<std::pair<int, SymKind>, LinMap<Field>> sums_, norm_, normt_;
    std::map<std::pair<int, SymKind>, Subspace<Field>> images_;
};

// Image in V^(x)n of the quasi-idempotent z_lambda attached to the
// row-reading standard tableau of shape lambda: the row q-symmetrizer times
// the column q-antisymmetrizer, the latter conjugated from consecutive legs
// by rho(T_sigma) for the column-reading permutation sigma.  The image is
// computed as (row sym) o rho(T_sigma) applied to a spanning set of the
// consecutive column antisymmetrizer's image, which keeps every intermediate
// small.  Zero iff lambda is not a (r|s) hook.
template <class Field>
Subspace<Field> young_module(HeckeEngine<Field>& eng, const std::vector<int>& shape) {
    std::vector<int> lambda;
    for (int part : shape) {
        if (part < 0) throw Error("young_module: negative part");
        if (!lambda.empty() && part > lambda.back())
            throw Error("young_module: parts must be weakly decreasing");
        if (part > 0) lambda.push_back(part);
    }
    int n = 0;
    for (int part : lambda) n += part;
    if (n > HeckeEngine<Field>::hard_cap)
        throw BudgetError("young_module: |lambda| = " + std::to_string(n) + " above the degree cap");
    if (n == 0) return Subspace<Field>::full(1);

    const int d = eng.dims().d();
    BasisIndex ambient = tensor_basis(eng.dims(), n, 0);
    const int nrows = static_cast<int>(lambda.size());
    std::vector<int> row_start(nrows, 0);
    for (int i = 1; i < nrows; ++i) row_start[i] = row_start[i - 1] + lambda[i - 1];

    // conjugate shape and the column-reading permutation (0-based one-line)
    std::vector<int> conj;
    for (int j = 0; j < lambda[0]; ++j) {
        int height = 0;
        while (height < nrows && lambda[height] > j) ++height;
        conj.push_back(height);
    }
    std::vector<int> one_line;
    for (int j = 0; j < lambda[0]; ++j)
        for (int i = 0; i < conj[j]; ++i) one_line.push_back(row_start[i] + j);
    std::vector<int> word = reduced_word_of(one_line);

    // spanning columns of the consecutive column antisymmetrizer's image,
    // assembled as a Kronecker product of the per-column images
    std::vector<SpCol<Field>> cols = {{{0, Field::one()}}};
    long long built = 1;
    for (int j = 0; j < lambda[0]; ++j) {
        std::vector<SpCol<Field>> factor;
        if (conj[j] == 1) {
            for (int a = 0; a < d; ++a) factor.push_back({{a, Field::one()}});
        } else {
            factor = eng.sym_image(conj[j], SymKind::ext).span;
        }
        long long fsize = 1;
        for (int t = 0; t < conj[j]; ++t) fsize *= d;
        std::vector<SpCol<Field>> next;
        next.reserve(cols.size() * factor.size());
        for (const auto& a : cols)
            for (const auto& b : factor) {
                SpCol<Field> prod;
                prod.reserve(a.size() * b.size());
                for (const auto& [ra, va] : a)
                    for (const auto& [rb, vb] : b) {
                        typename Field::Elem w = va * vb;
                        if (!Field::is_zero(w)) prod.emplace_back(ra * fsize + rb, std::move(w));
                    }
                next.push_back(std::move(prod));
            }
        cols = std::move(next);
        built *= fsize;
    }
    (void)built;

    EchelonBuilder<Field> eb(ambient.size());
    for (auto& v : cols) {
        // rho(T_sigma): rightmost word letter acts first
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            v = eng.apply_r(v, ambient, *it - 1);
        for (int i = 0; i < nrows; ++i)
            if (lambda[i] >= 2) v = eng.apply_sym(v, ambient, row_start[i], lambda[i], SymKind::sym);
        eb.insert(std::move(v));
    }
    return eb.take();
}

Subspace<ExactField> young_module(const HeckeSymmetry& H, const std::vector<int>& shape);

}  // namespace qgl
