#pragma once
// Composites around the double complex: the loop operators that certify the
// splitting of one term off the next, and the projectors extracting the
// complementary summands.
//
// All operator symbols read right to left: del.P.Q.d means apply d first.
// The two loops are
//
//   loop_S   = del P Q d   on  Sym_i . Sym_{a+i}^*
//   loop_ker = P del d Q   on  Ker P_{i,k+1} . Sym_{a+i+k+1}^*
//
// Both are endomorphisms; when such a loop L is invertible, the start term
// embeds into the target term (by the first half of the loop) and the
// projector (first half) L^{-1} (second half) splits the target.  The
// complements of those splittings are the summands X_{i,a} and Y_{i,k,a}.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgl/charformula.hpp"
#include "qgl/hecke.hpp"
#include "qgl/koszul.hpp"
#include "qgl/scalar.hpp"
#include "qgl/tensorspace.hpp"

namespace qgl {

namespace detail {

// Dense Gauss-Jordan inverse with complexity-guided pivoting.
template <class Field>
LinMap<Field> mat_inverse(const LinMap<Field>& m) {
    if (m.rows != m.ncols()) throw Error("mat_inverse: not square");
    long long n = m.rows;
    std::vector<std::vector<typename Field::Elem>> a(
        static_cast<size_t>(n), std::vector<typename Field::Elem>(static_cast<size_t>(2 * n), Field::zero()));
    for (long long j = 0; j < n; ++j) {
        for (const auto& [i, v] : m.cols[static_cast<size_t>(j)]) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
        a[static_cast<size_t>(j)][static_cast<size_t>(n + j)] = Field::one();
    }
    for (long long c = 0; c < n; ++c) {
        long long piv = -1;
        for (long long r = c; r < n; ++r) {
            if (Field::is_zero(a[static_cast<size_t>(r)][static_cast<size_t>(c)])) continue;
            if (piv < 0 || Field::complexity(a[static_cast<size_t>(r)][static_cast<size_t>(c)]) <
                               Field::complexity(a[static_cast<size_t>(piv)][static_cast<size_t>(c)]))
                piv = r;
        }
        if (piv < 0) throw Error("mat_inverse: singular matrix");
        std::swap(a[static_cast<size_t>(c)], a[static_cast<size_t>(piv)]);
        typename Field::Elem pinv = Field::one() / a[static_cast<size_t>(c)][static_cast<size_t>(c)];
        for (long long t = c; t < 2 * n; ++t) {
            typename Field::Elem scaled = a[static_cast<size_t>(c)][static_cast<size_t>(t)] * pinv;
            a[static_cast<size_t>(c)][static_cast<size_t>(t)] = scaled;
        }
        for (long long r = 0; r < n; ++r) {
            if (r == c) continue;
            typename Field::Elem f = a[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (Field::is_zero(f)) continue;
            for (long long t = c; t < 2 * n; ++t) {
                typename Field::Elem delta = f * a[static_cast<size_t>(c)][static_cast<size_t>(t)];
                a[static_cast<size_t>(r)][static_cast<size_t>(t)] = a[static_cast<size_t>(r)][static_cast<size_t>(t)] - delta;
            }
        }
    }
    LinMap<Field> out(n, n);
    for (long long j = 0; j < n; ++j)
        for (long long i = 0; i < n; ++i)
            if (!Field::is_zero(a[static_cast<size_t>(i)][static_cast<size_t>(n + j)]))
                out.set(i, j, a[static_cast<size_t>(i)][static_cast<size_t>(n + j)]);
    return out;
}

template <class Field>
long long mat_rank(const LinMap<Field>& m) {
    EchelonBuilder<Field> eb(m.rows);
    for (const auto& col : m.cols) eb.insert(col);
    return eb.rank();
}

// Expand subspace coordinates back into the ambient space.
template <class Field>
SpCol<Field> expand(const Subspace<Field>& s, const SpCol<Field>& coords) {
    SpCol<Field> out;
    for (const auto& [j, c] : coords) col_axpy<Field>(out, c, s.span[static_cast<size_t>(j)]);
    return out;
}

}  // namespace detail

// ------------------------------------------------------------- loop maps ----

// del P Q d on Sym_i . Sym_{a+i}^*, in the term basis.
template <class Field>
LinMap<Field> loop_S(KoszulContext<Field>& C, int i, int a) {
    if (i < 0 || a + i < 0) throw Error("loop_S: want i >= 0 and a + i >= 0");
    int l = a + i;
    const Subspace<Field>& t = C.term_SKS(i, 0, l);
    LinMap<Field> out(t.dim(), t.dim());
    for (long long j = 0; j < t.dim(); ++j) {
        SpCol<Field> w = C.apply_d(t.span[static_cast<size_t>(j)], 0, l, i);
        w = C.apply_Q(w, i, 1, l + 1);
        w = C.apply_P(w, i + 1, 0, l + 1);
        w = C.apply_del(w, 1, l + 1, i);
        auto coords = coords_in<Field>(t, std::move(w));
        if (!coords) throw Error("loop_S: composite escapes the term");
        out.cols[static_cast<size_t>(j)] = std::move(*coords);
    }
    return out;
}

// Ker P_{i,k} inside Sym_i (x) Lambda_k.
template <class Field>
Subspace<Field> ker_P(KoszulContext<Field>& C, int i, int k) {
    const Subspace<Field>& t = C.term_L(i, k);
    EchelonBuilder<Field> img(t.ambient, /*track=*/true);
    EchelonBuilder<Field> ker(t.ambient);
    for (const auto& u : t.span) {
        SpCol<Field> dep;
        if (!img.insert(C.apply_P(u, i, k), &dep)) ker.insert(detail::expand<Field>(t, dep));
    }
    return ker.take();
}

// Ker P_{i,k} = Im P_{i+1,k-1}, by mutual containment.
template <class Field>
bool ker_P_identity(KoszulContext<Field>& C, int i, int k) {
    Subspace<Field> kp = ker_P(C, i, k);
    EchelonBuilder<Field> img(kp.ambient);
    if (k >= 1)
        for (const auto& u : C.term_L(i + 1, k - 1).span) img.insert(C.apply_P(u, i + 1, k - 1));
    Subspace<Field> ip = img.take();
    return subspace_equal<Field>(kp, ip);
}

// Ker P_{i,k} . Sym_l^*, the domain of loop_ker.
template <class Field>
Subspace<Field> ker_term(KoszulContext<Field>& C, int i, int k, int l) {
    return kron_subspace<Field>(ker_P(C, i, k), C.dual_sym_image(l, SymKind::sym));
}

// P del d Q on Ker P_{i,k+1} . Sym_{a+i+k+1}^*, in the basis of that kernel
// term.  The composite must land back in the subspace; escapes are bugs.
template <class Field>
LinMap<Field> loop_ker(KoszulContext<Field>& C, int i, int k, int a) {
    if (i < 0 || k < 1 || a + i + k + 1 < 0) throw Error("loop_ker: want i >= 0, k >= 1, a+i+k+1 >= 0");
    int l = a + i + k + 1;
    Subspace<Field> t = ker_term(C, i, k + 1, l);
    LinMap<Field> out(t.dim(), t.dim());
    for (long long j = 0; j < t.dim(); ++j) {
        SpCol<Field> w = C.apply_Q(t.span[static_cast<size_t>(j)], i, k + 1, l);
        w = C.apply_d(w, k, l, i + 1);
        w = C.apply_del(w, k + 1, l + 1, i + 1);
        w = C.apply_P(w, i + 1, k, l);
        auto coords = coords_in<Field>(t, std::move(w));
        if (!coords) throw Error("loop_ker: composite escapes the kernel term");
        out.cols[static_cast<size_t>(j)] = std::move(*coords);
    }
    return out;
}

// --------------------------------------------------------- summand splits ----

template <class Field>
struct SummandReport {
    std::string which;  // "X" or "Y"
    std::vector<int> params;
    bool ok = false;
    bool idempotent = false;
    long long ambient_dim = 0;
    Subspace<Field> split_image;  // image of the projector: the embedded copy
    Subspace<Field> complement;   // kernel of the projector: the new summand
    LaurentChar ch_ambient, ch_image, ch_complement;
    std::string witness;
};

namespace detail {

// Shared tail: given the ambient term W and the projector matrix e in W's
// basis, split W and fill the report.
template <class Field>
void finish_split(const Subspace<Field>& w, const BasisIndex& wamb, const LinMap<Field>& e,
                  long long expect_image, SummandReport<Field>& rep) {
    rep.ambient_dim = w.dim();
    rep.idempotent = mat_mul(e, e) == e;
    auto [img_c, ker_c] = image_kernel(e);
    EchelonBuilder<Field> img(w.ambient), ker(w.ambient);
    for (const auto& c : img_c.span) img.insert(expand<Field>(w, c));
    for (const auto& c : ker_c.span) ker.insert(expand<Field>(w, c));
    rep.split_image = img.take();
    rep.complement = ker.take();
    rep.ch_ambient = subspace_char<Field>(w, wamb);
    rep.ch_image = subspace_char<Field>(rep.split_image, wamb);
    rep.ch_complement = subspace_char<Field>(rep.complement, wamb);
    rep.ok = true;
    if (!rep.idempotent) {
        rep.ok = false;
        rep.witness = "projector is not idempotent";
    } else if (rep.split_image.dim() != expect_image) {
        rep.ok = false;
        rep.witness = "split image has dimension " + std::to_string(rep.split_image.dim()) +
                      ", expected " + std::to_string(expect_image);
    } else if (rep.split_image.dim() + rep.complement.dim() != w.dim()) {
        rep.ok = false;
        rep.witness = "summand dimensions do not add up";
    } else if (!(rep.ch_image + rep.ch_complement == rep.ch_ambient)) {
        rep.ok = false;
        rep.witness = "characters do not add up";
    }
}

}  // namespace detail

// X_{i,a}: the complement of Sym_i . Sym_{a+i}^* inside Sym_{i+1} .
// Sym_{a+i+1}^*, split off by e = Q d (del P Q d)^{-1} del P.
template <class Field>
SummandReport<Field> extract_X(KoszulContext<Field>& C, int i, int a) {
    SummandReport<Field> rep;
    rep.which = "X";
    rep.params = {i, a};
    int l = a + i;
    const Subspace<Field>& small = C.term_SKS(i, 0, l);
    const Subspace<Field>& w = C.term_SKS(i + 1, 0, l + 1);
    BasisIndex wamb = C.amb(i + 1, l + 1);
    LinMap<Field> loop = loop_S(C, i, a);
    LinMap<Field> inv = detail::mat_inverse(loop);  // throws when not invertible
    LinMap<Field> e(w.dim(), w.dim());
    for (long long j = 0; j < w.dim(); ++j) {
        SpCol<Field> y = C.apply_P(w.span[static_cast<size_t>(j)], i + 1, 0, l + 1);
        y = C.apply_del(y, 1, l + 1, i);
        auto c = coords_in<Field>(small, std::move(y));
        if (!c) throw Error("extract_X: del P escapes the small term");
        SpCol<Field> back = detail::expand<Field>(small, mat_apply<Field>(inv, *c));
        back = C.apply_d(back, 0, l, i);
        back = C.apply_Q(back, i, 1, l + 1);
        auto cc = coords_in<Field>(w, std::move(back));
        if (!cc) throw Error("extract_X: Q d escapes the ambient term");
        e.cols[static_cast<size_t>(j)] = std::move(*cc);
    }
    detail::finish_split<Field>(w, wamb, e, small.dim(), rep);
    return rep;
}

// Y_{i,k,a}: the complement of Ker P_{i,k+1} . Sym_{a+i+k+1}^* inside
// Sym_{i+1} (x) Im d_{k,a+i+k+1}, split off by e = d Q (P del d Q)^{-1} P del.
template <class Field>
SummandReport<Field> extract_Y(KoszulContext<Field>& C, int i, int k, int a) {
    SummandReport<Field> rep;
    rep.which = "Y";
    rep.params = {i, k, a};
    int l = a + i + k + 1;
    Subspace<Field> small = ker_term(C, i, k + 1, l);
    Subspace<Field> w = kron_subspace<Field>(C.engine().sym_image(i + 1, SymKind::sym), C.image_d(k, l));
    BasisIndex wamb = C.amb(i + k + 2, l + 1);
    LinMap<Field> loop = loop_ker(C, i, k, a);
    LinMap<Field> inv = detail::mat_inverse(loop);
    LinMap<Field> e(w.dim(), w.dim());
    for (long long j = 0; j < w.dim(); ++j) {
        SpCol<Field> y = C.apply_del(w.span[static_cast<size_t>(j)], k + 1, l + 1, i + 1);
        y = C.apply_P(y, i + 1, k, l);
        auto c = coords_in<Field>(small, std::move(y));
        if (!c) throw Error("extract_Y: P del escapes the kernel term");
        SpCol<Field> back = detail::expand<Field>(small, mat_apply<Field>(inv, *c));
        back = C.apply_Q(back, i, k + 1, l);
        back = C.apply_d(back, k, l, i + 1);
        auto cc = coords_in<Field>(w, std::move(back));
        if (!cc) throw Error("extract_Y: d Q escapes the ambient term");
        e.cols[static_cast<size_t>(j)] = std::move(*cc);
    }
    detail::finish_split<Field>(w, wamb, e, small.dim(), rep);
    return rep;
}

// ------------------------------------------------------- eigenvalue checks ----

struct LoopReport {
    std::string operator_name;  // "loop_S" or "loop_ker"
    std::vector<int> params;    // (i, a) or (i, k, a)
    long long dim = 0;
    std::vector<Scalar> claimed;
    bool annihilation = false;          // product of (M - c) over claimed vanishes
    std::vector<bool> attained;         // per claimed value: M - c singular
    bool all_attained = false;
    bool invertible = false;
    std::string backend;                // "exact" or "evaluated(7/5;11/7)"
    std::vector<std::string> empirical; // recorded only when the claim fails
    std::optional<LinMap<ExactField>> matrix;  // exact backend only
};

// Claimed eigenvalue sets, with brackets taken at the Hecke parameter.
// loop_ker_spectrum reads the general-index display with its index j running
// over {1, ..., i+1} and the extra value i+k+1; the i = 0 and i = 1 cases
// agree with the two explicitly spelled-out lists.
std::vector<Scalar> loop_S_spectrum(const Scalar& p, int i, int a);
std::vector<Scalar> loop_ker_spectrum(const Scalar& p, int i, int k, int a);

// Build the loop operator named by `op` ("loop_S" with params {i, a} or
// "loop_ker" with {i, k, a}), check annihilation, attainment and
// invertibility against the claimed set.  Exact when the term dimension is
// within exact_dim, else certified at the two standard evaluation points.
// When the claimed set fails to annihilate, a scan over same-shaped bracket
// expressions records the empirically attained set.
LoopReport eigen_check(const HeckeSymmetry& H, const std::string& op, const std::vector<int>& params,
                       long long exact_dim = 150);

// Context-sharing variant: exact context only (used when the caller already
// knows the dimension fits).
LoopReport eigen_check_exact(KoszulContext<ExactField>& C, const std::string& op,
                             const std::vector<int>& params);

}  // namespace qgl
