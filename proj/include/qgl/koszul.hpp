#pragma once
// Two Koszul-type families of complexes attached to a Hecke symmetry.
//
// Family K has terms Lambda_k (x) Sym_l^* sitting inside V^{(x)k} (x)
// V^{*(x)l}.  The raising map d inserts the invariant element sum_i x_i (x)
// xi^i between the covariant and the dual block and reprojects; the lowering
// map del contracts the innermost covariant/dual pair of legs with the
// closure trace matrix C and reprojects.  The complexes K_a collect the
// terms with k - l = a.
//
// Family L is all-covariant: terms Sym_p (x) Lambda_r inside V^{(x)(p+r)}.
// P moves one leg from the symmetric block to the exterior block, Q moves
// one back; both are plain reprojections with the blocks resplit.  The
// complexes L_a collect p + r = a.
//
// Every map here is domain-indexed: apply_d(v, k, l) expects v in the (k, l)
// term and lands in (k+1, l+1), apply_del(v, k, l) lands in (k-1, l-1), and
// so on.  Terms with a negative index are zero, and maps into them return
// the empty column.
//
// Dual legs are stored in reverse: the flat index (b_1, ..., b_l) of the
// dual block encodes the tensor xi^{b_l} (x) ... (x) xi^{b_1}.  Evaluation
// nests from the middle outwards, so reversing the storage makes the
// pairing against V^{(x)l} straight.  Under the straight pairing the dual
// of a symmetrizer is its plain transpose at the same stored legs, the leg
// inserted by d joins the stored block at its end, and del contracts the
// last covariant leg against the last stored dual leg.

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qgl/charformula.hpp"
#include "qgl/hecke.hpp"
#include "qgl/scalar.hpp"
#include "qgl/tensorspace.hpp"

namespace qgl {

enum class KoszulKind { d, del, P, Q };

inline const char* koszul_kind_name(KoszulKind k) {
    switch (k) {
        case KoszulKind::d: return "d";
        case KoszulKind::del: return "del";
        case KoszulKind::P: return "P";
        case KoszulKind::Q: return "Q";
    }
    return "?";
}

// Domain index of a map, kept verbatim in reports.  family is 'K' or 'L';
// for family L read (k, l) as (p, r).
struct KoszulIndex {
    char family = 'K';
    int k = 0;
    int l = 0;
};

// Outcome of one residual identity check, shaped for direct JSON dumping.
struct IdentityReport {
    std::string identity;       // human-readable statement of the identity
    std::vector<int> indices;   // domain indices the check ran on
    bool residual_zero = false;
    std::string witness;        // first offending entry when the check fails
};

struct HomologyEntry {
    int k = 0;
    int l = 0;
    long long dim = 0;
    LaurentChar ch;  // character of the homology group, zero when dim == 0
};

// Kronecker product of two subspaces.  Reduced echelon bases stay reduced
// under kron, so the builder inserts are cheap.
template <class Field>
Subspace<Field> kron_subspace(const Subspace<Field>& a, const Subspace<Field>& b) {
    EchelonBuilder<Field> eb(a.ambient * b.ambient);
    for (const auto& ca : a.span)
        for (const auto& cb : b.span) {
            SpCol<Field> w;
            w.reserve(ca.size() * cb.size());
            for (const auto& [ra, va] : ca)
                for (const auto& [rb, vb] : cb) {
                    typename Field::Elem prod = va * vb;
                    if (!Field::is_zero(prod)) w.emplace_back(ra * b.ambient + rb, std::move(prod));
                }
            eb.insert(std::move(w));
        }
    return eb.take();
}

// Character of a weight-graded subspace of a (3|1) tensor power.
template <class Field>
LaurentChar subspace_char(const Subspace<Field>& w, const BasisIndex& basis) {
    LaurentChar ch;
    for (const auto& [mu, dm] : weight_components<Field>(w, basis)) {
        if (dm == 0) continue;
        if (mu.size() != 4) throw Error("subspace_char: want a (3|1) weight");
        ch = ch + LaurentChar::monomial(mu[0], mu[1], mu[2], mu[3], dm);
    }
    return ch;
}

template <class Field>
class KoszulContext {
public:
    explicit KoszulContext(const HeckeSymmetry& H, Field fld = Field{}, int cache_cap = 6)
        : eng_(H, fld, cache_cap) {}

    HeckeEngine<Field>& engine() { return eng_; }
    const SuperDim& dims() const { return eng_.dims(); }
    BasisIndex amb(int cov, int dual) const { return BasisIndex(eng_.dims(), cov, dual); }

    // ------------------------------------------------------------ terms ----

    // Lambda_k (x) Sym_l^*, the (k, l) term of family K.
    const Subspace<Field>& term_K(int k, int l) {
        check_nonneg(k, l, "term_K");
        auto key = std::make_pair(k, l);
        auto it = terms_k_.find(key);
        if (it != terms_k_.end()) return it->second;
        Subspace<Field> t = kron_subspace<Field>(eng_.sym_image(k, SymKind::ext),
                                                 dual_sym_image(l, SymKind::sym));
        return terms_k_.emplace(key, std::move(t)).first->second;
    }

    // Sym_p (x) Lambda_r, the (p, r) term of family L.
    const Subspace<Field>& term_L(int p, int r) {
        check_nonneg(p, r, "term_L");
        auto key = std::make_pair(p, r);
        auto it = terms_l_.find(key);
        if (it != terms_l_.end()) return it->second;
        Subspace<Field> t = kron_subspace<Field>(eng_.sym_image(p, SymKind::sym),
                                                 eng_.sym_image(r, SymKind::ext));
        return terms_l_.emplace(key, std::move(t)).first->second;
    }

    // Sym_i (x) Lambda_k (x) Sym_l^*, a double complex term.
    const Subspace<Field>& term_SKS(int i, int k, int l) {
        if (i < 0 || k < 0 || l < 0) throw Error("term_SKS: negative index");
        auto key = std::make_tuple(i, k, l);
        auto it = terms_sks_.find(key);
        if (it != terms_sks_.end()) return it->second;
        Subspace<Field> t = kron_subspace<Field>(eng_.sym_image(i, SymKind::sym), term_K(k, l));
        return terms_sks_.emplace(key, std::move(t)).first->second;
    }

    long long term_dim_K(int k, int l) {
        if (k < 0 || l < 0) return 0;
        return eng_.image_dim(k, SymKind::ext) * eng_.image_dim(l, SymKind::sym);
    }

    long long term_dim_L(int p, int r) {
        if (p < 0 || r < 0) return 0;
        return eng_.image_dim(p, SymKind::sym) * eng_.image_dim(r, SymKind::ext);
    }

    // Image of the transposed symmetrizer, the dual-side projector.
    const Subspace<Field>& dual_sym_image(int n, SymKind kind) {
        auto key = std::make_pair(n, kind);
        auto it = dual_images_.find(key);
        if (it != dual_images_.end()) return it->second;
        const LinMap<Field>& m = eng_.sym_matrix_t(n, kind);
        EchelonBuilder<Field> eb(m.rows);
        for (const auto& col : m.cols) eb.insert(col);
        return dual_images_.emplace(key, eb.take()).first->second;
    }

    // -------------------------------------------------------- pipelines ----
    // `prefix` covariant legs ride along untouched in front of the K-family
    // maps (the Sym_i factor of a double complex term); `duals` dual legs
    // ride along after the L-family maps.

    // d: .. Lambda_k Sym_l^*  ->  .. Lambda_{k+1} Sym_{l+1}^*
    SpCol<Field> apply_d(const SpCol<Field>& v, int k, int l, int prefix = 0) {
        if (v.empty() || k < 0 || l < 0) return {};
        BasisIndex from = amb(prefix + k, l);
        BasisIndex to = amb(prefix + k + 1, l + 1);
        int d = dims().d();
        SpCol<Field> raw;
        raw.reserve(v.size() * static_cast<size_t>(d));
        for (const auto& [idx, val] : v) {
            std::vector<int> ls = from.letters(idx);
            std::vector<int> nls(ls.size() + 2);
            for (int t = 0; t < prefix + k; ++t) nls[static_cast<size_t>(t)] = ls[static_cast<size_t>(t)];
            for (int t = prefix + k; t < from.legs(); ++t) nls[static_cast<size_t>(t + 1)] = ls[static_cast<size_t>(t)];
            for (int c = 0; c < d; ++c) {
                nls[static_cast<size_t>(prefix + k)] = c;
                nls[static_cast<size_t>(from.legs() + 1)] = c;
                raw.emplace_back(to.index_of(nls), val);
            }
        }
        SpCol<Field> w = col_coalesce<Field>(std::move(raw));
        w = eng_.apply_sym(w, to, prefix, k + 1, SymKind::ext);
        w = eng_.apply_sym(w, to, prefix + k + 1, l + 1, SymKind::sym, /*transposed=*/true);
        return w;
    }

    // del: .. Lambda_k Sym_l^*  ->  .. Lambda_{k-1} Sym_{l-1}^*
    SpCol<Field> apply_del(const SpCol<Field>& v, int k, int l, int prefix = 0) {
        if (v.empty() || k < 1 || l < 1) return {};
        BasisIndex from = amb(prefix + k, l);
        BasisIndex to = amb(prefix + k - 1, l - 1);
        const LinMap<Field>& c = eng_.c_matrix();
        SpCol<Field> raw;
        raw.reserve(v.size());
        for (const auto& [idx, val] : v) {
            std::vector<int> ls = from.letters(idx);
            int cov = ls[static_cast<size_t>(prefix + k - 1)];
            int dua = ls[static_cast<size_t>(from.legs() - 1)];
            typename Field::Elem coeff = c.get(dua, cov);
            if (Field::is_zero(coeff)) continue;
            std::vector<int> nls(ls.size() - 2);
            for (int t = 0; t < prefix + k - 1; ++t) nls[static_cast<size_t>(t)] = ls[static_cast<size_t>(t)];
            for (int t = prefix + k; t < from.legs() - 1; ++t) nls[static_cast<size_t>(t - 1)] = ls[static_cast<size_t>(t)];
            typename Field::Elem prod = val * coeff;
            raw.emplace_back(to.index_of(nls), std::move(prod));
        }
        SpCol<Field> w = col_coalesce<Field>(std::move(raw));
        w = eng_.apply_sym(w, to, prefix, k - 1, SymKind::ext);
        w = eng_.apply_sym(w, to, prefix + k - 1, l - 1, SymKind::sym, /*transposed=*/true);
        return w;
    }

    // P: Sym_p Lambda_r ..  ->  Sym_{p-1} Lambda_{r+1} ..
    SpCol<Field> apply_P(const SpCol<Field>& v, int p, int r, int duals = 0) {
        if (v.empty() || p < 1 || r < 0) return {};
        BasisIndex a = amb(p + r, duals);
        SpCol<Field> w = eng_.apply_sym(v, a, 0, p - 1, SymKind::sym);
        w = eng_.apply_sym(w, a, p - 1, r + 1, SymKind::ext);
        return w;
    }

    // Q: Sym_p Lambda_r ..  ->  Sym_{p+1} Lambda_{r-1} ..
    SpCol<Field> apply_Q(const SpCol<Field>& v, int p, int r, int duals = 0) {
        if (v.empty() || p < 0 || r < 1) return {};
        BasisIndex a = amb(p + r, duals);
        SpCol<Field> w = eng_.apply_sym(v, a, 0, p + 1, SymKind::sym);
        w = eng_.apply_sym(w, a, p + 1, r - 1, SymKind::ext);
        return w;
    }

    SpCol<Field> apply(KoszulKind which, const SpCol<Field>& v, int k, int l) {
        switch (which) {
            case KoszulKind::d: return apply_d(v, k, l);
            case KoszulKind::del: return apply_del(v, k, l);
            case KoszulKind::P: return apply_P(v, k, l);
            case KoszulKind::Q: return apply_Q(v, k, l);
        }
        throw Error("apply: unknown map kind");
    }

    // Matrix of a map in the term bases (rows: codomain term, columns:
    // domain term).  Maps into a vanished term give a 0-row matrix.
    LinMap<Field> matrix(KoszulKind which, int k, int l) {
        const Subspace<Field>* dom = nullptr;
        const Subspace<Field>* cod = nullptr;
        int ck = 0, cl = 0;
        switch (which) {
            case KoszulKind::d: ck = k + 1, cl = l + 1; break;
            case KoszulKind::del: ck = k - 1, cl = l - 1; break;
            case KoszulKind::P: ck = k - 1, cl = l + 1; break;
            case KoszulKind::Q: ck = k + 1, cl = l - 1; break;
        }
        bool k_family = which == KoszulKind::d || which == KoszulKind::del;
        dom = k_family ? &term_K(k, l) : &term_L(k, l);
        long long cod_dim = 0;
        if (ck >= 0 && cl >= 0) {
            cod = k_family ? &term_K(ck, cl) : &term_L(ck, cl);
            cod_dim = cod->dim();
        }
        LinMap<Field> out(cod_dim, dom->dim());
        for (long long j = 0; j < dom->dim(); ++j) {
            SpCol<Field> w = apply(which, dom->span[static_cast<size_t>(j)], k, l);
            if (!cod) {
                if (!w.empty()) throw Error("matrix: image of a map into a zero term is nonzero");
                continue;
            }
            auto coords = coords_in<Field>(*cod, std::move(w));
            if (!coords)
                throw Error(std::string("matrix: column ") + std::to_string(j) + " of " +
                            koszul_kind_name(which) + " escapes the codomain term");
            out.cols[static_cast<size_t>(j)] = std::move(*coords);
        }
        return out;
    }

    // Image of d_{k,l} inside the ambient of (k+1, l+1), cached.
    const Subspace<Field>& image_d(int k, int l) {
        auto key = std::make_pair(k, l);
        auto it = images_d_.find(key);
        if (it != images_d_.end()) return it->second;
        int tk = k < 0 ? 0 : k + 1;
        int tl = l < 0 ? 0 : l + 1;
        EchelonBuilder<Field> eb(amb(tk, tl).size());
        if (k >= 0 && l >= 0)
            for (const auto& u : term_K(k, l).span) eb.insert(apply_d(u, k, l));
        return images_d_.emplace(key, eb.take()).first->second;
    }

    // Kernel of d_{k,l}, as a subspace of the (k, l) ambient.
    Subspace<Field> kernel_d(int k, int l) {
        const Subspace<Field>& t = term_K(k, l);
        EchelonBuilder<Field> img(amb(k + 1, l + 1).size(), /*track=*/true);
        EchelonBuilder<Field> ker(t.ambient);
        for (const auto& u : t.span) {
            SpCol<Field> dep;
            if (!img.insert(apply_d(u, k, l), &dep)) ker.insert(combine(t, dep));
        }
        return ker.take();
    }

    // Empirical sign of the closing bracket in the contraction identity
    //   q [l][k] d.del + [l+1][k+1] del.d = q^k ([l-k] - [±(r-s)]) id,
    // probed once on the (0, 0) term: +1 keeps [r-s], -1 flips it to
    // [s-r], 0 means neither candidate matches.
    int ct3_sign() {
        if (ct3_sign_) return *ct3_sign_;
        SpCol<Field> unit{{0, Field::one()}};
        SpCol<Field> dd = apply_del(apply_d(unit, 0, 0), 1, 1);
        typename Field::Elem got = col_get<Field>(dd, 0);
        int rs = dims().r - dims().s;
        typename Field::Elem plus = eng_.convert(q_int_at(eng_.param(), 0) - q_int_at(eng_.param(), rs));
        typename Field::Elem minus = eng_.convert(q_int_at(eng_.param(), 0) - q_int_at(eng_.param(), -rs));
        int sign = 0;
        if (got == minus) sign = -1;
        else if (got == plus) sign = 1;
        ct3_sign_ = sign;
        return sign;
    }

private:
    static void check_nonneg(int k, int l, const char* who) {
        if (k < 0 || l < 0) throw Error(std::string(who) + ": negative index");
    }

    // Expand coordinates over t.span into the ambient.
    static SpCol<Field> combine(const Subspace<Field>& t, const SpCol<Field>& coords) {
        SpCol<Field> out;
        for (const auto& [j, c] : coords) col_axpy<Field>(out, c, t.span[static_cast<size_t>(j)]);
        return out;
    }

    HeckeEngine<Field> eng_;
    std::map<std::pair<int, int>, Subspace<Field>> terms_k_, terms_l_, images_d_;
    std::map<std::tuple<int, int, int>, Subspace<Field>> terms_sks_;
    std::map<std::pair<int, SymKind>, Subspace<Field>> dual_images_;
    std::optional<int> ct3_sign_;
};

namespace detail {

template <class Field>
std::string residual_witness(const SpCol<Field>& v, const BasisIndex& a) {
    if (v.empty()) return {};
    return "residual at " + a.name(v.front().first) + " = " + Field::str(v.front().second);
}

}  // namespace detail

// q [l][k] d.del + [l+1][k+1] del.d = q^k ([l-k] - [s-r]) id on the (k, l)
// term (the bracket sign is probed once per context, see ct3_sign).
template <class Field>
IdentityReport verify_ct3(KoszulContext<Field>& C, int k, int l) {
    IdentityReport rep;
    rep.indices = {k, l};
    int sign = C.ct3_sign();
    rep.identity = std::string("q[l][k] d.del + [l+1][k+1] del.d = q^k([l-k] - [") +
                   (sign >= 0 ? "r-s" : "s-r") + "]) id";
    if (sign == 0) {
        rep.witness = "neither bracket sign matches the contraction on the (0,0) term";
        return rep;
    }
    HeckeEngine<Field>& eng = C.engine();
    const Scalar& p = eng.param();
    int rs = sign * (C.dims().r - C.dims().s);
    typename Field::Elem c1 = eng.convert(p * q_int_at(p, l) * q_int_at(p, k));
    typename Field::Elem c2 = eng.convert(q_int_at(p, l + 1) * q_int_at(p, k + 1));
    typename Field::Elem rhs = eng.convert(p.pow(k) * (q_int_at(p, l - k) - q_int_at(p, rs)));
    typename Field::Elem neg_rhs = Field::zero() - rhs;
    rep.residual_zero = true;
    for (const auto& u : C.term_K(k, l).span) {
        SpCol<Field> ddel = C.apply_d(C.apply_del(u, k, l), k - 1, l - 1);
        SpCol<Field> deld = C.apply_del(C.apply_d(u, k, l), k + 1, l + 1);
        SpCol<Field> res = col_scale<Field>(ddel, c1);
        col_axpy<Field>(res, c2, deld);
        col_axpy<Field>(res, neg_rhs, u);
        if (!res.empty()) {
            rep.residual_zero = false;
            rep.witness = detail::residual_witness<Field>(res, C.amb(k, l));
            return rep;
        }
    }
    return rep;
}

// [r][p+1] PQ + [p][r+1] QP = [p+r] id on the (p, r) term of family L.
template <class Field>
IdentityReport verify_ct60(KoszulContext<Field>& C, int p, int r) {
    IdentityReport rep;
    rep.identity = "[r][p+1] PQ + [p][r+1] QP = [p+r] id";
    rep.indices = {p, r};
    HeckeEngine<Field>& eng = C.engine();
    const Scalar& qq = eng.param();
    typename Field::Elem c1 = eng.convert(q_int_at(qq, r) * q_int_at(qq, p + 1));
    typename Field::Elem c2 = eng.convert(q_int_at(qq, p) * q_int_at(qq, r + 1));
    typename Field::Elem neg_rhs = eng.convert(Scalar(0) - q_int_at(qq, p + r));
    rep.residual_zero = true;
    for (const auto& u : C.term_L(p, r).span) {
        SpCol<Field> pq = C.apply_P(C.apply_Q(u, p, r), p + 1, r - 1);
        SpCol<Field> qp = C.apply_Q(C.apply_P(u, p, r), p - 1, r + 1);
        SpCol<Field> res = col_scale<Field>(pq, c1);
        col_axpy<Field>(res, c2, qp);
        col_axpy<Field>(res, neg_rhs, u);
        if (!res.empty()) {
            rep.residual_zero = false;
            rep.witness = detail::residual_witness<Field>(res, C.amb(p + r, 0));
            return rep;
        }
    }
    return rep;
}

// d.d = 0 on the (k, l) term.
template <class Field>
IdentityReport verify_d2(KoszulContext<Field>& C, int k, int l) {
    IdentityReport rep;
    rep.identity = "d.d = 0";
    rep.indices = {k, l};
    rep.residual_zero = true;
    for (const auto& u : C.term_K(k, l).span) {
        SpCol<Field> w = C.apply_d(C.apply_d(u, k, l), k + 1, l + 1);
        if (!w.empty()) {
            rep.residual_zero = false;
            rep.witness = detail::residual_witness<Field>(w, C.amb(k + 2, l + 2));
            return rep;
        }
    }
    return rep;
}

// del.del = 0 on the (k, l) term.
template <class Field>
IdentityReport verify_del2(KoszulContext<Field>& C, int k, int l) {
    IdentityReport rep;
    rep.identity = "del.del = 0";
    rep.indices = {k, l};
    rep.residual_zero = true;
    for (const auto& u : C.term_K(k, l).span) {
        SpCol<Field> w = C.apply_del(C.apply_del(u, k, l), k - 1, l - 1);
        if (!w.empty()) {
            rep.residual_zero = false;
            rep.witness = detail::residual_witness<Field>(w, C.amb(k - 2, l - 2));
            return rep;
        }
    }
    return rep;
}

// Double complex square with bottom-left corner Sym_{i+1} Lambda_{k-1}
// Sym_l^*: going right then up must equal going up then right,
//   (P_{i+1,k} (x) id) (id (x) d_{k-1,l}) = (id (x) d_{k,l}) (P_{i+1,k-1} (x) id).
template <class Field>
IdentityReport verify_square(KoszulContext<Field>& C, int i, int k, int l) {
    if (k < 1) throw Error("verify_square: need k >= 1");
    IdentityReport rep;
    rep.identity = "P d = d P";
    rep.indices = {i, k, l};
    rep.residual_zero = true;
    for (const auto& u : C.term_SKS(i + 1, k - 1, l).span) {
        SpCol<Field> right_up = C.apply_P(C.apply_d(u, k - 1, l, i + 1), i + 1, k, l + 1);
        SpCol<Field> up_right = C.apply_d(C.apply_P(u, i + 1, k - 1, l), k, l, i);
        typename Field::Elem minus_one = Field::zero() - Field::one();
        col_axpy<Field>(right_up, minus_one, up_right);
        if (!right_up.empty()) {
            rep.residual_zero = false;
            rep.witness = detail::residual_witness<Field>(right_up, C.amb(i + k + 1, l + 1));
            return rep;
        }
    }
    return rep;
}

// Homology of the complex K_a at every position (k, l = k - a) with
// k + l <= window, by rank arithmetic on the raising maps d.
template <class Field>
std::vector<HomologyEntry> homology_K(KoszulContext<Field>& C, int a, int window) {
    std::vector<HomologyEntry> out;
    int k0 = a > 0 ? a : 0;
    int kmax = (window + a) / 2;
    long long rank_prev = 0;
    Subspace<Field> image_prev = Subspace<Field>::zero(C.amb(k0, k0 - a).size());
    for (int k = k0; k <= kmax; ++k) {
        int l = k - a;
        const Subspace<Field>& t = C.term_K(k, l);
        EchelonBuilder<Field> img(C.amb(k + 1, l + 1).size(), /*track=*/true);
        EchelonBuilder<Field> ker(t.ambient);
        for (const auto& u : t.span) {
            SpCol<Field> dep;
            SpCol<Field> w = C.apply_d(u, k, l);
            if (!img.insert(std::move(w), &dep)) {
                SpCol<Field> kv;
                for (const auto& [j, c] : dep) col_axpy<Field>(kv, c, t.span[static_cast<size_t>(j)]);
                ker.insert(std::move(kv));
            }
        }
        HomologyEntry e;
        e.k = k;
        e.l = l;
        e.dim = ker.rank() - rank_prev;
        if (e.dim < 0) throw Error("homology_K: image escapes the kernel");
        if (e.dim > 0) {
            Subspace<Field> kernel = ker.take();
            e.ch = subspace_char<Field>(kernel, C.amb(k, l)) -
                   subspace_char<Field>(image_prev, C.amb(k, l));
        }
        out.push_back(std::move(e));
        rank_prev = img.rank();
        image_prev = img.take();
    }
    return out;
}

// Splitting of the (k, l) term off the contraction identity, defined when
// k - l != 2 so the identity's right side is invertible:
//   Lambda_k (x) Sym_l^*  =  Im d_{k-1,l-1}  (+)  Im del_{k+1,l+1},
// and d carries the second summand isomorphically onto Im d_{k,l}.
template <class Field>
struct SplitReport {
    int k = 0, l = 0;
    bool ok = false;
    Subspace<Field> lower;  // Im d_{k-1,l-1}
    Subspace<Field> upper;  // Im del_{k+1,l+1}, a copy of Im d_{k,l}
    LaurentChar ch_lower, ch_upper;
    std::string witness;
};

template <class Field>
SplitReport<Field> image_splitting(KoszulContext<Field>& C, int k, int l) {
    if (k - l == C.dims().r - C.dims().s)
        throw Error("image_splitting: the contraction identity degenerates at k - l = r - s");
    SplitReport<Field> rep;
    rep.k = k;
    rep.l = l;
    const Subspace<Field>& t = C.term_K(k, l);
    rep.lower = C.image_d(k - 1, l - 1);
    EchelonBuilder<Field> up(t.ambient);
    for (const auto& u : C.term_K(k + 1, l + 1).span) up.insert(C.apply_del(u, k + 1, l + 1));
    rep.upper = up.take();
    rep.ch_lower = subspace_char<Field>(rep.lower, C.amb(k, l));
    rep.ch_upper = subspace_char<Field>(rep.upper, C.amb(k, l));
    rep.ok = true;
    EchelonBuilder<Field> sum(t.ambient);
    for (const auto& u : rep.lower.span) sum.insert(u);
    for (const auto& u : rep.upper.span) sum.insert(u);
    if (sum.rank() != rep.lower.dim() + rep.upper.dim()) {
        rep.ok = false;
        rep.witness = "summands intersect";
    } else if (sum.rank() != t.dim()) {
        rep.ok = false;
        rep.witness = "summands do not fill the term";
    } else if (!subspace_leq<Field>(rep.lower, t) || !subspace_leq<Field>(rep.upper, t)) {
        rep.ok = false;
        rep.witness = "a summand escapes the term";
    } else if (rep.upper.dim() != C.image_d(k, l).dim()) {
        rep.ok = false;
        rep.witness = "upper summand does not match the image of d";
    }
    return rep;
}

// ------------------------------------------------- one-shot conveniences ----
// Exact-backend wrappers that build a fresh context per call.

LinMap<ExactField> koszul_map(const HeckeSymmetry& H, KoszulKind which, int k, int l);
IdentityReport verify_ct3(const HeckeSymmetry& H, int k, int l);
IdentityReport verify_ct60(const HeckeSymmetry& H, int p, int r);
std::vector<HomologyEntry> homology_K(const HeckeSymmetry& H, int a, int window);
SplitReport<ExactField> image_splitting(const HeckeSymmetry& H, int k, int l);

}  // namespace qgl
