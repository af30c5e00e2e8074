// Graded tensor products V^(x)k (x) V*^(x)l over a super vector space,
// sparse exact linear algebra (image/kernel/rank, restriction to subspaces)
// and the subspace calculus everything downstream is built on.
//
// All algorithms are templated over a field backend:
//   ExactField -- entries are Scalar, the rational function field (authoritative)
//   EvalField  -- entries are mpq_class, the field generator pinned to a point
// Source data (R-matrix entries, symmetrizer coefficients) is always Scalar;
// a backend converts on the way in via Field::convert.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgl/scalar.hpp"

namespace qgl {

struct SuperDim {
    int r = 3;
    int s = 1;
    int d() const { return r + s; }
    // letters are 0-based: 0..r-1 even, r..r+s-1 odd
    int parity(int letter) const { return letter >= r ? 1 : 0; }
    bool operator==(const SuperDim&) const = default;
};

using Weight = std::vector<int>;  // exponent of each basis letter, size d

// Enumeration of the monomial basis of V^(x)k (x) V*^(x)l.  The flat index
// is the base-d digit string of the letters, leftmost leg most significant,
// covariant legs first; this *is* the lexicographic order.
struct BasisIndex {
    SuperDim dims;
    int k = 0;
    int l = 0;

    BasisIndex() = default;
    BasisIndex(SuperDim dm, int kk, int ll);

    int legs() const { return k + l; }
    long long size() const;
    int letter(long long idx, int leg) const;
    std::vector<int> letters(long long idx) const;
    long long index_of(const std::vector<int>& ls) const;
    int parity(long long idx) const;
    Weight weight(long long idx) const;
    std::string name(long long idx) const;  // e.g. "x1.x4|xi2", diagnostics
    bool operator==(const BasisIndex&) const = default;
};

BasisIndex tensor_basis(SuperDim dims, int k, int l);

// ------------------------------------------------------------- backends ----

struct ExactField {
    using Elem = Scalar;
    static Elem zero() { return Scalar(); }
    static Elem one() { return Scalar(1); }
    static bool is_zero(const Elem& a) { return a.is_zero(); }
    Elem convert(const Scalar& s) const { return s; }
    // pivot preference: low degree keeps elimination swell down
    static long long complexity(const Elem& a) {
        return 4 * (std::max(a.num().degree(), 0) + std::max(a.den().degree(), 0));
    }
    static std::string str(const Elem& a) { return a.str(); }
};

struct EvalField {
    EvalPoint at;
    using Elem = mpq_class;
    explicit EvalField(EvalPoint pt) : at(std::move(pt)) {}
    static Elem zero() { return mpq_class(0); }
    static Elem one() { return mpq_class(1); }
    static bool is_zero(const Elem& a) { return sgn(a) == 0; }
    Elem convert(const Scalar& s) const { return s.eval(at); }
    static long long complexity(const Elem& a) {
        return static_cast<long long>(mpz_sizeinbase(a.get_num().get_mpz_t(), 2) +
                                      mpz_sizeinbase(a.get_den().get_mpz_t(), 2));
    }
    static std::string str(const Elem& a) { return a.get_str(); }
};

// ------------------------------------------------------ sparse matrices ----

// one sparse column: (row, value), strictly increasing rows, no zeros stored
template <class Field>
using SpCol = std::vector<std::pair<long long, typename Field::Elem>>;

template <class Field>
SpCol<Field> col_add(const SpCol<Field>& a, const SpCol<Field>& b) {
    SpCol<Field> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            typename Field::Elem v = a[i].second + b[j].second;
            if (!Field::is_zero(v)) out.emplace_back(a[i].first, std::move(v));
            ++i, ++j;
        }
    }
    return out;
}

// a += c * b
template <class Field>
void col_axpy(SpCol<Field>& a, const typename Field::Elem& c, const SpCol<Field>& b) {
    if (Field::is_zero(c) || b.empty()) return;
    SpCol<Field> scaled;
    scaled.reserve(b.size());
    for (const auto& [r, v] : b) {
        typename Field::Elem w = c * v;
        if (!Field::is_zero(w)) scaled.emplace_back(r, std::move(w));
    }
    a = col_add<Field>(a, scaled);
}

template <class Field>
SpCol<Field> col_scale(const SpCol<Field>& a, const typename Field::Elem& c) {
    SpCol<Field> out;
    if (Field::is_zero(c)) return out;
    out.reserve(a.size());
    for (const auto& [r, v] : a) {
        typename Field::Elem w = c * v;
        if (!Field::is_zero(w)) out.emplace_back(r, std::move(w));
    }
    return out;
}

// append / sort / coalesce accumulator for building columns out of many terms
template <class Field>
SpCol<Field> col_coalesce(SpCol<Field> raw) {
    std::sort(raw.begin(), raw.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    SpCol<Field> out;
    out.reserve(raw.size());
    for (auto& [r, v] : raw) {
        if (!out.empty() && out.back().first == r)
            out.back().second += v;
        else
            out.emplace_back(r, std::move(v));
        if (!out.empty() && Field::is_zero(out.back().second)) out.pop_back();
    }
    return out;
}

template <class Field>
typename Field::Elem col_get(const SpCol<Field>& a, long long row) {
    auto it = std::lower_bound(a.begin(), a.end(), row, [](const auto& e, long long r) {
        return e.first < r;
    });
    if (it != a.end() && it->first == row) return it->second;
    return Field::zero();
}

// Linear map as a list of sparse columns.  Rows/columns are plain sizes; the
// caller keeps track of which BasisIndex or Subspace they refer to.
template <class Field>
struct LinMap {
    using Elem = typename Field::Elem;
    long long rows = 0;
    std::vector<SpCol<Field>> cols;

    LinMap() = default;
    LinMap(long long r, long long c) : rows(r), cols(static_cast<size_t>(c)) {}
    long long ncols() const { return static_cast<long long>(cols.size()); }

    static LinMap identity(long long n) {
        LinMap m(n, n);
        for (long long i = 0; i < n; ++i) m.cols[i].emplace_back(i, Field::one());
        return m;
    }

    void set(long long i, long long j, Elem v) {
        auto& col = cols[static_cast<size_t>(j)];
        auto it = std::lower_bound(col.begin(), col.end(), i,
                                   [](const auto& e, long long r) { return e.first < r; });
        if (it != col.end() && it->first == i) {
            if (Field::is_zero(v))
                col.erase(it);
            else
                it->second = std::move(v);
        } else if (!Field::is_zero(v)) {
            col.insert(it, {i, std::move(v)});
        }
    }
    Elem get(long long i, long long j) const { return col_get<Field>(cols[static_cast<size_t>(j)], i); }

    long long nnz() const {
        long long n = 0;
        for (const auto& c : cols) n += static_cast<long long>(c.size());
        return n;
    }

    LinMap transpose() const {
        LinMap t(ncols(), rows);
        for (long long j = 0; j < ncols(); ++j)
            for (const auto& [i, v] : cols[static_cast<size_t>(j)])
                t.cols[static_cast<size_t>(i)].emplace_back(j, v);
        return t;
    }

    Elem trace() const {
        Elem t = Field::zero();
        for (long long j = 0; j < std::min(rows, ncols()); ++j) t = t + get(j, j);
        return t;
    }

    bool operator==(const LinMap& o) const { return rows == o.rows && cols == o.cols; }
};

template <class Field>
SpCol<Field> mat_apply(const LinMap<Field>& m, const SpCol<Field>& v) {
    SpCol<Field> raw;
    for (const auto& [j, c] : v)
        if (j >= m.ncols()) throw Error("mat_apply: vector exceeds domain");
    for (const auto& [j, c] : v)
        for (const auto& [i, a] : m.cols[static_cast<size_t>(j)]) {
            typename Field::Elem w = a * c;
            if (!Field::is_zero(w)) raw.emplace_back(i, std::move(w));
        }
    return col_coalesce<Field>(std::move(raw));
}

template <class Field>
LinMap<Field> mat_mul(const LinMap<Field>& a, const LinMap<Field>& b) {
    if (a.ncols() != b.rows) throw Error("LinMap: composition shape mismatch");
    LinMap<Field> out(a.rows, b.ncols());
    for (long long j = 0; j < b.ncols(); ++j)
        out.cols[static_cast<size_t>(j)] = mat_apply(a, b.cols[static_cast<size_t>(j)]);
    return out;
}

template <class Field>
LinMap<Field> mat_add(const LinMap<Field>& a, const LinMap<Field>& b) {
    if (a.rows != b.rows || a.ncols() != b.ncols()) throw Error("LinMap: sum shape mismatch");
    LinMap<Field> out(a.rows, b.ncols());
    for (long long j = 0; j < b.ncols(); ++j)
        out.cols[static_cast<size_t>(j)] =
            col_add<Field>(a.cols[static_cast<size_t>(j)], b.cols[static_cast<size_t>(j)]);
    return out;
}

template <class Field>
LinMap<Field> mat_scale(const LinMap<Field>& a, const typename Field::Elem& c) {
    LinMap<Field> out(a.rows, a.ncols());
    for (long long j = 0; j < a.ncols(); ++j)
        out.cols[static_cast<size_t>(j)] = col_scale<Field>(a.cols[static_cast<size_t>(j)], c);
    return out;
}

template <class Field>
LinMap<Field> mat_sub(const LinMap<Field>& a, const LinMap<Field>& b) {
    return mat_add(a, mat_scale(b, typename Field::Elem(Field::zero() - Field::one())));
}

template <class Field>
bool mat_is_zero(const LinMap<Field>& a) {
    for (const auto& c : a.cols)
        if (!c.empty()) return false;
    return true;
}

// Kronecker product with the leftmost factor most significant, matching the
// BasisIndex digit convention.
template <class Field>
LinMap<Field> mat_kron(const LinMap<Field>& a, const LinMap<Field>& b) {
    LinMap<Field> out(a.rows * b.rows, a.ncols() * b.ncols());
    for (long long ja = 0; ja < a.ncols(); ++ja)
        for (long long jb = 0; jb < b.ncols(); ++jb) {
            auto& col = out.cols[static_cast<size_t>(ja * b.ncols() + jb)];
            for (const auto& [ia, va] : a.cols[static_cast<size_t>(ja)])
                for (const auto& [ib, vb] : b.cols[static_cast<size_t>(jb)]) {
                    typename Field::Elem w = va * vb;
                    if (!Field::is_zero(w)) col.emplace_back(ia * b.rows + ib, std::move(w));
                }
        }
    return out;
}

// Apply a small operator acting on `m` adjacent legs of the ambient tensor
// space, legs [leg0, leg0+m).  `small` is a matrix on the d^m-dimensional
// leg-group space with the same digit convention.
template <class Field>
SpCol<Field> apply_on_legs(const LinMap<Field>& small, const BasisIndex& ambient, int leg0,
                           int m, const SpCol<Field>& v) {
    int d = ambient.dims.d();
    long long group = 1;
    for (int i = 0; i < m; ++i) group *= d;
    if (small.rows != group || small.ncols() != group)
        throw Error("apply_on_legs: operator size does not match leg count");
    long long stride = 1;
    for (int i = leg0 + m; i < ambient.legs(); ++i) stride *= d;
    SpCol<Field> raw;
    for (const auto& [idx, c] : v) {
        long long g = (idx / stride) % group;
        long long base = idx - g * stride;
        for (const auto& [g2, a] : small.cols[static_cast<size_t>(g)]) {
            typename Field::Elem w = a * c;
            if (!Field::is_zero(w)) raw.emplace_back(base + g2 * stride, std::move(w));
        }
    }
    return col_coalesce<Field>(std::move(raw));
}

// ------------------------------------------------------------ subspaces ----

// Span kept in reduced column echelon form: each column has a unit pivot in
// a private row, and pivot rows are cleared from every other column.  Pivot
// rows are chosen by lowest entry complexity (ties: lowest row index).
template <class Field>
struct Subspace {
    long long ambient = 0;
    std::vector<SpCol<Field>> span;
    std::vector<long long> pivots;  // pivot row of each span column

    long long dim() const { return static_cast<long long>(span.size()); }

    static Subspace zero(long long ambient_dim) {
        Subspace s;
        s.ambient = ambient_dim;
        return s;
    }
    static Subspace full(long long ambient_dim) {
        Subspace s;
        s.ambient = ambient_dim;
        for (long long i = 0; i < ambient_dim; ++i) {
            s.span.push_back({{i, Field::one()}});
            s.pivots.push_back(i);
        }
        return s;
    }
};

// Incremental reduced-echelon builder, optionally tracking the expression of
// each inserted vector in terms of the original insertion sequence (used to
// harvest kernel combinations).
template <class Field>
class EchelonBuilder {
public:
    explicit EchelonBuilder(long long ambient_dim, bool track = false)
        : ambient_(ambient_dim), track_(track) {}

    // Returns true if v enlarged the span.  When tracking and v was already
    // in the span, *dependency receives the combination c over insertion
    // indices with sum_t c_t * (t-th inserted vector) = 0 and c = 1 at the
    // current index, i.e. a kernel vector of the inserted column sequence.
    bool insert(SpCol<Field> v, SpCol<Field>* dependency = nullptr) {
        SpCol<Field> u;
        if (track_) u.emplace_back(count_, Field::one());
        ++count_;
        reduce(v, u);
        if (v.empty()) {
            if (dependency) {
                // v - combination = 0, so the dependency flips sign on all
                // but the vector itself
                *dependency = std::move(u);
            }
            return false;
        }
        // pick pivot by complexity
        size_t best = 0;
        for (size_t t = 1; t < v.size(); ++t)
            if (Field::complexity(v[t].second) < Field::complexity(v[best].second)) best = t;
        long long prow = v[best].first;
        typename Field::Elem pinv = Field::one() / v[best].second;
        v = col_scale<Field>(v, pinv);
        if (track_) u = col_scale<Field>(u, pinv);
        // clear the pivot row from existing columns to stay fully reduced
        for (size_t i = 0; i < span_.size(); ++i) {
            auto c = col_get<Field>(span_[i], prow);
            if (Field::is_zero(c)) continue;
            typename Field::Elem nc = Field::zero() - c;
            col_axpy<Field>(span_[i], nc, v);
            if (track_) col_axpy<Field>(comp_[i], nc, u);
        }
        span_.push_back(std::move(v));
        pivots_.push_back(prow);
        if (track_) comp_.push_back(std::move(u));
        return true;
    }

    long long rank() const { return static_cast<long long>(span_.size()); }

    Subspace<Field> take() {
        Subspace<Field> s;
        s.ambient = ambient_;
        s.span = std::move(span_);
        s.pivots = std::move(pivots_);
        return s;
    }

private:
    void reduce(SpCol<Field>& v, SpCol<Field>& u) const {
        for (size_t i = 0; i < span_.size(); ++i) {
            auto c = col_get<Field>(v, pivots_[i]);
            if (Field::is_zero(c)) continue;
            typename Field::Elem nc = Field::zero() - c;
            col_axpy<Field>(v, nc, span_[i]);
            if (track_) col_axpy<Field>(u, nc, comp_[i]);
        }
    }

    long long ambient_;
    bool track_;
    long long count_ = 0;
    std::vector<SpCol<Field>> span_;
    std::vector<long long> pivots_;
    std::vector<SpCol<Field>> comp_;
};

template <class Field>
std::pair<Subspace<Field>, Subspace<Field>> image_kernel(const LinMap<Field>& m) {
    EchelonBuilder<Field> img(m.rows, /*track=*/true);
    EchelonBuilder<Field> ker(m.ncols());
    for (long long j = 0; j < m.ncols(); ++j) {
        SpCol<Field> dep;
        if (!img.insert(m.cols[static_cast<size_t>(j)], &dep)) ker.insert(std::move(dep));
    }
    auto image = img.take();
    auto kernel = ker.take();
    if (image.dim() + kernel.dim() != m.ncols()) throw Error("image_kernel: rank-nullity broken");
    return {std::move(image), std::move(kernel)};
}

// Coordinates of v in the span of s, or nullopt if v is outside.
template <class Field>
std::optional<SpCol<Field>> coords_in(const Subspace<Field>& s, SpCol<Field> v) {
    SpCol<Field> coords;
    for (size_t i = 0; i < s.span.size(); ++i) {
        auto c = col_get<Field>(v, s.pivots[i]);
        if (Field::is_zero(c)) continue;
        coords.emplace_back(static_cast<long long>(i), c);
        typename Field::Elem nc = Field::zero() - c;
        col_axpy<Field>(v, nc, s.span[i]);
    }
    if (!v.empty()) return std::nullopt;
    return col_coalesce<Field>(std::move(coords));
}

template <class Field>
bool contains(const Subspace<Field>& s, const SpCol<Field>& v) {
    return coords_in<Field>(s, v).has_value();
}

template <class Field>
bool subspace_equal(const Subspace<Field>& a, const Subspace<Field>& b) {
    if (a.ambient != b.ambient || a.dim() != b.dim()) return false;
    for (const auto& c : a.span)
        if (!contains<Field>(b, c)) return false;
    return true;
}

template <class Field>
bool subspace_leq(const Subspace<Field>& a, const Subspace<Field>& b) {
    if (a.ambient != b.ambient || a.dim() > b.dim()) return false;
    for (const auto& c : a.span)
        if (!contains<Field>(b, c)) return false;
    return true;
}

template <class Field>
Subspace<Field> subspace_sum(const Subspace<Field>& a, const Subspace<Field>& b) {
    if (a.ambient != b.ambient) throw Error("subspace_sum: ambient mismatch");
    EchelonBuilder<Field> e(a.ambient);
    for (const auto& c : a.span) e.insert(c);
    for (const auto& c : b.span) e.insert(c);
    return e.take();
}

// Spanning columns as a matrix (ambient rows).
template <class Field>
LinMap<Field> span_matrix(const Subspace<Field>& s) {
    LinMap<Field> m(s.ambient, s.dim());
    m.cols = s.span;
    return m;
}

// Matrix of M restricted to dom -> cod in the subspace bases.  Every image
// column must lie in cod; violations report the offending column.
template <class Field>
LinMap<Field> restrict_to(const LinMap<Field>& m, const Subspace<Field>& dom,
                          const Subspace<Field>& cod) {
    if (m.ncols() != dom.ambient || m.rows != cod.ambient)
        throw Error("restrict_to: ambient shape mismatch");
    LinMap<Field> out(cod.dim(), dom.dim());
    for (long long j = 0; j < dom.dim(); ++j) {
        auto w = mat_apply<Field>(m, dom.span[static_cast<size_t>(j)]);
        auto c = coords_in<Field>(cod, std::move(w));
        if (!c)
            throw Error("restrict_to: image of column " + std::to_string(j) +
                        " is not contained in the codomain");
        out.cols[static_cast<size_t>(j)] = std::move(*c);
    }
    return out;
}

// dim of W cap (weight-mu block) for each weight mu occurring in the ambient
// basis.  Requires W to be weight-graded: the block projection of every
// spanning vector must stay inside W.
template <class Field>
std::map<Weight, long long> weight_components(const Subspace<Field>& w, const BasisIndex& basis) {
    if (w.ambient != basis.size()) throw Error("weight_components: ambient mismatch");
    std::map<Weight, long long> blocks;
    for (long long i = 0; i < basis.size(); ++i) blocks[basis.weight(i)] = 0;
    std::map<Weight, EchelonBuilder<Field>> builders;
    for (size_t j = 0; j < w.span.size(); ++j) {
        std::map<Weight, SpCol<Field>> pieces;
        for (const auto& [row, v] : w.span[j]) pieces[basis.weight(row)].emplace_back(row, v);
        for (auto& [mu, proj] : pieces) {
            // single-weight columns are their own projection, trivially inside
            if (pieces.size() > 1 && !contains<Field>(w, proj))
                throw Error("weight_components: subspace is not weight-graded (column " +
                            std::to_string(j) + ", weight block of row " +
                            std::to_string(proj.front().first) + ")");
            auto it = builders.try_emplace(mu, w.ambient).first;
            it->second.insert(std::move(proj));
        }
    }
    long long total = 0;
    for (auto& [mu, eb] : builders) {
        blocks[mu] = eb.rank();
        total += eb.rank();
    }
    if (total != w.dim()) throw Error("weight_components: block dimensions do not sum");
    return blocks;
}

// ------------------------------------------------------------ CSV dumps ----

template <class Field>
std::string mat_csv(const LinMap<Field>& m) {
    std::string out;
    for (long long i = 0; i < m.rows; ++i) {
        for (long long j = 0; j < m.ncols(); ++j) {
            if (j) out += ",";
            out += Field::str(m.get(i, j));
        }
        out += "\n";
    }
    return out;
}

template <class Field>
std::string subspace_csv(const Subspace<Field>& s) {
    return "ambient=" + std::to_string(s.ambient) + ",dim=" + std::to_string(s.dim()) + "\n" +
           mat_csv(span_matrix(s));
}

}  // namespace qgl
