#include "qgl/hecke.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace qgl {

namespace {

long long pow_ll(int base, int e) {
    long long v = 1;
    for (int t = 0; t < e; ++t) v *= base;
    return v;
}

std::string entry_witness(const BasisIndex& basis, long long row, long long col,
                          const Scalar& value) {
    return basis.name(row) + " <- " + basis.name(col) + " : " + value.str();
}

// first nonzero entry of a (small) exact matrix, if any
std::optional<std::pair<long long, long long>> first_nonzero(const LinMap<ExactField>& m) {
    for (long long j = 0; j < m.ncols(); ++j)
        if (!m.cols[static_cast<size_t>(j)].empty())
            return std::make_pair(m.cols[static_cast<size_t>(j)].front().first, j);
    return std::nullopt;
}

// Gauss-Jordan solve of A X = B over the rational function field; A is
// consumed.  Throws on a singular A.
std::vector<std::vector<Scalar>> dense_solve(std::vector<std::vector<Scalar>> a,
                                             std::vector<std::vector<Scalar>> b,
                                             const std::string& who) {
    const size_t n = a.size();
    const size_t m = b.empty() ? 0 : b[0].size();
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = n;
        long long best = 0;
        for (size_t r = col; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            long long cx = ExactField::complexity(a[r][col]);
            if (pivot == n || cx < best) pivot = r, best = cx;
        }
        if (pivot == n) throw Error(who + ": singular system, no Hecke closure");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        Scalar inv = a[col][col].inv();
        for (size_t j = col; j < n; ++j) a[col][j] *= inv;
        for (size_t j = 0; j < m; ++j) b[col][j] *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Scalar f = a[r][col];
            for (size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
            for (size_t j = 0; j < m; ++j) b[r][j] -= f * b[col][j];
        }
    }
    return b;
}

}  // namespace

HeckeSymmetry build_standard_r(int r, int s, const Scalar& q) {
    if (r < 0 || s < 0 || r + s < 1) throw Error("build_standard_r: bad birank");
    SuperDim dims{r, s};
    const int d = dims.d();
    LinMap<ExactField> R(static_cast<long long>(d) * d, static_cast<long long>(d) * d);
    Scalar q2 = q * q;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            long long in = static_cast<long long>(a) * d + b;
            if (a == b) {
                R.set(in, in, dims.parity(a) ? Scalar(-1) : q2);
                continue;
            }
            if (a < b) R.set(in, in, q2 - Scalar(1));
            Scalar swap = (dims.parity(a) && dims.parity(b)) ? -q : q;
            R.set(static_cast<long long>(b) * d + a, in, swap);
        }
    ClosurePair cl = compute_p_matrix(dims, R);
    return HeckeSymmetry{dims, std::move(R), q2, std::move(cl.P), std::move(cl.C)};
}

ClosurePair compute_p_matrix(const SuperDim& dims, const LinMap<ExactField>& R) {
    const int d = dims.d();
    const long long dd = static_cast<long long>(d) * d;
    if (R.rows != dd || R.ncols() != dd) throw Error("compute_p_matrix: R has wrong shape");
    // unknowns x_{(m,n)} = P^{im}_{jn} for each fixed (i,j); the coefficient
    // matrix A[(k,l),(m,n)] = R^{nk}_{ml} is shared by all right-hand sides
    std::vector<std::vector<Scalar>> a(static_cast<size_t>(dd),
                                       std::vector<Scalar>(static_cast<size_t>(dd)));
    std::vector<std::vector<Scalar>> rhs(static_cast<size_t>(dd),
                                         std::vector<Scalar>(static_cast<size_t>(dd)));
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
            for (int m = 0; m < d; ++m)
                for (int n = 0; n < d; ++n)
                    a[static_cast<size_t>(k * d + l)][static_cast<size_t>(m * d + n)] =
                        R.get(static_cast<long long>(n) * d + k, static_cast<long long>(m) * d + l);
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    rhs[static_cast<size_t>(k * d + l)][static_cast<size_t>(i * d + j)] =
                        (i == l && k == j) ? Scalar(1) : Scalar(0);
    std::vector<std::vector<Scalar>> x = dense_solve(std::move(a), std::move(rhs),
                                                     "compute_p_matrix");
    ClosurePair out;
    out.P = LinMap<ExactField>(dd, dd);
    out.C = LinMap<ExactField>(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            for (int m = 0; m < d; ++m)
                for (int n = 0; n < d; ++n)
                    out.P.set(static_cast<long long>(i) * d + m, static_cast<long long>(j) * d + n,
                              x[static_cast<size_t>(m * d + n)][static_cast<size_t>(i * d + j)]);
            Scalar trace;
            for (int l = 0; l < d; ++l)
                trace += out.P.get(static_cast<long long>(i) * d + l,
                                   static_cast<long long>(j) * d + l);
            out.C.set(i, j, trace);
        }
    return out;
}

std::optional<Scalar> detect_hecke_param(const LinMap<ExactField>& R) {
    LinMap<ExactField> num = mat_add(mat_mul(R, R), R);                           // R^2 + R
    LinMap<ExactField> den = mat_add(R, LinMap<ExactField>::identity(R.rows));    // R + 1
    if (mat_is_zero(num)) return Scalar(0);
    Scalar p;
    bool found = false;
    for (long long j = 0; j < num.ncols() && !found; ++j)
        for (const auto& [i, v] : num.cols[static_cast<size_t>(j)]) {
            Scalar b = den.get(i, j);
            if (b.is_zero()) return std::nullopt;  // p (R+1) cannot reproduce this entry
            p = v / b;
            found = true;
            break;
        }
    if (!found) return std::nullopt;
    if (!mat_is_zero(mat_sub(num, mat_scale(den, p)))) return std::nullopt;
    return p;
}

HeckeReport check_hecke_symmetry(const HeckeSymmetry& H) {
    HeckeReport rep;
    const SuperDim& dims = H.dims;
    const int d = dims.d();
    BasisIndex two = tensor_basis(dims, 2, 0);
    BasisIndex three = tensor_basis(dims, 3, 0);

    // parity of every nonzero entry
    for (long long j = 0; j < H.R.ncols() && rep.even.ok; ++j)
        for (const auto& [i, v] : H.R.cols[static_cast<size_t>(j)]) {
            if (((two.parity(i) + two.parity(j)) & 1) == 0) continue;
            rep.even.ok = false;
            rep.even.witness = "parity-odd entry " + entry_witness(two, i, j, v);
            break;
        }

    // Hecke relation with the detected parameter
    std::optional<Scalar> p = detect_hecke_param(H.R);
    if (p) {
        rep.param_detected = true;
        rep.param = *p;
    } else {
        rep.hecke.ok = false;
        rep.hecke.witness = "no scalar p satisfies R^2 + R = p (R + 1)";
    }

    // Yang-Baxter on three legs
    LinMap<ExactField> r1 = mat_kron(H.R, LinMap<ExactField>::identity(d));
    LinMap<ExactField> r2 = mat_kron(LinMap<ExactField>::identity(d), H.R);
    LinMap<ExactField> diff =
        mat_sub(mat_mul(r1, mat_mul(r2, r1)), mat_mul(r2, mat_mul(r1, r2)));
    if (auto bad = first_nonzero(diff)) {
        rep.yang_baxter.ok = false;
        rep.yang_baxter.witness =
            "YBE residual " + entry_witness(three, bad->first, bad->second,
                                            diff.get(bad->first, bad->second));
    }

    // closure: solve afresh so the verdict is about R, not about a stale P
    try {
        ClosurePair cl = compute_p_matrix(dims, H.R);
        rep.P = cl.P;
        rep.C = cl.C;
        for (int i = 0; i < d && rep.closure.ok; ++i)
            for (int j = 0; j < d && rep.closure.ok; ++j)
                for (int k = 0; k < d && rep.closure.ok; ++k)
                    for (int l = 0; l < d; ++l) {
                        Scalar sum;
                        for (int m = 0; m < d; ++m)
                            for (int n = 0; n < d; ++n)
                                sum += cl.P.get(static_cast<long long>(i) * d + m,
                                                static_cast<long long>(j) * d + n) *
                                       H.R.get(static_cast<long long>(n) * d + k,
                                               static_cast<long long>(m) * d + l);
                        Scalar want = (i == l && k == j) ? Scalar(1) : Scalar(0);
                        if (sum == want) continue;
                        rep.closure.ok = false;
                        std::ostringstream os;
                        os << "contraction (i,j,k,l)=(" << i + 1 << "," << j + 1 << "," << k + 1
                           << "," << l + 1 << ") = " << (sum - want).str() << " off identity";
                        rep.closure.witness = os.str();
                        break;
                    }
        if (rep.closure.ok && !(H.P == cl.P)) {
            rep.closure.ok = false;
            rep.closure.witness = "stored P differs from the solved closure matrix";
        }
    } catch (const Error& e) {
        rep.closure.ok = false;
        rep.closure.witness = e.what();
    }
    return rep;
}

bool word_is_reduced(int n, const std::vector<int>& word) {
    std::vector<int> arr(static_cast<size_t>(n));
    std::iota(arr.begin(), arr.end(), 0);
    for (int a : word) {
        if (a < 1 || a >= n) throw Error("word letter out of range");
        std::swap(arr[static_cast<size_t>(a - 1)], arr[static_cast<size_t>(a)]);
    }
    size_t inv = 0;
    for (size_t i = 0; i < arr.size(); ++i)
        for (size_t j = i + 1; j < arr.size(); ++j)
            if (arr[i] > arr[j]) ++inv;
    return inv == word.size();
}

std::vector<int> reduced_word_of(const std::vector<int>& one_line) {
    std::vector<int> arr = one_line;
    {
        std::vector<int> sorted = arr;
        std::sort(sorted.begin(), sorted.end());
        for (size_t i = 0; i < sorted.size(); ++i)
            if (sorted[i] != static_cast<int>(i))
                throw Error("reduced_word_of: not a permutation of 0..n-1");
    }
    // right multiplication by s_i swaps positions i-1, i; recording the
    // descent-only bubble sort and reversing yields a reduced word
    std::vector<int> swaps;
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t i = 1; i < arr.size(); ++i)
            if (arr[i - 1] > arr[i]) {
                std::swap(arr[i - 1], arr[i]);
                swaps.push_back(static_cast<int>(i));
                moved = true;
            }
    }
    std::reverse(swaps.begin(), swaps.end());
    return swaps;
}

LinMap<ExactField> hecke_action(const HeckeSymmetry& H, int n, const std::vector<int>& word) {
    if (n < 1 || n > HeckeEngine<ExactField>::hard_cap)
        throw BudgetError("hecke_action: leg count outside 1..8");
    for (int a : word)
        if (a < 1 || a >= n) throw Error("hecke_action: generator index out of range");
    if (!word_is_reduced(n, word)) throw Error("hecke_action: word is not reduced");
    const int d = H.dims.d();
    LinMap<ExactField> out = LinMap<ExactField>::identity(pow_ll(d, n));
    for (int a : word) {
        LinMap<ExactField> placed = mat_kron(
            LinMap<ExactField>::identity(pow_ll(d, a - 1)),
            mat_kron(H.R, LinMap<ExactField>::identity(pow_ll(d, n - a - 1))));
        out = mat_mul(out, placed);
    }
    return out;
}

LinMap<ExactField> symmetrizer(const HeckeSymmetry& H, int n, SymKind kind) {
    if (n < 0 || n > HeckeEngine<ExactField>::hard_cap)
        throw BudgetError("symmetrizer: degree outside 0..8");
    HeckeEngine<ExactField> eng(H, ExactField{}, HeckeEngine<ExactField>::hard_cap);
    return eng.sym_matrix(n, kind);
}

std::vector<long long> poincare_dims(const HeckeSymmetry& H, int N, const EvalPoint& at) {
    if (N < 0) throw Error("poincare_dims: negative window");
    if (N > 6) throw BudgetError("poincare_dims: window above n = 6");
    HeckeEngine<EvalField> eng(H, EvalField(at), 6);
    std::vector<long long> out;
    out.push_back(1);
    for (int n = 1; n <= N; ++n) out.push_back(eng.image_dim(n, SymKind::ext));
    return out;
}

Subspace<ExactField> young_module(const HeckeSymmetry& H, const std::vector<int>& shape) {
    HeckeEngine<ExactField> eng(H, ExactField{}, 6);
    return young_module(eng, shape);
}

HeckeSymmetry load_hecke_json(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("hecke JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("r") || !doc.contains("s") || !doc.contains("entries"))
        throw ParseError("hecke JSON: need fields r, s, entries");
    if (!doc["r"].is_number_integer() || !doc["s"].is_number_integer() ||
        !doc["entries"].is_array())
        throw ParseError("hecke JSON: malformed fields");
    int r = doc["r"].get<int>();
    int s = doc["s"].get<int>();
    if (r < 0 || s < 0 || r + s < 1) throw ParseError("hecke JSON: bad birank");
    SuperDim dims{r, s};
    const int d = dims.d();
    LinMap<ExactField> R(static_cast<long long>(d) * d, static_cast<long long>(d) * d);
    for (const auto& e : doc["entries"]) {
        if (!e.is_object()) throw ParseError("hecke JSON: entry is not an object");
        for (const char* key : {"i", "j", "k", "l"})
            if (!e.contains(key) || !e[key].is_number_integer())
                throw ParseError(std::string("hecke JSON: entry missing index ") + key);
        int i = e["i"].get<int>(), j = e["j"].get<int>();
        int k = e["k"].get<int>(), l = e["l"].get<int>();
        for (int idx : {i, j, k, l})
            if (idx < 1 || idx > d) throw ParseError("hecke JSON: letter index outside 1..d");
        if (!e.contains("value")) throw ParseError("hecke JSON: entry missing value");
        Scalar v;
        if (e["value"].is_number_integer())
            v = Scalar(e["value"].get<long>());
        else if (e["value"].is_string())
            v = Scalar::parse(e["value"].get<std::string>());
        else
            throw ParseError("hecke JSON: value must be an integer or a scalar string");
        // upper indices (i,j) are output letters, lower (k,l) input letters
        R.set(static_cast<long long>(i - 1) * d + (j - 1),
              static_cast<long long>(k - 1) * d + (l - 1), std::move(v));
    }
    std::optional<Scalar> p = detect_hecke_param(R);
    if (!p) throw Error("hecke JSON: operator satisfies no Hecke relation");
    ClosurePair cl = compute_p_matrix(dims, R);
    return HeckeSymmetry{dims, std::move(R), *p, std::move(cl.P), std::move(cl.C)};
}

}  // namespace qgl
