#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "qgl/charformula.hpp"
#include "qgl/hecke.hpp"

using namespace qgl;

namespace {

const HeckeSymmetry& std31() {
    static HeckeSymmetry h = build_standard_r(3, 1);
    return h;
}

const Scalar g = Scalar::generator();

LaurentChar char_of(const Subspace<ExactField>& w, const BasisIndex& basis) {
    LaurentChar out;
    for (const auto& [mu, dim] : weight_components(w, basis))
        if (dim) out = out + LaurentChar::monomial(mu[0], mu[1], mu[2], mu[3], dim);
    return out;
}

}  // namespace

TEST_SUITE("hecke") {

TEST_CASE("standard R entry table") {
    const HeckeSymmetry& h = std31();
    CHECK(h.dims.d() == 4);
    CHECK(h.heckeParam == g * g);
    CHECK(h.R.nnz() == 22);
    CHECK(h.R.get(0, 0) == g * g);           // R^{11}_{11}
    CHECK(h.R.get(15, 15) == Scalar(-1));    // R^{44}_{44}
    CHECK(h.R.get(1, 1) == g * g - 1);       // R^{12}_{12}
    CHECK(h.R.get(4, 1) == g);               // R^{21}_{12}
    CHECK(h.R.get(3, 12) == g);              // R^{14}_{41}
    CHECK(h.R.get(12, 3) == g);              // R^{41}_{14}
    CHECK(h.R.get(4, 4) == Scalar(0));       // no diagonal term for i > j
}

TEST_CASE("q = 1 degenerates to the super permutation") {
    HeckeSymmetry h = build_standard_r(3, 1, Scalar(1));
    CHECK(h.heckeParam == Scalar(1));
    const int d = 4;
    LinMap<ExactField> expect(16, 16);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            Scalar sign((h.dims.parity(a) && h.dims.parity(b)) ? -1 : 1);
            expect.set(b * d + a, a * d + b, sign);
        }
    CHECK(h.R == expect);
}

TEST_CASE("axiom report on the bundled symmetries") {
    HeckeReport rep = check_hecke_symmetry(std31());
    CHECK(rep.all_ok());
    CHECK(rep.param_detected);
    CHECK(rep.param == g * g);
    CHECK(rep.P == std31().P);
    CHECK(rep.yang_baxter.witness.empty());

    HeckeReport classical = check_hecke_symmetry(build_standard_r(3, 1, Scalar(1)));
    CHECK(classical.all_ok());
    CHECK(classical.param == Scalar(1));

    HeckeReport toy = check_hecke_symmetry(build_standard_r(1, 0));
    CHECK(toy.all_ok());
    CHECK(toy.param == g * g);
}

TEST_CASE("perturbed operators fail with witnesses") {
    HeckeSymmetry bad = std31();
    bad.R.set(1, 1, g * g);  // R^{12}_{12}: parity-even slot, wrong value
    HeckeReport rep = check_hecke_symmetry(bad);
    CHECK(rep.even.ok);
    CHECK(!rep.yang_baxter.ok);
    CHECK(!rep.yang_baxter.witness.empty());
    CHECK(!rep.all_ok());

    HeckeSymmetry odd = std31();
    odd.R.set(0, 3, Scalar(1));  // x1.x1 <- x1.x4 mixes parities
    HeckeReport rep2 = check_hecke_symmetry(odd);
    CHECK(!rep2.even.ok);
    CHECK(rep2.even.witness.find("parity") != std::string::npos);

    HeckeSymmetry stale = std31();
    stale.P.set(0, 0, Scalar(7));
    HeckeReport rep3 = check_hecke_symmetry(stale);
    CHECK(!rep3.closure.ok);
    CHECK(rep3.closure.witness.find("stored P") != std::string::npos);
}

TEST_CASE("closure matrices") {
    // 1-dimensional toy: R = (q^2), P must be its reciprocal
    HeckeSymmetry toy = build_standard_r(1, 0);
    CHECK(toy.P.get(0, 0) == (g * g).inv());
    CHECK(toy.C.get(0, 0) == (g * g).inv());
    // partial-trace identity tr C = -[-(r-s)] at the Hecke parameter
    CHECK(toy.C.trace() == Scalar(0) - q_int_at(toy.heckeParam, -1));

    const HeckeSymmetry& h = std31();
    CHECK(h.C.nnz() == 4);  // diagonal
    CHECK(h.C.trace() == q_int_at(h.heckeParam, 0) - q_int_at(h.heckeParam, -2));

    // R = identity on one letter is closable, on several letters it is not
    ClosurePair one = compute_p_matrix(SuperDim{1, 0}, LinMap<ExactField>::identity(1));
    CHECK(one.P.get(0, 0) == Scalar(1));
    CHECK_THROWS_AS(compute_p_matrix(SuperDim{3, 1}, LinMap<ExactField>::identity(16)), Error);
}

TEST_CASE("hecke_action words") {
    const HeckeSymmetry& h = std31();
    CHECK(hecke_action(h, 2, {}) == LinMap<ExactField>::identity(16));
    CHECK(hecke_action(h, 3, {1, 2, 1}) == hecke_action(h, 3, {2, 1, 2}));

    LinMap<ExactField> r = hecke_action(h, 2, {1});
    Scalar p = h.heckeParam;
    LinMap<ExactField> quad = mat_add(mat_scale(r, p - 1),
                                      mat_scale(LinMap<ExactField>::identity(16), p));
    CHECK(mat_mul(r, r) == quad);

    CHECK_THROWS_AS(hecke_action(h, 3, {1, 1}), Error);       // not reduced
    CHECK_THROWS_AS(hecke_action(h, 3, {2, 1, 2, 1}), Error); // not reduced either
    CHECK_THROWS_AS(hecke_action(h, 3, {3}), Error);          // generator range
    CHECK_THROWS_AS(hecke_action(h, 9, {}), BudgetError);

    CHECK(word_is_reduced(4, {1, 3, 2}));
    CHECK(!word_is_reduced(4, {1, 3, 1, 3}));
    CHECK(reduced_word_of({0, 2, 1}) == std::vector<int>{2});
    CHECK(reduced_word_of({1, 0, 2}) == std::vector<int>{1});
    CHECK_THROWS_AS(reduced_word_of({0, 0, 1}), Error);
}

TEST_CASE("degree-two symmetrizers in closed form") {
    const HeckeSymmetry& h = std31();
    Scalar p = h.heckeParam;
    LinMap<ExactField> id16 = LinMap<ExactField>::identity(16);
    Scalar inv2 = q_int_at(p, 2).inv();
    LinMap<ExactField> x2 = symmetrizer(h, 2, SymKind::sym);
    LinMap<ExactField> y2 = symmetrizer(h, 2, SymKind::ext);
    CHECK(x2 == mat_scale(mat_add(h.R, id16), inv2));
    CHECK(y2 == mat_scale(mat_sub(mat_scale(id16, p), h.R), inv2));
    CHECK(mat_add(x2, y2) == id16);
    CHECK(mat_is_zero(mat_mul(x2, y2)));
    CHECK(symmetrizer(h, 0, SymKind::sym) == LinMap<ExactField>::identity(1));
    CHECK(symmetrizer(h, 1, SymKind::ext) == LinMap<ExactField>::identity(4));
}

TEST_CASE("symmetrizer algebra up to four legs") {
    const HeckeSymmetry& h = std31();
    Scalar p = h.heckeParam;
    HeckeEngine<ExactField> eng(h, ExactField{});
    for (int n = 2; n <= 4; ++n) {
        CAPTURE(n);
        const LinMap<ExactField>& x = eng.sym_matrix(n, SymKind::sym);
        const LinMap<ExactField>& y = eng.sym_matrix(n, SymKind::ext);
        CHECK(mat_mul(x, x) == x);
        CHECK(mat_mul(y, y) == y);
        CHECK(mat_is_zero(mat_mul(x, y)));
        CHECK(mat_is_zero(mat_mul(y, x)));
        for (int i = 1; i < n; ++i) {
            CAPTURE(i);
            LinMap<ExactField> ri = hecke_action(h, n, {i});
            CHECK(mat_mul(x, ri) == mat_scale(x, p));
            CHECK(mat_mul(ri, x) == mat_scale(x, p));
            CHECK(mat_mul(y, ri) == mat_scale(y, Scalar(-1)));
            CHECK(mat_mul(ri, y) == mat_scale(y, Scalar(-1)));
        }
    }
}

TEST_CASE("kernel of X_n is the span of the (R_i - p) images") {
    const HeckeSymmetry& h = std31();
    Scalar p = h.heckeParam;
    HeckeEngine<ExactField> eng(h, ExactField{});
    for (int n = 2; n <= 4; ++n) {
        CAPTURE(n);
        auto [img, ker] = image_kernel(eng.sym_matrix(n, SymKind::sym));
        Subspace<ExactField> sum = Subspace<ExactField>::zero(ker.ambient);
        for (int i = 1; i < n; ++i) {
            LinMap<ExactField> shifted = mat_sub(
                hecke_action(h, n, {i}),
                mat_scale(LinMap<ExactField>::identity(ker.ambient), p));
            sum = subspace_sum(sum, image_kernel(shifted).first);
        }
        CHECK(subspace_equal(ker, sum));
        CHECK(img.dim() + ker.dim() == ker.ambient);
    }
}

TEST_CASE("column-wise application agrees with the matrices") {
    const HeckeSymmetry& h = std31();
    HeckeEngine<ExactField> full(h, ExactField{});      // big enough cache
    HeckeEngine<ExactField> tight(h, ExactField{}, 2);  // forces the coset path
    BasisIndex ambient = tensor_basis(h.dims, 4, 0);
    for (SymKind kind : {SymKind::sym, SymKind::ext}) {
        const LinMap<ExactField>& m = full.sym_matrix(4, kind);
        LinMap<ExactField> mt = m.transpose();
        std::vector<SpCol<ExactField>> probes = {
            {{0, Scalar(1)}},
            {{37, Scalar(1)}},
            {{255, Scalar(1)}},
            {{5, Scalar(2)}, {98, g}, {200, Scalar(1)}},
        };
        for (const auto& v : probes) {
            CHECK(tight.apply_sym(v, ambient, 0, 4, kind) == mat_apply(m, v));
            CHECK(tight.apply_sym(v, ambient, 0, 4, kind, true) == mat_apply(mt, v));
        }
    }
}

TEST_CASE("dimension ladders at a generic point") {
    EvalPoint at(mpq_class(7, 5));
    HeckeEngine<EvalField> eng(std31(), EvalField(at));
    std::vector<long long> sym_dims, ext_dims;
    for (int n = 0; n <= 6; ++n) {
        sym_dims.push_back(eng.image_dim(n, SymKind::sym));
        ext_dims.push_back(eng.image_dim(n, SymKind::ext));
    }
    for (int n = 0; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(sym_dims[n] == (n + 1) * (n + 1));
        CHECK(sym_dims[n] == sym_char(n).dim());  // independent tableau-backed oracle
        CHECK(ext_dims[n] == ext_char(n).dim());
        if (n >= 1) CHECK(sym_dims[n] - sym_dims[n - 1] == 2 * n + 1);
    }
    CHECK(ext_dims == std::vector<long long>{1, 4, 7, 8, 8, 8, 8});
    CHECK(poincare_dims(std31(), 6, at) == std::vector<long long>{1, 4, 7, 8, 8, 8, 8});
    CHECK_THROWS_AS(poincare_dims(std31(), 7, at), BudgetError);
}

TEST_CASE("toy birank (1,0) ladder") {
    HeckeSymmetry toy = build_standard_r(1, 0);
    EvalPoint at(mpq_class(7, 5));
    CHECK(poincare_dims(toy, 4, at) == std::vector<long long>{1, 1, 0, 0, 0});
    HeckeEngine<EvalField> eng(toy, EvalField(at));
    for (int n = 0; n <= 4; ++n) CHECK(eng.image_dim(n, SymKind::sym) == 1);
}

TEST_CASE("weight blocks of the degree-two symmetric space") {
    HeckeEngine<ExactField> eng(std31(), ExactField{});
    const Subspace<ExactField>& s2 = eng.sym_image(2, SymKind::sym);
    CHECK(s2.dim() == 9);
    BasisIndex basis = tensor_basis(std31().dims, 2, 0);
    auto blocks = weight_components(s2, basis);
    CHECK(blocks.at(Weight{0, 0, 0, 2}) == 0);  // no square of the odd letter
    CHECK(blocks.at(Weight{2, 0, 0, 0}) == 1);
    CHECK(blocks.at(Weight{1, 1, 0, 0}) == 1);
    CHECK(blocks.at(Weight{1, 0, 0, 1}) == 1);
    long long total = 0;
    for (const auto& [mu, dim] : blocks) total += dim;
    CHECK(total == 9);
}

TEST_CASE("young modules: degenerate and zero shapes") {
    HeckeEngine<ExactField> eng(std31(), ExactField{});
    for (int n = 1; n <= 3; ++n) {
        CAPTURE(n);
        CHECK(subspace_equal(young_module(eng, {n}), eng.sym_image(n, SymKind::sym)));
        CHECK(subspace_equal(young_module(eng, std::vector<int>(n, 1)),
                              eng.sym_image(n, SymKind::ext)));
    }
    CHECK(young_module(eng, {}).dim() == 1);
    CHECK(young_module(eng, {2, 2, 2, 2}).dim() == 0);  // lambda_4 = 2 > s
    CHECK_THROWS_AS(young_module(eng, {3, 3, 3}), BudgetError);
    CHECK_THROWS_AS(young_module(eng, {1, 2}), Error);
    CHECK_THROWS_AS(young_module(eng, {-1}), Error);
}

TEST_CASE("young module (2,1) has dimension 20") {
    CHECK(young_module(std31(), {2, 1}).dim() == 20);
}

TEST_CASE("young module characters match the tableau oracle") {
    HeckeEngine<ExactField> eng(std31(), ExactField{});
    for (int n = 1; n <= 5; ++n)
        for (const auto& shape : qgl_test::partitions_of(n)) {
            CAPTURE(n);
            CAPTURE(shape.size());
            Subspace<ExactField> m = young_module(eng, shape);
            BasisIndex basis = tensor_basis(std31().dims, n, 0);
            LaurentChar lhs = char_of(m, basis);
            LaurentChar rhs = qgl_test::hook_tableau_char(shape);
            CHECK(char_equal(lhs, rhs).equal);
            CHECK(m.dim() == rhs.dim());
        }
}

TEST_CASE("json round trip and rejection") {
    const HeckeSymmetry& h = std31();
    const int d = h.dims.d();
    nlohmann::json doc;
    doc["r"] = h.dims.r;
    doc["s"] = h.dims.s;
    doc["entries"] = nlohmann::json::array();
    for (long long col = 0; col < h.R.ncols(); ++col)
        for (const auto& [row, v] : h.R.cols[static_cast<size_t>(col)]) {
            nlohmann::json e;
            e["i"] = static_cast<int>(row / d) + 1;
            e["j"] = static_cast<int>(row % d) + 1;
            e["k"] = static_cast<int>(col / d) + 1;
            e["l"] = static_cast<int>(col % d) + 1;
            e["value"] = v.str();
            doc["entries"].push_back(e);
        }
    HeckeSymmetry back = load_hecke_json(doc.dump());
    CHECK(back.R == h.R);
    CHECK(back.heckeParam == h.heckeParam);
    CHECK(back.P == h.P);

    CHECK_THROWS_AS(load_hecke_json("[1, 2"), ParseError);
    CHECK_THROWS_AS(load_hecke_json("{\"r\": 3}"), ParseError);
    CHECK_THROWS_AS(load_hecke_json(
                        "{\"r\":1,\"s\":0,\"entries\":[{\"i\":1,\"j\":1,\"k\":1,\"l\":2,"
                        "\"value\":1}]}"),
                    ParseError);
    // diagonal with three distinct eigenvalues admits no Hecke parameter
    CHECK_THROWS_AS(load_hecke_json(
                        "{\"r\":2,\"s\":0,\"entries\":["
                        "{\"i\":1,\"j\":1,\"k\":1,\"l\":1,\"value\":1},"
                        "{\"i\":1,\"j\":2,\"k\":1,\"l\":2,\"value\":2},"
                        "{\"i\":2,\"j\":1,\"k\":2,\"l\":1,\"value\":3},"
                        "{\"i\":2,\"j\":2,\"k\":2,\"l\":2,\"value\":4}]}"),
                    Error);
}

}  // TEST_SUITE
