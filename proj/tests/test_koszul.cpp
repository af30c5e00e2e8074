#include <string>
#include <vector>

#include "doctest.h"
#include "qgl/charformula.hpp"
#include "qgl/hecke.hpp"
#include "qgl/koszul.hpp"
#include "qgl/scalar.hpp"
#include "qgl/tensorspace.hpp"

using qgl::BasisIndex;
using qgl::EvalField;
using qgl::EvalPoint;
using qgl::ExactField;
using qgl::KoszulContext;
using qgl::KoszulKind;
using qgl::LaurentChar;
using qgl::LinMap;
using qgl::Scalar;
using qgl::SpCol;
using qgl::SymKind;

namespace {

const qgl::HeckeSymmetry& std31() {
    static qgl::HeckeSymmetry H = qgl::build_standard_r(3, 1);
    return H;
}

KoszulContext<ExactField>& ctx() {
    static KoszulContext<ExactField> C(std31());
    return C;
}

KoszulContext<EvalField>& ectx() {
    static KoszulContext<EvalField> C(std31(), EvalField(EvalPoint(mpq_class(7, 5))));
    return C;
}

Scalar bracket(long n) { return qgl::q_int_at(std31().heckeParam, n); }

}  // namespace

TEST_SUITE("koszul") {

TEST_CASE("the raising map starts from the invariant element") {
    auto& C = ctx();
    SpCol<ExactField> unit{{0, Scalar(1)}};
    SpCol<ExactField> v = C.apply_d(unit, 0, 0);
    // sum_i x_i (x) xi^i: rows (i, i) of the 4 x 4 letter grid, coefficient 1
    REQUIRE(v.size() == 4);
    BasisIndex a = C.amb(1, 1);
    for (int i = 0; i < 4; ++i) {
        CHECK(v[static_cast<size_t>(i)].first == i * 4 + i);
        CHECK(v[static_cast<size_t>(i)].second == Scalar(1));
        CHECK(a.weight(v[static_cast<size_t>(i)].first) == qgl::Weight({0, 0, 0, 0}));
    }
    CHECK(qgl::contains<ExactField>(C.term_K(1, 1), v));
    // maps into vanished terms are zero
    CHECK(C.apply_del(unit, 0, 0).empty());
    CHECK(C.apply_d(v, -1, -1).empty());
}

TEST_CASE("the contraction of the invariant element is the closure trace") {
    auto& C = ctx();
    SpCol<ExactField> unit{{0, Scalar(1)}};
    SpCol<ExactField> w = C.apply_del(C.apply_d(unit, 0, 0), 1, 1);
    REQUIRE(w.size() == 1);
    CHECK(w[0].first == 0);
    CHECK(w[0].second == bracket(0) - bracket(-2));
}

TEST_CASE("the bracket sign of the contraction identity is the flipped one") {
    CHECK(ctx().ct3_sign() == -1);
    CHECK(ectx().ct3_sign() == -1);
    // same outcome on the birank (1,0) toy symmetry
    qgl::HeckeSymmetry toy = qgl::build_standard_r(1, 0);
    KoszulContext<ExactField> T(toy);
    CHECK(T.ct3_sign() == -1);
}

TEST_CASE("contraction identity on the exact window") {
    auto& C = ctx();
    for (int k = 0; k <= 4; ++k)
        for (int l = 0; k + l <= 4; ++l) {
            qgl::IdentityReport rep = verify_ct3(C, k, l);
            INFO("(k,l) = (", k, ",", l, ") ", rep.witness);
            CHECK(rep.residual_zero);
            CHECK(rep.identity.find("[s-r]") != std::string::npos);
        }
}

TEST_CASE("exchange identity on the exact window") {
    auto& C = ctx();
    for (int p = 0; p <= 5; ++p)
        for (int r = 0; p + r <= 5; ++r) {
            qgl::IdentityReport rep = verify_ct60(C, p, r);
            INFO("(p,r) = (", p, ",", r, ") ", rep.witness);
            CHECK(rep.residual_zero);
        }
}

TEST_CASE("all four maps preserve weights") {
    auto& C = ctx();
    BasisIndex kdom = C.amb(1, 1);
    for (const auto& u : C.term_K(1, 1).span) {
        qgl::Weight mu = kdom.weight(u.front().first);
        SpCol<ExactField> du = C.apply_d(u, 1, 1);
        for (const auto& [row, val] : du) CHECK(C.amb(2, 2).weight(row) == mu);
        SpCol<ExactField> su = C.apply_del(u, 1, 1);
        for (const auto& [row, val] : su) CHECK(C.amb(0, 0).weight(row) == mu);
    }
    BasisIndex ldom = C.amb(2, 0);
    for (const auto& u : C.term_L(1, 1).span) {
        qgl::Weight mu = ldom.weight(u.front().first);
        SpCol<ExactField> pu = C.apply_P(u, 1, 1);
        for (const auto& [row, val] : pu) CHECK(ldom.weight(row) == mu);
        SpCol<ExactField> qu = C.apply_Q(u, 1, 1);
        for (const auto& [row, val] : qu) CHECK(ldom.weight(row) == mu);
    }
}

TEST_CASE("both differentials square to zero on the exact window") {
    auto& C = ctx();
    for (int k = 0; k <= 3; ++k)
        for (int l = 0; k + l <= 3; ++l) {
            qgl::IdentityReport rep = verify_d2(C, k, l);
            INFO("(k,l) = (", k, ",", l, ") ", rep.witness);
            CHECK(rep.residual_zero);
        }
    CHECK(verify_d2(C, 2, 2).residual_zero);
    CHECK(verify_del2(C, 2, 2).residual_zero);
}

TEST_CASE("degree five squares to zero at a generic point") {
    auto& E = ectx();
    CHECK(verify_d2(E, 3, 2).residual_zero);
    CHECK(verify_d2(E, 2, 3).residual_zero);
    CHECK(verify_del2(E, 3, 2).residual_zero);
    CHECK(verify_del2(E, 2, 3).residual_zero);
}

TEST_CASE("row and column maps of the double complex commute") {
    auto& C = ctx();
    for (int i = 0; i <= 3; ++i)
        for (int k = 1; i + k <= 3; ++k)
            for (int l = 0; i + k + l <= 3; ++l) {
                qgl::IdentityReport rep = verify_square(C, i, k, l);
                INFO("(i,k,l) = (", i, ",", k, ",", l, ") ", rep.witness);
                CHECK(rep.residual_zero);
            }
    CHECK(verify_square(ectx(), 1, 2, 2).residual_zero);
}

TEST_CASE("the flagged complex has one homology class, the berezinian") {
    auto& C = ctx();
    std::vector<qgl::HomologyEntry> hom = homology_K(C, 2, 6);
    REQUIRE(hom.size() == 3);
    CHECK(hom[0].k == 2);
    CHECK(hom[0].dim == 0);
    CHECK(hom[1].k == 3);
    CHECK(hom[1].l == 1);
    CHECK(hom[1].dim == 1);
    CHECK(hom[1].ch == LaurentChar::monomial(1, 1, 1, -1));
    CHECK(hom[1].ch == qgl::berezinian_char());
    CHECK(hom[2].k == 4);
    CHECK(hom[2].dim == 0);
}

TEST_CASE("the mirror index convention is exact") {
    auto& C = ctx();
    for (const auto& e : homology_K(C, -2, 6)) {
        INFO("(k,l) = (", e.k, ",", e.l, ")");
        CHECK(e.dim == 0);
    }
}

TEST_CASE("neighbouring complexes are exact on small windows") {
    auto& C = ctx();
    for (int a : {0, 1, -1, 3, -3})
        for (const auto& e : homology_K(C, a, 4)) {
            INFO("a = ", a, ", (k,l) = (", e.k, ",", e.l, ")");
            CHECK(e.dim == 0);
        }
}

TEST_CASE("term splittings recover both images") {
    auto& C = ctx();

    qgl::SplitReport<ExactField> triv = image_splitting(C, 0, 0);
    CHECK(triv.ok);
    CHECK(triv.lower.dim() == 0);
    CHECK(triv.upper.dim() == 1);

    qgl::SplitReport<ExactField> mid = image_splitting(C, 1, 1);
    CHECK(mid.ok);
    CHECK(mid.lower.dim() == 1);
    CHECK(mid.upper.dim() == 15);
    CHECK(mid.lower.dim() + mid.upper.dim() == C.term_dim_K(1, 1));
    CHECK(mid.ch_lower + mid.ch_upper == qgl::subspace_char<ExactField>(C.term_K(1, 1), C.amb(1, 1)));

    // Lambda_3 embeds via d: its image has the full exterior cube character
    qgl::SplitReport<ExactField> top = image_splitting(C, 3, 0);
    CHECK(top.ok);
    CHECK(top.lower.dim() == 0);
    CHECK(top.upper.dim() == 8);
    LaurentChar cube = (LaurentChar::var(0) + LaurentChar::var(3)) *
                       (LaurentChar::var(1) + LaurentChar::var(3)) *
                       (LaurentChar::var(2) + LaurentChar::var(3));
    CHECK(top.ch_upper == cube);
    CHECK(qgl::subspace_char<ExactField>(C.image_d(3, 0), C.amb(4, 1)) == cube);

    // where the contraction identity degenerates there is no splitting
    CHECK_THROWS_AS(image_splitting(C, 2, 0), qgl::Error);
    CHECK_THROWS_AS(image_splitting(C, 3, 1), qgl::Error);
}

TEST_CASE("the first interesting image is the exterior square") {
    auto& C = ctx();
    const auto& im = C.image_d(2, 0);
    CHECK(im.dim() == 7);
    LaurentChar ch = qgl::subspace_char<ExactField>(im, C.amb(3, 1));
    CHECK(ch == qgl::ext_char(2));
    CHECK(ch == qgl::module_char_hook(1, 1, 0));
}

TEST_CASE("term-basis matrices compose like the pipelines") {
    auto& C = ctx();
    LinMap<ExactField> d00 = C.matrix(KoszulKind::d, 0, 0);
    CHECK(d00.rows == 16);
    CHECK(d00.ncols() == 1);
    LinMap<ExactField> s11 = C.matrix(KoszulKind::del, 1, 1);
    LinMap<ExactField> loop = mat_mul(s11, d00);
    CHECK(loop.get(0, 0) == bracket(0) - bracket(-2));

    // one-step exchange maps on single legs are identities
    CHECK(C.matrix(KoszulKind::P, 1, 0) == LinMap<ExactField>::identity(4));
    CHECK(C.matrix(KoszulKind::Q, 0, 1) == LinMap<ExactField>::identity(4));
    for (int r = 2; r <= 3; ++r) {
        LinMap<ExactField> pq =
            mat_mul(C.matrix(KoszulKind::P, 1, r - 1), C.matrix(KoszulKind::Q, 0, r));
        CHECK(pq == LinMap<ExactField>::identity(C.term_dim_L(0, r)));
    }

    LinMap<ExactField> wrapped = qgl::koszul_map(std31(), KoszulKind::d, 0, 0);
    CHECK(wrapped.rows == 16);
    CHECK(wrapped.cols == d00.cols);
}

TEST_CASE("dual projector images have the symmetric dimensions") {
    auto& C = ctx();
    const auto& s2 = C.dual_sym_image(2, SymKind::sym);
    CHECK(s2.dim() == 9);
    SpCol<ExactField> even{{0, Scalar(1)}};   // xi^1 xi^1
    SpCol<ExactField> odd{{15, Scalar(1)}};   // xi^4 xi^4
    CHECK(qgl::contains<ExactField>(s2, even));
    CHECK(!qgl::contains<ExactField>(s2, odd));
    CHECK(C.dual_sym_image(3, SymKind::ext).dim() == 8);
}

TEST_CASE("three factor terms multiply dimensions and characters") {
    auto& C = ctx();
    CHECK(C.term_SKS(1, 1, 1).dim() == 64);
    CHECK(C.term_SKS(2, 1, 0).dim() == 36);
    LaurentChar two = qgl::subspace_char<ExactField>(C.term_SKS(1, 1, 0), C.amb(2, 0));
    CHECK(two == qgl::sym_char(1) * qgl::ext_char(1));
    LaurentChar dual_line = LaurentChar::monomial(-1, 0, 0, 0) + LaurentChar::monomial(0, -1, 0, 0) +
                            LaurentChar::monomial(0, 0, -1, 0) + LaurentChar::monomial(0, 0, 0, -1);
    CHECK(qgl::subspace_char<ExactField>(C.term_K(1, 1), C.amb(1, 1)) ==
          qgl::ext_char(1) * dual_line);
}

}  // TEST_SUITE
