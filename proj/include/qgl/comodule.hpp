#pragma once
// Dominant-weight dispatch: assembling the irreducible comodule I(m,n,p|t)
// for every dominant weight from the pieces the complexes provide (Young
// modules, differential images, the X and Y complements, duals and
// determinant twists), together with formal characters of the results.
//
// Characters are computed in the plain dimension convention: every weight
// space contributes its dimension with coefficient +1, odd or not.  The
// determinant line ("berezinian") has character x1 x2 x3 y^{-1}.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgl/charformula.hpp"
#include "qgl/doublecx.hpp"
#include "qgl/hecke.hpp"
#include "qgl/koszul.hpp"
#include "qgl/tensorspace.hpp"

namespace qgl {

struct WeightLabel {
    int m = 0, n = 0, p = 0;  // dominant: m >= n >= p
    int t = 0;                // determinant twist
    bool dominant() const { return m >= n && n >= p; }
    bool operator==(const WeightLabel&) const = default;
    std::string str() const {
        return "(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(p) + "|" +
               std::to_string(t) + ")";
    }
};

// One node of the construction: a leaf base (young_module, image_splitting,
// extract_X, extract_Y, berezinian) or a wrapper (dual, twist) around a
// child plan.  The twist exponent multiplies the berezinian character in.
struct ConstructionPlan {
    std::string tag;     // I1..I9, "berezinian", or "twist"
    WeightLabel weight;  // the weight this node constructs
    std::string base;    // construction used at this node
    std::vector<int> base_params;
    int dual_count = 0;  // duals applied to the child
    int twist = 0;       // berezinian exponent multiplied onto the base
    std::vector<ConstructionPlan> children;
};

// ------------------------------------------------------ mixed-leg layouts ----

// Tensor block whose legs carry individual variance flags, leftmost leg most
// significant.  The standard layout (all covariant legs first) is the
// special case used by BasisIndex; twisted products concatenate blocks.
struct MixedAmbient {
    SuperDim dims;
    std::vector<bool> is_dual;

    long long size() const {
        long long n = 1;
        for (size_t i = 0; i < is_dual.size(); ++i) n *= dims.d();
        return n;
    }
    Weight weight(long long idx) const {
        Weight w(static_cast<size_t>(dims.d()), 0);
        for (size_t leg = is_dual.size(); leg-- > 0;) {
            int a = static_cast<int>(idx % dims.d());
            idx /= dims.d();
            w[static_cast<size_t>(a)] += is_dual[leg] ? -1 : 1;
        }
        return w;
    }
};

// Character of a weight-graded subspace in a mixed-leg block; throws when
// the space is not graded or the weights are not the four standard ones.
template <class Field>
LaurentChar character_in(const Subspace<Field>& w, const MixedAmbient& amb) {
    if (w.ambient != amb.size()) throw Error("character_in: ambient mismatch");
    std::map<Weight, EchelonBuilder<Field>> builders;
    for (size_t j = 0; j < w.span.size(); ++j) {
        std::map<Weight, SpCol<Field>> pieces;
        for (const auto& [row, v] : w.span[j]) pieces[amb.weight(row)].emplace_back(row, v);
        for (auto& [mu, proj] : pieces) {
            if (pieces.size() > 1 && !contains<Field>(w, proj))
                throw Error("character_in: subspace is not weight-graded");
            builders.try_emplace(mu, w.ambient).first->second.insert(std::move(proj));
        }
    }
    LaurentChar ch;
    long long total = 0;
    for (auto& [mu, eb] : builders) {
        if (mu.size() != 4) throw Error("character_in: weights need four components");
        long long dmu = eb.rank();
        total += dmu;
        if (dmu > 0) ch = ch + LaurentChar::monomial(mu[0], mu[1], mu[2], mu[3], dmu);
    }
    if (total != w.dim()) throw Error("character_in: graded dimensions do not sum");
    return ch;
}

// Standard-layout character (covariant legs then dual legs).
template <class Field>
LaurentChar character_of(const Subspace<Field>& w, const BasisIndex& amb) {
    return subspace_char<Field>(w, amb);
}

inline LaurentChar dual_char(const LaurentChar& c) { return c.dual(); }

// ch(Ber^t) = (x1 x2 x3 / y)^t for any integer t.
inline LaurentChar berezinian_power(int t) { return LaurentChar::monomial(t, t, t, -t); }

// The graded piece of w of weight mu (w must be graded).
template <class Field>
Subspace<Field> weight_component(const Subspace<Field>& w, const MixedAmbient& amb, const Weight& mu) {
    EchelonBuilder<Field> eb(w.ambient);
    for (const auto& col : w.span) {
        SpCol<Field> proj;
        bool mixed = false;
        for (const auto& [row, v] : col) {
            if (amb.weight(row) == mu)
                proj.emplace_back(row, v);
            else
                mixed = true;
        }
        if (proj.empty()) continue;
        if (mixed && !contains<Field>(w, proj)) throw Error("weight_component: subspace is not weight-graded");
        eb.insert(std::move(proj));
    }
    return eb.take();
}

// --------------------------------------------------- explicit construction ----

// The determinant line: the one-dimensional homology class of the flagged
// complex, realized as the unique weight (1,1,1|-1) line of the term and
// checked to be a cycle and not a boundary.
template <class Field>
Subspace<Field> berezinian_line(KoszulContext<Field>& C) {
    if (C.dims().r != 3 || C.dims().s != 1) throw Error("berezinian: needs a (3|1) symmetry");
    MixedAmbient ma{C.dims(), {false, false, false, true}};
    Subspace<Field> line = weight_component<Field>(C.term_K(3, 1), ma, Weight{1, 1, 1, -1});
    if (line.dim() != 1) throw Error("berezinian: weight line is not one dimensional");
    if (!C.apply_d(line.span.front(), 3, 1).empty()) throw Error("berezinian: representative is not a cycle");
    if (contains<Field>(C.image_d(2, 0), line.span.front())) throw Error("berezinian: representative is a boundary");
    return line;
}

// The dual determinant line: the unique weight (-1,-1,-1|1) line of
// V (x) Lambda_3^*.
template <class Field>
Subspace<Field> dual_berezinian_line(KoszulContext<Field>& C) {
    if (C.dims().r != 3 || C.dims().s != 1) throw Error("berezinian: needs a (3|1) symmetry");
    Subspace<Field> t = kron_subspace<Field>(C.engine().sym_image(1, SymKind::sym),
                                             C.dual_sym_image(3, SymKind::ext));
    MixedAmbient ma{C.dims(), {false, true, true, true}};
    Subspace<Field> line = weight_component<Field>(t, ma, Weight{-1, -1, -1, 1});
    if (line.dim() != 1) throw Error("berezinian: dual weight line is not one dimensional");
    return line;
}

template <class Field>
struct MaterialPiece {
    Subspace<Field> space;
    std::vector<bool> sig;  // per-leg variance of the concatenated layout
};

// Legs needed to materialize the plan, or nullopt when the plan involves a
// construction with no vector-level realization here (general duals).
std::optional<int> plan_legs(const ConstructionPlan& plan);

namespace detail {

template <class Field>
void append_twist(KoszulContext<Field>& C, MaterialPiece<Field>& piece, int t) {
    for (int c = 0; c < (t > 0 ? t : -t); ++c) {
        if (t > 0) {
            piece.space = kron_subspace<Field>(piece.space, berezinian_line<Field>(C));
            piece.sig.insert(piece.sig.end(), {false, false, false, true});
        } else {
            piece.space = kron_subspace<Field>(piece.space, dual_berezinian_line<Field>(C));
            piece.sig.insert(piece.sig.end(), {false, true, true, true});
        }
    }
}

}  // namespace detail

// Vector-level realization of a plan, when all factors fit within cap legs.
// Supported: Young modules, the berezinian and its twists, differential
// images, X and Y complements, and duals of one-row Young modules (dual
// symmetric powers).  General duals return nullopt; the character is still
// available through plan_char.
template <class Field>
std::optional<MaterialPiece<Field>> materialize_plan(KoszulContext<Field>& C, const ConstructionPlan& plan,
                                                     int cap) {
    std::optional<int> legs = plan_legs(plan);
    if (!legs || *legs > cap) return std::nullopt;
    const WeightLabel& w = plan.weight;
    MaterialPiece<Field> piece;
    if (plan.tag == "I1") {
        piece.space = young_module<Field>(C.engine(), {w.m, w.n, w.p});
        piece.sig.assign(static_cast<size_t>(w.m + w.n + w.p), false);
    } else if (plan.tag == "berezinian") {
        piece.space = berezinian_line<Field>(C);
        piece.sig = {false, false, false, true};
    } else if (plan.tag == "twist") {
        auto child = materialize_plan<Field>(C, plan.children.at(0), cap);
        if (!child) return std::nullopt;
        piece = std::move(*child);
    } else if (plan.tag == "I5") {
        int k = plan.base_params.at(0), l = plan.base_params.at(1);
        piece.space = C.image_d(k, l);
        piece.sig.assign(static_cast<size_t>(k + 1), false);
        piece.sig.insert(piece.sig.end(), static_cast<size_t>(l + 1), true);
    } else if (plan.tag == "I7") {
        SummandReport<Field> rep = extract_X(C, plan.base_params.at(0), plan.base_params.at(1));
        if (!rep.ok) throw Error("build_irrep: X extraction failed: " + rep.witness);
        piece.space = std::move(rep.complement);
        piece.sig.assign(static_cast<size_t>(plan.base_params.at(0) + 1), false);
        piece.sig.insert(piece.sig.end(), static_cast<size_t>(-w.p), true);
    } else if (plan.tag == "I8") {
        int i = plan.base_params.at(0), k = plan.base_params.at(1), a = plan.base_params.at(2);
        SummandReport<Field> rep = extract_Y(C, i, k, a);
        if (!rep.ok) throw Error("build_irrep: Y extraction failed: " + rep.witness);
        piece.space = std::move(rep.complement);
        piece.sig.assign(static_cast<size_t>(i + k + 2), false);
        piece.sig.insert(piece.sig.end(), static_cast<size_t>(a + i + k + 2), true);
    } else if (plan.tag == "I4") {
        piece.space = C.dual_sym_image(-w.p, SymKind::sym);
        piece.sig.assign(static_cast<size_t>(-w.p), true);
    } else {
        return std::nullopt;  // I9, I3: no vector-level dual of the child here
    }
    detail::append_twist<Field>(C, piece, plan.twist);
    return piece;
}

// ------------------------------------------------------------- public API ----

// The unique case of the dominant-weight enumeration; throws on
// non-dominant input.  Pure data, no tensor work.
ConstructionPlan dispatch_weight(const WeightLabel& w);

// Character assembled multiplicatively along the plan.
LaurentChar plan_char(const ConstructionPlan& plan);

Subspace<ExactField> berezinian(const HeckeSymmetry& H);

struct IrrepBudget {
    int exact_legs = 5;
    int eval_legs = 8;
};

struct IrrepResult {
    WeightLabel weight;
    ConstructionPlan plan;
    LaurentChar ch;
    bool materialized = false;
    bool verified = false;  // character of the explicit space equals ch
    std::string backend;    // "exact", "evaluated", or "character-only"
    std::optional<Subspace<ExactField>> space;  // exact builds only
    std::vector<bool> leg_signature;            // when materialized
};

IrrepResult build_irrep(const HeckeSymmetry& H, const WeightLabel& w, const IrrepBudget& budget = {});

}  // namespace qgl
