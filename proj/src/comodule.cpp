#include "qgl/comodule.hpp"

#include <cstdlib>

namespace qgl {

namespace {

// The dominant-weight enumeration for t = 0.  Exactly one branch fires for
// every dominant triple; the dispatch totality test sweeps this.
ConstructionPlan dispatch_flat(const WeightLabel& w) {
    ConstructionPlan plan;
    plan.weight = w;
    const int m = w.m, n = w.n, p = w.p;
    if (p >= 0) {
        plan.tag = "I1";
        plan.base = "young_module";
        plan.base_params = {m, n, p};
        return plan;
    }
    if (n >= 0) {  // m >= n >= 0 > p
        if (m == n) {
            plan.tag = "I5";
            plan.base = "image_splitting";
            plan.base_params = {m + 2, m - p};
            plan.twist = m - 1;
            return plan;
        }
        plan.tag = "I8";
        plan.base = "extract_Y";
        plan.base_params = {m - n - 1, n + 2, n - m - p - 2};
        plan.twist = 1 - n;
        return plan;
    }
    if (m >= 0) {  // m >= 0 > n >= p
        if (n == -1) {
            plan.tag = "I7";
            plan.base = "extract_X";
            plan.base_params = {m, -m - p - 1};
            plan.twist = -1;
            return plan;
        }
        plan.tag = "I9";  // n <= -2
    } else if (m == -1 && n == -1) {
        plan.tag = "I4";
    } else if (m == -1) {
        plan.tag = "I9";  // m = -1 > n, so n <= -2
    } else if (m == -2) {
        plan.tag = "I3";
    } else {
        plan.tag = "I9";  // m <= -3, so n <= -2
    }
    plan.base = "dual";
    plan.dual_count = 1;
    WeightLabel child;
    if (plan.tag == "I9") {
        child = WeightLabel{-2 - p, -2 - n, -2 - m, 0};
        plan.twist = -3;
    } else if (plan.tag == "I4") {
        child = WeightLabel{-p, 0, 0, 0};
        plan.twist = -1;
    } else {  // I3
        child = WeightLabel{-p - 1, -n - 1, 0, 0};
        plan.twist = -2;
    }
    plan.children.push_back(dispatch_flat(child));
    return plan;
}

}  // namespace

ConstructionPlan dispatch_weight(const WeightLabel& w) {
    if (!w.dominant()) throw Error("dispatch_weight: weight " + w.str() + " is not dominant");
    if (w.t != 0) {
        if (w.m == w.t && w.n == w.t && w.p == w.t && w.t == 1) {
            ConstructionPlan plan;
            plan.tag = "berezinian";
            plan.weight = w;
            plan.base = "berezinian";
            return plan;
        }
        ConstructionPlan plan;
        plan.tag = "twist";
        plan.weight = w;
        plan.base = "twist";
        plan.twist = w.t;
        plan.children.push_back(dispatch_flat(WeightLabel{w.m - w.t, w.n - w.t, w.p - w.t, 0}));
        return plan;
    }
    return dispatch_flat(w);
}

LaurentChar plan_char(const ConstructionPlan& plan) {
    LaurentChar base;
    const WeightLabel& w = plan.weight;
    if (plan.tag == "I1") {
        base = module_char_hook(w.m, w.n, w.p);
    } else if (plan.tag == "berezinian") {
        base = berezinian_char();
    } else if (plan.tag == "twist") {
        base = plan_char(plan.children.at(0));
    } else if (plan.tag == "I5") {
        base = module_char_image(plan.base_params.at(0), plan.base_params.at(1));
    } else if (plan.tag == "I7") {
        base = module_char_x(plan.base_params.at(0), plan.base_params.at(1));
    } else if (plan.tag == "I8") {
        base = module_char_y(plan.base_params.at(0), plan.base_params.at(1), plan.base_params.at(2));
    } else if (plan.tag == "I9" || plan.tag == "I4" || plan.tag == "I3") {
        base = dual_char(plan_char(plan.children.at(0)));
    } else {
        throw Error("plan_char: unknown tag " + plan.tag);
    }
    if (plan.twist != 0) base = base * berezinian_power(plan.twist);
    return base;
}

std::optional<int> plan_legs(const ConstructionPlan& plan) {
    const WeightLabel& w = plan.weight;
    int tw = 4 * std::abs(plan.twist);
    if (plan.tag == "I1") return w.m + w.n + w.p;
    if (plan.tag == "berezinian") return 4;
    if (plan.tag == "twist") {
        std::optional<int> child = plan_legs(plan.children.at(0));
        if (!child) return std::nullopt;
        return *child + tw;
    }
    if (plan.tag == "I5") return plan.base_params.at(0) + plan.base_params.at(1) + 2 + tw;
    if (plan.tag == "I7") return (w.m + 1) + (-w.p) + tw;
    if (plan.tag == "I8") return (w.m + 3) + (w.n - w.p + 1) + tw;
    if (plan.tag == "I4") return (-w.p) + tw;
    return std::nullopt;  // I9, I3
}

Subspace<ExactField> berezinian(const HeckeSymmetry& H) {
    KoszulContext<ExactField> C(H);
    return berezinian_line<ExactField>(C);
}

IrrepResult build_irrep(const HeckeSymmetry& H, const WeightLabel& w, const IrrepBudget& budget) {
    IrrepResult out;
    out.weight = w;
    out.plan = dispatch_weight(w);
    out.ch = plan_char(out.plan);
    out.backend = "character-only";
    std::optional<int> legs = plan_legs(out.plan);
    if (legs && *legs <= budget.exact_legs) {
        KoszulContext<ExactField> C(H);
        auto piece = materialize_plan<ExactField>(C, out.plan, budget.exact_legs);
        if (piece) {
            out.materialized = true;
            out.backend = "exact";
            out.verified = character_in<ExactField>(piece->space, MixedAmbient{H.dims, piece->sig}) == out.ch;
            out.space = std::move(piece->space);
            out.leg_signature = std::move(piece->sig);
        }
    } else if (legs && *legs <= budget.eval_legs) {
        KoszulContext<EvalField> C(H, EvalField(EvalPoint(mpq_class(7, 5))));
        auto piece = materialize_plan<EvalField>(C, out.plan, budget.eval_legs);
        if (piece) {
            out.materialized = true;
            out.backend = "evaluated";
            out.verified = character_in<EvalField>(piece->space, MixedAmbient{H.dims, piece->sig}) == out.ch;
            out.leg_signature = std::move(piece->sig);
        }
    }
    return out;
}

}  // namespace qgl
