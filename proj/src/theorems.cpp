#include "fuzzydom/theorems.hpp"

#include "fuzzydom/alpha.hpp"
#include "fuzzydom/domination.hpp"
#include "fuzzydom/product.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

namespace fuzzydom {

namespace {

using json = nlohmann::ordered_json;

const std::vector<TheoremInfo> registry = {
    {TheoremId::T1, "T1", "g1 dom g2 in G, h1 dom h2 in H => g1h1 dom g2h2 in GxH", true},
    {TheoremId::T2a, "T2a", "G and H have total dominating sets => GxH has one", true},
    {TheoremId::T2b, "T2b", "GxH has a total dominating set => G and H have one", false},
    {TheoremId::T3, "T3", "nu_t(GxH) <= min{|D2| nu_t(G), |D1| nu_t(H)}", true},
    {TheoremId::T4a, "T4a", "nu_t(GxH) = p <=> every vertex of GxH has a unique neighbor", false},
    {TheoremId::T4b, "T4b", "nu_t(GxH) = p <=> every vertex of G has a unique neighbor", false},
    {TheoremId::T5, "T5", "nu_t(GxH) = p => |V(GxH)| even", false},
    {TheoremId::T6, "T6", "G, H complete => GxH = K_Lambda^{GxH}", true},
    {TheoremId::T7, "T7", "GxH = K_Lambda^{GxH} => each fiber gH and Gh dominates", true},
    {TheoremId::T8, "T8", "nu(GxH) = p <=> Gamma < min{Lambda, Lambda} on every pair", false},
    {TheoremId::T9, "T9", "nu_t(GxH) >= max{gamma_t^{2a}(G), gamma_t^{2a}(H)}", false},
    {TheoremId::T10, "T10", "nu(GxH) >= max{gamma^{2a}(G), gamma^{2a}(H)}", false},
    {TheoremId::T11, "T11", "f(g) = min{2a, fc(S cap gH)} is total 2a-dominating", false},
    {TheoremId::T12, "T12", "w(f) <= fc(S)", true},
};

json ids(const FuzzyGraph& g, const VertexSet& s) {
    json out = json::array();
    for (VertexIndex v : s) out.push_back(g.id(v));
    return out;
}

std::string str(const Rational& r) { return format_rational(r); }

json values(const AlphaFunction& f) {
    json out = json::object();
    for (std::size_t i = 0; i < f.vertices.size(); ++i) out[f.vertices[i]] = str(f.values[i]);
    return out;
}

Verdict holds() { return {VerdictKind::Holds, {}}; }
Verdict not_applicable() { return {VerdictKind::NotApplicable, {}}; }
Verdict violated(json witness) { return {VerdictKind::Violated, std::move(witness)}; }

// Lazily computed quantities shared by the checkers for one (G, H) pair.
class Instance {
public:
    Instance(const FuzzyGraph& g, const FuzzyGraph& h, const CheckOptions& options)
        : g_(g), h_(h), product_(direct_product(g, h, options.separator)) {
        if (options.alpha) {
            alpha_ = *options.alpha;
        } else {
            bool first = true;
            for (const auto* factor : {&g_, &h_}) {
                for (const auto& v : factor->vertices()) {
                    if (first || v.sigma.value() < alpha_) alpha_ = v.sigma.value();
                    first = false;
                }
            }
        }
    }

    const FuzzyGraph& g() const { return g_; }
    const FuzzyGraph& h() const { return h_; }
    const FuzzyGraph& product() const { return product_; }
    const Rational& alpha() const { return alpha_; }

    VertexIndex pair(VertexIndex gi, VertexIndex hi) const { return gi * h_.vertex_count() + hi; }

    const Rational& order() {
        if (!order_) order_ = product_order(product_);
        return *order_;
    }
    const DominationResult& nu() { return memo(nu_, product_, DominationKind::Dominating); }
    const DominationResult& nu_t() { return memo(nu_t_, product_, DominationKind::Total); }
    const DominationResult& nu_t_g() { return memo(nu_t_g_, g_, DominationKind::Total); }
    const DominationResult& nu_t_h() { return memo(nu_t_h_, h_, DominationKind::Total); }

    bool total_product() { return flag(total_p_, [&] { return has_total_dominating(product_); }); }
    bool total_g() { return flag(total_g_, [&] { return has_total_dominating(g_); }); }
    bool total_h() { return flag(total_h_, [&] { return has_total_dominating(h_); }); }

    bool nu_t_equals_order() { return nu_t().found && nu_t().optimum == order(); }

    // Hypothesis shared by T9-T12: alpha > 0 and every sigma >= alpha.
    bool alpha_hypothesis() const {
        if (sgn(alpha_) <= 0) return false;
        for (const auto* factor : {&g_, &h_})
            for (const auto& v : factor->vertices())
                if (v.sigma.value() < alpha_) return false;
        return true;
    }

private:
    const DominationResult& memo(std::optional<DominationResult>& slot, const FuzzyGraph& graph,
                                 DominationKind kind) {
        if (!slot) slot = min_domination(graph, kind);
        return *slot;
    }

    template <class F>
    bool flag(std::optional<bool>& slot, F&& compute) {
        if (!slot) slot = compute();
        return *slot;
    }

    const FuzzyGraph& g_;
    const FuzzyGraph& h_;
    FuzzyGraph product_;
    Rational alpha_;
    std::optional<Rational> order_;
    std::optional<DominationResult> nu_, nu_t_, nu_t_g_, nu_t_h_;
    std::optional<bool> total_p_, total_g_, total_h_;
};

std::optional<VertexIndex> first_isolated(const FuzzyGraph& graph) {
    for (VertexIndex v = 0; v < graph.vertex_count(); ++v)
        if (graph.open_neighborhood(v).empty()) return v;
    return std::nullopt;
}

bool every_vertex_unique_neighbor(const FuzzyGraph& graph) {
    for (VertexIndex v = 0; v < graph.vertex_count(); ++v)
        if (graph.open_neighborhood(v).size() != 1) return false;
    return true;
}

Verdict check_t1(Instance& in) {
    const auto& g = in.g();
    const auto& h = in.h();
    for (VertexIndex g1 = 0; g1 < g.vertex_count(); ++g1) {
        for (VertexIndex g2 : g.open_neighborhood(g1)) {
            for (VertexIndex h1 = 0; h1 < h.vertex_count(); ++h1) {
                for (VertexIndex h2 : h.open_neighborhood(h1)) {
                    if (in.product().is_effective(in.pair(g1, h1), in.pair(g2, h2))) continue;
                    return violated({{"g1", g.id(g1)}, {"g2", g.id(g2)}, {"h1", h.id(h1)}, {"h2", h.id(h2)}});
                }
            }
        }
    }
    return holds();
}

Verdict check_t2a(Instance& in) {
    if (!in.total_g() || !in.total_h()) return not_applicable();
    if (auto v = first_isolated(in.product()))
        return violated({{"undominated_product_vertex", in.product().id(*v)}});
    return holds();
}

Verdict check_t2b(Instance& in) {
    if (!in.total_product()) return not_applicable();
    if (auto v = first_isolated(in.g())) return violated({{"factor", "G"}, {"isolated_vertex", in.g().id(*v)}});
    if (auto v = first_isolated(in.h())) return violated({{"factor", "H"}, {"isolated_vertex", in.h().id(*v)}});
    return holds();
}

Verdict check_t3(Instance& in) {
    if (!in.total_g() || !in.total_h()) return not_applicable();
    const auto& d1 = in.nu_t_g();
    const auto& d2 = in.nu_t_h();
    VertexSet grid;
    for (VertexIndex a : d1.witness)
        for (VertexIndex b : d2.witness) grid.push_back(in.pair(a, b));
    std::sort(grid.begin(), grid.end());

    const Rational via_g = Rational(d2.witness.size()) * d1.optimum;
    const Rational via_h = Rational(d1.witness.size()) * d2.optimum;
    const Rational& bound = via_g < via_h ? via_g : via_h;
    const bool grid_total = is_total_dominating(in.product(), grid);
    const auto& nu_t = in.nu_t();
    if (grid_total && nu_t.found && nu_t.optimum <= bound) return holds();
    return violated({{"D1", ids(in.g(), d1.witness)},
                     {"D2", ids(in.h(), d2.witness)},
                     {"D1xD2_total_dominating", grid_total},
                     {"nu_t_product", nu_t.found ? str(nu_t.optimum) : "none"},
                     {"bound", str(bound)}});
}

Verdict iff_verdict(bool lhs, bool rhs, json detail) {
    if (lhs == rhs) return holds();
    detail["direction"] = lhs ? "only-if" : "if";
    return violated(std::move(detail));
}

Verdict check_t4(Instance& in, bool product_level) {
    const bool lhs = in.nu_t_equals_order();
    const bool rhs = every_vertex_unique_neighbor(product_level ? in.product() : in.g());
    return iff_verdict(lhs, rhs,
                       {{"nu_t_product", in.nu_t().found ? str(in.nu_t().optimum) : "none"},
                        {"p", str(in.order())},
                        {"unique_neighbor_condition", rhs}});
}

Verdict check_t5(Instance& in) {
    if (!in.nu_t_equals_order()) return not_applicable();
    const std::size_t n = in.product().vertex_count();
    if (n % 2 == 0) return holds();
    return violated({{"p", str(in.order())}, {"product_vertex_count", n}});
}

Verdict check_t6(Instance& in) {
    if (!is_complete(in.g()) || !is_complete(in.h())) return not_applicable();
    const auto& p = in.product();
    const auto& tag = *p.product_tag();
    for (VertexIndex a = 0; a < p.vertex_count(); ++a) {
        for (VertexIndex b = a + 1; b < p.vertex_count(); ++b) {
            if (tag.factor_of[a].first == tag.factor_of[b].first ||
                tag.factor_of[a].second == tag.factor_of[b].second)
                continue;
            if (!p.is_effective(a, b)) return violated({{"pair", {p.id(a), p.id(b)}}});
        }
    }
    return holds();
}

Verdict check_t7(Instance& in) {
    // A one-vertex factor makes every pair share a coordinate, so the product
    // is vacuously complete while no fiber can dominate.
    if (in.g().vertex_count() < 2 || in.h().vertex_count() < 2) return not_applicable();
    const auto& p = in.product();
    if (!is_complete_product(p)) return not_applicable();
    for (const auto& v : in.g().vertices()) {
        const VertexSet fiber = fiber_gH(p, v.id);
        if (!is_dominating(p, fiber)) return violated({{"fiber", "gH"}, {"g", v.id}});
    }
    for (const auto& v : in.h().vertices()) {
        const VertexSet fiber = fiber_Gh(p, v.id);
        if (!is_dominating(p, fiber)) return violated({{"fiber", "Gh"}, {"h", v.id}});
    }
    return holds();
}

Verdict check_t8(Instance& in) {
    const bool lhs = in.nu().optimum == in.order();
    bool no_effective = true;
    for (VertexIndex v = 0; v < in.product().vertex_count() && no_effective; ++v)
        no_effective = in.product().open_neighborhood(v).empty();
    return iff_verdict(lhs, no_effective,
                       {{"nu_product", str(in.nu().optimum)},
                        {"p", str(in.order())},
                        {"no_effective_pair", no_effective}});
}

Verdict check_t9(Instance& in) {
    if (!in.alpha_hypothesis() || !in.total_g() || !in.total_h()) return not_applicable();
    const Rational level = 2 * in.alpha();
    const auto gamma_g = gamma_t_alpha(in.g(), level);
    const auto gamma_h = gamma_t_alpha(in.h(), level);
    if (!gamma_g || !gamma_h) throw std::logic_error("total alpha LP infeasible on a totally dominatable factor");
    const Rational& bound = *gamma_g < *gamma_h ? *gamma_h : *gamma_g;
    const auto& nu_t = in.nu_t();
    if (nu_t.found && nu_t.optimum >= bound) return holds();
    return violated({{"alpha", str(in.alpha())},
                     {"nu_t_product", nu_t.found ? str(nu_t.optimum) : "none"},
                     {"gamma_t_2alpha_G", str(*gamma_g)},
                     {"gamma_t_2alpha_H", str(*gamma_h)}});
}

Verdict check_t10(Instance& in) {
    if (!in.alpha_hypothesis()) return not_applicable();
    const Rational level = 2 * in.alpha();
    const Rational gamma_g = gamma_alpha(in.g(), level);
    const Rational gamma_h = gamma_alpha(in.h(), level);
    const Rational& bound = gamma_g < gamma_h ? gamma_h : gamma_g;
    if (in.nu().optimum >= bound) return holds();
    return violated({{"alpha", str(in.alpha())},
                     {"nu_product", str(in.nu().optimum)},
                     {"S", ids(in.product(), in.nu().witness)},
                     {"gamma_2alpha_G", str(gamma_g)},
                     {"gamma_2alpha_H", str(gamma_h)}});
}

Verdict check_t11(Instance& in) {
    if (!in.alpha_hypothesis() || !in.total_product()) return not_applicable();
    const VertexSet& s = in.nu_t().witness;
    for (FactorSide side : {FactorSide::Left, FactorSide::Right}) {
        const FuzzyGraph& factor = side == FactorSide::Left ? in.g() : in.h();
        const AlphaFunction f = proof_function_total(in.product(), s, in.alpha(), side);
        const VertexSet bad = verify_alpha_function(factor, f);
        if (bad.empty()) continue;
        return violated({{"alpha", str(in.alpha())},
                         {"factor", side == FactorSide::Left ? "G" : "H"},
                         {"S", ids(in.product(), s)},
                         {"f", values(f)},
                         {"violated_at", ids(factor, bad)}});
    }
    return holds();
}

Verdict check_t12(Instance& in) {
    if (!in.alpha_hypothesis()) return not_applicable();
    struct Case {
        const char* construction;
        const DominationResult* optimum;
    };
    std::vector<Case> cases = {{"closed", &in.nu()}};
    if (in.total_product()) cases.push_back({"total", &in.nu_t()});
    for (const auto& c : cases) {
        const VertexSet& s = c.optimum->witness;
        const Rational fc = fuzzy_cardinality(in.product(), s);
        for (FactorSide side : {FactorSide::Left, FactorSide::Right}) {
            const AlphaFunction f = std::string_view(c.construction) == "total"
                                        ? proof_function_total(in.product(), s, in.alpha(), side)
                                        : proof_function_closed(in.product(), s, in.alpha(),
                                                                CardinalityMode::Fuzzy, side);
            if (f.weight <= fc) continue;
            return violated({{"construction", c.construction},
                             {"factor", side == FactorSide::Left ? "G" : "H"},
                             {"S", ids(in.product(), s)},
                             {"fc_S", str(fc)},
                             {"w_f", str(f.weight)}});
        }
    }
    return holds();
}

Verdict dispatch(TheoremId id, Instance& in) {
    switch (id) {
        case TheoremId::T1: return check_t1(in);
        case TheoremId::T2a: return check_t2a(in);
        case TheoremId::T2b: return check_t2b(in);
        case TheoremId::T3: return check_t3(in);
        case TheoremId::T4a: return check_t4(in, true);
        case TheoremId::T4b: return check_t4(in, false);
        case TheoremId::T5: return check_t5(in);
        case TheoremId::T6: return check_t6(in);
        case TheoremId::T7: return check_t7(in);
        case TheoremId::T8: return check_t8(in);
        case TheoremId::T9: return check_t9(in);
        case TheoremId::T10: return check_t10(in);
        case TheoremId::T11: return check_t11(in);
        case TheoremId::T12: return check_t12(in);
    }
    throw std::invalid_argument("unknown theorem id");
}

}  // namespace

const std::vector<TheoremInfo>& theorem_registry() { return registry; }

const TheoremInfo& theorem_info(TheoremId id) {
    for (const auto& info : registry)
        if (info.id == id) return info;
    throw std::invalid_argument("unknown theorem id");
}

std::optional<TheoremId> parse_theorem_id(std::string_view name) {
    for (const auto& info : registry)
        if (info.name == name) return info.id;
    return std::nullopt;
}

std::vector<TheoremId> all_theorems() {
    std::vector<TheoremId> out;
    for (const auto& info : registry) out.push_back(info.id);
    return out;
}

std::vector<TheoremId> forced_theorems() {
    std::vector<TheoremId> out;
    for (const auto& info : registry)
        if (info.forced) out.push_back(info.id);
    return out;
}

Verdict check_theorem(TheoremId id, const FuzzyGraph& g, const FuzzyGraph& h,
                      const CheckOptions& options) {
    Instance instance(g, h, options);
    return dispatch(id, instance);
}

std::vector<Verdict> check_theorems(const std::vector<TheoremId>& ids, const FuzzyGraph& g,
                                    const FuzzyGraph& h, const CheckOptions& options,
                                    std::vector<double>* elapsed_ms) {
    Instance instance(g, h, options);
    std::vector<Verdict> out;
    out.reserve(ids.size());
    if (elapsed_ms) elapsed_ms->assign(ids.size(), 0.0);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        out.push_back(dispatch(ids[i], instance));
        if (elapsed_ms) {
            const std::chrono::duration<double, std::milli> spent = std::chrono::steady_clock::now() - start;
            (*elapsed_ms)[i] = spent.count();
        }
    }
    return out;
}

std::string_view to_string(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::Holds: return "holds";
        case VerdictKind::Violated: return "violated";
        case VerdictKind::NotApplicable: return "not-applicable";
    }
    return "?";
}

}  // namespace fuzzydom
