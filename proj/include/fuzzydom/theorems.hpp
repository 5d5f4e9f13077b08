#pragma once

#include "fuzzydom/fuzzy_graph.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fuzzydom {

/// One checker per claim about the direct product G x H.
enum class TheoremId {
    T1,   // effective pairs in both factors give an effective product pair
    T2a,  // both factors totally dominatable => product totally dominatable
    T2b,  // converse of T2a
    T3,   // nu_t(GxH) <= min(|D2| nu_t(G), |D1| nu_t(H))
    T4a,  // nu_t(GxH) = p  <=>  every product vertex has exactly one effective neighbor
    T4b,  // nu_t(GxH) = p  <=>  every vertex of G has exactly one effective neighbor
    T5,   // nu_t(GxH) = p  =>  |V(GxH)| even
    T6,   // G, H complete => GxH complete product
    T7,   // complete product => every fiber is dominating
    T8,   // nu(GxH) = p  <=>  no effective product pair
    T9,   // nu_t(GxH) >= max(gamma_t^{2a}(G), gamma_t^{2a}(H))
    T10,  // nu(GxH)   >= max(gamma^{2a}(G),   gamma^{2a}(H))
    T11,  // fiber function of a minimum total dominating set is total 2a-dominating
    T12,  // fiber functions weigh at most fc(S)
};

struct TheoremInfo {
    TheoremId id;
    std::string_view name;
    std::string_view quote_anchor;
    /// Forced claims follow from the definitions; a violation is a bug here.
    bool forced;
};

const std::vector<TheoremInfo>& theorem_registry();
const TheoremInfo& theorem_info(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view name);
std::vector<TheoremId> all_theorems();
std::vector<TheoremId> forced_theorems();

enum class VerdictKind { Holds, Violated, NotApplicable };

struct Verdict {
    VerdictKind kind = VerdictKind::NotApplicable;
    /// Everything needed to see and replay the failure (empty unless violated).
    nlohmann::ordered_json witness;
};

struct CheckOptions {
    /// Level for T9-T12; defaults to the smallest sigma over both factors.
    std::optional<Rational> alpha;
    std::string separator = "|";
};

Verdict check_theorem(TheoremId id, const FuzzyGraph& g, const FuzzyGraph& h,
                      const CheckOptions& options = {});

/// Same verdicts as calling check_theorem per id, computing shared
/// quantities (product, optima, LPs) once. When `elapsed_ms` is given it
/// receives the time spent in each checker, shared work included.
std::vector<Verdict> check_theorems(const std::vector<TheoremId>& ids, const FuzzyGraph& g,
                                    const FuzzyGraph& h, const CheckOptions& options = {},
                                    std::vector<double>* elapsed_ms = nullptr);

std::string_view to_string(VerdictKind kind);

}  // namespace fuzzydom
