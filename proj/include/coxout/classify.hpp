#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <coxout/graph.hpp>
#include <coxout/sil.hpp>
#include <coxout/word.hpp>

namespace coxout {

enum class Verdict { Finite, VirtuallyAbelianInfinite, Large };

inline std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Finite: return "finite";
        case Verdict::VirtuallyAbelianInfinite: return "virtually-abelian-infinite";
        default: return "large";
    }
}

struct Classification {
    Verdict verdict;
    std::optional<Witness> witness;
    std::vector<std::string> justification;
};

/// Decide Out(G(Gamma,p)) among finite, infinite virtually abelian, and
/// large, with a graph-theoretic witness for the non-finite verdicts.
inline Classification classify(const LabelledGraph& g) {
    if (auto w = find_witness(g)) {
        Classification c{Verdict::Large, *w, {}};
        c.justification.push_back("found " + describe(*w));
        c.justification.push_back(
            "a STIL, an FSIL, or a non-Coxeter SIL maps Out^0 onto a virtually non-abelian free "
            "group, so Out(G) is large");
        return c;
    }
    const auto sils = enumerate_sils(g);
    if (!sils.empty()) {
        Classification c{Verdict::VirtuallyAbelianInfinite, Witness{sils.front()}, {}};
        c.justification.push_back("found " + describe(sils.front()) +
                                  ", so Out(G) is infinite (Gutierrez-Piggott-Ruane criterion)");
        c.justification.push_back(
            "no STIL, FSIL, or non-Coxeter SIL, so Out(G) is virtually abelian");
        return c;
    }
    Classification c{Verdict::Finite, std::nullopt, {}};
    c.justification.push_back(
        "the graph has no SIL, so Out(G) is finite (Gutierrez-Piggott-Ruane criterion)");
    return c;
}

inline nlohmann::json to_json(const Classification& c) {
    nlohmann::json out{{"verdict", verdict_name(c.verdict)}, {"justification", c.justification}};
    if (c.witness) out["witness"] = to_json(*c.witness);
    return out;
}

// ---------------------------------------------------------------------------
// Disconnected case: with two components, no STIL/FSIL and all orders 2,
// Out^0 is itself a right-angled Coxeter group, defined by the join of the
// components with their central cliques removed.
// ---------------------------------------------------------------------------

class DisconnectedStructureError : public InputError {
public:
    explicit DisconnectedStructureError(const std::string& what,
                                        std::optional<Witness> w = std::nullopt)
        : InputError(what), witness(std::move(w)) {}
    std::optional<Witness> witness;
};

struct ComponentQuotient {
    LabelledGraph component;
    VertexSet central_clique_vertices;
    LabelledGraph quotient; // component minus its central clique
};

struct DisconnectedStructure {
    LabelledGraph out0_defining_graph;
    std::array<ComponentQuotient, 2> factor_quotients;
};

inline DisconnectedStructure disconnected_structure(const LabelledGraph& g) {
    for (int i = 0; i < g.size(); ++i)
        if (g.order_of(i) != 2)
            throw DisconnectedStructureError(
                "disconnected_structure: vertex '" + g.name(i) +
                "' has order > 2; the structure statement covers order-2 labels only");
    const auto comps = components_avoiding(g, {});
    if (comps.size() < 2)
        throw DisconnectedStructureError("disconnected_structure: graph is connected");
    if (comps.size() >= 3) {
        // One vertex from each of three components is always an FSIL.
        auto w = is_fsil(g, comps[0].front(), comps[1].front(), comps[2].front());
        if (!w)
            throw LemmaViolation(
                "disconnected_structure: vertices from three distinct components failed to form "
                "an FSIL");
        throw DisconnectedStructureError(
            "disconnected_structure: graph has " + std::to_string(comps.size()) +
                " components; " + describe(*w) + " already makes Out(G) large",
            Witness{*w});
    }
    if (auto w = find_witness(g))
        throw DisconnectedStructureError(
            "disconnected_structure: " + describe(*w) + " makes Out(G) large", *w);

    DisconnectedStructure out{LabelledGraph{}, {}};
    for (std::size_t i = 0; i < 2; ++i) {
        ComponentQuotient cq;
        cq.component = full_subgraph(g, comps[i]);
        cq.central_clique_vertices = central_clique(cq.component);
        VertexSet keep;
        for (const auto& v : comps[i])
            if (!vset_contains(cq.central_clique_vertices, v)) keep.push_back(v);
        cq.quotient = full_subgraph(cq.component, keep);
        out.factor_quotients[i] = std::move(cq);
    }
    out.out0_defining_graph =
        join(out.factor_quotients[0].quotient, out.factor_quotients[1].quotient);
    return out;
}

} // namespace coxout
