#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include <coxout/graph.hpp>

namespace coxout {

// ---------------------------------------------------------------------------
// Witnesses. Each carries the whole separated component, not a single vertex;
// any member of the component serves as the classical third vertex.
// ---------------------------------------------------------------------------

/// (x1, x2 | Z): x1, x2 non-adjacent and Z is a component of
/// Gamma minus (lk(x1) n lk(x2)) containing neither x1 nor x2.
struct SilWitness {
    std::string x1, x2;
    VertexSet z_component;
};

/// (x1, x2, x3 | Z): the triple spans at most one edge and Z is a component
/// of Gamma minus (lk(x1) n lk(x2) n lk(x3)) containing none of the triple.
struct StilWitness {
    std::string x1, x2, x3;
    VertexSet z_component;
};

/// {x1, x2, x3}: each pair forms a SIL witnessed by the third vertex.
/// sils[0] = (x1,x2 | comp of x3), sils[1] = (x1,x3 | comp of x2),
/// sils[2] = (x2,x3 | comp of x1).
struct FsilWitness {
    std::string x1, x2, x3;
    std::array<SilWitness, 3> sils;
};

/// A SIL one of whose defining vertices has order >= 3.
struct NonCoxeterSilWitness {
    SilWitness underlying;
    std::string heavy_vertex;
};

using Witness = std::variant<SilWitness, StilWitness, FsilWitness, NonCoxeterSilWitness>;

inline nlohmann::json to_json(const SilWitness& w) {
    return {{"kind", "sil"}, {"x1", w.x1}, {"x2", w.x2}, {"z_component", w.z_component}};
}
inline nlohmann::json to_json(const StilWitness& w) {
    return {{"kind", "stil"}, {"x1", w.x1}, {"x2", w.x2}, {"x3", w.x3}, {"z_component", w.z_component}};
}
inline nlohmann::json to_json(const FsilWitness& w) {
    return {{"kind", "fsil"},
            {"x1", w.x1},
            {"x2", w.x2},
            {"x3", w.x3},
            {"sils", {to_json(w.sils[0]), to_json(w.sils[1]), to_json(w.sils[2])}}};
}
inline nlohmann::json to_json(const NonCoxeterSilWitness& w) {
    return {{"kind", "non_coxeter_sil"},
            {"underlying", to_json(w.underlying)},
            {"heavy_vertex", w.heavy_vertex}};
}
inline nlohmann::json to_json(const Witness& w) {
    return std::visit([](const auto& x) { return to_json(x); }, w);
}

inline std::string describe(const SilWitness& w) {
    std::string out = "SIL (" + w.x1 + "," + w.x2 + " | {";
    for (std::size_t i = 0; i < w.z_component.size(); ++i)
        out += (i ? "," : "") + w.z_component[i];
    return out + "})";
}
inline std::string describe(const StilWitness& w) {
    std::string out = "STIL (" + w.x1 + "," + w.x2 + "," + w.x3 + " | {";
    for (std::size_t i = 0; i < w.z_component.size(); ++i)
        out += (i ? "," : "") + w.z_component[i];
    return out + "})";
}
inline std::string describe(const FsilWitness& w) {
    return "FSIL {" + w.x1 + "," + w.x2 + "," + w.x3 + "}";
}
inline std::string describe(const NonCoxeterSilWitness& w) {
    return "non-Coxeter " + describe(w.underlying) + " with heavy vertex " + w.heavy_vertex;
}
inline std::string describe(const Witness& w) {
    return std::visit([](const auto& x) { return describe(x); }, w);
}

// ---------------------------------------------------------------------------
// Detectors.
// ---------------------------------------------------------------------------

namespace detail {

inline void require_distinct(const LabelledGraph& g, const std::vector<std::string>& vs) {
    for (const auto& v : vs) (void)g.index_of(v);
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] == vs[j]) throw InputError("vertices must be distinct: '" + vs[i] + "' repeats");
}

inline VertexSet intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline const VertexSet* component_of(const std::vector<VertexSet>& comps, const std::string& v) {
    for (const auto& c : comps)
        if (vset_contains(c, v)) return &c;
    return nullptr;
}

} // namespace detail

inline std::optional<SilWitness> is_sil(const LabelledGraph& g, const std::string& x1,
                                        const std::string& x2, const std::string& z) {
    detail::require_distinct(g, {x1, x2, z});
    if (g.adjacent(x1, x2)) return std::nullopt;
    const VertexSet removed = detail::intersect(link(g, x1), link(g, x2));
    const auto comps = components_avoiding(g, removed);
    const VertexSet* zc = detail::component_of(comps, z);
    if (zc == nullptr) return std::nullopt; // z itself was removed
    if (vset_contains(*zc, x1) || vset_contains(*zc, x2)) return std::nullopt;
    return SilWitness{x1, x2, *zc};
}

/// All (unordered pair, component) SIL witnesses, x1 < x2, deterministic order.
inline std::vector<SilWitness> enumerate_sils(const LabelledGraph& g) {
    std::vector<SilWitness> out;
    const auto& names = g.vertex_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = i + 1; j < names.size(); ++j) {
            if (g.adjacent(names[i], names[j])) continue;
            const VertexSet removed = detail::intersect(link(g, names[i]), link(g, names[j]));
            for (const auto& comp : components_avoiding(g, removed)) {
                if (vset_contains(comp, names[i]) || vset_contains(comp, names[j])) continue;
                out.push_back(SilWitness{names[i], names[j], comp});
            }
        }
    }
    return out;
}

inline std::optional<StilWitness> is_stil(const LabelledGraph& g, const std::string& x1,
                                          const std::string& x2, const std::string& x3,
                                          const std::string& z) {
    detail::require_distinct(g, {x1, x2, x3, z});
    int edges = 0;
    if (g.adjacent(x1, x2)) ++edges;
    if (g.adjacent(x1, x3)) ++edges;
    if (g.adjacent(x2, x3)) ++edges;
    if (edges > 1) return std::nullopt;
    const VertexSet removed =
        detail::intersect(detail::intersect(link(g, x1), link(g, x2)), link(g, x3));
    const auto comps = components_avoiding(g, removed);
    const VertexSet* zc = detail::component_of(comps, z);
    if (zc == nullptr) return std::nullopt;
    if (vset_contains(*zc, x1) || vset_contains(*zc, x2) || vset_contains(*zc, x3))
        return std::nullopt;
    return StilWitness{x1, x2, x3, *zc};
}

inline std::optional<FsilWitness> is_fsil(const LabelledGraph& g, const std::string& x1,
                                          const std::string& x2, const std::string& x3) {
    detail::require_distinct(g, {x1, x2, x3});
    auto s12 = is_sil(g, x1, x2, x3);
    if (!s12) return std::nullopt;
    auto s13 = is_sil(g, x1, x3, x2);
    if (!s13) return std::nullopt;
    auto s23 = is_sil(g, x2, x3, x1);
    if (!s23) return std::nullopt;
    return FsilWitness{x1, x2, x3, {*s12, *s13, *s23}};
}

/// First witness in deterministic search order: FSILs over lexicographic
/// triples, then STILs over lexicographic triples with components in their
/// canonical order, then non-Coxeter SILs in enumerate_sils order.
inline std::optional<Witness> find_witness(const LabelledGraph& g) {
    const auto& names = g.vertex_names();
    const std::size_t n = names.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (auto w = is_fsil(g, names[i], names[j], names[k])) return Witness{*w};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                int edges = 0;
                if (g.adjacent(names[i], names[j])) ++edges;
                if (g.adjacent(names[i], names[k])) ++edges;
                if (g.adjacent(names[j], names[k])) ++edges;
                if (edges > 1) continue;
                const VertexSet removed = detail::intersect(
                    detail::intersect(link(g, names[i]), link(g, names[j])), link(g, names[k]));
                for (const auto& comp : components_avoiding(g, removed)) {
                    if (vset_contains(comp, names[i]) || vset_contains(comp, names[j]) ||
                        vset_contains(comp, names[k]))
                        continue;
                    return Witness{StilWitness{names[i], names[j], names[k], comp}};
                }
            }
        }
    }
    for (const auto& s : enumerate_sils(g)) {
        if (g.order_of(s.x1) >= 3) return Witness{NonCoxeterSilWitness{s, s.x1}};
        if (g.order_of(s.x2) >= 3) return Witness{NonCoxeterSilWitness{s, s.x2}};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Lemma helpers. Each takes a hypothesis-satisfying configuration (anything
// else is an InputError) and produces the promised object; if the promised
// object does not exist the helper throws LemmaViolation, which the
// verification harness collects as a counterexample.
// ---------------------------------------------------------------------------

/// Two SILs over a connected graph sharing one defining vertex and a common
/// z produce a STIL on the three outer vertices.
inline StilWitness overlap_to_stil(const LabelledGraph& g, const SilWitness& s1,
                                   const SilWitness& s2, const std::string& z) {
    if (!is_connected(g)) throw InputError("overlap_to_stil: graph must be connected");
    (void)g.index_of(z);
    std::string shared;
    int shared_count = 0;
    for (const std::string& a : {s1.x1, s1.x2})
        for (const std::string& b : {s2.x1, s2.x2})
            if (a == b) {
                shared = a;
                ++shared_count;
            }
    if (shared_count != 1)
        throw InputError("overlap_to_stil: the SILs must share exactly one defining vertex");
    const std::string x2 = s1.x1 == shared ? s1.x2 : s1.x1;
    const std::string x3 = s2.x1 == shared ? s2.x2 : s2.x1;
    if (!is_sil(g, shared, x2, z) || !vset_contains(s1.z_component, z))
        throw InputError("overlap_to_stil: z must lie in the first SIL's component");
    if (!is_sil(g, shared, x3, z) || !vset_contains(s2.z_component, z))
        throw InputError("overlap_to_stil: z must lie in the second SIL's component");
    auto w = is_stil(g, shared, x2, x3, z);
    if (!w)
        throw LemmaViolation("overlap_to_stil: overlapping SILs at " + shared + "," + x2 + "," +
                             x3 + " with z=" + z + " produced no STIL");
    return *w;
}

struct StilfindResult {
    enum class Kind { Fsil, Stil, SameComponentCondition };
    Kind kind;
    std::optional<FsilWitness> fsil;
    std::optional<StilWitness> stil;
};

/// Given SILs (x1,x2 | y) and (x1,x3 | z), reports which clause of the
/// trichotomy holds: an FSIL on the triple, a STIL over some vertex, or the
/// same-component condition on the two punctured star complements.
inline StilfindResult stilfind_trichotomy(const LabelledGraph& g, const std::string& x1,
                                          const std::string& x2, const std::string& x3,
                                          const std::string& y, const std::string& z) {
    detail::require_distinct(g, {x1, x2, x3});
    if (!is_sil(g, x1, x2, y)) throw InputError("stilfind: (x1,x2 | y) is not a SIL");
    if (!is_sil(g, x1, x3, z)) throw InputError("stilfind: (x1,x3 | z) is not a SIL");

    // Overlapping components first: y = z forces a STIL directly.
    if (y == z) {
        if (auto w = is_stil(g, x1, x2, x3, y))
            return {StilfindResult::Kind::Stil, std::nullopt, *w};
    }
    if (auto w = is_fsil(g, x1, x2, x3)) return {StilfindResult::Kind::Fsil, *w, std::nullopt};
    for (const auto& v : g.vertex_names()) {
        if (v == x1 || v == x2 || v == x3) continue;
        if (auto w = is_stil(g, x1, x2, x3, v))
            return {StilfindResult::Kind::Stil, std::nullopt, *w};
    }

    const auto same_component = [&g](const VertexSet& keep, const std::string& a,
                                     const std::string& b, const std::string& c) {
        if (!vset_contains(keep, a) || !vset_contains(keep, b) || !vset_contains(keep, c))
            return false;
        const LabelledGraph sub = full_subgraph(g, keep);
        const auto comps = components_avoiding(sub, {});
        const VertexSet* ca = detail::component_of(comps, a);
        return ca != nullptr && vset_contains(*ca, b) && vset_contains(*ca, c);
    };

    // (Gamma minus st(x3)) with x2 put back, and symmetrically.
    VertexSet keep23;
    {
        const VertexSet st3 = star(g, x3);
        for (const auto& v : g.vertex_names())
            if (!vset_contains(st3, v) || v == x2) keep23.push_back(v);
        keep23 = vset_sorted(std::move(keep23));
    }
    VertexSet keep32;
    {
        const VertexSet st2 = star(g, x2);
        for (const auto& v : g.vertex_names())
            if (!vset_contains(st2, v) || v == x3) keep32.push_back(v);
        keep32 = vset_sorted(std::move(keep32));
    }
    if (same_component(keep23, x1, x2, y) && same_component(keep32, x1, x3, z))
        return {StilfindResult::Kind::SameComponentCondition, std::nullopt, std::nullopt};

    throw LemmaViolation("stilfind: no clause holds for (" + x1 + "," + x2 + "," + x3 +
                         ") with y=" + y + ", z=" + z);
}

/// True iff a and b lie in different components of Gamma minus st(v).
inline bool star_separates(const LabelledGraph& g, const std::string& v, const std::string& a,
                           const std::string& b) {
    detail::require_distinct(g, {v, a, b});
    const VertexSet st = star(g, v);
    if (vset_contains(st, a)) throw InputError("star_separates: '" + a + "' lies in st(" + v + ")");
    if (vset_contains(st, b)) throw InputError("star_separates: '" + b + "' lies in st(" + v + ")");
    const auto comps = components_avoiding(g, st);
    const VertexSet* ca = detail::component_of(comps, a);
    return ca == nullptr || !vset_contains(*ca, b);
}

/// Hypothesis: (x1,x2 | x4) is a SIL and st(x4) separates x1 from x2.
/// Conclusion: {x1,x2,x4} is an FSIL.
inline FsilWitness fsil_from_separating_star(const LabelledGraph& g, const std::string& x1,
                                             const std::string& x2, const std::string& x4) {
    if (!is_sil(g, x1, x2, x4))
        throw InputError("fsil_from_separating_star: (x1,x2 | x4) is not a SIL");
    if (!star_separates(g, x4, x1, x2))
        throw InputError("fsil_from_separating_star: st(x4) does not separate x1 and x2");
    auto w = is_fsil(g, x1, x2, x4);
    if (!w)
        throw LemmaViolation("fsil_from_separating_star: {" + x1 + "," + x2 + "," + x4 +
                             "} is not an FSIL");
    return *w;
}

/// Hypothesis: st(x1) separates x2,x3 and st(x2) separates x1,x3.
/// Conclusion: (x1,x2 | x3) is a SIL.
inline SilWitness sil_from_double_separation(const LabelledGraph& g, const std::string& x1,
                                             const std::string& x2, const std::string& x3) {
    if (!star_separates(g, x1, x2, x3))
        throw InputError("sil_from_double_separation: st(x1) does not separate x2 and x3");
    if (!star_separates(g, x2, x1, x3))
        throw InputError("sil_from_double_separation: st(x2) does not separate x1 and x3");
    auto w = is_sil(g, x1, x2, x3);
    if (!w)
        throw LemmaViolation("sil_from_double_separation: (" + x1 + "," + x2 + " | " + x3 +
                             ") is not a SIL");
    return *w;
}

} // namespace coxout
