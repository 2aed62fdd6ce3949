#pragma once

#include <cstdint>
#include <iomanip>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include <coxout/automorphism.hpp>
#include <coxout/classify.hpp>
#include <coxout/graph.hpp>
#include <coxout/presentation.hpp>
#include <coxout/sil.hpp>

namespace coxout {

// ---------------------------------------------------------------------------
// Deterministic random graphs. The raw mt19937_64 stream is consumed through
// fixed arithmetic so a seed pins the sample on every platform.
// ---------------------------------------------------------------------------

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    long long uniform(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 eng_;
};

struct GraphSampler {
    int min_vertices = 3;
    int max_vertices = 6;
    double edge_prob = 0.4;
    std::vector<std::pair<long long, double>> label_weights{{2, 1.0}};
    std::uint64_t seed = 0;
};

inline LabelledGraph sample_graph_stream(Rng& rng, const GraphSampler& s) {
    if (s.min_vertices < 0 || s.max_vertices < s.min_vertices || s.max_vertices > 26)
        throw InputError("sampler: vertex count range must sit inside [0, 26]");
    double total = 0;
    for (const auto& [label, w] : s.label_weights) {
        if (!is_prime_power(static_cast<unsigned long long>(label)))
            throw InputError("sampler: label " + std::to_string(label) + " is not a prime power");
        if (w < 0) throw InputError("sampler: negative label weight");
        total += w;
    }
    if (total <= 0) throw InputError("sampler: label weights sum to zero");

    const int n = static_cast<int>(rng.uniform(s.min_vertices, s.max_vertices));
    std::vector<std::pair<std::string, long long>> vs;
    for (int i = 0; i < n; ++i) {
        const double pick = rng.unit() * total;
        double acc = 0;
        long long label = s.label_weights.back().first;
        for (const auto& [l, w] : s.label_weights) {
            acc += w;
            if (pick < acc) {
                label = l;
                break;
            }
        }
        vs.emplace_back(std::string(1, static_cast<char>('a' + i)), label);
    }
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.unit() < s.edge_prob) es.emplace_back(vs[static_cast<std::size_t>(i)].first,
                                                          vs[static_cast<std::size_t>(j)].first);
    return LabelledGraph(std::move(vs), es);
}

inline LabelledGraph sample_graph(const GraphSampler& s) {
    Rng rng(s.seed);
    return sample_graph_stream(rng, s);
}

/// Every graph on vertices a, b, ... (n of them, all labels 2), one per edge
/// subset. 2^(n(n-1)/2) graphs; meant for n <= 6.
template <typename Fn>
inline void for_all_graphs(int n, Fn&& fn) {
    std::vector<std::pair<std::string, long long>> vs;
    for (int i = 0; i < n; ++i) vs.emplace_back(std::string(1, static_cast<char>('a' + i)), 2);
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    const std::uint64_t m = 1ULL << slots.size();
    for (std::uint64_t mask = 0; mask < m; ++mask) {
        std::vector<std::pair<std::string, std::string>> es;
        for (std::size_t k = 0; k < slots.size(); ++k)
            if (mask & (1ULL << k))
                es.emplace_back(vs[static_cast<std::size_t>(slots[k].first)].first,
                                vs[static_cast<std::size_t>(slots[k].second)].first);
        fn(LabelledGraph(vs, es));
    }
}

// ---------------------------------------------------------------------------
// Verification suites. Every suite turns one of the supporting lemmas into
// instance checks; a lemma is a theorem, so the expected failure count is
// always zero. Bounded Out-equality verdicts that cannot certify an expected
// equality escalate the bound once (x2) and are then reported as
// inconclusive, never as failures.
// ---------------------------------------------------------------------------

enum class SuiteId {
    Noncommute,
    NoOverlap,
    Stilfind,
    ConjTwo,
    Rewrite,
    ConjThree,
    DerivedAbelian,
    FsilSep,
    SilDoubleSep,
    PresentationSound,
};

inline const std::vector<std::pair<std::string, SuiteId>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteId>> table{
        {"noncommute", SuiteId::Noncommute},
        {"no_overlap", SuiteId::NoOverlap},
        {"stilfind", SuiteId::Stilfind},
        {"conj_two", SuiteId::ConjTwo},
        {"rewrite", SuiteId::Rewrite},
        {"conj_three", SuiteId::ConjThree},
        {"derived_abelian", SuiteId::DerivedAbelian},
        {"fsil_sep", SuiteId::FsilSep},
        {"sil_double_sep", SuiteId::SilDoubleSep},
        {"presentation_sound", SuiteId::PresentationSound},
    };
    return table;
}

inline SuiteId parse_suite(const std::string& name) {
    for (const auto& [n, id] : suite_table())
        if (n == name) return id;
    throw InputError("unknown suite '" + name + "'");
}

inline std::string suite_name(SuiteId id) {
    for (const auto& [n, i] : suite_table())
        if (i == id) return n;
    return "?";
}

struct FailureRecord {
    std::string suite;
    std::string graph_text;
    std::string tuple;
    std::string detail;
};

struct VerificationReport {
    std::string suite;
    int graphs = 0;
    long long instances = 0;
    std::vector<FailureRecord> failures;
    long long inconclusive = 0;
    std::vector<std::string> inconclusive_notes;
};

namespace oracle_detail {

inline bool intersects(const VertexSet& a, const VertexSet& b) {
    for (const auto& v : a)
        if (vset_contains(b, v)) return true;
    return false;
}

struct SuiteContext {
    const LabelledGraph& g;
    int bound;
    VerificationReport& rep;

    void fail(const std::string& tuple, const std::string& detail) {
        rep.failures.push_back({rep.suite, graph_to_text(g), tuple, detail});
    }
    void inconclusive(const std::string& note) {
        ++rep.inconclusive;
        rep.inconclusive_notes.push_back(note);
    }

    /// An identity in Out demanded by a lemma: certify, escalating once.
    void expect_out_equal(const Automorphism& lhs, const Automorphism& rhs,
                          const std::string& tuple) {
        ++rep.instances;
        if (equal_in_out_bounded(lhs, rhs, bound).equal) return;
        if (equal_in_out_bounded(lhs, rhs, 2 * bound).equal) return;
        inconclusive(tuple + ": inconclusive at bound " + std::to_string(2 * bound));
    }

    /// A non-identity in Out demanded by a lemma: the bounded search must
    /// come back empty and complete.
    void expect_out_not_equal(const Automorphism& lhs, const Automorphism& rhs,
                              const std::string& tuple) {
        ++rep.instances;
        const OutEquality r = equal_in_out_bounded(lhs, rhs, bound);
        if (r.equal) {
            fail(tuple, "certified equal in Out with conjugator '" +
                            r.conjugator->to_literal() + "' where the lemma demands inequality");
        } else if (!r.search_complete) {
            inconclusive(tuple + ": negative search truncated at bound " + std::to_string(bound));
        }
    }
};

} // namespace oracle_detail

/// The graph side of the non-commutation criterion: a SIL (x, y | z) exists
/// with z in C = D, or x in D and z in C, or y in C and z in D, or
/// x in D and y in C.
inline bool noncommute_clauses(const LabelledGraph& g, const PartialConjugation& a,
                               const PartialConjugation& b) {
    if (a.multiplier == b.multiplier) return false;
    if (g.adjacent(a.multiplier, b.multiplier)) return false;
    const VertexSet removed =
        detail::intersect(link(g, a.multiplier), link(g, b.multiplier));
    const bool x_in_D = vset_contains(b.support, a.multiplier);
    const bool y_in_C = vset_contains(a.support, b.multiplier);
    for (const auto& z_comp : components_avoiding(g, removed)) {
        if (vset_contains(z_comp, a.multiplier) || vset_contains(z_comp, b.multiplier)) continue;
        const bool z_in_C = oracle_detail::intersects(z_comp, a.support);
        const bool z_in_D = oracle_detail::intersects(z_comp, b.support);
        if (a.support == b.support && z_in_C) return true;
        if (x_in_D && z_in_C) return true;
        if (y_in_C && z_in_D) return true;
        if (x_in_D && y_in_C) return true;
    }
    return false;
}

inline bool suite_filter(SuiteId id, const LabelledGraph& g) {
    switch (id) {
        case SuiteId::NoOverlap: return is_connected(g);
        case SuiteId::ConjTwo:
        case SuiteId::Rewrite:
        case SuiteId::ConjThree:
        case SuiteId::DerivedAbelian: {
            if (!is_connected(g)) return false;
            for (int i = 0; i < g.size(); ++i)
                if (g.order_of(i) != 2) return false;
            return !find_witness(g).has_value();
        }
        default: return true;
    }
}

namespace oracle_detail {

inline void suite_noncommute(SuiteContext& ctx) {
    const auto& g = ctx.g;
    const auto pcs = enumerate_partial_conjugations(g);
    std::vector<Automorphism> auts;
    for (const auto& pc : pcs) auts.push_back(to_automorphism(g, pc));
    const Automorphism id = Automorphism::identity(g);
    for (std::size_t i = 0; i < pcs.size(); ++i) {
        for (std::size_t j = i + 1; j < pcs.size(); ++j) {
            if (pcs[i].multiplier == pcs[j].multiplier) continue;
            const std::string tuple = pcs[i].name() + " vs " + pcs[j].name();
            const Automorphism c = commutator_aut(auts[i], auts[j]);
            if (noncommute_clauses(g, pcs[i], pcs[j]))
                ctx.expect_out_not_equal(c, id, tuple);
            else
                ctx.expect_out_equal(c, id, tuple);
        }
    }
}

inline void suite_no_overlap(SuiteContext& ctx) {
    const auto& g = ctx.g;
    const auto sils = enumerate_sils(g);
    for (std::size_t i = 0; i < sils.size(); ++i) {
        for (std::size_t j = i + 1; j < sils.size(); ++j) {
            int shared = 0;
            for (const std::string& a : {sils[i].x1, sils[i].x2})
                for (const std::string& b : {sils[j].x1, sils[j].x2})
                    if (a == b) ++shared;
            if (shared != 1) continue;
            for (const auto& z : sils[i].z_component) {
                if (!vset_contains(sils[j].z_component, z)) continue;
                ++ctx.rep.instances;
                const std::string tuple =
                    describe(sils[i]) + " + " + describe(sils[j]) + " at z=" + z;
                try {
                    (void)overlap_to_stil(g, sils[i], sils[j], z);
                } catch (const LemmaViolation& e) {
                    ctx.fail(tuple, e.what());
                }
            }
        }
    }
}

inline void suite_stilfind(SuiteContext& ctx) {
    const auto& g = ctx.g;
    const auto sils = enumerate_sils(g);
    for (std::size_t i = 0; i < sils.size(); ++i) {
        for (std::size_t j = 0; j < sils.size(); ++j) {
            if (i == j) continue;
            // Roles: the shared vertex is x1 in both SILs.
            std::string x1;
            int shared = 0;
            for (const std::string& a : {sils[i].x1, sils[i].x2})
                for (const std::string& b : {sils[j].x1, sils[j].x2})
                    if (a == b) {
                        x1 = a;
                        ++shared;
                    }
            if (shared != 1) continue;
            const std::string x2 = sils[i].x1 == x1 ? sils[i].x2 : sils[i].x1;
            const std::string x3 = sils[j].x1 == x1 ? sils[j].x2 : sils[j].x1;
            for (const auto& y : sils[i].z_component) {
                for (const auto& z : sils[j].z_component) {
                    ++ctx.rep.instances;
                    const std::string tuple = "(" + x1 + "," + x2 + "|" + y + ") + (" + x1 + "," +
                                              x3 + "|" + z + ")";
                    try {
                        (void)stilfind_trichotomy(g, x1, x2, x3, y, z);
                    } catch (const LemmaViolation& e) {
                        ctx.fail(tuple, e.what());
                    }
                }
            }
        }
    }
}

struct MultiplierFamily {
    std::string multiplier;
    std::vector<PartialConjugation> pcs;
    std::vector<Automorphism> auts;
    int first = -1; // index of the support containing a reference vertex
};

inline MultiplierFamily family_of(const LabelledGraph& g, const std::string& multiplier,
                                  const std::string& reference) {
    MultiplierFamily fam;
    fam.multiplier = multiplier;
    for (const auto& comp : components_avoiding(g, star(g, multiplier))) {
        if (vset_contains(comp, reference)) fam.first = static_cast<int>(fam.pcs.size());
        fam.pcs.push_back({multiplier, comp});
        fam.auts.push_back(partial_conjugation(g, multiplier, comp));
    }
    return fam;
}

inline void suite_conj_two(SuiteContext& ctx) {
    const auto& g = ctx.g;
    const auto pcs = enumerate_partial_conjugations(g);
    const auto sil_components = [&g](const std::string& x, const std::string& y) {
        std::vector<VertexSet> out;
        if (g.adjacent(x, y)) return out;
        for (const auto& comp :
             components_avoiding(g, detail::intersect(link(g, x), link(g, y))))
            if (!vset_contains(comp, x) && !vset_contains(comp, y)) out.push_back(comp);
        return out;
    };
    for (const auto& chi_pc : pcs) {
        const std::string x1 = chi_pc.multiplier;
        const VertexSet& C = chi_pc.support;
        const Automorphism chi = to_automorphism(g, chi_pc);
        for (const auto& x2 : g.vertex_names()) {
            if (x2 == x1) continue;
            const MultiplierFamily fam = family_of(g, x2, x1);
            if (fam.pcs.empty()) continue;
            const auto sil_comps = sil_components(x1, x2);
            const auto is_sil_comp = [&](const VertexSet& s) {
                for (const auto& zc : sil_comps)
                    if (zc == s) return true;
                return false;
            };
            const bool x2_in_C = vset_contains(C, x2);
            const int r = static_cast<int>(fam.pcs.size());
            for (int i = 0; i < r; ++i) {
                const Automorphism comm_i = commutator_aut(chi, fam.auts[i]);
                for (int j = 0; j < r; ++j) {
                    const Automorphism lhs =
                        compose(fam.auts[j], compose(comm_i, fam.auts[j]));
                    Automorphism rhs = Automorphism::identity(g);
                    std::string case_name;
                    const VertexSet& Ci = fam.pcs[static_cast<std::size_t>(i)].support;
                    const VertexSet& Cj = fam.pcs[static_cast<std::size_t>(j)].support;
                    if (i == j) {
                        rhs = commutator_aut(fam.auts[i], chi);
                        case_name = "i=j";
                    } else if (j == fam.first && i != fam.first && is_sil_comp(Ci) &&
                               (Ci == C || x2_in_C)) {
                        rhs = commutator_aut(fam.auts[i], chi);
                        case_name = "inverse-b";
                    } else if (i == fam.first && j != fam.first && Cj == C && is_sil_comp(C)) {
                        rhs = commutator_aut(fam.auts[i], chi);
                        case_name = "inverse-c";
                    } else if (i == fam.first && j != fam.first && is_sil_comp(Cj) && x2_in_C) {
                        bool started = false;
                        for (int k = 0; k < r; ++k) {
                            if (k == fam.first) continue;
                            const Automorphism piece = k == j ? commutator_aut(fam.auts[k], chi)
                                                              : commutator_aut(chi, fam.auts[k]);
                            rhs = started ? compose(rhs, piece) : piece;
                            started = true;
                        }
                        case_name = "product";
                    } else {
                        rhs = comm_i;
                        case_name = "unchanged";
                    }
                    ctx.expect_out_equal(lhs, rhs,
                                         chi_pc.name() + ", theta_i=" +
                                             fam.pcs[static_cast<std::size_t>(i)].name() +
                                             ", theta_j=" +
                                             fam.pcs[static_cast<std::size_t>(j)].name() +
                                             " [" + case_name + "]");
                }
            }
        }
    }
}

inline void suite_rewrite(SuiteContext& ctx) {
    const auto& g = ctx.g;
    for (const auto& chi_pc : enumerate_partial_conjugations(g)) {
        const std::string x1 = chi_pc.multiplier;
        const Automorphism chi1 = to_automorphism(g, chi_pc);
        for (const auto& x2 : g.vertex_names()) {
            if (x2 == x1) continue;
            const MultiplierFamily fam = family_of(g, x2, x1);
            if (fam.first < 0 || fam.pcs.size() < 2) continue;
            const Automorphism lhs =
                commutator_aut(chi1, fam.auts[static_cast<std::size_t>(fam.first)]);
            Automorphism rhs = Automorphism::identity(g);
            bool started = false;
            for (std::size_t k = 0; k < fam.pcs.size(); ++k) {
                if (static_cast<int>(k) == fam.first) continue;
                const Automorphism piece = commutator_aut(chi1, fam.auts[k]);
                rhs = started ? compose(rhs, piece) : piece;
                started = true;
            }
            ctx.expect_out_equal(lhs, rhs,
                                 "[" + chi_pc.name() + ", " +
                                     fam.pcs[static_cast<std::size_t>(fam.first)].name() +
                                     "] rewritten over multiplier " + x2);
        }
    }
}

inline void suite_conj_three(SuiteContext& ctx, std::size_t per_graph_cap = 3000) {
    const auto& g = ctx.g;
    const auto pcs = enumerate_partial_conjugations(g);
    std::vector<Automorphism> auts;
    for (const auto& pc : pcs) auts.push_back(to_automorphism(g, pc));
    const Automorphism id = Automorphism::identity(g);
    std::size_t done = 0;
    for (std::size_t i = 0; i < pcs.size() && done < per_graph_cap; ++i) {
        for (std::size_t j = 0; j < pcs.size() && done < per_graph_cap; ++j) {
            if (pcs[i].multiplier == pcs[j].multiplier) continue;
            const Automorphism comm = commutator_aut(auts[i], auts[j]);
            if (equal_in_aut(comm, id)) continue;
            for (std::size_t k = 0; k < pcs.size() && done < per_graph_cap; ++k) {
                if (pcs[k].multiplier == pcs[i].multiplier ||
                    pcs[k].multiplier == pcs[j].multiplier)
                    continue;
                const Automorphism lhs = compose(auts[k], compose(comm, auts[k]));
                ctx.expect_out_equal(lhs, comm,
                                     pcs[k].name() + " [" + pcs[i].name() + "," + pcs[j].name() +
                                         "] " + pcs[k].name());
                ++done;
            }
        }
    }
}

inline void suite_derived_abelian(SuiteContext& ctx, std::size_t per_graph_cap = 3000) {
    const auto& g = ctx.g;
    const auto pcs = enumerate_partial_conjugations(g);
    std::vector<Automorphism> auts;
    for (const auto& pc : pcs) auts.push_back(to_automorphism(g, pc));
    const Automorphism id = Automorphism::identity(g);

    std::vector<std::pair<Automorphism, std::string>> comms;
    for (std::size_t i = 0; i < pcs.size(); ++i) {
        for (std::size_t j = 0; j < pcs.size(); ++j) {
            if (pcs[i].multiplier == pcs[j].multiplier) continue;
            Automorphism c = commutator_aut(auts[i], auts[j]);
            if (equal_in_aut(c, id)) continue;
            comms.emplace_back(std::move(c), "[" + pcs[i].name() + "," + pcs[j].name() + "]");
        }
    }
    std::size_t done = 0;
    for (std::size_t a = 0; a < comms.size() && done < per_graph_cap; ++a) {
        for (std::size_t b = a; b < comms.size() && done < per_graph_cap; ++b) {
            ctx.expect_out_equal(compose(comms[a].first, comms[b].first),
                                 compose(comms[b].first, comms[a].first),
                                 comms[a].second + " vs " + comms[b].second);
            ++done;
        }
    }
}

inline void suite_fsil_sep(SuiteContext& ctx) {
    const auto& g = ctx.g;
    const auto& names = g.vertex_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = i + 1; j < names.size(); ++j) {
            for (std::size_t k = 0; k < names.size(); ++k) {
                if (k == i || k == j) continue;
                if (!is_sil(g, names[i], names[j], names[k])) continue;
                if (!star_separates(g, names[k], names[i], names[j])) continue;
                ++ctx.rep.instances;
                const std::string tuple =
                    "x1=" + names[i] + " x2=" + names[j] + " x4=" + names[k];
                try {
                    (void)fsil_from_separating_star(g, names[i], names[j], names[k]);
                } catch (const LemmaViolation& e) {
                    ctx.fail(tuple, e.what());
                }
            }
        }
    }
}

inline void suite_sil_double_sep(SuiteContext& ctx) {
    const auto& g = ctx.g;
    const auto& names = g.vertex_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = i + 1; j < names.size(); ++j) {
            for (std::size_t k = 0; k < names.size(); ++k) {
                if (k == i || k == j) continue;
                if (g.adjacent(names[i], names[j]) || g.adjacent(names[i], names[k]) ||
                    g.adjacent(names[j], names[k]))
                    continue;
                if (!star_separates(g, names[i], names[j], names[k])) continue;
                if (!star_separates(g, names[j], names[i], names[k])) continue;
                ++ctx.rep.instances;
                const std::string tuple =
                    "x1=" + names[i] + " x2=" + names[j] + " x3=" + names[k];
                try {
                    (void)sil_from_double_separation(g, names[i], names[j], names[k]);
                } catch (const LemmaViolation& e) {
                    ctx.fail(tuple, e.what());
                }
            }
        }
    }
}

inline void suite_presentation_sound(SuiteContext& ctx) {
    const auto& g = ctx.g;
    const Presentation p = muehlherr_out0(g);
    const Automorphism id = Automorphism::identity(g);
    for (const auto& rel : p.relators) {
        Automorphism f = id;
        for (const GenPow& l : rel) {
            const auto& pc = *p.generators[static_cast<std::size_t>(l.gen)].pc;
            Automorphism step = to_automorphism(g, pc);
            const long long p_ord = g.order_of(pc.multiplier);
            const long long e = ((l.exp % p_ord) + p_ord) % p_ord;
            for (long long t = 0; t < e; ++t) f = compose(f, step);
        }
        ctx.expect_out_equal(f, id, "relator " + relator_to_text(p, rel));
    }
}

} // namespace oracle_detail

/// Runs one suite over a single graph, appending to the report.
inline void suite_on_graph(SuiteId id, const LabelledGraph& g, int bound,
                           VerificationReport& rep) {
    oracle_detail::SuiteContext ctx{g, bound, rep};
    switch (id) {
        case SuiteId::Noncommute: oracle_detail::suite_noncommute(ctx); break;
        case SuiteId::NoOverlap: oracle_detail::suite_no_overlap(ctx); break;
        case SuiteId::Stilfind: oracle_detail::suite_stilfind(ctx); break;
        case SuiteId::ConjTwo: oracle_detail::suite_conj_two(ctx); break;
        case SuiteId::Rewrite: oracle_detail::suite_rewrite(ctx); break;
        case SuiteId::ConjThree: oracle_detail::suite_conj_three(ctx); break;
        case SuiteId::DerivedAbelian: oracle_detail::suite_derived_abelian(ctx); break;
        case SuiteId::FsilSep: oracle_detail::suite_fsil_sep(ctx); break;
        case SuiteId::SilDoubleSep: oracle_detail::suite_sil_double_sep(ctx); break;
        case SuiteId::PresentationSound: oracle_detail::suite_presentation_sound(ctx); break;
    }
}

/// Samples graphs (rejection-filtered per suite) and runs the instance checks.
inline VerificationReport run_suite(SuiteId id, const GraphSampler& s, int trials, int bound) {
    VerificationReport rep;
    rep.suite = suite_name(id);
    Rng rng(s.seed);
    int attempts = 0;
    const int max_attempts = 100 * trials + 100;
    while (rep.graphs < trials && attempts < max_attempts) {
        ++attempts;
        const LabelledGraph g = sample_graph_stream(rng, s);
        if (!suite_filter(id, g)) continue;
        ++rep.graphs;
        suite_on_graph(id, g, bound, rep);
    }
    return rep;
}

inline VerificationReport run_suite(const std::string& name, const GraphSampler& s, int trials,
                                    int bound) {
    return run_suite(parse_suite(name), s, trials, bound);
}

/// Re-runs the graph stored in a failure record; replays are deterministic.
inline VerificationReport replay_failure(const FailureRecord& rec, int bound) {
    VerificationReport rep;
    rep.suite = rec.suite;
    const LabelledGraph g = parse_graph(rec.graph_text);
    rep.graphs = 1;
    suite_on_graph(parse_suite(rec.suite), g, bound, rep);
    return rep;
}

inline nlohmann::json to_json(const VerificationReport& rep) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : rep.failures)
        failures.push_back({{"suite", f.suite},
                            {"graph", f.graph_text},
                            {"tuple", f.tuple},
                            {"detail", f.detail}});
    return {{"suite", rep.suite},
            {"graphs", rep.graphs},
            {"instances", rep.instances},
            {"failures", failures},
            {"inconclusive", rep.inconclusive},
            {"inconclusive_notes", rep.inconclusive_notes}};
}

inline std::string report_table(const VerificationReport& rep) {
    std::ostringstream out;
    out << std::left << std::setw(20) << "suite" << std::right << std::setw(8) << "graphs"
        << std::setw(12) << "instances" << std::setw(10) << "failures" << std::setw(14)
        << "inconclusive" << "\n";
    out << std::left << std::setw(20) << rep.suite << std::right << std::setw(8) << rep.graphs
        << std::setw(12) << rep.instances << std::setw(10) << rep.failures.size()
        << std::setw(14) << rep.inconclusive << "\n";
    return out.str();
}

} // namespace coxout
