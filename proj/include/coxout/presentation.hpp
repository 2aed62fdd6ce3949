#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include <coxout/automorphism.hpp>
#include <coxout/graph.hpp>
#include <coxout/sil.hpp>

namespace coxout {

/// One syllable g^e of a relator; e is any nonzero integer.
struct GenPow {
    int gen;
    long long exp;
    bool operator==(const GenPow& o) const { return gen == o.gen && exp == o.exp; }
    bool operator<(const GenPow& o) const { return gen != o.gen ? gen < o.gen : exp < o.exp; }
};

using RelWord = std::vector<GenPow>;

struct PresGenerator {
    std::string name;
    std::optional<PartialConjugation> pc; // the automorphism this name denotes, when known
};

struct Presentation {
    std::vector<PresGenerator> generators;
    std::vector<RelWord> relators;

    int index_of(const std::string& name) const {
        for (std::size_t i = 0; i < generators.size(); ++i)
            if (generators[i].name == name) return static_cast<int>(i);
        throw InputError("unknown generator '" + name + "'");
    }
    bool has_generator(const std::string& name) const {
        for (const auto& gsp : generators)
            if (gsp.name == name) return true;
        return false;
    }
};

namespace pres_detail {

/// Merge adjacent syllables of the same generator; drop zero exponents.
inline RelWord plain_reduce(RelWord r) {
    RelWord out;
    for (const GenPow& l : r) {
        if (l.exp == 0) continue;
        if (!out.empty() && out.back().gen == l.gen) {
            out.back().exp += l.exp;
            if (out.back().exp == 0) out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    if (out.size() != r.size()) return plain_reduce(std::move(out));
    return out;
}

/// Like plain_reduce, but exponents of generators with declared torsion t
/// are reduced into [1, t-1].
inline RelWord torsion_reduce(RelWord r, const std::map<int, long long>& torsion) {
    RelWord out;
    for (GenPow l : r) {
        auto it = torsion.find(l.gen);
        if (it != torsion.end()) l.exp = ((l.exp % it->second) + it->second) % it->second;
        if (l.exp == 0) continue;
        if (!out.empty() && out.back().gen == l.gen) {
            out.back().exp += l.exp;
            auto it2 = torsion.find(l.gen);
            if (it2 != torsion.end()) out.back().exp %= it2->second;
            if (out.back().exp == 0) out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    if (out.size() != r.size()) return torsion_reduce(std::move(out), torsion);
    return out;
}

inline RelWord rel_inverse(const RelWord& r) {
    RelWord out;
    for (auto it = r.rbegin(); it != r.rend(); ++it) out.push_back({it->gen, -it->exp});
    return out;
}

/// Canonical key for deduplication: cyclic merging, then the least rotation
/// of the word or its inverse.
inline RelWord cyclic_key(RelWord r, const std::map<int, long long>& torsion) {
    r = torsion_reduce(std::move(r), torsion);
    while (r.size() >= 2 && r.front().gen == r.back().gen) {
        r.front().exp += r.back().exp;
        r.pop_back();
        r = torsion_reduce(std::move(r), torsion);
    }
    if (r.empty()) return r;
    RelWord best = r;
    for (const RelWord& base : {r, torsion_reduce(rel_inverse(r), torsion)}) {
        const std::size_t n = base.size();
        for (std::size_t s = 0; s < n; ++s) {
            RelWord rot;
            for (std::size_t i = 0; i < n; ++i) rot.push_back(base[(s + i) % n]);
            if (rot < best) best = rot;
        }
    }
    return best;
}

inline long long occurrences_in(const RelWord& r, int gen) {
    long long n = 0;
    for (const GenPow& l : r)
        if (l.gen == gen) n += l.exp < 0 ? -l.exp : l.exp;
    return n;
}

} // namespace pres_detail

// ---------------------------------------------------------------------------
// The restricted presentation of Out^0: generators are all partial
// conjugations; relators are
//   (a) [chi^v_C, chi^w_D] = 1 whenever v,w are adjacent or
//       (C u {v}) n (D u {w}) is empty,
//   (b) the product of all partial conjugations with one multiplier is 1,
//   (c) (chi^v_C)^p(v) = 1.
// ---------------------------------------------------------------------------

inline Presentation muehlherr_out0(const LabelledGraph& g) {
    Presentation p;
    const auto pcs = enumerate_partial_conjugations(g);
    for (const auto& pc : pcs) p.generators.push_back({pc.name(), pc});

    const auto touched = [](const PartialConjugation& pc) {
        VertexSet s = pc.support;
        s.push_back(pc.multiplier);
        return vset_sorted(std::move(s));
    };
    for (std::size_t i = 0; i < pcs.size(); ++i) {
        for (std::size_t j = i + 1; j < pcs.size(); ++j) {
            const auto& a = pcs[i];
            const auto& b = pcs[j];
            bool commuting = a.multiplier != b.multiplier && g.adjacent(a.multiplier, b.multiplier);
            if (!commuting) {
                const VertexSet ta = touched(a);
                const VertexSet tb = touched(b);
                VertexSet inter;
                std::set_intersection(ta.begin(), ta.end(), tb.begin(), tb.end(),
                                      std::back_inserter(inter));
                commuting = inter.empty();
            }
            if (commuting)
                p.relators.push_back({{static_cast<int>(i), 1},
                                      {static_cast<int>(j), 1},
                                      {static_cast<int>(i), -1},
                                      {static_cast<int>(j), -1}});
        }
    }
    for (std::size_t i = 0; i < pcs.size();) {
        std::size_t j = i;
        RelWord prod;
        while (j < pcs.size() && pcs[j].multiplier == pcs[i].multiplier) {
            prod.push_back({static_cast<int>(j), 1});
            ++j;
        }
        p.relators.push_back(prod);
        i = j;
    }
    for (std::size_t i = 0; i < pcs.size(); ++i)
        p.relators.push_back({{static_cast<int>(i), g.order_of(pcs[i].multiplier)}});
    return p;
}

// ---------------------------------------------------------------------------
// Image of the factor map onto a no-edge STIL. The image's generating set
// always contains the three STIL automorphisms; chi^1_2 (with chi^1_3) joins
// when st(x1) separates x2 and x3, and chi^2_3 (with chi^2_1) when st(x2)
// separates x1 and x3. Three separations or a separating st(x4) mean the
// graph has an FSIL and the caller should take that route instead.
// ---------------------------------------------------------------------------

inline Presentation factor_image_presentation(const LabelledGraph& g, const StilWitness& stil) {
    if (stil.z_component.empty())
        throw InputError("factor_image_presentation: empty STIL component");
    const std::string x4 = stil.z_component.front();
    if (!is_stil(g, stil.x1, stil.x2, stil.x3, x4))
        throw InputError("factor_image_presentation: witness does not validate as a STIL");
    if (g.adjacent(stil.x1, stil.x2) || g.adjacent(stil.x1, stil.x3) ||
        g.adjacent(stil.x2, stil.x3))
        throw InputError(
            "factor_image_presentation: STIL triple spans an edge; that case factors through the "
            "one-edge graph instead");

    const std::vector<std::string> triple_in{stil.x1, stil.x2, stil.x3};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            if (star_separates(g, x4, triple_in[i], triple_in[j]))
                throw InputError("factor_image_presentation: st(" + x4 + ") separates " +
                                 triple_in[i] + " and " + triple_in[j] +
                                 ", which yields an FSIL; use the FSIL route");

    std::vector<std::string> seps, others;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& v = triple_in[i];
        const auto& a = triple_in[(i + 1) % 3];
        const auto& b = triple_in[(i + 2) % 3];
        (star_separates(g, v, a, b) ? seps : others).push_back(v);
    }
    std::sort(seps.begin(), seps.end());
    std::sort(others.begin(), others.end());
    if (seps.size() == 3)
        throw InputError(
            "factor_image_presentation: all three stars separate, which yields an FSIL; use the "
            "FSIL route");
    std::vector<std::string> x{seps};
    x.insert(x.end(), others.begin(), others.end()); // x[0], x[1], x[2] in role order
    const int mode = static_cast<int>(seps.size());  // 0, 1 or 2 extra generator pairs

    Presentation p;
    const auto gen = [&](const std::string& mult, const VertexSet& support) {
        PartialConjugation pc{mult, vset_sorted(support)};
        p.generators.push_back({pc.name(), pc});
        return static_cast<int>(p.generators.size()) - 1;
    };
    const auto comm = [&](int a, int b) {
        p.relators.push_back({{a, 1}, {b, 1}, {a, -1}, {b, -1}});
    };
    const auto square = [&](int a) { p.relators.push_back({{a, 2}}); };

    if (mode == 0) {
        const int c14 = gen(x[0], {x4});
        const int c1_23 = gen(x[0], {x[1], x[2]});
        const int c24 = gen(x[1], {x4});
        const int c2_13 = gen(x[1], {x[0], x[2]});
        const int c34 = gen(x[2], {x4});
        const int c3_12 = gen(x[2], {x[0], x[1]});
        p.relators.push_back({{c14, 1}, {c1_23, 1}});
        p.relators.push_back({{c24, 1}, {c2_13, 1}});
        p.relators.push_back({{c34, 1}, {c3_12, 1}});
        square(c14);
        square(c24);
        square(c34);
    } else if (mode == 1) {
        const int c14 = gen(x[0], {x4});
        const int c12 = gen(x[0], {x[1]});
        const int c13 = gen(x[0], {x[2]});
        const int c24 = gen(x[1], {x4});
        const int c2_13 = gen(x[1], {x[0], x[2]});
        const int c34 = gen(x[2], {x4});
        const int c3_12 = gen(x[2], {x[0], x[1]});
        p.relators.push_back({{c12, 1}, {c13, 1}, {c14, 1}});
        p.relators.push_back({{c24, 1}, {c2_13, 1}});
        p.relators.push_back({{c34, 1}, {c3_12, 1}});
        comm(c12, c34);
        comm(c13, c24);
        square(c14);
        square(c24);
        square(c34);
        square(c12);
    } else {
        const int c14 = gen(x[0], {x4});
        const int c12 = gen(x[0], {x[1]});
        const int c13 = gen(x[0], {x[2]});
        const int c24 = gen(x[1], {x4});
        const int c23 = gen(x[1], {x[2]});
        const int c21 = gen(x[1], {x[0]});
        const int c34 = gen(x[2], {x4});
        const int c3_12 = gen(x[2], {x[0], x[1]});
        p.relators.push_back({{c12, 1}, {c13, 1}, {c14, 1}});
        p.relators.push_back({{c24, 1}, {c23, 1}, {c21, 1}});
        p.relators.push_back({{c34, 1}, {c3_12, 1}});
        comm(c12, c34);
        comm(c13, c24);
        comm(c23, c14);
        comm(c21, c34);
        square(c14);
        square(c24);
        square(c34);
        square(c12);
        square(c23);
    }
    return p;
}

// ---------------------------------------------------------------------------
// Tietze engine: generator elimination, trivial-relator deletion, and
// torsion-aware free reduction, iterated to a fixpoint. Only eliminations
// are performed; no generators are ever added.
// ---------------------------------------------------------------------------

namespace pres_detail {

inline std::map<int, long long> torsion_of(const Presentation& p) {
    std::map<int, long long> t;
    for (const auto& r : p.relators) {
        const RelWord red = plain_reduce(r);
        if (red.size() == 1) {
            const long long e = red[0].exp < 0 ? -red[0].exp : red[0].exp;
            auto [it, fresh] = t.emplace(red[0].gen, e);
            if (!fresh) it->second = std::gcd(it->second, e);
        }
    }
    return t;
}

/// One canonicalization sweep: recompute torsion, reduce every relator,
/// replace power relators by the canonical g^t, drop empties, dedup.
inline bool canonicalize(Presentation& p) {
    const Presentation before = p;
    const auto torsion = torsion_of(p);
    std::vector<RelWord> out;
    std::vector<RelWord> seen_keys;
    std::vector<int> power_done;
    for (const auto& r : p.relators) {
        RelWord red = plain_reduce(r);
        if (red.size() == 1) {
            const int gsym = red[0].gen;
            const long long t = torsion.at(gsym);
            if (std::find(power_done.begin(), power_done.end(), gsym) != power_done.end())
                continue;
            power_done.push_back(gsym);
            if (t == 1)
                red = {{gsym, 1}}; // the generator is trivial; elimination removes it
            else
                red = {{gsym, t}};
            out.push_back(red);
            seen_keys.push_back(cyclic_key(red, torsion));
            continue;
        }
        red = torsion_reduce(std::move(red), torsion);
        if (red.empty()) continue;
        if (red.size() == 1) {
            // A longer relator collapsed to a power; keep it and let the next
            // sweep fold it into the torsion map.
            out.push_back(red);
            seen_keys.push_back(cyclic_key(red, torsion));
            continue;
        }
        const RelWord key = cyclic_key(red, torsion);
        if (std::find(seen_keys.begin(), seen_keys.end(), key) != seen_keys.end()) continue;
        seen_keys.push_back(key);
        out.push_back(std::move(red));
    }
    p.relators = std::move(out);
    return !(p.relators == before.relators);
}

inline void substitute(Presentation& p, int gen, const RelWord& replacement) {
    const RelWord inv = rel_inverse(replacement);
    for (auto& r : p.relators) {
        RelWord out;
        for (const GenPow& l : r) {
            if (l.gen != gen) {
                out.push_back(l);
                continue;
            }
            const RelWord& rep = l.exp > 0 ? replacement : inv;
            const long long count = l.exp > 0 ? l.exp : -l.exp;
            for (long long k = 0; k < count; ++k)
                out.insert(out.end(), rep.begin(), rep.end());
        }
        r = plain_reduce(std::move(out));
    }
}

inline void drop_generator(Presentation& p, int gen) {
    p.generators.erase(p.generators.begin() + gen);
    for (auto& r : p.relators)
        for (auto& l : r)
            if (l.gen > gen) --l.gen;
}

/// Find (relator, generator) with exactly one occurrence of the generator in
/// that relator. Preference: generators without declared torsion, then fewer
/// total occurrences, then lower index; shortest relator.
inline bool eliminate_one(Presentation& p) {
    const auto torsion = torsion_of(p);
    const int ngen = static_cast<int>(p.generators.size());
    std::vector<long long> total(static_cast<std::size_t>(ngen), 0);
    for (const auto& r : p.relators)
        for (int gsym = 0; gsym < ngen; ++gsym) total[static_cast<std::size_t>(gsym)] += occurrences_in(r, gsym);

    int best_gen = -1;
    std::size_t best_rel = 0;
    auto better = [&](int gsym, std::size_t rel) {
        if (best_gen < 0) return true;
        const bool at = torsion.count(gsym) > 0;
        const bool bt = torsion.count(best_gen) > 0;
        if (at != bt) return !at;
        if (total[static_cast<std::size_t>(gsym)] != total[static_cast<std::size_t>(best_gen)])
            return total[static_cast<std::size_t>(gsym)] < total[static_cast<std::size_t>(best_gen)];
        if (p.relators[rel].size() != p.relators[best_rel].size())
            return p.relators[rel].size() < p.relators[best_rel].size();
        return gsym < best_gen;
    };
    for (std::size_t ri = 0; ri < p.relators.size(); ++ri) {
        for (int gsym = 0; gsym < ngen; ++gsym) {
            if (occurrences_in(p.relators[ri], gsym) != 1) continue;
            if (better(gsym, ri)) {
                best_gen = gsym;
                best_rel = ri;
            }
        }
    }
    if (best_gen < 0) return false;

    const RelWord r = p.relators[best_rel];
    std::size_t pos = 0;
    while (r[pos].gen != best_gen || (r[pos].exp != 1 && r[pos].exp != -1)) ++pos;
    RelWord prefix(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos));
    RelWord suffix(r.begin() + static_cast<std::ptrdiff_t>(pos) + 1, r.end());
    // prefix g^(+-1) suffix = 1
    RelWord replacement;
    if (r[pos].exp == 1) {
        replacement = rel_inverse(prefix);
        const RelWord si = rel_inverse(suffix);
        replacement.insert(replacement.end(), si.begin(), si.end());
    } else {
        replacement = suffix;
        replacement.insert(replacement.end(), prefix.begin(), prefix.end());
    }
    replacement = plain_reduce(std::move(replacement));

    p.relators.erase(p.relators.begin() + static_cast<std::ptrdiff_t>(best_rel));
    substitute(p, best_gen, replacement);
    drop_generator(p, best_gen);
    return true;
}

} // namespace pres_detail

inline Presentation tietze_simplify(Presentation p) {
    bool changed = true;
    while (changed) {
        changed = pres_detail::canonicalize(p);
        if (pres_detail::eliminate_one(p)) changed = true;
    }
    return p;
}

/// Kill the named generators: their letters disappear from every relator, the
/// results are freely reduced, and empty relators are dropped.
inline Presentation quotient_by(const Presentation& p, const std::vector<std::string>& kill) {
    std::vector<int> kill_idx;
    for (const auto& name : kill) kill_idx.push_back(p.index_of(name));
    std::sort(kill_idx.begin(), kill_idx.end());
    kill_idx.erase(std::unique(kill_idx.begin(), kill_idx.end()), kill_idx.end());

    Presentation out;
    std::vector<int> remap(p.generators.size(), -1);
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
        if (std::binary_search(kill_idx.begin(), kill_idx.end(), static_cast<int>(i))) continue;
        remap[i] = static_cast<int>(out.generators.size());
        out.generators.push_back(p.generators[i]);
    }
    for (const auto& r : p.relators) {
        RelWord w;
        for (const GenPow& l : r)
            if (remap[static_cast<std::size_t>(l.gen)] >= 0)
                w.push_back({remap[static_cast<std::size_t>(l.gen)], l.exp});
        w = pres_detail::plain_reduce(std::move(w));
        if (!w.empty()) out.relators.push_back(std::move(w));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Form recognition for the two virtually free targets.
// ---------------------------------------------------------------------------

struct FormTag {
    enum class Kind { Z2FreeProductRank3, KleinFourStarZ2, Unrecognized };
    Kind kind;
    Presentation normalized;
};

inline std::string form_name(FormTag::Kind k) {
    switch (k) {
        case FormTag::Kind::Z2FreeProductRank3: return "Z2*Z2*Z2";
        case FormTag::Kind::KleinFourStarZ2: return "(Z2xZ2)*Z2";
        default: return "unrecognized";
    }
}

inline FormTag recognize_form(const Presentation& p) {
    FormTag tag{FormTag::Kind::Unrecognized, tietze_simplify(p)};
    const Presentation& q = tag.normalized;
    if (q.generators.size() != 3) return tag;
    const auto torsion = pres_detail::torsion_of(q);

    std::vector<long long> square_of(3, 0);
    int commutators = 0;
    std::pair<int, int> comm_pair{-1, -1};
    for (const auto& r : q.relators) {
        if (r.size() == 1) {
            if (r[0].exp == 2)
                ++square_of[static_cast<std::size_t>(r[0].gen)];
            else
                return tag;
            continue;
        }
        if (r.size() == 4 && r[0].gen == r[2].gen && r[1].gen == r[3].gen && r[0].gen != r[1].gen) {
            const auto zero_mod = [&](int gsym, long long e) {
                auto it = torsion.find(gsym);
                return it != torsion.end() ? e % it->second == 0 : e == 0;
            };
            if (zero_mod(r[0].gen, r[0].exp + r[2].exp) && zero_mod(r[1].gen, r[1].exp + r[3].exp)) {
                ++commutators;
                comm_pair = {r[0].gen, r[1].gen};
                continue;
            }
        }
        return tag;
    }
    if (square_of != std::vector<long long>{1, 1, 1}) return tag;
    if (commutators == 0)
        tag.kind = FormTag::Kind::Z2FreeProductRank3;
    else if (commutators == 1 && comm_pair.first != comm_pair.second)
        tag.kind = FormTag::Kind::KleinFourStarZ2;
    return tag;
}

// ---------------------------------------------------------------------------
// Text and JSON forms:
//   gen <name>
//   rel <name>[^exp] <name>[^exp] ...
// ---------------------------------------------------------------------------

inline std::string relator_to_text(const Presentation& p, const RelWord& r) {
    std::ostringstream out;
    bool first = true;
    for (const GenPow& l : r) {
        if (!first) out << ' ';
        first = false;
        out << p.generators[static_cast<std::size_t>(l.gen)].name;
        if (l.exp != 1) out << '^' << l.exp;
    }
    return out.str();
}

inline std::string presentation_to_text(const Presentation& p) {
    std::ostringstream out;
    for (const auto& gsp : p.generators) out << "gen " << gsp.name << "\n";
    for (const auto& r : p.relators) out << "rel " << relator_to_text(p, r) << "\n";
    return out.str();
}

inline Presentation parse_presentation(const std::string& text) {
    Presentation p;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        const std::string where = "line " + std::to_string(lineno) + ": ";
        if (tok == "gen") {
            std::string name;
            if (!(ls >> name)) throw InputError(where + "gen directive needs a name");
            if (p.has_generator(name)) throw InputError(where + "duplicate generator '" + name + "'");
            p.generators.push_back({name, std::nullopt});
        } else if (tok == "rel") {
            RelWord r;
            std::string t;
            while (ls >> t) {
                std::string name = t;
                long long exp = 1;
                const auto caret = t.find('^');
                if (caret != std::string::npos) {
                    name = t.substr(0, caret);
                    try {
                        exp = std::stoll(t.substr(caret + 1));
                    } catch (const std::exception&) {
                        throw InputError(where + "bad exponent in '" + t + "'");
                    }
                }
                if (exp != 0) r.push_back({p.index_of(name), exp});
            }
            p.relators.push_back(std::move(r));
        } else {
            throw InputError(where + "unknown directive '" + tok + "'");
        }
    }
    return p;
}

inline nlohmann::json to_json(const Presentation& p) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& gsp : p.generators) {
        nlohmann::json e{{"name", gsp.name}};
        if (gsp.pc)
            e["pc"] = {{"multiplier", gsp.pc->multiplier}, {"support", gsp.pc->support}};
        gens.push_back(e);
    }
    nlohmann::json rels = nlohmann::json::array();
    for (const auto& r : p.relators) rels.push_back(relator_to_text(p, r));
    return {{"generators", gens}, {"relators", rels}};
}

} // namespace coxout
