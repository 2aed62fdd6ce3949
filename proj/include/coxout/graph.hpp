#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include <coxout/errors.hpp>

namespace coxout {

/// A subset of the vertices of some LabelledGraph, kept sorted by identifier.
using VertexSet = std::vector<std::string>;

inline bool vset_contains(const VertexSet& s, const std::string& v) {
    return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet vset_sorted(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline bool is_prime_power(unsigned long long n) {
    if (n < 2) return false;
    for (unsigned long long f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            while (n % f == 0) n /= f;
            return n == 1;
        }
    }
    return true;
}

/// A finite simplicial graph with a prime-power order label p(v) >= 2 on each
/// vertex. Vertices are stored sorted by identifier, so a vertex index doubles
/// as its rank in the canonical order. Immutable after construction.
class LabelledGraph {
public:
    LabelledGraph() = default;

    LabelledGraph(std::vector<std::pair<std::string, long long>> vertices,
                  const std::vector<std::pair<std::string, std::string>>& edges) {
        std::sort(vertices.begin(), vertices.end());
        for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
            if (vertices[i].first == vertices[i + 1].first)
                throw InputError("duplicate vertex '" + vertices[i].first + "'");
        }
        names_.reserve(vertices.size());
        orders_.reserve(vertices.size());
        for (auto& [name, order] : vertices) {
            if (name.empty()) throw InputError("empty vertex name");
            if (order < 2 || !is_prime_power(static_cast<unsigned long long>(order)))
                throw InputError("vertex '" + name + "': order " + std::to_string(order) +
                                 " is not a prime power >= 2");
            names_.push_back(name);
            orders_.push_back(order);
        }
        const int n = static_cast<int>(names_.size());
        adj_.assign(n, std::vector<bool>(n, false));
        for (const auto& [a, b] : edges) {
            const int i = index_of(a);
            const int j = index_of(b);
            if (i == j) throw InputError("loop edge at vertex '" + a + "'");
            adj_[i][j] = adj_[j][i] = true;
        }
    }

    int size() const { return static_cast<int>(names_.size()); }

    const std::vector<std::string>& vertex_names() const { return names_; }

    bool has_vertex(const std::string& v) const {
        return std::binary_search(names_.begin(), names_.end(), v);
    }

    int index_of(const std::string& v) const {
        auto it = std::lower_bound(names_.begin(), names_.end(), v);
        if (it == names_.end() || *it != v)
            throw InputError("unknown vertex '" + v + "'");
        return static_cast<int>(it - names_.begin());
    }

    const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }

    long long order_of(int i) const { return orders_[static_cast<std::size_t>(i)]; }
    long long order_of(const std::string& v) const { return orders_[static_cast<std::size_t>(index_of(v))]; }

    bool adjacent(int i, int j) const { return adj_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    bool adjacent(const std::string& a, const std::string& b) const {
        return adjacent(index_of(a), index_of(b));
    }

    std::vector<int> neighbor_indices(int i) const {
        std::vector<int> out;
        for (int j = 0; j < size(); ++j)
            if (adj_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) out.push_back(j);
        return out;
    }

    std::vector<std::pair<std::string, std::string>> edge_list() const {
        std::vector<std::pair<std::string, std::string>> out;
        for (int i = 0; i < size(); ++i)
            for (int j = i + 1; j < size(); ++j)
                if (adjacent(i, j)) out.emplace_back(name(i), name(j));
        return out;
    }

    bool operator==(const LabelledGraph& o) const {
        return names_ == o.names_ && orders_ == o.orders_ && adj_ == o.adj_;
    }
    bool operator!=(const LabelledGraph& o) const { return !(*this == o); }

private:
    std::vector<std::string> names_;
    std::vector<long long> orders_;
    std::vector<std::vector<bool>> adj_;
};

inline void require_vertices(const LabelledGraph& g, const VertexSet& s) {
    for (const auto& v : s) (void)g.index_of(v);
}

/// Neighbors of v; v itself is never a member.
inline VertexSet link(const LabelledGraph& g, const std::string& v) {
    const int i = g.index_of(v);
    VertexSet out;
    for (int j : g.neighbor_indices(i)) out.push_back(g.name(j));
    return out;
}

/// link(v) together with v.
inline VertexSet star(const LabelledGraph& g, const std::string& v) {
    VertexSet out = link(g, v);
    out.push_back(v);
    return vset_sorted(std::move(out));
}

/// Connected components of the full subgraph on V(g) minus `removed`,
/// sorted by smallest member; each component sorted by identifier.
inline std::vector<VertexSet> components_avoiding(const LabelledGraph& g, const VertexSet& removed) {
    require_vertices(g, removed);
    const int n = g.size();
    std::vector<bool> gone(static_cast<std::size_t>(n), false);
    for (const auto& v : removed) gone[static_cast<std::size_t>(g.index_of(v))] = true;

    std::vector<VertexSet> comps;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int s = 0; s < n; ++s) {
        if (gone[static_cast<std::size_t>(s)] || seen[static_cast<std::size_t>(s)]) continue;
        VertexSet comp;
        std::vector<int> stack{s};
        seen[static_cast<std::size_t>(s)] = true;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            comp.push_back(g.name(u));
            for (int w = 0; w < n; ++w) {
                if (!g.adjacent(u, w) || gone[static_cast<std::size_t>(w)] || seen[static_cast<std::size_t>(w)])
                    continue;
                seen[static_cast<std::size_t>(w)] = true;
                stack.push_back(w);
            }
        }
        comps.push_back(vset_sorted(std::move(comp)));
    }
    // Scanning start vertices in identifier order already yields components
    // sorted by smallest member.
    return comps;
}

/// Induced subgraph on `keep`, labels restricted.
inline LabelledGraph full_subgraph(const LabelledGraph& g, const VertexSet& keep) {
    require_vertices(g, keep);
    VertexSet k = vset_sorted(keep);
    std::vector<std::pair<std::string, long long>> vs;
    for (const auto& v : k) vs.emplace_back(v, g.order_of(v));
    std::vector<std::pair<std::string, std::string>> es;
    for (std::size_t i = 0; i < k.size(); ++i)
        for (std::size_t j = i + 1; j < k.size(); ++j)
            if (g.adjacent(k[i], k[j])) es.emplace_back(k[i], k[j]);
    return LabelledGraph(std::move(vs), es);
}

/// Disjoint union of g1 and g2 plus every edge between them.
inline LabelledGraph join(const LabelledGraph& g1, const LabelledGraph& g2) {
    std::vector<std::pair<std::string, long long>> vs;
    for (const auto& v : g1.vertex_names()) vs.emplace_back(v, g1.order_of(v));
    for (const auto& v : g2.vertex_names()) {
        if (g1.has_vertex(v)) throw InputError("join: vertex '" + v + "' appears in both graphs");
        vs.emplace_back(v, g2.order_of(v));
    }
    std::vector<std::pair<std::string, std::string>> es = g1.edge_list();
    for (const auto& e : g2.edge_list()) es.push_back(e);
    for (const auto& a : g1.vertex_names())
        for (const auto& b : g2.vertex_names()) es.emplace_back(a, b);
    return LabelledGraph(std::move(vs), es);
}

inline bool is_connected(const LabelledGraph& g) {
    return components_avoiding(g, {}).size() <= 1;
}

// ---------------------------------------------------------------------------
// Input/output.
//
// Text format, one directive per line ('#' starts a comment):
//   vertex <name> [order <p>]     # order defaults to 2
//   edge <name> <name>
// The same data is accepted as JSON:
//   {"vertices": ["a", {"name": "b", "order": 3}], "edges": [["a","b"]]}
// ---------------------------------------------------------------------------

inline LabelledGraph parse_graph_text(const std::string& text) {
    std::vector<std::pair<std::string, long long>> vs;
    std::vector<std::pair<std::string, std::string>> es;
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
        if (tok == "vertex") {
            std::string name;
            if (!(ls >> name)) throw InputError(where + "vertex directive needs a name");
            long long order = 2;
            std::string kw;
            if (ls >> kw) {
                if (kw != "order") throw InputError(where + "expected 'order', got '" + kw + "'");
                if (!(ls >> order)) throw InputError(where + "order needs an integer");
            }
            if (ls >> kw) throw InputError(where + "trailing token '" + kw + "'");
            vs.emplace_back(name, order);
        } else if (tok == "edge") {
            std::string a, b;
            if (!(ls >> a >> b)) throw InputError(where + "edge directive needs two vertex names");
            std::string extra;
            if (ls >> extra) throw InputError(where + "trailing token '" + extra + "'");
            es.emplace_back(a, b);
        } else {
            throw InputError(where + "unknown directive '" + tok + "'");
        }
    }
    try {
        return LabelledGraph(std::move(vs), es);
    } catch (const InputError& e) {
        throw InputError(std::string("graph: ") + e.what());
    }
}

inline LabelledGraph parse_graph_json(const nlohmann::json& j) {
    std::vector<std::pair<std::string, long long>> vs;
    std::vector<std::pair<std::string, std::string>> es;
    if (!j.is_object()) throw InputError("graph json: expected an object");
    if (j.contains("vertices")) {
        for (const auto& v : j.at("vertices")) {
            if (v.is_string()) {
                vs.emplace_back(v.get<std::string>(), 2);
            } else if (v.is_object()) {
                std::string name;
                if (v.contains("name")) name = v.at("name").get<std::string>();
                else if (v.contains("vertex")) name = v.at("vertex").get<std::string>();
                else throw InputError("graph json: vertex object needs a 'name'");
                const long long order = v.value("order", 2LL);
                vs.emplace_back(name, order);
            } else {
                throw InputError("graph json: bad vertex entry");
            }
        }
    }
    if (j.contains("edges")) {
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw InputError("graph json: each edge must be a two-element array");
            es.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
        }
    }
    return LabelledGraph(std::move(vs), es);
}

/// Accepts either the text format or its JSON mirror.
inline LabelledGraph parse_graph(const std::string& input) {
    for (char c : input) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') {
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(input);
            } catch (const nlohmann::json::parse_error& e) {
                throw InputError(std::string("graph json: ") + e.what());
            }
            return parse_graph_json(j);
        }
        break;
    }
    return parse_graph_text(input);
}

inline std::string graph_to_text(const LabelledGraph& g) {
    std::ostringstream out;
    for (const auto& v : g.vertex_names()) {
        out << "vertex " << v;
        if (g.order_of(v) != 2) out << " order " << g.order_of(v);
        out << "\n";
    }
    for (const auto& [a, b] : g.edge_list()) out << "edge " << a << " " << b << "\n";
    return out.str();
}

inline nlohmann::json graph_to_json(const LabelledGraph& g) {
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : g.vertex_names())
        vs.push_back({{"name", v}, {"order", g.order_of(v)}});
    nlohmann::json es = nlohmann::json::array();
    for (const auto& [a, b] : g.edge_list()) es.push_back({a, b});
    return {{"vertices", vs}, {"edges", es}};
}

} // namespace coxout
