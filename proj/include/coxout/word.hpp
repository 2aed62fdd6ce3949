#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <coxout/graph.hpp>

namespace coxout {

/// One syllable v^e with e in [1, p(v)-1].
struct Letter {
    int vertex;
    long long exp;

    bool operator==(const Letter& o) const { return vertex == o.vertex && exp == o.exp; }
    bool operator!=(const Letter& o) const { return !(*this == o); }
    bool operator<(const Letter& o) const {
        return vertex != o.vertex ? vertex < o.vertex : exp < o.exp;
    }
};

inline void require_same_graph(const LabelledGraph& a, const LabelledGraph& b) {
    if (&a == &b) return;
    if (a != b) throw InputError("words live over different graphs");
}

/// A word over the generators of G(Gamma, p): a sequence of syllables.
/// The referenced graph must outlive the word.
class Word {
public:
    explicit Word(const LabelledGraph& g) : graph_(&g) {}

    Word(const LabelledGraph& g, std::vector<Letter> letters) : graph_(&g), letters_(std::move(letters)) {
        for (const Letter& l : letters_) {
            if (l.vertex < 0 || l.vertex >= g.size())
                throw InputError("letter vertex index out of range");
            const long long p = g.order_of(l.vertex);
            if (l.exp < 1 || l.exp >= p)
                throw InputError("letter exponent out of range for vertex '" + g.name(l.vertex) + "'");
        }
    }

    /// Whitespace-separated `vertex[^exp]` tokens, e.g. "x c1^2 z".
    /// Exponents are reduced mod p(v); syllables that reduce to 0 vanish.
    static Word from_literal(const LabelledGraph& g, const std::string& s) {
        std::vector<Letter> letters;
        std::istringstream in(s);
        std::string tok;
        while (in >> tok) {
            std::string name = tok;
            long long exp = 1;
            const auto caret = tok.find('^');
            if (caret != std::string::npos) {
                name = tok.substr(0, caret);
                const std::string etext = tok.substr(caret + 1);
                try {
                    std::size_t used = 0;
                    exp = std::stoll(etext, &used);
                    if (used != etext.size()) throw std::invalid_argument(etext);
                } catch (const std::exception&) {
                    throw InputError("bad exponent in token '" + tok + "'");
                }
            }
            if (name.empty()) throw InputError("bad word token '" + tok + "'");
            const int v = g.index_of(name);
            const long long p = g.order_of(v);
            exp = ((exp % p) + p) % p;
            if (exp != 0) letters.push_back({v, exp});
        }
        return Word(g, std::move(letters));
    }

    const LabelledGraph& graph() const { return *graph_; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    std::string to_literal() const {
        std::ostringstream out;
        bool first = true;
        for (const Letter& l : letters_) {
            if (!first) out << ' ';
            first = false;
            out << graph_->name(l.vertex);
            if (l.exp != 1) out << '^' << l.exp;
        }
        return out.str();
    }

    bool operator==(const Word& o) const {
        require_same_graph(*graph_, *o.graph_);
        return letters_ == o.letters_;
    }
    bool operator!=(const Word& o) const { return !(*this == o); }
    bool operator<(const Word& o) const {
        return std::lexicographical_compare(letters_.begin(), letters_.end(),
                                            o.letters_.begin(), o.letters_.end());
    }

private:
    const LabelledGraph* graph_;
    std::vector<Letter> letters_;
};

// ---------------------------------------------------------------------------
// Normal form.
//
// Two rewriting moves generate equality in G(Gamma, p):
//   * merge syllables of the same vertex once everything between them
//     commutes with it (exponents add mod p, a zero syllable vanishes),
//   * swap adjacent syllables of distinct commuting vertices.
// Merging to a fixpoint yields a geodesic; all geodesics of an element form
// one shuffle class. The canonical representative is then built greedily:
// repeatedly extract the least letter that can shuffle to the front. Plain
// bubble passes would not do here -- directed adjacent swaps are not
// confluent on trace words (with a-b and b-c commuting but not a-c, the word
// "c a b" is a swap fixpoint yet "b c a" is smaller).
// ---------------------------------------------------------------------------

namespace detail {

inline void reduce(const LabelledGraph& g, std::vector<Letter>& w) {
    // Merge mergeable same-vertex pairs until the word is a geodesic.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < w.size() && !changed; ++i) {
            const int v = w[i].vertex;
            for (std::size_t j = i + 1; j < w.size(); ++j) {
                if (w[j].vertex == v) {
                    const long long p = g.order_of(v);
                    const long long e = (w[i].exp + w[j].exp) % p;
                    w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
                    if (e == 0)
                        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
                    else
                        w[i].exp = e;
                    changed = true;
                    break;
                }
                if (!g.adjacent(w[j].vertex, v)) break;
            }
        }
    }
    // Greedy minimal scheduling: a letter is available when every letter
    // before it commutes with it; available letters have distinct vertices.
    std::vector<Letter> out;
    out.reserve(w.size());
    while (!w.empty()) {
        std::size_t best = 0;
        bool found = false;
        for (std::size_t i = 0; i < w.size(); ++i) {
            bool available = true;
            for (std::size_t k = 0; k < i && available; ++k)
                available = w[k].vertex != w[i].vertex && g.adjacent(w[k].vertex, w[i].vertex);
            if (available && (!found || w[i].vertex < w[best].vertex)) {
                best = i;
                found = true;
            }
        }
        out.push_back(w[best]);
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(best));
    }
    w = std::move(out);
}

} // namespace detail

/// A canonical representative: shuffle-reduced, least in identifier order.
class NormalForm {
public:
    const Word& word() const { return word_; }
    operator const Word&() const { return word_; }

    const LabelledGraph& graph() const { return word_.graph(); }
    const std::vector<Letter>& letters() const { return word_.letters(); }
    std::size_t length() const { return word_.length(); }
    bool is_identity() const { return word_.empty(); }
    std::string to_literal() const { return word_.to_literal(); }

    bool operator==(const NormalForm& o) const { return word_ == o.word_; }
    bool operator!=(const NormalForm& o) const { return !(*this == o); }
    bool operator<(const NormalForm& o) const { return word_ < o.word_; }

private:
    explicit NormalForm(Word w) : word_(std::move(w)) {}
    friend NormalForm normalize(const Word& w);
    Word word_;
};

inline NormalForm normalize(const Word& w) {
    std::vector<Letter> letters = w.letters();
    detail::reduce(w.graph(), letters);
    return NormalForm(Word(w.graph(), std::move(letters)));
}

inline Word identity_word(const LabelledGraph& g) { return Word(g); }

inline Word concat(const Word& u, const Word& v) {
    require_same_graph(u.graph(), v.graph());
    std::vector<Letter> letters = u.letters();
    letters.insert(letters.end(), v.letters().begin(), v.letters().end());
    return Word(u.graph(), std::move(letters));
}

inline NormalForm multiply(const Word& u, const Word& v) { return normalize(concat(u, v)); }

/// Reversed sequence with exponents negated mod p.
inline NormalForm inverse(const Word& w) {
    const LabelledGraph& g = w.graph();
    std::vector<Letter> letters;
    letters.reserve(w.length());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
        letters.push_back({it->vertex, g.order_of(it->vertex) - it->exp});
    return normalize(Word(g, std::move(letters)));
}

/// [u, v] = u v u^-1 v^-1.
inline NormalForm commutator(const Word& u, const Word& v) {
    require_same_graph(u.graph(), v.graph());
    return multiply(concat(u, v), concat(inverse(u), inverse(v)));
}

inline NormalForm word_pow(const Word& w, long long k) {
    const LabelledGraph& g = w.graph();
    Word base = k < 0 ? Word(inverse(w).word()) : w;
    if (k < 0) k = -k;
    std::vector<Letter> letters;
    for (long long i = 0; i < k; ++i)
        letters.insert(letters.end(), base.letters().begin(), base.letters().end());
    return normalize(Word(g, std::move(letters)));
}

/// Deletes every syllable whose vertex lies outside `keep`, then normalizes.
/// This is the retraction G(Gamma) -> G(Gamma') onto a full subgraph.
inline NormalForm project(const Word& w, const VertexSet& keep) {
    const LabelledGraph& g = w.graph();
    require_vertices(g, keep);
    std::vector<Letter> letters;
    for (const Letter& l : w.letters())
        if (vset_contains(keep, g.name(l.vertex))) letters.push_back(l);
    return normalize(Word(g, std::move(letters)));
}

/// Vertices adjacent to every other vertex of g. For all p = 2 these generate
/// the center of the group.
inline VertexSet central_clique(const LabelledGraph& g) {
    VertexSet out;
    for (int i = 0; i < g.size(); ++i) {
        bool central = true;
        for (int j = 0; j < g.size(); ++j) {
            if (j != i && !g.adjacent(i, j)) {
                central = false;
                break;
            }
        }
        if (central) out.push_back(g.name(i));
    }
    return out;
}

} // namespace coxout
