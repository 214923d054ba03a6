#include "unienergy/canonical.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <numeric>

namespace unienergy {

std::string CanonicalForm::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 15]);
    }
    return s;
}

namespace {

// ---- individualization-refinement minimal code ----

struct IRSearch {
    const LabeledGraph& g;
    int n;
    std::vector<std::uint8_t> best;
    bool have_best = false;

    explicit IRSearch(const LabeledGraph& g_) : g(g_), n(g_.n) {}

    // Stable 1-WL refinement of the coloring; colors renumbered 0..k-1 in
    // order of (old color, neighbor signature).
    void refine(std::vector<int>& color) const {
        while (true) {
            std::vector<std::pair<std::vector<int>, int>> sig(n);
            for (int v = 0; v < n; ++v) {
                std::vector<int> s;
                s.reserve(g.adj[v].size() + 1);
                s.push_back(color[v]);
                std::vector<int> nb;
                for (int w : g.adj[v]) nb.push_back(color[w]);
                std::sort(nb.begin(), nb.end());
                s.insert(s.end(), nb.begin(), nb.end());
                sig[v] = {std::move(s), v};
            }
            std::map<std::vector<int>, int> order;
            for (int v = 0; v < n; ++v) order.emplace(sig[v].first, 0);
            int next = 0;
            for (auto& [k, id] : order) id = next++;
            bool changed = false;
            for (int v = 0; v < n; ++v) {
                int c = order[sig[v].first];
                if (c != color[v]) changed = true;
                color[v] = c;
            }
            if (!changed) return;
        }
    }

    // First smallest cell with >= 2 vertices; -1 when discrete.
    int target_cell(const std::vector<int>& color, std::vector<int>& members) const {
        int maxc = 0;
        for (int v = 0; v < n; ++v) maxc = std::max(maxc, color[v]);
        std::vector<std::vector<int>> cells(maxc + 1);
        for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);
        int pick = -1;
        std::size_t best_size = ~std::size_t{0};
        for (int c = 0; c <= maxc; ++c) {
            if (cells[c].size() >= 2 && cells[c].size() < best_size) {
                best_size = cells[c].size();
                pick = c;
            }
        }
        if (pick < 0) return -1;
        members = cells[pick];
        return pick;
    }

    void emit_leaf(const std::vector<int>& color) {
        // Discrete coloring: vertex order = color order.
        std::vector<int> pos(n);
        for (int v = 0; v < n; ++v) pos[color[v]] = v;
        std::vector<std::uint8_t> code;
        code.push_back(static_cast<std::uint8_t>(n));
        std::uint8_t cur = 0;
        int nbits = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                cur = static_cast<std::uint8_t>(cur << 1 | (g.has_edge(pos[i], pos[j]) ? 1 : 0));
                if (++nbits == 8) {
                    code.push_back(cur);
                    cur = 0;
                    nbits = 0;
                }
            }
        if (nbits) code.push_back(static_cast<std::uint8_t>(cur << (8 - nbits)));
        if (!have_best || code < best) {
            best = std::move(code);
            have_best = true;
        }
    }

    void descend(std::vector<int> color) {
        refine(color);
        std::vector<int> members;
        if (target_cell(color, members) < 0) {
            emit_leaf(color);
            return;
        }
        for (int v : members) {
            auto child = color;
            // Individualize v: give it a color just below its cell, shift others up.
            for (int u = 0; u < n; ++u)
                if (child[u] >= color[v]) ++child[u];
            child[v] = color[v];
            descend(std::move(child));
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const LabeledGraph& g) {
    if (g.n > 24) throw Error(ErrorCode::SizeLimit, "canonical_form limited to n <= 24");
    if (g.n == 0) return CanonicalForm{{0}};

    std::vector<int> color(g.n, 0);
    // Seed colors: degree, plus distance-to-cycle when the graph is a
    // connected unicyclic graph (the common case here).
    std::vector<int> dist(g.n, 0);
    if (is_connected(g) && g.edge_count() == g.n) {
        auto w = girth_and_cycle(g);
        if (w) dist = distances_to_cycle(g, *w);
    }
    std::map<std::pair<int, int>, int> seed;
    for (int v = 0; v < g.n; ++v) seed.emplace(std::pair{g.degree(v), dist[v]}, 0);
    int next = 0;
    for (auto& [k, id] : seed) id = next++;
    for (int v = 0; v < g.n; ++v) color[v] = seed[{g.degree(v), dist[v]}];

    IRSearch s(g);
    s.descend(std::move(color));
    return CanonicalForm{std::move(s.best)};
}

namespace {

// Rooted subtree code, children codes sorted. Cycle vertices of a unicyclic
// component act as root parents and are excluded via the `blocked` flags.
std::string rooted_code(const LabeledGraph& g, int v, int parent, const std::vector<char>& blocked) {
    std::vector<std::string> kids;
    for (int w : g.adj[v])
        if (w != parent && !blocked[w]) kids.push_back(rooted_code(g, w, v, blocked));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    s += ")";
    return s;
}

std::string tree_component_key(const LabeledGraph& g, const std::vector<int>& comp) {
    // Center(s) by leaf stripping.
    if (comp.size() == 1) return "T()";
    std::vector<int> deg(g.n, 0), layer(g.n, -1);
    std::deque<int> q;
    for (int v : comp) deg[v] = g.degree(v);
    for (int v : comp)
        if (deg[v] <= 1) {
            q.push_back(v);
            layer[v] = 0;
        }
    std::vector<int> removal_order;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        removal_order.push_back(v);
        for (int w : g.adj[v])
            if (layer[w] < 0 && --deg[w] == 1) {
                layer[w] = layer[v] + 1;
                q.push_back(w);
            }
    }
    int top = layer[removal_order.back()];
    std::vector<int> centers;
    for (int v : comp)
        if (layer[v] == top) centers.push_back(v);

    std::vector<char> blocked(g.n, 0);
    if (centers.size() == 1) return "T" + rooted_code(g, centers[0], -1, blocked);
    // Two adjacent centers: combine the two halves order-insensitively.
    std::string a = rooted_code(g, centers[0], centers[1], blocked);
    std::string b = rooted_code(g, centers[1], centers[0], blocked);
    if (b < a) std::swap(a, b);
    return "T[" + a + b + "]";
}

std::string unicyclic_component_key(const LabeledGraph& g, const LabeledGraph& comp_graph,
                                    const std::vector<int>& comp) {
    auto w = girth_and_cycle(comp_graph);
    // Map back to original labels.
    std::vector<int> cyc;
    for (int c : w->cycle_vertices) cyc.push_back(comp[c]);
    int gsize = static_cast<int>(cyc.size());
    std::vector<char> blocked(g.n, 0);
    for (int v : cyc) blocked[v] = 1;
    std::vector<std::string> hang(gsize);
    for (int i = 0; i < gsize; ++i) hang[i] = rooted_code(g, cyc[i], -1, blocked);

    std::string best;
    for (int start = 0; start < gsize; ++start) {
        for (int dir : {1, -1}) {
            std::string cand = "C" + std::to_string(gsize) + ":";
            for (int k = 0; k < gsize; ++k) {
                int idx = ((start + dir * k) % gsize + gsize) % gsize;
                cand += hang[idx];
            }
            if (best.empty() || cand < best) best = std::move(cand);
        }
    }
    return best;
}

}  // namespace

std::string fragment_key(const LabeledGraph& g) {
    auto comps = connected_components(g);
    std::vector<std::string> keys;
    keys.reserve(comps.size());
    for (auto& comp : comps) {
        auto sub = induced_subgraph(g, comp);
        int m = sub.edge_count();
        if (m == sub.n - 1) {
            keys.push_back(tree_component_key(g, comp));
        } else if (m == sub.n) {
            keys.push_back(unicyclic_component_key(g, sub, comp));
        } else {
            throw Error(ErrorCode::UnsupportedStructure, "component with >= 2 independent cycles");
        }
    }
    std::sort(keys.begin(), keys.end());
    std::string out = "F" + std::to_string(g.n) + "|";
    for (auto& k : keys) out += k + ";";
    return out;
}

}  // namespace unienergy
