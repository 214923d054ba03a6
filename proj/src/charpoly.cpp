#include "unienergy/charpoly.hpp"

#include <algorithm>
#include <cstdlib>
#include <list>
#include <mutex>
#include <unordered_map>

#include "unienergy/canonical.hpp"

namespace unienergy {

namespace {

// Dense integer polynomials, ascending powers: p[k] is the x^k coefficient.
using Poly = std::vector<BigInt>;

Poly poly_zero() { return {}; }
Poly poly_one() { return {BigInt(1)}; }

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void add_scaled(Poly& dst, const Poly& src, const BigInt& c, int shift = 0) {
    if (dst.size() < src.size() + shift) dst.resize(src.size() + shift);
    for (std::size_t i = 0; i < src.size(); ++i) dst[i + shift] += c * src[i];
}

Poly poly_mul(const Poly& p, const Poly& q) {
    if (p.empty() || q.empty()) return poly_zero();
    Poly r(p.size() + q.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
    }
    return r;
}

CharPoly to_charpoly(Poly asc, int n) {
    trim(asc);
    CharPoly cp;
    cp.a.assign(n + 1, BigInt(0));
    for (std::size_t k = 0; k < asc.size(); ++k) cp.a[n - static_cast<int>(k)] = asc[k];
    return cp;
}

}  // namespace

std::string CharPoly::to_string() const {
    int n = order();
    std::string s;
    for (int i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        BigInt c = a[i];
        if (s.empty()) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        BigInt ac = abs(c);
        int p = n - i;
        if (ac != 1 || p == 0) s += ac.str();
        if (p > 0) s += "x";
        if (p > 1) s += "^" + std::to_string(p);
    }
    return s.empty() ? "0" : s;
}

std::complex<double> CharPoly::eval(std::complex<double> x) const {
    std::complex<double> r = 0.0;
    for (const auto& c : a) r = r * x + c.convert_to<double>();
    return r;
}

bool operator==(const CharPoly& p, const CharPoly& q) { return p.a == q.a; }
bool operator==(const CoefficientSequence& s, const CoefficientSequence& t) { return s.b == t.b; }

// ---------------------------------------------------------------------------
// Determinant oracle
// ---------------------------------------------------------------------------

CharPoly charpoly_det(const LabeledGraph& g) {
    int n = g.n;
    if (n > 16) throw Error(ErrorCode::SizeLimit, "charpoly_det limited to n <= 16");
    if (n == 0) return CharPoly{{BigInt(1)}};

    // det over columns-subset masks: minor(mask) uses rows n-k..n-1 and the
    // columns in mask, k = popcount(mask). Entries of xI - A: diagonal x,
    // off-diagonal -1 where adjacent.
    std::vector<Poly> memo(std::size_t{1} << n);
    std::vector<char> have(std::size_t{1} << n, 0);
    memo[0] = poly_one();
    have[0] = 1;

    auto solve = [&](auto&& self, std::uint32_t mask) -> const Poly& {
        if (have[mask]) return memo[mask];
        int k = std::popcount(mask);
        int row = n - k;
        Poly acc;
        int pos = 0;
        for (std::uint32_t rest = mask; rest; rest &= rest - 1, ++pos) {
            int col = std::countr_zero(rest);
            const Poly& sub = self(self, mask & ~(std::uint32_t{1} << col));
            int sign = (pos % 2 == 0) ? 1 : -1;
            if (row == col) {
                add_scaled(acc, sub, BigInt(sign), 1);  // entry x
            } else if (g.has_edge(row, col)) {
                add_scaled(acc, sub, BigInt(-sign), 0);  // entry -1
            }
        }
        trim(acc);
        memo[mask] = std::move(acc);
        have[mask] = 1;
        return memo[mask];
    };

    Poly full = solve(solve, (n == 32) ? ~0u : ((std::uint32_t{1} << n) - 1));
    return to_charpoly(std::move(full), n);
}

// ---------------------------------------------------------------------------
// Deletion-recurrence path with shared memo
// ---------------------------------------------------------------------------

namespace {

struct PolyCache {
    struct Entry {
        Poly poly;
        std::list<std::string>::iterator lru_it;
        std::size_t cost;
    };

    std::mutex mu;
    std::unordered_map<std::string, Entry> map;
    std::list<std::string> lru;  // front = most recent
    std::size_t budget = default_budget();
    std::size_t bytes = 0;
    std::size_t hits = 0, misses = 0, evictions = 0;

    static std::size_t default_budget() {
        if (const char* s = std::getenv("UNIENERGY_MEMO_BUDGET")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(s, &end, 10);
            if (end != s && v > 0) return static_cast<std::size_t>(v);
        }
        return std::size_t{256} << 20;  // 256 MiB
    }

    static std::size_t entry_cost(const std::string& key, const Poly& p) {
        return key.size() + p.size() * 48 + 96;
    }

    bool lookup(const std::string& key, Poly& out) {
        std::lock_guard<std::mutex> lk(mu);
        auto it = map.find(key);
        if (it == map.end()) {
            ++misses;
            return false;
        }
        ++hits;
        lru.splice(lru.begin(), lru, it->second.lru_it);
        out = it->second.poly;
        return true;
    }

    void insert(const std::string& key, const Poly& p) {
        std::lock_guard<std::mutex> lk(mu);
        if (map.count(key)) return;  // another thread got here first
        lru.push_front(key);
        std::size_t cost = entry_cost(key, p);
        map.emplace(key, Entry{p, lru.begin(), cost});
        bytes += cost;
        while (bytes > budget && lru.size() > 1) {
            const std::string& victim = lru.back();
            auto vit = map.find(victim);
            bytes -= vit->second.cost;
            map.erase(vit);
            lru.pop_back();
            ++evictions;
        }
    }
};

PolyCache& cache() {
    static PolyCache c;
    return c;
}

// phi of a connected component, ascending coefficients.
Poly phi_connected(const LabeledGraph& g);

Poly phi_graph(const LabeledGraph& g) {
    if (g.n == 0) return poly_one();
    auto comps = connected_components(g);
    Poly acc = poly_one();
    for (auto& comp : comps) {
        LabeledGraph sub = induced_subgraph(g, comp);
        if (sub.n == 1) {
            acc = poly_mul(acc, Poly{BigInt(0), BigInt(1)});
            continue;
        }
        std::string key = fragment_key(sub);
        Poly part;
        if (!cache().lookup(key, part)) {
            part = phi_connected(sub);
            cache().insert(key, part);
        }
        acc = poly_mul(acc, part);
    }
    return acc;
}

Poly phi_connected(const LabeledGraph& g) {
    int n = g.n;
    int m = g.edge_count();
    if (n == 1) return Poly{BigInt(0), BigInt(1)};
    if (m > n) throw Error(ErrorCode::UnsupportedStructure, "component with >= 2 independent cycles");

    if (m == n) {
        // Unicyclic: reduce along a cycle edge uv. The only cycle through uv
        // is the unique cycle, so
        //   phi(G) = phi(G-uv) - phi(G-u-v) - 2 phi(G-C).
        auto w = girth_and_cycle(g);
        int u = w->cycle_vertices[0];
        int v = w->cycle_vertices[1];
        Poly p = phi_graph(remove_edge(g, make_edge(u, v)));
        Poly q = phi_graph(remove_vertices(g, {u, v}));
        Poly r = phi_graph(remove_vertices(g, w->cycle_vertices));
        add_scaled(p, q, BigInt(-1));
        add_scaled(p, r, BigInt(-2));
        trim(p);
        return p;
    }

    // Tree: pendant reduction phi(G) = x phi(G-u) - phi(G-u-v), u pendant.
    int u = -1;
    for (int i = 0; i < n; ++i)
        if (g.degree(i) == 1) { u = i; break; }
    int v = g.adj[u][0];
    Poly p = phi_graph(remove_vertices(g, {u}));
    Poly xp(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) xp[i + 1] = p[i];
    Poly q = phi_graph(remove_vertices(g, {u, v}));
    add_scaled(xp, q, BigInt(-1));
    trim(xp);
    return xp;
}

}  // namespace

CharPoly charpoly_recursive(const LabeledGraph& g) {
    return to_charpoly(phi_graph(g), g.n);
}

CharPolyCacheStats charpoly_cache_stats() {
    auto& c = cache();
    std::lock_guard<std::mutex> lk(c.mu);
    return {c.map.size(), c.bytes, c.hits, c.misses, c.evictions};
}

void charpoly_cache_set_budget(std::size_t max_bytes) {
    auto& c = cache();
    std::lock_guard<std::mutex> lk(c.mu);
    c.budget = max_bytes;
}

void charpoly_cache_clear() {
    auto& c = cache();
    std::lock_guard<std::mutex> lk(c.mu);
    c.map.clear();
    c.lru.clear();
    c.bytes = 0;
}

// ---------------------------------------------------------------------------
// b-sequences
// ---------------------------------------------------------------------------

namespace {

// Sign coherence of |a_i| requires every component to be a tree or
// unicyclic with at most one non-bipartite component, or a bipartite graph.
enum class BClass { SparseMix, BipartiteDense, Outside };

BClass classify_for_b(const LabeledGraph& g) {
    bool sparse = true;
    int odd_components = 0;
    for (auto& comp : connected_components(g)) {
        LabeledGraph sub = induced_subgraph(g, comp);
        if (sub.edge_count() > sub.n) {
            sparse = false;
            break;
        }
        if (!is_bipartite(sub)) ++odd_components;
    }
    if (sparse && odd_components <= 1) return BClass::SparseMix;
    if (is_bipartite(g)) return BClass::BipartiteDense;
    return BClass::Outside;
}

CoefficientSequence abs_coeffs(const CharPoly& p) {
    CoefficientSequence s;
    s.b.reserve(p.a.size());
    for (const auto& c : p.a) s.b.push_back(abs(c));
    return s;
}

}  // namespace

CoefficientSequence b_sequence(const LabeledGraph& g) {
    switch (classify_for_b(g)) {
        case BClass::SparseMix:
            return abs_coeffs(charpoly_recursive(g));
        case BClass::BipartiteDense:
            if (g.n > 16)
                throw Error(ErrorCode::SizeLimit, "bipartite multi-cycle b-sequence needs the n <= 16 oracle");
            return abs_coeffs(charpoly_det(g));
        case BClass::Outside:
            break;
    }
    throw Error(ErrorCode::OutOfClass, "b-sequence defined for unicyclic or bipartite graphs");
}

bool b_deletion_identity_check(const LabeledGraph& g, Edge e) {
    Edge ne = make_edge(e.first, e.second);
    if (!g.has_edge(ne.first, ne.second)) throw Error(ErrorCode::InvalidGraph, "edge not present");

    // Hypothesis: all components trees except at most one unicyclic.
    int unicyclic_components = 0;
    std::vector<int> cycle_comp;
    for (auto& comp : connected_components(g)) {
        LabeledGraph sub = induced_subgraph(g, comp);
        if (sub.edge_count() > sub.n)
            throw Error(ErrorCode::UnsupportedStructure, "component with >= 2 independent cycles");
        if (sub.edge_count() == sub.n) {
            ++unicyclic_components;
            cycle_comp = comp;
        }
    }
    if (unicyclic_components > 1)
        throw Error(ErrorCode::UnsupportedStructure, "more than one unicyclic component");

    CoefficientSequence bg = b_sequence(g);
    CoefficientSequence b_minus_edge = b_sequence(remove_edge(g, ne));
    CoefficientSequence b_minus_ends = b_sequence(remove_vertices(g, {ne.first, ne.second}));

    bool on_cycle = false;
    int girth = 0;
    std::vector<int> cycle;
    if (unicyclic_components == 1) {
        LabeledGraph sub = induced_subgraph(g, cycle_comp);
        auto w = girth_and_cycle(sub);
        girth = w->girth;
        for (int c : w->cycle_vertices) cycle.push_back(cycle_comp[c]);
        for (int i = 0; i < girth; ++i) {
            Edge ce = make_edge(cycle[i], cycle[(i + 1) % girth]);
            if (ce == ne) on_cycle = true;
        }
    }

    if (on_cycle) {
        CoefficientSequence b_minus_cycle = b_sequence(remove_vertices(g, cycle));
        int sign = (girth % 4 == 0) ? -1 : 1;
        for (int i = 0; i <= g.n; ++i) {
            BigInt rhs = b_minus_edge.at(i) + b_minus_ends.at(i - 2) +
                         BigInt(2 * sign) * b_minus_cycle.at(i - girth);
            if (bg.at(i) != rhs) return false;
        }
        return true;
    }

    // Cut edge.
    for (int i = 0; i <= g.n; ++i) {
        BigInt rhs = b_minus_edge.at(i) + b_minus_ends.at(i - 2);
        if (bg.at(i) != rhs) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Matching generating function on forests
// ---------------------------------------------------------------------------

namespace {

// Returns (unmatched, matched-at-root) polynomials in the edge count.
std::pair<Poly, Poly> match_dp(const LabeledGraph& g, int v, int parent) {
    Poly unmatched = poly_one();
    Poly matched = poly_zero();
    for (int w : g.adj[v]) {
        if (w == parent) continue;
        auto [cu, cm] = match_dp(g, w, v);
        Poly child_any = cu;
        add_scaled(child_any, cm, BigInt(1));
        // matched: either v already matched deeper times this child's any,
        // or v matches w now (child must have been unmatched, +1 edge).
        Poly nm = poly_mul(matched, child_any);
        add_scaled(nm, poly_mul(unmatched, cu), BigInt(1), 1);
        matched = std::move(nm);
        unmatched = poly_mul(unmatched, child_any);
    }
    trim(matched);
    return {std::move(unmatched), std::move(matched)};
}

}  // namespace

CoefficientSequence matching_generating_sequence(const LabeledGraph& g) {
    if (!is_forest(g)) throw Error(ErrorCode::NotAForest, "matching counts computed on forests only");
    Poly total = poly_one();
    for (auto& comp : connected_components(g)) {
        LabeledGraph sub = induced_subgraph(g, comp);
        auto [u, m] = match_dp(sub, 0, -1);
        add_scaled(u, m, BigInt(1));
        total = poly_mul(total, u);
    }
    CoefficientSequence s;
    s.b.assign(g.n + 1, BigInt(0));
    for (std::size_t k = 0; k < total.size(); ++k) s.b[2 * k] = total[k];
    return s;
}

}  // namespace unienergy
