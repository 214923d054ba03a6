#include "unienergy/transforms.hpp"

#include <algorithm>

namespace unienergy {

std::string surgery_name(SurgeryKind k) {
    switch (k) {
        case SurgeryKind::Egt: return "egt";
        case SurgeryKind::Op1: return "op1";
        case SurgeryKind::Op2: return "op2";
        case SurgeryKind::Op3: return "op3";
    }
    return "?";
}

namespace {

void require(bool cond, const std::string& clause) {
    if (!cond) throw Error(ErrorCode::PreconditionViolated, clause);
}

bool is_tree(const LabeledGraph& g) {
    return is_connected(g) && g.edge_count() == g.n - 1;
}

// Conjugated unicyclic with maximum degree 3 (the working class of the
// girth arguments), with its witness.
struct UnMembership {
    UnicyclicWitness witness;
    std::vector<int> dist;
};

UnMembership check_un(const LabeledGraph& g) {
    require(g.n % 2 == 0, "even order");
    require(is_connected(g), "connected");
    require(g.edge_count() == g.n, "unicyclic (n edges)");
    require(max_degree(g) <= 3, "maximum degree 3");
    require(has_perfect_matching(g).has_value(), "perfect matching");
    auto w = girth_and_cycle(g);
    UnMembership m{*w, distances_to_cycle(g, *w)};
    return m;
}

// Parent of an off-cycle vertex: the unique neighbor strictly closer to the
// cycle.
int toward_cycle(const LabeledGraph& g, const std::vector<int>& dist, int v) {
    for (int w : g.adj[v])
        if (dist[w] == dist[v] - 1) return w;
    return -1;
}

}  // namespace

LabeledGraph egt(const LabeledGraph& t, Edge e) {
    if (!is_tree(t)) throw Error(ErrorCode::NotATree, "edge-growing transformation acts on trees");
    Edge ne = make_edge(e.first, e.second);
    if (!t.has_edge(ne.first, ne.second)) throw Error(ErrorCode::InvalidGraph, "edge not present");
    int u = ne.first, v = ne.second;
    if (t.degree(u) == 1 || t.degree(v) == 1)
        throw Error(ErrorCode::PendantEdge, "edge-growing transformation needs a non-pendant edge");
    // Contract v into u; v's label becomes the new pendant on u.
    LabeledGraph out(t.n);
    for (auto [a, b] : t.edges) {
        if (make_edge(a, b) == ne) continue;
        int na = (a == v) ? u : a;
        int nb = (b == v) ? u : b;
        out.add_edge(na, nb);
    }
    out.add_edge(u, v);
    return out;
}

std::vector<SurgeryDescriptor> egt_anchors(const LabeledGraph& t) {
    std::vector<SurgeryDescriptor> out;
    if (!is_tree(t)) return out;
    for (auto [u, v] : t.edges)
        if (t.degree(u) > 1 && t.degree(v) > 1)
            out.push_back({SurgeryKind::Egt, {u, v}});
    return out;
}

LabeledGraph op1(const LabeledGraph& t, const SurgeryDescriptor& d) {
    require(d.kind == SurgeryKind::Op1 && d.anchors.size() == 4, "op1 anchors {x,y,z,w}");
    int x = d.anchors[0], y = d.anchors[1], z = d.anchors[2], w = d.anchors[3];
    if (!is_tree(t)) throw Error(ErrorCode::NotATree, "op1 acts on trees");
    require(t.degree(x) == 1 && t.adj[x][0] == y, "x is a leaf on y");
    require(t.degree(y) == 2, "y has degree 2");
    require(t.has_edge(y, z) && z != x, "z is y's other neighbor");
    require(t.has_edge(z, w) && w != y, "w is a neighbor of z");
    require(t.degree(w) == 2, "w has degree 2");
    LabeledGraph out = remove_edge(t, make_edge(x, y));
    out.add_edge(x, w);
    return out;
}

std::vector<SurgeryDescriptor> op1_anchors(const LabeledGraph& t) {
    std::vector<SurgeryDescriptor> out;
    if (!is_tree(t)) return out;
    for (int x = 0; x < t.n; ++x) {
        if (t.degree(x) != 1) continue;
        int y = t.adj[x][0];
        if (t.degree(y) != 2) continue;
        int z = t.adj[y][0] == x ? t.adj[y][1] : t.adj[y][0];
        for (int w : t.adj[z]) {
            if (w == y || t.degree(w) != 2) continue;
            out.push_back({SurgeryKind::Op1, {x, y, z, w}});
        }
    }
    return out;
}

LabeledGraph op2(const LabeledGraph& g, const SurgeryDescriptor& d) {
    require(d.kind == SurgeryKind::Op2 && d.anchors.size() == 5, "op2 anchors {x1,x2,x3,y1,y2}");
    int x1 = d.anchors[0], x2 = d.anchors[1], x3 = d.anchors[2];
    int y1 = d.anchors[3], y2 = d.anchors[4];
    auto m = check_un(g);
    require(m.witness.girth % 4 == 0, "girth divisible by 4");
    int depth = *std::max_element(m.dist.begin(), m.dist.end());
    require(depth >= 3, "d(G) >= 3");
    require(g.degree(x1) == 1 && m.dist[x1] == depth, "x1 a deepest leaf");
    require(g.degree(y1) == 1 && m.dist[y1] == depth && y1 != x1, "y1 a deepest leaf");
    require(toward_cycle(g, m.dist, x1) == x2 && g.degree(x2) == 2, "x2 the degree-2 parent of x1");
    require(toward_cycle(g, m.dist, y1) == y2 && g.degree(y2) == 2, "y2 the degree-2 parent of y1");
    require(y2 != x2, "distinct parent chains");
    require(toward_cycle(g, m.dist, x2) == x3 && toward_cycle(g, m.dist, y2) == x3,
            "chains merge at x3");
    LabeledGraph out = remove_edge(g, make_edge(x3, y2));
    out = remove_edge(out, make_edge(y2, y1));
    out.add_edge(y1, x1);
    out.add_edge(y2, x2);
    return out;
}

std::vector<SurgeryDescriptor> op2_anchors(const LabeledGraph& g) {
    std::vector<SurgeryDescriptor> out;
    UnMembership m;
    try {
        m = check_un(g);
    } catch (const Error&) {
        return out;
    }
    if (m.witness.girth % 4 != 0) return out;
    int depth = *std::max_element(m.dist.begin(), m.dist.end());
    if (depth < 3) return out;
    for (int x1 = 0; x1 < g.n; ++x1) {
        if (g.degree(x1) != 1 || m.dist[x1] != depth) continue;
        int x2 = toward_cycle(g, m.dist, x1);
        if (g.degree(x2) != 2) continue;
        int x3 = toward_cycle(g, m.dist, x2);
        for (int y1 = 0; y1 < g.n; ++y1) {
            if (y1 == x1 || g.degree(y1) != 1 || m.dist[y1] != depth) continue;
            int y2 = toward_cycle(g, m.dist, y1);
            if (y2 == x2 || g.degree(y2) != 2) continue;
            if (toward_cycle(g, m.dist, y2) != x3) continue;
            out.push_back({SurgeryKind::Op2, {x1, x2, x3, y1, y2}});
        }
    }
    return out;
}

LabeledGraph op3(const LabeledGraph& g, const SurgeryDescriptor& d) {
    require(d.kind == SurgeryKind::Op3 && d.anchors.size() == 6, "op3 anchors {x1,x2,x3,y1,y2,y3}");
    int x1 = d.anchors[0], x2 = d.anchors[1], x3 = d.anchors[2];
    int y1 = d.anchors[3], y2 = d.anchors[4], y3 = d.anchors[5];
    auto m = check_un(g);
    require(m.witness.girth % 4 == 0, "girth divisible by 4");
    int depth = *std::max_element(m.dist.begin(), m.dist.end());
    require(depth == 3, "d(G) = 3");
    require(g.degree(x1) == 1 && m.dist[x1] == 3, "x1 a depth-3 leaf");
    require(g.degree(y1) == 1 && m.dist[y1] == 3 && y1 != x1, "y1 a depth-3 leaf");
    require(toward_cycle(g, m.dist, x1) == x2 && g.degree(x2) == 2, "x2 the degree-2 parent of x1");
    require(toward_cycle(g, m.dist, x2) == x3 && g.degree(x3) == 2, "x3 has degree 2");
    require(toward_cycle(g, m.dist, y1) == y2 && g.degree(y2) == 2, "y2 the degree-2 parent of y1");
    require(toward_cycle(g, m.dist, y2) == y3 && g.degree(y3) == 2, "y3 has degree 2");
    int zx = toward_cycle(g, m.dist, x3);
    int zy = toward_cycle(g, m.dist, y3);
    require(zx != zy, "chains attach to distinct cycle vertices");
    LabeledGraph out = remove_edge(g, make_edge(y1, y2));
    out = remove_edge(out, make_edge(y2, y3));
    out.add_edge(y1, x1);
    out.add_edge(y2, x2);
    return out;
}

std::vector<SurgeryDescriptor> op3_anchors(const LabeledGraph& g) {
    std::vector<SurgeryDescriptor> out;
    UnMembership m;
    try {
        m = check_un(g);
    } catch (const Error&) {
        return out;
    }
    if (m.witness.girth % 4 != 0) return out;
    int depth = *std::max_element(m.dist.begin(), m.dist.end());
    if (depth != 3) return out;
    for (int x1 = 0; x1 < g.n; ++x1) {
        if (g.degree(x1) != 1 || m.dist[x1] != 3) continue;
        int x2 = toward_cycle(g, m.dist, x1);
        if (g.degree(x2) != 2) continue;
        int x3 = toward_cycle(g, m.dist, x2);
        if (g.degree(x3) != 2) continue;
        int zx = toward_cycle(g, m.dist, x3);
        for (int y1 = 0; y1 < g.n; ++y1) {
            if (y1 == x1 || g.degree(y1) != 1 || m.dist[y1] != 3) continue;
            int y2 = toward_cycle(g, m.dist, y1);
            if (g.degree(y2) != 2) continue;
            int y3 = toward_cycle(g, m.dist, y2);
            if (g.degree(y3) != 2) continue;
            if (toward_cycle(g, m.dist, y3) == zx) continue;
            out.push_back({SurgeryKind::Op3, {x1, x2, x3, y1, y2, y3}});
        }
    }
    return out;
}

LabeledGraph apply_surgery(const LabeledGraph& g, const SurgeryDescriptor& d) {
    switch (d.kind) {
        case SurgeryKind::Egt:
            return egt(g, make_edge(d.anchors.at(0), d.anchors.at(1)));
        case SurgeryKind::Op1: return op1(g, d);
        case SurgeryKind::Op2: return op2(g, d);
        case SurgeryKind::Op3: return op3(g, d);
    }
    throw Error(ErrorCode::PreconditionViolated, "unknown surgery");
}

std::vector<SurgeryDescriptor> find_anchors(const LabeledGraph& g, SurgeryKind kind) {
    switch (kind) {
        case SurgeryKind::Egt: return egt_anchors(g);
        case SurgeryKind::Op1: return op1_anchors(g);
        case SurgeryKind::Op2: return op2_anchors(g);
        case SurgeryKind::Op3: return op3_anchors(g);
    }
    return {};
}

}  // namespace unienergy
