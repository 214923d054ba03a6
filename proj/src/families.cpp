#include "unienergy/families.hpp"

#include <algorithm>

namespace unienergy {

const std::vector<std::pair<std::string, Family>>& family_names() {
    static const std::vector<std::pair<std::string, Family>> names = {
        {"A", Family::A},   {"B", Family::B},   {"D", Family::D},   {"E", Family::E},
        {"F", Family::F},   {"H", Family::H},   {"S", Family::SRadialene},
        {"U1", Family::U1}, {"U2", Family::U2}, {"C", Family::Cycle},
        {"P", Family::Path}, {"Star", Family::Star},
        {"I1", Family::I1}, {"I2", Family::I2}, {"I3", Family::I3}, {"I4", Family::I4},
        {"I5", Family::I5}, {"I6", Family::I6}, {"I7", Family::I7},
    };
    return names;
}

std::string family_name(Family f) {
    for (auto& [s, v] : family_names())
        if (v == f) return s;
    return "?";
}

std::optional<Family> family_from_name(const std::string& s) {
    for (auto& [name, v] : family_names())
        if (name == s) return v;
    return std::nullopt;
}

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw Error(ErrorCode::InvalidOrder, what);
}

// Caterpillar tail at `at`: spine s_1..s_k (s_1 adjacent to `at`), one tooth
// per spine vertex. Consumes 2k new vertices starting at `next`.
int add_comb_tail(LabeledGraph& g, int at, int teeth, int next) {
    int prev = at;
    for (int i = 0; i < teeth; ++i) {
        int spine = next++;
        int tooth = next++;
        g.add_edge(prev, spine);
        g.add_edge(spine, tooth);
        prev = spine;
    }
    return next;
}

// Stem vertex then a caterpillar tail hanging from it (the odd-comb shape).
int add_stem_comb_tail(LabeledGraph& g, int at, int teeth, int next) {
    int stem = next++;
    g.add_edge(at, stem);
    return add_comb_tail(g, stem, teeth, next);
}

LabeledGraph cycle_graph(int n) {
    LabeledGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

LabeledGraph build_A(int n) {
    require(n >= 6 && n % 2 == 0, "A_n needs even n >= 6");
    LabeledGraph g(n);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    add_comb_tail(g, 0, n / 2 - 2, 4);
    return g;
}

LabeledGraph build_B(int n) {
    require(n >= 8 && n % 2 == 0, "B_n needs even n >= 8");
    LabeledGraph g(n);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    int next = add_comb_tail(g, 0, n / 2 - 3, 4);
    add_comb_tail(g, 2, 1, next);  // 2-path on the opposite cycle vertex
    return g;
}

LabeledGraph build_D(int n) {
    require(n >= 6 && n % 2 == 0, "D_n needs even n >= 6");
    LabeledGraph g(n);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    g.add_edge(0, 4);  // pendants on adjacent cycle vertices
    g.add_edge(1, 5);
    add_comb_tail(g, 2, n / 2 - 3, 6);
    return g;
}

LabeledGraph build_E(int n) {
    require(n >= 8 && n % 2 == 0, "E_n needs even n >= 8");
    LabeledGraph g(n);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    g.add_edge(0, 4);
    g.add_edge(1, 5);
    g.add_edge(2, 6);
    add_stem_comb_tail(g, 3, n / 2 - 4, 7);
    return g;
}

LabeledGraph build_F(int n) {
    require(n >= 4 && n % 2 == 0, "F_n needs even n >= 4");
    LabeledGraph g(n);
    int spine = n / 2;
    for (int i = 1; i < spine; ++i) g.add_edge(i - 1, i);
    for (int i = 0; i < spine; ++i) g.add_edge(i, spine + i);
    return g;
}

LabeledGraph build_H(int m) {
    require(m >= 5 && m % 2 == 1, "H_m needs odd m >= 5");
    LabeledGraph g(m);
    int spine = (m + 1) / 2;
    for (int i = 1; i < spine; ++i) g.add_edge(i - 1, i);
    for (int i = 0; i < spine - 1; ++i) g.add_edge(i, spine + i);  // bare far end
    return g;
}

LabeledGraph build_radialene(int n) {
    require(n >= 6 && n % 2 == 0, "radialene needs even n >= 6");
    int c = n / 2;
    LabeledGraph g(n);
    for (int i = 0; i < c; ++i) g.add_edge(i, (i + 1) % c);
    for (int i = 0; i < c; ++i) g.add_edge(i, c + i);
    return g;
}

// The minimal-energy shape of the degree-unrestricted problem: a hub off
// one vertex of the 4-cycle carrying n/2-3 pendant 2-paths and one pendant
// edge. Exhaustive search over all conjugated unicyclic graphs confirms it
// is the unique energy minimizer at orders 8-12.
LabeledGraph build_U1(int n) {
    require(n >= 6 && n % 2 == 0, "U1 needs even n >= 6");
    LabeledGraph g(n);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    g.add_edge(0, 4);  // hub
    int next = 5;
    for (int i = 0; i < n / 2 - 3; ++i) {
        g.add_edge(4, next);
        g.add_edge(next, next + 1);
        next += 2;
    }
    g.add_edge(4, next);  // pendant on the hub
    return g;
}

// The runner-up candidate: a hub off one vertex of the triangle carrying
// n/2-2 pendant 2-paths.
LabeledGraph build_U2(int n) {
    require(n >= 8 && n % 2 == 0, "U2 needs even n >= 8");
    LabeledGraph g(n);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(0, 3);  // hub
    int next = 4;
    for (int i = 0; i < n / 2 - 2; ++i) {
        g.add_edge(3, next);
        g.add_edge(next, next + 1);
        next += 2;
    }
    return g;
}

LabeledGraph build_path(int n) {
    require(n >= 1, "path needs n >= 1");
    LabeledGraph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(i - 1, i);
    return g;
}

LabeledGraph build_star(int n) {
    require(n >= 1, "star needs n >= 1");
    LabeledGraph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(0, i);
    return g;
}

// The seven fixed girth-4 graphs. 2-paths and pendants hang on the cycle
// 0-1-2-3; I5..I7 carry the depth-3 chain 0-4-5-6 and the pendant 3-7.
LabeledGraph build_I(Family f, int n) {
    auto with_cycle = [](int order) {
        LabeledGraph g(order);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        g.add_edge(3, 0);
        return g;
    };
    auto two_path = [](LabeledGraph& g, int at, int next) {
        g.add_edge(at, next);
        g.add_edge(next, next + 1);
        return next + 2;
    };
    switch (f) {
        case Family::I1: {
            require(n == 8, "I1 has order 8");
            auto g = with_cycle(8);
            int next = two_path(g, 0, 4);
            two_path(g, 1, next);
            return g;
        }
        case Family::I2: {
            require(n == 10, "I2 has order 10");
            auto g = with_cycle(10);
            int next = two_path(g, 0, 4);
            next = two_path(g, 1, next);
            two_path(g, 2, next);
            return g;
        }
        case Family::I3: {
            require(n == 12, "I3 has order 12");
            auto g = with_cycle(12);
            int next = two_path(g, 0, 4);
            next = two_path(g, 1, next);
            next = two_path(g, 2, next);
            two_path(g, 3, next);
            return g;
        }
        case Family::I4: {
            require(n == 10, "I4 has order 10");
            auto g = with_cycle(10);
            g.add_edge(0, 4);
            g.add_edge(1, 5);
            int next = two_path(g, 2, 6);
            two_path(g, 3, next);
            return g;
        }
        case Family::I5: {
            require(n == 10, "I5 has order 10");
            auto g = with_cycle(10);
            g.add_edge(0, 4);
            g.add_edge(4, 5);
            g.add_edge(5, 6);
            g.add_edge(3, 7);
            two_path(g, 1, 8);
            return g;
        }
        case Family::I6: {
            require(n == 10, "I6 has order 10");
            auto g = with_cycle(10);
            g.add_edge(0, 4);
            g.add_edge(4, 5);
            g.add_edge(5, 6);
            g.add_edge(3, 7);
            two_path(g, 2, 8);
            return g;
        }
        case Family::I7: {
            require(n == 12, "I7 has order 12");
            auto g = with_cycle(12);
            g.add_edge(0, 4);
            g.add_edge(4, 5);
            g.add_edge(5, 6);
            g.add_edge(3, 7);
            int next = two_path(g, 1, 8);
            two_path(g, 2, next);
            return g;
        }
        default:
            throw Error(ErrorCode::InvalidOrder, "not a fixed graph family");
    }
}

}  // namespace

LabeledGraph build(const FamilySpec& spec) {
    switch (spec.name) {
        case Family::A: return build_A(spec.n);
        case Family::B: return build_B(spec.n);
        case Family::D: return build_D(spec.n);
        case Family::E: return build_E(spec.n);
        case Family::F: return build_F(spec.n);
        case Family::H: return build_H(spec.n);
        case Family::SRadialene: return build_radialene(spec.n);
        case Family::U1: return build_U1(spec.n);
        case Family::U2: return build_U2(spec.n);
        case Family::Cycle:
            require(spec.n >= 3, "cycle needs n >= 3");
            return cycle_graph(spec.n);
        case Family::Path: return build_path(spec.n);
        case Family::Star: return build_star(spec.n);
        default: return build_I(spec.name, spec.n);
    }
}

std::map<int, CharPoly> family_charpoly_table(Family name, int n_max) {
    if (name != Family::A && name != Family::D)
        throw Error(ErrorCode::InvalidOrder, "recurrence table covers the A and D families");
    if (n_max < 6) throw Error(ErrorCode::InvalidOrder, "table needs n_max >= 6");

    auto seed = [](std::initializer_list<long long> coeffs) {
        CharPoly p;
        for (long long c : coeffs) p.a.emplace_back(c);
        return p;
    };
    // phi at orders 6 and 8, leading coefficient first.
    CharPoly p6 = (name == Family::A) ? seed({1, 0, -6, 0, 6, 0, 0})
                                      : seed({1, 0, -6, 0, 5, 0, -1});
    CharPoly p8 = (name == Family::A) ? seed({1, 0, -8, 0, 16, 0, -6, 0, 0})
                                      : seed({1, 0, -8, 0, 15, 0, -8, 0, 1});

    std::map<int, CharPoly> out;
    out.emplace(6, p6);
    if (n_max >= 8) out.emplace(8, p8);
    for (int n = 10; n <= n_max; n += 2) {
        const CharPoly& f2 = out.at(n - 2);
        const CharPoly& f4 = out.at(n - 4);
        // (x^2 - 1) phi_{n-2} - x^2 phi_{n-4}; coefficients are in
        // descending powers, so multiplying by x^2 keeps indices and
        // extends the array.
        CharPoly next;
        next.a.assign(n + 1, BigInt(0));
        for (int i = 0; i <= n - 2; ++i) {
            next.a[i] += f2.a[i];       // x^2 * phi_{n-2}
            next.a[i + 2] -= f2.a[i];   // -1 * phi_{n-2}
        }
        for (int i = 0; i <= n - 4; ++i) next.a[i + 2] -= f4.a[i];  // -x^2 * phi_{n-4}
        out.emplace(n, std::move(next));
    }
    return out;
}

}  // namespace unienergy
