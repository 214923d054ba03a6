#ifndef UNIENERGY_ENUMERATE_HPP
#define UNIENERGY_ENUMERATE_HPP

#include <string>
#include <vector>

#include "unienergy/charpoly.hpp"
#include "unienergy/graph.hpp"

namespace unienergy {

// One isomorphism class of the working set: conjugated unicyclic, max
// degree 3, even order n.
struct EnumRecord {
    std::string key;  // fragment_key of the class
    LabeledGraph graph;
    int girth = 0;
    int d = 0;  // max distance to the cycle
    int t = 0;  // vertices attaining d
    CoefficientSequence b;
    double energy = 0.0;
};

struct EnumerationRun {
    int n = 0;
    std::vector<EnumRecord> records;  // sorted by key, pairwise non-isomorphic

    int count() const { return static_cast<int>(records.size()); }
};

struct EnumerateOptions {
    int max_n = 16;  // size budget
    int jobs = 0;    // 0: UNIENERGY_JOBS or 1
};

// All conjugated unicyclic graphs of even order n with max degree <= 3, up
// to isomorphism: for every girth, attach bounded-degree rooted forests to
// the cycle, reject duplicates by canonical key, filter by perfect matching.
EnumerationRun enumerate_Un(int n, const EnumerateOptions& opts = {});

// All trees of order n up to isomorphism (leaf-extension generation).
std::vector<LabeledGraph> all_trees(int n);

// All trees with max degree <= 3.
std::vector<LabeledGraph> all_trees_max_deg3(int n);

// Conjugated trees with max degree <= 3 (n even <= 18).
std::vector<LabeledGraph> enumerate_trees_conjugated(int n);

// Independent route to the same class list: every unicyclic graph arises as
// a tree plus one edge. Used to cross-check enumerate_Un for n <= 10.
std::vector<LabeledGraph> unicyclic_all_by_tree_plus_edge(int n);

struct VerificationReport {
    std::string id;
    std::string scope;
    bool holds = true;
    bool flagged = false;  // tie within tolerance resolved by exact comparison
    std::vector<std::string> counterexamples;
    std::string details;
};

// The unique energy minimizer over enumerate_Un(n) must be A_n, with
// separation > 1e-7 against every other class.
VerificationReport verify_main_theorem(int n, const EnumerateOptions& opts = {});

// Girth-partitioned dominance checks against the named families:
//   - girth not divisible by 4: energy above the radialene's
//   - girth divisible by 4, >= 8: b-dominates B_n strictly
//   - girth 4, per perfect matching with 2 / 1 / 0 cycle edges:
//     b-dominates A_n / D_n / E_n strictly (extremal graph excluded)
std::vector<VerificationReport> verify_girth_theorems(int n, const EnumerateOptions& opts = {});

}  // namespace unienergy

#endif
