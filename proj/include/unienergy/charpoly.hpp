#ifndef UNIENERGY_CHARPOLY_HPP
#define UNIENERGY_CHARPOLY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "unienergy/graph.hpp"

namespace unienergy {

using BigInt = boost::multiprecision::cpp_int;

// phi(G,x) = sum a_i x^(n-i), exact integer coefficients, a[0] = 1.
struct CharPoly {
    std::vector<BigInt> a;

    int order() const { return static_cast<int>(a.size()) - 1; }
    std::string to_string() const;  // human-readable polynomial in x
    std::complex<double> eval(std::complex<double> x) const;
};

bool operator==(const CharPoly& p, const CharPoly& q);

// b_i = |a_i|.
struct CoefficientSequence {
    std::vector<BigInt> b;

    int order() const { return static_cast<int>(b.size()) - 1; }
    // b_j with the convention b_j = 0 outside [0, order].
    BigInt at(int j) const {
        if (j < 0 || j > order()) return 0;
        return b[j];
    }
};

bool operator==(const CoefficientSequence& s, const CoefficientSequence& t);

// Exact determinant expansion of xI - A(G) over integer polynomials
// (division-free, memoized on column subsets). Oracle path; n <= 16.
CharPoly charpoly_det(const LabeledGraph& g);

// Deletion recurrences: pendant-edge reduction on trees, cycle-edge
// reduction on unicyclic components, component products. Memoized on
// fragment_key. Every component must be a tree or unicyclic.
CharPoly charpoly_recursive(const LabeledGraph& g);

// Shared memo table behind charpoly_recursive: concurrent insert-if-absent
// with LRU eviction under an approximate byte budget.
struct CharPolyCacheStats {
    std::size_t entries;
    std::size_t approx_bytes;
    std::size_t hits;
    std::size_t misses;
    std::size_t evictions;
};
CharPolyCacheStats charpoly_cache_stats();
void charpoly_cache_set_budget(std::size_t max_bytes);
void charpoly_cache_clear();

// b_i = |a_i| for the classes where the sign pattern is guaranteed:
// every component a tree or unicyclic with at most one non-bipartite
// component, or any bipartite graph (via the determinant oracle if some
// component has >= 2 independent cycles).
CoefficientSequence b_sequence(const LabeledGraph& g);

// Checks the coefficient deletion identity for edge e (cycle-edge or
// cut-edge variant chosen by the position of e), index by index.
bool b_deletion_identity_check(const LabeledGraph& g, Edge e);

// For forests: b_{2i} = number of i-matchings, by dynamic programming on
// rooted trees. Independent of the charpoly path.
CoefficientSequence matching_generating_sequence(const LabeledGraph& g);

}  // namespace unienergy

#endif
