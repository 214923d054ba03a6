#ifndef UNIENERGY_CANONICAL_HPP
#define UNIENERGY_CANONICAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "unienergy/graph.hpp"

namespace unienergy {

// Relabeling-invariant key: equal bytes iff the graphs are isomorphic.
struct CanonicalForm {
    std::vector<std::uint8_t> bytes;

    auto operator<=>(const CanonicalForm&) const = default;
    std::string hex() const;
};

// Minimal adjacency code over an individualization-refinement search tree,
// seeded by degree / distance-to-cycle colors. Any graph, n <= 24.
CanonicalForm canonical_form(const LabeledGraph& g);

// Canonical string for graphs whose components are trees or unicyclic
// (rooted-subtree encodings; cycle components minimized over rotation and
// reflection). No size limit; used as the charpoly memo key and by the
// generators. Throws UnsupportedStructure on a component with >= 2 cycles.
std::string fragment_key(const LabeledGraph& g);

}  // namespace unienergy

#endif
