#ifndef UNIENERGY_FAMILIES_HPP
#define UNIENERGY_FAMILIES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "unienergy/charpoly.hpp"
#include "unienergy/graph.hpp"

namespace unienergy {

// Named parametric graph families used throughout.
//
//   A  : 4-cycle at one end of a caterpillar spine, a tooth on every other
//        spine vertex (n/2-2 teeth). Even n >= 6.
//   B  : A_{n-2} plus a 2-path hung on the cycle vertex opposite the spine.
//   D  : 4-cycle with pendants on two adjacent cycle vertices, caterpillar
//        tail (n/2-3 teeth) on a third.
//   E  : 4-cycle with pendants on three cycle vertices, stem-plus-caterpillar
//        tail (n/2-4 teeth) on the fourth; E_8 is the radialene on 8 vertices.
//   F  : comb tree, spine of n/2 with a tooth on each spine vertex.
//   H  : odd order; comb with one bare spine end (teeth on all but one
//        end vertex).
//   SRadialene : cycle of length n/2 with one pendant on every cycle vertex.
//   U1, U2     : girth-3 / girth-4 minimal-energy shapes of the
//                unrestricted-degree problem (2-path bundles at one vertex).
//   Cycle, Path, Star.
//   I1..I7     : the fixed small girth-4 graphs of orders 8,10,12,10,10,10,12.
enum class Family {
    A, B, D, E, F, H, SRadialene, U1, U2, Cycle, Path, Star,
    I1, I2, I3, I4, I5, I6, I7,
};

struct FamilySpec {
    Family name;
    int n;
};

const std::vector<std::pair<std::string, Family>>& family_names();
std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& s);

// Deterministic labeled construction; InvalidOrder when n violates the
// family's parity or minimum-order constraint.
LabeledGraph build(const FamilySpec& spec);

inline LabeledGraph build(Family f, int n) { return build(FamilySpec{f, n}); }

// Charpolys of A_n or D_n for all valid orders <= n_max via the two-term
// recurrence phi_n = (x^2-1) phi_{n-2} - x^2 phi_{n-4}, seeded at orders
// 6 and 8. Keys are the orders.
std::map<int, CharPoly> family_charpoly_table(Family name, int n_max);

}  // namespace unienergy

#endif
