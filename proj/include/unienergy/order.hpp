#ifndef UNIENERGY_ORDER_HPP
#define UNIENERGY_ORDER_HPP

#include <optional>
#include <string>

#include "unienergy/charpoly.hpp"

namespace unienergy {

// Quasi-order on coefficient sequences: s1 >= s2 iff b_i(s1) >= b_i(s2) for
// every i, strict when some index is strict. Comparing two concrete
// sequences yields Equal, a strict verdict, or Incomparable; the weak
// values name the reflexive relations for callers that only need >=.
enum class Relation {
    Equal,
    DominatesWeakly,
    DominatesStrictly,
    DominatedWeakly,
    DominatedStrictly,
    Incomparable,
};

std::string relation_name(Relation r);

struct OrderVerdict {
    Relation relation;
    // First strict index in the winning direction; for Incomparable, the
    // first index where s1 > s2.
    std::optional<int> witness_index;
    // For Incomparable, the first index where s1 < s2.
    std::optional<int> conflict_index;
};

// Throws LengthMismatch on different orders; PreconditionViolated if the
// forced indices 0 and 1 disagree.
OrderVerdict compare(const CoefficientSequence& s1, const CoefficientSequence& s2);

struct EnergyValue;  // energy.hpp

// True iff the energy pair is consistent with the verdict: strict dominance
// must come with strictly larger energy beyond the combined error bound,
// Equal with equal energies, Incomparable implies nothing.
bool order_implies_energy(const OrderVerdict& v, const EnergyValue& e1, const EnergyValue& e2);

}  // namespace unienergy

#endif
