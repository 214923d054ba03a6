#include "unienergy/order.hpp"

#include <algorithm>

#include "unienergy/energy.hpp"

namespace unienergy {

std::string relation_name(Relation r) {
    switch (r) {
        case Relation::Equal: return "Equal";
        case Relation::DominatesWeakly: return "DominatesWeakly";
        case Relation::DominatesStrictly: return "DominatesStrictly";
        case Relation::DominatedWeakly: return "DominatedWeakly";
        case Relation::DominatedStrictly: return "DominatedStrictly";
        case Relation::Incomparable: return "Incomparable";
    }
    return "?";
}

OrderVerdict compare(const CoefficientSequence& s1, const CoefficientSequence& s2) {
    if (s1.b.size() != s2.b.size())
        throw Error(ErrorCode::LengthMismatch, "sequences of different order");
    int k = s1.order();
    if (k >= 0 && s1.b[0] != s2.b[0])
        throw Error(ErrorCode::PreconditionViolated, "b_0 must agree");
    if (k >= 1 && s1.b[1] != s2.b[1])
        throw Error(ErrorCode::PreconditionViolated, "b_1 must agree");

    std::optional<int> first_gt, first_lt;
    for (int i = 2; i <= k; ++i) {
        if (s1.b[i] > s2.b[i] && !first_gt) first_gt = i;
        if (s1.b[i] < s2.b[i] && !first_lt) first_lt = i;
    }
    if (first_gt && first_lt) return {Relation::Incomparable, first_gt, first_lt};
    if (first_gt) return {Relation::DominatesStrictly, first_gt, std::nullopt};
    if (first_lt) return {Relation::DominatedStrictly, first_lt, std::nullopt};
    return {Relation::Equal, std::nullopt, std::nullopt};
}

bool order_implies_energy(const OrderVerdict& v, const EnergyValue& e1, const EnergyValue& e2) {
    double tol = std::max(1e-9, e1.err_estimate + e2.err_estimate);
    switch (v.relation) {
        case Relation::Equal:
            return std::abs(e1.value - e2.value) <= tol;
        case Relation::DominatesStrictly:
            return e1.value > e2.value + tol;
        case Relation::DominatedStrictly:
            return e2.value > e1.value + tol;
        case Relation::DominatesWeakly:
            return e1.value >= e2.value - tol;
        case Relation::DominatedWeakly:
            return e2.value >= e1.value - tol;
        case Relation::Incomparable:
            return true;
    }
    return false;
}

}  // namespace unienergy
