#ifndef UNIENERGY_REPORT_JSON_HPP
#define UNIENERGY_REPORT_JSON_HPP

#include <json.hpp>

#include "unienergy/charpoly.hpp"
#include "unienergy/energy.hpp"
#include "unienergy/enumerate.hpp"
#include "unienergy/order.hpp"

namespace unienergy {

using Json = nlohmann::json;

// Exact integers as JSON numbers when they fit 64 bits, decimal strings
// beyond that.
Json json_bigint(const BigInt& v);
Json json_sequence(const std::vector<BigInt>& v);

Json json_energy(const EnergyValue& e);
Json json_charpoly_report(const LabeledGraph& g, const CharPoly& p);
Json json_compare_report(const OrderVerdict& v, const CoefficientSequence& b1,
                         const CoefficientSequence& b2, double e1, double e2);
Json json_enumeration_run(const EnumerationRun& run,
                          const std::vector<VerificationReport>& reports);
Json json_verification_report(const VerificationReport& r);

std::string csv_enumeration_run(const EnumerationRun& run);

}  // namespace unienergy

#endif
