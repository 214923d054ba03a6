#include "unienergy/report_json.hpp"

#include <sstream>

namespace unienergy {

Json json_bigint(const BigInt& v) {
    static const BigInt lo = BigInt(std::numeric_limits<std::int64_t>::min());
    static const BigInt hi = BigInt(std::numeric_limits<std::int64_t>::max());
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();
}

Json json_sequence(const std::vector<BigInt>& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(json_bigint(x));
    return arr;
}

Json json_energy(const EnergyValue& e) {
    return Json{{"value", e.value},
                {"method", e.method == EnergyMethod::EigenSum ? "eigen" : "coulson"},
                {"err", e.err_estimate}};
}

Json json_charpoly_report(const LabeledGraph& g, const CharPoly& p) {
    Json out;
    out["n"] = g.n;
    out["edges"] = g.edge_count();
    out["a"] = json_sequence(p.a);
    Json b = Json::array();
    for (const auto& c : p.a) b.push_back(json_bigint(abs(c)));
    out["b"] = b;
    out["poly"] = p.to_string();
    return out;
}

Json json_compare_report(const OrderVerdict& v, const CoefficientSequence& b1,
                         const CoefficientSequence& b2, double e1, double e2) {
    Json out;
    out["relation"] = relation_name(v.relation);
    if (v.witness_index)
        out["witness_index"] = *v.witness_index;
    else
        out["witness_index"] = nullptr;
    if (v.conflict_index) out["conflict_index"] = *v.conflict_index;
    out["b1"] = json_sequence(b1.b);
    out["b2"] = json_sequence(b2.b);
    out["E1"] = e1;
    out["E2"] = e2;
    return out;
}

Json json_verification_report(const VerificationReport& r) {
    Json out;
    out["id"] = r.id;
    out["scope"] = r.scope;
    out["verdict"] = r.holds ? "holds" : "fails";
    out["flagged"] = r.flagged;
    out["counterexamples"] = r.counterexamples;
    out["details"] = r.details;
    return out;
}

Json json_enumeration_run(const EnumerationRun& run,
                          const std::vector<VerificationReport>& reports) {
    Json out;
    out["n"] = run.n;
    out["count"] = run.count();
    Json recs = Json::array();
    for (const auto& r : run.records) {
        Json jr;
        jr["key"] = r.key;
        jr["girth"] = r.girth;
        jr["d"] = r.d;
        jr["t"] = r.t;
        jr["b"] = json_sequence(r.b.b);
        jr["energy"] = r.energy;
        recs.push_back(std::move(jr));
    }
    out["records"] = std::move(recs);
    Json reps = Json::array();
    for (const auto& r : reports) reps.push_back(json_verification_report(r));
    out["reports"] = std::move(reps);
    return out;
}

std::string csv_enumeration_run(const EnumerationRun& run) {
    std::ostringstream os;
    os << "key,girth,d,t,energy,b\n";
    for (const auto& r : run.records) {
        os << r.key << "," << r.girth << "," << r.d << "," << r.t << "," << r.energy << ",";
        for (std::size_t i = 0; i < r.b.b.size(); ++i) {
            if (i) os << " ";
            os << r.b.b[i].str();
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace unienergy
