// Command-line front end: exact characteristic polynomials, graph energy,
// quasi-order comparisons, family constructions, surgeries, exhaustive
// enumeration, and the consolidated verification runner.
//
// Exit codes: 0 success, 1 verification counterexample, 2 usage/input error.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <limits>

#include "unienergy/canonical.hpp"
#include "unienergy/charpoly.hpp"
#include "unienergy/energy.hpp"
#include "unienergy/enumerate.hpp"
#include "unienergy/families.hpp"
#include "unienergy/graph_io.hpp"
#include "unienergy/order.hpp"
#include "unienergy/report_json.hpp"
#include "unienergy/transforms.hpp"

using namespace unienergy;

namespace {

constexpr const char* kSchemaVersion = "unienergy-report-v1";

struct RunConfig {
    double tolerance = default_energy_tolerance();
    int size_budget = 16;
    int max_n = 12;
    int jobs = 0;
    bool json = false;
    bool csv = false;
    std::string out_dir;
};

LabeledGraph resolve_graph(const std::string& file, const std::string& family, int n) {
    if (!family.empty()) {
        auto f = family_from_name(family);
        if (!f) throw Error(ErrorCode::ParseError, "unknown family " + family);
        return build(*f, n);
    }
    if (file.empty()) throw Error(ErrorCode::ParseError, "need a graph file or --family");
    return load_graph(file);
}

void emit(const Json& j, const RunConfig& cfg) {
    if (cfg.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

int cmd_charpoly(const std::string& file, const RunConfig& cfg) {
    LabeledGraph g = load_graph(file);
    CharPoly p = charpoly_recursive(g);
    Json rep = json_charpoly_report(g, p);
    if (cfg.csv) {
        std::cout << "i,a_i,b_i\n";
        for (int i = 0; i <= p.order(); ++i)
            std::cout << i << "," << p.a[i].str() << "," << BigInt(abs(p.a[i])).str() << "\n";
        return 0;
    }
    emit(rep, cfg);
    return 0;
}

int cmd_energy(const std::string& file, const std::string& family, int n,
               const std::string& method, const RunConfig& cfg) {
    LabeledGraph g = resolve_graph(file, family, n);
    if (method == "eig") {
        emit(json_energy(energy_eigen(g)), cfg);
    } else if (method == "coulson") {
        emit(json_energy(energy_coulson(g, cfg.tolerance)), cfg);
    } else {
        EnergyValue a = energy_eigen(g);
        EnergyValue b = energy_coulson(g, cfg.tolerance);
        Json rep{{"value", a.value},
                 {"method", "both"},
                 {"err", a.err_estimate + b.err_estimate},
                 {"eigen", json_energy(a)},
                 {"coulson", json_energy(b)},
                 {"difference", a.value - b.value}};
        emit(rep, cfg);
    }
    return 0;
}

int cmd_compare(const std::string& f1, const std::string& f2, const RunConfig& cfg) {
    LabeledGraph g1 = load_graph(f1);
    LabeledGraph g2 = load_graph(f2);
    auto b1 = b_sequence(g1);
    auto b2 = b_sequence(g2);
    auto v = compare(b1, b2);
    double e1 = energy_eigen(g1).value;
    double e2 = energy_eigen(g2).value;
    emit(json_compare_report(v, b1, b2, e1, e2), cfg);
    return 0;
}

int cmd_family(const std::string& name, int n, const std::string& what, const RunConfig& cfg) {
    auto f = family_from_name(name);
    if (!f) throw Error(ErrorCode::ParseError, "unknown family " + name);
    LabeledGraph g = build(*f, n);
    if (what == "graph") {
        std::cout << write_graph_text(g) << "\n";
    } else if (what == "charpoly") {
        emit(json_charpoly_report(g, charpoly_recursive(g)), cfg);
    } else {
        Json rep{{"family", name}, {"n", n}, {"energy", json_energy(energy_eigen(g))}};
        emit(rep, cfg);
    }
    return 0;
}

int cmd_transform(const std::string& file, const std::string& kind_name, bool list, int apply_k,
                  const RunConfig& cfg) {
    LabeledGraph g = load_graph(file);
    SurgeryKind kind;
    if (kind_name == "egt") kind = SurgeryKind::Egt;
    else if (kind_name == "op1") kind = SurgeryKind::Op1;
    else if (kind_name == "op2") kind = SurgeryKind::Op2;
    else if (kind_name == "op3") kind = SurgeryKind::Op3;
    else throw Error(ErrorCode::ParseError, "unknown surgery kind " + kind_name);

    auto anchors = find_anchors(g, kind);
    if (list || apply_k < 0) {
        Json arr = Json::array();
        for (const auto& a : anchors) arr.push_back(a.anchors);
        emit(Json{{"kind", kind_name}, {"anchors", arr}}, cfg);
        return 0;
    }
    if (apply_k >= static_cast<int>(anchors.size()))
        throw Error(ErrorCode::ParseError, "anchor index out of range");
    LabeledGraph out = apply_surgery(g, anchors[apply_k]);
    std::cout << write_graph_text(out) << "\n";
    return 0;
}

int cmd_enumerate(int n, const std::string& verify, const RunConfig& cfg) {
    EnumerateOptions opts;
    opts.max_n = std::max(cfg.size_budget, n);
    opts.jobs = cfg.jobs;
    EnumerationRun run = enumerate_Un(n, opts);
    std::vector<VerificationReport> reports;
    bool failed = false;
    if (verify == "main" || verify == "all") {
        reports.push_back(verify_main_theorem(n, opts));
        failed = failed || !reports.back().holds;
    }
    if (verify == "girth" || verify == "all") {
        for (auto& r : verify_girth_theorems(n, opts)) {
            failed = failed || !r.holds;
            reports.push_back(std::move(r));
        }
    }
    Json rep = json_enumeration_run(run, reports);
    rep["schema_version"] = kSchemaVersion;
    if (!cfg.out_dir.empty()) {
        std::filesystem::create_directories(cfg.out_dir);
        std::string path = cfg.out_dir + "/un_" + std::to_string(n) + ".json";
        std::ofstream out(path);
        out << rep.dump(2) << "\n";
        std::cout << "wrote " << path << "\n";
        if (cfg.csv) {
            std::string cpath = cfg.out_dir + "/un_" + std::to_string(n) + ".csv";
            std::ofstream cout_(cpath);
            cout_ << csv_enumeration_run(run);
            std::cout << "wrote " << cpath << "\n";
        }
    } else if (cfg.csv) {
        std::cout << csv_enumeration_run(run);
    } else {
        emit(rep, cfg);
    }
    return failed ? 1 : 0;
}

// The composite verification runner: recurrence identities, the printed
// polynomials, quasi-order dominance at scale, the energy comparison, and
// the exhaustive enumeration checks.
int cmd_verify(const RunConfig& cfg) {
    std::vector<VerificationReport> reports;
    auto push = [&reports](std::string id, std::string scope, bool ok, std::string details = "") {
        VerificationReport r;
        r.id = std::move(id);
        r.scope = std::move(scope);
        r.holds = ok;
        r.details = std::move(details);
        reports.push_back(std::move(r));
    };

    auto bseq = [](Family f, int n) { return b_sequence(build(f, n)); };
    auto shifted_at = [](const CoefficientSequence& s, int idx) { return s.at(idx); };
    (void)shifted_at;

    // Coefficient recurrences among the families.
    {
        bool ok = true;
        for (int n = 8; n <= 40; n += 2) {
            auto bA = bseq(Family::A, n);
            auto bF = bseq(Family::F, n);
            auto bF2 = bseq(Family::F, n - 2);
            auto bF4 = n - 4 >= 4 ? bseq(Family::F, n - 4) : b_sequence(build(Family::Path, 2));
            auto bH1 = bseq(Family::H, n - 1);
            auto bH3 = bseq(Family::H, n - 3);
            for (int i = 0; 2 * i <= n; ++i) {
                BigInt lhs = bA.at(2 * i);
                if (lhs != bF.at(2 * i) + bF2.at(2 * i - 2) - 2 * bF4.at(2 * i - 4)) ok = false;
                if (lhs != bH1.at(2 * i) + 2 * bH3.at(2 * i - 2)) ok = false;
            }
        }
        push("coefficients-A-via-F-and-H", "even n in [8,40]", ok);
    }
    {
        bool ok = true;
        for (int n = 10; n <= 40; n += 2) {
            auto bB = bseq(Family::B, n);
            auto bA = bseq(Family::A, n);
            CoefficientSequence bF8;
            if (n - 8 >= 4) bF8 = bseq(Family::F, n - 8);
            else bF8 = b_sequence(build(Family::Path, 2));  // comb with one tooth
            for (int i = 0; 2 * i <= n; ++i)
                if (bB.at(2 * i) != bA.at(2 * i) + 2 * bF8.at(2 * i - 6)) ok = false;
        }
        push("coefficients-B-via-A-and-F", "even n in [10,40]", ok);
    }
    {
        // Three-term tail recurrences; the order-4 and order-6 seeds of the
        // A/B chains are the plain cycle and A_6.
        auto seq = [&](Family f, int n) -> CoefficientSequence {
            if (f == Family::A && n == 4) return b_sequence(build(Family::Cycle, 4));
            if (f == Family::B && n == 6) return bseq(Family::A, 6);
            return bseq(f, n);
        };
        bool ok = true;
        for (auto [fam, lo] : std::vector<std::pair<Family, int>>{
                 {Family::A, 8}, {Family::B, 10}, {Family::D, 10}, {Family::E, 12}}) {
            for (int n = lo; n <= 40; n += 2) {
                auto bn = seq(fam, n);
                auto b2 = seq(fam, n - 2);
                auto b4 = seq(fam, n - 4);
                for (int i = 0; 2 * i <= n; ++i)
                    if (bn.at(2 * i) != b2.at(2 * i) + b2.at(2 * i - 2) + b4.at(2 * i - 2)) ok = false;
            }
        }
        push("three-term-tail-recurrences", "A,B,D,E up to 40", ok);
    }

    // Printed polynomials and the two-term recurrence tables.
    {
        bool ok = true;
        auto expect = [&ok](Family f, int n, std::vector<long long> coeffs) {
            CharPoly want;
            for (long long c : coeffs) want.a.emplace_back(c);
            if (!(charpoly_recursive(build(f, n)) == want)) ok = false;
        };
        expect(Family::A, 6, {1, 0, -6, 0, 6, 0, 0});
        expect(Family::A, 8, {1, 0, -8, 0, 16, 0, -6, 0, 0});
        expect(Family::A, 10, {1, 0, -10, 0, 30, 0, -28, 0, 6, 0, 0});
        expect(Family::A, 12, {1, 0, -12, 0, 48, 0, -74, 0, 40, 0, -6, 0, 0});
        expect(Family::B, 8, {1, 0, -8, 0, 16, 0, -8, 0, 0});
        expect(Family::D, 6, {1, 0, -6, 0, 5, 0, -1});
        expect(Family::D, 8, {1, 0, -8, 0, 15, 0, -8, 0, 1});
        expect(Family::D, 10, {1, 0, -10, 0, 29, 0, -28, 0, 10, 0, -1});
        expect(Family::D, 12, {1, 0, -12, 0, 47, 0, -72, 0, 46, 0, -12, 0, 1});
        expect(Family::E, 8, {1, 0, -8, 0, 14, 0, -8, 0, 1});
        expect(Family::E, 10, {1, 0, -10, 0, 29, 0, -31, 0, 12, 0, -1});
        expect(Family::E, 12, {1, 0, -12, 0, 47, 0, -74, 0, 51, 0, -14, 0, 1});
        expect(Family::I1, 8, {1, 0, -8, 0, 16, 0, -9, 0, 0});
        expect(Family::I2, 10, {1, 0, -10, 0, 30, 0, -34, 0, 12, 0, 0});
        expect(Family::I3, 12, {1, 0, -12, 0, 48, 0, -84, 0, 64, 0, -16, 0, 0});
        expect(Family::I4, 10, {1, 0, -10, 0, 29, 0, -32, 0, 12, 0, -1});
        expect(Family::I5, 10, {1, 0, -10, 0, 30, 0, -33, 0, 11, 0, -1});
        expect(Family::I6, 10, {1, 0, -10, 0, 30, 0, -33, 0, 12, 0, -1});
        expect(Family::I7, 12, {1, 0, -12, 0, 48, 0, -83, 0, 62, 0, -16, 0, 1});
        for (Family f : {Family::A, Family::D}) {
            auto table = family_charpoly_table(f, 40);
            for (auto& [n, p] : table)
                if (!(p == charpoly_recursive(build(f, n)))) ok = false;
        }
        push("family-polynomials", "printed coefficients + recurrence to 40", ok);
    }

    // Quasi-order dominance at scale.
    {
        bool ok = true;
        for (int n = 8; n <= 40; n += 2)
            ok = ok && compare(bseq(Family::B, n), bseq(Family::A, n)).relation ==
                           Relation::DominatesStrictly;
        for (int n = 10; n <= 40; n += 2)
            ok = ok && compare(bseq(Family::E, n), bseq(Family::D, n)).relation ==
                           Relation::DominatesStrictly;
        ok = ok && compare(bseq(Family::D, 8), bseq(Family::E, 8)).relation ==
                       Relation::DominatesStrictly;
        for (int n = 10; n <= 40; n += 2)
            ok = ok && compare(bseq(Family::SRadialene, n), bseq(Family::B, n)).relation ==
                           Relation::DominatesStrictly;
        for (int n = 8; n <= 40; n += 4)
            ok = ok && compare(b_sequence(build(Family::Cycle, n)), bseq(Family::B, n)).relation ==
                           Relation::DominatesStrictly;
        push("family-dominance", "B>A, E>D, D8>E8, S>B, C>B up to 40", ok);
    }

    // Energy comparison between the A and D chains.
    {
        bool ok = true;
        double worst = -std::numeric_limits<double>::infinity();
        for (int n = 6; n <= 40; n += 2) {
            double ea = energy_eigen(build(Family::A, n)).value;
            double ed = energy_eigen(build(Family::D, n)).value;
            worst = std::max(worst, ea - ed);
            if (!(ea < ed - 1e-6)) ok = false;
        }
        push("A-energy-below-D", "even n in [6,40]", ok, "max E(A)-E(D) = " + std::to_string(worst));
    }

    // Exhaustive enumeration checks.
    EnumerateOptions opts;
    opts.max_n = std::max(cfg.size_budget, cfg.max_n);
    opts.jobs = cfg.jobs;
    for (int n = 8; n <= cfg.max_n; n += 2) {
        reports.push_back(verify_main_theorem(n, opts));
        for (auto& r : verify_girth_theorems(n, opts)) reports.push_back(std::move(r));
    }

    bool failed = false;
    Json arr = Json::array();
    for (const auto& r : reports) {
        failed = failed || !r.holds;
        arr.push_back(json_verification_report(r));
        std::cout << (r.holds ? "[PASS] " : "[FAIL] ") << r.id << " (" << r.scope << ")"
                  << (r.details.empty() ? "" : "  " + r.details) << "\n";
    }
    if (cfg.json || !cfg.out_dir.empty()) {
        Json rep{{"schema_version", kSchemaVersion}, {"reports", arr}};
        if (!cfg.out_dir.empty()) {
            std::filesystem::create_directories(cfg.out_dir);
            std::ofstream out(cfg.out_dir + "/verify.json");
            out << rep.dump(2) << "\n";
        } else {
            std::cout << rep.dump(2) << "\n";
        }
    }
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spectra, energies and extremal checks for unicyclic graphs"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    RunConfig cfg;
    app.add_flag("--json", cfg.json, "pretty JSON output");
    app.add_flag("--csv", cfg.csv, "CSV output where supported");
    app.add_option("--tol", cfg.tolerance, "quadrature tolerance");
    app.add_option("--max-n", cfg.max_n, "largest enumeration order");
    app.add_option("--out", cfg.out_dir, "results directory");
    app.add_option("--jobs", cfg.jobs, "parallel workers (0 = UNIENERGY_JOBS or 1)");
    app.add_option("--size-budget", cfg.size_budget, "enumeration size budget");

    std::string file, file2, family, method = "eig", kind = "egt", emit_what = "graph";
    std::string verify_mode = "none";
    int n = 0, apply_k = -1;
    bool list_anchors = false;

    auto* charpoly_cmd = app.add_subcommand("charpoly", "signed and absolute coefficients");
    charpoly_cmd->add_option("graph", file, "graph file")->required();

    auto* energy_cmd = app.add_subcommand("energy", "graph energy");
    energy_cmd->add_option("graph", file, "graph file");
    energy_cmd->add_option("--family", family, "family name instead of a file");
    energy_cmd->add_option("--n", n, "family order");
    energy_cmd->add_option("--method", method, "eig|coulson|both")
        ->check(CLI::IsMember({"eig", "coulson", "both"}));

    auto* compare_cmd = app.add_subcommand("compare", "quasi-order verdict for two graphs");
    compare_cmd->add_option("g1", file, "first graph file")->required();
    compare_cmd->add_option("g2", file2, "second graph file")->required();

    auto* family_cmd = app.add_subcommand("family", "build a named family member");
    family_cmd->add_option("--name", family, "family name")->required();
    family_cmd->add_option("--n", n, "order")->required();
    family_cmd->add_option("--emit", emit_what, "graph|charpoly|energy")
        ->check(CLI::IsMember({"graph", "charpoly", "energy"}));

    auto* transform_cmd = app.add_subcommand("transform", "graph surgeries");
    transform_cmd->add_option("graph", file, "graph file")->required();
    transform_cmd->add_option("--kind", kind, "egt|op1|op2|op3")
        ->check(CLI::IsMember({"egt", "op1", "op2", "op3"}));
    transform_cmd->add_flag("--list-anchors", list_anchors, "list valid anchor tuples");
    transform_cmd->add_option("--apply", apply_k, "apply the k-th anchor");

    auto* enum_cmd = app.add_subcommand("enumerate", "conjugated unicyclic classes");
    enum_cmd->add_option("--n", n, "order")->required();
    enum_cmd->add_option("--verify", verify_mode, "main|girth|all")
        ->check(CLI::IsMember({"none", "main", "girth", "all"}));

    auto* verify_cmd = app.add_subcommand("verify-paper", "run every published check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    try {
        if (charpoly_cmd->parsed()) return cmd_charpoly(file, cfg);
        if (energy_cmd->parsed()) return cmd_energy(file, family, n, method, cfg);
        if (compare_cmd->parsed()) return cmd_compare(file, file2, cfg);
        if (family_cmd->parsed()) return cmd_family(family, n, emit_what, cfg);
        if (transform_cmd->parsed()) return cmd_transform(file, kind, list_anchors, apply_k, cfg);
        if (enum_cmd->parsed()) return cmd_enumerate(n, verify_mode, cfg);
        if (verify_cmd->parsed()) return cmd_verify(cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
