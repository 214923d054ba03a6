#include "unienergy/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace unienergy {

namespace {

std::string trimmed(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

LabeledGraph parse_graph6(const std::string& raw) {
    std::string s = trimmed(raw);
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    if (s.empty()) throw Error(ErrorCode::ParseError, "empty graph6 string");
    if (s[0] == 126)
        throw Error(ErrorCode::SizeLimit, "graph6 long-form sizes not supported");
    int n = s[0] - 63;
    if (n < 0 || n > 62) throw Error(ErrorCode::ParseError, "bad graph6 size byte");
    LabeledGraph g(n);
    int need = (n * (n - 1) / 2 + 5) / 6;
    if (static_cast<int>(s.size()) - 1 < need)
        throw Error(ErrorCode::ParseError, "graph6 string too short");
    int bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            int byte = 1 + bit / 6;
            int shift = 5 - bit % 6;
            int c = s[byte] - 63;
            if (c < 0 || c > 63) throw Error(ErrorCode::ParseError, "bad graph6 byte");
            if (c >> shift & 1) g.add_edge(u, v);
            ++bit;
        }
    }
    return g;
}

LabeledGraph parse_graph_line(const std::string& raw) {
    std::string line = trimmed(raw);
    if (line.empty()) throw Error(ErrorCode::ParseError, "empty graph line");
    if (line.rfind(">>graph6<<", 0) == 0 || line.find(';') == std::string::npos)
        return parse_graph6(line);

    std::vector<std::string> parts;
    std::stringstream ss(line);
    std::string part;
    while (std::getline(ss, part, ';')) parts.push_back(trimmed(part));

    int n = 0;
    try {
        n = std::stoi(parts.at(0));
    } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "vertex count expected before first ';'");
    }
    LabeledGraph g(n);
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i].empty()) continue;
        std::stringstream es(parts[i]);
        int u, v;
        if (!(es >> u >> v)) throw Error(ErrorCode::ParseError, "edge 'u v' expected: " + parts[i]);
        try {
            g.add_edge(u, v);
        } catch (const Error& e) {
            throw Error(ErrorCode::ParseError, e.what());
        }
    }
    return g;
}

std::vector<LabeledGraph> parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    std::vector<LabeledGraph> out;
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trimmed(line);
        if (t.empty() || t[0] == '#') continue;
        out.push_back(parse_graph_line(t));
    }
    if (out.empty()) throw Error(ErrorCode::ParseError, "no graphs in " + path);
    return out;
}

LabeledGraph load_graph(const std::string& path) { return parse_graph_file(path).front(); }

std::string write_graph_text(const LabeledGraph& g) {
    std::string s = std::to_string(g.n);
    for (auto [u, v] : g.edges) s += "; " + std::to_string(u) + " " + std::to_string(v);
    return s;
}

}  // namespace unienergy
