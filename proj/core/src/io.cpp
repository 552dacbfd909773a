#include "lmg/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace lmg {

namespace {

std::string strip_comment(std::string_view line) {
    auto pos = line.find('#');
    std::string s(pos == std::string_view::npos ? line : line.substr(0, pos));
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
    std::size_t start = s.find_first_not_of(" \t");
    return start == std::string::npos ? std::string() : s.substr(start);
}

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

} // namespace

MixedGraph parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;

    // Header line.
    std::vector<std::string> labels;
    bool have_header = false;
    while (!have_header && std::getline(in, raw)) {
        ++lineno;
        std::string line = strip_comment(raw);
        if (line.empty()) continue;
        auto toks = tokens(line);
        if (toks.empty() || toks[0] != "nodes:")
            throw ParseError(lineno, ParseError::Kind::BadToken,
                             "expected 'nodes:' header before edges");
        labels.assign(toks.begin() + 1, toks.end());
        have_header = true;
    }
    if (!have_header)
        throw ParseError(lineno, ParseError::Kind::BadToken, "missing 'nodes:' header");

    MixedGraph g = [&] {
        try {
            return MixedGraph(labels);
        } catch (const GraphError& e) {
            throw ParseError(lineno, ParseError::Kind::BadToken, e.what());
        }
    }();

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip_comment(raw);
        if (line.empty()) continue;
        auto toks = tokens(line);
        if (toks.size() != 3)
            throw ParseError(lineno, ParseError::Kind::BadToken,
                             "expected '<node> <edge> <node>', got '" + line + "'");
        Mark ma, mb;
        if (toks[1] == "--") { ma = Mark::Tail; mb = Mark::Tail; }
        else if (toks[1] == "->") { ma = Mark::Tail; mb = Mark::Head; }
        else if (toks[1] == "<-") { ma = Mark::Head; mb = Mark::Tail; }
        else if (toks[1] == "<->") { ma = Mark::Head; mb = Mark::Head; }
        else
            throw ParseError(lineno, ParseError::Kind::BadToken,
                             "unknown edge token '" + toks[1] + "'");
        auto a = g.try_node(toks[0]);
        if (!a)
            throw ParseError(lineno, ParseError::Kind::UnknownNode,
                             "undeclared node '" + toks[0] + "'");
        auto b = g.try_node(toks[2]);
        if (!b)
            throw ParseError(lineno, ParseError::Kind::UnknownNode,
                             "undeclared node '" + toks[2] + "'");
        if (*a == *b)
            throw ParseError(lineno, ParseError::Kind::Loop, "loop at node '" + toks[0] + "'");
        if (g.adjacent(*a, *b))
            throw ParseError(lineno, ParseError::Kind::DuplicateEdge,
                             "duplicate edge between '" + toks[0] + "' and '" + toks[2] + "'");
        g.add_edge(*a, ma, *b, mb);
    }
    return g;
}

MixedGraph parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::string serialize(const MixedGraph& g) {
    std::ostringstream out;
    out << "nodes:";
    for (const auto& l : g.labels()) out << ' ' << l;
    out << '\n';
    for (const Edge& e : g.edges()) {
        if (e.mark_a == Mark::Head && e.mark_b == Mark::Tail)
            out << g.label(e.b) << " -> " << g.label(e.a) << '\n'; // arrows tail-first
        else
            out << g.label(e.a) << ' ' << edge_token(e.mark_a, e.mark_b) << ' ' << g.label(e.b)
                << '\n';
    }
    return out.str();
}

} // namespace lmg
