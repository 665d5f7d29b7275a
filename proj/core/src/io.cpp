#include "tokenjump/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace tj {
namespace {

struct LineReader {
    std::istream& in;
    int line_no = 0;

    // next non-blank, non-comment line split into tokens; false at EOF
    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            std::istringstream ss(line);
            tokens.clear();
            std::string tok;
            while (ss >> tok) {
                if (tok.front() == '#') break;
                tokens.push_back(tok);
            }
            if (!tokens.empty()) return true;
        }
        return false;
    }
};

int parse_int(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw parse_error(line, "expected an integer, got '" + tok + "'");
    }
}

}  // namespace

Instance read_instance(std::istream& in, const ReadOptions& opts) {
    LineReader reader{in};
    std::vector<std::string> tok;

    if (!reader.next(tok)) throw parse_error(reader.line_no, "missing header line");
    if (tok.size() != 5 || tok[0] != "tj")
        throw parse_error(reader.line_no, "header must be 'tj <n> <m> <k> <t>'");
    const int n = parse_int(tok[1], reader.line_no);
    const int m = parse_int(tok[2], reader.line_no);
    const int k = parse_int(tok[3], reader.line_no);
    int t = parse_int(tok[4], reader.line_no);
    if (n < 0 || m < 0) throw parse_error(reader.line_no, "negative vertex or edge count");
    if (k < 1) throw parse_error(reader.line_no, "k must be >= 1");
    if (t < 3) throw parse_error(reader.line_no, "t must be >= 3");
    if (opts.t_override) t = *opts.t_override;

    Graph g(n);
    for (int i = 0; i < m; ++i) {
        if (!reader.next(tok))
            throw parse_error(reader.line_no, "expected " + std::to_string(m) + " edge lines");
        if (tok.size() != 3 || tok[0] != "e")
            throw parse_error(reader.line_no, "expected 'e <u> <v>'");
        const int u = parse_int(tok[1], reader.line_no);
        const int v = parse_int(tok[2], reader.line_no);
        try {
            g.add_edge(u, v);
        } catch (const input_error& e) {
            throw parse_error(reader.line_no, e.what());
        }
    }

    auto read_set = [&](const char* tag) {
        if (!reader.next(tok))
            throw parse_error(reader.line_no, std::string("missing '") + tag + "' line");
        if (tok[0] != tag)
            throw parse_error(reader.line_no,
                              std::string("expected '") + tag + "' line, got '" + tok[0] + "'");
        if (static_cast<int>(tok.size()) - 1 != k)
            throw parse_error(reader.line_no, std::string("'") + tag + "' line must list exactly " +
                                                  std::to_string(k) + " vertices (header k)");
        VertexList verts;
        for (std::size_t i = 1; i < tok.size(); ++i) {
            int v = parse_int(tok[i], reader.line_no);
            if (v < 0 || v >= n)
                throw parse_error(reader.line_no, "vertex id " + std::to_string(v) +
                                                      " out of range [0," + std::to_string(n) + ")");
            verts.push_back(v);
        }
        return verts;
    };

    VertexList start = read_set("s");
    VertexList target = read_set("g");
    if (reader.next(tok))
        throw parse_error(reader.line_no, "trailing content after the 'g' line");

    return Instance::create(std::move(g), TokenSet(std::move(start)), TokenSet(std::move(target)),
                            t, opts.mode, opts.check_forbidden);
}

Instance read_instance_file(const std::string& path, const ReadOptions& opts) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    return read_instance(in, opts);
}

void write_instance(const Instance& inst, std::ostream& out) {
    const Graph& g = inst.graph;
    if (g.order() != g.id_bound())
        throw input_error("cannot serialize a graph with deleted vertices");
    out << "tj " << g.id_bound() << " " << g.edge_count() << " " << inst.k() << " " << inst.t
        << "\n";
    for (const auto& [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    out << "s";
    for (Vertex v : inst.start.members()) out << " " << v;
    out << "\ng";
    for (Vertex v : inst.target.members()) out << " " << v;
    out << "\n";
}

void write_instance_file(const Instance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot open " + path + " for writing");
    write_instance(inst, out);
}

}  // namespace tj
