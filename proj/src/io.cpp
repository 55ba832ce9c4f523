#include "tchordal/io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace tchordal {

Digraph read_dgf(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    std::vector<Arc> arcs;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream tokens(line);
        std::string kind;
        if (!(tokens >> kind)) continue;
        if (kind == "c") continue;
        if (kind == "p") {
            if (n != -1) throw ParseError("duplicate 'p' line", lineno);
            std::string format;
            if (!(tokens >> format >> n >> m) || format != "dgf")
                throw ParseError("expected 'p dgf <vertices> <arcs>'", lineno);
            std::string extra;
            if (tokens >> extra) throw ParseError("trailing tokens after 'p' line", lineno);
            if (n < 0 || m < 0) throw ParseError("negative counts", lineno);
            continue;
        }
        if (kind == "a") {
            if (n == -1) throw ParseError("arc before 'p' line", lineno);
            long long u = 0, v = 0;
            if (!(tokens >> u >> v)) throw ParseError("expected 'a <from> <to>'", lineno);
            std::string extra;
            if (tokens >> extra) throw ParseError("trailing tokens after arc", lineno);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("arc endpoint outside 1.." + std::to_string(n), lineno);
            if (static_cast<long long>(arcs.size()) >= m)
                throw ParseError("more arcs than the 'p' line declares", lineno);
            arcs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
            continue;
        }
        throw ParseError("unrecognized line kind '" + kind + "'", lineno);
    }
    const int at = std::max(lineno, 1);
    if (n == -1) throw ParseError("missing 'p dgf' line", at);
    if (static_cast<long long>(arcs.size()) != m)
        throw ParseError("'p' line declares " + std::to_string(m) + " arcs, found " +
                             std::to_string(arcs.size()),
                         at);
    return Digraph(static_cast<int>(n), arcs);
}

Digraph read_dgf_string(const std::string& text) {
    std::istringstream in(text);
    return read_dgf(in);
}

void write_dgf(const Digraph& d, std::ostream& out) {
    out << "p dgf " << d.vertex_count() << " " << d.arc_count() << "\n";
    for (const auto& [u, v] : d.arcs()) out << "a " << u << " " << v << "\n";
}

std::string to_dgf(const Digraph& d) {
    std::ostringstream out;
    write_dgf(d, out);
    return out.str();
}

IndependentSetFamily parse_sets_file(const std::string& text, const Digraph& host) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<std::vector<Vertex>> sets;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream tokens(line);
        std::string kind;
        if (!(tokens >> kind)) continue;
        if (kind == "c") continue;
        if (kind != "s") throw ParseError("expected 's <v1> <v2> ...'", lineno);
        std::vector<Vertex> set;
        long long v = 0;
        while (tokens >> v) {
            if (v < 1 || v > host.vertex_count())
                throw ParseError("vertex " + std::to_string(v) + " outside 1.." +
                                     std::to_string(host.vertex_count()),
                                 lineno);
            set.push_back(static_cast<Vertex>(v));
        }
        if (!tokens.eof()) throw ParseError("bad vertex token", lineno);
        sets.push_back(std::move(set));
    }
    return IndependentSetFamily(host, std::move(sets));
}

void write_amplifier_map(const AmplifierOutput& out, std::ostream& os) {
    for (std::size_t c = 0; c < out.copies.size(); ++c) {
        os << "copy " << c + 1 << ":";
        for (Vertex v : out.copies[c].image) os << " " << v;
        os << "\n";
    }
    for (std::size_t c = 0; c < out.set_images.size(); ++c)
        for (std::size_t j = 0; j < out.set_images[c].size(); ++j) {
            os << "set " << c + 1 << " " << j + 1 << ":";
            for (Vertex v : out.set_images[c][j]) os << " " << v;
            os << "\n";
        }
}

namespace {

std::string joined(const std::vector<Vertex>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(vs[i]);
    }
    return out;
}

}  // namespace

void write_gadget_map(const ReductionArtifact& art, std::ostream& os) {
    for (std::size_t i = 0; i < art.map.variables.size(); ++i) {
        const auto& vg = art.map.variables[i];
        os << "var " << i + 1 << " v1=" << vg.v1 << " v2=" << vg.v2 << " P1=" << joined(vg.p1)
           << " P2=" << joined(vg.p2) << "\n";
    }
    for (std::size_t i = 0; i < art.map.clauses.size(); ++i) {
        const auto& cg = art.map.clauses[i];
        os << "clause " << i + 1 << " u1=" << cg.u1 << " u2=" << cg.u2 << " w=" << joined(cg.w)
           << "\n";
    }
}

}  // namespace tchordal
