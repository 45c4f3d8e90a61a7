#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "quadgenus/rotation.hpp"

namespace qg {

inline constexpr const char* kSchemeFormatHeader = "format=rotation-scheme/1";

/// Reads the rotation-scheme text format: a format header line, then one
/// line per vertex, `LABEL: n1 n2 n3 ...` in clockwise cyclic order.
/// `#` starts a comment; blank lines are ignored.
inline RotationScheme parse_scheme(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    std::vector<std::pair<Label, std::vector<Label>>> rows;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (!header_seen) {
            if (tok != kSchemeFormatHeader)
                throw ParseError("expected header '" + std::string(kSchemeFormatHeader) + "'", lineno);
            if (ls >> tok) throw ParseError("trailing text after format header", lineno);
            header_seen = true;
            continue;
        }
        std::string name = tok;
        if (name.size() >= 2 && name.back() == ':')
            name.pop_back();
        else {
            std::string colon;
            if (!(ls >> colon) || colon != ":")
                throw ParseError("expected ':' after vertex label", lineno);
        }
        Label vl;
        try {
            vl = Label::parse(name);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), lineno);
        }
        std::vector<Label> nbrs;
        while (ls >> tok) {
            try {
                nbrs.push_back(Label::parse(tok));
            } catch (const ParseError& e) {
                throw ParseError(e.what(), lineno);
            }
        }
        if (nbrs.empty()) throw ParseError("vertex '" + name + "' has an empty rotation", lineno);
        rows.emplace_back(vl, std::move(nbrs));
    }
    if (!header_seen) throw ParseError("missing format header");
    if (rows.empty()) throw ParseError("no vertex lines");

    std::vector<Label> labels;
    labels.reserve(rows.size());
    for (auto& [l, _] : rows) labels.push_back(l);
    SimpleGraph g(labels); // rejects duplicates
    // Adjacency comes from the rotations; symmetry is enforced.
    std::map<Label, std::vector<Label>> by_label;
    for (auto& [l, ns] : rows) by_label[l] = ns;
    for (auto& [l, ns] : by_label) {
        Vertex v = g.index_of(l);
        for (auto& nl : ns) {
            Vertex u = g.index_of(nl); // throws on undeclared labels
            if (u == v) throw ValidationError("vertex '" + l.str() + "' lists itself");
            if (g.adjacent(v, u)) continue;
            bool mutual = false;
            for (auto& back : by_label[nl])
                if (back == l) mutual = true;
            if (!mutual)
                throw ValidationError("adjacency not symmetric: " + l.str() + " lists " + nl.str() +
                                      " but not vice versa");
            g.add_edge(v, u);
        }
    }
    std::vector<std::vector<Vertex>> rot(g.p());
    for (auto& [l, ns] : by_label) {
        auto& row = rot[g.index_of(l)];
        for (auto& nl : ns) row.push_back(g.index_of(nl));
    }
    return RotationScheme(std::move(g), std::move(rot)); // full validation
}

/// Canonical writer: header, vertices in label order, least neighbor first.
/// parse(serialize(s)) == s, and serialize is a fixed point of the pair.
inline std::string serialize_scheme(const RotationScheme& s) {
    std::ostringstream out;
    out << kSchemeFormatHeader << '\n';
    for (Vertex v = 0; v < s.p(); ++v) {
        out << s.graph().label(v).str() << ':';
        for (Vertex u : s.rotation(v)) out << ' ' << s.graph().label(u).str();
        out << '\n';
    }
    return out.str();
}

} // namespace qg
