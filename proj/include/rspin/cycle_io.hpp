#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rspin/tropical.hpp"

namespace rspin {

/// Parses the CLI vector syntax "r=10;m=3,4,5,5,6".
inline MonodromyVector parse_vector_spec(const std::string& spec) {
    auto semi = spec.find(';');
    if (semi == std::string::npos || spec.substr(0, 2) != "r=" ||
        spec.substr(semi + 1, 2) != "m=")
        throw ParseError("expected \"r=<int>;m=<int>,<int>,...\", got \"" + spec + "\"");
    int r;
    try {
        size_t used = 0;
        r = std::stoi(spec.substr(2, semi - 2), &used);
        if (used != semi - 2) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw ParseError("bad r in \"" + spec + "\"");
    }
    std::vector<int> marks;
    std::stringstream ss(spec.substr(semi + 3));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            marks.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError("bad mark \"" + tok + "\" in \"" + spec + "\"");
        }
    }
    if (marks.empty()) throw ParseError("no marks in \"" + spec + "\"");
    return validate(r, std::move(marks));
}

namespace detail {

inline std::string subset_text(MarkMask m) {
    std::string out;
    for (int i : mask_to_marks(m)) {
        if (!out.empty()) out += ',';
        out += std::to_string(i);
    }
    return out;
}

inline std::string tree_text(const SplitTree& t) {
    if (t.edges.empty()) return "-";
    std::string out;
    for (MarkMask e : t.edges) {
        if (!out.empty()) out += '|';
        out += subset_text(e);
    }
    return out;
}

inline std::vector<int> parse_int_list(const std::string& s, char sep,
                                       const std::string& where) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) {
        try {
            size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError(where + ": bad integer \"" + tok + "\"");
        }
    }
    if (out.empty()) throw ParseError(where + ": empty list");
    return out;
}

}  // namespace detail

/// Cycle document: "n=", "r=" (omitted for generic fans), "dim=", optional
/// "source=", then one "w <edges> <weight>" record per tree, where edges
/// are the canonical subsets joined by '|' ("-" for the trivial tree).
/// Trees appear sorted, so exports are bit-stable.
inline void export_cycle(const TropicalCycle& c, std::ostream& os) {
    os << "n=" << c.n << '\n';
    if (c.r != 0) os << "r=" << c.r << '\n';
    os << "dim=" << c.dim << '\n';
    if (c.source) {
        os << "source=";
        for (size_t i = 0; i < c.source->marks.size(); ++i)
            os << (i ? "," : "") << c.source->marks[i];
        os << '\n';
    }
    for (const auto& [tree, w] : c.weights)
        os << "w " << detail::tree_text(tree) << ' ' << to_string(w) << '\n';
}

inline std::string export_cycle(const TropicalCycle& c) {
    std::ostringstream os;
    export_cycle(c, os);
    return os.str();
}

inline TropicalCycle import_cycle(std::istream& is) {
    TropicalCycle c;
    bool have_n = false, have_dim = false;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("n=", 0) == 0) {
            c.n = detail::parse_int_list(line.substr(2), ',', "n").at(0);
            have_n = true;
        } else if (line.rfind("r=", 0) == 0) {
            c.r = detail::parse_int_list(line.substr(2), ',', "r").at(0);
        } else if (line.rfind("dim=", 0) == 0) {
            c.dim = detail::parse_int_list(line.substr(4), ',', "dim").at(0);
            have_dim = true;
        } else if (line.rfind("source=", 0) == 0) {
            if (c.r == 0) fail("source requires r");
            try {
                c.source = validate(c.r, detail::parse_int_list(line.substr(7), ',', "source"));
            } catch (const std::runtime_error& e) {
                fail(std::string("bad source: ") + e.what());
            }
        } else if (line.rfind("w ", 0) == 0) {
            if (!have_n || !have_dim) fail("weight record before n=/dim= header");
            auto sp = line.rfind(' ');
            if (sp < 2) fail("malformed weight record");
            std::string edges_text = line.substr(2, sp - 2);
            Rational w;
            try {
                w = parse_rational(line.substr(sp + 1));
            } catch (const ParseError& e) {
                fail(e.what());
            }
            std::vector<MarkMask> edges;
            if (edges_text != "-") {
                std::stringstream ss(edges_text);
                std::string sub;
                while (std::getline(ss, sub, '|'))
                    edges.push_back(marks_to_mask(detail::parse_int_list(sub, ',', "tree")));
            }
            if (static_cast<int>(edges.size()) != c.dim)
                fail("tree has " + std::to_string(edges.size()) + " edges, cycle dim is " +
                     std::to_string(c.dim));
            try {
                SplitTree t = make_tree(c.n, std::move(edges));
                if (c.weights.count(t)) fail("duplicate tree");
                c.weights[t] = w;
            } catch (const SplitError& e) {
                fail(e.what());
            }
        } else {
            fail("unrecognized line \"" + line + "\"");
        }
    }
    if (!have_n || !have_dim) throw ParseError("missing n=/dim= header");
    return c;
}

inline TropicalCycle import_cycle(const std::string& doc) {
    std::istringstream is(doc);
    return import_cycle(is);
}

}  // namespace rspin
