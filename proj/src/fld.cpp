#include "corkcalc/fld.hpp"

#include "corkcalc/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace corkcalc {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

Error syntax(int line, const std::string& why) {
    return Error("SyntaxError", "line " + std::to_string(line) + ": " + why);
}

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        Line line{no, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            if (isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
                continue;
            }
            if (raw[i] == '"') {
                auto close = raw.find('"', i + 1);
                if (close == std::string::npos) throw syntax(no, "unterminated string");
                line.tokens.push_back(raw.substr(i + 1, close - i - 1));
                i = close + 1;
            } else {
                std::size_t j = i;
                while (j < raw.size() && !isspace(static_cast<unsigned char>(raw[j]))) ++j;
                line.tokens.push_back(raw.substr(i, j - i));
                i = j;
            }
        }
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

Arc parse_arc(const Line& l, const std::string& tok) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size() || v <= 0) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw syntax(l.number, "bad arc id '" + tok + "'");
    }
}

}  // namespace

FramedLinkDiagram parse_fld(const std::string& text) {
    auto lines = tokenize(text);
    std::vector<Crossing> crossings;
    struct Decl {
        std::string id;
        std::string label;
        bool is_loop = false;
        bool has_coeff = false;
        SurgeryCoefficient coeff = SurgeryCoefficient::ornament();
        int line = 0;
    };
    std::vector<Decl> decls;  // in mention order
    auto decl_of = [&](const std::string& id, int line) -> Decl& {
        for (auto& d : decls)
            if (d.id == id) return d;
        decls.push_back(Decl{id, id, false, false, SurgeryCoefficient::ornament(), line});
        return decls.back();
    };
    std::set<std::string> xids;
    for (const auto& l : lines) {
        const auto& t = l.tokens;
        if (t[0] == "crossing") {
            if (t.size() != 6) throw syntax(l.number, "crossing wants: crossing ID ARC ARC ARC ARC");
            if (!xids.insert(t[1]).second) throw syntax(l.number, "duplicate crossing id " + t[1]);
            Crossing c;
            c.id = t[1];
            for (int s = 0; s < 4; ++s) c.slots[s] = parse_arc(l, t[2 + s]);
            crossings.push_back(std::move(c));
        } else if (t[0] == "loop") {
            if (t.size() != 2) throw syntax(l.number, "loop wants: loop COMPID");
            Decl& d = decl_of(t[1], l.number);
            d.is_loop = true;
        } else if (t[0] == "component") {
            if (t.size() != 2 && !(t.size() == 4 && t[2] == "label"))
                throw syntax(l.number, "component wants: component COMPID [label STRING]");
            Decl& d = decl_of(t[1], l.number);
            if (t.size() == 4) d.label = t[3];
        } else if (t[0] == "framing") {
            if (t.size() != 3) throw syntax(l.number, "framing wants: framing COMPID COEFF");
            Decl& d = decl_of(t[1], l.number);
            if (d.has_coeff) throw syntax(l.number, "second framing for " + t[1]);
            d.has_coeff = true;
            try {
                d.coeff = SurgeryCoefficient::parse(t[2]);
            } catch (const Error& e) {
                throw syntax(l.number, e.what());
            }
        } else {
            throw syntax(l.number, "unknown keyword '" + t[0] + "'");
        }
    }

    std::vector<std::string> violations;
    auto cycles = derive_arc_cycles(crossings, &violations);
    if (!violations.empty()) {
        std::string msg;
        for (const auto& v : violations) msg += (msg.empty() ? "" : "; ") + v;
        throw Error("ValidationError", msg);
    }

    FramedLinkDiagram d;
    d.crossings = std::move(crossings);
    std::vector<const Decl*> arc_decls;
    for (const auto& dec : decls)
        if (!dec.is_loop) arc_decls.push_back(&dec);
    if (arc_decls.size() > cycles.size())
        throw Error("ValidationError",
                    "ComponentArcs: " + std::to_string(arc_decls.size()) +
                        " non-loop components declared but only " +
                        std::to_string(cycles.size()) + " arc cycles present");
    std::set<std::string> taken;
    for (const auto& dec : decls) taken.insert(dec.id);
    int fresh = 1;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        Component c;
        if (i < arc_decls.size()) {
            c.id = arc_decls[i]->id;
            c.label = arc_decls[i]->label;
            c.coeff = arc_decls[i]->coeff;
        } else {
            std::string id;
            do id = "c" + std::to_string(fresh++);
            while (taken.count(id));
            taken.insert(id);
            c.id = id;
            c.label = id;
        }
        c.arcs = cycles[i];
        d.components.push_back(std::move(c));
    }
    for (const auto& dec : decls)
        if (dec.is_loop) {
            Component c;
            c.id = dec.id;
            c.label = dec.label;
            c.coeff = dec.coeff;
            d.components.push_back(std::move(c));
        }
    d = d.canonicalized();
    d.require_valid();
    return d;
}

std::string serialize_fld(const FramedLinkDiagram& d) {
    std::ostringstream out;
    out << "# framed link diagram\n";
    for (const auto& x : d.crossings)
        out << "crossing " << x.id << " " << x.slots[0] << " " << x.slots[1] << " " << x.slots[2]
            << " " << x.slots[3] << "\n";
    for (const auto& c : d.components) {
        if (c.is_loop()) {
            out << "loop " << c.id << "\n";
        } else if (c.label == c.id) {
            out << "component " << c.id << "\n";
        } else {
            out << "component " << c.id << " label \"" << c.label << "\"\n";
        }
        if (c.coeff.kind != Filling::Ornament)
            out << "framing " << c.id << " " << c.coeff.to_string() << "\n";
    }
    return out.str();
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    return h;
}

std::string diagram_hash(const FramedLinkDiagram& d) {
    std::uint64_t h = fnv1a64(serialize_fld(d));
    std::ostringstream out;
    out << std::hex;
    for (int shift = 60; shift >= 0; shift -= 4) out << ((h >> shift) & 0xf);
    return out.str();
}

}  // namespace corkcalc
