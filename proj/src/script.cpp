#include "corkcalc/script.hpp"

#include "corkcalc/errors.hpp"

#include <map>
#include <sstream>

namespace corkcalc {

namespace {

struct LineCtx {
    std::size_t no = 0;
    std::string verb;
    std::map<std::string, std::string> kv;
    std::vector<std::string> keys_seen;

    [[noreturn]] void fail(const std::string& why) const {
        throw Error("ScriptParse", "line " + std::to_string(no) + ": " + why);
    }
    const std::string& need(const std::string& key) const {
        auto it = kv.find(key);
        if (it == kv.end()) fail(verb + " needs " + key + "=");
        return it->second;
    }
    bool has(const std::string& key) const { return kv.count(key) > 0; }
};

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

int parse_int(const LineCtx& ln, const std::string& key) {
    const std::string& v = ln.need(key);
    try {
        std::size_t used = 0;
        const int n = std::stoi(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return n;
    } catch (const std::exception&) {
        ln.fail(key + "=" + v + " is not an integer");
    }
}

int parse_sign(const LineCtx& ln, const std::string& key) {
    const std::string& v = ln.need(key);
    if (v == "+") return 1;
    if (v == "-") return -1;
    ln.fail(key + "=" + v + " must be + or -");
}

std::vector<std::string> parse_ids(const LineCtx& ln, const std::string& key, std::size_t want) {
    auto ids = split_commas(ln.need(key));
    for (const std::string& id : ids)
        if (id.empty()) ln.fail(key + " has an empty entry");
    if (want != 0 && ids.size() != want)
        ln.fail(key + " needs exactly " + std::to_string(want) + " entries");
    return ids;
}

std::vector<Arc> parse_arcs(const LineCtx& ln, const std::string& key, std::size_t want) {
    std::vector<Arc> arcs;
    for (const std::string& tok : parse_ids(ln, key, want)) {
        try {
            std::size_t used = 0;
            arcs.push_back(static_cast<Arc>(std::stol(tok, &used)));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            ln.fail(key + " entry " + tok + " is not an arc number");
        }
    }
    return arcs;
}

MoveStep parse_step(const LineCtx& ln) {
    const std::string& v = ln.verb;
    if (v == "r1+") {
        const std::string& side = ln.need("side");
        if (side != "L" && side != "R") ln.fail("side must be L or R");
        return MoveStep::r1_add(parse_arcs(ln, "arc", 1).at(0), side[0], parse_sign(ln, "sign"));
    }
    if (v == "r1-") return MoveStep::r1_remove(parse_ids(ln, "crossing", 1).at(0));
    if (v == "r2+") {
        auto arcs = parse_arcs(ln, "arcs", 2);
        return MoveStep::r2_add(arcs[0], arcs[1], ln.need("face"));
    }
    if (v == "r2-") {
        auto xs = parse_ids(ln, "crossings", 2);
        return MoveStep::r2_remove(xs[0], xs[1]);
    }
    if (v == "r3") {
        auto xs = parse_ids(ln, "crossings", 3);
        return MoveStep::r3(xs[0], xs[1], xs[2]);
    }
    if (v == "slam") return MoveStep::slam_dunk(ln.need("meridian"), ln.need("target"));
    if (v == "cancel") {
        auto ps = parse_ids(ln, "pair", 2);
        return MoveStep::hopf_cancel(ps[0], ps[1]);
    }
    if (v == "blowdown") return MoveStep::blowdown(ln.need("comp"));
    if (v == "blowup") {
        std::vector<Arc> arcs;
        if (ln.has("arcs") && !ln.kv.at("arcs").empty()) arcs = parse_arcs(ln, "arcs", 0);
        return MoveStep::blowup(ln.need("face"), parse_sign(ln, "sign"), arcs);
    }
    if (v == "rolfsen") return MoveStep::rolfsen_twist(ln.need("comp"), parse_int(ln, "twists"));
    if (v == "slide") {
        auto band = parse_ids(ln, "band", 0);
        return MoveStep::band_slide(ln.need("comp"), ln.need("over"), band,
                                    parse_sign(ln, "sign"));
    }
    if (v == "erase") return MoveStep::erase_infinity(ln.need("comp"));
    if (v == "mirror") return MoveStep::mirror_all();
    if (v == "negate") return MoveStep::negate_coefficients();
    ln.fail("unknown move " + v);
}

}  // namespace

std::vector<MoveStep> parse_script(const std::string& text) {
    std::vector<MoveStep> steps;
    std::istringstream in(text);
    std::string raw;
    std::size_t no = 0;
    while (std::getline(in, raw)) {
        ++no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        LineCtx ln;
        ln.no = no;
        if (!(ls >> ln.verb)) continue;  // blank or comment
        std::string tok;
        while (ls >> tok) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos || eq == 0)
                ln.fail("expected key=value, got " + tok);
            const std::string key = tok.substr(0, eq);
            if (ln.kv.count(key)) ln.fail("duplicate key " + key);
            ln.kv[key] = tok.substr(eq + 1);
        }
        steps.push_back(parse_step(ln));
    }
    return steps;
}

std::string format_script(const std::vector<MoveStep>& steps) {
    std::string out;
    for (const MoveStep& s : steps) {
        out += s.to_line();
        out += "\n";
    }
    return out;
}

}  // namespace corkcalc
