#include "corkcalc/diagram.hpp"

#include "corkcalc/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace corkcalc {

namespace {

std::string arc_str(Arc a) { return std::to_string(a); }

}  // namespace

std::vector<std::vector<Arc>> derive_arc_cycles(const std::vector<Crossing>& crossings,
                                                std::vector<std::string>* violations) {
    auto fail = [&](const std::string& m) {
        if (violations) violations->push_back(m);
    };
    std::map<Arc, std::vector<std::pair<std::size_t, int>>> occ;
    for (std::size_t i = 0; i < crossings.size(); ++i)
        for (int s = 0; s < 4; ++s) {
            Arc a = crossings[i].slots[s];
            if (a <= 0) {
                fail("ArcMultiplicity: crossing " + crossings[i].id + " has nonpositive arc id");
                return {};
            }
            occ[a].push_back({i, s});
        }
    bool counts_ok = true;
    for (const auto& [a, v] : occ)
        if (v.size() != 2) {
            fail("ArcMultiplicity: arc " + arc_str(a) + " appears in " + std::to_string(v.size()) +
                 " slots (expected 2)");
            counts_ok = false;
        }
    if (!counts_ok) return {};

    std::map<Arc, Arc> succ, pred;
    bool consistent = true;
    auto set_succ = [&](Arc a, Arc b) {
        if (succ.count(a) || pred.count(b)) {
            fail("BadNumbering: conflicting traversal near arcs " + arc_str(a) + " -> " +
                 arc_str(b));
            consistent = false;
            return;
        }
        succ[a] = b;
        pred[b] = a;
    };
    for (const auto& c : crossings) {
        set_succ(c.slots[0], c.slots[2]);
        if (!consistent) return {};
    }

    /* Over passages: direction must fit consecutive numbering; x -> y is
     * possible when y == x+1 (plain step) or y < x (wrap from a block top to
     * its bottom).  Propagate forced choices to a fixpoint. */
    struct OverPair {
        std::size_t ci;
        Arc x, y;
        bool done = false;
    };
    std::vector<OverPair> pairs;
    for (std::size_t i = 0; i < crossings.size(); ++i)
        pairs.push_back({i, crossings[i].slots[1], crossings[i].slots[3], false});
    auto allowed = [](Arc from, Arc to) { return to == from + 1 || to < from; };
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& pr : pairs) {
            if (pr.done) continue;
            bool can_xy = allowed(pr.x, pr.y) && !succ.count(pr.x) && !pred.count(pr.y);
            bool can_yx = allowed(pr.y, pr.x) && !succ.count(pr.y) && !pred.count(pr.x);
            if (!can_xy && !can_yx) {
                fail("BadNumbering: over strand at crossing " + crossings[pr.ci].id +
                     " cannot follow arc numbering");
                return {};
            }
            if (can_xy != can_yx) {
                if (can_xy) set_succ(pr.x, pr.y);
                else set_succ(pr.y, pr.x);
                if (!consistent) return {};
                pr.done = true;
                changed = true;
            }
        }
    }
    /* Leftovers are two-arc components crossing over everything: two pairs
     * {a, a+1} at two crossings each.  Their two possible orientations are
     * both legal; fix the one entering with the smaller arc at the crossing
     * with the smaller id (the same rule the sign computation uses). */
    for (auto& pr : pairs) {
        if (pr.done) continue;
        Arc lo = std::min(pr.x, pr.y), hi = std::max(pr.x, pr.y);
        if (hi != lo + 1) {
            fail("BadNumbering: unresolved over strand at crossing " + crossings[pr.ci].id);
            return {};
        }
        if (!succ.count(lo)) set_succ(lo, hi);
        if (!succ.count(hi)) set_succ(hi, lo);
        if (!consistent) return {};
        pr.done = true;
    }

    for (const auto& [a, v] : occ)
        if (!succ.count(a) || !pred.count(a)) {
            fail("BadNumbering: arc " + arc_str(a) + " lacks a consistent traversal");
            return {};
        }

    std::vector<std::vector<Arc>> cycles;
    std::set<Arc> seen;
    for (const auto& [a0, v] : occ) {
        if (seen.count(a0)) continue;
        std::vector<Arc> cyc;
        Arc a = a0;
        do {
            cyc.push_back(a);
            seen.insert(a);
            a = succ.at(a);
        } while (a != a0 && !seen.count(a));
        if (a != a0) {
            fail("BadNumbering: traversal from arc " + arc_str(a0) + " does not close up");
            return {};
        }
        bool run_ok = cyc.front() == *std::min_element(cyc.begin(), cyc.end());
        for (std::size_t i = 0; i + 1 < cyc.size() && run_ok; ++i)
            if (cyc[i + 1] != cyc[i] + 1) run_ok = false;
        if (!run_ok) {
            fail("ArcOrder: component containing arc " + arc_str(a0) +
                 " is not a consecutive increasing run");
            return {};
        }
        cycles.push_back(std::move(cyc));
    }
    return cycles;  // map iteration order: already sorted by smallest arc
}

std::vector<std::string> FramedLinkDiagram::validate() const {
    std::vector<std::string> out;
    std::set<std::string> ids, labels, xids;
    for (const auto& c : components) {
        if (!ids.insert(c.id).second) out.push_back("DuplicateComponent: id " + c.id);
        if (!labels.insert(c.label).second) out.push_back("LabelCollision: label " + c.label);
    }
    for (const auto& x : crossings)
        if (!xids.insert(x.id).second) out.push_back("DuplicateCrossing: id " + x.id);

    std::vector<std::string> derive_errors;
    auto cycles = derive_arc_cycles(crossings, &derive_errors);
    for (auto& e : derive_errors) out.push_back(std::move(e));
    if (!derive_errors.empty()) return out;

    /* arc-bearing components must match the derived cycles one-to-one */
    std::vector<const Component*> with_arcs;
    for (const auto& c : components)
        if (!c.is_loop()) with_arcs.push_back(&c);
    if (with_arcs.size() != cycles.size()) {
        out.push_back("ComponentArcs: " + std::to_string(cycles.size()) +
                      " arc cycles but " + std::to_string(with_arcs.size()) +
                      " non-loop components");
        return out;
    }
    std::sort(with_arcs.begin(), with_arcs.end(), [](const Component* a, const Component* b) {
        return a->arcs.front() < b->arcs.front();
    });
    for (std::size_t i = 0; i < cycles.size(); ++i)
        if (with_arcs[i]->arcs != cycles[i])
            out.push_back("ComponentArcs: component " + with_arcs[i]->label +
                          " does not carry its derived arc cycle");
    if (!out.empty()) return out;

    try {
        faces();
    } catch (const Error& e) {
        out.push_back(e.what());
    }
    return out;
}

void FramedLinkDiagram::require_valid() const {
    auto v = validate();
    if (v.empty()) return;
    std::string msg;
    for (const auto& s : v) msg += (msg.empty() ? "" : "; ") + s;
    throw Error("ValidationError", msg);
}

std::size_t FramedLinkDiagram::component_index(const std::string& ref) const {
    for (std::size_t i = 0; i < components.size(); ++i)
        if (components[i].id == ref) return i;
    for (std::size_t i = 0; i < components.size(); ++i)
        if (components[i].label == ref) return i;
    throw Error("UnknownComponent", "no component " + ref);
}

bool FramedLinkDiagram::has_component(const std::string& ref) const {
    for (const auto& c : components)
        if (c.id == ref || c.label == ref) return true;
    return false;
}

std::size_t FramedLinkDiagram::crossing_index(const std::string& id) const {
    for (std::size_t i = 0; i < crossings.size(); ++i)
        if (crossings[i].id == id) return i;
    throw Error("UnknownCrossing", "no crossing " + id);
}

std::size_t FramedLinkDiagram::arc_component(Arc a) const {
    for (std::size_t i = 0; i < components.size(); ++i) {
        const auto& arcs = components[i].arcs;
        if (!arcs.empty() && a >= arcs.front() && a <= arcs.back()) return i;
    }
    throw Error("UnknownArc", "arc " + arc_str(a) + " belongs to no component");
}

Arc FramedLinkDiagram::next_arc(Arc a) const {
    const auto& arcs = components[arc_component(a)].arcs;
    return a == arcs.back() ? arcs.front() : a + 1;
}

Arc FramedLinkDiagram::prev_arc(Arc a) const {
    const auto& arcs = components[arc_component(a)].arcs;
    return a == arcs.front() ? arcs.back() : a - 1;
}

int FramedLinkDiagram::over_in_slot(std::size_t ci) const {
    const Crossing& c = crossings[ci];
    Arc x = c.slots[1], y = c.slots[3];
    bool xy = next_arc(x) == y;
    bool yx = next_arc(y) == x;
    if (xy && !yx) return 1;
    if (yx && !xy) return 3;
    if (!xy && !yx)
        throw Error("BadNumbering", "over strand at crossing " + c.id + " breaks arc order");
    /* two-arc component: both directions fit the numbering, so decide which
     * of its two visits this crossing hosts */
    Arc lo = std::min(x, y), hi = std::max(x, y);
    std::size_t comp = arc_component(x);
    Arc over_in = 0;
    std::size_t under_at = crossings.size();
    for (std::size_t j = 0; j < crossings.size() && under_at == crossings.size(); ++j)
        if (arc_component(crossings[j].slots[0]) == comp) under_at = j;
    if (under_at < crossings.size()) {
        /* the under visit pins the orientation: under in-arc starts v1 */
        Arc under_in = crossings[under_at].slots[0];
        over_in = (under_in == lo) ? hi : lo;
    } else {
        /* both visits are over visits at two crossings; the smaller id
         * hosts the visit entering with the smaller arc */
        std::size_t cj = ci;
        for (std::size_t j = 0; j < crossings.size() && cj == ci; ++j)
            if (j != ci)
                for (int s : {1, 3})
                    if (crossings[j].slots[s] == x) cj = j;
        if (cj == ci)
            throw Error("BadNumbering", "lone over pair at crossing " + c.id);
        over_in = (c.id < crossings[cj].id) ? lo : hi;
    }
    return c.slots[1] == over_in ? 1 : 3;
}

int FramedLinkDiagram::crossing_sign(std::size_t ci) const {
    return over_in_slot(ci) == 3 ? +1 : -1;
}

std::vector<DiagramFace> FramedLinkDiagram::faces() const {
    std::map<Arc, std::vector<Dart>> occ;
    for (std::size_t i = 0; i < crossings.size(); ++i)
        for (int s = 0; s < 4; ++s) occ[crossings[i].slots[s]].push_back({i, s});
    auto other_end = [&](Arc a, const Dart& here) -> Dart {
        const auto& v = occ.at(a);
        if (v.size() != 2) throw Error("NonPlanar", "arc " + arc_str(a) + " is not an edge");
        return v[0] == here ? v[1] : v[0];
    };
    std::vector<DiagramFace> out;
    std::set<Dart> visited;
    for (std::size_t i = 0; i < crossings.size(); ++i)
        for (int s = 0; s < 4; ++s) {
            Dart start{i, s};
            if (visited.count(start)) continue;
            DiagramFace f;
            Dart d = start;
            do {
                visited.insert(d);
                f.darts.push_back(d);
                f.walls.push_back(crossings[d.crossing].slots[d.slot]);
                int t = (d.slot + 1) % 4;
                Arc b = crossings[d.crossing].slots[t];
                d = other_end(b, Dart{d.crossing, t});
            } while (!(d == start));
            out.push_back(std::move(f));
        }
    /* Euler check per connected piece of the 4-valent graph */
    if (!crossings.empty()) {
        std::vector<std::size_t> piece(crossings.size());
        for (std::size_t i = 0; i < piece.size(); ++i) piece[i] = i;
        auto root = [&](std::size_t a) {
            while (piece[a] != a) a = piece[a] = piece[piece[a]];
            return a;
        };
        for (const auto& [a, v] : occ) piece[root(v[0].crossing)] = root(v[1].crossing);
        std::map<std::size_t, std::array<long, 3>> vef;  // V, E, F
        for (std::size_t i = 0; i < crossings.size(); ++i) vef[root(i)][0] += 1;
        for (const auto& [a, v] : occ) vef[root(v[0].crossing)][1] += 1;
        for (const auto& f : out) vef[root(f.darts.front().crossing)][2] += 1;
        for (const auto& [r, c] : vef)
            if (c[0] - c[1] + c[2] != 2) {
                std::ostringstream msg;
                msg << "piece at crossing " << crossings[r].id << " has V-E+F = "
                    << (c[0] - c[1] + c[2]);
                throw Error("NonPlanar", msg.str());
            }
    }
    for (std::size_t i = 0; i < components.size(); ++i)
        if (components[i].is_loop())
            for (int k = 0; k < 2; ++k) {
                DiagramFace f;
                f.loop = i;
                out.push_back(std::move(f));
            }
    for (std::size_t i = 0; i < out.size(); ++i) out[i].id = "F" + std::to_string(i);
    return out;
}

std::vector<FramedLinkDiagram::GaussEntry> FramedLinkDiagram::gauss_code(
    const std::string& component) const {
    const Component& c = components[component_index(component)];
    std::vector<GaussEntry> code;
    for (Arc a : c.arcs) {
        /* head visit: where a enters a crossing */
        bool found = false;
        for (std::size_t i = 0; i < crossings.size() && !found; ++i) {
            if (crossings[i].slots[0] == a) {
                code.push_back({crossings[i].id, false, crossing_sign(i)});
                found = true;
            } else {
                int os = -1;
                if (crossings[i].slots[1] == a || crossings[i].slots[3] == a) os = over_in_slot(i);
                if (os >= 0 && crossings[i].slots[os] == a) {
                    /* kinks can carry the same arc at both over slots' ends;
                     * only the over-in occurrence is a head visit */
                    code.push_back({crossings[i].id, true, crossing_sign(i)});
                    found = true;
                }
            }
        }
        if (!found)
            throw Error("BadNumbering", "arc " + arc_str(a) + " never enters a crossing");
    }
    return code;
}

FramedLinkDiagram FramedLinkDiagram::mirrored() const {
    FramedLinkDiagram d = *this;
    for (std::size_t i = 0; i < crossings.size(); ++i) {
        int k = over_in_slot(i);
        const auto& old = crossings[i].slots;
        std::array<Arc, 4> ns;
        for (int s = 0; s < 4; ++s) ns[s] = old[(k + s) % 4];
        d.crossings[i].slots = ns;
    }
    return d;
}

FramedLinkDiagram FramedLinkDiagram::reversed(const std::string& component) const {
    std::size_t k = component_index(component);
    const Component& comp = components[k];
    if (comp.is_loop()) return *this;
    Arc lo = comp.arcs.front(), hi = comp.arcs.back();
    auto remap = [&](Arc a) { return (a >= lo && a <= hi) ? Arc(lo + (hi - a)) : a; };
    FramedLinkDiagram d = *this;
    for (std::size_t i = 0; i < crossings.size(); ++i) {
        bool under_here = arc_component(crossings[i].slots[0]) == k;
        std::array<Arc, 4> ns;
        for (int s = 0; s < 4; ++s)
            ns[s] = remap(crossings[i].slots[under_here ? (s + 2) % 4 : s]);
        d.crossings[i].slots = ns;
    }
    return d;
}

FramedLinkDiagram FramedLinkDiagram::canonicalized() const {
    FramedLinkDiagram d = *this;
    std::stable_sort(d.components.begin(), d.components.end(),
                     [](const Component& a, const Component& b) { return a.label < b.label; });
    std::map<Arc, Arc> m;
    Arc next = 1;
    for (auto& c : d.components)
        for (Arc& a : c.arcs) {
            m[a] = next;
            a = next++;
        }
    for (auto& x : d.crossings)
        for (Arc& a : x.slots) a = m.at(a);
    std::stable_sort(d.crossings.begin(), d.crossings.end(),
                     [](const Crossing& a, const Crossing& b) { return a.id < b.id; });
    return d;
}

FramedLinkDiagram split_union(const FramedLinkDiagram& a, const FramedLinkDiagram& b,
                              bool relabel) {
    FramedLinkDiagram d = a;
    Arc base = 0;
    for (const auto& c : a.components)
        if (!c.arcs.empty()) base = std::max(base, c.arcs.back());
    std::set<std::string> ids, labels, xids;
    for (const auto& c : a.components) {
        ids.insert(c.id);
        labels.insert(c.label);
    }
    for (const auto& x : a.crossings) xids.insert(x.id);
    auto unique_name = [&](std::string n, std::set<std::string>& taken, const char* what) {
        if (!taken.count(n)) {
            taken.insert(n);
            return n;
        }
        if (!relabel) throw Error("LabelCollision", std::string(what) + " " + n + " already used");
        std::string base_name = n;
        for (int k = 2;; ++k) {
            n = base_name + "_" + std::to_string(k);
            if (!taken.count(n)) {
                taken.insert(n);
                return n;
            }
        }
    };
    for (const auto& c : b.components) {
        Component nc = c;
        nc.id = unique_name(c.id, ids, "component id");
        nc.label = unique_name(c.label, labels, "label");
        for (Arc& x : nc.arcs) x += base;
        d.components.push_back(std::move(nc));
    }
    for (const auto& x : b.crossings) {
        Crossing nx = x;
        nx.id = unique_name(x.id, xids, "crossing id");
        for (Arc& s : nx.slots) s += base;
        d.crossings.push_back(std::move(nx));
    }
    return d.canonicalized();
}

}  // namespace corkcalc
