#include "corkcalc/builders.hpp"

#include "corkcalc/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace corkcalc {

namespace {

std::string numbered(const std::string& stem, int n) {
    return stem + std::to_string(n);
}

}  // namespace

EditableDiagram EditableDiagram::from_diagram(const FramedLinkDiagram& d) {
    EditableDiagram e;
    std::map<Arc, Visit> head;  // arc -> the pass it runs into
    for (std::size_t ci = 0; ci < d.crossings.size(); ++ci) {
        const Crossing& x = d.crossings[ci];
        e.crossing_ids.push_back(x.id);
        e.signs.push_back(d.crossing_sign(ci));
        head[x.slots[0]] = Visit{static_cast<int>(ci), false};
        head[x.slots[d.over_in_slot(ci)]] = Visit{static_cast<int>(ci), true};
    }
    for (const Component& c : d.components) {
        Strand s;
        s.id = c.id;
        s.label = c.label;
        s.coeff = c.coeff;
        for (Arc a : c.arcs) {
            auto it = head.find(a);
            if (it == head.end())
                throw Error("ValidationError", "arc " + std::to_string(a) + " enters no crossing");
            s.visits.push_back(it->second);
        }
        e.strands.push_back(std::move(s));
    }
    return e;
}

FramedLinkDiagram EditableDiagram::to_diagram() const {
    std::vector<Arc> lo(strands.size());
    Arc base = 0;
    for (std::size_t s = 0; s < strands.size(); ++s) {
        lo[s] = base + 1;
        base += static_cast<Arc>(strands[s].visits.size());
    }
    struct Pass {
        Arc in = 0, out = 0;
        bool seen = false;
    };
    std::vector<Pass> under(signs.size()), over(signs.size());
    for (std::size_t s = 0; s < strands.size(); ++s) {
        const auto& vs = strands[s].visits;
        const Arc m = static_cast<Arc>(vs.size());
        for (Arc j = 0; j < m; ++j) {
            const Visit& v = vs[j];
            if (v.crossing < 0 || v.crossing >= static_cast<int>(signs.size()))
                throw Error("ValidationError", "visit to unknown crossing");
            Pass& p = v.over ? over[v.crossing] : under[v.crossing];
            if (p.seen)
                throw Error("ValidationError", "crossing " + crossing_ids[v.crossing] +
                                                   " has a duplicate " +
                                                   (v.over ? "over" : "under") + " pass");
            p = Pass{lo[s] + j, lo[s] + (j + 1) % m, true};
        }
    }
    FramedLinkDiagram d;
    for (std::size_t k = 0; k < signs.size(); ++k) {
        if (!under[k].seen || !over[k].seen)
            throw Error("ValidationError", "crossing " + crossing_ids[k] + " is missing a pass");
        Crossing x;
        x.id = crossing_ids[k];
        x.slots[0] = under[k].in;
        x.slots[2] = under[k].out;
        if (signs[k] > 0) {
            x.slots[3] = over[k].in;
            x.slots[1] = over[k].out;
        } else {
            x.slots[1] = over[k].in;
            x.slots[3] = over[k].out;
        }
        d.crossings.push_back(std::move(x));
    }
    for (std::size_t s = 0; s < strands.size(); ++s) {
        Component c;
        c.id = strands[s].id;
        c.label = strands[s].label.empty() ? strands[s].id : strands[s].label;
        c.coeff = strands[s].coeff;
        for (Arc j = 0; j < static_cast<Arc>(strands[s].visits.size()); ++j)
            c.arcs.push_back(lo[s] + j);
        d.components.push_back(std::move(c));
    }
    d = d.canonicalized();
    d.require_valid();
    return d;
}

int EditableDiagram::add_crossing(int sign) {
    return add_crossing(sign, fresh_crossing_id());
}

int EditableDiagram::add_crossing(int sign, const std::string& id) {
    if (sign != 1 && sign != -1)
        throw Error("ValidationError", "crossing sign must be +1 or -1");
    for (const std::string& have : crossing_ids)
        if (have == id)
            throw Error("ValidationError", "duplicate crossing id " + id);
    crossing_ids.push_back(id);
    signs.push_back(sign);
    return static_cast<int>(signs.size()) - 1;
}

int EditableDiagram::strand_index(const std::string& ref) const {
    for (std::size_t s = 0; s < strands.size(); ++s)
        if (strands[s].id == ref)
            return static_cast<int>(s);
    for (std::size_t s = 0; s < strands.size(); ++s)
        if (strands[s].label == ref)
            return static_cast<int>(s);
    throw Error("UnknownComponent", "no component " + ref);
}

int EditableDiagram::crossing_index(const std::string& id) const {
    for (std::size_t k = 0; k < crossing_ids.size(); ++k)
        if (crossing_ids[k] == id)
            return static_cast<int>(k);
    throw Error("UnknownCrossing", "no crossing " + id);
}

std::pair<int, int> EditableDiagram::position_of_arc(const FramedLinkDiagram& d, Arc a) const {
    const std::size_t ci = d.arc_component(a);
    const Component& c = d.components[ci];
    for (std::size_t j = 0; j < c.arcs.size(); ++j)
        if (c.arcs[j] == a)
            return {strand_index(c.id), static_cast<int>(j)};
    throw Error("ValidationError", "arc " + std::to_string(a) + " not on its component");
}

void EditableDiagram::insert_visits(int strand, int gap, const std::vector<Visit>& vs) {
    auto& visits = strands.at(strand).visits;
    if (gap < 0 || gap > static_cast<int>(visits.size()))
        throw Error("ValidationError", "bad insertion gap");
    visits.insert(visits.begin() + gap, vs.begin(), vs.end());
}

void EditableDiagram::remove_crossing(int crossing) {
    for (Strand& s : strands) {
        std::vector<Visit> kept;
        for (const Visit& v : s.visits) {
            if (v.crossing == crossing)
                continue;
            Visit w = v;
            if (w.crossing > crossing)
                --w.crossing;
            kept.push_back(w);
        }
        s.visits = std::move(kept);
    }
    crossing_ids.erase(crossing_ids.begin() + crossing);
    signs.erase(signs.begin() + crossing);
}

void EditableDiagram::remove_strand_with_crossings(int strand) {
    std::set<int> gone;
    for (const Visit& v : strands.at(strand).visits)
        gone.insert(v.crossing);
    strands.erase(strands.begin() + strand);
    for (auto it = gone.rbegin(); it != gone.rend(); ++it)
        remove_crossing(*it);
}

std::string EditableDiagram::fresh_crossing_id() const {
    std::set<std::string> taken(crossing_ids.begin(), crossing_ids.end());
    for (int n = 1;; ++n) {
        std::string id = numbered("x", n);
        if (!taken.count(id))
            return id;
    }
}

std::string EditableDiagram::fresh_strand_id(const std::string& stem) const {
    std::set<std::string> taken;
    for (const Strand& s : strands) {
        taken.insert(s.id);
        taken.insert(s.label);
    }
    for (int n = 1;; ++n) {
        std::string id = numbered(stem, n);
        if (!taken.count(id))
            return id;
    }
}

int PlanarTangleBuilder::add_crossing(bool over02) {
    crossings_.push_back(CrossingRec{over02});
    return static_cast<int>(crossings_.size()) - 1;
}

void PlanarTangleBuilder::connect(Port a, Port b) {
    edges_.emplace_back(a, b);
}

void PlanarTangleBuilder::anchor(Port at, const ComponentSpec& spec, bool outgoing) {
    anchors_.emplace_back(at, spec, outgoing);
}

void PlanarTangleBuilder::add_loop(const ComponentSpec& spec) {
    loops_.push_back(spec);
}

FramedLinkDiagram PlanarTangleBuilder::build() const {
    const std::size_t n = crossings_.size();
    auto key = [](Port p) { return p.crossing * 4 + p.dir; };
    std::vector<int> partner(4 * n, -1);
    for (const auto& [a, b] : edges_) {
        for (Port p : {a, b})
            if (p.crossing < 0 || p.crossing >= static_cast<int>(n) || p.dir < 0 || p.dir > 3)
                throw Error("ValidationError", "edge at nonexistent port");
        if (partner[key(a)] != -1 || partner[key(b)] != -1)
            throw Error("ValidationError", "port connected twice");
        partner[key(a)] = key(b);
        partner[key(b)] = key(a);
    }
    for (std::size_t p = 0; p < 4 * n; ++p)
        if (partner[p] == -1)
            throw Error("ValidationError", "unconnected port " + std::to_string(p / 4) + ":" +
                                               std::to_string(p % 4));

    std::vector<Arc> port_arc(4 * n, 0);
    std::vector<int> port_state(4 * n, 0);  // 1 = strand leaves here, 2 = arrives
    FramedLinkDiagram d;
    Arc next_arc_no = 1;
    std::set<std::string> used_ids;
    auto trace = [&](int start, const ComponentSpec& spec) {
        Component c;
        c.id = spec.id;
        c.label = spec.label.empty() ? spec.id : spec.label;
        c.coeff = spec.coeff;
        int p = start;
        do {
            if (port_state[p] != 0)
                throw Error("ValidationError", "strand traced through a port twice");
            const Arc a = next_arc_no++;
            c.arcs.push_back(a);
            port_state[p] = 1;
            port_arc[p] = a;
            const int q = partner[p];
            if (port_state[q] != 0)
                throw Error("ValidationError", "strand traced through a port twice");
            port_state[q] = 2;
            port_arc[q] = a;
            p = (q / 4) * 4 + ((q % 4 + 2) % 4);
        } while (p != start);
        used_ids.insert(c.id);
        d.components.push_back(std::move(c));
    };

    for (const auto& [at, spec, outgoing] : anchors_) {
        int p = key(at);
        if (!outgoing)
            p = (p / 4) * 4 + ((p % 4 + 2) % 4);
        if (port_state[p] != 0)
            throw Error("ValidationError", "two orientation anchors on one strand");
        trace(p, spec);
    }
    int auto_id = 1;
    for (std::size_t p = 0; p < 4 * n; ++p) {
        if (port_state[p] != 0)
            continue;
        ComponentSpec spec;
        while (used_ids.count(numbered("c", auto_id)))
            ++auto_id;
        spec.id = numbered("c", auto_id++);
        trace(static_cast<int>(p), spec);
    }
    for (const ComponentSpec& spec : loops_) {
        Component c;
        c.id = spec.id;
        c.label = spec.label.empty() ? spec.id : spec.label;
        c.coeff = spec.coeff;
        d.components.push_back(std::move(c));
    }

    for (std::size_t k = 0; k < n; ++k) {
        const int u0 = crossings_[k].over02 ? 1 : 0;  // one port of the under pair
        int q = -1;
        for (int dir : {u0, u0 + 2})
            if (port_state[4 * k + dir] == 2)
                q = dir;
        if (q < 0)
            throw Error("ValidationError", "under strand never enters crossing");
        Crossing x;
        x.id = numbered("x", static_cast<int>(k) + 1);
        for (int j = 0; j < 4; ++j)
            x.slots[j] = port_arc[4 * k + (q + j) % 4];
        d.crossings.push_back(std::move(x));
    }
    d = d.canonicalized();
    d.require_valid();
    return d;
}

namespace {

/* Bottom position of the strand entering at each top position. */
std::vector<int> braid_permutation(int n, const std::vector<int>& word) {
    std::vector<int> cur(n);  // cur[position] = strand
    for (int t = 0; t < n; ++t)
        cur[t] = t;
    for (int letter : word) {
        const int i = std::abs(letter) - 1;
        if (i < 0 || i + 1 >= n)
            throw Error("ValidationError", "braid letter out of range");
        std::swap(cur[i], cur[i + 1]);
    }
    std::vector<int> pi(n);
    for (int pos = 0; pos < n; ++pos)
        pi[cur[pos]] = pos;
    return pi;
}

std::vector<std::vector<int>> closure_orbits(int n, const std::vector<int>& word) {
    const std::vector<int> pi = braid_permutation(n, word);
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> orbits;
    for (int t = 0; t < n; ++t) {
        if (seen[t])
            continue;
        std::vector<int> orbit;
        for (int u = t; !seen[u]; u = pi[u]) {
            seen[u] = true;
            orbit.push_back(u);
        }
        orbits.push_back(std::move(orbit));
    }
    return orbits;  // sorted by smallest element already (t ascending)
}

struct BraidLayout {
    PlanarTangleBuilder builder;
    /* dangling ends per position: top port of the first crossing met, bottom
     * port of the last one; empty for positions no letter touches */
    std::vector<std::optional<PlanarTangleBuilder::Port>> first, open;
};

/* Ports counterclockwise: 0 = top-right, 1 = top-left, 2 = bottom-left,
 * 3 = bottom-right; strands run downward, so σ_i^{+1} sends the over strand
 * from top-right to bottom-left, i.e. the (0,2) pair is the over one. */
BraidLayout lay_out_braid(int n, const std::vector<int>& word) {
    BraidLayout L;
    L.first.resize(n);
    L.open.resize(n);
    for (int letter : word) {
        const int i = std::abs(letter) - 1;
        if (i < 0 || i + 1 >= n)
            throw Error("ValidationError", "braid letter out of range");
        const int c = L.builder.add_crossing(letter > 0);
        const PlanarTangleBuilder::Port tl{c, 1}, tr{c, 0}, bl{c, 2}, br{c, 3};
        if (L.open[i])
            L.builder.connect(*L.open[i], tl);
        else
            L.first[i] = tl;
        if (L.open[i + 1])
            L.builder.connect(*L.open[i + 1], tr);
        else
            L.first[i + 1] = tr;
        L.open[i] = bl;
        L.open[i + 1] = br;
    }
    return L;
}

}  // namespace

FramedLinkDiagram braid_closure(int n, const std::vector<int>& word,
                                const std::vector<ComponentSpec>& specs) {
    if (n < 1)
        throw Error("ValidationError", "braid needs at least one strand");
    BraidLayout L = lay_out_braid(n, word);
    for (int t = 0; t < n; ++t)
        if (L.first[t])
            L.builder.connect(*L.open[t], *L.first[t]);
    const auto orbits = closure_orbits(n, word);
    if (specs.size() != orbits.size())
        throw Error("ValidationError", "braid closure has " + std::to_string(orbits.size()) +
                                           " components, got " + std::to_string(specs.size()) +
                                           " specs");
    for (std::size_t k = 0; k < orbits.size(); ++k) {
        const int t = orbits[k].front();
        if (L.first[t])
            L.builder.anchor(*L.first[t], specs[k], /*outgoing=*/false);
        else
            L.builder.add_loop(specs[k]);
    }
    return L.builder.build();
}

FramedLinkDiagram plat_closure(int n, const std::vector<int>& word,
                               const std::vector<ComponentSpec>& specs) {
    if (n < 2 || n % 2 != 0)
        throw Error("ValidationError", "plat closure needs an even strand count");
    BraidLayout L = lay_out_braid(n, word);

    /* Nodes t = top of position t, n + t = bottom.  Dangling crossing ports
     * (touched positions) get closed off by walking cap/untouched-wire
     * chains; each chain is a single arc of the final curve. */
    auto port_of = [&](int node) -> std::optional<PlanarTangleBuilder::Port> {
        return node < n ? L.first[node] : L.open[node - n];
    };
    auto cap_partner = [&](int v) {
        const int t = v % n;
        return v - t + (t % 2 == 0 ? t + 1 : t - 1);
    };
    auto wire_partner = [&](int v) { return v < n ? v + n : v - n; };
    for (int v = 0; v < 2 * n; ++v) {
        if (!port_of(v))
            continue;
        int u = cap_partner(v);
        while (!port_of(u))
            u = cap_partner(wire_partner(u));
        if (u > v)
            L.builder.connect(*port_of(v), *port_of(u));
    }

    /* Components: alternate strand edges (top t joins bottom π(t), which for
     * untouched positions is the wire itself) with cap edges. */
    const std::vector<int> pi = braid_permutation(n, word);
    std::vector<int> pi_inv(n);
    for (int t = 0; t < n; ++t)
        pi_inv[pi[t]] = t;
    auto strand_partner = [&](int v) { return v < n ? n + pi[v] : pi_inv[v - n]; };

    std::vector<bool> seen(2 * n, false);
    std::size_t next_spec = 0;
    for (int v = 0; v < 2 * n; ++v) {
        if (seen[v])
            continue;
        std::optional<PlanarTangleBuilder::Port> port;
        bool port_is_bottom = false;
        int u = v;
        do {
            for (int w : {u, cap_partner(u)}) {
                seen[w] = true;
                if (!port && port_of(w)) {
                    port = port_of(w);
                    port_is_bottom = w >= n;
                }
            }
            u = strand_partner(cap_partner(u));
        } while (u != v);
        if (next_spec >= specs.size())
            throw Error("ValidationError", "too few component specs for plat closure");
        const ComponentSpec spec = specs[next_spec++];
        if (port)
            L.builder.anchor(*port, spec, /*outgoing=*/port_is_bottom);
        else
            L.builder.add_loop(spec);
    }
    if (next_spec != specs.size())
        throw Error("ValidationError", "too many component specs for plat closure");
    return L.builder.build();
}

FramedLinkDiagram unknot_loop(const ComponentSpec& spec) {
    FramedLinkDiagram d;
    Component c;
    c.id = spec.id;
    c.label = spec.label.empty() ? spec.id : spec.label;
    c.coeff = spec.coeff;
    d.components.push_back(std::move(c));
    d = d.canonicalized();
    d.require_valid();
    return d;
}

FramedLinkDiagram twist_knot(int r, int s, const ComponentSpec& spec) {
    if (r == 0 || s == 0)
        return unknot_loop(spec);
    EditableDiagram e;
    const int R = 2 * std::abs(r), S = 2 * std::abs(s);
    const int sa = r > 0 ? 1 : -1;
    const int sb = s > 0 ? 1 : -1;
    std::vector<int> tbox, cbox;
    for (int k = 0; k < R; ++k)
        tbox.push_back(e.add_crossing(sa, numbered("t", k + 1)));
    for (int k = 0; k < S; ++k)
        cbox.push_back(e.add_crossing(sb, numbered("u", k + 1)));

    /* One strand, two antiparallel passes through each box; over/under
     * alternates within a pass and flips between passes, which keeps every
     * crossing of a box at the same sign.  The second box starts on the
     * opposite parity when the signs agree — that is the combination the
     * template can actually close up flat. */
    const int pb = sa == sb ? 1 : 0;
    EditableDiagram::Strand st;
    st.id = spec.id;
    st.label = spec.label.empty() ? spec.id : spec.label;
    st.coeff = spec.coeff;
    for (int k = 0; k < R; ++k)
        st.visits.push_back({tbox[k], k % 2 == 0});
    for (int k = 0; k < S; ++k)
        st.visits.push_back({cbox[k], k % 2 == pb});
    for (int k = R - 1; k >= 0; --k)
        st.visits.push_back({tbox[k], k % 2 == 1});
    for (int k = S - 1; k >= 0; --k)
        st.visits.push_back({cbox[k], k % 2 != pb});
    e.strands.push_back(std::move(st));
    return e.to_diagram();
}

FramedLinkDiagram twist_knot(int r, int s) {
    ComponentSpec spec;
    spec.id = "k";
    return twist_knot(r, s, spec);
}

int add_meridian(EditableDiagram& e, int strand, int gap, int sign, const ComponentSpec& spec) {
    const int c1 = e.add_crossing(sign);
    const int c2 = e.add_crossing(sign);
    e.insert_visits(strand, gap, {{c1, true}, {c2, false}});
    EditableDiagram::Strand m;
    m.id = spec.id;
    m.label = spec.label.empty() ? spec.id : spec.label;
    m.coeff = spec.coeff;
    m.visits = {{c1, false}, {c2, true}};
    e.strands.push_back(std::move(m));
    return static_cast<int>(e.strands.size()) - 1;
}

FramedLinkDiagram component_subdiagram(const FramedLinkDiagram& d, const std::string& component) {
    const std::string id = d.components[d.component_index(component)].id;
    EditableDiagram e = EditableDiagram::from_diagram(d);
    for (bool removed = true; removed;) {
        removed = false;
        for (std::size_t s = 0; s < e.strands.size(); ++s)
            if (e.strands[s].id != id) {
                e.remove_strand_with_crossings(static_cast<int>(s));
                removed = true;
                break;
            }
    }
    return e.to_diagram();
}

SurgeryCoefficient random_coefficient(std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, 99);
    const int w = pick(rng);
    if (w < 40) {
        std::uniform_int_distribution<int> n(-4, 4);
        return SurgeryCoefficient::integer(n(rng));
    }
    if (w < 60) {
        std::uniform_int_distribution<int> p(-5, 5), q(2, 5);
        int pp = p(rng);
        if (pp == 0)
            pp = 1;
        return SurgeryCoefficient::rational(pp, q(rng));
    }
    if (w < 70)
        return SurgeryCoefficient::infinity();
    if (w < 85)
        return SurgeryCoefficient::unfilled();
    return SurgeryCoefficient::ornament();
}

FramedLinkDiagram random_link(std::mt19937& rng) {
    std::uniform_int_distribution<int> nn(2, 5);
    const int n = nn(rng);
    std::uniform_int_distribution<int> ll(3, 14);
    const int len = ll(rng);
    std::uniform_int_distribution<int> gen(1, n - 1), coin(0, 1);
    std::vector<int> word;
    for (int k = 0; k < len; ++k)
        word.push_back(gen(rng) * (coin(rng) ? 1 : -1));
    const auto orbits = closure_orbits(n, word);
    std::vector<ComponentSpec> specs;
    for (std::size_t k = 0; k < orbits.size(); ++k) {
        ComponentSpec spec;
        spec.id = numbered("c", static_cast<int>(k) + 1);
        spec.coeff = random_coefficient(rng);
        specs.push_back(std::move(spec));
    }
    return braid_closure(n, word, specs);
}

FramedLinkDiagram random_knot(std::mt19937& rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::uniform_int_distribution<int> nn(2, 4);
        const int n = nn(rng);
        std::uniform_int_distribution<int> ll(n, 12);
        const int len = ll(rng);
        std::uniform_int_distribution<int> gen(1, n - 1), coin(0, 1);
        std::vector<int> word;
        for (int k = 0; k < len; ++k)
            word.push_back(gen(rng) * (coin(rng) ? 1 : -1));
        if (closure_orbits(n, word).size() != 1)
            continue;
        ComponentSpec spec;
        spec.id = "k1";
        spec.coeff = SurgeryCoefficient::integer(0);
        return braid_closure(n, word, {spec});
    }
    ComponentSpec spec;
    spec.id = "k1";
    spec.coeff = SurgeryCoefficient::integer(0);
    return braid_closure(2, {1, 1, 1}, {spec});
}

}  // namespace corkcalc
