#include "corkcalc/seifert.hpp"

#include "corkcalc/builders.hpp"
#include "corkcalc/errors.hpp"

#include <algorithm>
#include <map>

namespace corkcalc {

SeifertData seifert_circles(const FramedLinkDiagram& d) {
    std::size_t total_arcs = 0;
    for (const Component& c : d.components)
        total_arcs += c.arcs.size();

    /* Oriented smoothing successor: the under-in arc continues as the
     * over-out arc and vice versa (the unique non-crossing reconnection). */
    std::vector<Arc> succ(total_arcs + 1, 0);
    for (std::size_t ci = 0; ci < d.crossings.size(); ++ci) {
        const Crossing& x = d.crossings[ci];
        const int oin = d.over_in_slot(ci);
        const int oout = oin == 3 ? 1 : 3;
        succ[x.slots[0]] = x.slots[oout];
        succ[x.slots[oin]] = x.slots[2];
    }

    SeifertData sd;
    sd.circle_of_arc.assign(total_arcs + 1, static_cast<std::size_t>(-1));
    for (Arc a = 1; a <= static_cast<Arc>(total_arcs); ++a) {
        if (sd.circle_of_arc[a] != static_cast<std::size_t>(-1))
            continue;
        const std::size_t id = sd.circles++;
        for (Arc b = a; sd.circle_of_arc[b] == static_cast<std::size_t>(-1); b = succ[b])
            sd.circle_of_arc[b] = id;
    }
    for (const Component& c : d.components)
        if (c.is_loop())
            ++sd.circles;

    for (std::size_t ci = 0; ci < d.crossings.size(); ++ci) {
        const Crossing& x = d.crossings[ci];
        SeifertData::Edge e;
        e.crossing = ci;
        e.under_circle = sd.circle_of_arc[x.slots[0]];
        e.over_circle = sd.circle_of_arc[x.slots[d.over_in_slot(ci)]];
        e.sign = d.crossing_sign(ci);
        sd.edges.push_back(e);
    }
    return sd;
}

IntegerMatrix seifert_matrix(const FramedLinkDiagram& d, const std::string& component) {
    FramedLinkDiagram knot =
        d.components.size() > 1 ? component_subdiagram(d, component) : d;
    knot.component_index(component);  // existence check
    if (knot.crossings.empty())
        return IntegerMatrix(0, 0);

    const SeifertData sd = seifert_circles(knot);
    std::vector<std::vector<std::size_t>> incident(sd.circles);
    for (std::size_t e = 0; e < sd.edges.size(); ++e) {
        if (sd.edges[e].under_circle == sd.edges[e].over_circle)
            throw Error("SeifertUnsupported", "band with both feet on one circle");
        incident[sd.edges[e].under_circle].push_back(e);
        incident[sd.edges[e].over_circle].push_back(e);
    }
    std::size_t base = sd.circles;
    for (std::size_t v = 0; v < sd.circles; ++v) {
        if (incident[v].size() == 2)
            continue;
        if (base != sd.circles || incident[v].empty())
            throw Error("SeifertUnsupported", "Seifert graph is not a base circle with ears");
        base = v;
    }
    if (base == sd.circles)
        throw Error("SeifertUnsupported", "Seifert graph has no base circle");

    struct Ear {
        std::vector<std::size_t> edges;
    };
    std::vector<Ear> ears;
    std::vector<bool> used(sd.edges.size(), false);
    for (std::size_t e0 : incident[base]) {
        if (used[e0])
            continue;
        Ear ear;
        std::size_t e = e0;
        std::size_t at = base;
        while (true) {
            used[e] = true;
            ear.edges.push_back(e);
            const auto& rec = sd.edges[e];
            at = rec.under_circle == at ? rec.over_circle : rec.under_circle;
            if (at == base)
                break;
            std::size_t next = sd.edges.size();
            for (std::size_t f : incident[at])
                if (!used[f])
                    next = std::min(next, f);
            if (next == sd.edges.size())
                throw Error("SeifertUnsupported", "dangling chain in Seifert graph");
            e = next;
        }
        ears.push_back(std::move(ear));
    }
    if (std::find(used.begin(), used.end(), false) != used.end())
        throw Error("SeifertUnsupported", "disconnected Seifert graph");

    /* positions of arcs around the base circle, for the interleaving test */
    std::map<Arc, std::size_t> base_pos;
    {
        Arc start = 0;
        for (Arc a = 1; a < static_cast<Arc>(sd.circle_of_arc.size()); ++a)
            if (sd.circle_of_arc[a] == base) {
                start = a;
                break;
            }
        std::vector<Arc> succ(sd.circle_of_arc.size(), 0);
        for (std::size_t ci = 0; ci < knot.crossings.size(); ++ci) {
            const Crossing& x = knot.crossings[ci];
            const int oin = knot.over_in_slot(ci);
            succ[x.slots[0]] = x.slots[oin == 3 ? 1 : 3];
            succ[x.slots[oin]] = x.slots[2];
        }
        Arc a = start;
        do {
            base_pos[a] = base_pos.size();
            a = succ[a];
        } while (a != start);
    }
    auto foot = [&](std::size_t e) {
        const auto& rec = sd.edges[e];
        const Crossing& x = knot.crossings[rec.crossing];
        const Arc a = rec.under_circle == base
                          ? x.slots[0]
                          : x.slots[knot.over_in_slot(rec.crossing)];
        return base_pos.at(a);
    };

    const std::size_t g = ears.size();
    IntegerMatrix v(g, g);
    for (std::size_t i = 0; i < g; ++i) {
        Int sum = 0;
        for (std::size_t e : ears[i].edges)
            sum += sd.edges[e].sign;
        if (sum % 2 != 0)
            throw Error("SeifertUnsupported", "ear with odd total sign");
        v.at(i, i) = sum / 2;
    }
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i + 1; j < g; ++j) {
            const std::size_t p1 = foot(ears[i].edges.front()), p2 = foot(ears[i].edges.back());
            const std::size_t q1 = foot(ears[j].edges.front()), q2 = foot(ears[j].edges.back());
            const auto [lo, hi] = std::minmax(p1, p2);
            const bool in1 = lo < q1 && q1 < hi, in2 = lo < q2 && q2 < hi;
            if (in1 != in2)
                v.at(i, j) = 1;  // single clasp; the orientation choice is a
                                 // unit on det(V - tVᵀ)
        }
    return v;
}

IntegerMatrix seifert_matrix_braid(int n, const std::vector<int>& word) {
    struct Band {
        std::size_t pos;
        int col, sign;
    };
    std::vector<Band> bands;
    for (std::size_t p = 0; p < word.size(); ++p) {
        const int letter = word[p];
        const int col = std::abs(letter) - 1;
        if (col < 0 || col + 1 >= n)
            throw Error("ValidationError", "braid letter out of range");
        bands.push_back({p, col, letter > 0 ? 1 : -1});
    }
    struct Loop {
        int col;
        std::size_t a_pos, b_pos;
        int a_sign, b_sign;
    };
    std::vector<Loop> loops;
    for (int col = 0; col + 1 < n; ++col) {
        const Band* prev = nullptr;
        for (const Band& b : bands) {
            if (b.col != col)
                continue;
            if (prev)
                loops.push_back({col, prev->pos, b.pos, prev->sign, b.sign});
            prev = &b;
        }
    }

    const std::size_t g = loops.size();
    IntegerMatrix v(g, g);
    for (std::size_t i = 0; i < g; ++i)
        v.at(i, i) = -(loops[i].a_sign + loops[i].b_sign) / 2;
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i + 1; j < g; ++j) {
            const Loop& x = loops[i];
            const Loop& y = loops[j];
            if (x.col == y.col && x.b_pos == y.a_pos) {
                if (x.b_sign > 0)
                    v.at(i, j) = 1;
                else
                    v.at(j, i) = -1;
            } else if (y.col == x.col + 1) {
                if (x.a_pos < y.a_pos && y.a_pos < x.b_pos && x.b_pos < y.b_pos)
                    v.at(i, j) = 1;
                else if (y.a_pos < x.a_pos && x.a_pos < y.b_pos && y.b_pos < x.b_pos)
                    v.at(j, i) = 1;
            }
        }
    return v;
}

LaurentPolynomial alexander_from_seifert(const IntegerMatrix& v) {
    if (v.rows() == 0)
        return LaurentPolynomial(Int(1));
    std::vector<std::vector<LaurentPolynomial>> m(v.rows(),
                                                  std::vector<LaurentPolynomial>(v.rows()));
    for (std::size_t i = 0; i < v.rows(); ++i)
        for (std::size_t j = 0; j < v.rows(); ++j) {
            m[i][j] += LaurentPolynomial(v.at(i, j));
            m[i][j] -= LaurentPolynomial(v.at(j, i), 1);
        }
    return laurent_det(m).normalized_alexander();
}

}  // namespace corkcalc
