#include "corkcalc/alexander.hpp"

#include "corkcalc/builders.hpp"
#include "corkcalc/errors.hpp"

namespace corkcalc {

WirtingerPresentation wirtinger_presentation(const FramedLinkDiagram& d,
                                             const std::string& component, bool strict) {
    const std::size_t idx = d.component_index(component);
    if (d.components.size() > 1) {
        if (strict)
            throw Error("MultiComponent", "diagram has " + std::to_string(d.components.size()) +
                                              " components; pass strict = false to project onto " +
                                              component);
        return wirtinger_presentation(component_subdiagram(d, component), component, true);
    }
    const Component& c = d.components[idx];
    WirtingerPresentation w;
    if (c.is_loop()) {
        w.generators = 1;  // <x | >
        return w;
    }

    const std::size_t m = c.arcs.size();
    struct Head {
        std::size_t crossing = 0;
        bool under = false;
    };
    std::vector<Head> head(m + 1);
    for (std::size_t ci = 0; ci < d.crossings.size(); ++ci) {
        head[d.crossings[ci].slots[0]] = {ci, true};
        head[d.crossings[ci].slots[d.over_in_slot(ci)]] = {ci, false};
    }
    auto head_of = [&](std::size_t j) -> const Head& { return head[c.arcs[j % m]]; };

    std::size_t start = 0;
    while (start < m && !head_of(start + m - 1).under)
        ++start;
    if (start == m)
        throw Error("ValidationError", "component has crossings but no under-passage");

    w.run_of_arc.assign(m + 1, -1);
    int run = 0;
    for (std::size_t k = 0; k < m; ++k) {
        const std::size_t j = (start + k) % m;
        w.run_of_arc[c.arcs[j]] = run;
        if (head_of(j).under)
            ++run;
    }
    w.generators = static_cast<std::size_t>(run);
    if (w.generators != d.crossings.size())
        throw Error("ValidationError", "over-run count disagrees with crossing count");

    for (std::size_t ci = 0; ci < d.crossings.size(); ++ci) {
        const Crossing& x = d.crossings[ci];
        WirtingerPresentation::Relation r;
        r.under_in = w.run_of_arc[x.slots[0]];
        r.under_out = w.run_of_arc[x.slots[2]];
        r.over = w.run_of_arc[x.slots[d.over_in_slot(ci)]];
        r.sign = d.crossing_sign(ci);
        w.relations.push_back(r);
    }
    return w;
}

IntegerMatrix wirtinger_abelianized(const WirtingerPresentation& w) {
    IntegerMatrix at(w.generators, w.relations.size());
    for (std::size_t r = 0; r < w.relations.size(); ++r) {
        at.at(w.relations[r].under_in, r) += 1;
        at.at(w.relations[r].under_out, r) -= 1;
    }
    return at;
}

LaurentPolynomial fox_alexander(const WirtingerPresentation& w) {
    const AbelianGroupInvariants ab = cokernel_invariants(wirtinger_abelianized(w));
    if (ab.rank != 1 || !ab.torsion.empty())
        throw Error("NonKnotAbelianization",
                    "relation matrix abelianizes to " + ab.to_string() + ", not Z");
    const std::size_t n = w.relations.size();
    if (n == 0)
        return LaurentPolynomial(Int(1));

    /* Fox rows of out = over^ε · in · over^-ε, abelianized: in -> t^ε,
     * out -> -1, over -> 1 - t^ε; += throughout so kinks accumulate. */
    std::vector<std::vector<LaurentPolynomial>> fox(n,
                                                    std::vector<LaurentPolynomial>(w.generators));
    for (std::size_t r = 0; r < n; ++r) {
        const auto& rel = w.relations[r];
        const int e = rel.sign > 0 ? 1 : -1;
        fox[r][rel.under_in] += LaurentPolynomial::t(e);
        fox[r][rel.under_out] += LaurentPolynomial(Int(-1));
        fox[r][rel.over] += LaurentPolynomial(Int(1)) - LaurentPolynomial::t(e);
    }

    LaurentPolynomial g;
    for (std::size_t skip = 0; skip < n; ++skip) {
        std::vector<std::vector<LaurentPolynomial>> minor;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == skip)
                continue;
            std::vector<LaurentPolynomial> row(fox[r].begin() + 1, fox[r].end());
            minor.push_back(std::move(row));
        }
        g = laurent_gcd(g, laurent_det(minor));
    }
    return g.normalized_alexander();
}

LaurentPolynomial fox_alexander(const FramedLinkDiagram& d, const std::string& component,
                                bool strict) {
    return fox_alexander(wirtinger_presentation(d, component, strict));
}

}  // namespace corkcalc
