#include "corkcalc/linking.hpp"

#include "corkcalc/errors.hpp"

#include <algorithm>

namespace corkcalc {

Int linking_number(const FramedLinkDiagram& d, const std::string& a, const std::string& b) {
    const std::size_t ia = d.component_index(a), ib = d.component_index(b);
    if (ia == ib)
        throw Error("UnknownComponent", "linking number needs two distinct components");
    Int sum = 0;
    for (std::size_t ci = 0; ci < d.crossings.size(); ++ci) {
        const Crossing& x = d.crossings[ci];
        const std::size_t cu = d.arc_component(x.slots[0]);
        const std::size_t co = d.arc_component(x.slots[d.over_in_slot(ci)]);
        if ((cu == ia && co == ib) || (cu == ib && co == ia))
            sum += d.crossing_sign(ci);
    }
    if (sum % 2 != 0)
        throw Error("ValidationError", "odd signed crossing count between " + a + " and " + b);
    return sum / 2;
}

LinkingPresentation linking_matrix(const FramedLinkDiagram& d) {
    LinkingPresentation p;
    for (const Component& c : d.components)
        if (c.coeff.fills())
            p.filled.push_back({c.label, c.coeff});
    for (const Component& c : d.components)
        if (c.coeff.kind == Filling::Unfilled)
            p.unfilled.push_back(c.label);
    for (const Component& c : d.components)
        if (c.coeff.kind == Filling::Ornament)
            p.ornaments.push_back(c.label);
    for (const auto& e : p.filled)
        p.order.push_back(e.label);
    p.order.insert(p.order.end(), p.unfilled.begin(), p.unfilled.end());
    p.order.insert(p.order.end(), p.ornaments.begin(), p.ornaments.end());

    const std::size_t n = p.order.size();
    p.linking = IntegerMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Int v = linking_number(d, p.order[i], p.order[j]);
            p.linking.at(i, j) = v;
            p.linking.at(j, i) = v;
        }
    return p;
}

Int LinkingPresentation::lk(const std::string& a, const std::string& b) const {
    const auto pos = [&](const std::string& l) {
        const auto it = std::find(order.begin(), order.end(), l);
        if (it == order.end())
            throw Error("UnknownComponent", "no component " + l + " in linking presentation");
        return static_cast<std::size_t>(it - order.begin());
    };
    return linking.at(pos(a), pos(b));
}

AbelianGroupInvariants h1_surgery(const LinkingPresentation& p) {
    const std::size_t gens = p.filled.size() + p.unfilled.size();
    IntegerMatrix relations(gens, p.filled.size());
    for (std::size_t i = 0; i < p.filled.size(); ++i) {
        const auto [pi, qi] = p.filled[i].coeff.as_fraction_with_infinity();
        for (std::size_t j = 0; j < gens; ++j)
            relations.at(j, i) = (j == i) ? pi : qi * p.linking.at(i, j);
    }
    return cokernel_invariants(relations);
}

AbelianGroupInvariants h1_surgery(const FramedLinkDiagram& d) {
    return h1_surgery(linking_matrix(d));
}

}  // namespace corkcalc
