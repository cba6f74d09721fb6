#pragma once

#include "corkcalc/diagram.hpp"
#include "corkcalc/laurent.hpp"

#include <string>
#include <vector>

namespace corkcalc {

/* Wirtinger presentation of a knot group: one generator per over-strand run
 * (arcs between consecutive under-passages), one relation per crossing.
 * Relation fields name generator indices; the relation itself reads
 * under_out = over^sign · under_in · over^-sign. */
struct WirtingerPresentation {
    struct Relation {
        int under_in = 0, under_out = 0, over = 0;
        int sign = 1;
    };
    std::size_t generators = 0;
    std::vector<Relation> relations;
    std::vector<int> run_of_arc;  // run_of_arc[a] for arcs 1..E; index 0 unused
};

/* With strict = true any extra component raises Error("MultiComponent");
 * otherwise the other components are deleted first. */
WirtingerPresentation wirtinger_presentation(const FramedLinkDiagram& d,
                                             const std::string& component, bool strict = true);

/* Integer abelianization of the relation matrix (t = 1 rows). */
IntegerMatrix wirtinger_abelianized(const WirtingerPresentation& w);

/* Normalized Alexander polynomial via the Fox Jacobian: delete one column,
 * take the gcd of all maximal minors.  Rejects presentations whose
 * abelianization is not Z ("NonKnotAbelianization"). */
LaurentPolynomial fox_alexander(const WirtingerPresentation& w);
LaurentPolynomial fox_alexander(const FramedLinkDiagram& d, const std::string& component,
                                bool strict = true);

}  // namespace corkcalc
