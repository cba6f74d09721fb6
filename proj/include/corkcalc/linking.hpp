#pragma once

#include "corkcalc/diagram.hpp"
#include "corkcalc/matrix.hpp"

#include <string>
#include <vector>

namespace corkcalc {

/* Half the signed crossing count between two distinct components. */
Int linking_number(const FramedLinkDiagram& d, const std::string& a, const std::string& b);

/* Pairwise linking data of a diagram, split by filling role.  `order` lists
 * the row/column labels of `linking` — filled components first, then
 * unfilled, then ornaments; the matrix is symmetric with zero diagonal. */
struct LinkingPresentation {
    struct Entry {
        std::string label;
        SurgeryCoefficient coeff;
        bool operator==(const Entry&) const = default;
    };
    std::vector<Entry> filled;
    std::vector<std::string> unfilled;
    std::vector<std::string> ornaments;
    std::vector<std::string> order;
    IntegerMatrix linking;

    bool operator==(const LinkingPresentation&) const = default;
    Int lk(const std::string& a, const std::string& b) const;
};

LinkingPresentation linking_matrix(const FramedLinkDiagram& d);

/* First homology of the surgered manifold: one generator per filled or
 * unfilled component, one relation p_i·μ_i + q_i·Σ lk(i,j)·μ_j per filled
 * component (with n = n/1 and ∞ = 1/0).  Ornaments carry no surgery data
 * and do not enter.  Unfilled components contribute free generators only. */
AbelianGroupInvariants h1_surgery(const LinkingPresentation& p);
AbelianGroupInvariants h1_surgery(const FramedLinkDiagram& d);

}  // namespace corkcalc
