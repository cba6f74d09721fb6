#pragma once

#include "corkcalc/diagram.hpp"
#include "corkcalc/laurent.hpp"
#include "corkcalc/matrix.hpp"

#include <string>
#include <vector>

namespace corkcalc {

/* Seifert circles of the oriented smoothing.  circle_of_arc is indexed by
 * arc (0 unused); each crossing becomes an edge between the circle of its
 * under strand and the circle of its over strand. */
struct SeifertData {
    std::size_t circles = 0;
    std::vector<std::size_t> circle_of_arc;
    struct Edge {
        std::size_t crossing = 0;
        std::size_t under_circle = 0, over_circle = 0;
        int sign = 1;
    };
    std::vector<Edge> edges;
};

SeifertData seifert_circles(const FramedLinkDiagram& d);

/* Seifert matrix for knot diagrams whose Seifert graph is a base circle with
 * disjoint ears (chains of bands through degree-two circles) — the shape the
 * twist-knot template produces.  Basis: one cycle per ear; diagonal entries
 * are half the signed band count of the ear, off-diagonal pairs are (1, 0)
 * when the ears' feet interleave around the base circle and (0, 0) otherwise.
 * Anything else raises Error("SeifertUnsupported"). */
IntegerMatrix seifert_matrix(const FramedLinkDiagram& d, const std::string& component);

/* Seifert matrix of a closed braid read off the word (Bennequin surface):
 * basis loops are consecutive same-column band pairs. */
IntegerMatrix seifert_matrix_braid(int n, const std::vector<int>& word);

/* det(V - t Vᵀ), normalized. */
LaurentPolynomial alexander_from_seifert(const IntegerMatrix& v);

}  // namespace corkcalc
