#pragma once

#include "corkcalc/chain.hpp"

#include <string>
#include <utility>
#include <vector>

namespace corkcalc {

/* CW complex of dimension <= 2.  2-cells carry honest attaching words in
 * oriented 1-cells; homology only consumes the abelianization, but keeping
 * the words lets products and disk attachments stay genuine cell structures. */
class CWComplex {
public:
    struct Edge {
        std::string label;
        std::size_t tail, head;
    };
    struct Face {
        std::string label;
        std::vector<std::pair<std::size_t, int>> word;  // (edge index, +1/-1)
    };

    std::size_t add_vertex(const std::string& label);
    std::size_t add_edge(const std::string& label, std::size_t tail, std::size_t head);
    std::size_t add_face(const std::string& label, std::vector<std::pair<std::size_t, int>> word);

    std::size_t vertex_index(const std::string& label) const;
    std::size_t edge_index(const std::string& label) const;

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Face>& faces() const { return faces_; }

    std::size_t dimension() const;
    ChainComplex chain() const;

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::vector<Face> faces_;
};

/* one vertex v, one loop edge s */
CWComplex circle();
/* one vertex v, loop edges x1..xn */
CWComplex wedge_circles(std::size_t n);
/* homotopy model: wedge of two circles labeled c-1, c+1 (the core curves;
 * the boundary circle is null-homotopic in this model and not represented) */
CWComplex punctured_torus();

/* Cell-by-cell product.  Requires dim(a) + dim(b) <= 2 so the result is again
 * a CW complex in this class (square 2-cells get commutator-shaped words);
 * higher products go through product_chain.  Error "DimensionLimit". */
CWComplex product(const CWComplex& a, const CWComplex& b);

/* Chain-level product with the graded Leibniz boundary
 * ∂(x×y) = ∂x×y + (-1)^{deg x} x×∂y; handles total dimension up to 4. */
ChainComplex product_chain(const CWComplex& a, const CWComplex& b);

/* Attach a 2-cell along a word given by (edge label, sign) pairs. */
CWComplex attach_disk(const CWComplex& x, const std::vector<std::pair<std::string, int>>& word,
                      const std::string& label);
/* Convenience: attach along a single 1-cell traversed once; the new cell is
 * labeled d_<edge>. */
CWComplex attach_disk(const CWComplex& x, const std::string& edge_label);

/* Certificate that deleting disks dual to an H2 basis kills H2: the |det| of
 * the disk/basis intersection pairing must be 1.  The "no new H1" half (the
 * meridians of the deleted disks bound immersed spheres) is a recorded
 * assumption, not a computation. */
struct BallCertificate {
    bool certified = false;
    Int pairing_det = 0;
    std::string assumption;
};
BallCertificate homology_ball_certificate(std::size_t h2_basis_size, const IntegerMatrix& pairing);

}  // namespace corkcalc
