#include "corkcalc/cw.hpp"

#include <algorithm>

namespace corkcalc {

std::size_t CWComplex::add_vertex(const std::string& label) {
    for (const auto& v : vertices_)
        if (v == label) throw Error("DuplicateCell", "vertex label reused: " + label);
    vertices_.push_back(label);
    return vertices_.size() - 1;
}

std::size_t CWComplex::add_edge(const std::string& label, std::size_t tail, std::size_t head) {
    if (tail >= vertices_.size() || head >= vertices_.size())
        throw Error("UnknownCell", "edge " + label + " references missing vertex");
    for (const auto& e : edges_)
        if (e.label == label) throw Error("DuplicateCell", "edge label reused: " + label);
    edges_.push_back({label, tail, head});
    return edges_.size() - 1;
}

std::size_t CWComplex::add_face(const std::string& label,
                                std::vector<std::pair<std::size_t, int>> word) {
    for (const auto& [e, sgn] : word) {
        if (e >= edges_.size()) throw Error("UnknownCell", "face " + label + " references missing edge");
        if (sgn != 1 && sgn != -1) throw Error("UnknownCell", "face word signs must be ±1");
    }
    for (const auto& f : faces_)
        if (f.label == label) throw Error("DuplicateCell", "face label reused: " + label);
    faces_.push_back({label, std::move(word)});
    return faces_.size() - 1;
}

std::size_t CWComplex::vertex_index(const std::string& label) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i] == label) return i;
    throw Error("UnknownCell", "no vertex " + label);
}

std::size_t CWComplex::edge_index(const std::string& label) const {
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].label == label) return i;
    throw Error("UnknownCell", "no edge " + label);
}

std::size_t CWComplex::dimension() const {
    if (!faces_.empty()) return 2;
    if (!edges_.empty()) return 1;
    return 0;
}

ChainComplex CWComplex::chain() const {
    std::vector<std::size_t> counts{vertices_.size()};
    std::vector<IntegerMatrix> bnd;
    std::vector<std::vector<std::string>> labels{vertices_};
    if (!edges_.empty() || !faces_.empty()) {
        counts.push_back(edges_.size());
        IntegerMatrix d1(vertices_.size(), edges_.size());
        std::vector<std::string> elab;
        for (std::size_t j = 0; j < edges_.size(); ++j) {
            d1.at(edges_[j].head, j) += 1;
            d1.at(edges_[j].tail, j) -= 1;
            elab.push_back(edges_[j].label);
        }
        bnd.push_back(std::move(d1));
        labels.push_back(std::move(elab));
    }
    if (!faces_.empty()) {
        counts.push_back(faces_.size());
        IntegerMatrix d2(edges_.size(), faces_.size());
        std::vector<std::string> flab;
        for (std::size_t j = 0; j < faces_.size(); ++j) {
            for (const auto& [e, sgn] : faces_[j].word) d2.at(e, j) += sgn;
            flab.push_back(faces_[j].label);
        }
        bnd.push_back(std::move(d2));
        labels.push_back(std::move(flab));
    }
    return ChainComplex(std::move(counts), std::move(bnd), std::move(labels));
}

CWComplex circle() {
    CWComplex c;
    std::size_t v = c.add_vertex("v");
    c.add_edge("s", v, v);
    return c;
}

CWComplex wedge_circles(std::size_t n) {
    CWComplex c;
    std::size_t v = c.add_vertex("v");
    for (std::size_t i = 1; i <= n; ++i) c.add_edge("x" + std::to_string(i), v, v);
    return c;
}

CWComplex punctured_torus() {
    CWComplex c;
    std::size_t v = c.add_vertex("v");
    c.add_edge("c-1", v, v);
    c.add_edge("c+1", v, v);
    return c;
}

namespace {
std::string cross(const std::string& a, const std::string& b) { return a + " x " + b; }
}

CWComplex product(const CWComplex& a, const CWComplex& b) {
    if (a.dimension() + b.dimension() > 2)
        throw Error("DimensionLimit", "CW product only up to total dimension 2; use product_chain");
    CWComplex p;
    std::size_t nva = a.vertices().size(), nvb = b.vertices().size();
    for (std::size_t i = 0; i < nva; ++i)
        for (std::size_t j = 0; j < nvb; ++j) p.add_vertex(cross(a.vertices()[i], b.vertices()[j]));
    auto pv = [&](std::size_t i, std::size_t j) { return i * nvb + j; };
    /* edges: (a-edge x b-vertex) block first, then (a-vertex x b-edge) */
    for (std::size_t e = 0; e < a.edges().size(); ++e)
        for (std::size_t j = 0; j < nvb; ++j)
            p.add_edge(cross(a.edges()[e].label, b.vertices()[j]), pv(a.edges()[e].tail, j),
                       pv(a.edges()[e].head, j));
    for (std::size_t i = 0; i < nva; ++i)
        for (std::size_t f = 0; f < b.edges().size(); ++f)
            p.add_edge(cross(a.vertices()[i], b.edges()[f].label), pv(i, b.edges()[f].tail),
                       pv(i, b.edges()[f].head));
    auto pea = [&](std::size_t e, std::size_t j) { return e * nvb + j; };
    auto peb = [&](std::size_t i, std::size_t f) {
        return a.edges().size() * nvb + i * b.edges().size() + f;
    };
    /* squares e x f with boundary (e×v0)(u1×f)(e×v1)^-1(u0×f)^-1 */
    for (std::size_t e = 0; e < a.edges().size(); ++e)
        for (std::size_t f = 0; f < b.edges().size(); ++f) {
            const auto& ea = a.edges()[e];
            const auto& eb = b.edges()[f];
            std::vector<std::pair<std::size_t, int>> w{{pea(e, eb.tail), +1},
                                                       {peb(ea.head, f), +1},
                                                       {pea(e, eb.head), -1},
                                                       {peb(ea.tail, f), -1}};
            p.add_face(cross(ea.label, eb.label), std::move(w));
        }
    /* 2-cell x vertex and vertex x 2-cell */
    for (const auto& fa : a.faces())
        for (std::size_t j = 0; j < nvb; ++j) {
            std::vector<std::pair<std::size_t, int>> w;
            for (const auto& [e, sgn] : fa.word) w.emplace_back(pea(e, j), sgn);
            p.add_face(cross(fa.label, b.vertices()[j]), std::move(w));
        }
    for (std::size_t i = 0; i < nva; ++i)
        for (const auto& fb : b.faces()) {
            std::vector<std::pair<std::size_t, int>> w;
            for (const auto& [f, sgn] : fb.word) w.emplace_back(peb(i, f), sgn);
            p.add_face(cross(a.vertices()[i], fb.label), std::move(w));
        }
    return p;
}

ChainComplex product_chain(const CWComplex& a, const CWComplex& b) {
    ChainComplex ca = a.chain(), cb = b.chain();
    std::size_t da = ca.empty() ? 0 : ca.top_degree();
    std::size_t db = cb.empty() ? 0 : cb.top_degree();
    std::size_t top = da + db;
    /* cell (p, i, j) = (degree-p cell i of a) x (degree-(n-p) cell j of b);
     * within degree n order by p descending, then i, then j */
    struct Cell {
        std::size_t p, i, j;
    };
    std::vector<std::vector<Cell>> cells(top + 1);
    std::vector<std::vector<std::string>> labels(top + 1);
    for (std::size_t n = 0; n <= top; ++n) {
        for (std::size_t p = std::min(n, da) + 1; p-- > 0;) {
            std::size_t q = n - p;
            if (q > db) continue;
            for (std::size_t i = 0; i < ca.cells(p); ++i)
                for (std::size_t j = 0; j < cb.cells(q); ++j) {
                    cells[n].push_back({p, i, j});
                    labels[n].push_back(cross(ca.labels(p)[i], cb.labels(q)[j]));
                }
        }
    }
    auto index_of = [&](std::size_t n, std::size_t p, std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < cells[n].size(); ++k)
            if (cells[n][k].p == p && cells[n][k].i == i && cells[n][k].j == j) return k;
        throw Error("DimensionLimit", "internal product cell lookup failure");
    };
    std::vector<std::size_t> counts(top + 1);
    for (std::size_t n = 0; n <= top; ++n) counts[n] = cells[n].size();
    std::vector<IntegerMatrix> bnd;
    for (std::size_t n = 1; n <= top; ++n) {
        IntegerMatrix d(counts[n - 1], counts[n]);
        for (std::size_t col = 0; col < cells[n].size(); ++col) {
            auto [p, i, j] = cells[n][col];
            std::size_t q = n - p;
            if (p >= 1) {
                const IntegerMatrix& dpa = ca.boundary(p);
                for (std::size_t r = 0; r < dpa.rows(); ++r)
                    if (dpa.at(r, i) != 0)
                        d.at(index_of(n - 1, p - 1, r, j), col) += dpa.at(r, i);
            }
            if (q >= 1) {
                const IntegerMatrix& dqb = cb.boundary(q);
                Int sign = (p % 2 == 0) ? 1 : -1;
                for (std::size_t r = 0; r < dqb.rows(); ++r)
                    if (dqb.at(r, j) != 0)
                        d.at(index_of(n - 1, p, i, r), col) += sign * dqb.at(r, j);
            }
        }
        bnd.push_back(std::move(d));
    }
    return ChainComplex(std::move(counts), std::move(bnd), std::move(labels));
}

CWComplex attach_disk(const CWComplex& x, const std::vector<std::pair<std::string, int>>& word,
                      const std::string& label) {
    CWComplex y = x;
    std::vector<std::pair<std::size_t, int>> w;
    for (const auto& [lab, sgn] : word) w.emplace_back(y.edge_index(lab), sgn);
    y.add_face(label, std::move(w));
    return y;
}

CWComplex attach_disk(const CWComplex& x, const std::string& edge_label) {
    return attach_disk(x, {{edge_label, +1}}, "d_" + edge_label);
}

BallCertificate homology_ball_certificate(std::size_t h2_basis_size, const IntegerMatrix& pairing) {
    if (pairing.rows() != h2_basis_size || pairing.cols() != h2_basis_size)
        throw Error("DimensionMismatch", "pairing must be " + std::to_string(h2_basis_size) + "x" +
                                             std::to_string(h2_basis_size));
    BallCertificate cert;
    cert.pairing_det = determinant(pairing);
    cert.certified = (cert.pairing_det == 1 || cert.pairing_det == -1);
    cert.assumption =
        "meridians of the deleted disks bound immersed spheres (no new H1); recorded, not computed";
    return cert;
}

}  // namespace corkcalc
