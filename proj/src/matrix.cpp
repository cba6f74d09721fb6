#include "corkcalc/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace corkcalc {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::transposed() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IntegerMatrix p(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) p.at(r, c) += a * o.at(k, c);
        }
    return p;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
}

void IntegerMatrix::add_row(std::size_t a, std::size_t b, const Int& k) {
    for (std::size_t c = 0; c < cols_; ++c) at(a, c) += k * at(b, c);
}

void IntegerMatrix::add_col(std::size_t a, std::size_t b, const Int& k) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, a) += k * at(r, b);
}

void IntegerMatrix::scale_row(std::size_t r, const Int& k) {
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) *= k;
}

void IntegerMatrix::scale_col(std::size_t c, const Int& k) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, c) *= k;
}

std::string IntegerMatrix::to_string() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        out << (r ? "; " : "");
        for (std::size_t c = 0; c < cols_; ++c) out << (c ? " " : "") << at(r, c);
    }
    out << "]";
    return out.str();
}

Int determinant(const IntegerMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return 1;
    IntegerMatrix a = m;
    Int sign = 1, prev = 1;
    /* Bareiss: stays integral, divisions are exact. */
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a.at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

namespace {

Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

/* Bring d to diagonal form by unimodular row/col operations, mirrored into
 * u and v.  Min-magnitude pivoting keeps intermediate growth tame. */
void diagonalize(IntegerMatrix& d, IntegerMatrix& u, IntegerMatrix& v) {
    std::size_t nr = d.rows(), nc = d.cols();
    for (std::size_t t = 0; t < nr && t < nc; ++t) {
        for (;;) {
            std::size_t pr = t, pc = t;
            bool found = false;
            Int best = 0;
            for (std::size_t r = t; r < nr; ++r)
                for (std::size_t c = t; c < nc; ++c) {
                    const Int& e = d.at(r, c);
                    if (e == 0) continue;
                    Int a = int_abs(e);
                    if (!found || a < best) { found = true; best = a; pr = r; pc = c; }
                }
            if (!found) return;  // remaining block is zero
            d.swap_rows(t, pr); u.swap_rows(t, pr);
            d.swap_cols(t, pc); v.swap_cols(t, pc);
            bool clean = true;
            for (std::size_t r = t + 1; r < nr; ++r) {
                if (d.at(r, t) == 0) continue;
                Int q = d.at(r, t) / d.at(t, t);
                if (q != 0) { d.add_row(r, t, -q); u.add_row(r, t, -q); }
                if (d.at(r, t) != 0) clean = false;
            }
            for (std::size_t c = t + 1; c < nc; ++c) {
                if (d.at(t, c) == 0) continue;
                Int q = d.at(t, c) / d.at(t, t);
                if (q != 0) { d.add_col(c, t, -q); v.add_col(c, t, -q); }
                if (d.at(t, c) != 0) clean = false;
            }
            if (clean) break;  // row t and column t cleared; next pivot
        }
    }
}

}  // namespace

SmithResult smith_normal_form(const IntegerMatrix& m) {
    SmithResult res{IntegerMatrix::identity(m.rows()), m, IntegerMatrix::identity(m.cols())};
    IntegerMatrix& d = res.d;
    std::size_t lim = std::min(d.rows(), d.cols());
    diagonalize(d, res.u, res.v);
    /* enforce the divisibility chain: mix a violating pair into one column
     * and rediagonalize; each round replaces d_i by gcd(d_i, d_{i+1}) */
    for (int guard = 0;; ++guard) {
        if (guard > 10000) throw std::logic_error("smith_normal_form failed to converge");
        /* push zero diagonal entries past nonzero ones */
        for (std::size_t i = 0; i + 1 < lim; ++i)
            if (d.at(i, i) == 0 && d.at(i + 1, i + 1) != 0) {
                d.swap_rows(i, i + 1); res.u.swap_rows(i, i + 1);
                d.swap_cols(i, i + 1); res.v.swap_cols(i, i + 1);
            }
        bool violated = false;
        for (std::size_t i = 0; i + 1 < lim && !violated; ++i) {
            const Int& a = d.at(i, i);
            const Int& b = d.at(i + 1, i + 1);
            if (a != 0 && b != 0 && b % a != 0) {
                d.add_col(i, i + 1, 1); res.v.add_col(i, i + 1, 1);
                violated = true;
            }
        }
        if (!violated) break;
        diagonalize(d, res.u, res.v);
    }
    for (std::size_t i = 0; i < lim; ++i)
        if (d.at(i, i) < 0) { d.scale_row(i, -1); res.u.scale_row(i, -1); }
    return res;
}

std::size_t rank(const IntegerMatrix& m) {
    IntegerMatrix u = IntegerMatrix::identity(m.rows());
    IntegerMatrix v = IntegerMatrix::identity(m.cols());
    IntegerMatrix d = m;
    diagonalize(d, u, v);
    std::size_t r = 0;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
        if (d.at(i, i) != 0) ++r;
    return r;
}

std::string AbelianGroupInvariants::to_string() const {
    if (trivial()) return "0";
    std::ostringstream out;
    bool first = true;
    if (rank == 1) { out << "Z"; first = false; }
    else if (rank > 1) { out << "Z^" << rank; first = false; }
    for (const Int& d : torsion) {
        out << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    return out.str();
}

AbelianGroupInvariants cokernel_invariants(const IntegerMatrix& m) {
    SmithResult s = smith_normal_form(m);
    AbelianGroupInvariants inv;
    std::size_t lim = std::min(s.d.rows(), s.d.cols());
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < lim; ++i) {
        const Int& d = s.d.at(i, i);
        if (d == 0) continue;
        ++nonzero;
        if (d > 1) inv.torsion.push_back(d);
    }
    inv.rank = m.rows() - nonzero;
    return inv;
}

}  // namespace corkcalc
