#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace corkcalc {

using Int = boost::multiprecision::cpp_int;

/* Dense matrix over Z with arbitrary-precision entries.  Sizes here are small
 * (surgery presentations, chain complexes), so no sparsity tricks. */
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const IntegerMatrix& o) const = default;

    IntegerMatrix transposed() const;
    IntegerMatrix operator*(const IntegerMatrix& o) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /* row[a] += k * row[b], col[a] += k * col[b] */
    void add_row(std::size_t a, std::size_t b, const Int& k);
    void add_col(std::size_t a, std::size_t b, const Int& k);
    void scale_row(std::size_t r, const Int& k);
    void scale_col(std::size_t c, const Int& k);

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

/* Exact determinant (fraction-free Gaussian elimination). */
Int determinant(const IntegerMatrix& m);

std::size_t rank(const IntegerMatrix& m);

struct SmithResult {
    IntegerMatrix u;  // unimodular, rows x rows
    IntegerMatrix d;  // diagonal with d1 | d2 | ..., nonnegative
    IntegerMatrix v;  // unimodular, cols x cols
};

/* D = U * M * V with U, V unimodular and the divisibility chain on the
 * diagonal of D.  Exact; entries may grow, hence cpp_int throughout. */
SmithResult smith_normal_form(const IntegerMatrix& m);

/* Rank and torsion divisors (those > 1) read off a Smith form. */
struct AbelianGroupInvariants {
    std::size_t rank = 0;
    std::vector<Int> torsion;  // d1 | d2 | ..., each >= 2

    bool operator==(const AbelianGroupInvariants& o) const = default;
    bool trivial() const { return rank == 0 && torsion.empty(); }
    /* "0", "Z", "Z^3", "Z + Z/2 + Z/6", ... */
    std::string to_string() const;
};

/* Invariants of the cokernel of M : Z^cols -> Z^rows
 * (i.e. Z^rows / column span of M). */
AbelianGroupInvariants cokernel_invariants(const IntegerMatrix& m);

}  // namespace corkcalc
