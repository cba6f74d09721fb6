#pragma once

#include "corkcalc/errors.hpp"
#include "corkcalc/matrix.hpp"

#include <string>
#include <vector>

namespace corkcalc {

/* Chain complex of finitely generated free Z-modules in degrees 0..top.
 * boundary(n) : C_n -> C_{n-1}.  Construction checks shapes and d∘d = 0
 * (Error code "BoundaryConditionViolated").  Cells may carry labels so that
 * homology classes can be reported by name. */
class ChainComplex {
public:
    ChainComplex() = default;
    ChainComplex(std::vector<std::size_t> counts, std::vector<IntegerMatrix> boundaries,
                 std::vector<std::vector<std::string>> labels = {});

    bool empty() const { return counts_.empty(); }
    std::size_t top_degree() const { return counts_.empty() ? 0 : counts_.size() - 1; }
    std::size_t cells(std::size_t n) const { return n < counts_.size() ? counts_[n] : 0; }
    /* ∂_n for 1 <= n <= top_degree() */
    const IntegerMatrix& boundary(std::size_t n) const;
    const std::vector<std::string>& labels(std::size_t n) const;

    AbelianGroupInvariants homology(std::size_t n, bool reduced = false) const;
    /* degrees 0..top_degree() */
    std::vector<AbelianGroupInvariants> homology_all(bool reduced = false) const;

    /* Columns form a basis of ker ∂_n as a direct summand of C_n.
     * For n = 0 (or past the top) the kernel is all of C_n. */
    IntegerMatrix kernel_basis(std::size_t n) const;

private:
    std::size_t boundary_rank(std::size_t n) const;

    std::vector<std::size_t> counts_;
    std::vector<IntegerMatrix> bnd_;  // bnd_[n-1] = ∂_n
    std::vector<std::vector<std::string>> labels_;
};

}  // namespace corkcalc
