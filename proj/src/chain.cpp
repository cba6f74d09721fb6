#include "corkcalc/chain.hpp"

namespace corkcalc {

ChainComplex::ChainComplex(std::vector<std::size_t> counts, std::vector<IntegerMatrix> boundaries,
                           std::vector<std::vector<std::string>> labels)
    : counts_(std::move(counts)), bnd_(std::move(boundaries)), labels_(std::move(labels)) {
    if (!counts_.empty() && bnd_.size() + 1 != counts_.size())
        throw Error("BoundaryConditionViolated", "expected one boundary map per positive degree");
    for (std::size_t n = 1; n < counts_.size(); ++n) {
        const IntegerMatrix& d = bnd_[n - 1];
        if (d.rows() != counts_[n - 1] || d.cols() != counts_[n])
            throw Error("BoundaryConditionViolated",
                        "boundary " + std::to_string(n) + " has shape " + std::to_string(d.rows()) +
                            "x" + std::to_string(d.cols()));
    }
    for (std::size_t n = 2; n < counts_.size(); ++n) {
        IntegerMatrix dd = bnd_[n - 2] * bnd_[n - 1];
        IntegerMatrix zero(dd.rows(), dd.cols());
        if (!(dd == zero))
            throw Error("BoundaryConditionViolated",
                        "d∘d != 0 between degrees " + std::to_string(n) + " and " +
                            std::to_string(n - 2));
    }
    if (!labels_.empty()) {
        if (labels_.size() != counts_.size())
            throw Error("BoundaryConditionViolated", "label table does not match degrees");
        for (std::size_t n = 0; n < counts_.size(); ++n)
            if (labels_[n].size() != counts_[n])
                throw Error("BoundaryConditionViolated",
                            "degree " + std::to_string(n) + " label count mismatch");
    }
}

const IntegerMatrix& ChainComplex::boundary(std::size_t n) const {
    if (n == 0 || n >= counts_.size())
        throw Error("BoundaryConditionViolated", "no boundary map in degree " + std::to_string(n));
    return bnd_[n - 1];
}

const std::vector<std::string>& ChainComplex::labels(std::size_t n) const {
    static const std::vector<std::string> none;
    if (labels_.empty() || n >= labels_.size()) return none;
    return labels_[n];
}

std::size_t ChainComplex::boundary_rank(std::size_t n) const {
    if (n == 0 || n >= counts_.size()) return 0;
    return rank(bnd_[n - 1]);
}

AbelianGroupInvariants ChainComplex::homology(std::size_t n, bool reduced) const {
    AbelianGroupInvariants h;
    if (n >= counts_.size()) return h;
    std::size_t rn = boundary_rank(n);
    std::size_t rn1 = boundary_rank(n + 1);
    h.rank = counts_[n] - rn - rn1;
    if (n + 1 < counts_.size()) {
        SmithResult s = smith_normal_form(bnd_[n]);
        std::size_t lim = std::min(s.d.rows(), s.d.cols());
        for (std::size_t i = 0; i < lim; ++i)
            if (s.d.at(i, i) > 1) h.torsion.push_back(s.d.at(i, i));
    }
    if (reduced && n == 0 && h.rank > 0) --h.rank;
    return h;
}

std::vector<AbelianGroupInvariants> ChainComplex::homology_all(bool reduced) const {
    std::vector<AbelianGroupInvariants> out;
    for (std::size_t n = 0; n < counts_.size(); ++n) out.push_back(homology(n, reduced));
    return out;
}

IntegerMatrix ChainComplex::kernel_basis(std::size_t n) const {
    std::size_t cn = cells(n);
    if (n == 0 || n >= counts_.size()) return IntegerMatrix::identity(cn);
    SmithResult s = smith_normal_form(bnd_[n - 1]);
    std::size_t lim = std::min(s.d.rows(), s.d.cols());
    std::size_t r = 0;
    for (std::size_t i = 0; i < lim; ++i)
        if (s.d.at(i, i) != 0) ++r;
    /* D = U M V puts ker(M) = span of V's columns past the rank */
    IntegerMatrix k(cn, cn - r);
    for (std::size_t c = r; c < cn; ++c)
        for (std::size_t row = 0; row < cn; ++row) k.at(row, c - r) = s.v.at(row, c);
    return k;
}

}  // namespace corkcalc
