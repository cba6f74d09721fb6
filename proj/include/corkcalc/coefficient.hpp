#pragma once

#include "corkcalc/errors.hpp"
#include "corkcalc/matrix.hpp"

#include <string>
#include <utility>

namespace corkcalc {

enum class Filling { Integer, Rational, Infinity, Unfilled, Ornament };

/* Surgery coefficient of one diagram component.  Rational is kept reduced
 * with q >= 2 (q = 1 canonicalizes to Integer, q = 0 to Infinity, sign lives
 * in p).  Unfilled marks a drilled component whose boundary torus remains;
 * Ornament marks a curve just carried along, with no filling at all. */
struct SurgeryCoefficient {
    Filling kind = Filling::Ornament;
    Int p = 0, q = 1;  // meaningful for Integer (n/1) and Rational only

    static SurgeryCoefficient integer(Int n);
    static SurgeryCoefficient rational(Int p, Int q);  // canonicalizing; q >= 0
    static SurgeryCoefficient infinity();
    static SurgeryCoefficient unfilled();
    static SurgeryCoefficient ornament();

    bool operator==(const SurgeryCoefficient& o) const = default;

    bool is_integer() const { return kind == Filling::Integer; }
    bool is_fraction() const { return kind == Filling::Integer || kind == Filling::Rational; }
    bool fills() const { return is_fraction() || kind == Filling::Infinity; }

    /* (p, q) with Integer n = (n, 1) and Infinity = (1, 0) */
    std::pair<Int, Int> as_fraction_with_infinity() const;

    /* this + m for integer m (Integer/Rational only) */
    SurgeryCoefficient shifted(const Int& m) const;
    /* p/q -> p/(q + n*p), the coefficient side of n twists */
    SurgeryCoefficient twisted(const Int& n) const;
    /* n - 1/this, the slam-dunk update of an integer target (this = 0 gives
     * Infinity) */
    SurgeryCoefficient slam_into(const Int& n) const;

    /* "3", "-1/3", "inf", "unfilled", "none" */
    std::string to_string() const;
    static SurgeryCoefficient parse(const std::string& text);
};

}  // namespace corkcalc
