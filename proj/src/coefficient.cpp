#include "corkcalc/coefficient.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace corkcalc {

namespace {
Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}
}

SurgeryCoefficient SurgeryCoefficient::integer(Int n) {
    SurgeryCoefficient c;
    c.kind = Filling::Integer;
    c.p = std::move(n);
    c.q = 1;
    return c;
}

SurgeryCoefficient SurgeryCoefficient::rational(Int p, Int q) {
    if (q < 0) { p = -p; q = -q; }
    if (q == 0) return infinity();
    Int g = int_gcd(p, q);
    if (g > 1) { p /= g; q /= g; }
    if (q == 1) return integer(std::move(p));
    SurgeryCoefficient c;
    c.kind = Filling::Rational;
    c.p = std::move(p);
    c.q = std::move(q);
    return c;
}

SurgeryCoefficient SurgeryCoefficient::infinity() {
    SurgeryCoefficient c;
    c.kind = Filling::Infinity;
    c.p = 1;
    c.q = 0;
    return c;
}

SurgeryCoefficient SurgeryCoefficient::unfilled() {
    SurgeryCoefficient c;
    c.kind = Filling::Unfilled;
    return c;
}

SurgeryCoefficient SurgeryCoefficient::ornament() {
    SurgeryCoefficient c;
    c.kind = Filling::Ornament;
    return c;
}

std::pair<Int, Int> SurgeryCoefficient::as_fraction_with_infinity() const {
    switch (kind) {
        case Filling::Integer: return {p, 1};
        case Filling::Rational: return {p, q};
        case Filling::Infinity: return {1, 0};
        default: throw Error("NoFilling", "coefficient " + to_string() + " is not a filling");
    }
}

SurgeryCoefficient SurgeryCoefficient::shifted(const Int& m) const {
    if (!is_fraction()) throw Error("NoFilling", "cannot shift coefficient " + to_string());
    return rational(p + m * q, q);
}

SurgeryCoefficient SurgeryCoefficient::twisted(const Int& n) const {
    if (!is_fraction()) throw Error("NoFilling", "cannot twist coefficient " + to_string());
    return rational(p, q + n * p);
}

SurgeryCoefficient SurgeryCoefficient::slam_into(const Int& n) const {
    if (!is_fraction()) throw Error("NoFilling", "cannot slam coefficient " + to_string());
    if (p == 0) return infinity();
    return rational(n * p - q, p);
}

std::string SurgeryCoefficient::to_string() const {
    switch (kind) {
        case Filling::Integer: return p.str();
        case Filling::Rational: return p.str() + "/" + q.str();
        case Filling::Infinity: return "inf";
        case Filling::Unfilled: return "unfilled";
        case Filling::Ornament: return "none";
    }
    return "none";
}

SurgeryCoefficient SurgeryCoefficient::parse(const std::string& text) {
    if (text == "inf") return infinity();
    if (text == "unfilled") return unfilled();
    if (text == "none") return ornament();
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return integer(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den <= 0) throw Error("BadCoefficient", "denominator must be positive in " + text);
        return rational(std::move(num), std::move(den));
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const Error*>(&e)) throw;
        throw Error("BadCoefficient", "cannot parse coefficient " + text);
    }
}

}  // namespace corkcalc
