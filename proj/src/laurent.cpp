#include "corkcalc/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace corkcalc {

int LaurentPolynomial::min_exp() const {
    if (terms_.empty()) throw Error("EmptyPolynomial", "zero polynomial has no exponents");
    return terms_.begin()->first;
}

int LaurentPolynomial::max_exp() const {
    if (terms_.empty()) throw Error("EmptyPolynomial", "zero polynomial has no exponents");
    return terms_.rbegin()->first;
}

Int LaurentPolynomial::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPolynomial::add_term(Int c, int e) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, std::move(c));
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(c, e);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(-c, e);
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    r += o;
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    r -= o;
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    LaurentPolynomial r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(c1 * c2, e1 + e2);
    return r;
}

LaurentPolynomial LaurentPolynomial::times_monomial(const Int& c, int e) const {
    LaurentPolynomial r;
    if (c == 0) return r;
    for (const auto& [e1, c1] : terms_) r.terms_.emplace(e1 + e, c1 * c);
    return r;
}

LaurentPolynomial LaurentPolynomial::reciprocal() const {
    LaurentPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

Int LaurentPolynomial::eval_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

LaurentPolynomial LaurentPolynomial::normalized_alexander() const {
    if (is_zero()) throw Error("Normalization", "zero polynomial cannot be an Alexander polynomial");
    int lo = min_exp(), hi = max_exp();
    if (((lo + hi) % 2 + 2) % 2 != 0)
        throw Error("Normalization", "exponent span is odd; no symmetric unit multiple exists");
    LaurentPolynomial f = times_monomial(Int(1), -(lo + hi) / 2);
    Int v = f.eval_at_one();
    if (v == -1) f = -f;
    else if (v != 1)
        throw Error("Normalization", "value at t=1 is " + v.str() + ", not a unit");
    if (!(f == f.reciprocal()))
        throw Error("Normalization", "no unit multiple is symmetric under t -> 1/t");
    return f;
}

std::string LaurentPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        Int a = c < 0 ? Int(-c) : c;
        out << a.str() << "*t^" << e;
    }
    return out.str();
}

LaurentPolynomial LaurentPolynomial::parse(const std::string& text) {
    auto fail = [&](const std::string& why) -> Error {
        return Error("BadPolynomial", why + " in \"" + text + "\"");
    };
    std::string s = text;
    /* trim */
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    LaurentPolynomial r;
    if (s == "0" || s.empty()) return r;
    std::size_t i = 0;
    int sign = +1;
    if (s[0] == '-') { sign = -1; i = 1; if (i < s.size() && s[i] == ' ') ++i; }
    for (;;) {
        std::size_t j = i;
        while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw fail("expected coefficient");
        Int c(s.substr(i, j - i));
        if (s.compare(j, 3, "*t^") != 0) throw fail("expected *t^");
        j += 3;
        std::size_t k = j;
        if (k < s.size() && s[k] == '-') ++k;
        while (k < s.size() && isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == j || (s[j] == '-' && k == j + 1)) throw fail("expected exponent");
        int e = std::stoi(s.substr(j, k - j));
        r.add_term(sign * c, e);
        if (k == s.size()) break;
        if (s.compare(k, 3, " + ") == 0) { sign = +1; i = k + 3; }
        else if (s.compare(k, 3, " - ") == 0) { sign = -1; i = k + 3; }
        else throw fail("expected ' + ' or ' - '");
    }
    return r;
}

/* ---- dense Z[t] helpers (exponents >= 0, index = exponent) ---- */

namespace {

using Poly = std::vector<Int>;  // empty = zero

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

/* drops the unit t^min_exp: for gcd use, where units are quotiented out */
Poly from_laurent(const LaurentPolynomial& f) {
    Poly p;
    if (f.is_zero()) return p;
    int lo = f.min_exp();
    p.assign(static_cast<std::size_t>(f.max_exp() - lo + 1), Int(0));
    for (const auto& [e, c] : f.terms()) p[static_cast<std::size_t>(e - lo)] = c;
    return p;
}

/* exponent-preserving; requires min_exp >= 0 */
Poly dense_nonneg(const LaurentPolynomial& f) {
    Poly p;
    if (f.is_zero()) return p;
    if (f.min_exp() < 0) throw Error("InexactDivision", "negative exponent in dense conversion");
    p.assign(static_cast<std::size_t>(f.max_exp() + 1), Int(0));
    for (const auto& [e, c] : f.terms()) p[static_cast<std::size_t>(e)] = c;
    return p;
}

LaurentPolynomial to_laurent(const Poly& p) {
    LaurentPolynomial f;
    for (std::size_t i = 0; i < p.size(); ++i) f.add_term(p[i], static_cast<int>(i));
    return f;
}

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

Int content(const Poly& p) {
    Int g = 0;
    for (const Int& c : p) g = int_gcd(g, c);
    return g;
}

Poly scaled_down(Poly p, const Int& g) {
    for (Int& c : p) c /= g;
    return p;
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

Poly sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

/* exact quotient D/d; throws if the division is not exact (Bareiss guarantees
 * it is, so non-exactness means a bug upstream) */
Poly exact_div(Poly D, const Poly& d) {
    trim(D);
    if (d.empty()) throw Error("DivisionByZero", "polynomial division by zero");
    if (D.empty()) return {};
    if (D.size() < d.size()) throw Error("InexactDivision", "degree too small");
    Poly q(D.size() - d.size() + 1, Int(0));
    const Int& lead = d.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        std::size_t top = k + d.size() - 1;
        if (top >= D.size() || D[top] == 0) { q[k] = 0; continue; }
        if (D[top] % lead != 0) throw Error("InexactDivision", "leading coefficient not divisible");
        q[k] = D[top] / lead;
        for (std::size_t i = 0; i < d.size(); ++i) D[k + i] -= q[k] * d[i];
    }
    trim(D);
    if (!D.empty()) throw Error("InexactDivision", "nonzero remainder");
    return q;
}

/* primitive pseudo-remainder sequence gcd of primitive inputs */
Poly primitive_gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        /* pseudo-remainder of a by b */
        Poly r = a;
        std::size_t steps = a.size() - b.size() + 1;
        const Int& lb = b.back();
        for (std::size_t s = 0; s < steps; ++s) {
            trim(r);
            if (r.size() < b.size()) break;
            /* r = lb * r - lead(r) * t^k * b */
            Int lr = r.back();
            std::size_t shift = r.size() - b.size();
            for (Int& c : r) c *= lb;
            for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= lr * b[i];
            trim(r);
        }
        Int g = content(r);
        if (g > 1) r = scaled_down(std::move(r), g);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

LaurentPolynomial laurent_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    Poly pa = from_laurent(a), pb = from_laurent(b);
    if (pa.empty() && pb.empty()) return LaurentPolynomial();
    if (pa.empty()) std::swap(pa, pb);
    Int ca = content(pa);
    Poly ppa = scaled_down(std::move(pa), ca);
    if (pb.empty()) {
        if (ppa.back() < 0)
            for (Int& c : ppa) c = -c;
        Poly r = ppa;
        for (Int& c : r) c *= ca;
        return to_laurent(r);
    }
    Int cb = content(pb);
    Poly ppb = scaled_down(std::move(pb), cb);
    Poly g = primitive_gcd(std::move(ppa), std::move(ppb));
    if (!g.empty() && g.back() < 0)
        for (Int& c : g) c = -c;
    Int cg = int_gcd(ca, cb);
    for (Int& c : g) c *= cg;
    return to_laurent(g);
}

LaurentPolynomial laurent_det(const std::vector<std::vector<LaurentPolynomial>>& m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw Error("DimensionMismatch", "determinant of non-square matrix");
    if (n == 0) return LaurentPolynomial(Int(1));
    /* scale each row into Z[t]; the dropped unit t^k is irrelevant to callers */
    std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i) {
        int lo = 0;
        bool any = false;
        for (const auto& f : m[i])
            if (!f.is_zero()) {
                lo = any ? std::min(lo, f.min_exp()) : f.min_exp();
                any = true;
            }
        if (!any) return LaurentPolynomial();  // zero row
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = dense_nonneg(m[i][j].times_monomial(Int(1), -lo));
    }
    int sign = 1;
    Poly prev{Int(1)};
    for (std::size_t k = 0; k + 1 < n; ++k) {
        /* pivot: lowest-degree nonzero in column k at or below row k */
        std::size_t piv = n;
        for (std::size_t r = k; r < n; ++r)
            if (!a[r][k].empty() && (piv == n || a[r][k].size() < a[piv][k].size())) piv = r;
        if (piv == n) return LaurentPolynomial();
        if (piv != k) {
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                if (a[i][j].empty() && (a[i][k].empty() || a[k][j].empty())) continue;
                Poly num = sub(mul(a[i][j], a[k][k]), mul(a[i][k], a[k][j]));
                a[i][j] = exact_div(std::move(num), prev);
            }
        prev = a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) a[i][k].clear();
    }
    LaurentPolynomial d = to_laurent(a[n - 1][n - 1]);
    return sign < 0 ? -d : d;
}

}  // namespace corkcalc
