// Acceptance gate: every release-blocking claim the toolkit makes, one
// criterion per line, with wall-clock budgets where responsiveness is part
// of the claim.  Exits nonzero if any criterion fails.
#include "corkcalc/alexander.hpp"
#include "corkcalc/builders.hpp"
#include "corkcalc/cw.hpp"
#include "corkcalc/fld.hpp"
#include "corkcalc/linking.hpp"
#include "corkcalc/moves.hpp"
#include "corkcalc/scenario.hpp"
#include "corkcalc/script.hpp"
#include "corkcalc/seifert.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace corkcalc;

namespace {

std::vector<std::string> problems;

void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
}

template <typename A, typename B>
void expect_eq(const A& a, const B& b, const std::string& what) {
    if (!(a == b)) {
        std::ostringstream os;
        os << what << " (got " << a << ", want " << b << ")";
        problems.push_back(os.str());
    }
}

/* ---- 1: the twist-knot family, two ways ---- */

void twist_family() {
    std::set<std::string> seen;
    for (int k = -10; k <= 10; ++k) {
        FramedLinkDiagram d = twist_knot(k, -1, {"k", "", SurgeryCoefficient::ornament()});
        LaurentPolynomial fox = fox_alexander(d, "k");
        expect_eq(fox.eval_at_one().str(), std::string("1"),
                  "normalized polynomial value at 1, k=" + std::to_string(k));
        expect(fox.reciprocal() == fox, "polynomial symmetry, k=" + std::to_string(k));
        if (k != 0) {
            LaurentPolynomial sf = alexander_from_seifert(seifert_matrix(d, "k"));
            expect_eq(sf.to_string(), fox.to_string(),
                      "independent computations agree, k=" + std::to_string(k));
        }
        seen.insert(fox.to_string());
    }
    expect_eq(seen.size(), std::size_t(21), "pairwise distinct polynomials");
    expect_eq(fox_alexander(twist_knot(0, -1, {"k", "", SurgeryCoefficient::ornament()}), "k")
                  .to_string(),
              std::string("1*t^0"), "k=0 member is trivial");
}

/* ---- 2: the homology ladder ---- */

void homology_ladder() {
    CWComplex y = product(punctured_torus(), circle());
    ChainComplex cy = y.chain();
    expect_eq(cy.homology(0).to_string(), std::string("Z"), "H0 of the circle bundle");
    expect_eq(cy.homology(1).to_string(), std::string("Z^3"), "H1 of the circle bundle");
    expect_eq(cy.homology(2).to_string(), std::string("Z^2"), "H2 of the circle bundle");

    CWComplex cut = attach_disk(attach_disk(attach_disk(y, "c-1 x v"), "c+1 x v"), "v x s");
    ChainComplex cc = cut.chain();
    expect_eq(cc.homology(1).to_string(), std::string("0"), "H1 after attaching three disks");
    expect_eq(cc.homology(2).to_string(), std::string("Z^2"), "H2 after attaching three disks");

    IntegerMatrix pairing(2, 2);
    pairing.at(0, 1) = 1;
    pairing.at(1, 0) = 1;
    expect(homology_ball_certificate(2, pairing).certified, "hyperbolic pairing certificate");
    IntegerMatrix doubled(2, 2);
    doubled.at(0, 1) = 2;
    doubled.at(1, 0) = 2;
    expect(!homology_ball_certificate(2, doubled).certified, "non-unimodular pairing refused");

    ChainComplex disk = attach_disk(circle(), "s").chain();
    for (const AbelianGroupInvariants& h : disk.homology_all(true))
        expect(h.trivial(), "reduced homology of the disk vanishes");
}

/* ---- 3: the three-component chain-free link ---- */

void chain_free_link() {
    FramedLinkDiagram d = load_fixture_diagram("borromean.fld");
    expect_eq(d.components.size(), std::size_t(3), "three components");
    const char* ids[3] = {"B1", "B2", "B3"};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            expect_eq(linking_number(d, ids[i], ids[j]).str(), std::string("0"),
                      std::string("linking ") + ids[i] + "," + ids[j]);
    expect_eq(h1_surgery(d).to_string(), std::string("Z^3"), "h1 of the 0-surgery");
}

/* ---- 4: clasped pairs empty by slam dunk + erasure ---- */

void clasp_reductions() {
    for (int n = -5; n <= 5; ++n) {
        FramedLinkDiagram d =
            braid_closure(2, {1, 1}, {{"a", "", SurgeryCoefficient::integer(0)},
                                      {"b", "", SurgeryCoefficient::integer(n)}});
        expect(h1_surgery(d).trivial(), "h1 trivial before, n=" + std::to_string(n));
        ScriptOutcome out = apply_script(
            d, {MoveStep::slam_dunk("a", "b"), MoveStep::erase_infinity("b")});
        expect(out.ok, "reduction runs, n=" + std::to_string(n));
        expect(out.diagram.components.empty(), "diagram emptied, n=" + std::to_string(n));
        expect(h1_surgery(out.diagram).trivial(), "h1 trivial after, n=" + std::to_string(n));
    }
}

/* ---- 5: rational-twist unknot reductions ---- */

void rational_twist_reductions() {
    for (int k = -10; k <= 10; ++k) {
        if (k == 0) continue;
        FramedLinkDiagram d = unknot_loop({"u", "", SurgeryCoefficient::rational(-1, k)});
        ScriptOutcome out = apply_script(
            d, {MoveStep::rolfsen_twist("u", k), MoveStep::erase_infinity("u")});
        expect(out.ok, "reduction runs, k=" + std::to_string(k));
        expect(out.diagram.components.empty(), "diagram emptied, k=" + std::to_string(k));
    }
}

/* ---- 6: the boundary-link reduction ---- */

void boundary_link_reduction() {
    FramedLinkDiagram d = load_fixture_diagram("cork_boundary_link.fld");
    LinkingPresentation p = linking_matrix(d);
    IntegerMatrix L(p.filled.size(), p.filled.size());
    for (std::size_t i = 0; i < p.filled.size(); ++i) {
        for (std::size_t j = 0; j < p.filled.size(); ++j) L.at(i, j) = p.linking.at(i, j);
        L.at(i, i) = p.filled[i].coeff.p;
    }
    Int det = determinant(L);
    expect(det == 1 || det == -1, "framed linking matrix unimodular");
    expect(h1_surgery(d).trivial(), "presentation has trivial h1");

    ScriptOutcome out = apply_script(d, parse_script(load_fixture_text("l_in_s3.moves")));
    expect(out.ok, "reduction script runs to completion" +
                       (out.ok ? "" : " (failed: " + out.error + ")"));
    expect(out.trace.chain_contiguous(), "trace hashes chain");
    for (const TraceEntry& te : out.trace.entries) {
        expect(te.pre.h1.trivial() && te.post.h1.trivial(), "h1 trivial at step " + te.step);
    }
    std::size_t surgery = 0, ornaments = 0;
    for (const auto& c : out.diagram.components)
        (c.coeff.kind == Filling::Ornament ? ornaments : surgery) += 1;
    expect_eq(surgery, std::size_t(0), "no surgery components remain");
    expect_eq(ornaments, std::size_t(4), "exactly four ornament components remain");
}

/* ---- 7: randomized property suites ---- */

void isotopy_properties(std::mt19937& rng, int trials) {
    for (int trial = 0; trial < trials; ++trial) {
        FramedLinkDiagram d = random_link(rng);
        const InvariantSnapshot snap = invariant_snapshot(d);
        const LinkingPresentation lp = linking_matrix(d);
        std::vector<std::string> deltas;
        for (const auto& c : d.components) deltas.push_back(fox_alexander(d, c.id, false).to_string());

        auto preserved = [&](const FramedLinkDiagram& d2, const std::string& move) {
            expect(d2.validate().empty(), move + ": output valid");
            expect(invariant_snapshot(d2) == snap, move + ": snapshot preserved");
            expect(linking_matrix(d2).linking == lp.linking, move + ": linking preserved");
            for (std::size_t i = 0; i < d2.components.size(); ++i) {
                expect(d2.components[i].coeff == d.components[i].coeff,
                       move + ": coefficients preserved");
                expect(fox_alexander(d2, d2.components[i].id, false).to_string() == deltas[i],
                       move + ": polynomial preserved");
            }
        };

        std::vector<Arc> arcs;
        for (const auto& c : d.components)
            for (Arc a : c.arcs) arcs.push_back(a);
        if (!arcs.empty()) {
            std::uniform_int_distribution<std::size_t> pick(0, arcs.size() - 1);
            std::uniform_int_distribution<int> coin(0, 1);
            preserved(apply(d, MoveStep::r1_add(arcs[pick(rng)], coin(rng) ? 'L' : 'R',
                                                coin(rng) ? 1 : -1)),
                      "kink");
        }
        for (const auto& f : d.faces()) {
            if (f.walls.size() < 2 || f.walls[0] == f.walls[1]) continue;
            preserved(apply(d, MoveStep::r2_add(f.walls[0], f.walls[1], f.id)), "push");
            break;
        }
    }

    // triangle slides, searched on closures known to contain them
    int r3_hits = 0;
    for (int trial = 0; trial < 20; ++trial) {
        FramedLinkDiagram d =
            braid_closure(3, {1, 2, 1, 2}, {{"k", "", random_coefficient(rng)}});
        std::vector<std::string> deltas;
        for (const auto& c : d.components) deltas.push_back(fox_alexander(d, c.id, false).to_string());
        std::vector<std::string> ids;
        for (const auto& c : d.crossings) ids.push_back(c.id);
        for (std::size_t a = 0; a < ids.size(); ++a)
            for (std::size_t b = a + 1; b < ids.size(); ++b)
                for (std::size_t c = b + 1; c < ids.size(); ++c) {
                    try {
                        FramedLinkDiagram d2 = apply(d, MoveStep::r3(ids[a], ids[b], ids[c]));
                        ++r3_hits;
                        for (std::size_t i = 0; i < d2.components.size(); ++i)
                            expect(fox_alexander(d2, d2.components[i].id, false).to_string() ==
                                       deltas[i],
                                   "triangle slide: polynomial preserved");
                    } catch (const Error&) {
                    }
                }
    }
    expect(r3_hits >= 20, "triangle slide sites found");
}

void surgery_properties(std::mt19937& rng, int trials) {
    for (int trial = 0; trial < trials; ++trial) {
        FramedLinkDiagram d = random_link(rng);
        const AbelianGroupInvariants h = h1_surgery(d);
        expect(h1_surgery(apply(d, MoveStep::mirror_all())) == h, "mirror preserves h1");
        expect(h1_surgery(apply(apply(d, MoveStep::mirror_all()),
                                MoveStep::negate_coefficients())) == h,
               "reversal preserves h1");

        for (const auto& c : d.components)
            if (c.coeff.kind == Filling::Integer) {
                EditableDiagram e = EditableDiagram::from_diagram(d);
                std::uniform_int_distribution<int> num(-3, 3), den(1, 4), coin(0, 1);
                SurgeryCoefficient mc = SurgeryCoefficient::rational(num(rng), den(rng));
                if (mc.kind == Filling::Infinity) break;
                add_meridian(e, e.strand_index(c.id), 0, coin(rng) ? 1 : -1, {"m9", "", mc});
                FramedLinkDiagram with = e.to_diagram();
                expect(h1_surgery(slam_dunk(with, "m9", c.id)) == h1_surgery(with),
                       "slam dunk preserves h1");
                break;
            }

        const auto faces = d.faces();
        if (!faces.empty()) {
            std::uniform_int_distribution<std::size_t> pickf(0, faces.size() - 1);
            std::uniform_int_distribution<int> coin(0, 1);
            const DiagramFace& f = faces[pickf(rng)];
            std::vector<Arc> enc;
            if (!f.walls.empty() && coin(rng)) enc.push_back(f.walls[0]);
            FramedLinkDiagram up = apply(d, MoveStep::blowup(f.id, coin(rng) ? 1 : -1, enc));
            expect(h1_surgery(up) == h, "blowup preserves h1");
            std::string fresh;
            for (const auto& c : up.components)
                if (!d.has_component(c.id)) fresh = c.id;
            expect(h1_surgery(apply(up, MoveStep::blowdown(fresh))) == h,
                   "blowdown preserves h1");
        }

        for (const auto& c : d.components)
            if (c.coeff.kind == Filling::Infinity) {
                expect(h1_surgery(apply(d, MoveStep::erase_infinity(c.id))) == h,
                       "erasure preserves h1");
                break;
            }
    }

    // clasp cancellations and slides, over the full coefficient range
    for (int n = -5; n <= 5; ++n) {
        FramedLinkDiagram d =
            braid_closure(2, {1, 1}, {{"a", "", SurgeryCoefficient::integer(0)},
                                      {"b", "", SurgeryCoefficient::integer(n)}});
        expect(h1_surgery(apply(d, MoveStep::hopf_cancel("a", "b"))) == h1_surgery(d),
               "clasp cancellation preserves h1");
    }
    FramedLinkDiagram hopf00 =
        braid_closure(2, {1, 1}, {{"a", "", SurgeryCoefficient::integer(0)},
                                  {"b", "", SurgeryCoefficient::integer(0)}});
    for (const auto& f : hopf00.faces()) {
        for (int eps : {1, -1}) {
            try {
                TraceEntry te;
                apply(hopf00, MoveStep::band_slide("a", "b", {f.id}, eps), te);
                expect(te.pre.h1 == te.post.h1, "band slide preserves h1");
            } catch (const Error&) {
            }
        }
    }
}

void matrix_properties(std::mt19937& rng, int trials) {
    std::uniform_int_distribution<std::size_t> dim(0, 12);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int trial = 0; trial < trials; ++trial) {
        IntegerMatrix m(dim(rng), dim(rng));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
        SmithResult s = smith_normal_form(m);
        expect(s.u * m * s.v == s.d, "decomposition is exact");
        Int du = determinant(s.u), dv = determinant(s.v);
        expect((du == 1 || du == -1) && (dv == 1 || dv == -1), "transforms unimodular");
        const std::size_t lim = std::min(s.d.rows(), s.d.cols());
        for (std::size_t i = 0; i < lim; ++i) {
            for (std::size_t j = 0; j < lim; ++j)
                if (i != j) expect(s.d.at(i, j) == 0, "diagonal form");
            expect(s.d.at(i, i) >= 0, "nonnegative diagonal");
            if (i + 1 < lim) {
                const Int &a = s.d.at(i, i), &b = s.d.at(i + 1, i + 1);
                expect(a != 0 || b == 0, "zeros last");
                expect(a == 0 || b % a == 0, "divisibility chain");
            }
        }
    }

    // boundary-squared-is-zero, enforced at construction on random complexes
    std::uniform_int_distribution<std::size_t> cdim(0, 7), extra(0, 5);
    std::uniform_int_distribution<int> centry(-4, 4);
    for (int trial = 0; trial < trials; ++trial) {
        const std::size_t c0 = cdim(rng), c1 = cdim(rng);
        IntegerMatrix d1(c0, c1);
        for (std::size_t i = 0; i < c0; ++i)
            for (std::size_t j = 0; j < c1; ++j) d1.at(i, j) = centry(rng);
        IntegerMatrix k = ChainComplex({c0, c1}, {d1}).kernel_basis(1);
        IntegerMatrix r(k.cols(), extra(rng));
        for (std::size_t i = 0; i < r.rows(); ++i)
            for (std::size_t j = 0; j < r.cols(); ++j) r.at(i, j) = centry(rng);
        IntegerMatrix d2 = k * r;
        try {
            ChainComplex c({c0, c1, d2.cols()}, {d1, d2});
        } catch (const Error& e) {
            expect(false, std::string("complex construction: ") + e.what());
        }
    }
}

void property_suites() {
    std::mt19937 rng(8899001);
    isotopy_properties(rng, 100);
    surgery_properties(rng, 100);
    matrix_properties(rng, 100);
}

/* ---- runner ---- */

struct Criterion {
    const char* name;
    std::function<void()> run;
    double limit = 0.0;  // seconds; 0 = unpinned
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"twist-knot family: 21 distinct polynomials, two computations agree", twist_family, 10.0},
        {"homology ladder: circle bundle, attached disks, ball certificates", homology_ladder, 1.0},
        {"chain-free link: zero pairwise linking, h1 = Z^3", chain_free_link, 1.0},
        {"clasped pairs slam-dunk and erase to the empty diagram", clasp_reductions, 0.0},
        {"rational-twist unknots twist and erase to the empty diagram", rational_twist_reductions,
         0.0},
        {"boundary link reduces to four ornaments with h1 pinned", boundary_link_reduction, 5.0},
        {"property suites: isotopy moves, surgery calculus, matrix contracts", property_suites,
         60.0},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        problems.clear();
        double secs = 0.0;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].run();
        } catch (const std::exception& e) {
            problems.push_back(std::string("exception: ") + e.what());
        }
        secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (criteria[i].limit > 0.0 && secs > criteria[i].limit) {
            std::ostringstream os;
            os << "over budget: " << secs << "s > " << criteria[i].limit << "s";
            problems.push_back(os.str());
        }
        const bool ok = problems.empty();
        failures += ok ? 0 : 1;
        std::printf("[%s] %zu. %s (%.2fs", ok ? "PASS" : "FAIL", i + 1, criteria[i].name, secs);
        if (criteria[i].limit > 0.0) std::printf(", limit %.0fs", criteria[i].limit);
        std::printf(")\n");
        for (const std::string& p : problems) std::printf("       - %s\n", p.c_str());
    }
    std::printf("%s: %zu of %zu criteria passed\n", failures == 0 ? "ACCEPTED" : "REJECTED",
                criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
