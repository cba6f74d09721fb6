#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corkcalc/alexander.hpp"
#include "corkcalc/builders.hpp"
#include "corkcalc/fld.hpp"
#include "corkcalc/linking.hpp"
#include "corkcalc/moves.hpp"
#include "corkcalc/script.hpp"

#include <random>
#include <string>
#include <vector>

using namespace corkcalc;

namespace {

ComponentSpec orn(const std::string& id) { return {id, "", SurgeryCoefficient::ornament()}; }

std::string alex(const FramedLinkDiagram& d, const std::string& c) {
    return fox_alexander(d, c, false).to_string();
}

std::vector<std::string> fresh_crossings(const FramedLinkDiagram& before,
                                         const FramedLinkDiagram& after) {
    std::vector<std::string> out;
    for (const auto& c : after.crossings) {
        bool known = false;
        for (const auto& c0 : before.crossings) known |= c0.id == c.id;
        if (!known) out.push_back(c.id);
    }
    return out;
}

std::vector<SurgeryCoefficient> coefficients(const FramedLinkDiagram& d) {
    std::vector<SurgeryCoefficient> out;
    for (const auto& c : d.components) out.push_back(c.coeff);
    return out;
}

// find any face bordered by both components and try the slide there
FramedLinkDiagram slide_somewhere(const FramedLinkDiagram& base, const std::string& a,
                                  const std::string& b, int eps, TraceEntry& te) {
    for (const auto& f : base.faces()) {
        bool has_a = false, has_b = false;
        for (Arc w : f.walls) {
            const std::string& id = base.components[base.arc_component(w)].id;
            if (id == a) has_a = true;
            if (id == b) has_b = true;
        }
        if (!has_a || !has_b) continue;
        try {
            return apply(base, MoveStep::band_slide(a, b, {f.id}, eps), te);
        } catch (const Error& e) {
            if (std::string(e.code()) != "PreconditionFailed") throw;
        }
    }
    throw Error("PatternNotFound", "no face realizes this slide sign");
}

IntegerMatrix framed_matrix(const LinkingPresentation& p) {
    IntegerMatrix L(p.filled.size(), p.filled.size());
    for (std::size_t i = 0; i < p.filled.size(); ++i) {
        for (std::size_t j = 0; j < p.filled.size(); ++j) L.at(i, j) = p.linking.at(i, j);
        L.at(i, i) = p.filled[i].coeff.p;
    }
    return L;
}

}  // namespace

TEST_CASE("first reidemeister kinks add and cancel exactly") {
    FramedLinkDiagram tref = braid_closure(2, {1, 1, 1}, {orn("k")});
    const std::string want = alex(tref, "k");
    for (char side : {'L', 'R'})
        for (int sign : {1, -1}) {
            Arc a = tref.components[0].arcs.at(1);
            FramedLinkDiagram d2 = apply(tref, MoveStep::r1_add(a, side, sign));
            CHECK(d2.validate().empty());
            CHECK(d2.crossings.size() == 4);
            CHECK(alex(d2, "k") == want);
            std::vector<std::string> kink = fresh_crossings(tref, d2);
            REQUIRE(kink.size() == 1);
            FramedLinkDiagram d3 = apply(d2, MoveStep::r1_remove(kink[0]));
            CHECK(serialize_fld(d3) == serialize_fld(tref.canonicalized()));
        }
    CHECK_THROWS_WITH_AS(apply(tref, MoveStep::r1_remove(tref.crossings[0].id)),
                         doctest::Contains("PatternNotFound"), Error);
}

TEST_CASE("second reidemeister pushes across every usable face") {
    FramedLinkDiagram tref = braid_closure(2, {1, 1, 1}, {orn("k")});
    const std::string want = alex(tref, "k");
    int tried = 0;
    for (const auto& f : tref.faces()) {
        if (f.walls.size() < 2) continue;
        for (std::size_t i = 0; i < f.walls.size(); ++i)
            for (std::size_t j = 0; j < f.walls.size(); ++j) {
                if (f.walls[i] == f.walls[j]) continue;
                FramedLinkDiagram d2 = apply(tref, MoveStep::r2_add(f.walls[i], f.walls[j], f.id));
                ++tried;
                CHECK(d2.validate().empty());
                CHECK(d2.crossings.size() == 5);
                CHECK(alex(d2, "k") == want);
                std::vector<std::string> fresh = fresh_crossings(tref, d2);
                REQUIRE(fresh.size() == 2);
                FramedLinkDiagram d3 = apply(d2, MoveStep::r2_remove(fresh[0], fresh[1]));
                CHECK(serialize_fld(d3) == serialize_fld(tref.canonicalized()));
            }
    }
    CHECK(tried >= 10);

    // a clasp is not a cancellable bigon
    FramedLinkDiagram hopf = braid_closure(2, {1, 1}, {orn("a"), orn("b")});
    CHECK_THROWS_WITH_AS(
        apply(hopf, MoveStep::r2_remove(hopf.crossings[0].id, hopf.crossings[1].id)),
        doctest::Contains("PatternNotFound"), Error);
}

TEST_CASE("third reidemeister slides strands across triangles") {
    FramedLinkDiagram d = braid_closure(3, {1, 2, 1, 2}, {orn("k")});
    const std::string want = alex(d, "k");
    int hits = 0;
    std::vector<std::string> ids;
    for (const auto& c : d.crossings) ids.push_back(c.id);
    for (std::size_t a = 0; a < ids.size(); ++a)
        for (std::size_t b = a + 1; b < ids.size(); ++b)
            for (std::size_t c = b + 1; c < ids.size(); ++c) {
                try {
                    FramedLinkDiagram d2 = apply(d, MoveStep::r3(ids[a], ids[b], ids[c]));
                    ++hits;
                    CHECK(d2.validate().empty());
                    CHECK(d2.crossings.size() == d.crossings.size());
                    CHECK(alex(d2, "k") == want);
                } catch (const Error& e) {
                    CHECK(std::string(e.code()) == "PatternNotFound");
                }
            }
    CHECK(hits > 0);
}

TEST_CASE("reidemeister moves preserve every counted invariant on random diagrams") {
    std::mt19937 rng(20260823);
    int r1_done = 0, r2_done = 0;
    for (int trial = 0; trial < 100; ++trial) {
        FramedLinkDiagram d = random_link(rng);
        const InvariantSnapshot snap = invariant_snapshot(d);
        const LinkingPresentation lp = linking_matrix(d);
        const auto coeffs = coefficients(d);
        const bool deep = trial % 10 == 0;
        const std::string comp0 = d.components[0].id;
        const std::string delta0 = deep ? alex(d, comp0) : "";

        auto check_preserved = [&](const FramedLinkDiagram& d2) {
            CHECK(d2.validate().empty());
            CHECK(invariant_snapshot(d2) == snap);
            CHECK(linking_matrix(d2).linking == lp.linking);
            CHECK(linking_matrix(d2).order == lp.order);
            CHECK(coefficients(d2) == coeffs);
            if (deep) CHECK(alex(d2, comp0) == delta0);
        };

        // kink a random arc
        std::vector<Arc> arcs;
        for (const auto& c : d.components)
            for (Arc a : c.arcs) arcs.push_back(a);
        if (!arcs.empty()) {
            std::uniform_int_distribution<std::size_t> pick(0, arcs.size() - 1);
            std::uniform_int_distribution<int> coin(0, 1);
            const Arc a = arcs[pick(rng)];
            FramedLinkDiagram d2 =
                apply(d, MoveStep::r1_add(a, coin(rng) ? 'L' : 'R', coin(rng) ? 1 : -1));
            check_preserved(d2);
            std::vector<std::string> kink = fresh_crossings(d, d2);
            REQUIRE(kink.size() == 1);
            CHECK(serialize_fld(apply(d2, MoveStep::r1_remove(kink[0]))) ==
                  serialize_fld(d.canonicalized()));
            ++r1_done;
        }

        // push one strand over another across the first usable face
        for (const auto& f : d.faces()) {
            if (f.walls.size() < 2 || f.walls[0] == f.walls[1]) continue;
            FramedLinkDiagram d2 = apply(d, MoveStep::r2_add(f.walls[0], f.walls[1], f.id));
            check_preserved(d2);
            std::vector<std::string> fresh = fresh_crossings(d, d2);
            REQUIRE(fresh.size() == 2);
            CHECK(serialize_fld(apply(d2, MoveStep::r2_remove(fresh[0], fresh[1]))) ==
                  serialize_fld(d.canonicalized()));
            ++r2_done;
            break;
        }
    }
    CHECK(r1_done == 100);
    CHECK(r2_done >= 90);
}

TEST_CASE("slam dunk folds the meridian coefficient into its target") {
    auto mk = [](SurgeryCoefficient mc, SurgeryCoefficient tc) {
        EditableDiagram e = EditableDiagram::from_diagram(unknot_loop({"t", "", std::move(tc)}));
        add_meridian(e, 0, 0, 1, {"m", "", std::move(mc)});
        return e.to_diagram();
    };

    // r = 0: the target becomes infinity and can then be erased
    FramedLinkDiagram d = mk(SurgeryCoefficient::integer(0), SurgeryCoefficient::integer(0));
    CHECK(h1_surgery(d).to_string() == "0");
    FramedLinkDiagram d2 = slam_dunk(d, "m", "t");
    REQUIRE(d2.components.size() == 1);
    CHECK(d2.components[0].coeff == SurgeryCoefficient::infinity());
    CHECK(h1_surgery(d2).to_string() == "0");
    CHECK(apply(d2, MoveStep::erase_infinity("t")).components.empty());

    // n - 1/r for a few exact values
    CHECK(slam_dunk(mk(SurgeryCoefficient::integer(-1), SurgeryCoefficient::integer(0)), "m", "t")
              .components[0]
              .coeff == SurgeryCoefficient::integer(1));
    CHECK(slam_dunk(mk(SurgeryCoefficient::rational(-1, 3), SurgeryCoefficient::integer(2)), "m",
                    "t")
              .components[0]
              .coeff == SurgeryCoefficient::integer(5));
    CHECK(slam_dunk(mk(SurgeryCoefficient::rational(2, 3), SurgeryCoefficient::integer(1)), "m",
                    "t")
              .components[0]
              .coeff == SurgeryCoefficient::rational(-1, 2));

    FramedLinkDiagram z = mk(SurgeryCoefficient::rational(-1, 3), SurgeryCoefficient::integer(2));
    CHECK(h1_surgery(z) == h1_surgery(slam_dunk(z, "m", "t")));  // Z/5 both sides

    CHECK_THROWS_WITH_AS(
        slam_dunk(mk(SurgeryCoefficient::ornament(), SurgeryCoefficient::integer(0)), "m", "t"),
        doctest::Contains("OrnamentMeridian"), Error);
    CHECK_THROWS_WITH_AS(
        slam_dunk(mk(SurgeryCoefficient::integer(0), SurgeryCoefficient::rational(1, 2)), "m",
                  "t"),
        doctest::Contains("NonIntegerTarget"), Error);

    FramedLinkDiagram borr = braid_closure(
        3, {1, -2, 1, -2, 1, -2},
        {{"B1", "", SurgeryCoefficient::integer(0)}, {"B2", "", SurgeryCoefficient::integer(0)},
         {"B3", "", SurgeryCoefficient::integer(0)}});
    CHECK_THROWS_WITH_AS(slam_dunk(borr, "B1", "B2"), doctest::Contains("NotMeridian"), Error);
}

TEST_CASE("hopf cancellation removes isolated clasped pairs") {
    for (int n = -5; n <= 5; ++n) {
        FramedLinkDiagram d =
            braid_closure(2, {1, 1}, {{"a", "", SurgeryCoefficient::integer(0)},
                                      {"b", "", SurgeryCoefficient::integer(n)}});
        CHECK(h1_surgery(d).to_string() == "0");
        FramedLinkDiagram d2 = apply(d, MoveStep::hopf_cancel("a", "b"));
        CHECK(d2.components.empty());
        CHECK(h1_surgery(d2).to_string() == "0");

        // the same reduction, one slow step at a time
        FramedLinkDiagram s1 = slam_dunk(d, "a", "b");
        REQUIRE(s1.components.size() == 1);
        CHECK(s1.components[0].coeff == SurgeryCoefficient::infinity());
        CHECK(apply(s1, MoveStep::erase_infinity("b")).components.empty());
    }

    FramedLinkDiagram bad =
        braid_closure(2, {1, 1}, {{"a", "", SurgeryCoefficient::integer(2)},
                                  {"b", "", SurgeryCoefficient::integer(3)}});
    CHECK_THROWS_WITH_AS(apply(bad, MoveStep::hopf_cancel("a", "b")),
                         doctest::Contains("BadCoefficients"), Error);

    FramedLinkDiagram borr = braid_closure(
        3, {1, -2, 1, -2, 1, -2},
        {{"B1", "", SurgeryCoefficient::integer(0)}, {"B2", "", SurgeryCoefficient::integer(0)},
         {"B3", "", SurgeryCoefficient::integer(0)}});
    CHECK_THROWS_WITH_AS(apply(borr, MoveStep::hopf_cancel("B1", "B2")),
                         doctest::Contains("NotIsolatedHopfPair"), Error);
}

TEST_CASE("blowdown removes unit-framed circles and twists what they encircled") {
    // isolated loop disappears
    EditableDiagram e;
    e.strands.push_back({"e", "", SurgeryCoefficient::integer(-1), {}});
    e.strands.push_back({"o", "", SurgeryCoefficient::ornament(), {}});
    FramedLinkDiagram d2 = blowdown(e.to_diagram(), "e");
    REQUIRE(d2.components.size() == 1);
    CHECK(d2.components[0].id == "o");

    // -1 meridian of a 0-framed unknot: framing picks up +1
    EditableDiagram e2 =
        EditableDiagram::from_diagram(unknot_loop({"u", "", SurgeryCoefficient::integer(0)}));
    add_meridian(e2, 0, 0, 1, {"e", "", SurgeryCoefficient::integer(-1)});
    FramedLinkDiagram d = e2.to_diagram();
    CHECK(h1_surgery(d).to_string() == "0");
    d2 = blowdown(d, "e");
    REQUIRE(d2.components.size() == 1);
    CHECK(d2.components[0].coeff == SurgeryCoefficient::integer(1));
    CHECK(d2.crossings.empty());
    CHECK(h1_surgery(d2).to_string() == "0");

    // +1 circle around two parallel strands: they pick up a negative clasp
    EditableDiagram e3;
    const int x1 = e3.add_crossing(1, "x1");
    const int x2 = e3.add_crossing(1, "x2");
    const int y2 = e3.add_crossing(1, "y2");
    const int y1 = e3.add_crossing(1, "y1");
    e3.strands.push_back({"e", "", SurgeryCoefficient::integer(1),
                          {{x1, true}, {x2, true}, {y2, false}, {y1, false}}});
    e3.strands.push_back({"p", "", SurgeryCoefficient::ornament(), {{x1, false}, {y1, true}}});
    e3.strands.push_back({"q", "", SurgeryCoefficient::ornament(), {{x2, false}, {y2, true}}});
    d = e3.to_diagram();
    CHECK(linking_number(d, "p", "e") == 1);
    CHECK(linking_number(d, "q", "e") == 1);
    CHECK(linking_number(d, "p", "q") == 0);
    d2 = blowdown(d, "e");
    CHECK(d2.components.size() == 2);
    CHECK(d2.crossings.size() == 2);
    CHECK(linking_number(d2, "p", "q") == -1);

    FramedLinkDiagram fig8o = twist_knot(1, -1, {"k", "", SurgeryCoefficient::ornament()});
    FramedLinkDiagram fig8p = twist_knot(1, -1, {"k", "", SurgeryCoefficient::integer(1)});
    CHECK_THROWS_WITH_AS(blowdown(fig8o, "k"), doctest::Contains("NonUnitFraming"), Error);
    CHECK_THROWS_WITH_AS(blowdown(fig8p, "k"), doctest::Contains("NotBlowdownPattern"), Error);
}

TEST_CASE("blowup and blowdown are inverse to each other") {
    FramedLinkDiagram u = braid_closure(2, {1, 1, 1}, {{"u", "", SurgeryCoefficient::integer(3)}});
    for (int s : {1, -1}) {
        std::string fid;
        Arc arc = 0;
        for (const auto& f : u.faces())
            if (!f.walls.empty()) {
                fid = f.id;
                arc = f.walls[0];
                break;
            }
        FramedLinkDiagram up = apply(u, MoveStep::blowup(fid, s, {arc}));
        CHECK(up.components.size() == 2);
        CHECK(h1_surgery(up) == h1_surgery(u));
        std::string fresh;
        for (const auto& c : up.components)
            if (c.id != "u") fresh = c.id;
        FramedLinkDiagram down = apply(up, MoveStep::blowdown(fresh));
        CHECK(serialize_fld(down) == serialize_fld(u.canonicalized()));
    }
}

TEST_CASE("rolfsen twisting re-frames circles and their satellites") {
    FramedLinkDiagram d = unknot_loop({"c", "", SurgeryCoefficient::integer(3)});
    FramedLinkDiagram d2 = rolfsen_twist(d, "c", 1);
    CHECK(d2.components[0].coeff == SurgeryCoefficient::rational(3, 4));
    CHECK(h1_surgery(d) == h1_surgery(d2));
    CHECK(serialize_fld(rolfsen_twist(d, "c", 0)) == serialize_fld(d.canonicalized()));

    for (int k = -10; k <= 10; ++k) {
        if (k == 0) continue;
        FramedLinkDiagram c = unknot_loop({"c", "", SurgeryCoefficient::rational(-1, k)});
        CHECK(h1_surgery(c).trivial());
        FramedLinkDiagram c2 = rolfsen_twist(c, "c", k);
        CHECK(c2.components[0].coeff == SurgeryCoefficient::infinity());
        CHECK(h1_surgery(c2).trivial());
        CHECK(apply(c2, MoveStep::erase_infinity("c")).components.empty());
    }

    // twisting a circle around two strands braids them together
    EditableDiagram e3;
    const int x1 = e3.add_crossing(1, "x1");
    const int x2 = e3.add_crossing(1, "x2");
    const int y2 = e3.add_crossing(1, "y2");
    const int y1 = e3.add_crossing(1, "y1");
    e3.strands.push_back({"c", "", SurgeryCoefficient::integer(2),
                          {{x1, true}, {x2, true}, {y2, false}, {y1, false}}});
    e3.strands.push_back({"p", "", SurgeryCoefficient::integer(0), {{x1, false}, {y1, true}}});
    e3.strands.push_back({"q", "", SurgeryCoefficient::ornament(), {{x2, false}, {y2, true}}});
    d = e3.to_diagram();
    const AbelianGroupInvariants h_before = h1_surgery(d);
    for (int n : {1, -1, 2}) {
        d2 = rolfsen_twist(d, "c", n);
        CHECK(d2.validate().empty());
        CHECK(linking_number(d2, "p", "q") == n);
        CHECK(linking_number(d2, "p", "c") == 1);
        CHECK(d2.components[d2.component_index("c")].coeff ==
              SurgeryCoefficient::rational(2, 1 + 2 * n));
        CHECK(d2.components[d2.component_index("p")].coeff == SurgeryCoefficient::integer(n));
        CHECK(h1_surgery(d2) == h_before);
    }

    FramedLinkDiagram fig8o = twist_knot(1, -1, {"k", "", SurgeryCoefficient::ornament()});
    FramedLinkDiagram fig8p = twist_knot(1, -1, {"k", "", SurgeryCoefficient::integer(1)});
    CHECK_THROWS_WITH_AS(rolfsen_twist(fig8o, "k", 1), doctest::Contains("OrnamentTarget"), Error);
    CHECK_THROWS_WITH_AS(rolfsen_twist(fig8p, "k", 1), doctest::Contains("NotTwistPattern"),
                         Error);
}

TEST_CASE("band slides recombine framings and record the congruence") {
    FramedLinkDiagram d = braid_closure(2, {1, 1}, {{"a", "", SurgeryCoefficient::integer(0)},
                                                    {"b", "", SurgeryCoefficient::integer(0)}});
    CHECK(linking_number(d, "a", "b") == 1);
    for (int eps : {1, -1}) {
        TraceEntry te;
        FramedLinkDiagram d2 = slide_somewhere(d, "a", "b", eps, te);
        CHECK(d2.validate().empty());
        CHECK(d2.components.size() == 2);
        CHECK(d2.components[d2.component_index("b")].coeff == SurgeryCoefficient::integer(0));
        // framing a' = a + b + 2 eps lk(a,b)
        CHECK(d2.components[d2.component_index("a")].coeff ==
              SurgeryCoefficient::integer(2 * eps));
        CHECK(linking_number(d2, "a", "b") == 1);
        CHECK(te.pre.h1 == te.post.h1);

        REQUIRE(te.congruence.has_value());
        const IntegerMatrix L0 = framed_matrix(linking_matrix(d));
        const IntegerMatrix L1 = framed_matrix(linking_matrix(d2));
        CHECK(te.congruence->transposed() * L0 * *te.congruence == L1);
        CHECK((determinant(L0) == determinant(L1) || determinant(L0) == -determinant(L1)));
    }

    // sliding over a +1 framed split unknot changes framing and linking by eps
    FramedLinkDiagram s = braid_closure(2, {1, -1}, {{"a", "", SurgeryCoefficient::integer(0)},
                                                     {"b", "", SurgeryCoefficient::integer(1)}});
    CHECK(linking_number(s, "a", "b") == 0);
    for (int eps : {1, -1}) {
        TraceEntry te;
        FramedLinkDiagram s2 = slide_somewhere(s, "a", "b", eps, te);
        CHECK(s2.components[s2.component_index("a")].coeff == SurgeryCoefficient::integer(1));
        CHECK(linking_number(s2, "a", "b") == eps);
        CHECK(te.pre.h1 == te.post.h1);
    }

    // refusals
    const std::string f0 = d.faces()[0].id;
    FramedLinkDiagram r = braid_closure(2, {1, 1}, {{"a", "", SurgeryCoefficient::integer(0)},
                                                    {"b", "", SurgeryCoefficient::rational(1, 2)}});
    CHECK_THROWS_WITH_AS(band_slide(r, "a", "b", {r.faces()[0].id}, 1),
                         doctest::Contains("RationalOverComponent"), Error);
    CHECK_THROWS_WITH_AS(band_slide(d, "a", "a", {f0}, 1),
                         doctest::Contains("cannot slide a component over itself"), Error);
    CHECK_THROWS_WITH_AS(band_slide(d, "a", "b", {f0, f0}, 1),
                         doctest::Contains("BandNotEmbedded"), Error);
    CHECK_THROWS_WITH_AS(band_slide(d, "a", "b", {"nope"}, 1), doctest::Contains("UnknownFace"),
                         Error);
}

TEST_CASE("mirror and negation transform the whole diagram coherently") {
    FramedLinkDiagram d = braid_closure(2, {1, 1}, {{"a", "", SurgeryCoefficient::integer(2)},
                                                    {"b", "", SurgeryCoefficient::rational(-3, 2)}});
    FramedLinkDiagram m = apply(d, MoveStep::mirror_all());
    CHECK(linking_number(m, "a", "b") == -1);
    CHECK(serialize_fld(apply(m, MoveStep::mirror_all())) == serialize_fld(d.canonicalized()));

    FramedLinkDiagram n = apply(d, MoveStep::negate_coefficients());
    CHECK(n.components[n.component_index("a")].coeff == SurgeryCoefficient::integer(-2));
    CHECK(n.components[n.component_index("b")].coeff == SurgeryCoefficient::rational(3, 2));
    // h1 invariants agree with the orientation reversal
    CHECK(h1_surgery(apply(m, MoveStep::negate_coefficients())) == h1_surgery(d));
}

TEST_CASE("every surgery move preserves the surgered homology on random diagrams") {
    std::mt19937 rng(424242);
    int slams = 0, blowups = 0, erases = 0;
    for (int trial = 0; trial < 100; ++trial) {
        FramedLinkDiagram d = random_link(rng);
        const AbelianGroupInvariants h = h1_surgery(d);

        CHECK(h1_surgery(apply(d, MoveStep::mirror_all())) == h);
        CHECK(h1_surgery(apply(apply(d, MoveStep::mirror_all()),
                               MoveStep::negate_coefficients())) == h);

        // hang a meridian off an integer-framed component and slam it back in
        for (const auto& c : d.components)
            if (c.coeff.kind == Filling::Integer) {
                EditableDiagram e = EditableDiagram::from_diagram(d);
                std::uniform_int_distribution<int> num(-3, 3), den(1, 4), coin(0, 1);
                const int p = num(rng), q = den(rng);
                SurgeryCoefficient mc = q == 1 ? SurgeryCoefficient::integer(p)
                                               : SurgeryCoefficient::rational(p, q);
                if (mc.kind == Filling::Infinity) break;
                add_meridian(e, e.strand_index(c.id), 0, coin(rng) ? 1 : -1,
                             {"slamme", "", mc});
                FramedLinkDiagram with = e.to_diagram();
                FramedLinkDiagram slammed = slam_dunk(with, "slamme", c.id);
                CHECK(h1_surgery(slammed) == h1_surgery(with));
                ++slams;
                break;
            }

        // blow up a random face, then blow the new curve back down
        const auto faces = d.faces();
        if (!faces.empty()) {
            std::uniform_int_distribution<std::size_t> pickf(0, faces.size() - 1);
            std::uniform_int_distribution<int> coin(0, 1);
            const DiagramFace& f = faces[pickf(rng)];
            std::vector<Arc> enc;  // an isolated curve or one encircled strand
            if (!f.walls.empty() && coin(rng)) enc.push_back(f.walls[0]);
            FramedLinkDiagram up =
                apply(d, MoveStep::blowup(f.id, coin(rng) ? 1 : -1, enc));
            CHECK(h1_surgery(up) == h);
            std::string fresh;
            for (const auto& c : up.components)
                if (!d.has_component(c.id)) fresh = c.id;
            REQUIRE(!fresh.empty());
            CHECK(serialize_fld(apply(up, MoveStep::blowdown(fresh))) ==
                  serialize_fld(d.canonicalized()));
            ++blowups;
        }

        // erase any infinity-framed components
        for (const auto& c : d.components)
            if (c.coeff.kind == Filling::Infinity) {
                CHECK(h1_surgery(apply(d, MoveStep::erase_infinity(c.id))) == h);
                ++erases;
                break;
            }
    }
    CHECK(slams >= 40);
    CHECK(blowups >= 90);
    CHECK(erases >= 10);
}

TEST_CASE("scripts parse, execute, trace, and abort cleanly") {
    const std::string text =
        "# reduce a clasped pair\n"
        "slam meridian=a target=b\n"
        "erase comp=b\n";
    std::vector<MoveStep> steps = parse_script(text);
    REQUIRE(steps.size() == 2);
    FramedLinkDiagram d = braid_closure(2, {1, 1}, {{"a", "", SurgeryCoefficient::integer(0)},
                                                    {"b", "", SurgeryCoefficient::integer(4)}});
    ScriptOutcome out = apply_script(d, steps);
    CHECK(out.ok);
    CHECK(out.diagram.components.empty());
    CHECK(out.trace.entries.size() == 2);
    CHECK(out.trace.chain_contiguous());
    for (const TraceEntry& te : out.trace.entries) CHECK(te.pre.h1 == te.post.h1);

    // a failing step keeps the partial trace and the last good diagram
    ScriptOutcome bad = apply_script(d, parse_script("slam meridian=a target=b\nblowdown comp=b\n"));
    CHECK(!bad.ok);
    CHECK(bad.failed_step == 1);
    CHECK(bad.trace.entries.size() == 1);
    CHECK(bad.error.find("step 2") == 0);
    CHECK(bad.diagram.components.size() == 1);

    CHECK_THROWS_WITH_AS(parse_script("slam meridian=a\n"), doctest::Contains("line 1"), Error);
    CHECK_THROWS_WITH_AS(parse_script("slam meridian=a target=b\nfrobnicate\n"),
                         doctest::Contains("line 2"), Error);
}

TEST_CASE("script lines round-trip through the formatter") {
    std::vector<MoveStep> steps = {
        MoveStep::r1_add(3, 'L', -1),
        MoveStep::r1_remove("x1"),
        MoveStep::r2_add(1, 2, "F0"),
        MoveStep::r2_remove("x1", "x2"),
        MoveStep::r3("x1", "x2", "x3"),
        MoveStep::slam_dunk("m", "t"),
        MoveStep::hopf_cancel("a", "b"),
        MoveStep::blowdown("e"),
        MoveStep::blowup("F2", -1, {4, 7}),
        MoveStep::rolfsen_twist("c", -3),
        MoveStep::band_slide("a", "b", {"F0", "F1"}, -1),
        MoveStep::erase_infinity("c"),
        MoveStep::mirror_all(),
        MoveStep::negate_coefficients(),
    };
    const std::string text = format_script(steps);
    std::vector<MoveStep> back = parse_script(text);
    REQUIRE(back.size() == steps.size());
    CHECK(format_script(back) == text);
    for (std::size_t i = 0; i < steps.size(); ++i) CHECK(back[i].to_line() == steps[i].to_line());
}
