#include "corkcalc/moves.hpp"

#include "corkcalc/errors.hpp"
#include "corkcalc/fld.hpp"
#include "corkcalc/linking.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace corkcalc {

namespace {

using Visit = EditableDiagram::Visit;
using Strand = EditableDiagram::Strand;

/* True when the face walk arriving at this dart runs with the strand's
 * orientation, i.e. the dart is the head end of its wall arc.  The walk
 * keeps its face on the right, so coherent = face on the strand's right. */
bool dart_coherent(const FramedLinkDiagram& d, const Dart& dt) {
    if (dt.slot == 0) return true;
    if (dt.slot == 2) return false;
    return dt.slot == d.over_in_slot(dt.crossing);
}

/* to_diagram reports a failed embedding either directly or folded into the
 * validation summary */
bool planarity_failure(const Error& er) {
    const std::string code = er.code();
    if (code == "NonPlanar") return true;
    return code == "ValidationError" &&
           std::string(er.what()).find("NonPlanar") != std::string::npos;
}

const DiagramFace& find_face(const std::vector<DiagramFace>& fs, const std::string& id) {
    for (const DiagramFace& f : fs)
        if (f.id == id)
            return f;
    throw Error("UnknownFace", "no face " + id);
}

/* crossing index -> its two (strand, position) passes */
std::map<int, std::vector<std::pair<int, std::size_t>>> pass_map(const EditableDiagram& e) {
    std::map<int, std::vector<std::pair<int, std::size_t>>> at;
    for (std::size_t s = 0; s < e.strands.size(); ++s)
        for (std::size_t j = 0; j < e.strands[s].visits.size(); ++j)
            at[e.strands[s].visits[j].crossing].push_back({static_cast<int>(s), j});
    return at;
}

FramedLinkDiagram r1_add(const FramedLinkDiagram& d, Arc arc, char side, int sign) {
    if (side != 'L' && side != 'R')
        throw Error("PreconditionFailed", "kink side must be L or R");
    if (sign != 1 && sign != -1)
        throw Error("PreconditionFailed", "kink sign must be +1 or -1");
    EditableDiagram e = EditableDiagram::from_diagram(d);
    auto [s, gap] = e.position_of_arc(d, arc);
    const int c = e.add_crossing(sign);
    // which pass comes first decides which side the curl hangs on
    if ((side == 'L') == (sign > 0))
        e.insert_visits(s, gap, {{c, false}, {c, true}});
    else
        e.insert_visits(s, gap, {{c, true}, {c, false}});
    return e.to_diagram();
}

FramedLinkDiagram r1_remove(const FramedLinkDiagram& d, const std::string& xid) {
    EditableDiagram e = EditableDiagram::from_diagram(d);
    const int x = e.crossing_index(xid);
    for (Strand& s : e.strands) {
        const std::size_t m = s.visits.size();
        if (m < 2) continue;
        for (std::size_t j = 0; j < m; ++j) {
            if (s.visits[j].crossing != x || s.visits[(j + 1) % m].crossing != x) continue;
            e.remove_crossing(x);
            return e.to_diagram();
        }
    }
    throw Error("PatternNotFound", "crossing " + xid + " is not a removable kink");
}

FramedLinkDiagram r2_add(const FramedLinkDiagram& d, Arc over_arc, Arc under_arc,
                         const std::string& face_id) {
    if (over_arc == under_arc)
        throw Error("PreconditionFailed", "need two distinct arcs to push across");
    const auto fs = d.faces();
    const DiagramFace& f = find_face(fs, face_id);
    int iA = -1, iB = -1;
    for (std::size_t i = 0; i < f.walls.size(); ++i) {
        if (iA < 0 && f.walls[i] == over_arc) iA = static_cast<int>(i);
        if (iB < 0 && f.walls[i] == under_arc) iB = static_cast<int>(i);
    }
    if (iA < 0 || iB < 0)
        throw Error("PreconditionFailed", "both arcs must bound face " + face_id);
    const int dA = dart_coherent(d, f.darts[iA]) ? 1 : -1;
    const int dB = dart_coherent(d, f.darts[iB]) ? 1 : -1;

    EditableDiagram e = EditableDiagram::from_diagram(d);
    auto [sA, gA] = e.position_of_arc(d, over_arc);
    auto [sB, gB] = e.position_of_arc(d, under_arc);
    // the finger dips across B away from the face, then back
    const int c1 = e.add_crossing(-dB);
    const int c2 = e.add_crossing(dB);
    e.insert_visits(sA, gA, {{c1, true}, {c2, true}});
    if (sA == sB && gB > gA) gB += 2;
    if (dA * dB == -1)
        e.insert_visits(sB, gB, {{c1, false}, {c2, false}});
    else
        e.insert_visits(sB, gB, {{c2, false}, {c1, false}});
    return e.to_diagram();
}

FramedLinkDiagram r2_remove(const FramedLinkDiagram& d, const std::string& xid,
                            const std::string& yid) {
    EditableDiagram e = EditableDiagram::from_diagram(d);
    const int x = e.crossing_index(xid);
    const int y = e.crossing_index(yid);
    if (x == y)
        throw Error("PreconditionFailed", "need two distinct crossings");
    int over_seen = 0, under_seen = 0;
    for (const Strand& s : e.strands) {
        const std::size_t m = s.visits.size();
        if (m < 2) continue;
        const std::size_t lim = (m == 2) ? 1 : m;  // a 2-visit strand repeats its pair
        for (std::size_t j = 0; j < lim; ++j) {
            const Visit& u = s.visits[j];
            const Visit& v = s.visits[(j + 1) % m];
            const bool hit = (u.crossing == x && v.crossing == y) ||
                             (u.crossing == y && v.crossing == x);
            if (!hit || u.over != v.over) continue;
            (u.over ? over_seen : under_seen) += 1;
        }
    }
    if (over_seen != 1 || under_seen != 1)
        throw Error("PatternNotFound",
                    xid + "," + yid + " do not bound a bigon with one strand over the other");
    if (e.signs[x] == e.signs[y])
        throw Error("PatternNotFound", "bigon crossings have equal sign (a clasp)");
    e.remove_crossing(std::max(x, y));
    e.remove_crossing(std::min(x, y));
    return e.to_diagram();
}

FramedLinkDiagram r3_move(const FramedLinkDiagram& d, const std::vector<std::string>& ids) {
    EditableDiagram e = EditableDiagram::from_diagram(d);
    std::set<int> tri;
    for (const std::string& id : ids)
        tri.insert(e.crossing_index(id));
    if (tri.size() != 3)
        throw Error("PreconditionFailed", "need three distinct crossings");

    // a slide site is a triangular face whose corners are exactly the triple
    bool saw_triangle = false;
    for (const DiagramFace& f : d.faces()) {
        if (f.walls.size() != 3) continue;
        std::set<int> corners;
        for (const Dart& dt : f.darts) corners.insert(dt.crossing);
        if (corners != tri) continue;
        saw_triangle = true;

        // each wall arc joins two of the corners along one strand; the move is
        // legal iff some strand runs over both others or under both
        struct Side {
            int strand;
            std::size_t a, b;  // visit positions joined by the wall arc
        };
        std::vector<Side> sides;
        bool uniform = false;
        for (Arc a : f.walls) {
            auto [si, j] = e.position_of_arc(d, a);
            const auto& vs = e.strands[si].visits;
            const std::size_t m = vs.size();
            const std::size_t prev = (static_cast<std::size_t>(j) + m - 1) % m;
            sides.push_back({si, prev, static_cast<std::size_t>(j)});
            if (vs[prev].over == vs[j].over) uniform = true;
        }
        if (!uniform) continue;  // cyclic weave on this face; another face may work

        for (const Side& s : sides)
            std::swap(e.strands[s.strand].visits[s.a], e.strands[s.strand].visits[s.b]);
        return e.to_diagram();
    }
    if (saw_triangle)
        throw Error("PatternNotFound",
                    "no strand runs over or under both others; the triangle cannot slide");
    throw Error("PatternNotFound", "crossings do not bound a triangle");
}

FramedLinkDiagram slam_dunk_impl(const FramedLinkDiagram& d, const std::string& mid,
                                 const std::string& tid) {
    EditableDiagram e = EditableDiagram::from_diagram(d);
    const int ms = e.strand_index(mid);
    const int ts = e.strand_index(tid);
    if (ms == ts)
        throw Error("PreconditionFailed", "meridian and target must differ");
    const Strand& m = e.strands[ms];
    if (m.coeff.kind == Filling::Ornament)
        throw Error("OrnamentMeridian", mid + " carries no surgery coefficient");
    if (!m.coeff.is_fraction())
        throw Error("PreconditionFailed", mid + " must carry a finite coefficient");
    if (m.visits.size() != 2 || m.visits[0].crossing == m.visits[1].crossing)
        throw Error("NotMeridian", mid + " is not a small circle around one strand");
    const int x = m.visits[0].crossing;
    const int y = m.visits[1].crossing;

    const auto at = pass_map(e);
    auto other = [&](int c) -> std::pair<int, std::size_t> {
        for (const auto& p : at.at(c))
            if (p.first != ms) return p;
        throw Error("NotMeridian", mid + " crosses itself");
    };
    const auto [sx, px] = other(x);
    const auto [sy, py] = other(y);
    if (sx != ts || sy != ts)
        throw Error("NotMeridian", mid + " does not encircle " + tid);
    const std::size_t tm = e.strands[ts].visits.size();
    if ((px + 1) % tm != py && (py + 1) % tm != px)
        throw Error("NotMeridian", mid + " does not encircle a single strand of " + tid);
    if (e.signs[x] != e.signs[y])
        throw Error("NotMeridian", mid + " does not link " + tid);
    if (!e.strands[ts].coeff.is_integer())
        throw Error("NonIntegerTarget", tid + " must carry an integer coefficient");

    const SurgeryCoefficient nc = m.coeff.slam_into(e.strands[ts].coeff.p);
    e.remove_strand_with_crossings(ms);
    e.strands[e.strand_index(tid)].coeff = nc;
    return e.to_diagram();
}

FramedLinkDiagram hopf_cancel_impl(const FramedLinkDiagram& d, const std::string& aid,
                                   const std::string& bid) {
    EditableDiagram e = EditableDiagram::from_diagram(d);
    const int ia = e.strand_index(aid);
    const int ib = e.strand_index(bid);
    if (ia == ib)
        throw Error("PreconditionFailed", "need two distinct components");
    const Strand& A = e.strands[ia];
    const Strand& B = e.strands[ib];
    if (A.visits.size() != 2 || B.visits.size() != 2)
        throw Error("NotIsolatedHopfPair", aid + "," + bid + " meet other strands");
    const std::set<int> ca{A.visits[0].crossing, A.visits[1].crossing};
    const std::set<int> cb{B.visits[0].crossing, B.visits[1].crossing};
    if (ca.size() != 2 || ca != cb)
        throw Error("NotIsolatedHopfPair", aid + "," + bid + " do not clasp each other alone");
    const int x = *ca.begin();
    const int y = *std::next(ca.begin());
    if (e.signs[x] != e.signs[y])
        throw Error("NotIsolatedHopfPair", aid + "," + bid + " do not link");
    if (!A.coeff.is_integer() || !B.coeff.is_integer())
        throw Error("BadCoefficients", "cancelling pair must be integer framed");
    if (A.coeff.p != 0 && B.coeff.p != 0)
        throw Error("BadCoefficients", "one of the pair must have coefficient 0");
    e.remove_strand_with_crossings(ia);
    e.remove_strand_with_crossings(e.strand_index(bid));
    return e.to_diagram();
}

/* A component that is a round circle with k strands running through it:
 * its 2k crossings split, after some rotation of the visit order, into a
 * top row and a mirrored bottom row, each pierced pair lying consecutively
 * on its strand with equal crossing signs.  `dir` = +1 descends (meets the
 * top row first). */
struct CircleThread {
    int strand = -1;
    std::size_t p = 0;  // pair start: positions (p, p+1 mod m)
    bool wrap = false;
    int dir = 1;
    int sigma = 1;
};

std::vector<std::vector<CircleThread>> circle_candidates(const EditableDiagram& e, int ci,
                                                         const std::string& errcode) {
    const auto& cv = e.strands[ci].visits;
    const std::size_t n2 = cv.size();
    if (n2 % 2 != 0)
        throw Error(errcode, e.strands[ci].id + " has odd crossing count");
    const auto at = pass_map(e);
    for (const Visit& v : cv) {
        const auto& ps = at.at(v.crossing);
        if (ps[0].first == ci && ps[1].first == ci)
            throw Error(errcode, e.strands[ci].id + " crosses itself");
    }
    const std::size_t k = n2 / 2;
    std::vector<std::vector<CircleThread>> cands;
    if (k == 0) {
        cands.push_back({});
        return cands;
    }
    for (std::size_t rho = 0; rho < n2; ++rho) {
        for (int cval : {1, -1}) {
            std::vector<CircleThread> threads;
            bool ok = true;
            for (std::size_t i = 0; ok && i < k; ++i) {
                const int xc = cv[(rho + i) % n2].crossing;
                const int yc = cv[(rho + n2 - 1 - i) % n2].crossing;
                const auto ox = at.at(xc)[0].first == ci ? at.at(xc)[1] : at.at(xc)[0];
                const auto oy = at.at(yc)[0].first == ci ? at.at(yc)[1] : at.at(yc)[0];
                if (ox.first != oy.first) { ok = false; break; }
                if (e.signs[xc] != e.signs[yc]) { ok = false; break; }
                const int sigma = e.signs[xc];
                const auto& sv = e.strands[ox.first].visits;
                if (sv[ox.second].over == sv[oy.second].over) { ok = false; break; }
                const std::size_t m = sv.size();
                CircleThread t;
                t.strand = ox.first;
                t.sigma = sigma;
                t.dir = sigma == cval ? 1 : -1;  // sign·direction is shared by all threads
                if (t.dir == 1) {
                    if ((ox.second + 1) % m != oy.second) { ok = false; break; }
                    t.p = ox.second;
                } else {
                    if ((oy.second + 1) % m != ox.second) { ok = false; break; }
                    t.p = oy.second;
                }
                t.wrap = t.p == m - 1;
                threads.push_back(t);
            }
            if (!ok) continue;
            bool dup = false;
            for (const auto& have : cands) {
                if (have.size() != threads.size()) continue;
                bool same = true;
                for (std::size_t i = 0; same && i < have.size(); ++i)
                    same = have[i].strand == threads[i].strand && have[i].p == threads[i].p &&
                           have[i].dir == threads[i].dir;
                if (same) dup = true;
            }
            if (!dup) cands.push_back(std::move(threads));
        }
    }
    if (cands.empty())
        throw Error(errcode, e.strands[ci].id + " is not a round circle over parallel strands");
    return cands;
}

/* (sigma_1 ... sigma_{k-1})^reps on the threads, h = handedness: crossings of
 * sign h·dir_i·dir_j, the strand moving right-to-left on top when h = +1.
 * Appends each thread's visits in top-to-bottom order. */
void weave_full_twists(EditableDiagram& e, const std::vector<CircleThread>& threads, int h,
                       std::size_t reps, std::vector<std::vector<Visit>>& tvis) {
    const std::size_t k = threads.size();
    tvis.assign(k, {});
    std::vector<std::size_t> col(k);
    for (std::size_t i = 0; i < k; ++i) col[i] = i;
    for (std::size_t rep = 0; rep < reps; ++rep) {
        for (std::size_t m = 1; m < k; ++m) {
            const std::size_t P = col[m - 1], Q = col[m];
            const int c = e.add_crossing(h * threads[P].dir * threads[Q].dir);
            const bool q_over = h == 1;
            tvis[Q].push_back({c, q_over});
            tvis[P].push_back({c, !q_over});
            std::swap(col[m - 1], col[m]);
        }
    }
}

/* Insert per-thread visit blocks into their strands; gaps precomputed per
 * thread, larger positions first so earlier gaps stay valid. */
void insert_thread_blocks(EditableDiagram& e,
                          std::vector<std::tuple<int, std::size_t, std::vector<Visit>>> blocks) {
    std::stable_sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
        return std::get<1>(a) > std::get<1>(b);
    });
    for (auto& [s, gap, vs] : blocks)
        e.insert_visits(s, static_cast<int>(gap), vs);
}

FramedLinkDiagram blowdown_impl(const FramedLinkDiagram& d, const std::string& comp) {
    EditableDiagram base = EditableDiagram::from_diagram(d);
    const int ei = base.strand_index(comp);
    const Strand& E = base.strands[ei];
    if (!E.coeff.is_integer() || (E.coeff.p != 1 && E.coeff.p != -1))
        throw Error("NonUnitFraming", comp + " must be framed +1 or -1");
    const int eps = E.coeff.p == 1 ? 1 : -1;
    const auto cands = circle_candidates(base, ei, "NotBlowdownPattern");

    const std::set<int> circle_xs = [&] {
        std::set<int> s;
        for (const Visit& v : base.strands[ei].visits) s.insert(v.crossing);
        return s;
    }();

    for (const auto& threads : cands) {
        EditableDiagram e = base;
        const std::size_t k = threads.size();

        // linking of every strand with the circle, and the shifted coefficients
        std::vector<Int> lk(e.strands.size(), Int(0));
        for (const CircleThread& t : threads) lk[t.strand] += t.sigma;

        // where each thread's pair sat, in post-removal indexing
        std::vector<std::size_t> gap(k, 0);
        for (std::size_t i = 0; i < k; ++i) {
            const auto& sv = e.strands[threads[i].strand].visits;
            std::size_t kept = 0;
            for (std::size_t pos = 0; pos < sv.size(); ++pos) {
                if (!threads[i].wrap && pos == threads[i].p) { gap[i] = kept; }
                if (!circle_xs.count(sv[pos].crossing)) ++kept;
            }
            if (threads[i].wrap) gap[i] = kept;
        }

        for (std::size_t s = 0; s < e.strands.size(); ++s) {
            if (lk[s] == 0 || !e.strands[s].coeff.is_fraction()) continue;
            e.strands[s].coeff = e.strands[s].coeff.shifted(-eps * lk[s] * lk[s]);
        }
        e.remove_strand_with_crossings(ei);
        auto post = [&](int s) { return s > ei ? s - 1 : s; };

        std::vector<std::vector<Visit>> tvis;
        weave_full_twists(e, threads, -eps, k, tvis);

        std::vector<std::tuple<int, std::size_t, std::vector<Visit>>> blocks;
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<Visit> vs = tvis[i];
            if (threads[i].dir == -1) std::reverse(vs.begin(), vs.end());
            blocks.push_back({post(threads[i].strand), gap[i], std::move(vs)});
        }
        insert_thread_blocks(e, std::move(blocks));
        try {
            return e.to_diagram();
        } catch (const Error& er) {
            if (!planarity_failure(er)) throw;
        }
    }
    throw Error("NotBlowdownPattern", comp + " does not bound a disk met transversally");
}

FramedLinkDiagram rolfsen_impl(const FramedLinkDiagram& d, const std::string& comp, int n) {
    EditableDiagram base = EditableDiagram::from_diagram(d);
    const int ci = base.strand_index(comp);
    const SurgeryCoefficient cc = base.strands[ci].coeff;
    if (cc.kind == Filling::Ornament)
        throw Error("OrnamentTarget", comp + " carries no surgery coefficient");
    if (cc.kind == Filling::Unfilled)
        throw Error("PreconditionFailed", comp + " is unfilled");
    const auto cands = circle_candidates(base, ci, "NotTwistPattern");
    if (n == 0) return d.canonicalized();

    for (const auto& threads : cands) {
        EditableDiagram e = base;
        const std::size_t k = threads.size();

        std::vector<Int> lk(e.strands.size(), Int(0));
        for (const CircleThread& t : threads) lk[t.strand] += t.sigma;
        const auto [cp, cq] = cc.as_fraction_with_infinity();
        e.strands[ci].coeff = SurgeryCoefficient::rational(cp, cq + Int(n) * cp);
        for (std::size_t s = 0; s < e.strands.size(); ++s) {
            if (static_cast<int>(s) == ci) continue;
            if (lk[s] == 0 || !e.strands[s].coeff.is_fraction()) continue;
            e.strands[s].coeff = e.strands[s].coeff.shifted(Int(n) * lk[s] * lk[s]);
        }

        const int h = n > 0 ? 1 : -1;
        std::vector<std::vector<Visit>> tvis;
        weave_full_twists(e, threads, h, k * static_cast<std::size_t>(n > 0 ? n : -n), tvis);

        std::vector<std::tuple<int, std::size_t, std::vector<Visit>>> blocks;
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<Visit> vs = tvis[i];
            if (threads[i].dir == -1) std::reverse(vs.begin(), vs.end());
            const std::size_t m = e.strands[threads[i].strand].visits.size();
            const std::size_t gap = threads[i].wrap ? m : threads[i].p + 1;
            blocks.push_back({threads[i].strand, gap, std::move(vs)});
        }
        insert_thread_blocks(e, std::move(blocks));
        try {
            return e.to_diagram();
        } catch (const Error& er) {
            if (!planarity_failure(er)) throw;
        }
    }
    throw Error("NotTwistPattern", comp + " does not bound a disk met transversally");
}

FramedLinkDiagram blowup_impl(const FramedLinkDiagram& d, const std::string& face_id, int sign,
                              const std::vector<Arc>& arcs) {
    if (sign != 1 && sign != -1)
        throw Error("PreconditionFailed", "blowup sign must be +1 or -1");
    if (arcs.size() > 1)
        throw Error("PreconditionFailed",
                    "blowup circles at most one strand here; slide strands in afterwards");
    const auto fs = d.faces();
    const DiagramFace& f = find_face(fs, face_id);
    EditableDiagram e = EditableDiagram::from_diagram(d);
    ComponentSpec spec;
    spec.id = e.fresh_strand_id("e");
    spec.coeff = SurgeryCoefficient::integer(sign);
    if (arcs.empty()) {
        e.strands.push_back({spec.id, spec.id, spec.coeff, {}});
        return e.to_diagram();
    }
    if (std::find(f.walls.begin(), f.walls.end(), arcs[0]) == f.walls.end())
        throw Error("PreconditionFailed", "arc must bound face " + face_id);
    auto [s, gap] = e.position_of_arc(d, arcs[0]);
    add_meridian(e, s, gap, 1, spec);
    if (e.strands[s].coeff.is_fraction())
        e.strands[s].coeff = e.strands[s].coeff.shifted(sign);
    return e.to_diagram();
}

FramedLinkDiagram erase_infinity_impl(const FramedLinkDiagram& d, const std::string& comp) {
    EditableDiagram e = EditableDiagram::from_diagram(d);
    const int ci = e.strand_index(comp);
    if (e.strands[ci].coeff.kind != Filling::Infinity)
        throw Error("PreconditionFailed", comp + " is not an infinity-framed component");
    e.remove_strand_with_crossings(ci);
    return e.to_diagram();
}

FramedLinkDiagram negate_impl(const FramedLinkDiagram& d) {
    EditableDiagram e = EditableDiagram::from_diagram(d);
    for (Strand& s : e.strands)
        if (s.coeff.is_fraction())
            s.coeff = SurgeryCoefficient::rational(-s.coeff.p, s.coeff.q);
    return e.to_diagram();
}

/* ---- band slide ---- */

struct PendingInsert {
    std::size_t anchor = 0;  // visit index in the original list
    bool before = false;     // head side (right before the anchor visit)
    std::vector<Visit> vs;
};

/* Applies all inserts to one strand in a single pass and remaps any tracked
 * gaps g by the visits inserted strictly before the middle of gap g. */
void apply_inserts(Strand& s, const std::vector<PendingInsert>& ins, std::vector<int*> gaps) {
    std::vector<Visit> out;
    const std::size_t m = s.visits.size();
    for (std::size_t q = 0; q < m; ++q) {
        for (const PendingInsert& pi : ins)
            if (pi.before && pi.anchor == q) out.insert(out.end(), pi.vs.begin(), pi.vs.end());
        out.push_back(s.visits[q]);
        for (const PendingInsert& pi : ins)
            if (!pi.before && pi.anchor == q) out.insert(out.end(), pi.vs.begin(), pi.vs.end());
    }
    // a tracked gap moves past every visit inserted around an earlier anchor
    for (int* g : gaps) {
        std::size_t add = 0;
        for (const PendingInsert& pi : ins)
            if (pi.anchor < static_cast<std::size_t>(*g)) add += pi.vs.size();
        *g += static_cast<int>(add);
    }
    s.visits = std::move(out);
}

FramedLinkDiagram band_slide_impl(const FramedLinkDiagram& d, const std::string& aid,
                                  const std::string& bid,
                                  const std::vector<std::string>& band_faces, int eps,
                                  IntegerMatrix* congruence_out) {
    if (eps != 1 && eps != -1)
        throw Error("PreconditionFailed", "slide sign must be +1 or -1");
    if (band_faces.empty())
        throw Error("PreconditionFailed", "band needs at least one face");
    const auto fs = d.faces();
    std::vector<const DiagramFace*> path;
    for (const std::string& id : band_faces) path.push_back(&find_face(fs, id));
    for (std::size_t i = 0; i < path.size(); ++i)
        for (std::size_t j = i + 1; j < path.size(); ++j)
            if (path[i]->id == path[j]->id)
                throw Error("BandNotEmbedded", "band revisits face " + path[i]->id);

    EditableDiagram e = EditableDiagram::from_diagram(d);
    const int ia = e.strand_index(aid);
    const int ib = e.strand_index(bid);
    if (ia == ib)
        throw Error("PreconditionFailed", "cannot slide a component over itself");
    const Strand& A0 = e.strands[ia];
    const Strand& B0 = e.strands[ib];
    if (B0.coeff.kind == Filling::Rational)
        throw Error("RationalOverComponent", bid + " is rationally framed");
    if (!B0.coeff.is_integer())
        throw Error("PreconditionFailed", bid + " must be integer framed");
    if (A0.coeff.kind == Filling::Rational)
        throw Error("RationalOverComponent", aid + " is rationally framed");
    if (!A0.coeff.is_integer() && A0.coeff.kind != Filling::Ornament)
        throw Error("PreconditionFailed", aid + " must be integer framed or an ornament");
    const Int f_b = B0.coeff.p;
    const std::string alabel = e.strands[ia].id;
    const std::string blabel = e.strands[ib].id;

    const std::size_t comp_a = d.component_index(alabel);
    const std::size_t comp_b = d.component_index(blabel);

    /* Band ends: an arc of a bounding the first face and an arc of b bounding
     * the last.  An untwisted band forces the slide sign: the push-off is run
     * coherently exactly when the two attachment arcs point the same way
     * around the band corridor, so pick a wall pair matching the request. */
    Arc cut_arc = static_cast<Arc>(-1);
    Arc b_wall = static_cast<Arc>(-1);
    std::size_t b_wall_idx = 0;
    bool saw_a = false, saw_b = false;
    for (std::size_t i = 0; cut_arc == static_cast<Arc>(-1) && i < path.front()->walls.size();
         ++i) {
        if (d.arc_component(path.front()->walls[i]) != comp_a) continue;
        saw_a = true;
        const bool ca = dart_coherent(d, path.front()->darts[i]);
        for (std::size_t j = 0; j < path.back()->walls.size(); ++j) {
            if (d.arc_component(path.back()->walls[j]) != comp_b) continue;
            saw_b = true;
            const bool cb = dart_coherent(d, path.back()->darts[j]);
            if ((ca == cb) != (eps == 1)) continue;
            cut_arc = path.front()->walls[i];
            b_wall = path.back()->walls[j];
            b_wall_idx = j;
            break;
        }
    }
    if (cut_arc == static_cast<Arc>(-1)) {
        if (!saw_a)
            throw Error("PreconditionFailed", "first band face has no arc of " + aid);
        if (!saw_b)
            throw Error("PreconditionFailed", "last band face has no arc of " + bid);
        throw Error("PreconditionFailed",
                    "this band realizes the opposite slide sign; route it differently");
    }

    // walls the band crosses between consecutive faces, and the crossing handedness
    struct WallHit {
        Arc arc;
        int sigma_going;  // +1 when the earlier face lies left of the wall's strand
    };
    std::vector<WallHit> hits;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        Arc found = static_cast<Arc>(-1);
        int sg = 0;
        for (std::size_t wi = 0; wi < path[i]->walls.size(); ++wi) {
            const Arc w = path[i]->walls[wi];
            if (w == cut_arc || w == b_wall) continue;
            if (std::find(path[i + 1]->walls.begin(), path[i + 1]->walls.end(), w) ==
                path[i + 1]->walls.end())
                continue;
            found = w;
            sg = dart_coherent(d, path[i]->darts[wi]) ? -1 : 1;
            break;
        }
        if (found == static_cast<Arc>(-1))
            throw Error("PreconditionFailed", "band faces " + path[i]->id + "," +
                                                  path[i + 1]->id + " share no usable arc");
        hits.push_back({found, sg});
    }

    // which side of b the parallel push-off runs on: -1 = left
    const int side_x = dart_coherent(d, path.back()->darts[b_wall_idx]) ? 1 : -1;

    const Int lk_ab = linking_number(d, alabel, blabel);
    Int writhe_b = 0;
    {
        std::set<int> seen;
        const auto at = pass_map(e);
        for (const Visit& v : B0.visits) {
            const auto& ps = at.at(v.crossing);
            if (ps[0].first == ib && ps[1].first == ib && !seen.count(v.crossing)) {
                seen.insert(v.crossing);
                writhe_b += e.signs[v.crossing];
            }
        }
    }

    // positions before any editing
    auto [sa, gap_a_i] = e.position_of_arc(d, cut_arc);
    auto [sb, gap_b_i] = e.position_of_arc(d, b_wall);
    int gap_a = gap_a_i, gap_b = gap_b_i;
    std::vector<std::pair<int, int>> wall_pos;  // (strand, gap)
    for (const WallHit& h : hits) {
        auto [ws, wg] = e.position_of_arc(d, h.arc);
        wall_pos.push_back({ws, wg});
    }

    /* Double b into the push-off P.  New crossings copy b's crossing sign;
     * the transversal strand meets the copy before b's own line exactly when
     * the push-off lane lies on the incoming side. */
    const auto at = pass_map(e);
    const auto bvis = B0.visits;
    const std::size_t nb = bvis.size();
    auto meets_copy_first = [&](std::size_t j) {
        // lane side vs the transversal's approach at b's pass j
        const int sigma = e.signs[bvis[j].crossing];
        return side_x == (bvis[j].over ? sigma : -sigma);
    };

    std::vector<Visit> P;                    // parallel order (as if eps = +1)
    std::vector<std::size_t> gstart(nb, 0);  // P index where pass j's copies begin
    std::vector<int> flip;                   // crossings to negate when eps = -1
    std::map<int, PendingInsert> b_self;     // extra visits b itself gains, keyed by anchor
    std::map<int, std::vector<PendingInsert>> other_ins;  // strand -> inserts

    // self-crossings of b get three copies; order bookkeeping per pass pair
    std::map<std::size_t, std::pair<int, int>> self_new;  // first pass j -> (c_jq, c_pp)
    std::map<std::size_t, std::pair<int, int>> self_new2;  // second pass q -> (c_qj, c_pp)
    for (std::size_t j = 0; j < nb; ++j) {
        const int c = bvis[j].crossing;
        const auto& ps = at.at(c);
        const bool self = ps[0].first == ib && ps[1].first == ib;
        gstart[j] = P.size();
        if (!self) {
            const auto other = ps[0].first == ib && ps[0].second == j ? ps[1] : ps[0];
            const int nj = e.add_crossing(e.signs[c]);
            flip.push_back(nj);
            P.push_back({nj, bvis[j].over});
            PendingInsert pi;
            pi.anchor = other.second;
            pi.before = meets_copy_first(j);
            pi.vs = {{nj, !bvis[j].over}};
            other_ins[other.first].push_back(pi);
            continue;
        }
        const std::size_t q = ps[0].second == j ? ps[1].second : ps[0].second;
        if (j < q) {
            const int c_jq = e.add_crossing(e.signs[c]);  // P@j over b@q's line
            const int c_qj = e.add_crossing(e.signs[c]);
            const int c_pp = e.add_crossing(e.signs[c]);
            flip.push_back(c_jq);
            flip.push_back(c_qj);
            self_new[j] = {c_jq, c_pp};
            self_new2[q] = {c_qj, c_pp};
            // b@j meets P@q's copy on one side of its own crossing
            PendingInsert pj;
            pj.anchor = j;
            pj.before = meets_copy_first(q);
            pj.vs = {{c_qj, bvis[j].over}};
            b_self[static_cast<int>(j)] = pj;
            PendingInsert pq;
            pq.anchor = q;
            pq.before = meets_copy_first(j);
            pq.vs = {{c_jq, bvis[q].over}};
            b_self[static_cast<int>(q)] = pq;
            // P@j passes the copy of q and the line of q, in the same order
            if (meets_copy_first(q))
                P.insert(P.end(), {{c_pp, bvis[j].over}, {c_jq, bvis[j].over}});
            else
                P.insert(P.end(), {{c_jq, bvis[j].over}, {c_pp, bvis[j].over}});
        } else {
            const auto [c_qj, c_pp] = self_new2.at(j);
            if (meets_copy_first(q))
                P.insert(P.end(), {{c_pp, bvis[j].over}, {c_qj, bvis[j].over}});
            else
                P.insert(P.end(), {{c_qj, bvis[j].over}, {c_pp, bvis[j].over}});
        }
    }
    if (eps == -1) {
        std::reverse(P.begin(), P.end());
        for (int c : flip) e.signs[c] = -e.signs[c];
    }
    int p_cut = static_cast<int>(eps == -1 ? P.size() - gstart[static_cast<std::size_t>(gap_b)]
                                           : gstart[static_cast<std::size_t>(gap_b)]);

    // apply b's own doubling inserts, tracking the clasp gap and walls on b
    {
        std::vector<PendingInsert> bi;
        for (const auto& [k2, v] : b_self) bi.push_back(v);
        std::vector<int*> bgaps{&gap_b};
        for (auto& wp : wall_pos)
            if (wp.first == ib) bgaps.push_back(&wp.second);
        apply_inserts(e.strands[ib], bi, bgaps);
    }
    // other strands' doubling inserts, tracking cut and wall gaps
    for (auto& [si, ins] : other_ins) {
        std::vector<int*> gaps;
        if (si == sa) gaps.push_back(&gap_a);
        for (std::size_t w = 0; w < wall_pos.size(); ++w)
            if (wall_pos[w].first == si) gaps.push_back(&wall_pos[w].second);
        apply_inserts(e.strands[si], ins, gaps);
    }

    // clasps restoring the framing mismatch between b's writhe and f_b
    const Int delta_cl = Int(eps) * (f_b - writhe_b);
    std::vector<Visit> clasp_P, clasp_b;
    if (delta_cl != 0) {
        const int s_c = delta_cl > 0 ? 1 : -1;
        const long long cnt = (delta_cl > 0 ? delta_cl : Int(-delta_cl)).convert_to<long long>();
        const bool f_p = s_c == -side_x;
        for (long long t = 0; t < cnt; ++t) {
            const int h1c = e.add_crossing(s_c);
            const int h2c = e.add_crossing(s_c);
            clasp_P.push_back({h1c, f_p});
            clasp_P.push_back({h2c, !f_p});
            if (eps == 1) {
                clasp_b.push_back({h1c, !f_p});
                clasp_b.push_back({h2c, f_p});
            } else {
                clasp_b.insert(clasp_b.begin(), {{h2c, f_p}, {h1c, !f_p}});
            }
        }
        e.insert_visits(ib, gap_b, clasp_b);
        for (auto& wp : wall_pos)
            if (wp.first == ib && wp.second > gap_b)
                wp.second += static_cast<int>(clasp_b.size());
    }

    // band walls: the band runs over every wall, out and back
    std::vector<Visit> going, coming;
    std::vector<std::tuple<int, std::size_t, std::vector<Visit>>> wall_blocks;
    for (std::size_t w = 0; w < hits.size(); ++w) {
        const int sg = hits[w].sigma_going;
        const int xg = e.add_crossing(sg);
        const int yg = e.add_crossing(-sg);
        going.push_back({xg, true});
        coming.insert(coming.begin(), {yg, true});
        std::vector<Visit> under =
            sg == 1 ? std::vector<Visit>{{xg, false}, {yg, false}}
                    : std::vector<Visit>{{yg, false}, {xg, false}};
        wall_blocks.push_back({wall_pos[w].first, static_cast<std::size_t>(wall_pos[w].second),
                               std::move(under)});
    }
    // walls on the cut strand shift the splice gap
    std::stable_sort(wall_blocks.begin(), wall_blocks.end(), [](const auto& x, const auto& y) {
        if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) < std::get<0>(y);
        return std::get<1>(x) > std::get<1>(y);
    });
    for (auto& [ws, wg, vs] : wall_blocks) {
        e.insert_visits(ws, static_cast<int>(wg), vs);
        if (ws == sa && static_cast<int>(wg) < gap_a) gap_a += 2;
        if (ws == ib && static_cast<int>(wg) < gap_b) gap_b += 2;  // unused later; kept exact
    }

    // splice: out along the band, once around the push-off, back
    std::vector<Visit> block = going;
    block.insert(block.end(), P.begin() + p_cut, P.end());
    block.insert(block.end(), P.begin(), P.begin() + p_cut);
    block.insert(block.end(), clasp_P.begin(), clasp_P.end());
    block.insert(block.end(), coming.begin(), coming.end());
    e.insert_visits(sa, gap_a, block);

    if (e.strands[ia].coeff.is_integer())
        e.strands[ia].coeff =
            SurgeryCoefficient::integer(e.strands[ia].coeff.p + f_b + Int(2 * eps) * lk_ab);

    if (congruence_out != nullptr && A0.coeff.is_integer()) {
        const LinkingPresentation pres = linking_matrix(d);
        int ra = -1, rb = -1;
        for (std::size_t i = 0; i < pres.filled.size(); ++i) {
            if (pres.filled[i].label == d.components[comp_a].label) ra = static_cast<int>(i);
            if (pres.filled[i].label == d.components[comp_b].label) rb = static_cast<int>(i);
        }
        if (ra >= 0 && rb >= 0) {
            IntegerMatrix E = IntegerMatrix::identity(pres.filled.size());
            E.at(rb, ra) = eps;
            *congruence_out = E;
        }
    }
    return e.to_diagram();
}

}  // namespace

MoveStep MoveStep::r1_add(Arc arc, char side, int sign) {
    MoveStep s;
    s.kind = Kind::R1Add;
    s.arc = arc;
    s.side = side;
    s.sign = sign;
    return s;
}
MoveStep MoveStep::r1_remove(const std::string& crossing) {
    MoveStep s;
    s.kind = Kind::R1Remove;
    s.crossings = {crossing};
    return s;
}
MoveStep MoveStep::r2_add(Arc over, Arc under, const std::string& face) {
    MoveStep s;
    s.kind = Kind::R2Add;
    s.arcs = {over, under};
    s.face = face;
    return s;
}
MoveStep MoveStep::r2_remove(const std::string& x, const std::string& y) {
    MoveStep s;
    s.kind = Kind::R2Remove;
    s.crossings = {x, y};
    return s;
}
MoveStep MoveStep::r3(const std::string& x, const std::string& y, const std::string& z) {
    MoveStep s;
    s.kind = Kind::R3;
    s.crossings = {x, y, z};
    return s;
}
MoveStep MoveStep::slam_dunk(const std::string& meridian, const std::string& target) {
    MoveStep s;
    s.kind = Kind::SlamDunk;
    s.a = meridian;
    s.b = target;
    return s;
}
MoveStep MoveStep::hopf_cancel(const std::string& c1, const std::string& c2) {
    MoveStep s;
    s.kind = Kind::HopfCancel;
    s.a = c1;
    s.b = c2;
    return s;
}
MoveStep MoveStep::blowdown(const std::string& comp) {
    MoveStep s;
    s.kind = Kind::Blowdown;
    s.a = comp;
    return s;
}
MoveStep MoveStep::blowup(const std::string& face, int sign, const std::vector<Arc>& arcs) {
    MoveStep s;
    s.kind = Kind::Blowup;
    s.face = face;
    s.sign = sign;
    s.arcs = arcs;
    return s;
}
MoveStep MoveStep::rolfsen_twist(const std::string& comp, int twists) {
    MoveStep s;
    s.kind = Kind::RolfsenTwist;
    s.a = comp;
    s.twists = twists;
    return s;
}
MoveStep MoveStep::band_slide(const std::string& comp, const std::string& over,
                              const std::vector<std::string>& band, int sign) {
    MoveStep s;
    s.kind = Kind::BandSlide;
    s.a = comp;
    s.b = over;
    s.band = band;
    s.sign = sign;
    return s;
}
MoveStep MoveStep::erase_infinity(const std::string& comp) {
    MoveStep s;
    s.kind = Kind::EraseInfinity;
    s.a = comp;
    return s;
}
MoveStep MoveStep::mirror_all() {
    MoveStep s;
    s.kind = Kind::MirrorAll;
    return s;
}
MoveStep MoveStep::negate_coefficients() {
    MoveStep s;
    s.kind = Kind::NegateCoefficients;
    return s;
}

std::string MoveStep::to_line() const {
    std::ostringstream o;
    auto join = [](const auto& v) {
        std::ostringstream j;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) j << ",";
            j << v[i];
        }
        return j.str();
    };
    switch (kind) {
        case Kind::R1Add:
            o << "r1+ arc=" << arc << " side=" << side << " sign=" << (sign > 0 ? "+" : "-");
            break;
        case Kind::R1Remove: o << "r1- crossing=" << crossings.at(0); break;
        case Kind::R2Add: o << "r2+ arcs=" << join(arcs) << " face=" << face; break;
        case Kind::R2Remove: o << "r2- crossings=" << join(crossings); break;
        case Kind::R3: o << "r3 crossings=" << join(crossings); break;
        case Kind::SlamDunk: o << "slam meridian=" << a << " target=" << b; break;
        case Kind::HopfCancel: o << "cancel pair=" << a << "," << b; break;
        case Kind::Blowdown: o << "blowdown comp=" << a; break;
        case Kind::Blowup:
            o << "blowup face=" << face << " sign=" << (sign > 0 ? "+" : "-");
            if (!arcs.empty()) o << " arcs=" << join(arcs);
            break;
        case Kind::RolfsenTwist: o << "rolfsen comp=" << a << " twists=" << twists; break;
        case Kind::BandSlide:
            o << "slide comp=" << a << " over=" << b << " band=" << join(band)
              << " sign=" << (sign > 0 ? "+" : "-");
            break;
        case Kind::EraseInfinity: o << "erase comp=" << a; break;
        case Kind::MirrorAll: o << "mirror"; break;
        case Kind::NegateCoefficients: o << "negate"; break;
    }
    return o.str();
}

InvariantSnapshot invariant_snapshot(const FramedLinkDiagram& d) {
    InvariantSnapshot s;
    s.components = d.components.size();
    for (const Component& c : d.components)
        if (c.coeff.kind == Filling::Ornament) ++s.ornaments;
    s.h1 = h1_surgery(d);
    return s;
}

bool MoveTrace::chain_contiguous() const {
    for (std::size_t i = 0; i + 1 < entries.size(); ++i)
        if (entries[i].post_hash != entries[i + 1].pre_hash) return false;
    return true;
}

FramedLinkDiagram apply(const FramedLinkDiagram& d, const MoveStep& step) {
    d.require_valid();
    switch (step.kind) {
        case MoveStep::Kind::R1Add: return r1_add(d, step.arc, step.side, step.sign);
        case MoveStep::Kind::R1Remove: return r1_remove(d, step.crossings.at(0));
        case MoveStep::Kind::R2Add:
            return r2_add(d, step.arcs.at(0), step.arcs.at(1), step.face);
        case MoveStep::Kind::R2Remove:
            return r2_remove(d, step.crossings.at(0), step.crossings.at(1));
        case MoveStep::Kind::R3: return r3_move(d, step.crossings);
        case MoveStep::Kind::SlamDunk: return slam_dunk_impl(d, step.a, step.b);
        case MoveStep::Kind::HopfCancel: return hopf_cancel_impl(d, step.a, step.b);
        case MoveStep::Kind::Blowdown: return blowdown_impl(d, step.a);
        case MoveStep::Kind::Blowup: return blowup_impl(d, step.face, step.sign, step.arcs);
        case MoveStep::Kind::RolfsenTwist: return rolfsen_impl(d, step.a, step.twists);
        case MoveStep::Kind::BandSlide:
            return band_slide_impl(d, step.a, step.b, step.band, step.sign, nullptr);
        case MoveStep::Kind::EraseInfinity: return erase_infinity_impl(d, step.a);
        case MoveStep::Kind::MirrorAll: return d.mirrored().canonicalized();
        case MoveStep::Kind::NegateCoefficients: return negate_impl(d);
    }
    throw Error("ValidationError", "unknown move kind");
}

FramedLinkDiagram apply(const FramedLinkDiagram& d, const MoveStep& step, TraceEntry& entry) {
    d.require_valid();
    entry = TraceEntry{};
    entry.step = step.to_line();
    entry.pre_hash = diagram_hash(d);
    entry.pre = invariant_snapshot(d);
    FramedLinkDiagram out;
    if (step.kind == MoveStep::Kind::BandSlide) {
        IntegerMatrix E(0, 0);
        out = band_slide_impl(d, step.a, step.b, step.band, step.sign, &E);
        if (E.rows() > 0) entry.congruence = E;
    } else {
        out = apply(d, step);
    }
    entry.post_hash = diagram_hash(out);
    entry.post = invariant_snapshot(out);
    return out;
}

ScriptOutcome apply_script(const FramedLinkDiagram& d, const std::vector<MoveStep>& steps) {
    ScriptOutcome out;
    out.diagram = d.canonicalized();
    for (std::size_t i = 0; i < steps.size(); ++i) {
        try {
            TraceEntry te;
            FramedLinkDiagram nd = apply(out.diagram, steps[i], te);
            out.trace.entries.push_back(std::move(te));
            out.diagram = std::move(nd);
        } catch (const Error& er) {
            out.ok = false;
            out.failed_step = i;
            out.error = "step " + std::to_string(i + 1) + ": " + er.what();
            break;
        }
    }
    return out;
}

FramedLinkDiagram slam_dunk(const FramedLinkDiagram& d, const std::string& meridian,
                            const std::string& target) {
    return slam_dunk_impl(d, meridian, target);
}
FramedLinkDiagram hopf_cancel(const FramedLinkDiagram& d, const std::string& c1,
                              const std::string& c2) {
    return hopf_cancel_impl(d, c1, c2);
}
FramedLinkDiagram blowdown(const FramedLinkDiagram& d, const std::string& comp) {
    return blowdown_impl(d, comp);
}
FramedLinkDiagram rolfsen_twist(const FramedLinkDiagram& d, const std::string& comp, int twists) {
    return rolfsen_impl(d, comp, twists);
}
FramedLinkDiagram band_slide(const FramedLinkDiagram& d, const std::string& comp,
                             const std::string& over, const std::vector<std::string>& band,
                             int sign) {
    return band_slide_impl(d, comp, over, band, sign, nullptr);
}

}  // namespace corkcalc
