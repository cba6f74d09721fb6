#pragma once

#include "corkcalc/builders.hpp"
#include "corkcalc/diagram.hpp"
#include "corkcalc/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace corkcalc {

// One local rewrite.  Site references (arcs, crossing ids, face ids,
// component ids) are resolved against the diagram the step is applied to;
// face ids are the ones faces() reports on that diagram.
struct MoveStep {
    enum class Kind {
        R1Add,
        R1Remove,
        R2Add,
        R2Remove,
        R3,
        SlamDunk,
        HopfCancel,
        Blowdown,
        Blowup,
        RolfsenTwist,
        BandSlide,
        EraseInfinity,
        MirrorAll,
        NegateCoefficients,
    };

    Kind kind = Kind::MirrorAll;
    Arc arc = 0;                         // r1+
    char side = 'L';                     // r1+: which side of the strand the kink hangs
    int sign = 1;                        // r1+ kink sign, blowup framing, slide direction
    std::vector<std::string> crossings;  // r1-, r2-, r3
    std::vector<Arc> arcs;               // r2+ (exactly two), blowup encircled arcs
    std::string face;                    // r2+, blowup
    std::string a, b;                    // slam m/target, cancel pair, slide comp/over,
                                         // blowdown/rolfsen/erase component
    int twists = 0;                      // rolfsen
    std::vector<std::string> band;       // slide: face path

    static MoveStep r1_add(Arc arc, char side, int sign);
    static MoveStep r1_remove(const std::string& crossing);
    static MoveStep r2_add(Arc over, Arc under, const std::string& face);
    static MoveStep r2_remove(const std::string& x, const std::string& y);
    static MoveStep r3(const std::string& x, const std::string& y, const std::string& z);
    static MoveStep slam_dunk(const std::string& meridian, const std::string& target);
    static MoveStep hopf_cancel(const std::string& c1, const std::string& c2);
    static MoveStep blowdown(const std::string& comp);
    static MoveStep blowup(const std::string& face, int sign, const std::vector<Arc>& arcs);
    static MoveStep rolfsen_twist(const std::string& comp, int twists);
    static MoveStep band_slide(const std::string& comp, const std::string& over,
                               const std::vector<std::string>& band, int sign);
    static MoveStep erase_infinity(const std::string& comp);
    static MoveStep mirror_all();
    static MoveStep negate_coefficients();

    // The script-format line for this step (see docs/formats.md).
    std::string to_line() const;
};

// What a step must not change (or change predictably): counted components
// and the homology of the surgered manifold.
struct InvariantSnapshot {
    std::size_t components = 0;
    std::size_t ornaments = 0;
    AbelianGroupInvariants h1;
    bool operator==(const InvariantSnapshot&) const = default;
};
InvariantSnapshot invariant_snapshot(const FramedLinkDiagram& d);

struct TraceEntry {
    std::string step;  // script-format line
    std::string pre_hash, post_hash;
    InvariantSnapshot pre, post;
    // Band slides on integer-framed components: the unimodular change of
    // basis E with E^T L E = L' on the framed linking matrix.
    std::optional<IntegerMatrix> congruence;
};

struct MoveTrace {
    std::vector<TraceEntry> entries;
    // each post hash equals the next pre hash
    bool chain_contiguous() const;
};

/* Dispatcher.  Returns the rewritten diagram (canonical, valid); throws
 * Error with the per-move codes on pattern or precondition failure. */
FramedLinkDiagram apply(const FramedLinkDiagram& d, const MoveStep& step);
FramedLinkDiagram apply(const FramedLinkDiagram& d, const MoveStep& step,
                        TraceEntry& entry);

struct ScriptOutcome {
    FramedLinkDiagram diagram;  // final (or last good on failure)
    MoveTrace trace;            // completed steps only
    bool ok = true;
    std::size_t failed_step = 0;  // 0-based index of the failing step
    std::string error;            // "<code>: <message>"
};

/* Runs the steps in order; aborts at the first failure, keeping the partial
 * trace.  Never throws for move failures (only for invalid input diagrams). */
ScriptOutcome apply_script(const FramedLinkDiagram& d, const std::vector<MoveStep>& steps);

/* The individual surgery moves, usable directly. */
FramedLinkDiagram slam_dunk(const FramedLinkDiagram& d, const std::string& meridian,
                            const std::string& target);
FramedLinkDiagram hopf_cancel(const FramedLinkDiagram& d, const std::string& c1,
                              const std::string& c2);
FramedLinkDiagram blowdown(const FramedLinkDiagram& d, const std::string& comp);
FramedLinkDiagram rolfsen_twist(const FramedLinkDiagram& d, const std::string& comp, int twists);
FramedLinkDiagram band_slide(const FramedLinkDiagram& d, const std::string& comp,
                             const std::string& over, const std::vector<std::string>& band,
                             int sign);

}  // namespace corkcalc
