#pragma once

#include "corkcalc/coefficient.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace corkcalc {

using Arc = int;

/* Quadruple of arc ids counterclockwise from the incoming under-strand:
 * slots[0] = under-in, slots[2] = under-out; slots[1] and slots[3] carry the
 * over strand, whose direction is recovered from the component arc numbering
 * (arcs are consecutive along each oriented component).  A crossing is
 * positive exactly when the over strand enters at slot 3. */
struct Crossing {
    std::string id;
    std::array<Arc, 4> slots{};
    bool operator==(const Crossing&) const = default;
};

struct Component {
    std::string id;
    std::string label;  // unique; defaults to id
    SurgeryCoefficient coeff = SurgeryCoefficient::ornament();
    std::vector<Arc> arcs;  // traversal order; canonical form is an increasing run; empty = crossingless loop
    bool operator==(const Component&) const = default;
    bool is_loop() const { return arcs.empty(); }
};

/* Arrival of a traveler into `slot` of crossing index `crossing`.  Faces are
 * cycles of darts under the rule "arrive into slot s, leave through slot
 * s+1 (mod 4)", which keeps the face on the traveler's left. */
struct Dart {
    std::size_t crossing = 0;
    int slot = 0;
    bool operator==(const Dart&) const = default;
    auto operator<=>(const Dart&) const = default;
};

struct DiagramFace {
    std::string id;           // "F0", "F1", ... in deterministic order
    std::vector<Dart> darts;  // empty for the two faces of a crossingless loop
    std::size_t loop = static_cast<std::size_t>(-1);  // component index for loop faces
    std::vector<Arc> walls;   // boundary arcs in cycle order (may repeat)
    bool is_loop_face() const { return loop != static_cast<std::size_t>(-1); }
};

class FramedLinkDiagram {
public:
    std::vector<Crossing> crossings;    // canonical form: sorted by id
    std::vector<Component> components;  // canonical form: sorted by label

    bool operator==(const FramedLinkDiagram&) const = default;

    /* empty iff every structural invariant holds; each entry names the
     * violated invariant and the offending site */
    std::vector<std::string> validate() const;
    void require_valid() const;  // Error("ValidationError")

    /* lookup by component id, falling back to label */
    std::size_t component_index(const std::string& ref) const;
    bool has_component(const std::string& ref) const;
    std::size_t crossing_index(const std::string& id) const;

    std::size_t arc_component(Arc a) const;
    Arc next_arc(Arc a) const;
    Arc prev_arc(Arc a) const;

    int over_in_slot(std::size_t ci) const;   // 1 or 3
    int crossing_sign(std::size_t ci) const;  // +1 iff over enters at slot 3

    /* Face cycles of the 4-valent planar projection; crossingless loops
     * contribute two faces each.  Checks V - E + F = 2 on every connected
     * piece and throws Error("NonPlanar") otherwise. */
    std::vector<DiagramFace> faces() const;

    struct GaussEntry {
        std::string crossing;
        bool over;
        int sign;
        bool operator==(const GaussEntry&) const = default;
    };
    std::vector<GaussEntry> gauss_code(const std::string& component) const;

    /* over/under swapped at every crossing (quadruples rotated so the old
     * over-in arc sits at slot 0); coefficients untouched */
    FramedLinkDiagram mirrored() const;
    FramedLinkDiagram reversed(const std::string& component) const;

    /* components sorted by label, arcs renumbered 1..E in component order,
     * crossings sorted by id.  parse ∘ serialize is the identity exactly on
     * canonical diagrams, and every operation here returns canonical ones. */
    FramedLinkDiagram canonicalized() const;
};

FramedLinkDiagram split_union(const FramedLinkDiagram& a, const FramedLinkDiagram& b,
                              bool relabel = true);

/* Recover oriented component arc cycles from crossing data alone.  Each cycle
 * starts at its smallest arc and runs in traversal order; cycles are sorted
 * by smallest arc.  On failure records human-readable violations and returns
 * what could be derived (empty on hard failure). */
std::vector<std::vector<Arc>> derive_arc_cycles(const std::vector<Crossing>& crossings,
                                                std::vector<std::string>* violations);

}  // namespace corkcalc
