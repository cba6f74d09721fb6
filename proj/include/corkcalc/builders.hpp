#pragma once

#include "corkcalc/diagram.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace corkcalc {

// Mutable companion of FramedLinkDiagram. Components are cyclic lists of
// crossing visits; arc numbers exist only in the immutable form and are
// assigned on conversion, so local edits never renumber anything by hand.
//
// Gap convention: a strand with visits v_0..v_{m-1} has m gaps; gap j sits
// between v_{j-1} and v_j (cyclically), and corresponds to the arc that
// enters v_j. position_of_arc turns a diagram arc into (strand, gap).
struct EditableDiagram {
    struct Visit {
        int crossing = -1;
        bool over = false;
    };
    struct Strand {
        std::string id;
        std::string label;
        SurgeryCoefficient coeff = SurgeryCoefficient::ornament();
        std::vector<Visit> visits;  // empty = crossingless loop
    };

    std::vector<Strand> strands;
    std::vector<std::string> crossing_ids;
    std::vector<int> signs;  // parallel to crossing_ids, each ±1

    static EditableDiagram from_diagram(const FramedLinkDiagram& d);
    FramedLinkDiagram to_diagram() const;  // canonical and validated

    int add_crossing(int sign);  // fresh id
    int add_crossing(int sign, const std::string& id);
    int strand_index(const std::string& id_or_label) const;
    int crossing_index(const std::string& id) const;
    std::pair<int, int> position_of_arc(const FramedLinkDiagram& d, Arc a) const;

    void insert_visits(int strand, int gap, const std::vector<Visit>& vs);
    void remove_crossing(int crossing);           // drops every visit to it
    void remove_strand_with_crossings(int strand);

    std::string fresh_crossing_id() const;
    std::string fresh_strand_id(const std::string& stem) const;
};

struct ComponentSpec {
    std::string id;
    std::string label;  // empty = same as id
    SurgeryCoefficient coeff = SurgeryCoefficient::ornament();
};

// Assembles a diagram from an explicit planar layout: crossings have four
// ports in counterclockwise order, opposite ports belong to the same strand,
// and edges plug ports together.  Orientations are chosen per component
// (anchors below), and the PD quadruple of each crossing is read off from
// which under-strand port the traversal enters.
struct PlanarTangleBuilder {
    struct Port {
        int crossing = -1;
        int dir = 0;  // 0..3 counterclockwise
    };

    int add_crossing(bool over02);  // true: ports (0,2) carry the over strand
    void connect(Port a, Port b);
    // The component through `at` gets this spec; oriented so the strand
    // leaves (outgoing) or enters the crossing at that port.
    void anchor(Port at, const ComponentSpec& spec, bool outgoing = true);
    void add_loop(const ComponentSpec& spec);

    FramedLinkDiagram build() const;

  private:
    struct CrossingRec {
        bool over02 = false;
    };
    std::vector<CrossingRec> crossings_;
    std::vector<std::pair<Port, Port>> edges_;
    std::vector<std::tuple<Port, ComponentSpec, bool>> anchors_;
    std::vector<ComponentSpec> loops_;
};

// Closure of a braid word on n strands; letters are ±i for σ_i^{±1},
// 1 ≤ i ≤ n−1.  Component specs are applied in order of each component's
// smallest strand position; untouched strands close into crossingless loops.
FramedLinkDiagram braid_closure(int n, const std::vector<int>& word,
                                const std::vector<ComponentSpec>& specs);

// Plat closure on an even number of strands: positions (0,1), (2,3), ...
// are capped at top and bottom.  Specs are applied in discovery order.
FramedLinkDiagram plat_closure(int n, const std::vector<int>& word,
                               const std::vector<ComponentSpec>& specs);

// Double twist knot κ(r, s): two twist boxes of 2|r| and 2|s| crossings in
// the standard genus-one template, pinned so the Seifert matrix is
// [[r, 1], [0, s]] and hence Δ ≐ rs·t − (2rs−1) + rs·t⁻¹.  κ(0,·) and
// κ(·,0) are the crossingless unknot.  The clasp family is κ(k, −1).
FramedLinkDiagram twist_knot(int r, int s, const ComponentSpec& spec);
FramedLinkDiagram twist_knot(int r, int s);

FramedLinkDiagram unknot_loop(const ComponentSpec& spec);

// Inserts a small circle encircling the strand at the given gap: two new
// crossings of equal sign (so the new circle links the strand by ±1).
// Returns the new strand's index.
int add_meridian(EditableDiagram& e, int strand, int gap, int sign,
                 const ComponentSpec& spec);

// The named component alone, with every crossing involving other components
// deleted (self-crossings survive).
FramedLinkDiagram component_subdiagram(const FramedLinkDiagram& d, const std::string& component);

// Random diagrams for the property suites (braid closures, so every sample
// is planar by construction).
FramedLinkDiagram random_link(std::mt19937& rng);
FramedLinkDiagram random_knot(std::mt19937& rng);  // single component
SurgeryCoefficient random_coefficient(std::mt19937& rng);

}  // namespace corkcalc
