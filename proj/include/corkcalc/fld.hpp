#pragma once

#include "corkcalc/diagram.hpp"

#include <cstdint>
#include <string>

namespace corkcalc {

/* FLD text format (line oriented, '#' comments):
 *   crossing ID ARC ARC ARC ARC
 *   loop COMPID
 *   component COMPID [label STRING]
 *   framing COMPID COEFF
 * COEFF = SIGNED_INT | SIGNED_INT/POS_INT | inf | unfilled | none.
 * Components never given a framing line are ornaments.  Arc-bearing
 * components are matched to the crossing data by order: the n-th COMPID
 * mentioned in component/framing lines owns the arc cycle with the n-th
 * smallest starting arc.  parse returns a canonical, validated diagram. */
FramedLinkDiagram parse_fld(const std::string& text);

std::string serialize_fld(const FramedLinkDiagram& d);

std::uint64_t fnv1a64(const std::string& bytes);

/* FNV-1a of the canonical serialization, as fixed-width hex */
std::string diagram_hash(const FramedLinkDiagram& d);

}  // namespace corkcalc
