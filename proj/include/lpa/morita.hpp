#ifndef LPA_MORITA_HPP_
#define LPA_MORITA_HPP_

#include "lpa/quiverrep.hpp"
#include "lpa/reduction.hpp"

namespace lpa {

// Transport of representations and morphisms across reduction steps: an
// explicit equivalence between the condition-(I) representations of a graph
// and of its reductions. All inputs must satisfy condition (I)
// (std::invalid_argument otherwise); a transported output failing it would
// falsify the equivalence and throws std::logic_error.

// Surviving arrows keep their matrices; a spliced arrow f*g acts by
// A_f * A_g. The result lives on apply_step(r.graph(), step).
QuiverRep forward(const QuiverRep& r, const ReductionStep& step);

// Inverse direction. The eliminated vertex v gets the sum of its out-arrow
// target spaces (arrows g sorted by id); an arrow f into v becomes the
// horizontal concatenation of the spliced matrices (A_{f*g})_g; an arrow h
// out of v becomes the coordinate projection onto its summand. The pre-step
// graph must be supplied (steps store ids only) and must replay onto
// r.graph().
QuiverRep backward(const QuiverRep& r, const ReductionStep& step, const Digraph& pre);

// Morphism transport: forward restricts the vertex maps to the surviving
// vertices; backward fills the eliminated vertex with the block-diagonal
// of the maps at the out-arrow targets.
RepMorphism forward(const RepMorphism& m, const ReductionStep& step);
RepMorphism backward(const RepMorphism& m, const ReductionStep& step, const Digraph& pre);

// The natural isomorphism theta: r -> backward(forward(r)): identity at
// every surviving vertex; at the eliminated vertex, the horizontal block
// (A_e) over its out-arrows. (The opposite composite needs no iso at all:
// forward(backward(s)) == s bit-exactly.)
RepMorphism canonical_iso(const QuiverRep& r, const ReductionStep& step);

enum class TransportDirection { forward, backward };

// Step-wise composition along a whole trace. Forward transport starts on
// trace.initial, backward on trace.final; anchoring elsewhere is an error.
QuiverRep transport(const QuiverRep& r, const ReductionTrace& trace, TransportDirection dir);
RepMorphism transport(const RepMorphism& m, const ReductionTrace& trace, TransportDirection dir);

}  // namespace lpa

#endif  // LPA_MORITA_HPP_
