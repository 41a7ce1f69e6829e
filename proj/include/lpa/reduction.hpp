#ifndef LPA_REDUCTION_HPP_
#define LPA_REDUCTION_HPP_

#include <map>
#include <string>
#include <vector>

#include "lpa/digraph.hpp"

namespace lpa {

// Constituents of a spliced arrow: f runs into the eliminated vertex,
// g runs out of it. The new arrow goes s(f) -> t(g) with id "f*g".
struct NewArrowOrigin {
  std::string in_arrow, out_arrow;
  friend bool operator==(const NewArrowOrigin&, const NewArrowOrigin&) = default;
};

// One elimination of a loopless nonsink. Arrow endpoints are not stored:
// every consumer holds the pre-step graph, which resolves them.
struct ReductionStep {
  std::string eliminated;
  std::map<std::string, NewArrowOrigin> new_arrows;  // new arrow id -> (f, g)
  std::vector<std::string> removed;                  // all arrows at the vertex, sorted
  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

struct ReductionTrace {
  Digraph initial;
  std::vector<ReductionStep> steps;
  Digraph final;

  // initial, then the graph after each step; back() replays to final.
  std::vector<Digraph> snapshots() const;

  friend bool operator==(const ReductionTrace&, const ReductionTrace&) = default;
};

// Every vertex is a sink or has a loop.
bool is_reduced(const Digraph& g);

// True when reduce_at accepts v: present, not a sink, loopless.
bool is_reducible_at(const Digraph& g, const std::string& v);

// Eliminate v, splicing each in/out arrow pair (f, g) at v into a new
// arrow s(f) -> t(g). Sources eliminate without new arrows. Throws
// std::invalid_argument if v is missing, a sink, or has a loop.
std::pair<Digraph, ReductionStep> reduce_at(const Digraph& g, const std::string& v);

// Replay a recorded step against the graph it was recorded on; throws
// std::invalid_argument when the step does not match g.
Digraph apply_step(const Digraph& g, const ReductionStep& step);

// Eliminate until reduced. The caller-supplied order is consumed first
// (each entry must be eliminable at its turn, else std::invalid_argument
// naming the vertex); afterwards, and by default, the lexicographically
// smallest eliminable vertex is chosen until none remains.
ReductionTrace complete_reduction(const Digraph& g, const std::vector<std::string>& order = {});

// The arrow id sequence of the original graph an arrow's label decodes to;
// ids never created by the trace expand to themselves.
std::vector<std::string> expand_arrow(const ReductionTrace& trace, const std::string& arrow_id);

// The bijections a complete reduction realizes: isolated vertices of the
// final graph are exactly the maximal sinks of the initial graph, and the
// loops at pseudo-sources of the final graph expand to exactly the maximal
// cycles of the initial graph.
struct ReductionCorrespondence {
  std::map<std::string, std::string> sinks;  // isolated final vertex -> initial maximal sink
  std::map<std::string, Cycle> cycles;       // pseudo-source final vertex -> initial maximal cycle
  friend bool operator==(const ReductionCorrespondence&, const ReductionCorrespondence&) = default;
};

// Requires a trace whose final graph is reduced (std::invalid_argument
// otherwise). A mismatch with the initial graph's maximal sinks/cycles is a
// bug, reported as std::logic_error.
ReductionCorrespondence reduction_correspondence(const ReductionTrace& trace);

}  // namespace lpa

#endif  // LPA_REDUCTION_HPP_
