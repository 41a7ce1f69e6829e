#ifndef LPA_DIGRAPH_HPP_
#define LPA_DIGRAPH_HPP_

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lpa {

struct Arrow {
  std::string id, source, target;
  friend bool operator==(const Arrow&, const Arrow&) = default;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

// Finite directed multigraph. Vertex and arrow ids are opaque strings;
// parallel arrows are distinct arrows with distinct ids. All accessors
// return deterministically ordered data (ids sorted lexicographically).
class Digraph {
 public:
  Digraph() = default;

  // Every violation in the raw data, e.g. "duplicate vertex id v",
  // "dangling endpoint z1". Empty means the parts form a valid digraph.
  // '*' is reserved for machine-generated composite arrow ids, so ids
  // containing it are rejected here (programmatic add_* still accepts them).
  static std::vector<std::string> validate_parts(const std::vector<std::string>& vertices,
                                                 const std::vector<Arrow>& arrows);
  // Throws std::invalid_argument carrying the full violation report.
  static Digraph from_parts(const std::vector<std::string>& vertices,
                            const std::vector<Arrow>& arrows);

  void add_vertex(const std::string& id);
  void add_arrow(const std::string& id, const std::string& source, const std::string& target);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  bool has_vertex(const std::string& id) const;
  bool has_arrow(const std::string& id) const;
  const Arrow& arrow(const std::string& id) const;

  // Arrow ids with the given source/target, sorted.
  const std::vector<std::string>& out_arrows(const std::string& v) const;
  const std::vector<std::string>& in_arrows(const std::string& v) const;
  std::size_t out_degree(const std::string& v) const { return out_arrows(v).size(); }
  std::size_t in_degree(const std::string& v) const { return in_arrows(v).size(); }

  bool is_sink(const std::string& v) const { return out_degree(v) == 0; }
  bool is_source(const std::string& v) const { return in_degree(v) == 0; }
  bool is_isolated(const std::string& v) const { return is_sink(v) && is_source(v); }
  std::size_t loops_at(const std::string& v) const;
  bool has_loop_at(const std::string& v) const { return loops_at(v) > 0; }
  // The only incoming arrow is a single loop.
  bool is_pseudo_source(const std::string& v) const;

  std::vector<std::string> sinks() const;

  Digraph induced_subgraph(const std::set<std::string>& keep) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  void require_vertex(const std::string& id) const;

  std::vector<std::string> vertices_;  // sorted
  std::vector<Arrow> arrows_;          // sorted by id
  std::map<std::string, std::vector<std::string>> out_, in_;
  std::map<std::string, std::size_t> arrow_index_;
};

// Directed path: a composable arrow sequence, or the empty path at an
// anchor vertex. Detached from the digraph after validation.
class Path {
 public:
  Path(const Digraph& g, const std::string& anchor);
  Path(const Digraph& g, const std::vector<std::string>& arrow_ids);

  const std::vector<std::string>& arrows() const { return arrows_; }
  std::size_t length() const { return arrows_.size(); }
  const std::string& source() const { return source_; }
  const std::string& target() const { return target_; }

  // The path e followed by this one; s(e) becomes the new source.
  Path prepended(const Digraph& g, const std::string& arrow_id) const;

  // Length first, then lexicographic on the arrow id sequence.
  std::strong_ordering operator<=>(const Path& rhs) const;
  bool operator==(const Path& rhs) const = default;

 private:
  Path() = default;
  std::vector<std::string> arrows_;
  std::string source_, target_;
};

// Vertex-simple closed path, stored in canonical rotation: the first arrow
// leaves the lexicographically smallest vertex on the cycle.
class Cycle {
 public:
  Cycle(const Digraph& g, const std::vector<std::string>& arrow_ids);

  const std::vector<std::string>& arrows() const { return arrows_; }
  // vertices()[i] is the source of arrows()[i]; vertices()[0] is the base.
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::string& base() const { return vertices_[0]; }
  std::size_t length() const { return arrows_.size(); }
  bool contains_vertex(const std::string& v) const;
  bool contains_arrow(const std::string& a) const;
  // The unique cycle arrow with source base().
  const std::string& arrow_leaving_base() const { return arrows_[0]; }

  std::strong_ordering operator<=>(const Cycle& rhs) const;
  bool operator==(const Cycle& rhs) const = default;

 private:
  std::vector<std::string> arrows_;
  std::vector<std::string> vertices_;
};

struct VertexKind {
  enum class Category { isolated, sink, source, plain };
  Category category;
  bool pseudo_source;
  friend bool operator==(const VertexKind&, const VertexKind&) = default;
};

std::map<std::string, VertexKind> vertex_kinds(const Digraph& g);

// All cycles, canonical rotations, sorted lexicographically by arrow
// sequence. Parallel arrows give distinct cycles.
std::vector<Cycle> simple_cycles(const Digraph& g);

// Arrows starting on c but not belonging to it, sorted by id.
std::vector<std::string> cycle_exits(const Digraph& g, const Cycle& c);

struct MaximalElements {
  std::vector<std::string> sinks;  // sinks no cycle connects to
  std::vector<Cycle> cycles;       // cycles no other cycle connects to
};

MaximalElements maximal_sinks_and_cycles(const Digraph& g);

// Path of length >= 0 exists from `from` to `to`.
bool connects_to(const Digraph& g, const std::string& from, const std::string& to);

// Induced subgraph on every vertex with a path to the target.
Digraph predecessors_subgraph(const Digraph& g, const std::string& target);
Digraph predecessors_subgraph(const Digraph& g, const Cycle& target);

// Smallest superset of seed that is hereditary (arrow sources pull in
// targets) and saturated (a non-sink all of whose out-targets are in pulls
// itself in). Sorted.
std::vector<std::string> hereditary_saturated_closure(const Digraph& g,
                                                      const std::set<std::string>& seed);

// Paths from every vertex to base, not traversing the full cycle c (when c
// is given, base must be its canonical base; the count for an on-cycle
// vertex is 1, its partial lap). counts[v] is absent for vertices with no
// such path. Vertices listed in divergent have infinitely many; asking for
// their count is an error.
struct PathCountResult {
  std::map<std::string, mpz_class> counts;
  std::set<std::string> divergent;
};
PathCountResult count_paths_to_base(const Digraph& g, const std::string& base, const Cycle* c);

// The single-pair count; throws std::domain_error when the count diverges
// (a cycle other than c lies on a from->base path).
mpz_class count_paths_avoiding_cycle(const Digraph& g, const std::string& from,
                                     const std::string& base, const Cycle* c);

// Explicit path lists underlying count_paths_to_base: for each vertex with
// at least one path to base, the paths sorted by (length, arrow sequence).
// Throws std::domain_error if any reachable list is infinite.
std::map<std::string, std::vector<Path>> paths_to_base(const Digraph& g, const std::string& base,
                                                       const Cycle* c);

// Same enumeration with an explicit cut: paths may not traverse cut_arrow,
// which must leave base. Generalizes the cycle version to non-canonical
// base points on a cycle.
std::map<std::string, std::vector<Path>> paths_to_base_cut(const Digraph& g,
                                                           const std::string& base,
                                                           const std::string& cut_arrow);

}  // namespace lpa

#endif  // LPA_DIGRAPH_HPP_
