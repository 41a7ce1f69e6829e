#ifndef LPA_QUIVERREP_HPP_
#define LPA_QUIVERREP_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpa/digraph.hpp"
#include "lpa/matrix.hpp"
#include "lpa/monoid.hpp"

namespace lpa {

// Representation of a digraph over an exact field: a space dimension per
// vertex and a matrix per arrow, A_e of shape dims(s(e)) x dims(t(e)).
// Row-vector convention throughout: a path e1...en acts on the left space
// by the product A_{e1} * ... * A_{en}.
class QuiverRep {
 public:
  // Validates totality (dims and matrices cover exactly the vertices and
  // arrows) and every matrix's field and shape; throws std::invalid_argument
  // with the full violation list.
  QuiverRep(Digraph graph, Field field, std::map<std::string, std::size_t> dims,
            std::map<std::string, Matrix> arrow_matrices);

  static QuiverRep zero(const Digraph& g, const Field& f);

  const Digraph& graph() const { return graph_; }
  const Field& field() const { return field_; }
  const std::map<std::string, std::size_t>& dims() const { return dims_; }
  std::size_t dim(const std::string& v) const;
  const std::map<std::string, Matrix>& arrow_matrices() const { return arrows_; }
  const Matrix& arrow_matrix(const std::string& id) const;
  std::size_t total_dimension() const;

  // The matrix the path acts by; the identity for an empty path.
  Matrix path_action(const Path& p) const;

  friend bool operator==(const QuiverRep&, const QuiverRep&) = default;

 private:
  Digraph graph_;
  Field field_;
  std::map<std::string, std::size_t> dims_;
  std::map<std::string, Matrix> arrows_;
};

struct ConditionIResult {
  bool ok;
  // Set when !ok: the first non-sink (in vertex order) whose combined
  // out-arrow block [A_e]_{s(e)=v} is not square invertible.
  std::string vertex;
  std::size_t rows = 0, cols = 0, rank = 0;
  std::string describe() const;
};

// Condition (I): at every non-sink v the horizontal concatenation of the
// out-arrow matrices (arrows sorted by id) is square and invertible.
ConditionIResult check_condition_I(const QuiverRep& r);

// Induced subgraph on the vertices of nonzero dimension.
Digraph support_subgraph(const QuiverRep& r);

// Restriction to an induced subgraph containing the support.
QuiverRep restrict_to(const QuiverRep& r, const Digraph& sub);

// v -> dims(v); throws std::invalid_argument when condition (I) fails.
DimensionFunction dimension_function_of(const QuiverRep& r);

// Dims add, arrow matrices stack block-diagonally in list order. All
// summands must share the graph and field; the list must be nonempty.
QuiverRep direct_sum(const std::vector<QuiverRep>& rs);

// Vertex-indexed linear maps phi(v): dims_src(v) x dims_tgt(v) between two
// representations of the same graph over the same field. Shapes are
// validated at construction; the intertwining law is check_morphism's job.
class RepMorphism {
 public:
  RepMorphism(QuiverRep source, QuiverRep target, std::map<std::string, Matrix> vertex_maps);

  static RepMorphism identity(const QuiverRep& r);
  static RepMorphism zero(const QuiverRep& source, const QuiverRep& target);

  const QuiverRep& source() const { return source_; }
  const QuiverRep& target() const { return target_; }
  const std::map<std::string, Matrix>& vertex_maps() const { return maps_; }
  const Matrix& at(const std::string& v) const;

  // Vertexwise this(v) * then(v); this: A -> B composed with then: B -> C.
  RepMorphism composed(const RepMorphism& then) const;

  friend bool operator==(const RepMorphism&, const RepMorphism&) = default;

 private:
  QuiverRep source_, target_;
  std::map<std::string, Matrix> maps_;
};

struct MorphismCheck {
  bool ok;
  std::vector<std::string> violations;  // one per arrow breaking intertwining
};

// Intertwining law arrow by arrow: phi(s(e)) * B_e = A_e * phi(t(e)).
MorphismCheck check_morphism(const RepMorphism& m);

// Intertwines and every vertex map is square invertible.
bool is_isomorphism(const RepMorphism& m);

struct NoExitCheck {
  bool ok;
  std::optional<Cycle> cycle;      // a support cycle with an exit, if any
  std::string exit_arrow;
};

// Cycles of the support subgraph of a condition-(I) representation have no
// exits; a counterexample signals an invalid rep or a bug.
NoExitCheck no_exit_support_check(const QuiverRep& r);

}  // namespace lpa

#endif  // LPA_QUIVERREP_HPP_
