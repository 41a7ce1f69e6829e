#ifndef LPA_IO_HPP_
#define LPA_IO_HPP_

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "lpa/classify.hpp"
#include "lpa/monoid.hpp"
#include "lpa/reduction.hpp"

namespace lpa::io {

using nlohmann::json;

// Malformed document: JSON syntax, missing fields, wrong shapes. Content
// that parses but fails semantic checks (dangling arrows, hash mismatch,
// bad scalars) throws std::invalid_argument instead.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kSchemaVersion = 1;

// FNV-1a 64 over the canonical vertex and arrow listing, as 16 hex digits.
// Representation and invariant documents carry it in their "graph" field so
// commands can detect a mismatched graph file.
std::string graph_hash(const Digraph& g);

// {"schema":1,"type":"digraph","vertices":[...],"arrows":[{"id","src","tgt"}]}
json digraph_to_json(const Digraph& g);
// Strict parses through the public validator, which rejects '*' in ids;
// permissive accepts spliced ids and is used for graphs inside traces.
Digraph digraph_from_json(const json& j, bool permissive = false);

// "Q" or {"GF": p}
json field_to_json(const Field& f);
Field field_from_json(const json& j);

// Prime-field scalars serialize as integers in [0, p); rationals as an
// integer when integral and small enough for JSON, else "a/b" (or "a") in
// lowest terms with positive denominator.
json scalar_to_json(const Field& f, const Scalar& s);
Scalar scalar_from_json(const Field& f, const json& j);

// Row-major nested arrays; a matrix with zero rows is [].
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Field& f, std::size_t rows, std::size_t cols, const json& j);

// {"schema","type":"quiver_rep","graph":hash,"field","dims","arrows"}
json rep_to_json(const QuiverRep& r);
QuiverRep rep_from_json(const Digraph& g, const json& j);

// {"schema","type":"module_invariants","graph":hash,"field","sinks","cycles"}
json invariants_to_json(const ModuleInvariants& inv);
ModuleInvariants invariants_from_json(const Digraph& g, const json& j);

// {"schema","type":"reduction_trace","initial","steps","final"}; parsing
// replays the steps and demands they reproduce the recorded final graph.
json trace_to_json(const ReductionTrace& t);
ReductionTrace trace_from_json(const json& j);

// {"schema","type":"dimension_function","graph":hash,"values":{v:int|dec-string}}
json dimension_function_to_json(const Digraph& g, const DimensionFunction& d);
DimensionFunction dimension_function_from_json(const Digraph& g, const json& j);

// Throws ParseError on unreadable files or invalid JSON.
json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

}  // namespace lpa::io

#endif  // LPA_IO_HPP_
