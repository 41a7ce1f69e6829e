// lpa: digraph reductions, dimension functions, and representation
// classification over exact fields, driven by JSON documents.
//
// Exit codes: 0 success (isomorphic: same), 1 validation error, 2 parse
// error, 3 isomorphic: different, 4 rational factoring degree cap exceeded.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lpa/classify.hpp"
#include "lpa/io.hpp"

namespace {

using lpa::io::json;

constexpr int kExitValidation = 1;
constexpr int kExitParse = 2;
constexpr int kExitDifferent = 3;
constexpr int kExitDegreeCap = 4;

std::string join(const std::vector<std::string>& xs, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

lpa::Digraph load_graph(const std::string& path) {
  return lpa::io::digraph_from_json(lpa::io::load_json_file(path));
}

void emit(const json& j, const std::optional<std::string>& out_path) {
  if (out_path) {
    lpa::io::save_json_file(*out_path, j);
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

std::string describe_graph(const lpa::Digraph& g) {
  std::ostringstream os;
  os << "vertices (" << g.vertices().size() << "): " << join(g.vertices()) << "\n";
  os << "arrows (" << g.arrows().size() << "):\n";
  for (const lpa::Arrow& a : g.arrows())
    os << "  " << a.id << ": " << a.source << " -> " << a.target << "\n";
  return os.str();
}

lpa::Field parse_field_flag(const std::string& s) {
  if (s == "Q") return lpa::Field::rationals();
  unsigned long p = 0;
  if ((sscanf(s.c_str(), "GF(%lu)", &p) == 1 || sscanf(s.c_str(), "GF:%lu", &p) == 1) &&
      p > 0 && p < (1ul << 31))
    return lpa::Field::prime(static_cast<std::uint32_t>(p));
  throw lpa::io::ParseError("--field must be Q, GF(p), or GF:p");
}

json profile_to_json(const lpa::ExistenceProfile& p) {
  json j{{"has_nonzero_fd_module", p.has_nonzero_fd_module},
         {"finite_representation_type", p.finite_representation_type},
         {"l_gamma_finite_dimensional", p.l_gamma_finite_dimensional}};
  if (p.matrix_summand_count) j["matrix_summand_count"] = *p.matrix_summand_count;
  return j;
}

int cmd_info(const std::string& graph_path, bool as_json) {
  lpa::Digraph g = load_graph(graph_path);
  std::vector<std::string> sources, pseudo_sources;
  for (const std::string& v : g.vertices()) {
    if (g.is_source(v)) sources.push_back(v);
    if (g.is_pseudo_source(v)) pseudo_sources.push_back(v);
  }
  std::vector<lpa::Cycle> cycles = lpa::simple_cycles(g);
  bool disjoint = true;
  for (std::size_t i = 0; i < cycles.size() && disjoint; ++i)
    for (std::size_t k = i + 1; k < cycles.size() && disjoint; ++k)
      for (const std::string& v : cycles[i].vertices())
        if (cycles[k].contains_vertex(v)) {
          disjoint = false;
          break;
        }
  lpa::MaximalElements mx = lpa::maximal_sinks_and_cycles(g);
  lpa::ExistenceProfile profile = lpa::existence_profile(g);

  if (as_json) {
    json jc = json::array();
    for (const lpa::Cycle& c : cycles)
      jc.push_back({{"arrows", c.arrows()}, {"exits", lpa::cycle_exits(g, c)}});
    json jmx = json::array();
    for (const lpa::Cycle& c : mx.cycles) jmx.push_back(c.arrows());
    emit(json{{"graph", lpa::io::graph_hash(g)},
              {"vertices", g.vertices()},
              {"sinks", g.sinks()},
              {"sources", sources},
              {"pseudo_sources", pseudo_sources},
              {"cycles", jc},
              {"maximal_sinks", mx.sinks},
              {"maximal_cycles", jmx},
              {"cycles_pairwise_disjoint", disjoint},
              {"existence_profile", profile_to_json(profile)}},
         std::nullopt);
    return 0;
  }
  std::cout << describe_graph(g);
  std::cout << "sinks: " << join(g.sinks()) << "\n";
  std::cout << "sources: " << join(sources) << "\n";
  std::cout << "pseudo-sources: " << join(pseudo_sources) << "\n";
  std::cout << "cycles (" << cycles.size() << "):\n";
  for (const lpa::Cycle& c : cycles)
    std::cout << "  (" << join(c.arrows()) << ") exits: " << join(lpa::cycle_exits(g, c)) << "\n";
  std::cout << "maximal sinks: " << join(mx.sinks) << "\n";
  std::cout << "maximal cycles:";
  for (const lpa::Cycle& c : mx.cycles) std::cout << " (" << join(c.arrows()) << ")";
  std::cout << "\n";
  std::cout << "cycles pairwise disjoint: " << (disjoint ? "yes" : "no") << "\n";
  std::cout << "nonzero finite-dimensional module exists: "
            << (profile.has_nonzero_fd_module ? "yes" : "no") << "\n";
  std::cout << "finite representation type: "
            << (profile.finite_representation_type ? "yes" : "no") << "\n";
  std::cout << "path algebra finite dimensional: "
            << (profile.l_gamma_finite_dimensional ? "yes" : "no");
  if (profile.matrix_summand_count)
    std::cout << " (" << *profile.matrix_summand_count << " matrix summands)";
  std::cout << "\n";
  return 0;
}

int cmd_reduce(const std::string& graph_path, const std::vector<std::string>& order,
               const std::optional<std::string>& trace_path, bool as_json) {
  lpa::Digraph g = load_graph(graph_path);
  lpa::ReductionTrace t = lpa::complete_reduction(g, order);
  if (trace_path) lpa::io::save_json_file(*trace_path, lpa::io::trace_to_json(t));
  if (as_json)
    emit(lpa::io::digraph_to_json(t.final), std::nullopt);
  else
    std::cout << "eliminated " << t.steps.size() << " vertices\n" << describe_graph(t.final);
  return 0;
}

json dimension_function_values(const lpa::DimensionFunction& d) {
  json values = json::object();
  for (const auto& [v, n] : d) values[v] = n.fits_slong_p() ? json(n.get_si()) : json(n.get_str());
  return values;
}

int cmd_dims(const std::string& graph_path, const std::optional<std::string>& check_path,
             const std::optional<std::string>& decompose_path, bool as_json) {
  lpa::Digraph g = load_graph(graph_path);

  auto load_dim_doc = [&g](const std::string& path) {
    json j = lpa::io::load_json_file(path);
    if (j.is_object() && j.contains("type") && j.at("type") == "quiver_rep") {
      lpa::QuiverRep r = lpa::io::rep_from_json(g, j);
      lpa::DimensionFunction d;
      for (const std::string& v : g.vertices()) d[v] = static_cast<long>(r.dim(v));
      return d;
    }
    return lpa::io::dimension_function_from_json(g, j);
  };

  if (check_path || decompose_path) {
    lpa::DimensionFunction d = load_dim_doc(check_path ? *check_path : *decompose_path);
    lpa::DimensionFunctionCheck check = lpa::is_dimension_function(g, d);
    if (!check.ok) {
      if (as_json)
        emit(json{{"is_dimension_function", false}, {"violations", check.violations}},
             std::nullopt);
      else
        std::cerr << "not a dimension function:\n  " << join(check.violations, "\n  ") << "\n";
      return kExitValidation;
    }
    if (check_path && !decompose_path) {
      if (as_json)
        emit(json{{"is_dimension_function", true}, {"violations", json::array()}}, std::nullopt);
      else
        std::cout << "dimension function: yes\n";
      return 0;
    }
    lpa::DimensionDecomposition dec = lpa::decompose_dimension_function(g, d);
    if (as_json) {
      json parts = json::array();
      for (std::size_t i = 0; i < dec.basis.size(); ++i) {
        const lpa::DimensionBasisElement& b = dec.basis[i];
        json p{{"coefficient", dec.coefficients[i].fits_slong_p()
                                   ? json(dec.coefficients[i].get_si())
                                   : json(dec.coefficients[i].get_str())}};
        if (b.cycle)
          p["cycle"] = b.cycle->arrows();
        else
          p["sink"] = b.anchor;
        parts.push_back(p);
      }
      emit(json{{"is_dimension_function", true}, {"decomposition", parts}}, std::nullopt);
    } else {
      for (std::size_t i = 0; i < dec.basis.size(); ++i) {
        const lpa::DimensionBasisElement& b = dec.basis[i];
        std::cout << (b.cycle ? "cycle (" + join(b.cycle->arrows()) + ")" : "sink " + b.anchor)
                  << ": " << dec.coefficients[i].get_str() << "\n";
      }
    }
    return 0;
  }

  std::vector<lpa::DimensionBasisElement> basis = lpa::dimension_basis(g);
  if (as_json) {
    json out = json::array();
    for (const lpa::DimensionBasisElement& b : basis) {
      json p{{"values", dimension_function_values(b.d)}};
      if (b.cycle)
        p["cycle"] = b.cycle->arrows();
      else
        p["sink"] = b.anchor;
      out.push_back(p);
    }
    emit(json{{"graph", lpa::io::graph_hash(g)}, {"basis", out}}, std::nullopt);
  } else {
    std::cout << "dimension function basis (" << basis.size() << " generators):\n";
    for (const lpa::DimensionBasisElement& b : basis) {
      std::cout << "  " << (b.cycle ? "cycle (" + join(b.cycle->arrows()) + ")" : "sink " + b.anchor)
                << ":";
      for (const auto& [v, n] : b.d)
        if (n != 0) std::cout << " " << v << "=" << n.get_str();
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_classify(const std::string& graph_path, const std::string& rep_path,
                 const std::optional<std::string>& out_path) {
  lpa::Digraph g = load_graph(graph_path);
  lpa::QuiverRep r = lpa::io::rep_from_json(g, lpa::io::load_json_file(rep_path));
  lpa::ModuleInvariants inv = lpa::classify(r);
  emit(lpa::io::invariants_to_json(inv), out_path);
  return 0;
}

int cmd_construct(const std::string& graph_path, const std::string& inv_path,
                  const std::optional<std::string>& field_flag,
                  const std::optional<std::string>& out_path) {
  lpa::Digraph g = load_graph(graph_path);
  lpa::ModuleInvariants inv = lpa::io::invariants_from_json(g, lpa::io::load_json_file(inv_path));
  if (field_flag) {
    lpa::Field f = parse_field_flag(*field_flag);
    std::vector<lpa::CycleSummand> cycles;
    for (const lpa::CycleSummand& c : inv.cycles) {
      std::vector<lpa::Scalar> coeffs;
      for (const lpa::Scalar& x : c.f.coeffs()) coeffs.push_back(f.reduce(x));
      cycles.push_back({c.cycle, lpa::Poly(f, coeffs), c.n, c.multiplicity});
    }
    inv.field = f;
    inv.cycles = std::move(cycles);
  }
  emit(lpa::io::rep_to_json(lpa::construct(g, inv)), out_path);
  return 0;
}

int cmd_isomorphic(const std::string& graph_path, const std::string& rep1_path,
                   const std::string& rep2_path, bool as_json) {
  lpa::Digraph g = load_graph(graph_path);
  lpa::QuiverRep r1 = lpa::io::rep_from_json(g, lpa::io::load_json_file(rep1_path));
  lpa::QuiverRep r2 = lpa::io::rep_from_json(g, lpa::io::load_json_file(rep2_path));
  bool same = lpa::is_isomorphic(r1, r2);
  if (as_json)
    emit(json{{"isomorphic", same}}, std::nullopt);
  else
    std::cout << (same ? "isomorphic" : "not isomorphic") << "\n";
  return same ? 0 : kExitDifferent;
}

int cmd_transport(const std::string& rep_path, const std::string& trace_path,
                  const std::string& direction, const std::optional<std::string>& out_path) {
  lpa::ReductionTrace t = lpa::io::trace_from_json(lpa::io::load_json_file(trace_path));
  lpa::TransportDirection dir;
  if (direction == "fwd")
    dir = lpa::TransportDirection::forward;
  else if (direction == "bwd")
    dir = lpa::TransportDirection::backward;
  else
    throw lpa::io::ParseError("--direction must be fwd or bwd");
  const lpa::Digraph& anchor = dir == lpa::TransportDirection::forward ? t.initial : t.final;
  lpa::QuiverRep r = lpa::io::rep_from_json(anchor, lpa::io::load_json_file(rep_path));
  emit(lpa::io::rep_to_json(lpa::transport(r, t, dir)), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leavitt path algebra representations: reduce digraphs, classify dimension\n"
               "functions, and classify/construct finite-dimensional representations."};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable JSON on stdout");

  std::string graph_path, rep_path, rep2_path, inv_path, trace_in, direction;
  std::optional<std::string> trace_out, out_path, check_path, decompose_path, field_flag;
  std::vector<std::string> order;

  CLI::App* info = app.add_subcommand("info", "graph predicates and existence report");
  info->add_option("graph", graph_path, "digraph document")->required();

  CLI::App* reduce = app.add_subcommand("reduce", "complete reduction");
  reduce->add_option("graph", graph_path, "digraph document")->required();
  reduce->add_option("--order", order, "vertices to eliminate first")->delimiter(',');
  reduce->add_option("--trace", trace_out, "write a replayable trace document");

  CLI::App* dims = app.add_subcommand("dims", "dimension function basis / membership");
  dims->add_option("graph", graph_path, "digraph document")->required();
  dims->add_option("--check", check_path, "representation or dimension function document");
  dims->add_option("--decompose", decompose_path, "dimension function document");

  CLI::App* classify = app.add_subcommand("classify", "invariants of a representation");
  classify->add_option("graph", graph_path, "digraph document")->required();
  classify->add_option("rep", rep_path, "representation document")->required();
  classify->add_option("--out", out_path, "write invariants here instead of stdout");

  CLI::App* construct = app.add_subcommand("construct", "canonical representation");
  construct->add_option("graph", graph_path, "digraph document")->required();
  construct->add_option("invariants", inv_path, "invariants document")->required();
  construct->add_option("--field", field_flag, "override field: Q, GF(p), or GF:p");
  construct->add_option("--out", out_path, "write the representation here instead of stdout");

  CLI::App* iso = app.add_subcommand("isomorphic", "compare two representations");
  iso->add_option("graph", graph_path, "digraph document")->required();
  iso->add_option("rep1", rep_path, "first representation")->required();
  iso->add_option("rep2", rep2_path, "second representation")->required();

  CLI::App* transport = app.add_subcommand("transport", "move a representation along a trace");
  transport->add_option("rep", rep_path, "representation document")->required();
  transport->add_option("trace", trace_in, "reduction trace document")->required();
  transport->add_option("--direction", direction, "fwd (initial to final) or bwd")->required();
  transport->add_option("--out", out_path, "write the representation here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*info) return cmd_info(graph_path, as_json);
    if (*reduce) return cmd_reduce(graph_path, order, trace_out, as_json);
    if (*dims) return cmd_dims(graph_path, check_path, decompose_path, as_json);
    if (*classify) return cmd_classify(graph_path, rep_path, out_path);
    if (*construct) return cmd_construct(graph_path, inv_path, field_flag, out_path);
    if (*iso) return cmd_isomorphic(graph_path, rep_path, rep2_path, as_json);
    if (*transport) return cmd_transport(rep_path, trace_in, direction, out_path);
  } catch (const lpa::DegreeCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegreeCap;
  } catch (const lpa::io::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
