#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace lpa;
using namespace lpa::testing;

TEST_CASE("construction validates ids and endpoints") {
  Digraph g;
  g.add_vertex("u");
  CHECK_THROWS_AS(g.add_vertex("u"), std::invalid_argument);
  CHECK_THROWS_AS(g.add_arrow("a", "u", "zz"), std::invalid_argument);
  CHECK_THROWS_AS(g.add_arrow("a", "zz", "u"), std::invalid_argument);
  g.add_arrow("a", "u", "u");
  CHECK_THROWS_AS(g.add_arrow("a", "u", "u"), std::invalid_argument);

  // from_parts reports all problems at once and bans '*' in ids
  auto issues = Digraph::validate_parts({"p", "p"}, {{"z1", "p", "q"}, {"z1", "p", "p"}});
  CHECK(issues.size() == 3);
  CHECK_FALSE(Digraph::validate_parts({"p"}, {{"e*f", "p", "p"}}).empty());
  CHECK_FALSE(Digraph::validate_parts({""}, {}).empty());
  CHECK_THROWS_AS((void)Digraph::from_parts({"p", "p"}, {}), std::invalid_argument);
  // programmatic insertion accepts spliced ids
  Digraph h;
  h.add_vertex("p");
  h.add_arrow("e*f", "p", "p");
  CHECK(h.has_arrow("e*f"));
}

TEST_CASE("accessors stay sorted and kinds are classified") {
  Digraph g0 = make_g0();
  CHECK(g0.vertices() == std::vector<std::string>{"u", "v", "w", "x", "y"});
  CHECK(g0.arrows().size() == 9);
  CHECK(std::is_sorted(g0.arrows().begin(), g0.arrows().end(),
                       [](const Arrow& a, const Arrow& b) { return a.id < b.id; }));
  CHECK(g0.out_arrows("u") == std::vector<std::string>{"a1", "a2", "a3"});
  CHECK(g0.in_arrows("w") == std::vector<std::string>{"a1", "d1", "d2"});
  CHECK(g0.sinks() == std::vector<std::string>{"y"});
  CHECK(g0.is_source("u"));
  CHECK_FALSE(g0.is_isolated("u"));
  CHECK(g0.arrow("b1").target == "y");
  CHECK_THROWS_AS((void)g0.arrow("zz"), std::invalid_argument);
  CHECK_THROWS_AS((void)g0.out_arrows("zz"), std::invalid_argument);

  Digraph gt = make_gt();
  auto kinds = vertex_kinds(gt);
  CHECK(kinds["u"].category == VertexKind::Category::plain);
  CHECK(kinds["u"].pseudo_source);
  CHECK(kinds["w"].category == VertexKind::Category::sink);
  CHECK_FALSE(kinds["w"].pseudo_source);
  CHECK(gt.loops_at("u") == 1);
  CHECK(gt.is_pseudo_source("u"));

  Digraph iso;
  iso.add_vertex("z");
  CHECK(vertex_kinds(iso)["z"].category == VertexKind::Category::isolated);
}

TEST_CASE("paths validate, compose, and order canonically") {
  Digraph g0 = make_g0();
  Path anchor(g0, "y");
  CHECK(anchor.length() == 0);
  CHECK(anchor.source() == "y");
  CHECK(anchor.target() == "y");
  Path p(g0, std::vector<std::string>{"a2", "b1"});
  CHECK(p.source() == "u");
  CHECK(p.target() == "y");
  Path q = Path(g0, std::vector<std::string>{"b1"});
  CHECK(q.prepended(g0, "a2") == p);
  CHECK_THROWS_AS((void)Path(g0, std::vector<std::string>{"b1", "a2"}), std::invalid_argument);
  CHECK_THROWS_AS((void)Path(g0, "zz"), std::invalid_argument);
  // (length, lex) order
  CHECK(Path(g0, "u") < Path(g0, std::vector<std::string>{"a1"}));
  CHECK(Path(g0, std::vector<std::string>{"a2"}) < Path(g0, std::vector<std::string>{"a3"}));
  CHECK(Path(g0, std::vector<std::string>{"a3"}) < p);
}

TEST_CASE("cycles canonicalize their rotation") {
  Digraph g1 = make_g1();
  Cycle c(g1, {"e2", "e1"});
  CHECK(c.base() == "u");
  CHECK(c.arrows() == std::vector<std::string>{"e1", "e2"});
  CHECK(c.vertices() == std::vector<std::string>{"u", "v"});
  CHECK(c.arrow_leaving_base() == "e1");
  CHECK(c.contains_vertex("v"));
  CHECK_FALSE(c.contains_vertex("w"));
  CHECK(c.contains_arrow("e2"));
  CHECK(c == Cycle(g1, {"e1", "e2"}));
  CHECK_THROWS_AS((void)Cycle(g1, {"e1"}), std::invalid_argument);        // not closed
  CHECK_THROWS_AS((void)Cycle(g1, {"e1", "e3"}), std::invalid_argument);  // not composable
  Digraph g0 = make_g0();
  CHECK_THROWS_AS((void)Cycle(g0, {"c1", "d1", "c2", "d2"}), std::invalid_argument);  // revisit
}

TEST_CASE("simple cycle enumeration on the fixtures") {
  Digraph g0 = make_g0();
  auto cyc = simple_cycles(g0);
  REQUIRE(cyc.size() == 6);
  CHECK(cyc[0].arrows() == std::vector<std::string>{"c1", "d1"});
  CHECK(cyc[0].base() == "w");
  CHECK(cyc[5].arrows() == std::vector<std::string>{"c3", "d2"});
  CHECK(std::is_sorted(cyc.begin(), cyc.end()));
  CHECK(cycle_exits(g0, cyc[0]) == std::vector<std::string>{"c2", "c3", "d2"});

  CHECK(simple_cycles(make_g1()).size() == 2);
  Digraph line;
  for (auto v : {"u", "v", "w"}) line.add_vertex(v);
  line.add_arrow("a", "u", "v");
  line.add_arrow("b", "v", "w");
  CHECK(simple_cycles(line).empty());
}

TEST_CASE("simple cycle enumeration matches brute force on random graphs") {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 250; ++iter) {
    Digraph g = random_digraph(rng, 6, 10);
    std::set<std::vector<std::string>> expected = brute_force_cycles(g);
    std::set<std::vector<std::string>> got;
    for (const Cycle& c : simple_cycles(g)) got.insert(c.arrows());
    CHECK(got == expected);
  }
}

TEST_CASE("maximal sinks and cycles match the reachability definition") {
  Digraph g0 = make_g0();
  auto mx = maximal_sinks_and_cycles(g0);
  CHECK(mx.sinks == std::vector<std::string>{"y"});
  CHECK(mx.cycles.empty());
  auto mx1 = maximal_sinks_and_cycles(make_g1());
  CHECK((mx1.sinks.empty() && mx1.cycles.empty()));
  auto mxt = maximal_sinks_and_cycles(make_gt());
  CHECK(mxt.sinks.empty());
  REQUIRE(mxt.cycles.size() == 1);
  auto mx2 = maximal_sinks_and_cycles(make_g2());
  CHECK(mx2.sinks == std::vector<std::string>{"s"});
  REQUIRE(mx2.cycles.size() == 1);
  CHECK(mx2.cycles[0].base() == "v");

  std::mt19937_64 rng(32);
  for (int iter = 0; iter < 150; ++iter) {
    Digraph g = random_digraph(rng, 6, 10);
    std::vector<Cycle> cycles = simple_cycles(g);
    auto computed = maximal_sinks_and_cycles(g);
    std::vector<std::string> sinks;
    for (const std::string& w : g.sinks()) {
      bool hit = false;
      for (const Cycle& c : cycles)
        if (connects_to(g, c.base(), w)) hit = true;
      if (!hit) sinks.push_back(w);
    }
    CHECK(computed.sinks == sinks);
    std::vector<Cycle> maxc;
    for (const Cycle& c : cycles) {
      bool hit = false;
      for (const Cycle& d : cycles) {
        if (d == c) continue;
        for (const std::string& v : c.vertices())
          if (connects_to(g, d.base(), v)) hit = true;
      }
      if (!hit) maxc.push_back(c);
    }
    CHECK(computed.cycles == maxc);
  }
}

TEST_CASE("connectivity helpers") {
  Digraph gt = make_gt();
  CHECK(connects_to(gt, "u", "w"));
  CHECK_FALSE(connects_to(gt, "w", "u"));
  CHECK(connects_to(gt, "w", "w"));

  Digraph g0 = make_g0();
  Digraph p = predecessors_subgraph(g0, "y");
  CHECK(p.vertices() == std::vector<std::string>{"u", "v", "y"});
  CHECK(p.arrows().size() == 3);
  Digraph pc = predecessors_subgraph(g0, simple_cycles(g0)[0]);
  CHECK(pc.vertices() == std::vector<std::string>{"u", "w", "x"});

  Digraph sub = g0.induced_subgraph({"u", "v", "y"});
  CHECK(sub == p);
  CHECK_THROWS_AS((void)g0.induced_subgraph({"zz"}), std::invalid_argument);
}

TEST_CASE("hereditary saturated closure is the least fixed point") {
  Digraph g0 = make_g0();
  CHECK(hereditary_saturated_closure(g0, {"y"}) == std::vector<std::string>{"v", "y"});
  CHECK(hereditary_saturated_closure(g0, {}).empty());

  std::mt19937_64 rng(33);
  auto hereditary_and_saturated = [](const Digraph& g, const std::set<std::string>& s) {
    for (const Arrow& a : g.arrows())
      if (s.count(a.source) && !s.count(a.target)) return false;
    for (const std::string& v : g.vertices()) {
      if (s.count(v) || g.is_sink(v)) continue;
      bool all_in = true;
      for (const std::string& e : g.out_arrows(v))
        if (!s.count(g.arrow(e).target)) all_in = false;
      if (all_in) return false;
    }
    return true;
  };
  for (int iter = 0; iter < 60; ++iter) {
    Digraph g = random_digraph(rng, 5, 8);
    const std::vector<std::string>& vs = g.vertices();
    std::set<std::string> seed;
    for (const std::string& v : vs)
      if (pick(rng, 3) == 0) seed.insert(v);
    std::vector<std::string> got = hereditary_saturated_closure(g, seed);
    std::set<std::string> got_set(got.begin(), got.end());
    CHECK(hereditary_and_saturated(g, got_set));
    // minimality: no proper subset containing seed is both
    std::size_t n = vs.size();
    for (std::size_t mask = 0; mask < (1u << n); ++mask) {
      std::set<std::string> cand;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) cand.insert(vs[i]);
      bool contains_seed = std::includes(cand.begin(), cand.end(), seed.begin(), seed.end());
      if (!contains_seed || !hereditary_and_saturated(g, cand)) continue;
      CHECK(std::includes(cand.begin(), cand.end(), got_set.begin(), got_set.end()));
    }
  }
}

TEST_CASE("path counting on the fixtures") {
  Digraph g0 = make_g0();
  CHECK(count_paths_avoiding_cycle(g0, "u", "y", nullptr) == 2);
  CHECK(count_paths_avoiding_cycle(g0, "y", "y", nullptr) == 1);
  CHECK(count_paths_avoiding_cycle(g0, "w", "y", nullptr) == 0);
  CHECK_THROWS_AS((void)count_paths_avoiding_cycle(g0, "u", "x", nullptr), std::domain_error);

  PathCountResult r = count_paths_to_base(g0, "y", nullptr);
  CHECK(r.divergent.empty());
  CHECK(r.counts.at("u") == 2);
  CHECK(r.counts.at("v") == 1);
  CHECK(r.counts.at("y") == 1);
  CHECK_FALSE(r.counts.count("w"));

  Digraph g1 = make_g1();
  auto cycles = simple_cycles(g1);
  CHECK(count_paths_avoiding_cycle(g1, "u", "u", &cycles[0]) == 1);
  CHECK_THROWS_AS((void)count_paths_avoiding_cycle(g1, "v", "u", &cycles[0]), std::domain_error);

  Digraph gt = make_gt();
  Cycle loop = simple_cycles(gt)[0];
  CHECK(count_paths_avoiding_cycle(gt, "u", "u", &loop) == 1);
  CHECK(count_paths_avoiding_cycle(gt, "w", "u", &loop) == 0);
  // cycle version validates the base
  CHECK_THROWS_AS((void)count_paths_to_base(make_g1(), "v", &cycles[0]), std::invalid_argument);
}

TEST_CASE("path counting matches the matrix-power oracle on random graphs") {
  std::mt19937_64 rng(34);
  int cycle_cases = 0;
  for (int iter = 0; iter < 300; ++iter) {
    Digraph g = random_digraph(rng, 6, 10);
    const std::vector<std::string>& vs = g.vertices();
    std::string base = vs[pick(rng, vs.size())];
    PathOracle expected = brute_force_paths(g, base, "");
    PathCountResult got = count_paths_to_base(g, base, nullptr);
    CHECK(got.divergent == expected.divergent);
    CHECK(got.counts == expected.counts);

    std::vector<Cycle> cycles = simple_cycles(g);
    if (!cycles.empty()) {
      ++cycle_cases;
      const Cycle& c = cycles[pick(rng, cycles.size())];
      PathOracle ce = brute_force_paths(g, c.base(), c.arrow_leaving_base());
      PathCountResult cg = count_paths_to_base(g, c.base(), &c);
      CHECK(cg.divergent == ce.divergent);
      CHECK(cg.counts == ce.counts);
    }
  }
  CHECK(cycle_cases > 50);
}

TEST_CASE("explicit path lists agree with the counts") {
  std::mt19937_64 rng(35);
  Digraph g0 = make_g0();
  auto ps = paths_to_base(g0, "y", nullptr);
  REQUIRE(ps.at("u").size() == 2);
  CHECK(ps.at("u")[0].arrows() == std::vector<std::string>{"a2", "b1"});
  CHECK(ps.at("u")[1].arrows() == std::vector<std::string>{"a3", "b1"});
  CHECK(ps.at("y")[0].length() == 0);
  CHECK_THROWS_AS((void)paths_to_base(g0, "x", nullptr), std::domain_error);

  for (int iter = 0; iter < 120; ++iter) {
    Digraph g = random_digraph(rng, 5, 8);
    const std::vector<std::string>& vs = g.vertices();
    std::string base = vs[pick(rng, vs.size())];
    PathCountResult counts = count_paths_to_base(g, base, nullptr);
    if (!counts.divergent.empty()) continue;
    std::map<std::string, std::vector<Path>> lists = paths_to_base(g, base, nullptr);
    CHECK(lists.size() == counts.counts.size());
    for (const auto& [v, paths] : lists) {
      CHECK(counts.counts.at(v) == mpz_class(static_cast<unsigned long>(paths.size())));
      CHECK(std::is_sorted(paths.begin(), paths.end()));
      CHECK(std::adjacent_find(paths.begin(), paths.end()) == paths.end());
      for (const Path& p : paths) {
        CHECK(p.source() == v);
        CHECK(p.target() == base);
      }
    }
  }

  // the explicit-cut variant agrees with the cycle variant at the base
  Digraph g1 = make_g1();
  Cycle c = simple_cycles(g1)[0];
  Digraph gg = predecessors_subgraph(g1, c);  // kill the other cycle to converge
  // g1's cycles share v, so restrict to a convergent fixture instead
  Digraph g3;
  for (auto v : {"p", "q", "r"}) g3.add_vertex(v);
  g3.add_arrow("m1", "p", "q");
  g3.add_arrow("m2", "q", "p");
  g3.add_arrow("t1", "r", "p");
  Cycle c3(g3, {"m1", "m2"});
  auto via_cycle = paths_to_base(g3, "p", &c3);
  auto via_cut = paths_to_base_cut(g3, "p", "m1");
  CHECK(via_cycle.size() == via_cut.size());
  for (const auto& [v, paths] : via_cycle) CHECK(via_cut.at(v) == paths);
  // anchor q cuts m2 instead
  auto at_q = paths_to_base_cut(g3, "q", "m2");
  CHECK(at_q.at("r").size() == 1);
  CHECK(at_q.at("r")[0].arrows() == std::vector<std::string>{"t1", "m1"});
  CHECK_THROWS_AS((void)paths_to_base_cut(g3, "q", "m1"), std::invalid_argument);
}
