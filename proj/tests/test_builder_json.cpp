#include "doctest.h"
#include "indseq/builder.hpp"
#include "indseq/canonical.hpp"
#include "indseq/errors.hpp"
#include "indseq/graph6.hpp"
#include "indseq/json_io.hpp"
#include "indseq/random.hpp"

using namespace indseq;

TEST_CASE("builder families and shorthands") {
  CHECK(parse_builder("path(4)") == path(4));
  CHECK(parse_builder("P4") == path(4));
  CHECK(parse_builder("cycle(5)") == cycle(5));
  CHECK(parse_builder("C5") == cycle(5));
  CHECK(parse_builder("K6") == complete(6));
  CHECK(parse_builder("E3") == empty(3));
  CHECK(parse_builder("S5") == star(5));
  CHECK(parse_builder("star(5)") == complete_bipartite(1, 4));
  CHECK(parse_builder(" complete_bipartite( 2 , 3 ) ") == complete_bipartite(2, 3));
  CHECK(parse_builder("union(K1,K1)") == empty(2));
  CHECK(parse_builder("join(empty(2),empty(3))") == complete_bipartite(2, 3));
}

TEST_CASE("builder nesting folds left") {
  const Graph g = parse_builder("join(union(K4,K4,K4),K37)");
  CHECK(g.order() == 49);
  CHECK(min_degree(g) == 40);
  CHECK(g == join(disjoint_union(disjoint_union(complete(4), complete(4)), complete(4)),
                  complete(37)));
}

TEST_CASE("builder errors") {
  CHECK_THROWS_AS(parse_builder("path(4"), ParseError);
  CHECK_THROWS_AS(parse_builder("path()"), ParseError);
  CHECK_THROWS_AS(parse_builder("path(4,5)"), ParseError);
  CHECK_THROWS_AS(parse_builder("union(K3)"), ParseError);
  CHECK_THROWS_AS(parse_builder("union(3,4)"), ParseError);
  CHECK_THROWS_AS(parse_builder("join(K3) x"), ParseError);
  CHECK_THROWS_AS(parse_builder("wheel(5)"), ParseError);
  CHECK_THROWS_AS(parse_builder("cycle(2)"), PreconditionError);
  CHECK_THROWS_AS(parse_builder("join(K40,K40)"), PreconditionError);
}

TEST_CASE("graph text dispatch") {
  CHECK(looks_like_builder("K4"));
  CHECK(looks_like_builder("foo(1)"));
  CHECK_FALSE(looks_like_builder("Dhc"));
  CHECK_FALSE(looks_like_builder("A_"));
  CHECK(parse_graph_text("Dhc") == read_graph6("Dhc"));
  CHECK(canonical(parse_graph_text("Dhc")) == canonical(cycle(5)));
  CHECK_THROWS_AS(parse_graph_text("foo(1)"), ParseError);
}

TEST_CASE("rationals round-trip as p/q") {
  CHECK(rational_to_string(Rational(6, 4)) == "3/2");
  CHECK(rational_to_string(Rational(5)) == "5/1");
  CHECK(rational_from_string("10/4") == Rational(5, 2));
  CHECK(rational_from_string("7") == Rational(7));
  CHECK_THROWS_AS(rational_from_string("1/0"), ParseError);
  CHECK_THROWS_AS(rational_from_string("x"), ParseError);
}

TEST_CASE("coefficient sequences are decimal strings") {
  const CoeffSeq s{1, 49, 48, 64};
  const Json j = to_json(s);
  CHECK(j.dump() == R"(["1","49","48","64"])");
  CHECK(coeffs_from_json(j) == s);
  CHECK_THROWS_AS(coeffs_from_json(Json::parse("[1,2]")), ParseError);
  CHECK_THROWS_AS(coeffs_from_json(Json::parse("{}")), ParseError);
}

TEST_CASE("bipartite JSON round-trip") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const BipartiteGraph b = sample_bipartite(1 + static_cast<int>(s % 32), 0.4, {11, s});
    CHECK(bipartite_from_json(to_json(b)) == b);
  }
  CHECK(to_json(BipartiteGraph::perfect_matching(3)).dump() ==
        R"({"n":3,"rows":["0x1","0x2","0x4"]})");
  CHECK(bipartite_from_json(parse_json(R"({"n":2,"rows":["3","0X1"]})")).rows() ==
        std::vector<VertexSet>{3, 1});
  CHECK_THROWS_AS(bipartite_from_json(parse_json(R"({"n":2,"rows":["zz","1"]})")), ParseError);
  CHECK_THROWS_AS(bipartite_from_json(parse_json(R"({"rows":[]})")), ParseError);
  CHECK_THROWS_AS(bipartite_from_json(parse_json(R"({"n":2,"rows":["4","1"]})")),
                  PreconditionError);
  CHECK_THROWS_AS(parse_json("{"), ParseError);
}

TEST_CASE("bound profile JSON round-trip") {
  const BoundProfile p = make_profile(BipartiteGraph::perfect_matching(6));
  const BoundProfile q = profile_from_json(to_json(p));
  CHECK(q.n == p.n);
  CHECK(q.K == p.K);
  CHECK(q.m == p.m);
  CHECK(q.x == p.x);
  CHECK(to_json(make_profile(BipartiteGraph::empty(2))).dump() ==
        R"({"n":2,"K":null,"m":[2,2],"x":["0/1","0/1","4/1"]})");
}

TEST_CASE("extremal report JSON") {
  const Json j = to_json(verify_max_total(5, 2));
  CHECK(j["max_value"] == "11/1");
  CHECK(j["maximizers"].size() == 2);
  CHECK(j["unique"] == false);
  for (const auto& g6 : j["maximizers"]) {
    CHECK(canonical(read_graph6(g6.get<std::string>())).bytes.size() > 0);
  }
}
