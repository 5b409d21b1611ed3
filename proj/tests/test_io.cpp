#include "doctest.h"

#include <sstream>

#include "diversol/io.hpp"
#include "test_util.hpp"

using namespace diversol;
using testutil::matroids_agree;

namespace {

ParsedMatroid parse_string(const std::string& text) {
    std::istringstream in(text);
    return parse_matroid(in);
}

}  // namespace

TEST_CASE("uniform matroid files round-trip") {
    ParsedMatroid m = parse_string("matroid uniform\n5 3\nweights 1 2 3 4 5\n");
    CHECK(m.kind == MatroidKind::Uniform);
    CHECK(m.matroid->ground_size() == 5);
    CHECK(m.weights.of(4) == 5);
    ParsedMatroid again = parse_string(print_matroid(m));
    CHECK(matroids_agree(*m.matroid, *again.matroid));
    CHECK(again.weights.values() == m.weights.values());
    CHECK(print_matroid(again) == print_matroid(m));
}

TEST_CASE("graphic matroid files round-trip, weights defaulting to one") {
    ParsedMatroid m = parse_string("matroid graphic\n3 3\n0 1\n1 2\n0 2\n");
    CHECK(m.kind == MatroidKind::Graphic);
    CHECK(!m.weights_given);
    CHECK(m.weights.of(2) == 1);
    ParsedMatroid again = parse_string(print_matroid(m));
    CHECK(matroids_agree(*m.matroid, *again.matroid));
    CHECK(print_matroid(again) == print_matroid(m));
}

TEST_CASE("linear matroid files round-trip") {
    std::string text =
        "matroid linear\nfield 5\nrows 2 cols 4\n1 0 1 3\n0 1 2 4\nweights 2 2 3 3\n";
    ParsedMatroid m = parse_string(text);
    CHECK(m.kind == MatroidKind::Linear);
    ParsedMatroid again = parse_string(print_matroid(m));
    CHECK(matroids_agree(*m.matroid, *again.matroid));
    CHECK(print_matroid(m) == text);
}

TEST_CASE("graph files round-trip") {
    std::istringstream in("graph 4 2\n0 1\n2 3\n");
    Graph g = parse_graph(in);
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 2);
    std::istringstream in2(print_graph(g));
    Graph again = parse_graph(in2);
    CHECK(print_graph(again) == print_graph(g));
}

TEST_CASE("witness files round-trip including empty sets") {
    std::istringstream in("0 2 4\n\n1 3\n");
    std::vector<ElemSet> sets = parse_witness(in);
    REQUIRE(sets.size() == 3);
    CHECK(sets[0] == ElemSet{0, 2, 4});
    CHECK(sets[1].empty());
    CHECK(sets[2] == ElemSet{1, 3});
    std::istringstream in2(print_witness(sets));
    CHECK(parse_witness(in2) == sets);
}

TEST_CASE("parse errors carry line and column information") {
    try {
        parse_string("matroid uniform\n5 x\n");
        FAIL("expected a parse error");
    } catch (const ParseError& err) {
        CHECK(err.line() == 2);
        CHECK(err.column() == 3);
    }

    CHECK_THROWS_AS(parse_string("matroid mystery\n3 1\n"), ParseError);
    CHECK_THROWS_AS(parse_string("matroid uniform\n3 1\n7\n"), ParseError);
    CHECK_THROWS_AS(parse_string("matroid linear\nfield 4\nrows 1 cols 1\n1\n"), ParseError);
    CHECK_THROWS_AS(parse_string("matroid uniform\n3 1\nweights 1 0 1\n"), ParseError);
    std::istringstream bad_graph("graph 2 1\n0 0\n");
    CHECK_THROWS_AS(parse_graph(bad_graph), ParseError);
}
