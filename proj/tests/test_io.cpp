#include <doctest.h>

#include <string>
#include <vector>

#include "cxh/families.hpp"
#include "cxh/graph.hpp"
#include "cxh/io.hpp"

using namespace cxh;

namespace {

// Reference graph6 reader used to cross-check the library decoder: unpacks
// the order, then consumes the upper triangle bit stream column by column.
Graph decode_graph6_by_hand(const std::string& s) {
    std::size_t pos = 0;
    long long n;
    if (static_cast<unsigned char>(s.at(pos)) == 126) {
        ++pos;
        n = 0;
        for (int i = 0; i < 3; ++i) n = n * 64 + (s.at(pos++) - 63);
    } else {
        n = s.at(pos++) - 63;
    }
    std::vector<int> bits;
    for (; pos < s.size(); ++pos) {
        int v = s[pos] - 63;
        for (int b = 5; b >= 0; --b) bits.push_back((v >> b) & 1);
    }
    Graph g(static_cast<int>(n));
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (bits.at(k)) g.add_edge(i, j);
    return g;
}

Graph random_graph(SplitMix64& rng, int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(2, 5)) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("edge lists parse headers, comments and reversed endpoints") {
    Graph g = parse_edge_list(
        "# a comment\n"
        "4 3\n"
        "\n"
        "1 0\n"
        "1 2   # trailing note\n"
        "2 3\n");
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 2));
    CHECK(g.adjacent(2, 3));
}

TEST_CASE("edge lists carry vertex labels through a round trip") {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.set_label(0, "left end");
    g.set_label(2, "right end");

    std::string text = emit_edge_list(g);
    CHECK(text.substr(0, 4) == "3 2\n");

    Graph back = parse_edge_list(text);
    CHECK(back == g);
    REQUIRE(back.has_labels());
    CHECK(back.label(0) == "left end");
    CHECK(back.label(1) == "");
    CHECK(back.label(2) == "right end");
    CHECK(back.display_name(1) == "1");
}

TEST_CASE("edge list round trips preserve unlabeled graphs") {
    SplitMix64 rng(404);
    for (int n : {0, 1, 2, 6, 12}) {
        Graph g = random_graph(rng, n);
        Graph back = parse_edge_list(emit_edge_list(g));
        CHECK(back == g);
        CHECK(!back.has_labels());
    }
}

TEST_CASE("edge list parse errors name the offending line") {
    CHECK_THROWS_AS(parse_edge_list(""), parse_error);
    CHECK_THROWS_AS(parse_edge_list("# only comments\n"), parse_error);
    CHECK_THROWS_AS(parse_edge_list("apples 3\n"), parse_error);
    CHECK_THROWS_AS(parse_edge_list("3\n"), parse_error);
    CHECK_THROWS_AS(parse_edge_list("3 1\n"), parse_error);               // missing edge
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\n1 2\n"), parse_error);     // extra edge
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 3\n"), parse_error);          // out of range
    CHECK_THROWS_AS(parse_edge_list("3 1\n1 1\n"), parse_error);          // loop
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n1 0\n"), parse_error);     // duplicate
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 1 2\n"), parse_error);        // junk column

    bool threw = false;
    try {
        parse_edge_list("3 1\n\n0 3\n");
    } catch (const parse_error& e) {
        threw = true;
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK(threw);
}

TEST_CASE("graph6 encodings match hand-checked strings") {
    Graph k2(2);
    k2.add_edge(0, 1);
    CHECK(encode_graph6(k2) == "A_");

    CHECK(encode_graph6(path_graph(3)) == "Bg");
    CHECK(encode_graph6(complete_graph(4)) == "C~");
    CHECK(encode_graph6(Graph(1)) == "@");

    CHECK(parse_graph6("A_") == k2);
    CHECK(parse_graph6("Bg") == path_graph(3));
    CHECK(parse_graph6(">>graph6<<C~") == complete_graph(4));
    CHECK(parse_graph6("Bg\n") == path_graph(3));
}

TEST_CASE("graph6 round trips agree with an independent decoder") {
    SplitMix64 rng(2024);
    for (int n : {0, 1, 2, 5, 9, 20, 40, 62, 63, 64}) {
        Graph g = random_graph(rng, n);
        std::string s = encode_graph6(g);
        CHECK(parse_graph6(s) == g);
        CHECK(decode_graph6_by_hand(s) == g);
    }
}

TEST_CASE("graph6 uses the long order header only above 62 vertices") {
    CHECK(encode_graph6(Graph(62)).size() == 1 + (62 * 61 / 2 + 5) / 6);
    std::string s63 = encode_graph6(path_graph(63));
    CHECK(static_cast<unsigned char>(s63[0]) == 126);
    CHECK(parse_graph6(s63) == path_graph(63));
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), parse_error);
    CHECK_THROWS_AS(parse_graph6("B"), parse_error);        // truncated bits
    CHECK_THROWS_AS(parse_graph6("Bg!"), parse_error);      // trailing content
    CHECK_THROWS_AS(parse_graph6("B\x1f\x1f"), parse_error);  // byte below 63
    CHECK_THROWS_AS(parse_graph6("~~~~~"), parse_error);    // 8-byte order form
    CHECK_THROWS_AS(parse_graph6(std::string(1, char(63 + 40))), parse_error);  // order 40, no bits

    // Padding bits must be zero: P3 with a dirty final bit.
    CHECK_THROWS_AS(parse_graph6(std::string("B") + char(63 + 41)), parse_error);

    Graph big(65);
    CHECK_THROWS_AS(encode_graph6(big), std::invalid_argument);
}
