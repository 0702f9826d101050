#include "ptorder/pt_graph.hpp"

#include "ptorder/io.hpp"
#include "ptorder/theorems.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace ptorder;

namespace {

IntMatrix example1() { return paper_fixtures().front().second; }

const IntMatrix& fixture(const std::string& name) {
    for (const auto& [key, m] : paper_fixtures())
        if (key == name) return m;
    throw std::logic_error("unknown fixture " + name);
}

Permutation random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(img);
}

}  // namespace

TEST_CASE("build_graph and round trip") {
    const PTGraph gi = build_graph(IntMatrix::identity(3));
    CHECK(gi.blue == std::vector<Arc>{{1, 1}, {2, 2}, {3, 3}});
    CHECK(gi.red.empty());

    const PTGraph ge = build_graph(example1());
    CHECK(ge.blue.size() == 7);
    CHECK(ge.red.size() == 2);
    CHECK(matrix_from_graph(ge) == example1());

    const PTGraph gt = build_graph(t_block(4, {1, 1, 2, 2}));
    CHECK(gt.blue == std::vector<Arc>{{1, 1}, {2, 2}});
    CHECK(gt.red == std::vector<Arc>{{1, 2}, {2, 1}});

    CHECK_THROWS_AS(build_graph(IntMatrix::from_rows({{2}})), std::invalid_argument);
}

TEST_CASE("weak_components") {
    CHECK(weak_components(build_graph(IntMatrix::identity(3))).size() == 3);
    CHECK(weak_components(build_graph(example1())).size() == 1);
    CHECK(weak_components(build_graph(direct_sum(example1(), cycle_companion(3)))).size() == 2);
}

TEST_CASE("reverse_graph") {
    const PTGraph g = build_graph(example1());
    CHECK(reverse_graph(reverse_graph(g)) == g);
    CHECK(build_graph(transpose(example1())) == reverse_graph(g));
}

TEST_CASE("signed_walk_counts") {
    const PTGraph g = build_graph(example1());
    for (const Arc& e : g.blue) CHECK(signed_walk_counts(g, e.from, e.to, 1) == std::pair<Int, Int>{1, 0});
    for (const Arc& e : g.red) CHECK(signed_walk_counts(g, e.from, e.to, 1) == std::pair<Int, Int>{0, 1});
    // A^6 = I, so positive 6-walks from a vertex to itself exceed negative by 1.
    for (int u = 1; u <= 5; ++u) {
        const auto [wp, wm] = signed_walk_counts(g, u, u, 6);
        CHECK(wp - wm == 1);
    }
    // Type 2(a) on four vertices: every walk between the cycles is negative.
    const PTGraph g2a = build_graph(type2a_matrix(2, 2, 1, 3));
    const auto [wp, wm] = signed_walk_counts(g2a, 1, 4, 2);
    CHECK(wp == 0);
    CHECK(wm >= 1);
}

TEST_CASE("classify the bundled examples") {
    SUBCASE("example 1 is elementary of type 2(d)") {
        const Classification c = classify(build_graph(example1()));
        CHECK(c.type == GraphType::Type2d);
        CHECK_FALSE(c.transposed);
        CHECK(c.params == std::vector<int>{4, 1, 2, 4});
        CHECK(c.cycle_lengths == std::vector<int>{4, 1});
    }
    SUBCASE("the order-40 matrix is of type 1 with d = 5 and {j1,j2} = {9,1}") {
        const Classification c = classify(build_graph(fixture("type1-order40")));
        CHECK(c.type == GraphType::Type1);
        CHECK(c.params == std::vector<int>{10, 5, 9, 1});
    }
    SUBCASE("four 2-cycles with a spread T-block are type 4") {
        IntMatrix base = direct_sum(direct_sum(cycle_companion(2), cycle_companion(2)),
                                    direct_sum(cycle_companion(2), cycle_companion(2)));
        const Classification c = classify(build_graph(base + t_block(8, {1, 5, 3, 7})));
        CHECK(c.type == GraphType::Type4);
    }
    SUBCASE("permutation graphs") {
        const Classification c = classify(build_graph(direct_sum(cycle_companion(3), cycle_companion(2))));
        CHECK(c.type == GraphType::Permutation);
        CHECK(c.cycle_lengths == std::vector<int>{3, 2});
    }
}

TEST_CASE("classify negative and malformed structures") {
    CHECK(classify(build_graph(type2a_matrix(2, 2, 1, 3))).type == GraphType::Type2a);
    CHECK(classify(reverse_graph(build_graph(type2a_matrix(3, 2, 1, 4)))).type == GraphType::Type2a);
    CHECK(classify(build_graph(type2b_matrix(3, 4, 2, 3))).type == GraphType::Type2b);
    CHECK(classify(build_graph(type2b_matrix(3, 4, 2, 3))).params == std::vector<int>{3, 4, 2, 3});
    CHECK(classify(build_graph(type3a_matrix(2, 1, 2, 1))).type == GraphType::Type3a);
    CHECK(classify(build_graph(type3b_matrix(3, 1, 2, 1))).type == GraphType::Type3b);
    CHECK(classify(build_graph(type4_matrix(1, 2, 2, 1))).type == GraphType::Type4);

    // three -1 entries
    CHECK(classify(build_graph(paper_fixtures().back().second)).type == GraphType::NotPT);
    // exactly one -1 entry
    IntMatrix singular = cycle_companion(4);
    singular(0, 1) = -1;
    singular(0, 2) = 1;
    CHECK(classify(build_graph(singular)).type == GraphType::NotPT);
    // -1 entries sharing a column
    IntMatrix shared(3);
    shared(0, 0) = -1;
    shared(1, 0) = -1;
    CHECK(classify(build_graph(shared)).type == GraphType::NotPT);
    // T-block +1 arcs missing
    IntMatrix missing(3);
    missing(0, 0) = -1;
    missing(1, 1) = -1;
    CHECK(classify(build_graph(missing)).type == GraphType::NotPT);
    // 0/1 matrix that is not a permutation
    CHECK(classify(build_graph(IntMatrix::from_rows({{1, 1}, {0, 0}}))).type == GraphType::NotPT);
}

TEST_CASE("classify splits non-elementary graphs") {
    const IntMatrix m = direct_sum(example1(), cycle_companion(3));
    const Classification c = classify(build_graph(m));
    REQUIRE(c.type == GraphType::NonElementary);
    CHECK(c.satellite_cycles == std::vector<int>{3});
    CHECK(c.core_vertices == std::vector<int>{1, 2, 3, 4, 5});
    const Classification core = classify(induced_subgraph(build_graph(m), c.core_vertices));
    CHECK(core.type == GraphType::Type2d);
    CHECK(core.params == std::vector<int>{4, 1, 2, 4});
}

TEST_CASE("classification of standard matrices is idempotent") {
    const std::vector<std::pair<GraphType, std::vector<int>>> cases{
        {GraphType::Type1, {10, 5, 9, 1}},  {GraphType::Type1, {6, 3, 5, 1}},
        {GraphType::Type2c, {2, 3, 1, 1}},  {GraphType::Type2c, {4, 6, 2, 3}},
        {GraphType::Type2d, {4, 1, 2, 4}},  {GraphType::Type2d, {9, 1, 2, 9}},
        {GraphType::Type3c, {4, 2, 6, 3}},  {GraphType::Type3c, {2, 1, 1, 2}},
    };
    for (const auto& [type, params] : cases) {
        const Classification c = classify(build_graph(standard_matrix(type, params)));
        CHECK(c.type == type);
        CHECK(c.params == params);
        CHECK_FALSE(c.transposed);
    }
}

TEST_CASE("classification is invariant under conjugation and the ordering rebuilds the standard form") {
    std::mt19937_64 rng(29);
    const std::vector<std::pair<GraphType, std::vector<int>>> cases{
        {GraphType::Type1, {8, 4, 7, 1}},  {GraphType::Type2b, {3, 4, 2, 3}},
        {GraphType::Type2c, {3, 4, 1, 2}}, {GraphType::Type2d, {5, 2, 3, 4}},
        {GraphType::Type2d, {4, 1, 2, 4}}, {GraphType::Type3c, {3, 2, 2, 2}},
    };
    for (const auto& [type, params] : cases) {
        const IntMatrix standard = standard_matrix(type, params);
        const Classification base = classify(build_graph(standard));
        for (int trial = 0; trial < 10; ++trial) {
            const IntMatrix m = conjugate(standard, random_permutation(rng, standard.size()));
            const Classification c = classify(build_graph(m));
            CHECK(c.type == base.type);
            CHECK(c.params == base.params);
            REQUIRE(c.ordering.has_value());
            CHECK(conjugate(m, *c.ordering) == standard_matrix(c.type, c.params));
        }
    }
}

TEST_CASE("heads-only orientations classify as transposed") {
    // Transposing a standard type 2(d) matrix puts both red heads on one
    // cycle; the classifier reports the reverse graph's parameters.
    const IntMatrix m = transpose(standard_matrix(GraphType::Type2d, {5, 2, 3, 4}));
    const Classification c = classify(build_graph(m));
    CHECK(c.type == GraphType::Type2d);
    CHECK(c.transposed);
    REQUIRE(c.ordering.has_value());
    CHECK(conjugate(transpose(m), *c.ordering) == standard_matrix(c.type, c.params));

    const IntMatrix m3 = transpose(standard_matrix(GraphType::Type3c, {3, 2, 2, 2}));
    const Classification c3 = classify(build_graph(m3));
    CHECK(c3.type == GraphType::Type3c);
    CHECK(c3.transposed);
    CHECK(conjugate(transpose(m3), *c3.ordering) == standard_matrix(c3.type, c3.params));
}

TEST_CASE("standard-form reconstruction agrees with an exhaustive conjugation search") {
    // Independent check of the ordering machinery on a small case: the
    // classifier's ordering is one of the conjugations found by brute force.
    const IntMatrix source = conjugate(standard_matrix(GraphType::Type2c, {2, 3, 1, 1}), Permutation({3, 1, 4, 2, 5}));
    const Classification c = classify(build_graph(source));
    const IntMatrix target = standard_matrix(c.type, c.params);
    bool found = false;
    std::vector<int> img{1, 2, 3, 4, 5};
    do {
        if (conjugate(source, Permutation(img)) == target) {
            found = true;
            break;
        }
    } while (std::next_permutation(img.begin(), img.end()));
    CHECK(found);
    CHECK(conjugate(source, *c.ordering) == target);
}

TEST_CASE("to_dot") {
    const std::string dot = to_dot(build_graph(t_block(2, {1, 1, 2, 2})));
    CHECK(dot.find("v1 -> v2 [color=red, style=dashed]") != std::string::npos);
    CHECK(dot.find("v1 -> v1 [color=blue]") != std::string::npos);
}
