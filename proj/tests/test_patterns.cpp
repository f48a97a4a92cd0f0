#include "doctest.h"

#include "crossfree/enumeration.hpp"
#include "crossfree/patterns.hpp"

using namespace crossfree;

namespace {

ArcDiagram figure1_matching() {
    return ArcDiagram::from_blocks(12, {{1, 6}, {2, 3}, {4, 12}, {5, 10}, {7, 8}, {9}, {11}});
}
ArcDiagram figure3_partition() { return ArcDiagram::from_blocks(8, {{1, 5, 6}, {2, 3, 8}, {4, 7}}); }

std::vector<Arc> arcs_within(int n) {
    std::vector<Arc> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.push_back({i, j});
    return out;
}

const PatternFamily kParametric[][2] = {
    {PatternFamily::LeftCrossing, PatternFamily::KLeftCrossing},
    {PatternFamily::RightCrossing, PatternFamily::KRightCrossing},
    {PatternFamily::LeftNesting, PatternFamily::KLeftNesting},
    {PatternFamily::RightNesting, PatternFamily::KRightNesting},
};

}  // namespace

TEST_CASE("matches on single pairs") {
    CHECK(matches({1, 3}, {2, 4}, PatternKind::right_crossing()));
    CHECK(matches({1, 4}, {2, 3}, PatternKind::right_nesting()));
    CHECK(matches({1, 3}, {2, 5}, PatternKind::k_right_crossing(2)));
    CHECK_FALSE(matches({1, 3}, {2, 5}, PatternKind::right_crossing()));
    CHECK(matches({5, 10}, {7, 8}, PatternKind::k_right_nesting(2)));
    CHECK_FALSE(matches({5, 10}, {7, 8}, PatternKind::right_nesting()));
    CHECK(matches({2, 3}, {4, 12}, PatternKind::neighbor_alignment()));
    CHECK(matches({4, 12}, {2, 3}, PatternKind::neighbor_alignment()));
    CHECK(matches({1, 5}, {5, 6}, PatternKind::two_path()));
    CHECK(matches({1, 3}, {2, 4}, PatternKind::left_crossing()));
    CHECK_FALSE(matches({1, 3}, {2, 4}, PatternKind::left_nesting()));
    CHECK(matches({1, 4}, {2, 3}, PatternKind::left_nesting()));
    CHECK_FALSE(matches({1, 3}, {1, 3}, PatternKind::crossing()));
    // a shared endpoint is never a crossing or nesting
    CHECK_FALSE(matches({1, 3}, {3, 5}, PatternKind::crossing()));
    CHECK_FALSE(matches({1, 3}, {2, 3}, PatternKind::nesting()));
}

TEST_CASE("pattern names round trip") {
    CHECK(pattern_name(PatternKind::k_right_crossing(2)) == "k-right-crossing:2");
    CHECK(parse_pattern_kind("right-crossing") == PatternKind::right_crossing());
    CHECK(parse_pattern_kind("k-left-nesting:3") == PatternKind::k_left_nesting(3));
    for (const char* name : {"crossing", "nesting", "left-crossing", "right-crossing", "left-nesting",
                             "right-nesting", "k-left-crossing:1", "k-right-crossing:4",
                             "k-left-nesting:2", "k-right-nesting:7", "neighbor-alignment", "two-path"}) {
        CHECK(pattern_name(parse_pattern_kind(name)) == name);
    }
    CHECK_THROWS(parse_pattern_kind("k-right-crossing"));
    CHECK_THROWS(parse_pattern_kind("k-right-crossing:0"));
    CHECK_THROWS(parse_pattern_kind("right-crossing:2"));
    CHECK_THROWS(parse_pattern_kind("zigzag"));
    CHECK_THROWS(PatternKind::k_right_nesting(0));
}

TEST_CASE("find_patterns") {
    CHECK(find_patterns(figure1_matching(), PatternKind::neighbor_alignment()) ==
          std::vector<ArcPair>{{{1, 6}, {7, 8}}, {{2, 3}, {4, 12}}});
    CHECK(find_patterns(figure3_partition(), PatternKind::two_path()) ==
          std::vector<ArcPair>{{{1, 5}, {5, 6}}, {{2, 3}, {3, 8}}});
    ArcDiagram one_arc = ArcDiagram::from_arcs(4, {{1, 4}});
    for (const char* name : {"crossing", "nesting", "neighbor-alignment", "two-path", "k-right-nesting:3"}) {
        CHECK(find_patterns(one_arc, parse_pattern_kind(name)).empty());
    }
}

TEST_CASE("avoids") {
    CHECK(avoids(figure1_matching(), kMatchingForbidden));
    CHECK_FALSE(avoids(ArcDiagram::from_arcs(4, {{1, 3}, {2, 4}}), {PatternKind::right_crossing()}));
    CHECK(avoids(ArcDiagram::singletons(5), kMatchingForbidden));
    CHECK(avoids(ArcDiagram::singletons(5), {PatternKind::crossing(), PatternKind::two_path()}));
    auto hit = first_violation(ArcDiagram::from_arcs(5, {{1, 3}, {2, 5}}), kMatchingForbidden);
    REQUIRE(hit.has_value());
    CHECK(describe(*hit) == "k-right-crossing:2 between arcs (1,3) and (2,5)");
}

TEST_CASE("count_statistic") {
    CHECK(count_statistic(figure1_matching(), Statistic::NeighborAlignments) == 2);
    CHECK(count_statistic(figure3_partition(), Statistic::Transients) == 2);
    CHECK(count_statistic(ArcDiagram::singletons(0), Statistic::Transients) == 0);
    CHECK(count_statistic(ArcDiagram::singletons(0), Statistic::NeighborAlignments) == 0);
}

TEST_CASE("symmetry, refinement and k = 1 equivalence on all arc pairs within [8]") {
    const auto arcs = arcs_within(8);
    std::vector<PatternKind> kinds = {PatternKind::crossing(), PatternKind::nesting(),
                                      PatternKind::neighbor_alignment(), PatternKind::two_path()};
    for (auto fam : kParametric) {
        kinds.push_back({fam[0], 0});
        for (int k = 1; k <= 7; ++k) kinds.push_back({fam[1], k});
    }
    for (const Arc& a : arcs) {
        for (const Arc& b : arcs) {
            if (a == b) continue;
            for (const auto& kind : kinds) REQUIRE(matches(a, b, kind) == matches(b, a, kind));
            for (auto fam : kParametric) {
                const bool plain = matches(a, b, {fam[0], 0});
                REQUIRE(plain == matches(a, b, {fam[1], 1}));
                for (int k = 1; k <= 6; ++k) {
                    if (matches(a, b, {fam[1], k})) REQUIRE(matches(a, b, {fam[1], k + 1}));
                }
                if (plain) REQUIRE(matches(a, b, {fam[1], 7}));
            }
        }
    }
}

TEST_CASE("consecutive closers in a partial matching force a right crossing or right nesting") {
    for (int m = 2; m <= 8; ++m) {
        for (int k = 2; 2 * k <= m; ++k) {
            for_each_partial_matching(m, k, [&](const ArcDiagram& d) {
                bool consecutive = false;
                for (Vertex j = 1; j < m; ++j) {
                    if (d.role(j) == VertexRole::Closer && d.role(j + 1) == VertexRole::Closer) {
                        consecutive = true;
                    }
                }
                if (consecutive) {
                    REQUIRE_FALSE(avoids(d, {PatternKind::right_crossing(), PatternKind::right_nesting()}));
                }
            });
        }
    }
}
