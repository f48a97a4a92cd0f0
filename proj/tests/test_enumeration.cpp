#include "doctest.h"

#include <algorithm>
#include <limits>
#include <set>

#include "crossfree/enumeration.hpp"
#include "crossfree/patterns.hpp"
#include "oracles.hpp"

using namespace crossfree;

namespace {

std::vector<std::string> texts(const std::vector<ClassObject>& objs) {
    std::vector<std::string> out;
    for (const auto& o : objs) out.push_back(format_object(o));
    return out;
}

}  // namespace

TEST_CASE("sequence conditions") {
    const Sequence witness = {0, 1, 1, 2, 0, 2, 1, 0};
    CHECK(is_valid_S(witness));
    CHECK(lr_maxima(witness) == 3);
    CHECK(sequence_k(witness) == 5);
    CHECK_FALSE(is_valid_S({0, 0, 2, 0}));
    CHECK(*sequence_violation({0, 0, 2, 0}) == "x_2 = 2 exceeds max(prefix) + 1 = 1");
    CHECK_FALSE(is_valid_S({0, 1, 0, 0}));
    CHECK(sequence_violation({0, 1, 0, 0})->find("x_3 = 0 is below") == 0);
    CHECK_FALSE(is_valid_S({1}));
    CHECK_FALSE(is_valid_S({}));
    CHECK(is_valid_S({0}));
    // equal to the prefix maximum is unconstrained
    CHECK(is_valid_S({0, 1, 0, 1, 1}));
}

TEST_CASE("sequence text form") {
    CHECK(parse_sequence("0,1,1,2,0,2,1,0") == Sequence{0, 1, 1, 2, 0, 2, 1, 0});
    CHECK(parse_sequence("01120210") == Sequence{0, 1, 1, 2, 0, 2, 1, 0});
    CHECK(parse_sequence(" 0, 1 ,12") == Sequence{0, 1, 12});
    CHECK(parse_sequence("0") == Sequence{0});
    CHECK(format_sequence({0, 1, 12}) == "0,1,12");
    CHECK_THROWS_AS(parse_sequence(""), ParseError);
    CHECK_THROWS_AS(parse_sequence("0,,1"), ParseError);
    CHECK_THROWS_AS(parse_sequence("0,1,"), ParseError);
    CHECK_THROWS_AS(parse_sequence("01a"), ParseError);
    CHECK_THROWS_AS(parse_sequence("0,-1"), ParseError);
}

TEST_CASE("raw generators") {
    CHECK(all_partitions(0).size() == 1);
    CHECK(all_partitions(3).size() == 5);
    CHECK(all_partitions(4).size() == 15);
    CHECK(all_partitions(8).size() == 4140);
    CHECK(all_partial_matchings(3, 1).size() == 3);
    CHECK(all_partial_matchings(4, 2).size() == 3);
    CHECK(all_partial_matchings(2, 1) == std::vector<ArcDiagram>{ArcDiagram::from_arcs(2, {{1, 2}})});
    CHECK(all_partial_matchings(3, 2).empty());

    SUBCASE("partitions agree with the oracle and come in restricted-growth order") {
        for (int n = 0; n <= 7; ++n) {
            std::set<Blocks> seen;
            std::vector<std::vector<int>> rgs;
            std::vector<std::size_t> arcs_per_k(static_cast<std::size_t>(n) + 1, 0);
            for (const ArcDiagram& d : all_partitions(n)) {
                seen.insert(d.to_blocks());
                std::vector<int> code(static_cast<std::size_t>(n));
                auto blocks = d.to_blocks();
                for (std::size_t b = 0; b < blocks.size(); ++b)
                    for (Vertex v : blocks[b]) code[static_cast<std::size_t>(v - 1)] = static_cast<int>(b);
                rgs.push_back(code);
                ++arcs_per_k[d.arc_count()];
            }
            auto expected = oracle::set_partitions(n);
            REQUIRE(seen == std::set<Blocks>(expected.begin(), expected.end()));
            REQUIRE(seen.size() == rgs.size());
            REQUIRE(std::is_sorted(rgs.begin(), rgs.end()));
        }
    }

    SUBCASE("matchings are counted by m!/(k! 2^k (m-2k)!) and sorted") {
        auto factorial = [](int v) {
            unsigned long long f = 1;
            for (int t = 2; t <= v; ++t) f *= static_cast<unsigned long long>(t);
            return f;
        };
        for (int m = 0; m <= 9; ++m) {
            for (int k = 0; 2 * k <= m; ++k) {
                auto ms = all_partial_matchings(m, k);
                REQUIRE(ms.size() == factorial(m) / (factorial(k) * (1ULL << k) * factorial(m - 2 * k)));
                REQUIRE(std::is_sorted(ms.begin(), ms.end(), [](const ArcDiagram& a, const ArcDiagram& b) {
                    return a.arcs() < b.arcs();
                }));
                REQUIRE(std::adjacent_find(ms.begin(), ms.end()) == ms.end());
                for (const auto& d : ms) REQUIRE(d.is_partial_matching());
            }
        }
    }
}

TEST_CASE("enumerate_class examples") {
    CHECK(count_row(ClassKind::S, 3, EnumMode::Pruned) == std::vector<Count>{1, 3, 1});
    CHECK(texts(enumerate_class({ClassKind::S, 3, 1})) == std::vector<std::string>{"0,0,1", "0,1,0", "0,1,1"});
    CHECK(count_class({ClassKind::CT, 4, 2}, EnumMode::Filter) == 6);
    auto ct42 = texts(enumerate_class({ClassKind::CT, 4, 2}));
    CHECK(std::find(ct42.begin(), ct42.end(), "4;{1,3},{2,4}") == ct42.end());
    CHECK(texts(enumerate_class({ClassKind::P, 2, 1})) == std::vector<std::string>{"2;{1,2}"});
    CHECK(texts(enumerate_class({ClassKind::CT, 2, 1})) == std::vector<std::string>{"2;{1,2}"});
    CHECK(count_row(ClassKind::CT, 4, EnumMode::Filter) == std::vector<Count>{1, 6, 6, 1});
    CHECK(count_class({ClassKind::P, 4, 2}, EnumMode::Filter) == 6);
    CHECK(count_class({ClassKind::P, 1, 0}, EnumMode::Pruned) == 1);

    auto s85 = texts(enumerate_class({ClassKind::S, 8, 5}, EnumMode::Pruned));
    CHECK(std::find(s85.begin(), s85.end(), "0,1,1,2,0,2,1,0") != s85.end());
}

TEST_CASE("invalid cells are rejected") {
    CHECK_THROWS_AS(count_class({ClassKind::P, 0, 0}, EnumMode::Filter), std::invalid_argument);
    CHECK_THROWS_AS(count_class({ClassKind::S, 3, 3}, EnumMode::Filter), std::invalid_argument);
    CHECK_THROWS_AS(count_class({ClassKind::CT, 3, -1}, EnumMode::Pruned), std::invalid_argument);
    CHECK_THROWS_AS(parse_class_kind("Q"), std::invalid_argument);
    CHECK_THROWS_AS(parse_mode("fast"), std::invalid_argument);
}

TEST_CASE("checked counts") {
    CHECK(checked_add(2, 3) == 5);
    CHECK_THROWS_AS(checked_add(std::numeric_limits<Count>::max(), 1), std::overflow_error);
}

TEST_CASE("every mode and class against the frozen triangle, n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        for (int k = 0; k < n; ++k) {
            const Count want = oracle::kTriangle[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
            CAPTURE(n);
            CAPTURE(k);
            for (auto kind : {ClassKind::P, ClassKind::CT, ClassKind::S}) {
                for (auto mode : {EnumMode::Filter, EnumMode::Pruned}) {
                    REQUIRE(count_class({kind, n, k}, mode) == want);
                }
            }
        }
    }
}

TEST_CASE("generators emit members only, and both modes the same set") {
    for (int n = 1; n <= 7; ++n) {
        std::size_t total = 0;
        for (int k = 0; k < n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            for (auto kind : {ClassKind::P, ClassKind::CT, ClassKind::S}) {
                auto filtered = enumerate_class({kind, n, k}, EnumMode::Filter);
                auto pruned = enumerate_class({kind, n, k}, EnumMode::Pruned);
                REQUIRE(texts(filtered) == texts(pruned));
            }
            for_each_P(n, k, EnumMode::Pruned, [&](const ArcDiagram& d) {
                REQUIRE(d.ground_size() == n + k - 1);
                REQUIRE(static_cast<int>(d.arc_count()) == k);
                REQUIRE(in_P(d));
            });
            for_each_CT(n, k, EnumMode::Pruned, [&](const ArcDiagram& d) {
                REQUIRE(d.ground_size() == n);
                REQUIRE(static_cast<int>(d.arc_count()) == k);
                REQUIRE(in_CT(d));
            });
            for_each_S(n, k, EnumMode::Pruned, [&](const Sequence& x) {
                REQUIRE(is_valid_S(x));
                REQUIRE(lr_maxima(x) == n - k);
                REQUIRE(*std::max_element(x.begin(), x.end()) == n - 1 - k);
            });
            auto brute = oracle::s_class(n, k);
            std::vector<std::string> brute_text;
            for (const auto& x : brute) brute_text.push_back(format_sequence(x));
            REQUIRE(texts(enumerate_class({ClassKind::S, n, k})) == brute_text);

            std::size_t with_k = 0;
            for_each_partition(n, [&](const ArcDiagram& d) { with_k += d.arc_count() == static_cast<std::size_t>(k); });
            total += with_k;
        }
        REQUIRE(total == all_partitions(n).size());
    }
}
