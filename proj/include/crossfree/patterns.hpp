#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crossfree/diagram.hpp"

namespace crossfree {

enum class PatternFamily {
    Crossing,
    Nesting,
    LeftCrossing,
    RightCrossing,
    LeftNesting,
    RightNesting,
    KLeftCrossing,
    KRightCrossing,
    KLeftNesting,
    KRightNesting,
    NeighborAlignment,
    TwoPath,
};

/// A neighbour pattern on a pair of arcs. `k` is only meaningful for the
/// four K* families and must be >= 1 there.
struct PatternKind {
    PatternFamily family = PatternFamily::Crossing;
    int k = 0;

    static PatternKind crossing() { return {PatternFamily::Crossing}; }
    static PatternKind nesting() { return {PatternFamily::Nesting}; }
    static PatternKind left_crossing() { return {PatternFamily::LeftCrossing}; }
    static PatternKind right_crossing() { return {PatternFamily::RightCrossing}; }
    static PatternKind left_nesting() { return {PatternFamily::LeftNesting}; }
    static PatternKind right_nesting() { return {PatternFamily::RightNesting}; }
    static PatternKind k_left_crossing(int k);
    static PatternKind k_right_crossing(int k);
    static PatternKind k_left_nesting(int k);
    static PatternKind k_right_nesting(int k);
    static PatternKind neighbor_alignment() { return {PatternFamily::NeighborAlignment}; }
    static PatternKind two_path() { return {PatternFamily::TwoPath}; }

    friend bool operator==(const PatternKind&, const PatternKind&) = default;
};

/// Stable names: "right-crossing", "k-right-crossing:2", "neighbor-alignment", ...
std::string pattern_name(const PatternKind& kind);
PatternKind parse_pattern_kind(std::string_view name);

/// Unordered in its arguments.
bool matches(const Arc& a, const Arc& b, const PatternKind& kind) noexcept;

using ArcPair = std::pair<Arc, Arc>;

/// Each matching pair once, first arc having the smaller opener, sorted
/// lexicographically by (first opener, second opener).
std::vector<ArcPair> find_patterns(const ArcDiagram& d, const PatternKind& kind);

bool avoids(const ArcDiagram& d, std::span<const PatternKind> kinds);
bool avoids(const ArcDiagram& d, std::initializer_list<PatternKind> kinds);

/// First offending pair over `kinds` (in the order given), if any.
struct PatternHit {
    PatternKind kind;
    ArcPair pair;
};
std::optional<PatternHit> first_violation(const ArcDiagram& d, std::span<const PatternKind> kinds);

enum class Statistic { NeighborAlignments, Transients };

std::size_t count_statistic(const ArcDiagram& d, Statistic stat);

/// The forbidden sets of the two diagram classes.
inline constexpr PatternKind kMatchingForbidden[] = {
    {PatternFamily::KRightCrossing, 2},
    {PatternFamily::RightNesting, 0},
};
inline constexpr PatternKind kPartitionForbidden[] = {
    {PatternFamily::RightCrossing, 0},
};

std::string describe(const PatternHit& hit);

}  // namespace crossfree
