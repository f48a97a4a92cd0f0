#include "crossfree/patterns.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace crossfree {

namespace {

PatternKind with_k(PatternFamily f, int k) {
    if (k < 1) {
        throw std::invalid_argument("pattern parameter k must be >= 1, got " + std::to_string(k));
    }
    return {f, k};
}

struct NamedFamily {
    std::string_view name;
    PatternFamily family;
    bool parametric;
};

constexpr NamedFamily kNames[] = {
    {"crossing", PatternFamily::Crossing, false},
    {"nesting", PatternFamily::Nesting, false},
    {"left-crossing", PatternFamily::LeftCrossing, false},
    {"right-crossing", PatternFamily::RightCrossing, false},
    {"left-nesting", PatternFamily::LeftNesting, false},
    {"right-nesting", PatternFamily::RightNesting, false},
    {"k-left-crossing", PatternFamily::KLeftCrossing, true},
    {"k-right-crossing", PatternFamily::KRightCrossing, true},
    {"k-left-nesting", PatternFamily::KLeftNesting, true},
    {"k-right-nesting", PatternFamily::KRightNesting, true},
    {"neighbor-alignment", PatternFamily::NeighborAlignment, false},
    {"two-path", PatternFamily::TwoPath, false},
};

// a.opener < b.opener assumed.
bool crosses(const Arc& a, const Arc& b) {
    return a.opener < b.opener && b.opener < a.closer && a.closer < b.closer;
}
bool nests(const Arc& a, const Arc& b) {
    return a.opener < b.opener && b.opener < b.closer && b.closer < a.closer;
}

bool matches_ordered(const Arc& a, const Arc& b, const PatternKind& kind) {
    const int left_gap = b.opener - a.opener;
    switch (kind.family) {
        case PatternFamily::Crossing: return crosses(a, b);
        case PatternFamily::Nesting: return nests(a, b);
        case PatternFamily::LeftCrossing: return crosses(a, b) && left_gap == 1;
        case PatternFamily::RightCrossing: return crosses(a, b) && b.closer == a.closer + 1;
        case PatternFamily::LeftNesting: return nests(a, b) && left_gap == 1;
        case PatternFamily::RightNesting: return nests(a, b) && a.closer == b.closer + 1;
        case PatternFamily::KLeftCrossing: return crosses(a, b) && left_gap <= kind.k;
        case PatternFamily::KRightCrossing: return crosses(a, b) && b.closer - a.closer <= kind.k;
        case PatternFamily::KLeftNesting: return nests(a, b) && left_gap <= kind.k;
        case PatternFamily::KRightNesting: return nests(a, b) && a.closer - b.closer <= kind.k;
        case PatternFamily::NeighborAlignment: return b.opener == a.closer + 1;
        case PatternFamily::TwoPath: return b.opener == a.closer;
    }
    return false;
}

}  // namespace

PatternKind PatternKind::k_left_crossing(int k) { return with_k(PatternFamily::KLeftCrossing, k); }
PatternKind PatternKind::k_right_crossing(int k) { return with_k(PatternFamily::KRightCrossing, k); }
PatternKind PatternKind::k_left_nesting(int k) { return with_k(PatternFamily::KLeftNesting, k); }
PatternKind PatternKind::k_right_nesting(int k) { return with_k(PatternFamily::KRightNesting, k); }

std::string pattern_name(const PatternKind& kind) {
    for (const auto& n : kNames) {
        if (n.family == kind.family) {
            std::string s(n.name);
            if (n.parametric) s += ":" + std::to_string(kind.k);
            return s;
        }
    }
    return "?";
}

PatternKind parse_pattern_kind(std::string_view name) {
    auto colon = name.find(':');
    std::string_view head = name.substr(0, colon);
    for (const auto& n : kNames) {
        if (n.name != head) continue;
        if (!n.parametric) {
            if (colon != std::string_view::npos) {
                throw std::invalid_argument("pattern '" + std::string(head) + "' takes no parameter");
            }
            return {n.family, 0};
        }
        if (colon == std::string_view::npos) {
            throw std::invalid_argument("pattern '" + std::string(head) + "' needs ':k'");
        }
        std::string_view tail = name.substr(colon + 1);
        int k = 0;
        auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), k);
        if (ec != std::errc{} || ptr != tail.data() + tail.size()) {
            throw std::invalid_argument("bad pattern parameter '" + std::string(tail) + "'");
        }
        return with_k(n.family, k);
    }
    throw std::invalid_argument("unknown pattern kind '" + std::string(name) + "'");
}

bool matches(const Arc& a, const Arc& b, const PatternKind& kind) noexcept {
    if (a == b) return false;
    // Alignment and 2-path are the only kinds not determined by opener order.
    if (kind.family == PatternFamily::NeighborAlignment || kind.family == PatternFamily::TwoPath) {
        return matches_ordered(a, b, kind) || matches_ordered(b, a, kind);
    }
    return a.opener < b.opener ? matches_ordered(a, b, kind) : matches_ordered(b, a, kind);
}

std::vector<ArcPair> find_patterns(const ArcDiagram& d, const PatternKind& kind) {
    std::vector<ArcPair> out;
    const auto& arcs = d.arcs();
    for (std::size_t s = 0; s < arcs.size(); ++s) {
        for (std::size_t t = s + 1; t < arcs.size(); ++t) {
            if (matches(arcs[s], arcs[t], kind)) out.emplace_back(arcs[s], arcs[t]);
        }
    }
    return out;
}

std::optional<PatternHit> first_violation(const ArcDiagram& d, std::span<const PatternKind> kinds) {
    const auto& arcs = d.arcs();
    for (const PatternKind& kind : kinds) {
        for (std::size_t s = 0; s < arcs.size(); ++s) {
            for (std::size_t t = s + 1; t < arcs.size(); ++t) {
                if (matches(arcs[s], arcs[t], kind)) return PatternHit{kind, {arcs[s], arcs[t]}};
            }
        }
    }
    return std::nullopt;
}

bool avoids(const ArcDiagram& d, std::span<const PatternKind> kinds) {
    return !first_violation(d, kinds).has_value();
}

bool avoids(const ArcDiagram& d, std::initializer_list<PatternKind> kinds) {
    return avoids(d, std::span<const PatternKind>(kinds.begin(), kinds.size()));
}

std::size_t count_statistic(const ArcDiagram& d, Statistic stat) {
    switch (stat) {
        case Statistic::NeighborAlignments:
            return find_patterns(d, PatternKind::neighbor_alignment()).size();
        case Statistic::Transients:
            return count_roles(d).transients;
    }
    return 0;
}

std::string describe(const PatternHit& hit) {
    auto arc = [](const Arc& a) {
        return "(" + std::to_string(a.opener) + "," + std::to_string(a.closer) + ")";
    };
    return pattern_name(hit.kind) + " between arcs " + arc(hit.pair.first) + " and " +
           arc(hit.pair.second);
}

}  // namespace crossfree
