#include "crossfree/enumeration.hpp"

#include <algorithm>
#include <stdexcept>

#include "crossfree/patterns.hpp"

namespace crossfree {

Count checked_add(Count a, Count b) {
    Count out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("count overflow");
    return out;
}

void ClassId::validate() const {
    if (n < 1 || k < 0 || k > n - 1) {
        throw std::invalid_argument("invalid cell " + std::string(class_name(kind)) + "(n=" +
                                    std::to_string(n) + ", k=" + std::to_string(k) +
                                    "): need n >= 1 and 0 <= k <= n-1");
    }
}

std::string_view class_name(ClassKind kind) noexcept {
    switch (kind) {
        case ClassKind::P: return "P";
        case ClassKind::CT: return "CT";
        case ClassKind::S: return "S";
    }
    return "?";
}

ClassKind parse_class_kind(std::string_view name) {
    if (name == "P") return ClassKind::P;
    if (name == "CT") return ClassKind::CT;
    if (name == "S") return ClassKind::S;
    throw std::invalid_argument("unknown class '" + std::string(name) + "' (expected P, CT or S)");
}

std::string_view mode_name(EnumMode mode) noexcept {
    return mode == EnumMode::Filter ? "filter" : "pruned";
}

EnumMode parse_mode(std::string_view name) {
    if (name == "filter") return EnumMode::Filter;
    if (name == "pruned") return EnumMode::Pruned;
    throw std::invalid_argument("unknown mode '" + std::string(name) + "' (expected filter or pruned)");
}

bool in_P(const ArcDiagram& d) { return d.is_partial_matching() && avoids(d, kMatchingForbidden); }

bool in_CT(const ArcDiagram& d) { return avoids(d, kPartitionForbidden); }

namespace {

// Restricted-growth scan over positions 1..n. Position p either joins an
// existing block (arc from the block's current last element) or opens a new
// one. With `target_blocks` set, only partitions with that many blocks are
// produced; with `forbid_right_crossing`, arcs that would close one position
// after a crossing arc are skipped.
class PartitionScan {
public:
    PartitionScan(int n, int target_blocks, bool forbid_right_crossing, const DiagramVisitor& visit)
        : n_(n),
          target_(target_blocks),
          forbid_(forbid_right_crossing),
          visit_(visit),
          ends_(static_cast<std::size_t>(n) + 2, 0) {}

    void run() { step(1); }

private:
    void step(int p) {
        if (p > n_) {
            if (target_ < 0 || static_cast<int>(last_.size()) == target_) {
                visit_(ArcDiagram::from_arcs(n_, arcs_));
            }
            return;
        }
        const int blocks = static_cast<int>(last_.size());
        if (target_ < 0 || p - blocks <= n_ - target_) {
            for (int b = 0; b < blocks; ++b) {
                const Vertex l = last_[static_cast<std::size_t>(b)];
                const Vertex prev_start = ends_[static_cast<std::size_t>(p - 1)];
                if (forbid_ && prev_start != 0 && prev_start < l && l < p - 1) continue;
                arcs_.push_back({l, p});
                ends_[static_cast<std::size_t>(p)] = l;
                last_[static_cast<std::size_t>(b)] = p;
                step(p + 1);
                last_[static_cast<std::size_t>(b)] = l;
                ends_[static_cast<std::size_t>(p)] = 0;
                arcs_.pop_back();
            }
        }
        if (target_ < 0 || blocks + 1 <= target_) {
            last_.push_back(p);
            step(p + 1);
            last_.pop_back();
        }
    }

    int n_;
    int target_;
    bool forbid_;
    const DiagramVisitor& visit_;
    std::vector<Vertex> ends_;  // ends_[p] = opener of the arc closing at p, or 0
    std::vector<Vertex> last_;
    std::vector<Arc> arcs_;
};

// Decides the smallest undecided vertex first: paired with each later free
// vertex in ascending order, then left single. This yields arc lists in
// lexicographic order.
class MatchingLex {
public:
    MatchingLex(int m, int k, const DiagramVisitor& visit)
        : m_(m), k_(k), visit_(visit), used_(static_cast<std::size_t>(m) + 1, false) {}

    void run() { step(1, 0); }

private:
    void step(int v, int singles) {
        while (v <= m_ && used_[static_cast<std::size_t>(v)]) ++v;
        if (v > m_) {
            if (static_cast<int>(arcs_.size()) == k_) visit_(ArcDiagram::from_arcs(m_, arcs_));
            return;
        }
        used_[static_cast<std::size_t>(v)] = true;
        if (static_cast<int>(arcs_.size()) < k_) {
            for (int w = v + 1; w <= m_; ++w) {
                if (used_[static_cast<std::size_t>(w)]) continue;
                used_[static_cast<std::size_t>(w)] = true;
                arcs_.push_back({v, w});
                step(v + 1, singles);
                arcs_.pop_back();
                used_[static_cast<std::size_t>(w)] = false;
            }
        }
        if (singles < m_ - 2 * k_) step(v + 1, singles + 1);
        used_[static_cast<std::size_t>(v)] = false;
    }

    int m_;
    int k_;
    const DiagramVisitor& visit_;
    std::vector<bool> used_;
    std::vector<Arc> arcs_;
};

// Left-to-right scan for P: each position is a singleton, a new opener, or
// the closer of a pending arc. A closer is never placed directly after
// another closer (that pair would be a right crossing or right nesting) nor
// two positions after a closer whose arc it would cross.
class MatchingScan {
public:
    MatchingScan(int m, int k, const DiagramVisitor& visit)
        : m_(m), k_(k), visit_(visit), closes_(static_cast<std::size_t>(m) + 1, 0) {}

    void run() { step(1); }

private:
    bool feasible(std::size_t pending, int opened, int remaining) const {
        return static_cast<int>(pending) + 2 * (k_ - opened) <= remaining;
    }

    void step(int p) {
        if (p > m_) {
            if (pending_.empty() && opened_ == k_) visit_(ArcDiagram::from_arcs(m_, arcs_));
            return;
        }
        const int remaining = m_ - p;
        if (feasible(pending_.size(), opened_, remaining)) step(p + 1);

        if (opened_ < k_ && feasible(pending_.size() + 1, opened_ + 1, remaining)) {
            pending_.push_back(p);
            ++opened_;
            step(p + 1);
            --opened_;
            pending_.pop_back();
        }

        if (pending_.empty() || (p >= 2 && closes_[static_cast<std::size_t>(p - 1)] != 0)) return;
        if (!feasible(pending_.size() - 1, opened_, remaining)) return;
        const Vertex two_back = p >= 3 ? closes_[static_cast<std::size_t>(p - 2)] : 0;
        for (std::size_t idx = 0; idx < pending_.size(); ++idx) {
            const Vertex o = pending_[idx];
            if (two_back != 0 && two_back < o && o < p - 2) continue;
            pending_.erase(pending_.begin() + static_cast<std::ptrdiff_t>(idx));
            closes_[static_cast<std::size_t>(p)] = o;
            arcs_.push_back({o, p});
            step(p + 1);
            arcs_.pop_back();
            closes_[static_cast<std::size_t>(p)] = 0;
            pending_.insert(pending_.begin() + static_cast<std::ptrdiff_t>(idx), o);
        }
    }

    int m_;
    int k_;
    const DiagramVisitor& visit_;
    std::vector<Vertex> closes_;
    std::vector<Vertex> pending_;
    std::vector<Arc> arcs_;
    int opened_ = 0;
};

// Sequences with x_0 = 0 and x_i <= max(prefix) + 1. Pruned mode also
// enforces the descent rule and the target number of left-to-right maxima
// while extending.
class SequenceScan {
public:
    SequenceScan(int n, int k, bool pruned, const SequenceVisitor& visit)
        : n_(n), target_lr_(n - k), pruned_(pruned), visit_(visit) {}

    void run() {
        x_.assign(1, 0);
        step(1, 0, 1);
    }

private:
    void step(int i, int prefix_max, int lr) {
        if (i == n_) {
            if (pruned_ || (lr == target_lr_ && is_valid_S(x_))) visit_(x_);
            return;
        }
        const int remaining = n_ - 1 - i;
        for (int v = 0; v <= prefix_max + 1; ++v) {
            const bool is_max = v > prefix_max;
            const int next_lr = lr + (is_max ? 1 : 0);
            if (pruned_) {
                if (v < prefix_max && v >= x_.back()) continue;
                if (next_lr > target_lr_ || next_lr + remaining < target_lr_) continue;
            }
            x_.push_back(v);
            step(i + 1, std::max(prefix_max, v), next_lr);
            x_.pop_back();
        }
    }

    int n_;
    int target_lr_;
    bool pruned_;
    const SequenceVisitor& visit_;
    Sequence x_;
};

}  // namespace

void for_each_partition(int n, const DiagramVisitor& visit) {
    if (n < 0) throw std::invalid_argument("negative ground size");
    PartitionScan(n, -1, false, visit).run();
}

std::vector<ArcDiagram> all_partitions(int n) {
    std::vector<ArcDiagram> out;
    for_each_partition(n, [&](const ArcDiagram& d) { out.push_back(d); });
    return out;
}

void for_each_partial_matching(int m, int k, const DiagramVisitor& visit) {
    if (m < 0 || k < 0) throw std::invalid_argument("negative matching parameters");
    if (2 * k > m) return;
    MatchingLex(m, k, visit).run();
}

std::vector<ArcDiagram> all_partial_matchings(int m, int k) {
    std::vector<ArcDiagram> out;
    for_each_partial_matching(m, k, [&](const ArcDiagram& d) { out.push_back(d); });
    return out;
}

void for_each_P(int n, int k, EnumMode mode, const DiagramVisitor& visit) {
    ClassId{ClassKind::P, n, k}.validate();
    const int m = n + k - 1;
    if (mode == EnumMode::Pruned) {
        MatchingScan(m, k, visit).run();
        return;
    }
    for_each_partial_matching(m, k, [&](const ArcDiagram& d) {
        if (avoids(d, kMatchingForbidden)) visit(d);
    });
}

void for_each_CT(int n, int k, EnumMode mode, const DiagramVisitor& visit) {
    ClassId{ClassKind::CT, n, k}.validate();
    if (mode == EnumMode::Pruned) {
        PartitionScan(n, n - k, true, visit).run();
        return;
    }
    for_each_partition(n, [&](const ArcDiagram& d) {
        if (static_cast<int>(d.arc_count()) == k && avoids(d, kPartitionForbidden)) visit(d);
    });
}

void for_each_S(int n, int k, EnumMode mode, const SequenceVisitor& visit) {
    ClassId{ClassKind::S, n, k}.validate();
    SequenceScan(n, k, mode == EnumMode::Pruned, visit).run();
}

std::vector<ClassObject> enumerate_class(const ClassId& c, EnumMode mode) {
    c.validate();
    std::vector<ClassObject> out;
    switch (c.kind) {
        case ClassKind::P: {
            std::vector<ArcDiagram> ds;
            for_each_P(c.n, c.k, mode, [&](const ArcDiagram& d) { ds.push_back(d); });
            if (mode == EnumMode::Pruned) {
                std::sort(ds.begin(), ds.end(), [](const ArcDiagram& a, const ArcDiagram& b) {
                    return a.arcs() < b.arcs();
                });
            }
            out.assign(ds.begin(), ds.end());
            break;
        }
        case ClassKind::CT:
            for_each_CT(c.n, c.k, mode, [&](const ArcDiagram& d) { out.emplace_back(d); });
            break;
        case ClassKind::S:
            for_each_S(c.n, c.k, mode, [&](const Sequence& x) { out.emplace_back(x); });
            break;
    }
    return out;
}

std::string format_object(const ClassObject& obj) {
    if (const auto* d = std::get_if<ArcDiagram>(&obj)) return format_diagram(*d);
    return format_sequence(std::get<Sequence>(obj));
}

Count count_class(const ClassId& c, EnumMode mode) {
    c.validate();
    Count total = 0;
    auto bump_d = [&](const ArcDiagram&) { total = checked_add(total, 1); };
    auto bump_s = [&](const Sequence&) { total = checked_add(total, 1); };
    switch (c.kind) {
        case ClassKind::P: for_each_P(c.n, c.k, mode, bump_d); break;
        case ClassKind::CT: for_each_CT(c.n, c.k, mode, bump_d); break;
        case ClassKind::S: for_each_S(c.n, c.k, mode, bump_s); break;
    }
    return total;
}

std::vector<Count> count_row(ClassKind kind, int n, EnumMode mode) {
    std::vector<Count> row;
    for (int k = 0; k < n; ++k) row.push_back(count_class({kind, n, k}, mode));
    return row;
}

}  // namespace crossfree
