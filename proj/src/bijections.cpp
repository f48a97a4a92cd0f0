#include "crossfree/bijections.hpp"

#include <algorithm>
#include <string>

#include "crossfree/patterns.hpp"

namespace crossfree {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

void require_matching(const ArcDiagram& m) {
    for (Vertex v = 1; v <= m.ground_size(); ++v) {
        if (m.role(v) == VertexRole::Transient) {
            throw NotInClass("not a partial matching: vertex " + std::to_string(v) + " is a transient");
        }
    }
}

}  // namespace

void require_P(const ArcDiagram& m) {
    require_matching(m);
    if (auto hit = first_violation(m, kMatchingForbidden)) {
        throw NotInClass("matching contains a " + describe(*hit));
    }
}

void require_CT(const ArcDiagram& p) {
    if (p.ground_size() < 1) throw NotInClass("partition must have at least one vertex");
    if (auto hit = first_violation(p, kPartitionForbidden)) {
        throw NotInClass("partition contains a " + describe(*hit));
    }
}

AlphaTrace alpha_trace(const ArcDiagram& m) {
    require_P(m);
    const int size = m.ground_size();
    const int k = static_cast<int>(m.arc_count());
    const int n = size - k + 1;

    // Labels of the non-closer vertices, in position order.
    std::vector<int> label(idx(size) + 2, 0);
    std::vector<Vertex> position(idx(n), 0);
    int next_label = 0;
    for (Vertex v = 1; v <= size; ++v) {
        if (m.role(v) != VertexRole::Closer) {
            label[idx(v)] = ++next_label;
            position[idx(next_label)] = v;
        }
    }

    // O(i) for label i is opener_set(position of i); O(n) is opener_set(size + 1).
    auto opener_set = [&](Vertex limit) {
        std::vector<int> s;
        for (const Arc& a : m.arcs()) {
            if (a.closer < limit) s.push_back(label[idx(a.opener)]);
        }
        std::sort(s.begin(), s.end());
        return s;
    };
    AlphaTrace out;
    for (int i = 1; i <= n; ++i) {
        out.opener_sets.push_back(opener_set(i < n ? position[idx(i)] : size + 1));
    }

    out.sequence.assign(1, 0);
    int prefix_max = 0;
    for (int i = 1; i <= n - 1; ++i) {
        const auto& o_here = out.opener_sets[idx(i - 1)];
        const Vertex after = position[idx(i)] + 1;
        int xi = prefix_max + 1;
        if (after <= size && m.role(after) == VertexRole::Closer) {
            const int j = label[idx(m.prev(after))];
            int rank = 0;
            for (int t = 1; t <= j; ++t) {
                if (!std::binary_search(o_here.begin(), o_here.end(), t)) ++rank;
            }
            xi = rank - 1;
        }
        out.sequence.push_back(xi);
        prefix_max = std::max(prefix_max, xi);
        const auto o_next = static_cast<int>(out.opener_sets[idx(i)].size());
        if (prefix_max != i - o_next) {
            throw std::logic_error("alpha: prefix maximum " + std::to_string(prefix_max) +
                                   " differs from i - |O(i+1)| at i = " + std::to_string(i));
        }
    }
    if (prefix_max != n - 1 - k) {
        throw std::logic_error("alpha: final maximum does not equal n-1-k");
    }
    return out;
}

Sequence alpha(const ArcDiagram& m) { return alpha_trace(m).sequence; }

ArcDiagram alpha_inv(const Sequence& x) {
    if (auto why = sequence_violation(x)) throw NotInClass("not in S: " + *why);
    const int n = static_cast<int>(x.size());

    std::vector<bool> vacant(idx(n), true);
    std::vector<Vertex> closes_after(idx(n), 0);  // original vertex whose arc closes after i
    int prefix_max = 0;
    int vacant_count = 0;
    for (int i = 1; i <= n - 1; ++i) {
        ++vacant_count;  // vertex i joins [i] as vacant
        const int xi = x[idx(i)];
        if (xi <= prefix_max) {
            int seen = 0;
            Vertex opener = 0;
            for (Vertex v = 1; v <= i; ++v) {
                if (vacant[idx(v)] && ++seen == xi + 1) {
                    opener = v;
                    break;
                }
            }
            if (opener == 0) throw std::logic_error("alpha_inv: too few vacant vertices");
            vacant[idx(opener)] = false;
            --vacant_count;
            closes_after[idx(i)] = opener;
        }
        prefix_max = std::max(prefix_max, xi);
        if (vacant_count != prefix_max) {
            throw std::logic_error("alpha_inv: vacant count " + std::to_string(vacant_count) +
                                   " differs from prefix maximum at i = " + std::to_string(i));
        }
    }

    std::vector<Vertex> placed(idx(n), 0);
    std::vector<Arc> arcs;
    Vertex cursor = 0;
    for (int i = 1; i <= n - 1; ++i) {
        placed[idx(i)] = ++cursor;
        if (closes_after[idx(i)] != 0) {
            ++cursor;
            arcs.push_back({placed[idx(closes_after[idx(i)])], cursor});
        }
    }
    return ArcDiagram::from_arcs(cursor, std::move(arcs));
}

ArcDiagram reduce(const ArcDiagram& m) {
    require_P(m);
    const int size = m.ground_size();
    if (m.arc_count() == 0) return ArcDiagram::singletons(size + 1);

    // Collapse each alignment (closer j, opener j+1): the arc leaving j+1
    // now leaves j, and j+1 disappears.
    std::vector<bool> gone(idx(size) + 1, false);
    std::vector<Vertex> source(idx(size) + 1, 0);
    for (Vertex v = 1; v <= size; ++v) source[idx(v)] = v;
    std::vector<bool> collapsed(idx(size) + 1, false);
    for (Vertex j = 1; j < size; ++j) {
        if (m.role(j) == VertexRole::Closer && m.role(j + 1) == VertexRole::Opener) {
            source[idx(j + 1)] = j;
            gone[idx(j + 1)] = true;
            collapsed[idx(j)] = true;
        }
    }

    // Remaining closers; each but the last is followed by a singleton.
    Vertex last_closer = 0;
    for (Vertex v = size; v >= 1 && last_closer == 0; --v) {
        if (m.role(v) == VertexRole::Closer && !collapsed[idx(v)]) last_closer = v;
    }
    for (Vertex v = 1; v < last_closer; ++v) {
        if (m.role(v) != VertexRole::Closer || collapsed[idx(v)]) continue;
        if (v + 1 > size || m.role(v + 1) != VertexRole::Singleton) {
            throw std::logic_error("reduce: closer " + std::to_string(v) +
                                   " is not followed by a singleton after collapsing");
        }
        gone[idx(v + 1)] = true;
    }

    std::vector<Vertex> relabel(idx(size) + 1, 0);
    Vertex cursor = 0;
    for (Vertex v = 1; v <= size; ++v) {
        if (!gone[idx(v)]) relabel[idx(v)] = ++cursor;
    }
    std::vector<Arc> arcs;
    for (const Arc& a : m.arcs()) {
        arcs.push_back({relabel[idx(source[idx(a.opener)])], relabel[idx(a.closer)]});
    }
    return ArcDiagram::from_arcs(cursor, std::move(arcs));
}

ArcDiagram expand(const ArcDiagram& p) {
    require_CT(p);
    const int n = p.ground_size();
    if (p.arc_count() == 0) return ArcDiagram::singletons(n - 1);

    Vertex last_closer = 0;
    for (Vertex v = n; v >= 1 && last_closer == 0; --v) {
        if (p.role(v) == VertexRole::Closer) last_closer = v;
    }

    // Arcs arrive at arrive[v] and leave from depart[v]; they differ only
    // for transients, which are split in two.
    std::vector<Vertex> arrive(idx(n) + 1, 0);
    std::vector<Vertex> depart(idx(n) + 1, 0);
    Vertex cursor = 0;
    for (Vertex v = 1; v <= n; ++v) {
        arrive[idx(v)] = depart[idx(v)] = ++cursor;
        switch (p.role(v)) {
            case VertexRole::Transient: depart[idx(v)] = ++cursor; break;
            case VertexRole::Closer:
                if (v != last_closer) ++cursor;
                break;
            default: break;
        }
    }
    std::vector<Arc> arcs;
    for (const Arc& a : p.arcs()) arcs.push_back({depart[idx(a.opener)], arrive[idx(a.closer)]});
    return ArcDiagram::from_arcs(cursor, std::move(arcs));
}

}  // namespace crossfree
