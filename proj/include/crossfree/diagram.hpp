#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace crossfree {

// Vertex labels are 1-based; label 0 means "no vertex".
using Vertex = int;

struct Arc {
    Vertex opener = 0;
    Vertex closer = 0;

    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

enum class VertexRole { Opener, Closer, Transient, Singleton };

enum class DiagramClass { AnyPartition, PartialMatching };

using Block = std::vector<Vertex>;
using Blocks = std::vector<Block>;

/// Raised when a diagram, block list or text form is malformed.
class InvalidDiagram : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by `parse_diagram` / `parse_sequence`; carries the byte offset of the problem.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Linear representation of a set partition: vertices 1..n on a line, arcs
/// joining consecutive elements of each block. Immutable once built.
class ArcDiagram {
public:
    ArcDiagram() = default;

    /// Validates and builds; arcs may be given in any order.
    static ArcDiagram from_arcs(int ground_size, std::vector<Arc> arcs);
    static ArcDiagram from_blocks(int ground_size, const Blocks& blocks);
    static ArcDiagram singletons(int ground_size);

    int ground_size() const noexcept { return ground_size_; }
    std::size_t arc_count() const noexcept { return arcs_.size(); }
    /// Sorted by opener.
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }

    /// Right neighbour of `v` in its block, or 0.
    Vertex next(Vertex v) const { return next_.at(check(v)); }
    /// Left neighbour of `v` in its block, or 0.
    Vertex prev(Vertex v) const { return prev_.at(check(v)); }

    VertexRole role(Vertex v) const;
    bool is_partial_matching() const noexcept;
    bool belongs_to(DiagramClass c) const noexcept;

    /// Blocks sorted by minimum element, elements ascending.
    Blocks to_blocks() const;

    friend bool operator==(const ArcDiagram& a, const ArcDiagram& b) {
        return a.ground_size_ == b.ground_size_ && a.arcs_ == b.arcs_;
    }

private:
    std::size_t check(Vertex v) const;

    int ground_size_ = 0;
    std::vector<Arc> arcs_;
    std::vector<Vertex> next_{0};
    std::vector<Vertex> prev_{0};
};

struct RoleCounts {
    std::size_t openers = 0;
    std::size_t closers = 0;
    std::size_t transients = 0;
    std::size_t singletons = 0;
};

RoleCounts count_roles(const ArcDiagram& d);

std::string_view role_name(VertexRole r) noexcept;

/// Canonical text form, e.g. "8;{1,5,6},{2,3,8},{4,7}".
std::string format_diagram(const ArcDiagram& d);

/// Accepts the canonical form with arbitrary whitespace; blocks may appear
/// in any order and must cover the ground set.
ArcDiagram parse_diagram(std::string_view text);

}  // namespace crossfree
