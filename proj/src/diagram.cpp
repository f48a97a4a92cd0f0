#include "crossfree/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace crossfree {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)),
      position_(position) {}

std::size_t ArcDiagram::check(Vertex v) const {
    if (v < 1 || v > ground_size_) {
        throw InvalidDiagram("vertex " + std::to_string(v) + " outside [1," +
                             std::to_string(ground_size_) + "]");
    }
    return static_cast<std::size_t>(v);
}

ArcDiagram ArcDiagram::from_arcs(int ground_size, std::vector<Arc> arcs) {
    if (ground_size < 0) {
        throw InvalidDiagram("negative ground size");
    }
    ArcDiagram d;
    d.ground_size_ = ground_size;
    d.next_.assign(static_cast<std::size_t>(ground_size) + 1, 0);
    d.prev_.assign(static_cast<std::size_t>(ground_size) + 1, 0);
    for (const Arc& a : arcs) {
        if (a.opener < 1 || a.closer > ground_size || a.opener >= a.closer) {
            throw InvalidDiagram("malformed arc (" + std::to_string(a.opener) + "," +
                                 std::to_string(a.closer) + ") on ground size " +
                                 std::to_string(ground_size));
        }
        auto i = static_cast<std::size_t>(a.opener);
        auto j = static_cast<std::size_t>(a.closer);
        if (d.next_[i] != 0) {
            throw InvalidDiagram("vertex " + std::to_string(a.opener) + " opens two arcs");
        }
        if (d.prev_[j] != 0) {
            throw InvalidDiagram("vertex " + std::to_string(a.closer) + " closes two arcs");
        }
        d.next_[i] = a.closer;
        d.prev_[j] = a.opener;
    }
    std::sort(arcs.begin(), arcs.end());
    d.arcs_ = std::move(arcs);
    return d;
}

ArcDiagram ArcDiagram::from_blocks(int ground_size, const Blocks& blocks) {
    if (ground_size < 0) {
        throw InvalidDiagram("negative ground size");
    }
    std::vector<bool> seen(static_cast<std::size_t>(ground_size) + 1, false);
    std::vector<Arc> arcs;
    for (const Block& block : blocks) {
        if (block.empty()) {
            throw InvalidDiagram("empty block");
        }
        Block sorted = block;
        std::sort(sorted.begin(), sorted.end());
        for (Vertex v : sorted) {
            if (v < 1 || v > ground_size) {
                throw InvalidDiagram("label " + std::to_string(v) + " out of range");
            }
            if (seen[static_cast<std::size_t>(v)]) {
                throw InvalidDiagram("label " + std::to_string(v) + " appears twice");
            }
            seen[static_cast<std::size_t>(v)] = true;
        }
        for (std::size_t t = 1; t < sorted.size(); ++t) {
            arcs.push_back({sorted[t - 1], sorted[t]});
        }
    }
    for (int v = 1; v <= ground_size; ++v) {
        if (!seen[static_cast<std::size_t>(v)]) {
            throw InvalidDiagram("label " + std::to_string(v) + " not covered by any block");
        }
    }
    return from_arcs(ground_size, std::move(arcs));
}

ArcDiagram ArcDiagram::singletons(int ground_size) { return from_arcs(ground_size, {}); }

VertexRole ArcDiagram::role(Vertex v) const {
    auto i = check(v);
    bool in = prev_[i] != 0;
    bool out = next_[i] != 0;
    if (in && out) return VertexRole::Transient;
    if (out) return VertexRole::Opener;
    if (in) return VertexRole::Closer;
    return VertexRole::Singleton;
}

bool ArcDiagram::is_partial_matching() const noexcept {
    for (std::size_t v = 1; v < next_.size(); ++v) {
        if (next_[v] != 0 && prev_[v] != 0) return false;
    }
    return true;
}

bool ArcDiagram::belongs_to(DiagramClass c) const noexcept {
    return c == DiagramClass::AnyPartition || is_partial_matching();
}

Blocks ArcDiagram::to_blocks() const {
    Blocks out;
    for (Vertex v = 1; v <= ground_size_; ++v) {
        if (prev_[static_cast<std::size_t>(v)] != 0) continue;
        Block b;
        for (Vertex u = v; u != 0; u = next_[static_cast<std::size_t>(u)]) b.push_back(u);
        out.push_back(std::move(b));
    }
    return out;
}

RoleCounts count_roles(const ArcDiagram& d) {
    RoleCounts c;
    for (Vertex v = 1; v <= d.ground_size(); ++v) {
        switch (d.role(v)) {
            case VertexRole::Opener: ++c.openers; break;
            case VertexRole::Closer: ++c.closers; break;
            case VertexRole::Transient: ++c.transients; break;
            case VertexRole::Singleton: ++c.singletons; break;
        }
    }
    return c;
}

std::string_view role_name(VertexRole r) noexcept {
    switch (r) {
        case VertexRole::Opener: return "opener";
        case VertexRole::Closer: return "closer";
        case VertexRole::Transient: return "transient";
        case VertexRole::Singleton: return "singleton";
    }
    return "?";
}

std::string format_diagram(const ArcDiagram& d) {
    std::string s = std::to_string(d.ground_size()) + ";";
    bool first_block = true;
    for (const Block& b : d.to_blocks()) {
        if (!first_block) s += ',';
        first_block = false;
        s += '{';
        for (std::size_t t = 0; t < b.size(); ++t) {
            if (t) s += ',';
            s += std::to_string(b[t]);
        }
        s += '}';
    }
    return s;
}

namespace {

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    int number() {
        skip_ws();
        int value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc{}) fail("expected a non-negative integer");
        if (value < 0) fail("expected a non-negative integer");
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return value;
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
    std::size_t position() const { return pos_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

ArcDiagram parse_diagram(std::string_view text) {
    Scanner sc(text);
    int n = sc.number();
    sc.expect(';');
    Blocks blocks;
    if (!sc.at_end()) {
        for (;;) {
            sc.expect('{');
            Block b;
            b.push_back(sc.number());
            while (sc.peek(',')) {
                sc.expect(',');
                b.push_back(sc.number());
            }
            sc.expect('}');
            blocks.push_back(std::move(b));
            if (sc.at_end()) break;
            sc.expect(',');
        }
    }
    try {
        return ArcDiagram::from_blocks(n, blocks);
    } catch (const InvalidDiagram& e) {
        throw ParseError(e.what(), sc.position());
    }
}

}  // namespace crossfree
