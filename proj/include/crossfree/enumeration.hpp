#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "crossfree/diagram.hpp"
#include "crossfree/sequence.hpp"

namespace crossfree {

/// Object counts. Arithmetic on counts goes through `checked_add`, which
/// throws std::overflow_error instead of wrapping.
using Count = std::uint64_t;
Count checked_add(Count a, Count b);

enum class ClassKind { P, CT, S };

/// One cell of the three equinumerous families. For P the objects are
/// matchings on [n+k-1] with k arcs.
struct ClassId {
    ClassKind kind = ClassKind::S;
    int n = 1;
    int k = 0;

    /// Throws std::invalid_argument unless n >= 1 and 0 <= k <= n-1.
    void validate() const;
    friend bool operator==(const ClassId&, const ClassId&) = default;
};

std::string_view class_name(ClassKind kind) noexcept;
ClassKind parse_class_kind(std::string_view name);

enum class EnumMode { Filter, Pruned };
std::string_view mode_name(EnumMode mode) noexcept;
EnumMode parse_mode(std::string_view name);

using DiagramVisitor = std::function<void(const ArcDiagram&)>;
using SequenceVisitor = std::function<void(const Sequence&)>;

/// All Bell(n) set partitions of [n] in restricted-growth-string order.
void for_each_partition(int n, const DiagramVisitor& visit);
std::vector<ArcDiagram> all_partitions(int n);

/// All partial matchings of [m] with k arcs, in lexicographic order of their
/// sorted arc lists. Nothing is produced when 2k > m.
void for_each_partial_matching(int m, int k, const DiagramVisitor& visit);
std::vector<ArcDiagram> all_partial_matchings(int m, int k);

/// Filter mode runs the raw generator through the class predicate; pruned
/// mode backtracks and never extends a prefix that already holds a forbidden
/// pattern. Both produce the same set; the order is the canonical one except
/// for pruned P, which scans positions left to right.
void for_each_P(int n, int k, EnumMode mode, const DiagramVisitor& visit);
void for_each_CT(int n, int k, EnumMode mode, const DiagramVisitor& visit);
void for_each_S(int n, int k, EnumMode mode, const SequenceVisitor& visit);

/// Class membership predicates, independent of the generators.
bool in_P(const ArcDiagram& d);
bool in_CT(const ArcDiagram& d);

using ClassObject = std::variant<ArcDiagram, Sequence>;

/// Every object of the cell, in canonical order regardless of mode.
std::vector<ClassObject> enumerate_class(const ClassId& c, EnumMode mode = EnumMode::Filter);
std::string format_object(const ClassObject& obj);

Count count_class(const ClassId& c, EnumMode mode);
/// Counts for k = 0..n-1.
std::vector<Count> count_row(ClassKind kind, int n, EnumMode mode);

}  // namespace crossfree
