#pragma once

#include <stdexcept>
#include <vector>

#include "crossfree/diagram.hpp"
#include "crossfree/sequence.hpp"

namespace crossfree {

/// Input lies outside the domain class of a map. The message names the
/// violated pattern or sequence condition.
class NotInClass : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Throws NotInClass unless `m` is a partial matching avoiding 2-right
/// crossings and right nestings.
void require_P(const ArcDiagram& m);
/// Throws NotInClass unless `p` is a partition of [n], n >= 1, avoiding right crossings.
void require_CT(const ArcDiagram& p);

/// The sequence together with the opener sets seen while computing it.
/// `opener_sets[i-1]` is O(i) for i = 1..n, as ascending lists of labels in
/// the diagram with closer labels removed; O(n) holds every opener.
struct AlphaTrace {
    Sequence sequence;
    std::vector<std::vector<int>> opener_sets;
};

/// Matching in P(n+k-1,k) -> sequence in S(n,k). After each step the prefix
/// maximum is checked against i - |O(i+1)|; a mismatch throws std::logic_error.
AlphaTrace alpha_trace(const ArcDiagram& m);
Sequence alpha(const ArcDiagram& m);

/// Sequence in S(n,k) -> matching in P(n+k-1,k). Throws NotInClass for an
/// invalid sequence; checks the vacancy count against the prefix maximum at
/// every step (std::logic_error on mismatch).
ArcDiagram alpha_inv(const Sequence& x);

/// Matching in P(n+k-1,k) -> partition in CT(n,k). Neighbour alignments of
/// the matching become the transients of the partition.
ArcDiagram reduce(const ArcDiagram& m);

/// Partition in CT(n,k) -> matching in P(n+k-1,k); inverse of `reduce`.
ArcDiagram expand(const ArcDiagram& p);

}  // namespace crossfree
