#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crossfree/enumeration.hpp"
#include "crossfree/series.hpp"

namespace crossfree {

struct VerifyCell {
    int n = 0;
    int k = 0;
    Count p = 0;
    Count s = 0;
    Count ct = 0;
    Integer gf = 0;

    bool agree() const { return Integer(p) == gf && Integer(s) == gf && Integer(ct) == gf; }
};

struct VerifyReport {
    std::vector<VerifyCell> cells;  // ascending (n, k)
    std::size_t mismatches = 0;
    std::optional<VerifyCell> first_mismatch;
    double wall_seconds = 0.0;

    bool ok() const { return mismatches == 0; }
};

struct VerifyOptions {
    int max_n = 7;
    std::optional<int> max_k;
    EnumMode mode = EnumMode::Pruned;
    unsigned workers = 1;
};

/// Computes the four numbers of every cell 1 <= n <= max_n, 0 <= k <= n-1
/// (k capped by max_k) independently: P by enumeration in the chosen mode,
/// S by sequence enumeration, CT by filtering all partitions, and the series
/// coefficient. Cells are spread over `workers` threads; the report order
/// does not depend on scheduling.
VerifyReport verify(const VerifyOptions& options);

/// {"n":4,"k":2,"P":6,"S":6,"CT":6,"gf":6,"ok":true}
std::string cell_json(const VerifyCell& cell);

}  // namespace crossfree
