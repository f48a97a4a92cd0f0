#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace crossfree {

/// Candidate member of S(n,k): x_0 x_1 ... x_{n-1}.
using Sequence = std::vector<int>;

/// Checks x_0 = 0, the growth bound x_i <= max(prefix) + 1, and the descent
/// rule (x_i < max(prefix) implies x_i < x_{i-1}).
bool is_valid_S(const Sequence& x);

/// Human-readable reason for the first violated condition, or nullopt.
std::optional<std::string> sequence_violation(const Sequence& x);

/// Left-to-right maxima, counting x_0.
int lr_maxima(const Sequence& x);

/// For a valid sequence of length n, the k with x in S(n,k).
int sequence_k(const Sequence& x);

/// "0,1,1,2,0,2,1,0"
std::string format_sequence(const Sequence& x);

/// Comma separated values, or a compact digit string such as "01120210".
/// Whitespace is ignored. Throws ParseError.
Sequence parse_sequence(std::string_view text);

}  // namespace crossfree
