#include "crossfree/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "crossfree/diagram.hpp"

namespace crossfree {

std::optional<std::string> sequence_violation(const Sequence& x) {
    if (x.empty()) return "sequence is empty";
    if (x[0] != 0) return "x_0 = " + std::to_string(x[0]) + " but must be 0";
    int prefix_max = 0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        const std::string at = "x_" + std::to_string(i) + " = " + std::to_string(x[i]);
        if (x[i] < 0) return at + " is negative";
        if (x[i] > prefix_max + 1) {
            return at + " exceeds max(prefix) + 1 = " + std::to_string(prefix_max + 1);
        }
        if (x[i] < prefix_max && x[i] >= x[i - 1]) {
            return at + " is below max(prefix) = " + std::to_string(prefix_max) +
                   " but not below x_" + std::to_string(i - 1) + " = " + std::to_string(x[i - 1]);
        }
        prefix_max = std::max(prefix_max, x[i]);
    }
    return std::nullopt;
}

bool is_valid_S(const Sequence& x) { return !sequence_violation(x).has_value(); }

int lr_maxima(const Sequence& x) {
    if (x.empty()) return 0;
    int count = 1;
    int prefix_max = x[0];
    for (std::size_t i = 1; i < x.size(); ++i) {
        if (x[i] > prefix_max) {
            ++count;
            prefix_max = x[i];
        }
    }
    return count;
}

int sequence_k(const Sequence& x) { return static_cast<int>(x.size()) - lr_maxima(x); }

std::string format_sequence(const Sequence& x) {
    std::string s;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(x[i]);
    }
    return s;
}

Sequence parse_sequence(std::string_view text) {
    std::string compact;
    std::vector<std::size_t> origin;
    for (std::size_t p = 0; p < text.size(); ++p) {
        if (std::isspace(static_cast<unsigned char>(text[p]))) continue;
        compact += text[p];
        origin.push_back(p);
    }
    if (compact.empty()) throw ParseError("empty sequence", 0);

    Sequence out;
    if (compact.find(',') == std::string::npos) {
        for (std::size_t p = 0; p < compact.size(); ++p) {
            if (!std::isdigit(static_cast<unsigned char>(compact[p]))) {
                throw ParseError("expected a digit", origin[p]);
            }
            out.push_back(compact[p] - '0');
        }
        return out;
    }
    std::size_t p = 0;
    for (;;) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(compact.data() + p, compact.data() + compact.size(), value);
        std::size_t where = p < origin.size() ? origin[p] : text.size();
        if (ec != std::errc{} || value < 0) throw ParseError("expected a non-negative integer", where);
        p = static_cast<std::size_t>(ptr - compact.data());
        out.push_back(value);
        if (p == compact.size()) break;
        if (compact[p] != ',') throw ParseError("expected ','", origin[p]);
        ++p;
    }
    return out;
}

}  // namespace crossfree
