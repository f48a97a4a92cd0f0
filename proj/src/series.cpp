#include "crossfree/series.hpp"

#include <sstream>

namespace crossfree {

namespace {
std::size_t idx(int v) { return static_cast<std::size_t>(v); }
}  // namespace

BiSeries::BiSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    rows_.resize(idx(order) + 1);
    for (int a = 0; a <= order; ++a) rows_[idx(a)].assign(idx(a) + 1, Integer(0));
}

BiSeries BiSeries::constant(int order, Integer c) { return monomial(order, 0, 0, std::move(c)); }

BiSeries BiSeries::x(int order) { return monomial(order, 1, 0); }

BiSeries BiSeries::xy(int order) { return monomial(order, 1, 1); }

BiSeries BiSeries::monomial(int order, int a, int b, Integer c) {
    BiSeries f(order);
    if (a <= order) f.set(a, b, std::move(c));
    else if (b < 0 || b > a) throw std::invalid_argument("monomial y-degree outside 0..x-degree");
    return f;
}

Integer BiSeries::coeff(int a, int b) const {
    if (a < 0 || b < 0) throw std::out_of_range("negative degree");
    if (a > order_) {
        throw std::out_of_range("x-degree " + std::to_string(a) + " beyond truncation order " +
                                std::to_string(order_));
    }
    if (b > a) return 0;
    return rows_[idx(a)][idx(b)];
}

void BiSeries::set(int a, int b, Integer c) {
    if (a < 0 || a > order_) throw std::out_of_range("x-degree outside 0..order");
    if (b < 0 || b > a) throw std::invalid_argument("y-degree must lie in 0..x-degree");
    rows_[idx(a)][idx(b)] = std::move(c);
}

Integer BiSeries::row_sum(int a) const {
    Integer total = 0;
    for (int b = 0; b <= a; ++b) total += coeff(a, b);
    return total;
}

void BiSeries::require_same_order(const BiSeries& g) const {
    if (order_ != g.order_) {
        throw std::invalid_argument("series orders differ: " + std::to_string(order_) + " vs " +
                                    std::to_string(g.order_));
    }
}

BiSeries& BiSeries::operator+=(const BiSeries& g) {
    require_same_order(g);
    for (std::size_t a = 0; a < rows_.size(); ++a) {
        for (std::size_t b = 0; b <= a; ++b) rows_[a][b] += g.rows_[a][b];
    }
    return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& g) {
    require_same_order(g);
    for (std::size_t a = 0; a < rows_.size(); ++a) {
        for (std::size_t b = 0; b <= a; ++b) rows_[a][b] -= g.rows_[a][b];
    }
    return *this;
}

BiSeries operator*(const BiSeries& f, const BiSeries& g) {
    f.require_same_order(g);
    BiSeries h(f.order_);
    for (int a1 = 0; a1 <= f.order_; ++a1) {
        for (int b1 = 0; b1 <= a1; ++b1) {
            const Integer& c1 = f.rows_[idx(a1)][idx(b1)];
            if (c1.is_zero()) continue;
            for (int a2 = 0; a1 + a2 <= f.order_; ++a2) {
                for (int b2 = 0; b2 <= a2; ++b2) {
                    const Integer& c2 = g.rows_[idx(a2)][idx(b2)];
                    if (c2.is_zero()) continue;
                    h.rows_[idx(a1 + a2)][idx(b1 + b2)] += c1 * c2;
                }
            }
        }
    }
    return h;
}

bool operator==(const BiSeries& f, const BiSeries& g) {
    return f.order_ == g.order_ && f.rows_ == g.rows_;
}

std::string BiSeries::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (int a = 0; a <= order_; ++a) {
        for (int b = 0; b <= a; ++b) {
            const Integer& c = rows_[idx(a)][idx(b)];
            if (c.is_zero()) continue;
            if (!first) out << (c < 0 ? " - " : " + ");
            else if (c < 0) out << "-";
            first = false;
            Integer mag = c < 0 ? Integer(-c) : c;
            bool bare = a == 0 && b == 0;
            if (mag != 1 || bare) out << mag;
            if (a > 0) out << "x" << (a > 1 ? "^" + std::to_string(a) : "");
            if (b > 0) out << "y" << (b > 1 ? "^" + std::to_string(b) : "");
        }
    }
    if (first) out << "0";
    out << " + O(x^" << order_ + 1 << ")";
    return out.str();
}

BiSeries pow(const BiSeries& f, unsigned exponent) {
    BiSeries result = BiSeries::one(f.order());
    BiSeries base = f;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

BiSeries inv_unit(const BiSeries& f) {
    if (f.coeff(0, 0) != 1) throw std::invalid_argument("inv_unit needs constant term 1");
    const int order = f.order();
    BiSeries g(order);
    g.set(0, 0, 1);
    // g = 1 - (f - 1) g, solved degree by degree.
    for (int a = 1; a <= order; ++a) {
        for (int b = 0; b <= a; ++b) {
            Integer acc = 0;
            for (int a1 = 1; a1 <= a; ++a1) {
                for (int b1 = 0; b1 <= std::min(a1, b); ++b1) {
                    if (b - b1 > a - a1) continue;
                    acc += f.coeff(a1, b1) * g.coeff(a - a1, b - b1);
                }
            }
            // the a1 = 0 term of f is the constant 1, contributing g itself
            g.set(a, b, -acc);
        }
    }
    return g;
}

BiSeries rhs_series(int order) {
    if (order < 1) throw std::invalid_argument("rhs_series needs order >= 1");
    const BiSeries one = BiSeries::one(order);
    const BiSeries xy = BiSeries::xy(order);
    const BiSeries shift = one + xy;  // 1 + xy

    BiSeries total(order);
    BiSeries denominator_inv = one;  // 1 / prod_{j<n} (1 - (1+xy)^j xy)
    BiSeries shift_power = one;      // (1+xy)^{n-1}
    for (int n = 1; n <= order; ++n) {
        denominator_inv *= inv_unit(one - shift_power * xy);
        const auto binom = static_cast<unsigned>(n * (n - 1) / 2);
        total += BiSeries::monomial(order, n, 0) * pow(shift, binom) * denominator_inv;
        shift_power *= shift;
    }
    return total;
}

}  // namespace crossfree
