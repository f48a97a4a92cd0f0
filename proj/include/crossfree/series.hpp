#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace crossfree {

using Integer = boost::multiprecision::cpp_int;

/// Truncated power series in x and y with exact integer coefficients,
/// keeping x-degrees 0..order. Only monomials x^a y^b with b <= a are
/// representable; the generators 1, x and xy stay inside that triangle
/// under sums and products.
class BiSeries {
public:
    explicit BiSeries(int order);

    static BiSeries zero(int order) { return BiSeries(order); }
    static BiSeries constant(int order, Integer c);
    static BiSeries one(int order) { return constant(order, 1); }
    static BiSeries x(int order);
    static BiSeries xy(int order);
    /// c * x^a y^b (zero when a exceeds the order). Throws if b > a.
    static BiSeries monomial(int order, int a, int b, Integer c = 1);

    int order() const noexcept { return order_; }

    /// Coefficient of x^a y^b. Throws std::out_of_range when a > order
    /// (the value is unknown there); 0 whenever b > a.
    Integer coeff(int a, int b) const;
    void set(int a, int b, Integer c);

    /// Sum of the coefficients of x^a, i.e. the y = 1 specialisation of row a.
    Integer row_sum(int a) const;

    BiSeries& operator+=(const BiSeries& g);
    BiSeries& operator-=(const BiSeries& g);
    friend BiSeries operator+(BiSeries f, const BiSeries& g) { return f += g; }
    friend BiSeries operator-(BiSeries f, const BiSeries& g) { return f -= g; }
    friend BiSeries operator*(const BiSeries& f, const BiSeries& g);
    BiSeries& operator*=(const BiSeries& g) { return *this = *this * g; }

    friend bool operator==(const BiSeries& f, const BiSeries& g);

    std::string to_string() const;

private:
    void require_same_order(const BiSeries& g) const;

    int order_;
    // rows_[a][b] holds the coefficient of x^a y^b, b = 0..a.
    std::vector<std::vector<Integer>> rows_;
};

BiSeries pow(const BiSeries& f, unsigned exponent);

/// Multiplicative inverse of a series with constant term 1.
BiSeries inv_unit(const BiSeries& f);

/// sum_{n>=1} x^n (1+xy)^{n choose 2} / prod_{j=0}^{n-1} (1 - (1+xy)^j xy),
/// truncated at x-degree `order`. Only the summands n <= order contribute.
BiSeries rhs_series(int order);

}  // namespace crossfree
