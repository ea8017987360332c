#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pcx/chart.hpp"
#include "pcx/matrix.hpp"
#include "pcx/rational.hpp"

namespace pcx {

// Exponent per chart coordinate, dense.
using Monomial = std::vector<uint32_t>;

// Graded lexicographic, highest first: larger total degree sorts first, ties
// broken by the lexicographically larger exponent vector. Map iteration order
// is the printing order.
struct GrlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

using TermMap = std::map<Monomial, Rational, GrlexDesc>;

// Sparse multivariate polynomial with exact rational coefficients over a
// fixed chart. Zero coefficients are never stored.
class Polynomial {
public:
    Polynomial() = default; // unusable placeholder, chart is null
    explicit Polynomial(ChartPtr chart) : chart_(std::move(chart)) {}

    static Polynomial zero(ChartPtr chart);
    static Polynomial constant(ChartPtr chart, const Rational& c);
    static Polynomial variable(const ChartPtr& chart, size_t i);

    const ChartPtr& chart() const { return chart_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const; // throws unless constant
    uint32_t total_degree() const;   // zero polynomial reports 0
    Rational coeff(const Monomial& m) const;

    Polynomial& add_term(const Monomial& m, const Rational& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& s) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial pow(uint32_t k) const;

private:
    ChartPtr chart_;
    TermMap terms_;
};

Polynomial diff(const Polynomial& p, size_t var);

Rational eval(const Polynomial& p, const std::vector<Rational>& point);

// Reinterpret the exponent vectors over another chart of equal dimension.
Polynomial rename_chart(const Polynomial& p, const ChartPtr& to);

// Substitute x := A*y where x are the coordinates of p's chart and y those of
// ychart; A maps y-coordinates to x-coordinates.
Polynomial compose_linear(const Polynomial& p, const RationalMatrix& A, const ChartPtr& ychart);

// Grammar: expr := term (('+'|'-') term)*, term := factor ('*' factor)*,
// factor := base ('^' uint)?, base := rational | coordinate | '(' expr ')',
// rational := '-'? uint ('/' uint)?. No implicit multiplication. Errors carry
// the byte offset; unknown coordinates are named.
Polynomial parse_polynomial(const std::string& text, const ChartPtr& chart);

// Terms in graded-lex order separated by ' + '/' - ', coefficient folded into
// the leading term, factor order follows the chart, unit coefficients and
// first powers elided. Round-trips through parse_polynomial.
std::string to_string(const Polynomial& p);

} // namespace pcx
