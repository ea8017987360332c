#include "pcx/linsolve.hpp"

#include <algorithm>
#include <map>

#include "pcx/errors.hpp"

namespace pcx {

void LinearSystem::add_poly_identity(const std::vector<Polynomial>& per_unknown,
                                     const Polynomial& rhs) {
    if (per_unknown.size() != n_)
        fail("dimension_mismatch", "one polynomial per unknown required");
    std::map<Monomial, size_t> row_of;
    auto row_for = [&](const Monomial& m) {
        auto [it, inserted] = row_of.emplace(m, rows_.size());
        if (inserted) {
            rows_.emplace_back(n_, Rational(0));
            rhs_.emplace_back(0);
        }
        return it->second;
    };
    for (size_t k = 0; k < n_; ++k)
        for (const auto& [m, c] : per_unknown[k].terms())
            rows_[row_for(m)][k] = c;
    for (const auto& [m, c] : rhs.terms())
        rhs_[row_for(m)] = c;
}

void LinearSystem::add_row(std::vector<Rational> coeffs, const Rational& rhs) {
    if (coeffs.size() != n_)
        fail("dimension_mismatch", "row width does not match unknown count");
    rows_.push_back(std::move(coeffs));
    rhs_.push_back(rhs);
}

LinearSystem::Solution LinearSystem::solve() const {
    RationalMatrix aug(rows_.size(), n_ + 1);
    for (size_t i = 0; i < rows_.size(); ++i) {
        for (size_t j = 0; j < n_; ++j)
            aug(i, j) = rows_[i][j];
        aug(i, n_) = rhs_[i];
    }
    RrefResult r = rref(aug);

    Solution sol;
    sol.feasible = std::find(r.pivots.begin(), r.pivots.end(), n_) == r.pivots.end();
    if (!sol.feasible)
        return sol;

    sol.particular.assign(n_, Rational(0));
    for (size_t k = 0; k < r.pivots.size(); ++k)
        sol.particular[r.pivots[k]] = r.R(k, n_);

    std::vector<bool> is_pivot(n_, false);
    for (size_t c : r.pivots)
        is_pivot[c] = true;
    for (size_t free = 0; free < n_; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> v(n_, Rational(0));
        v[free] = 1;
        for (size_t k = 0; k < r.pivots.size(); ++k)
            v[r.pivots[k]] = -r.R(k, free);
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

std::vector<Monomial> ansatz_monomials(const ChartPtr& chart, uint32_t min_deg, uint32_t max_deg) {
    const size_t d = chart->dim();
    std::vector<Monomial> all;
    Monomial cur(d, 0);
    // Enumerate exponent vectors of total degree deg recursively, then sort.
    auto rec = [&](auto&& self, size_t pos, uint32_t remaining) -> void {
        if (pos + 1 == d) {
            cur[pos] = remaining;
            all.push_back(cur);
            return;
        }
        for (uint32_t e = 0; e <= remaining; ++e) {
            cur[pos] = e;
            self(self, pos + 1, remaining - e);
        }
        cur[pos] = 0;
    };
    for (uint32_t deg = min_deg; deg <= max_deg; ++deg)
        rec(rec, 0, deg);
    GrlexDesc desc;
    std::sort(all.begin(), all.end(), [&](const Monomial& a, const Monomial& b) {
        return desc(b, a); // ascending graded-lex
    });
    return all;
}

Polynomial from_coefficients(const ChartPtr& chart, const std::vector<Monomial>& basis,
                             const std::vector<Rational>& coeffs) {
    if (basis.size() != coeffs.size())
        fail("dimension_mismatch", "coefficient count does not match basis");
    Polynomial p(chart);
    for (size_t i = 0; i < basis.size(); ++i)
        p.add_term(basis[i], coeffs[i]);
    return p;
}

} // namespace pcx
