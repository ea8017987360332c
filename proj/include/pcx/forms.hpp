#pragma once

#include <map>
#include <utility>
#include <vector>

#include "pcx/polynomial.hpp"

namespace pcx {

struct VectorField {
    ChartPtr chart;
    std::vector<Polynomial> comps;

    static VectorField zero(const ChartPtr& c);
    static VectorField make(const ChartPtr& c, std::vector<Polynomial> comps);

    bool is_zero() const;
    bool operator==(const VectorField& o) const;
    bool operator!=(const VectorField& o) const { return !(*this == o); }
    VectorField operator+(const VectorField& o) const;
    VectorField operator-(const VectorField& o) const;
    VectorField operator*(const Rational& s) const;
    VectorField operator-() const;

    // Directional derivative X[f].
    Polynomial apply(const Polynomial& f) const;
};

// Antisymmetric contravariant 2-tensor with polynomial entries. Only the
// upper triangle is stored; entry() hands out the signed value.
class Bivector {
public:
    explicit Bivector(ChartPtr chart) : chart_(std::move(chart)) {}

    // Full matrix input, antisymmetry enforced exactly.
    static Bivector from_matrix(const ChartPtr& chart,
                                const std::vector<std::vector<Polynomial>>& m);
    static Bivector constant(const ChartPtr& chart, const RationalMatrix& m);

    const ChartPtr& chart() const { return chart_; }
    size_t dim() const { return chart_->dim(); }

    Polynomial entry(size_t i, size_t j) const;
    void set_entry(size_t i, size_t j, const Polynomial& p); // i != j

    const std::map<std::pair<size_t, size_t>, Polynomial>& upper() const { return upper_; }

    bool is_zero() const { return upper_.empty(); }
    bool operator==(const Bivector& o) const;
    bool operator!=(const Bivector& o) const { return !(*this == o); }
    Bivector operator+(const Bivector& o) const;
    Bivector operator-(const Bivector& o) const;
    Bivector operator*(const Rational& s) const;

private:
    ChartPtr chart_;
    std::map<std::pair<size_t, size_t>, Polynomial> upper_;
};

// Alternating covariant tensor of degree 0..3 with polynomial entries,
// stored on strictly increasing index tuples.
class KForm {
public:
    KForm(ChartPtr chart, int degree);

    static KForm from_function(const Polynomial& f);
    static KForm one_form(const ChartPtr& chart, std::vector<Polynomial> comps);
    static KForm constant_two_form(const ChartPtr& chart, const RationalMatrix& m);

    int degree() const { return degree_; }
    const ChartPtr& chart() const { return chart_; }

    // Signed lookup, any index order; repeated indices give zero.
    Polynomial entry(std::vector<size_t> idx) const;
    void set_entry(std::vector<size_t> idx, const Polynomial& p); // strictly increasing

    const std::map<std::vector<size_t>, Polynomial>& entries() const { return entries_; }

    bool is_zero() const { return entries_.empty(); }
    bool operator==(const KForm& o) const;
    bool operator!=(const KForm& o) const { return !(*this == o); }
    KForm operator+(const KForm& o) const;
    KForm operator-(const KForm& o) const;
    KForm operator*(const Rational& s) const;

    Polynomial as_function() const;             // degree 0
    std::vector<Polynomial> components() const; // degree 1, dense
    RationalMatrix constant_matrix() const;     // degree 2, constant entries

private:
    ChartPtr chart_;
    int degree_;
    std::map<std::vector<size_t>, Polynomial> entries_;
};

// Alternating contravariant 3-tensor; carries e.g. the bracket of two
// bivectors.
class Trivector {
public:
    explicit Trivector(ChartPtr chart) : chart_(std::move(chart)) {}

    const ChartPtr& chart() const { return chart_; }

    Polynomial entry(size_t i, size_t j, size_t k) const; // signed
    void set_entry(size_t i, size_t j, size_t k, const Polynomial& p); // i < j < k

    const std::map<std::vector<size_t>, Polynomial>& entries() const { return entries_; }

    bool is_zero() const { return entries_.empty(); }
    bool operator==(const Trivector& o) const;
    bool operator!=(const Trivector& o) const { return !(*this == o); }

private:
    ChartPtr chart_;
    std::map<std::vector<size_t>, Polynomial> entries_;
};

} // namespace pcx
