#include "pcx/forms.hpp"

#include <algorithm>

#include "pcx/errors.hpp"

namespace pcx {

namespace {

// Sorts idx in place, returns the permutation sign, 0 on repeats.
int sort_sign(std::vector<size_t>& idx) {
    int sign = 1;
    for (size_t i = 1; i < idx.size(); ++i)
        for (size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j])
                return 0;
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    return sign;
}

} // namespace

VectorField VectorField::zero(const ChartPtr& c) {
    return {c, std::vector<Polynomial>(c->dim(), Polynomial::zero(c))};
}

VectorField VectorField::make(const ChartPtr& c, std::vector<Polynomial> comps) {
    if (comps.size() != c->dim())
        fail("dimension_mismatch", "vector field needs one component per coordinate");
    for (const auto& p : comps)
        require_same_chart(c, p.chart(), "vector field component");
    return {c, std::move(comps)};
}

bool VectorField::is_zero() const {
    return std::all_of(comps.begin(), comps.end(), [](const Polynomial& p) { return p.is_zero(); });
}

bool VectorField::operator==(const VectorField& o) const {
    require_same_chart(chart, o.chart, "vector field comparison");
    return comps == o.comps;
}

VectorField VectorField::operator+(const VectorField& o) const {
    require_same_chart(chart, o.chart, "vector field addition");
    VectorField r = *this;
    for (size_t i = 0; i < comps.size(); ++i)
        r.comps[i] += o.comps[i];
    return r;
}

VectorField VectorField::operator-(const VectorField& o) const {
    return *this + (o * Rational(-1));
}

VectorField VectorField::operator*(const Rational& s) const {
    VectorField r = *this;
    for (auto& c : r.comps)
        c = c * s;
    return r;
}

VectorField VectorField::operator-() const {
    return *this * Rational(-1);
}

Polynomial VectorField::apply(const Polynomial& f) const {
    require_same_chart(chart, f.chart(), "directional derivative");
    Polynomial r(chart);
    for (size_t i = 0; i < comps.size(); ++i)
        if (!comps[i].is_zero())
            r += comps[i] * diff(f, i);
    return r;
}

Bivector Bivector::from_matrix(const ChartPtr& chart,
                               const std::vector<std::vector<Polynomial>>& m) {
    const size_t d = chart->dim();
    if (m.size() != d)
        fail("dimension_mismatch", "bivector matrix has wrong row count");
    for (const auto& row : m)
        if (row.size() != d)
            fail("dimension_mismatch", "bivector matrix has wrong column count");
    Bivector b(chart);
    for (size_t i = 0; i < d; ++i) {
        if (!m[i][i].is_zero())
            fail("bad_argument", "bivector matrix has nonzero diagonal");
        for (size_t j = i + 1; j < d; ++j) {
            if (m[i][j] != -m[j][i])
                fail("bad_argument", "bivector matrix is not antisymmetric");
            b.set_entry(i, j, m[i][j]);
        }
    }
    return b;
}

Bivector Bivector::constant(const ChartPtr& chart, const RationalMatrix& m) {
    if (m.rows() != chart->dim() || m.cols() != chart->dim())
        fail("dimension_mismatch", "constant bivector matrix shape mismatch");
    if (!m.is_antisymmetric())
        fail("bad_argument", "constant bivector matrix is not antisymmetric");
    Bivector b(chart);
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != 0)
                b.set_entry(i, j, Polynomial::constant(chart, m(i, j)));
    return b;
}

Polynomial Bivector::entry(size_t i, size_t j) const {
    if (i >= dim() || j >= dim())
        fail("bad_argument", "bivector index out of range");
    if (i == j)
        return Polynomial::zero(chart_);
    const bool flip = i > j;
    auto it = upper_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == upper_.end())
        return Polynomial::zero(chart_);
    return flip ? -it->second : it->second;
}

void Bivector::set_entry(size_t i, size_t j, const Polynomial& p) {
    if (i >= dim() || j >= dim() || i == j)
        fail("bad_argument", "bivector entry needs two distinct indices");
    require_same_chart(chart_, p.chart(), "bivector entry");
    const bool flip = i > j;
    auto key = flip ? std::make_pair(j, i) : std::make_pair(i, j);
    if (p.is_zero())
        upper_.erase(key);
    else
        upper_[key] = flip ? -p : p;
}

bool Bivector::operator==(const Bivector& o) const {
    require_same_chart(chart_, o.chart_, "bivector comparison");
    return upper_ == o.upper_;
}

Bivector Bivector::operator+(const Bivector& o) const {
    require_same_chart(chart_, o.chart_, "bivector addition");
    Bivector r = *this;
    for (const auto& [ij, p] : o.upper_)
        r.set_entry(ij.first, ij.second, r.entry(ij.first, ij.second) + p);
    return r;
}

Bivector Bivector::operator-(const Bivector& o) const {
    return *this + (o * Rational(-1));
}

Bivector Bivector::operator*(const Rational& s) const {
    Bivector r(chart_);
    if (s == 0)
        return r;
    for (const auto& [ij, p] : upper_)
        r.upper_.emplace(ij, p * s);
    return r;
}

KForm::KForm(ChartPtr chart, int degree) : chart_(std::move(chart)), degree_(degree) {
    if (degree_ < 0 || degree_ > 3)
        fail("degree_unsupported", "forms are supported up to degree 3");
}

KForm KForm::from_function(const Polynomial& f) {
    KForm w(f.chart(), 0);
    w.set_entry({}, f);
    return w;
}

KForm KForm::one_form(const ChartPtr& chart, std::vector<Polynomial> comps) {
    if (comps.size() != chart->dim())
        fail("dimension_mismatch", "one-form needs one component per coordinate");
    KForm w(chart, 1);
    for (size_t i = 0; i < comps.size(); ++i)
        w.set_entry({i}, comps[i]);
    return w;
}

KForm KForm::constant_two_form(const ChartPtr& chart, const RationalMatrix& m) {
    if (m.rows() != chart->dim() || m.cols() != chart->dim())
        fail("dimension_mismatch", "two-form matrix shape mismatch");
    if (!m.is_antisymmetric())
        fail("bad_argument", "two-form matrix is not antisymmetric");
    KForm w(chart, 2);
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != 0)
                w.set_entry({i, j}, Polynomial::constant(chart, m(i, j)));
    return w;
}

Polynomial KForm::entry(std::vector<size_t> idx) const {
    if (idx.size() != static_cast<size_t>(degree_))
        fail("bad_argument", "form entry index count does not match degree");
    for (size_t i : idx)
        if (i >= chart_->dim())
            fail("bad_argument", "form index out of range");
    int sign = sort_sign(idx);
    if (sign == 0)
        return Polynomial::zero(chart_);
    auto it = entries_.find(idx);
    if (it == entries_.end())
        return Polynomial::zero(chart_);
    return sign > 0 ? it->second : -it->second;
}

void KForm::set_entry(std::vector<size_t> idx, const Polynomial& p) {
    if (idx.size() != static_cast<size_t>(degree_))
        fail("bad_argument", "form entry index count does not match degree");
    if (!std::is_sorted(idx.begin(), idx.end()) ||
        std::adjacent_find(idx.begin(), idx.end()) != idx.end())
        fail("bad_argument", "form entries are stored on strictly increasing indices");
    for (size_t i : idx)
        if (i >= chart_->dim())
            fail("bad_argument", "form index out of range");
    require_same_chart(chart_, p.chart(), "form entry");
    if (p.is_zero())
        entries_.erase(idx);
    else
        entries_[idx] = p;
}

bool KForm::operator==(const KForm& o) const {
    require_same_chart(chart_, o.chart_, "form comparison");
    if (degree_ != o.degree_)
        fail("degree_mismatch", "comparing forms of different degree");
    return entries_ == o.entries_;
}

KForm KForm::operator+(const KForm& o) const {
    require_same_chart(chart_, o.chart_, "form addition");
    if (degree_ != o.degree_)
        fail("degree_mismatch", "adding forms of different degree");
    KForm r = *this;
    for (const auto& [idx, p] : o.entries_) {
        Polynomial sum = r.entry(idx) + p;
        r.set_entry(idx, sum);
    }
    return r;
}

KForm KForm::operator-(const KForm& o) const {
    return *this + (o * Rational(-1));
}

KForm KForm::operator*(const Rational& s) const {
    KForm r(chart_, degree_);
    if (s == 0)
        return r;
    for (const auto& [idx, p] : entries_)
        r.entries_.emplace(idx, p * s);
    return r;
}

Polynomial KForm::as_function() const {
    if (degree_ != 0)
        fail("degree_mismatch", "as_function on a form of positive degree");
    return entry({});
}

std::vector<Polynomial> KForm::components() const {
    if (degree_ != 1)
        fail("degree_mismatch", "components on a form of degree != 1");
    std::vector<Polynomial> comps;
    comps.reserve(chart_->dim());
    for (size_t i = 0; i < chart_->dim(); ++i)
        comps.push_back(entry({i}));
    return comps;
}

RationalMatrix KForm::constant_matrix() const {
    if (degree_ != 2)
        fail("degree_mismatch", "constant_matrix on a form of degree != 2");
    const size_t d = chart_->dim();
    RationalMatrix m(d, d);
    for (const auto& [idx, p] : entries_) {
        if (!p.is_constant())
            fail("bad_argument", "two-form has non-constant entries");
        m(idx[0], idx[1]) = p.constant_value();
        m(idx[1], idx[0]) = -p.constant_value();
    }
    return m;
}

Polynomial Trivector::entry(size_t i, size_t j, size_t k) const {
    std::vector<size_t> idx{i, j, k};
    for (size_t v : idx)
        if (v >= chart_->dim())
            fail("bad_argument", "trivector index out of range");
    int sign = sort_sign(idx);
    if (sign == 0)
        return Polynomial::zero(chart_);
    auto it = entries_.find(idx);
    if (it == entries_.end())
        return Polynomial::zero(chart_);
    return sign > 0 ? it->second : -it->second;
}

void Trivector::set_entry(size_t i, size_t j, size_t k, const Polynomial& p) {
    if (!(i < j && j < k) || k >= chart_->dim())
        fail("bad_argument", "trivector entries are stored on strictly increasing indices");
    require_same_chart(chart_, p.chart(), "trivector entry");
    std::vector<size_t> idx{i, j, k};
    if (p.is_zero())
        entries_.erase(idx);
    else
        entries_[idx] = p;
}

bool Trivector::operator==(const Trivector& o) const {
    require_same_chart(chart_, o.chart_, "trivector comparison");
    return entries_ == o.entries_;
}

} // namespace pcx
