#include "pcx/polynomial.hpp"

#include <cctype>
#include <numeric>

#include "pcx/errors.hpp"

namespace pcx {

namespace {

uint32_t mono_degree(const Monomial& m) {
    uint32_t d = 0;
    for (uint32_t e : m)
        d += e;
    return d;
}

constexpr uint32_t kExponentLimit = 4096;

} // namespace

bool GrlexDesc::operator()(const Monomial& a, const Monomial& b) const {
    const uint32_t da = mono_degree(a);
    const uint32_t db = mono_degree(b);
    if (da != db)
        return da > db;
    return a > b;
}

Polynomial Polynomial::zero(ChartPtr chart) {
    return Polynomial(std::move(chart));
}

Polynomial Polynomial::constant(ChartPtr chart, const Rational& c) {
    Polynomial p(std::move(chart));
    p.add_term(Monomial(p.chart_->dim(), 0), c);
    return p;
}

Polynomial Polynomial::variable(const ChartPtr& chart, size_t i) {
    if (i >= chart->dim())
        fail("bad_argument", "variable index out of range");
    Polynomial p(chart);
    Monomial m(chart->dim(), 0);
    m[i] = 1;
    p.add_term(m, 1);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0);
}

Rational Polynomial::constant_value() const {
    if (terms_.empty())
        return 0;
    if (!is_constant())
        fail("bad_argument", "polynomial is not constant: " + to_string(*this));
    return terms_.begin()->second;
}

uint32_t Polynomial::total_degree() const {
    if (terms_.empty())
        return 0;
    return mono_degree(terms_.begin()->first);
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial& Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.size() != chart_->dim())
        fail("bad_argument", "monomial size does not match chart dimension");
    if (c == 0)
        return *this;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(chart_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_chart(chart_, o.chart_, "polynomial addition");
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_same_chart(chart_, o.chart_, "polynomial subtraction");
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_chart(chart_, o.chart_, "polynomial multiplication");
    Polynomial r(chart_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m(ma.size());
            for (size_t i = 0; i < m.size(); ++i)
                m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

Polynomial Polynomial::operator*(const Rational& s) const {
    Polynomial r(chart_);
    if (s == 0)
        return r;
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, c * s);
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    require_same_chart(chart_, o.chart_, "polynomial comparison");
    return terms_ == o.terms_;
}

Polynomial Polynomial::pow(uint32_t k) const {
    Polynomial r = Polynomial::constant(chart_, 1);
    Polynomial base = *this;
    while (k) {
        if (k & 1)
            r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

Polynomial diff(const Polynomial& p, size_t var) {
    if (var >= p.chart()->dim())
        fail("bad_argument", "derivative index out of range");
    Polynomial r(p.chart());
    for (const auto& [m, c] : p.terms()) {
        if (m[var] == 0)
            continue;
        Monomial d = m;
        d[var] -= 1;
        r.add_term(d, c * m[var]);
    }
    return r;
}

Rational eval(const Polynomial& p, const std::vector<Rational>& point) {
    if (point.size() != p.chart()->dim())
        fail("dimension_mismatch", "evaluation point has wrong dimension");
    Rational total = 0;
    for (const auto& [m, c] : p.terms()) {
        Rational term = c;
        for (size_t i = 0; i < m.size(); ++i)
            for (uint32_t k = 0; k < m[i]; ++k)
                term *= point[i];
        total += term;
    }
    return total;
}

Polynomial rename_chart(const Polynomial& p, const ChartPtr& to) {
    if (to->dim() != p.chart()->dim())
        fail("dimension_mismatch", "rename between charts of different dimension");
    Polynomial r(to);
    for (const auto& [m, c] : p.terms())
        r.add_term(m, c);
    return r;
}

Polynomial compose_linear(const Polynomial& p, const RationalMatrix& A, const ChartPtr& ychart) {
    const size_t d = p.chart()->dim();
    if (A.rows() != d || A.cols() != ychart->dim())
        fail("dimension_mismatch", "substitution matrix shape does not match charts");
    std::vector<Polynomial> subst;
    subst.reserve(d);
    for (size_t i = 0; i < d; ++i) {
        Polynomial s(ychart);
        for (size_t j = 0; j < ychart->dim(); ++j) {
            if (A(i, j) == 0)
                continue;
            s += Polynomial::variable(ychart, j) * A(i, j);
        }
        subst.push_back(std::move(s));
    }
    Polynomial r(ychart);
    for (const auto& [m, c] : p.terms()) {
        Polynomial term = Polynomial::constant(ychart, c);
        for (size_t i = 0; i < d; ++i)
            if (m[i])
                term = term * subst[i].pow(m[i]);
        r += term;
    }
    return r;
}

namespace {

struct Parser {
    const std::string& s;
    const ChartPtr& chart;
    size_t pos = 0;

    [[noreturn]] void syntax(size_t at, const std::string& msg) const {
        fail("syntax_error", "syntax error at byte " + std::to_string(at) + ": " + msg);
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }

    bool accept(char c) {
        if (!peek(c))
            return false;
        ++pos;
        return true;
    }

    bool at_digit() {
        skip_ws();
        return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    }

    bool at_ident() {
        skip_ws();
        return pos < s.size() &&
               (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_');
    }

    Integer read_uint() {
        skip_ws();
        if (!at_digit())
            syntax(pos, "expected digits");
        Integer v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        return v;
    }

    Rational read_rational() {
        skip_ws();
        bool negative = accept('-');
        size_t at = pos;
        Integer num = read_uint();
        Integer den = 1;
        if (accept('/')) {
            at = pos;
            den = read_uint();
            if (den == 0)
                syntax(at, "zero denominator");
        }
        Rational r(num, den);
        return negative ? Rational(-r) : r;
    }

    std::string read_ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }

    Polynomial parse_base() {
        skip_ws();
        if (pos >= s.size())
            syntax(pos, "unexpected end of input");
        if (accept('(')) {
            Polynomial inner = parse_expr();
            skip_ws();
            if (!accept(')'))
                syntax(pos, "expected ')'");
            return inner;
        }
        if (s[pos] == '-' || std::isdigit(static_cast<unsigned char>(s[pos])))
            return Polynomial::constant(chart, read_rational());
        if (at_ident()) {
            size_t at = pos;
            std::string name = read_ident();
            auto idx = chart->find(name);
            if (!idx)
                fail("unknown_variable",
                     "unknown variable '" + name + "' at byte " + std::to_string(at));
            return Polynomial::variable(chart, *idx);
        }
        syntax(pos, std::string("unexpected character '") + s[pos] + "'");
    }

    Polynomial parse_factor() {
        Polynomial base = parse_base();
        if (accept('^')) {
            skip_ws();
            size_t at = pos;
            Integer e = read_uint();
            if (e > kExponentLimit)
                fail("exponent_overflow", "exponent " + e.str() + " exceeds limit " +
                                              std::to_string(kExponentLimit) + " at byte " +
                                              std::to_string(at));
            base = base.pow(e.convert_to<uint32_t>());
        }
        return base;
    }

    Polynomial parse_term() {
        Polynomial p = parse_factor();
        while (accept('*'))
            p = p * parse_factor();
        return p;
    }

    Polynomial parse_expr() {
        Polynomial p = parse_term();
        for (;;) {
            if (accept('+'))
                p += parse_term();
            else if (accept('-'))
                p -= parse_term();
            else
                return p;
        }
    }
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const ChartPtr& chart) {
    Parser parser{text, chart};
    Polynomial p = parser.parse_expr();
    parser.skip_ws();
    if (parser.pos != text.size())
        parser.syntax(parser.pos,
                      std::string("unexpected character '") + text[parser.pos] + "'");
    return p;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero())
        return "0";
    const Chart& chart = *p.chart();
    std::string out;
    bool first = true;
    for (const auto& [mono, coef] : p.terms()) {
        Rational c = coef;
        if (first) {
            // Sign stays folded into the rational so the output re-parses.
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0)
                c = -c;
        }
        std::string factors;
        for (size_t v = 0; v < mono.size(); ++v) {
            if (mono[v] == 0)
                continue;
            if (!factors.empty())
                factors += "*";
            factors += chart.name(v);
            if (mono[v] >= 2)
                factors += "^" + std::to_string(mono[v]);
        }
        if (factors.empty())
            out += to_string(c);
        else if (c == 1)
            out += factors;
        else
            out += to_string(c) + "*" + factors;
        first = false;
    }
    return out;
}

} // namespace pcx
