#include "pcx/chart.hpp"

#include <cctype>

#include "pcx/errors.hpp"

namespace pcx {

bool is_identifier(const std::string& s) {
    if (s.empty())
        return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
            return false;
    return true;
}

Chart::Chart(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty())
        fail("bad_argument", "chart needs at least one coordinate");
    for (size_t i = 0; i < names_.size(); ++i) {
        if (!is_identifier(names_[i]))
            fail("bad_argument", "invalid coordinate name '" + names_[i] + "'");
        if (!index_.emplace(names_[i], i).second)
            fail("bad_argument", "duplicate coordinate name '" + names_[i] + "'");
    }
}

const std::string& Chart::name(size_t i) const {
    if (i >= names_.size())
        fail("bad_argument", "coordinate index out of range");
    return names_[i];
}

std::optional<size_t> Chart::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

ChartPtr make_chart(std::vector<std::string> names) {
    return std::make_shared<const Chart>(std::move(names));
}

ChartPtr darboux_chart(size_t n, const std::string& q, const std::string& p) {
    std::vector<std::string> names;
    names.reserve(2 * n);
    for (size_t i = 1; i <= n; ++i)
        names.push_back(q + std::to_string(i));
    for (size_t i = 1; i <= n; ++i)
        names.push_back(p + std::to_string(i));
    return make_chart(std::move(names));
}

bool same_chart(const ChartPtr& a, const ChartPtr& b) {
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return *a == *b;
}

void require_same_chart(const ChartPtr& a, const ChartPtr& b, const std::string& where) {
    if (!same_chart(a, b))
        fail("chart_mismatch", where + ": operands live on different charts");
}

} // namespace pcx
