#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pcx {

// Ordered list of coordinate names. Every polynomial, field and form carries
// a shared pointer to its chart; binary operations demand equal charts.
class Chart {
public:
    explicit Chart(std::vector<std::string> names);

    size_t dim() const { return names_.size(); }
    const std::string& name(size_t i) const;
    const std::vector<std::string>& names() const { return names_; }
    std::optional<size_t> find(const std::string& name) const;

    bool operator==(const Chart& o) const { return names_ == o.names_; }
    bool operator!=(const Chart& o) const { return !(*this == o); }

private:
    std::vector<std::string> names_;
    std::map<std::string, size_t> index_;
};

using ChartPtr = std::shared_ptr<const Chart>;

ChartPtr make_chart(std::vector<std::string> names);

// (q1..qn, p1..pn)
ChartPtr darboux_chart(size_t n, const std::string& q = "q", const std::string& p = "p");

bool same_chart(const ChartPtr& a, const ChartPtr& b);

// Throws chart_mismatch unless the charts agree.
void require_same_chart(const ChartPtr& a, const ChartPtr& b, const std::string& where);

bool is_identifier(const std::string& s);

} // namespace pcx
