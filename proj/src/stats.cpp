#include "wedge/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace wedge::stats {

double percentile(std::vector<double> values, double p) {
    if (values.empty())
        throw DomainError("EmptyGroup", "percentile of empty sample");
    std::sort(values.begin(), values.end());
    const double h = static_cast<double>(values.size() - 1) * p;
    const size_t lo = static_cast<size_t>(std::floor(h));
    const size_t hi = static_cast<size_t>(std::ceil(h));
    if (lo == hi) return values[lo];
    const double frac = h - static_cast<double>(lo);
    return values[lo] + frac * (values[hi] - values[lo]);
}

SummaryRow summarize(const std::vector<double>& values, const std::string& group) {
    if (values.empty())
        throw DomainError("EmptyGroup", "summarize called on empty group '" + group + "'");

    SummaryRow row;
    row.group = group;
    row.n = values.size();
    row.mean = std::accumulate(values.begin(), values.end(), 0.0) /
               static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - row.mean) * (v - row.mean);
        row.sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
    } else {
        row.sd = 0.0;
        row.sd_degenerate = true;
    }
    row.p05 = percentile(values, 0.05);
    row.median = percentile(values, 0.50);
    row.p95 = percentile(values, 0.95);
    return row;
}

std::vector<SummaryRow> bucket_summaries(const std::vector<CarryObservation>& observations,
                                         const std::vector<std::string>& bucket_order) {
    std::vector<double> overall;
    std::map<std::string, std::vector<double>> by_bucket;
    for (const auto& obs : observations) {
        const double wedge_pp = obs.wedge * 100.0;
        overall.push_back(wedge_pp);
        by_bucket[obs.bucket_label].push_back(wedge_pp);
    }

    std::vector<SummaryRow> rows;
    if (!overall.empty()) rows.push_back(summarize(overall, "overall"));
    for (const auto& label : bucket_order) {
        auto it = by_bucket.find(label);
        if (it == by_bucket.end() || it->second.empty()) continue;
        rows.push_back(summarize(it->second, label));
    }
    return rows;
}

} // namespace wedge::stats
