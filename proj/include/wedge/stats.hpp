#pragma once

#include <string>
#include <vector>

#include "wedge/carry.hpp"
#include "wedge/errors.hpp"

namespace wedge {

// One row of a summary table, values in annual percentage points.
struct SummaryRow {
    std::string group;
    std::size_t n = 0;
    double mean = 0.0;
    double sd = 0.0;
    double p05 = 0.0;
    double median = 0.0;
    double p95 = 0.0;
    bool sd_degenerate = false; // n = 1, sd reported as 0
};

namespace stats {

// Arithmetic mean, sample (n-1) standard deviation, and percentiles by
// linear interpolation at h = (n-1)p. Values pass through in the caller's
// units. Throws DomainError "EmptyGroup".
SummaryRow summarize(const std::vector<double>& values, const std::string& group);

// Overall row first, then one row per bucket in `bucket_order`; empty
// buckets are omitted.
std::vector<SummaryRow> bucket_summaries(const std::vector<CarryObservation>& observations,
                                         const std::vector<std::string>& bucket_order);

// Percentile of an unsorted sample at probability p in [0, 1].
double percentile(std::vector<double> values, double p);

} // namespace stats
} // namespace wedge
