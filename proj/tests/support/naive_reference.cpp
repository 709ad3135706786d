#include "naive_reference.hpp"

#include <cstddef>

namespace naive {

Step smooth(const std::vector<double>& prev) {
    const std::size_t n = prev.size();
    Step out;
    out.values = prev;
    out.mask.assign(n, 0);
    for (std::size_t t = 1; t + 1 < n; ++t) {
        const double average = (prev[t - 1] + prev[t + 1]) / 2.0;
        if (prev[t] > average) {
            out.values[t] = average;
            out.mask[t] = 1;
        }
    }
    return out;
}

std::vector<Step> run(const std::vector<double>& source, std::size_t steps) {
    std::vector<Step> result;
    result.reserve(steps);
    std::vector<double> current = source;
    for (std::size_t k = 0; k < steps; ++k) {
        result.push_back(smooth(current));
        current = result.back().values;
    }
    return result;
}

std::vector<int> depth_profile(const std::vector<Step>& steps_out) {
    if (steps_out.empty()) return {};
    std::vector<int> depths(steps_out.front().mask.size(), 0);
    for (const Step& s : steps_out) {
        for (std::size_t t = 0; t < s.mask.size(); ++t) {
            depths[t] += s.mask[t] ? 1 : 0;
        }
    }
    return depths;
}

std::vector<double> autocorrelation(const std::vector<int>& profile) {
    const std::size_t n = profile.size();
    double mean = 0.0;
    for (int d : profile) mean += d;
    if (n > 0) mean /= static_cast<double>(n);

    std::vector<double> x(n);
    for (std::size_t t = 0; t < n; ++t) x[t] = profile[t] - mean;

    double denom = 0.0;
    for (double v : x) denom += v * v;

    std::vector<double> r(n / 2 + 1, 0.0);
    if (denom == 0.0) return r;
    for (std::size_t lag = 0; lag <= n / 2; ++lag) {
        double s = 0.0;
        for (std::size_t t = 0; t + lag < n; ++t) s += x[t] * x[t + lag];
        r[lag] = s / denom;
    }
    return r;
}

int best_period(const std::vector<int>& profile, double floor) {
    const std::vector<double> r = autocorrelation(profile);
    int best = 0;
    double best_value = floor;
    for (std::size_t lag = 2; lag + 1 < r.size(); ++lag) {
        if (r[lag] >= best_value && r[lag] > r[lag - 1] && r[lag] >= r[lag + 1]) {
            best = static_cast<int>(lag);
            best_value = r[lag];
        }
    }
    return best;
}

} // namespace naive
