#include "spinor/series.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>

#include "spinor/errors.hpp"

namespace spinor {

namespace {

void require_same_order(const TruncSeries& x, const TruncSeries& y) {
    if (x.order() != y.order())
        throw OrderMismatch("series orders differ: " + std::to_string(x.order()) +
                            " vs " + std::to_string(y.order()));
}

} // namespace

TruncSeries::TruncSeries(int order) {
    if (order < 0) throw OrderMismatch("series order must be >= 0");
    c_.assign(static_cast<size_t>(order) + 1, cx{0.0, 0.0});
}

TruncSeries::TruncSeries(std::vector<cx> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw OrderMismatch("series needs at least the constant term");
}

TruncSeries TruncSeries::geom(cx eta, int order) {
    TruncSeries s(order);
    cx pow{1.0, 0.0};
    for (int nu = 0; nu <= order; ++nu) {
        s.c_[static_cast<size_t>(nu)] = pow;
        pow *= eta;
    }
    return s;
}

TruncSeries TruncSeries::polynomial(std::span<const double> c, int order) {
    TruncSeries s(order);
    const size_t n = std::min(c.size(), s.c_.size());
    for (size_t i = 0; i < n; ++i) s.c_[i] = cx{c[i], 0.0};
    return s;
}

TruncSeries TruncSeries::scale(cx s) const {
    TruncSeries out(order());
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] * s;
    return out;
}

TruncSeries add(const TruncSeries& x, const TruncSeries& y) {
    require_same_order(x, y);
    TruncSeries out(x.order());
    for (size_t i = 0; i < x.c_.size(); ++i) out.c_[i] = x.c_[i] + y.c_[i];
    return out;
}

TruncSeries sub(const TruncSeries& x, const TruncSeries& y) {
    require_same_order(x, y);
    TruncSeries out(x.order());
    for (size_t i = 0; i < x.c_.size(); ++i) out.c_[i] = x.c_[i] - y.c_[i];
    return out;
}

TruncSeries mul(const TruncSeries& x, const TruncSeries& y) {
    require_same_order(x, y);
    TruncSeries out(x.order());
    const size_t n = x.c_.size();
    for (size_t i = 0; i < n; ++i) {
        if (x.c_[i] == TruncSeries::cx{0.0, 0.0}) continue;
        for (size_t j = 0; i + j < n; ++j) out.c_[i + j] += x.c_[i] * y.c_[j];
    }
    return out;
}

TruncSeries div(const TruncSeries& x, const TruncSeries& y) {
    require_same_order(x, y);
    if (std::abs(y.c_[0]) <= 1e-14)
        throw NonUnitDivisor("divisor has vanishing constant term");
    TruncSeries out(x.order());
    const size_t n = x.c_.size();
    for (size_t k = 0; k < n; ++k) {
        TruncSeries::cx acc = x.c_[k];
        for (size_t j = 1; j <= k; ++j) acc -= y.c_[j] * out.c_[k - j];
        out.c_[k] = acc / y.c_[0];
    }
    return out;
}

double max_coeff_dist(const TruncSeries& x, const TruncSeries& y) {
    require_same_order(x, y);
    double m = 0.0;
    for (size_t i = 0; i < x.c_.size(); ++i)
        m = std::max(m, std::abs(x.c_[i] - y.c_[i]));
    return m;
}

} // namespace spinor
