#ifndef SPINOR_SERIES_HPP
#define SPINOR_SERIES_HPP

#include <complex>
#include <span>
#include <vector>

namespace spinor {

// Truncated formal power series over complex coefficients: the brute-force
// oracle backing every closed-form identity check. coeff(nu) is the
// coefficient of t^nu, 0 <= nu <= order. Binary operations require equal
// orders (no silent retruncation). Values are immutable.
class TruncSeries {
public:
    using cx = std::complex<double>;

    // Zero series of the given order (order >= 0).
    explicit TruncSeries(int order);

    // Series with the given leading coefficients; order = coeffs.size() - 1.
    explicit TruncSeries(std::vector<cx> coeffs);

    // Expansion of 1/(1 - eta t): coefficient nu is eta^nu.
    static TruncSeries geom(cx eta, int order);

    // Real polynomial c0 + c1 t + ... zero-padded (or cut) to the given order.
    static TruncSeries polynomial(std::span<const double> c, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    cx coeff(int nu) const { return c_[static_cast<size_t>(nu)]; }
    const std::vector<cx>& coeffs() const { return c_; }

    TruncSeries scale(cx s) const;

    friend TruncSeries add(const TruncSeries& x, const TruncSeries& y);
    friend TruncSeries sub(const TruncSeries& x, const TruncSeries& y);

    // Cauchy product truncated at the common order.
    friend TruncSeries mul(const TruncSeries& x, const TruncSeries& y);

    // Series division; requires |y.coeff(0)| > 1e-14. mul(div(x,y), y)
    // reproduces x up to roundoff.
    friend TruncSeries div(const TruncSeries& x, const TruncSeries& y);

    // max_nu |x.coeff(nu) - y.coeff(nu)|; orders must match.
    friend double max_coeff_dist(const TruncSeries& x, const TruncSeries& y);

private:
    std::vector<cx> c_;
};

TruncSeries add(const TruncSeries& x, const TruncSeries& y);
TruncSeries sub(const TruncSeries& x, const TruncSeries& y);
TruncSeries mul(const TruncSeries& x, const TruncSeries& y);
TruncSeries div(const TruncSeries& x, const TruncSeries& y);
double max_coeff_dist(const TruncSeries& x, const TruncSeries& y);

} // namespace spinor

#endif
