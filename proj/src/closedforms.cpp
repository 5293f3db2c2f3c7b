#include "spinor/closedforms.hpp"

#include <cmath>
#include <string>

#include "spinor/errors.hpp"
#include "spinor/hecke.hpp"

namespace spinor {

namespace {

using cx = std::complex<double>;

void require_margin(double margin, const char* which) {
    if (margin <= kDegeneracyGate)
        throw Degenerate(std::string(which) + " spectral margin " +
                         std::to_string(margin) + " below gate");
}

// prod_{eta} (1 - eta t)^{-1} * (numerator polynomial), truncated at N.
TruncSeries euler_factor_series(const SpectralSet& ds,
                                std::span<const double> numer, bool one_plus_t,
                                int N) {
    std::vector<double> poly(numer.begin(), numer.end());
    if (one_plus_t) {
        // multiply by (1 + t)
        poly.push_back(0.0);
        for (size_t i = poly.size() - 1; i >= 1; --i) poly[i] += poly[i - 1];
    }
    TruncSeries s = TruncSeries::polynomial(poly, N);
    for (const cx& eta : ds.etas) s = mul(s, TruncSeries::geom(eta, N));
    return s;
}

} // namespace

SpectralSet spectral_set(const SatakeLocal& loc) {
    return SpectralSet{spectral_values(loc)};
}

QCoeffs q_coeffs(const SatakeLocal& loc) {
    const double ta = loc.t_a, tb = loc.t_b;
    const double pinv = 1.0 / static_cast<double>(loc.p);
    const double pinv2 = pinv * pinv;
    QCoeffs out;
    out.u = ta + tb;
    out.v = ta * tb + 2.0;
    out.q[0] = 1.0;
    out.q[1] = ta * tb + 2.0;
    out.q[2] = 2.0 - (ta + tb) * (ta + tb) -
               2.0 * (ta * ta + tb * tb + ta * tb - 2.0) * pinv + pinv2;
    out.q[3] = ta * tb + 2.0 +
               2.0 * ((ta + tb) * (ta + tb) + (ta * ta - 2.0) * (tb * tb - 2.0)) * pinv +
               (ta * tb + 2.0) * pinv2;
    out.q[4] = 1.0 - 2.0 * (ta * ta + tb * tb + ta * tb - 2.0) * pinv -
               ((ta + tb) * (ta + tb) - 2.0) * pinv2;
    out.q[5] = (ta * tb + 2.0) * pinv2;
    out.q[6] = pinv2;

    // (u, v) parameterization of the same polynomials; both must agree.
    const double u = out.u, v = out.v;
    const std::array<double, 7> quv{
        1.0,
        v,
        2.0 - u * u - 2.0 * (u * u - v) * pinv + pinv2,
        v - 2.0 * (u + v) * (u - v) * pinv + v * pinv2,
        1.0 - 2.0 * (u * u - v) * pinv + (2.0 - u * u) * pinv2,
        v * pinv2,
        pinv2};
    for (size_t i = 0; i < out.q.size(); ++i) {
        if (std::abs(out.q[i] - quv[i]) > 1e-12)
            throw ConstraintViolation("q parameterizations disagree at index " +
                                      std::to_string(i));
    }
    return out;
}

RCoeffs r_coeffs(const SatakeLocal& loc) {
    const double v = loc.t_a * loc.t_b + 2.0;
    const double u = loc.t_a + loc.t_b;
    return RCoeffs{{1.0, v, -u * u + 2.0, v, 1.0}};
}

TruncSeries prop1_series(const SatakeLocal& loc, int N) {
    const QCoeffs qc = q_coeffs(loc);
    return euler_factor_series(spectral_set(loc), qc.q, /*one_plus_t=*/true, N);
}

TruncSeries prop2_series(const SatakeLocal& loc, int N) {
    const RCoeffs rc = r_coeffs(loc);
    return euler_factor_series(spectral_set(loc), rc.r, /*one_plus_t=*/true, N);
}

TruncSeries partial_fraction_series(const SatakeLocal& loc,
                                    PartialFractionKind kind, int N) {
    const auto [m9, m5] = distinctness_margin(loc);
    (void)m9;
    require_margin(m5, "five-element");

    const cx a = loc.a();
    const cx b = loc.b();
    const cx ai = std::conj(a), bi = std::conj(b);
    const cx one{1.0, 0.0};
    const cx a2 = a * a, b2 = b * b;
    const cx a2m1 = a2 - one, b2m1 = b2 - one;

    struct Term {
        cx coef;
        cx eta;
    };
    std::vector<Term> terms;
    switch (kind) {
    case PartialFractionKind::ASquared:
        terms = {{cx{4.0, 0.0}, one}, {a2, a2},          {ai * ai, ai * ai},
                 {b2, b2},            {bi * bi, bi * bi}, {-2.0 * a * b, a * b},
                 {-2.0 * ai * bi, ai * bi},               {-2.0 * a * bi, a * bi},
                 {-2.0 * ai * b, ai * b}};
        break;
    case PartialFractionKind::Cross:
        terms = {{cx{-2.0, 0.0}, one},
                 {a2 / a2m1, a2},
                 {-one / a2m1, ai * ai},
                 {b2 / b2m1, b2},
                 {-one / b2m1, bi * bi},
                 {-(a2 * a * b + a * b2 * b - 2.0 * a * b) / (a2m1 * b2m1), a * b},
                 {-(a * bi + ai * b - 2.0 * a * b) / (a2m1 * b2m1), ai * bi},
                 {(a2 * a * b + a * bi - 2.0 * a * b) / (a2m1 * b2m1), a * bi},
                 {(a * b2 * b + ai * b - 2.0 * a * b) / (a2m1 * b2m1), ai * b}};
        break;
    case PartialFractionKind::TailSquared: {
        const cx ca = a2 / (a2m1 * a2m1);
        const cx cb = b2 / (b2m1 * b2m1);
        const cx cab = 2.0 * a * b / (a2m1 * b2m1);
        terms = {{-2.0 * (ca + cb), one}, {ca, a2},      {ca, ai * ai},
                 {cb, b2},                {cb, bi * bi}, {-cab, a * b},
                 {-cab, ai * bi},         {cab, a * bi}, {cab, ai * b}};
        break;
    }
    }

    TruncSeries out(N);
    for (const Term& t : terms)
        out = add(out, TruncSeries::geom(t.eta, N).scale(t.coef));
    return out;
}

double decomposition_check(const SatakeLocal& loc, int N) {
    const auto lams = lambda_coeffs(loc, N);
    const double w = 1.0 - 1.0 / static_cast<double>(loc.p);
    double max_err = 0.0;
    for (int nu = 0; nu <= N; ++nu) {
        const double A = A_direct(loc, nu);
        const double S = S_direct(loc, nu);
        const double lhs = lams[static_cast<size_t>(nu)] * lams[static_cast<size_t>(nu)];
        const double rhs = A * A + 2.0 * w * A * S + w * w * S * S;
        max_err = std::max(max_err, std::abs(lhs - rhs));
    }
    return max_err;
}

std::pair<double, double> residue_forms(const SatakeLocal& loc) {
    const auto [m9, m5] = distinctness_margin(loc);
    (void)m5;
    require_margin(m9, "nine-element");

    const double ta = loc.t_a, tb = loc.t_b;
    const double pinv = 1.0 / static_cast<double>(loc.p);
    const double dt2 = (ta - tb) * (ta - tb);
    const double closed =
        2.0 / dt2 *
        ((1.0 / (4.0 - ta * ta) + 1.0 / (4.0 - tb * tb)) * (1.0 - pinv) * (1.0 - pinv) +
         2.0 * pinv);

    // Independent route: 2 prod_{eta != 1} (1 - eta)^{-1} sum_i q_i.
    const SpectralSet ds = spectral_set(loc);
    cx prod{1.0, 0.0};
    for (size_t i = 1; i < ds.etas.size(); ++i) prod /= (cx{1.0, 0.0} - ds.etas[i]);
    const QCoeffs qc = q_coeffs(loc);
    double qsum = 0.0;
    for (double qi : qc.q) qsum += qi;
    const cx product_form = 2.0 * prod * qsum;
    if (std::abs(product_form.imag()) > 1e-10)
        throw ConstraintViolation("residue product form is not real");
    return {closed, product_form.real()};
}

double residue_constant(const SatakeLocal& loc) {
    const auto [closed, product] = residue_forms(loc);
    if (std::abs(closed - product) > 1e-10)
        throw ConstraintViolation("residue forms disagree: " + std::to_string(closed) +
                                  " vs " + std::to_string(product));
    if (!(closed > 0.0))
        throw ConstraintViolation("residue constant is not positive");
    return closed;
}

} // namespace spinor
