#ifndef SPINOR_CLOSEDFORMS_HPP
#define SPINOR_CLOSEDFORMS_HPP

#include <array>
#include <complex>
#include <cstdint>

#include "spinor/satake.hpp"
#include "spinor/series.hpp"

namespace spinor {

// Distinctness gate for the closed forms: spectral margins at or below this
// are rejected (Degenerate), never regularized.
inline constexpr double kDegeneracyGate = 1e-6;

// The nine inverse roots of the lambda^2 generating function, in canonical
// order [1, a^2, a^-2, b^2, b^-2, ab, (ab)^-1, ab^-1, a^-1 b].
struct SpectralSet {
    std::array<std::complex<double>, 9> etas;
};

SpectralSet spectral_set(const SatakeLocal& loc);

// Numerator coefficients q0..q6 of the lambda^2 generating function, as
// polynomials in (t_a, t_b, 1/p), together with the equivalent
// (u, v) = (t_a + t_b, t_a t_b + 2) parameterization (both are computed and
// must agree within 1e-12; ConstraintViolation otherwise).
struct QCoeffs {
    std::array<double, 7> q;
    double u;
    double v;
};

QCoeffs q_coeffs(const SatakeLocal& loc);

// Numerator coefficients of the a_F^2 generating function:
// r0 = r4 = 1, r1 = r3 = t_a t_b + 2, r2 = -(t_a+t_b)^2 + 2 (palindromic by
// construction; independent of p).
struct RCoeffs {
    std::array<double, 5> r;
};

RCoeffs r_coeffs(const SatakeLocal& loc);

// Truncated expansion of the closed rational form
//   (1 + t) prod_{eta} (1 - eta t)^{-1} sum_i q_i t^i,   t = p^{-s};
// coefficient nu equals lambda_F(p^nu)^2.
TruncSeries prop1_series(const SatakeLocal& loc, int N);

// Truncated expansion of
//   (1 + t) prod_{eta} (1 - eta t)^{-1} sum_j r_j t^j;
// coefficient nu equals a_F(p^nu)^2.
TruncSeries prop2_series(const SatakeLocal& loc, int N);

// The three partial-fraction generating functions behind the lambda^2
// decomposition, normalized by D(a,b)^2:
//   ASquared:    sum A(nu)^2 / D^2 t^nu
//   Cross:       sum A(nu) S(nu) / D^2 t^nu
//   TailSquared: sum S(nu)^2 / D^2 t^nu
// where S(nu) = sum_{j>=1} A(nu-2j). Requires the five-element distinctness
// gate; throws Degenerate.
enum class PartialFractionKind { ASquared, Cross, TailSquared };

TruncSeries partial_fraction_series(const SatakeLocal& loc,
                                    PartialFractionKind kind, int N);

// Max over nu <= N of the defect in
//   lambda_F(p^nu)^2 = A(nu)^2 + 2(1-1/p) A(nu)S(nu) + (1-1/p)^2 S(nu)^2
// with all pieces evaluated directly.
double decomposition_check(const SatakeLocal& loc, int N);

// Both evaluations of the residue constant (closed trace form, spectral
// product form), margin-gated but not cross-checked; residue_constant wraps
// them with the agreement and positivity certification.
std::pair<double, double> residue_forms(const SatakeLocal& loc);

// The positive residue constant C_{F,p} governing the weighted second-moment
// growth, computed two independent ways:
//   closed:   2/(t_a-t_b)^2 { (1/(4-t_a^2) + 1/(4-t_b^2))(1-1/p)^2 + 2/p }
//   product:  2 prod_{eta != 1} (1-eta)^{-1} sum_i q_i
// Both must agree within 1e-10 and be positive (ConstraintViolation
// otherwise). Requires the nine-element margin > 1e-6 (Degenerate).
double residue_constant(const SatakeLocal& loc);

} // namespace spinor

#endif
