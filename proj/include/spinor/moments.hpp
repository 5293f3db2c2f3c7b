#ifndef SPINOR_MOMENTS_HPP
#define SPINOR_MOMENTS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "spinor/satake.hpp"

namespace spinor {

// Logarithmically weighted moments of lambda_F(p^nu) over p^nu <= x, by
// direct summation (the nu = 0 term contributes exactly log x and is
// included).
//
//   second_moment: sum lambda_F(p^nu)^2 log(x / p^nu)
//   first_moment:  sum lambda_F(p^nu)   log(x / p^nu)
//
// The second moment grows like C_{F,p} (log x)^2 / (2 log p); the first
// stays O(log x) (strong cancellation). first_moment requires the
// five-element distinctness gate (Degenerate).
double second_moment(const SatakeLocal& loc, double x);
double first_moment(const SatakeLocal& loc, double x);

struct MomentRow {
    double x;
    double second_lhs;
    double second_pred; // C_{F,p} (log x)^2 / (2 log p)
    double ratio;       // second_lhs / second_pred
    double first_lhs;
    double first_over_logx;
};

struct MomentReport {
    uint64_t p;
    std::vector<MomentRow> rows;
};

// Both moments and the residue prediction on a strictly increasing grid of
// x >= 2. Deterministic.
MomentReport moment_report(const SatakeLocal& loc, std::span<const double> grid);

} // namespace spinor

#endif
