#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "spinor/errors.hpp"
#include "spinor/hecke.hpp"
#include "spinor/series.hpp"

using namespace spinor;
using cx = std::complex<double>;

namespace {

// Independent route: coefficients of 1/quartic by series division on the
// real reciprocal polynomial.
std::vector<double> a_coeffs_by_division(const SatakeLocal& loc, int N) {
    const double e1 = loc.t_a + loc.t_b;
    const double e2 = loc.t_a * loc.t_b + 2.0;
    const std::vector<double> quartic{1.0, -e1, e2, -e1, 1.0};
    const std::vector<double> one{1.0};
    const TruncSeries q = div(TruncSeries::polynomial(one, N),
                              TruncSeries::polynomial(quartic, N));
    std::vector<double> out;
    for (int nu = 0; nu <= N; ++nu) out.push_back(q.coeff(nu).real());
    return out;
}

// Full Moebius-weighted square-divisor sum at n, independent of lambda_at.
double lambda_by_mobius_sum(const EigenForm& form, uint64_t n) {
    double sum = 0.0;
    for (uint64_t d = 1; d * d <= n; ++d) {
        if (n % (d * d) != 0) continue;
        sum += oracles::mobius_trial(d) / static_cast<double>(d) *
               a_at(form, n / (d * d));
    }
    return sum;
}

} // namespace

TEST_CASE("a_coeffs examples and oracles") {
    const SatakeLocal ref = oracles::ref_local(2);
    const auto as = a_coeffs(ref, 8);
    CHECK(as[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(as[1] == doctest::Approx(ref.t_a + ref.t_b).epsilon(1e-12));
    CHECK(as[1] == doctest::Approx(0.24831).epsilon(1e-4));
    const double expect2 =
        (ref.t_a + ref.t_b) * (ref.t_a + ref.t_b) - ref.t_a * ref.t_b - 2.0;
    CHECK(as[2] == doctest::Approx(expect2).epsilon(1e-12));
    CHECK(as[2] == doctest::Approx(-1.03897).epsilon(1e-4));

    const auto division = a_coeffs_by_division(ref, 8);
    for (int nu = 0; nu <= 8; ++nu) {
        CHECK(std::abs(as[static_cast<size_t>(nu)] - division[static_cast<size_t>(nu)]) < 1e-10);
        const cx direct = oracles::homogeneous_direct(ref.a(), ref.b(), nu);
        CHECK(std::abs(as[static_cast<size_t>(nu)] - direct.real()) < 1e-10);
    }
}

TEST_CASE("A_direct generates (1 - t^2) / quartic") {
    // A(nu) = a(p^nu) - a(p^{nu-2}); equivalently sum_{j>=0} A(nu-2j) = a(p^nu).
    const SatakeLocal ref = oracles::ref_local(2);
    CHECK(A_direct(ref, 0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(A_direct(ref, 1) - a_coeffs(ref, 1)[1]) < 1e-12);
    const auto as = a_coeffs(ref, 30);
    for (int nu = 0; nu <= 30; ++nu) {
        const double expect =
            as[static_cast<size_t>(nu)] - (nu >= 2 ? as[static_cast<size_t>(nu - 2)] : 0.0);
        CHECK(std::abs(A_direct(ref, nu) - expect) < 1e-9);
        CHECK(std::abs(A_direct(ref, nu) + S_direct(ref, nu) -
                       as[static_cast<size_t>(nu)]) < 1e-9);
    }
}

TEST_CASE("A_closed matches A_direct and gates degeneracy") {
    const SatakeLocal ref = oracles::ref_local(2);
    CHECK(A_closed(ref, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(A_closed(ref, 5) - A_direct(ref, 5)) < 1e-10);
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 25; ++trial) {
        const SatakeLocal loc = oracles::random_local(rng, 5, 0.05);
        for (int nu = 0; nu <= 40; ++nu)
            CHECK(std::abs(A_closed(loc, nu) - A_direct(loc, nu)) < 1e-9);
    }
    CHECK_THROWS_AS(A_closed(from_traces(0.4, 0.4, 2), 3), Degenerate);
}

TEST_CASE("lambda_coeffs examples") {
    const SatakeLocal ref = oracles::ref_local(2);
    const auto lams = lambda_coeffs(ref, 6);
    CHECK(lams[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(lams[1] == doctest::Approx(ref.t_a + ref.t_b).epsilon(1e-12));
    const auto as = a_coeffs(ref, 2);
    CHECK(lams[2] == doctest::Approx(as[2] - 0.5).epsilon(1e-12));
    CHECK(lams[2] == doctest::Approx(-1.53897).epsilon(1e-4));

    // Independent generating-series route in the test.
    const std::vector<double> numer{1.0, 0.0, -0.5};
    const double e1 = ref.t_a + ref.t_b, e2 = ref.t_a * ref.t_b + 2.0;
    const std::vector<double> quartic{1.0, -e1, e2, -e1, 1.0};
    const TruncSeries series = div(TruncSeries::polynomial(numer, 6),
                                   TruncSeries::polynomial(quartic, 6));
    for (int nu = 0; nu <= 6; ++nu)
        CHECK(std::abs(lams[static_cast<size_t>(nu)] - series.coeff(nu).real()) < 1e-10);
}

TEST_CASE("lambda_from_a matches lambda_coeffs") {
    const SatakeLocal ref = oracles::ref_local(3);
    CHECK(lambda_from_a(ref, 0) == doctest::Approx(1.0));
    const auto as = a_coeffs(ref, 4);
    CHECK(lambda_from_a(ref, 1) == doctest::Approx(as[1]).epsilon(1e-13));
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        const SatakeLocal loc = oracles::random_local(rng, 3, 0.0);
        const auto a4 = a_coeffs(loc, 4);
        const double expect = a4[4] - a4[2] / 3.0;
        CHECK(lambda_from_a(loc, 4) == doctest::Approx(expect).epsilon(1e-12));
        CHECK(std::abs(lambda_from_a(loc, 4) - lambda_coeffs(loc, 4)[4]) < 1e-10);
    }
}

TEST_CASE("route equivalence on random locals") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        const SatakeLocal loc = oracles::random_local(rng, 2, 0.05);
        const auto as = a_coeffs(loc, 40);
        const auto lams = lambda_coeffs(loc, 40);
        for (int nu = 0; nu <= 40; ++nu) {
            const double A = A_direct(loc, nu);
            CHECK(std::abs(A_closed(loc, nu) - A) < 1e-9);
            // A + S telescopes to the Euler coefficient.
            CHECK(std::abs(A + S_direct(loc, nu) - as[static_cast<size_t>(nu)]) < 1e-9);
            CHECK(std::abs(lambda_from_a(loc, nu) - lams[static_cast<size_t>(nu)]) < 1e-9);
        }
    }
}

TEST_CASE("divisor bounds and reality on random locals") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 50; ++trial) {
        const SatakeLocal loc = oracles::random_local(rng, 2, 0.0);
        const LocalTable t = local_table(loc, 40); // construction certifies
        for (int nu = 0; nu <= 40; ++nu) {
            CHECK(std::abs(t.a_vals[static_cast<size_t>(nu)]) <=
                  static_cast<double>(oracles::binomial(static_cast<uint64_t>(nu) + 3, 3)) + 1e-9);
            CHECK(std::abs(t.lambda_vals[static_cast<size_t>(nu)]) <=
                  static_cast<double>(oracles::binomial(static_cast<uint64_t>(nu) + 4, 4)) + 1e-9);
        }
    }
}

TEST_CASE("lambda_at multiplicativity") {
    const EigenForm form = synth_form(3, 2000, 0.1);
    CHECK(lambda_at(form, 1) == doctest::Approx(1.0));
    CHECK(lambda_at(form, 6) ==
          doctest::Approx(lambda_at(form, 2) * lambda_at(form, 3)).epsilon(1e-12));
    const double lam12 = lambda_at(form, 12);
    const double expect12 = lambda_coeffs(form.local(2), 2)[2] * lambda_at(form, 3);
    CHECK(lam12 == doctest::Approx(expect12).epsilon(1e-12));
    CHECK(std::abs(lam12 - lambda_by_mobius_sum(form, 12)) < 1e-10);

    std::mt19937_64 rng(53);
    int done = 0;
    while (done < 500) {
        const uint64_t m = 2 + rng() % 1000;
        const uint64_t n = 2 + rng() % 1000;
        if (std::gcd(m, n) != 1) continue;
        ++done;
        CHECK(std::abs(lambda_at(form, m * n) -
                       lambda_at(form, m) * lambda_at(form, n)) < 1e-9);
    }
    CHECK_THROWS_AS(lambda_at(form, 2003), MissingPrime); // prime beyond coverage
}

TEST_CASE("global_table matches the per-n oracle") {
    const EigenForm form = synth_form(1, 10000, 0.05);
    const GlobalTable table = global_table(form, 10000);
    CHECK(table.lambda(1) == doctest::Approx(1.0));
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 100; ++trial) {
        const uint64_t n = 1 + rng() % 10000;
        CHECK(std::abs(table.lambda(n) - lambda_at(form, n)) < 1e-9);
    }
    // Divisor bound over the whole table, with d5 from an independent sieve.
    const auto d5 = oracles::divisor_count_sieve(10000, 5);
    for (uint64_t n = 1; n <= 10000; ++n)
        CHECK(std::abs(table.lambda(n)) <= static_cast<double>(d5[n]) + 1e-9);
}

TEST_CASE("global_table trivial and error cases") {
    const EigenForm form = synth_form(1, 100, 0.05);
    const GlobalTable t1 = global_table(form, 1);
    CHECK(t1.lambda(1) == doctest::Approx(1.0));
    CHECK_THROWS_AS(global_table(form, 101), MissingPrime);
    CHECK_THROWS_AS(global_table(synth_form(1, 100, 0.0), 100000001ull),
                    CutoffTooLarge);
}

TEST_CASE("zero-snap sign logic") {
    // Forced zero at p = 2 must propagate exact zeros to even n.
    std::vector<SatakeLocal> locs{from_traces(0.9, -0.9, 2), from_traces(0.3, 0.7, 3),
                                  from_traces(0.2, 0.5, 5), from_traces(1.1, 0.4, 7)};
    const EigenForm form("zero2", std::move(locs), FormSource::file);
    const GlobalTable table(form, 7);
    CHECK(table.sign(2) == 0);
    CHECK(table.sign(6) == 0);
    CHECK(table.sign(3) != 0);
    CHECK(table.sign(1) == 1);
}
