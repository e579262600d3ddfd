#include <catch2/catch_amalgamated.hpp>

#include "chtri/siegel.hpp"
#include "oracles.hpp"

using namespace chtri;
using Catch::Approx;

namespace {

HeisenbergPoint random_point(oracles::Rng& rng, double scale = 3.0) {
    return {cplx(rng.uniform(-scale, scale), rng.uniform(-scale, scale)),
            rng.uniform(-2 * scale, 2 * scale)};
}

}  // namespace

TEST_CASE("heisenberg group law") {
    oracles::Rng rng(501);
    HeisenbergPoint o = heis_identity();
    for (int i = 0; i < 200; ++i) {
        auto a = random_point(rng), b = random_point(rng), c = random_point(rng);
        auto ab_c = heis_mul(heis_mul(a, b), c);
        auto a_bc = heis_mul(a, heis_mul(b, c));
        CHECK(std::abs(ab_c.zeta - a_bc.zeta) < 1e-12);
        CHECK(ab_c.t == Approx(a_bc.t).margin(1e-10));
        auto ae = heis_mul(a, o);
        CHECK(std::abs(ae.zeta - a.zeta) < 1e-15);
        CHECK(ae.t == Approx(a.t).margin(1e-15));
        auto inv = heis_mul(a, heis_inverse(a));
        CHECK(std::abs(inv.zeta) < 1e-15);
        CHECK(inv.t == Approx(0.0).margin(1e-12));
    }
}

TEST_CASE("cygan metric basics") {
    oracles::Rng rng(502);
    HeisenbergPoint o = heis_identity();
    CHECK(cygan_distance(o, o) == 0.0);
    CHECK(cygan_distance({cplx(1), 0.0}, o) == Approx(1.0));

    for (int i = 0; i < 500; ++i) {
        auto g = random_point(rng), p = random_point(rng), q = random_point(rng);
        CHECK(cygan_distance(p, p) == Approx(0.0).margin(1e-14));
        // left invariance
        CHECK(cygan_distance(heis_mul(g, p), heis_mul(g, q)) ==
              Approx(cygan_distance(p, q)).margin(1e-12));
        // squared distance equals the modulus of the Hermitian pairing of the lifts
        double viaform = std::sqrt(std::abs(herm(heis_lift(p), heis_lift(q), Model::Siegel)));
        CHECK(cygan_distance(p, q) == Approx(viaform).margin(1e-12));
    }
}

TEST_CASE("heisenberg translation matrices act as left multiplication") {
    oracles::Rng rng(503);
    for (int i = 0; i < 200; ++i) {
        auto g = random_point(rng), p = random_point(rng);
        Vec3c lhs = heis_translation(g) * heis_lift(p);
        Vec3c rhs = heis_lift(heis_mul(g, p));
        CHECK(sup_norm(lhs - rhs) < 1e-10);
    }
}

TEST_CASE("zero-case generators") {
    oracles::Rng rng(504);

    // R3 is the antidiagonal inversion
    auto z0 = ZeroParams::from_r(2.0, 1.5, 1.0);
    auto gens0 = generators_zero(z0);
    Mat3c r3_expect;
    r3_expect(0, 2) = 1;
    r3_expect(1, 1) = -1;
    r3_expect(2, 0) = 1;
    CHECK(sup_norm(gens0[2].mat - r3_expect) == 0.0);

    for (int i = 0; i < 300; ++i) {
        double r2 = rng.uniform(1.05, 3.0), r1 = rng.uniform(r2, 4.0);
        auto z = ZeroParams::from_r(r1, r2, rng.uniform(0, std::numbers::pi));
        auto gens = generators_zero(z);
        for (const auto& g : gens) {
            CHECK(is_involution(g.mat));
            CHECK(preserves_form(g.mat, Model::Siegel));
        }
        // R2 R1 is the Heisenberg translation by the stated vector
        Mat3c w = gens[1].mat * gens[0].mat;
        HeisenbergPoint v = translation_vector(z);
        CHECK(sup_norm(w - heis_translation(v)) <
              1e-10 * std::max(1.0, sup_norm(w)));
        // and it moves the origin to that vector
        auto moved = heis_from_lift(w * heis_lift(heis_identity()));
        CHECK(std::abs(moved.zeta - v.zeta) < 1e-10);
        CHECK(moved.t == Approx(v.t).margin(1e-9));
    }
}

TEST_CASE("R3 swaps interior and exterior of the unit cygan sphere") {
    oracles::Rng rng(505);
    auto z = ZeroParams::from_r(2.0, 1.5, 1.0);
    Mat3c r3 = generators_zero(z)[2].mat;
    HeisenbergPoint o = heis_identity();
    for (int i = 0; i < 200; ++i) {
        auto p = random_point(rng);
        double d = cygan_distance(o, p);
        if (d < 1e-3) continue;
        auto image = heis_from_lift(r3 * heis_lift(p));
        CHECK(cygan_distance(o, image) == Approx(1.0 / d).epsilon(1e-9));
    }
}

TEST_CASE("h controls the sphere-translate distance") {
    oracles::Rng rng(506);

    // hand values at r1 = r2 = sqrt(2): h(t) = -32 t + 31
    double s = std::sqrt(2.0);
    CHECK(h_value(s, s, 31.0 / 32.0) == Approx(0.0).margin(1e-12));
    CHECK(h_value(s, s, 0.0) == Approx(31.0));
    CHECK(h_value(s, s, 1.0) == Approx(-1.0));

    for (int i = 0; i < 500; ++i) {
        double r2 = rng.uniform(1.05, 2.5), r1 = rng.uniform(r2, 3.0);
        double alpha = rng.uniform(0, std::numbers::pi);
        auto z = ZeroParams::from_r(r1, r2, alpha);
        auto gens = generators_zero(z);
        auto moved = heis_from_lift((gens[1].mat * gens[0].mat) * heis_lift(heis_identity()));
        double rho4 = std::pow(cygan_distance(heis_identity(), moved), 4);
        // rho0^4 - 16 equals 16 h(cos alpha); in particular the signs agree
        double h = h_value(r1, r2, z.cos_alpha());
        CHECK(16.0 * h == Approx(rho4 - 16.0).margin(1e-7 * std::max(1.0, rho4)));
        // strictly decreasing in t
        CHECK(h_value(r1, r2, 0.3) > h_value(r1, r2, 0.31));
    }
}

TEST_CASE("zero-case parabolic thresholds") {
    double s2 = std::sqrt(2.0);

    CHECK(t_n_zero(2.0, s2, 1) == Approx(11.0 / (8.0 * s2)).epsilon(1e-15));
    // root check by hand: 4 (2 - 2 sqrt 2)^2 - 1 + 32 sqrt 2 (1 - 11/(8 sqrt 2)) = 3
    double lhs = 4 * std::pow(2 - 2 * s2, 2) - 1 + 32 * s2 * (1 - 11 / (8 * s2));
    CHECK(lhs == Approx(3.0).margin(1e-12));

    oracles::Rng rng(507);
    for (int i = 0; i < 300; ++i) {
        double r2 = rng.uniform(1.05, 3.0), r1 = rng.uniform(r2, 4.0);
        long long n = rng.uniform_int(1, 10);
        CHECK(trace_w_zero(r1, r2, t_n_zero(r1, r2, n), n) == Approx(3.0).margin(1e-9));
    }

    // threshold difference in (X, Y) coordinates
    for (int i = 0; i < 200; ++i) {
        double r2 = rng.uniform(1.05, 3.0), r1 = rng.uniform(r2 + 1e-6, 4.0);
        long long n = rng.uniform_int(2, 10);
        double X = (r1 * r1 - 1) / (r2 * r2 - 1) - 1;
        double Y = 1.0 / (r2 * r2 - 1);
        double expect = (X * (1 - n) + 2) /
                        (2.0 * n * (n * n - 1.0) * std::sqrt((1 + Y) * (1 + X + Y)));
        CHECK(t_n_zero(r1, r2, n - 1) - t_n_zero(r1, r2, n) == Approx(expect).margin(1e-12));
    }
}

TEST_CASE("zero-case word trace against matrix products") {
    oracles::Rng rng(508);
    for (int i = 0; i < 200; ++i) {
        double r2 = rng.uniform(1.05, 3.0), r1 = rng.uniform(r2, 4.0);
        double alpha = rng.uniform(0, std::numbers::pi);
        long long n = rng.uniform_int(1, 10);
        double closed = trace_w_zero(r1, r2, std::cos(alpha), n);
        long double brute = oracles::trace_word_zero(r1, r2, alpha, n);
        CHECK(std::abs(closed - static_cast<double>(brute)) <
              1e-8 * std::max(1.0, std::abs(closed)));
    }

    // r1 = 2 r2, n = 1, cos alpha = 1 lands on the elliptic/loxodromic corner
    double tr = trace_w_zero(3.0, 1.5, 1.0, 1);
    CHECK(tr == Approx(-1.0).margin(1e-13));
    CHECK(classify_real_trace(tr).type == IsometryType::Boundary);
    CHECK(classify_real_trace(tr).margin == Approx(0.0).margin(1e-10));
}

TEST_CASE("region indices in the X strips") {
    auto ns = region_index_n(std::sqrt(3.0), std::sqrt(2.0));  // X = 1
    REQUIRE(ns.size() == 2);
    CHECK(ns.front() == 2);
    CHECK(ns.back() == 3);

    auto nb = region_index_n(2.0, std::sqrt(2.0));  // X = 2, strip boundary
    REQUIRE(nb.size() == 2);
    CHECK(nb[0] == 1);
    CHECK(nb[1] == 2);

    // X >= 2 always contains 1
    oracles::Rng rng(509);
    for (int i = 0; i < 100; ++i) {
        double r2 = rng.uniform(1.05, 2.0);
        double X = rng.uniform(2.0, 40.0);
        double r1 = std::sqrt(1.0 + (X + 1.0) * (r2 * r2 - 1.0));
        auto v = region_index_n(r1, r2);
        CHECK(std::find(v.begin(), v.end(), 1LL) != v.end());
        CHECK(v.size() <= 2);
    }

    CHECK(region_index_n(2.0, 2.0).empty());                                // X = 0
    CHECK_THROWS_AS(region_index_n(1.5, 2.0), std::invalid_argument);       // X < 0
    // interior points get exactly one index
    auto single = region_index_n(std::sqrt(1.0 + 2.5), std::sqrt(2.0));     // X = 1.5
    REQUIRE(single.size() == 1);
    CHECK(single[0] == 2);
}

TEST_CASE("the K_n condition value") {
    CHECK(kn_condition_lhs(2.0, std::sqrt(2.0), 1) == Approx(2.0).margin(1e-12));
    CHECK(kn_condition_lhs(std::sqrt(3.0), std::sqrt(2.0), 2) == Approx(-2.0).margin(1e-12));

    // X = 2 family reduces to 4 r2^2 - 6 at n = 1
    oracles::Rng rng(510);
    for (int i = 0; i < 50; ++i) {
        double r2 = rng.uniform(1.05, 2.5);
        double r1 = std::sqrt(3.0 * r2 * r2 - 2.0);  // X = 2
        CHECK(kn_condition_lhs(r1, r2, 1) == Approx(4.0 * r2 * r2 - 6.0).margin(1e-9));
    }

    // identity with n (n+1) h(t_n)
    for (int i = 0; i < 300; ++i) {
        double r2 = rng.uniform(1.05, 3.0), r1 = rng.uniform(r2, 4.0);
        long long n = rng.uniform_int(1, 10);
        double lhs = kn_condition_lhs(r1, r2, n);
        double rhs = n * (n + 1.0) * h_value(r1, r2, t_n_zero(r1, r2, n));
        CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("zero-case certificates") {
    double s2 = std::sqrt(2.0);
    double t1 = 11.0 / (8.0 * s2);

    auto good = certify_theorem3(ZeroParams::from_r(2.0, s2, std::acos(t1 - 0.05)));
    CHECK(good.verdict == Verdict::CertifiedDiscreteFaithful);
    CHECK(good.region_indices == std::vector<long long>{1, 2});
    CHECK(good.region_margins[0] == Approx(2.0).margin(1e-12));

    // exactly at the parabolic threshold: still non-elliptic, still certified
    auto boundary = certify_theorem3(ZeroParams::from_r(2.0, s2, std::acos(t1)));
    CHECK(boundary.verdict == Verdict::CertifiedDiscreteFaithful);

    auto above = certify_theorem3(ZeroParams::from_r(2.0, s2, std::acos(t1 + 0.01)));
    CHECK(above.verdict == Verdict::NotCertified);

    // (sqrt 3, sqrt 2) fails the condition at every angle
    for (double a : {0.0, 0.7, 1.5, 3.0}) {
        auto c = certify_theorem3(ZeroParams::from_r(std::sqrt(3.0), s2, a));
        CHECK(c.verdict == Verdict::NotCertified);
    }

    // r1 = r2 lies in no strip
    auto degenerate = certify_theorem3(ZeroParams::from_r(1.7, 1.7, 1.0));
    CHECK(degenerate.verdict == Verdict::Inconclusive);
    CHECK(!degenerate.note.empty());
}

TEST_CASE("the region index minimizes the threshold") {
    oracles::Rng rng(511);
    for (int i = 0; i < 200; ++i) {
        double r2 = rng.uniform(1.05, 3.0), r1 = rng.uniform(r2 + 1e-9, 4.0);
        for (long long n : region_index_n(r1, r2))
            for (long long m = 1; m <= 10; ++m)
                CHECK(t_n_zero(r1, r2, n) <= t_n_zero(r1, r2, m) + 1e-10);
    }
}
