#include <doctest.h>

#include "gbomb/channels.hpp"
#include "gbomb/errors.hpp"
#include "support/oracles.hpp"

using namespace gbomb;
using namespace gbomb::testing;

namespace {

GaussianChannel random_cptp(Rng& rng, int modes)
{
    // the reduced channel of a random bombardment step is CPTP by construction
    RandomSetupOptions o;
    o.system_modes = modes;
    o.ancilla_modes = 1 + static_cast<int>(rng() % 2);
    o.dt = 0.5;
    return reduce_from_joint(random_setup(rng, o));
}

} // namespace

TEST_CASE("apply")
{
    Rng rng = make_rng(20);
    const GaussianState s = random_state(rng, 1, 1.0, 3.0, 0.5);
    const GaussianState same = apply(GaussianChannel::identity(2), s);
    CHECK(max_abs(same.cov - s.cov) == 0.0);
    CHECK(max_abs(same.mean - s.mean) == 0.0);

    const Matrix target = 2.0 * Matrix::Identity(2, 2);
    const GaussianState c = apply({Matrix::Zero(2, 2), Vector::Zero(2), target}, s);
    CHECK(max_abs(c.cov - target) == 0.0);
    CHECK(max_abs(c.mean) == 0.0);

    for (int trial = 0; trial < 1000; ++trial) {
        const GaussianChannel ch = random_cptp(rng, 1);
        CHECK(validate_state(apply(ch, random_state(rng, 1, 1.0, 3.0, 0.5))).valid);
    }
    CHECK_THROWS_AS(apply(GaussianChannel::identity(4), s), DimensionMismatch);
}

TEST_CASE("is_cptp")
{
    Rng rng = make_rng(21);
    const Matrix sp = random_symplectic(rng, 2, 1.0);
    const CpReport sym = is_cptp({sp, Vector::Zero(4), Matrix::Zero(4, 4)});
    CHECK(sym.ok);
    CHECK(std::abs(sym.margin) < 1e-12);

    const CpReport half = is_cptp({0.5 * Matrix::Identity(2, 2), Vector::Zero(2), Matrix::Zero(2, 2)});
    CHECK_FALSE(half.ok);
    CHECK(half.margin == doctest::Approx(-0.75));

    const CpReport noisy = is_cptp({0.5 * Matrix::Identity(2, 2), Vector::Zero(2), Matrix::Identity(2, 2)});
    CHECK(noisy.ok);
    CHECK(noisy.margin == doctest::Approx(0.25));
}

TEST_CASE("compose and power")
{
    Rng rng = make_rng(22);
    for (int trial = 0; trial < 500; ++trial) {
        const GaussianChannel a = random_cptp(rng, 1 + trial % 2), b = random_cptp(rng, 1 + trial % 2);
        CHECK(is_cptp(compose(b, a)).ok);
    }
    const GaussianChannel c = random_cptp(rng, 2);
    CHECK(max_diff(compose(GaussianChannel::identity(4), c), c) == 0.0);
    const GaussianState s = random_state(rng, 2, 1.0, 3.0, 0.5);
    const GaussianState twice = apply(c, apply(c, s));
    const GaussianState composed = apply(compose(c, c), s);
    CHECK(max_abs(twice.cov - composed.cov) < 1e-12);
    CHECK(max_abs(twice.mean - composed.mean) < 1e-12);

    GaussianChannel seq = GaussianChannel::identity(4);
    for (int n = 0; n <= 13; ++n) {
        CHECK(max_diff(power(c, n), seq) < 1e-10 * std::max(1.0, max_abs(seq.R)));
        seq = compose(c, seq);
    }
    CHECK_THROWS_AS(power(c, -1), InvalidSetup);
}

TEST_CASE("reduce_from_joint")
{
    Rng rng = make_rng(23);
    JointSetup j = random_setup_any(rng, 0.3);
    j.G.setZero();
    const GaussianChannel free = reduce_from_joint(j);
    const AffineSymplectic flow = hamiltonian_flow({j.F_S, j.alpha_S}, j.dt);
    CHECK(max_abs(free.T - flow.S) < 1e-14);
    CHECK(max_abs(free.R) == 0.0);
    CHECK(max_abs(free.d - flow.d) < 1e-14);

    JointSetup zero = random_setup_any(rng, 0.0);
    CHECK(max_diff(reduce_from_joint(zero), GaussianChannel::identity(zero.F_S.rows())) == 0.0);

    for (int trial = 0; trial < 100; ++trial) {
        const JointSetup r = random_setup_any(rng, 0.05 + 0.01 * (trial % 30));
        const GaussianState s = random_state(rng, r.system_modes(), 1.0, 3.0, 0.5);
        const GaussianState via_channel = apply(reduce_from_joint(r), s);
        const GaussianState via_joint = joint_evolution_marginal(r, s);
        CHECK(max_abs(via_channel.cov - via_joint.cov) < 1e-12);
        CHECK(max_abs(via_channel.mean - via_joint.mean) < 1e-12);
        CHECK(is_cptp(reduce_from_joint(r)).ok);
    }

    JointSetup bad = random_setup_any(rng, 0.1);
    bad.ancilla.cov *= 0.2;
    CHECK_THROWS_AS(reduce_from_joint(bad), InvalidAncillaState);
    JointSetup shape = random_setup_any(rng, 0.1);
    shape.G = Matrix::Zero(3, 2);
    CHECK_THROWS_AS(reduce_from_joint(shape), DimensionMismatch);
}

TEST_CASE("channel_taylor")
{
    Rng rng = make_rng(24);
    for (int trial = 0; trial < 20; ++trial) {
        const JointSetup j = random_setup_any(rng, 0.1);
        const ChannelSeries s = channel_taylor(j, kMaxChannelTaylorOrder);
        const Matrix omega_s = symplectic_form(j.system_modes());
        CHECK(max_abs(s.T[1] - omega_s * j.F_S) < 1e-14);
        CHECK(max_abs(s.R[1]) == 0.0);
        CHECK(max_abs(s.R[2] - omega_s * j.G * j.ancilla.cov * j.G.transpose() * omega_s.transpose()) < 1e-13);

        // remainder after order K scales as dt^{K+1}
        for (int k = 1; k <= 3; ++k) {
            const ChannelSeries sk = channel_taylor(j, k);
            std::vector<double> errs;
            for (double h : {1e-2, 5e-3, 2.5e-3}) {
                JointSetup jh = j;
                jh.dt = h;
                errs.push_back(max_diff(sk.evaluate(h), reduce_from_joint(jh)));
            }
            const double expected = std::pow(2.0, k + 1);
            CHECK(errs[0] / errs[1] == doctest::Approx(expected).epsilon(0.15));
            CHECK(errs[1] / errs[2] == doctest::Approx(expected).epsilon(0.15));
        }
    }
    CHECK_THROWS_AS(channel_taylor(random_setup_any(rng, 0.1), 5), InvalidSetup);
}
