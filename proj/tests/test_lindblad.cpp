#include <doctest.h>

#include <cmath>

#include "core/errors.hpp"
#include "core/lindblad.hpp"
#include "helpers.hpp"

using namespace qtx;

namespace {

// Single damped cavity with an optional thermal bath.
Liouvillian damped_cavity(int cutoff, double delta, double n_th) {
    const CMat a = annihilation(cutoff);
    std::vector<CollapseChannel> channels;
    channels.push_back({a, delta * (n_th + 1.0)});
    if (n_th > 0.0) {
        channels.push_back({a.adjoint(), delta * n_th});
    }
    return Liouvillian(CMat::Zero(cutoff, cutoff), std::move(channels));
}

DensityMatrix fock_state(int cutoff, int n) {
    CVec psi = CVec::Zero(cutoff);
    psi(n) = 1.0;
    return DensityMatrix::pure(ModeSpace({cutoff}), psi);
}

}  // namespace

TEST_CASE("generator on trivial systems") {
    SUBCASE("H = 0 and no channels is the zero map") {
        Liouvillian l(CMat::Zero(3, 3), {});
        Rng rng(2);
        CHECK(max_abs(apply_liouvillian(l, test::random_density(rng, 3))) == 0.0);
    }
    SUBCASE("photon decay rate of a damped cavity") {
        const double delta = 0.7;
        Liouvillian l = damped_cavity(4, delta, 0.0);
        const CMat dot = apply_liouvillian(l, fock_state(4, 1));
        const double ndot = expectation(dot, number_operator(4)).real();
        CHECK(ndot == doctest::Approx(-delta).epsilon(1e-12));
    }
    SUBCASE("thermal state is a detailed-balance fixed point") {
        Liouvillian l = damped_cavity(12, 1.3, 2.0);
        CHECK(max_abs(apply_liouvillian(l, thermal_state(12, 2.0))) < 1e-9);
    }
    SUBCASE("dimension mismatch rejected") {
        Liouvillian l = damped_cavity(4, 1.0, 0.0);
        Rng rng(3);
        CHECK_THROWS_AS(apply_liouvillian(l, test::random_density(rng, 3)),
                        InvalidArgument);
        CHECK_THROWS_AS(Liouvillian(CMat::Zero(3, 3), {{annihilation(4), 1.0}}),
                        InvalidArgument);
        CHECK_THROWS_AS(Liouvillian(CMat::Zero(3, 3), {{annihilation(3), -0.5}}),
                        InvalidArgument);
    }
}

TEST_CASE("generator structure on random inputs") {
    Rng rng(19);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = 5;
        std::vector<CollapseChannel> channels;
        channels.push_back({test::random_complex(rng, n), rng.uniform(0.0, 2.0)});
        channels.push_back({test::random_complex(rng, n), rng.uniform(0.0, 2.0)});
        Liouvillian l(test::random_hermitian(rng, n), std::move(channels));

        const CMat rho = test::random_hermitian_unit_trace(rng, n);
        const CMat out = apply_liouvillian(l, rho);
        CHECK(std::abs(out.trace()) < 1e-9);          // trace annihilation
        CHECK(hermiticity_defect(out) < 1e-10);       // Hermiticity preservation
    }
}

TEST_CASE("matrix-free application matches the dense superoperator") {
    Rng rng(29);
    const int n = 4;
    std::vector<CollapseChannel> channels;
    channels.push_back({test::random_complex(rng, n), 0.8});
    channels.push_back({test::random_complex(rng, n), 0.3});
    Liouvillian l(test::random_hermitian(rng, n), std::move(channels));
    const CMat sup = l.superoperator();

    for (int rep = 0; rep < 5; ++rep) {
        const CMat rho = test::random_complex(rng, n);
        // Row-major buffer is the row-stacked vectorization.
        Eigen::Map<const CVec> vec_rho(rho.data(), n * n);
        const CVec lhs = sup * vec_rho;
        const CMat rhs = apply_liouvillian(l, rho);
        Eigen::Map<const CVec> vec_rhs(rhs.data(), n * n);
        CHECK((lhs - vec_rhs).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("evolution of a damped cavity follows the analytic decay") {
    const double delta = 1.0;
    Liouvillian l = damped_cavity(4, delta, 0.0);
    DensityMatrix rho = fock_state(4, 1);
    const double dt = 0.005 / delta;

    rho = evolve(l, rho, 1.0 / delta, dt);
    const double n = expectation(rho, number_operator(4)).real();
    CHECK(n == doctest::Approx(0.36787944117144233).epsilon(1e-6));
}

TEST_CASE("evolve protocol") {
    Liouvillian l = damped_cavity(4, 1.0, 0.0);
    const DensityMatrix rho = fock_state(4, 1);

    SUBCASE("zero time returns the initial state exactly") {
        const DensityMatrix out = evolve(l, rho, 0.0, 0.01);
        CHECK(max_abs(out.matrix() - rho.matrix()) == 0.0);
    }
    SUBCASE("invalid step sizes rejected") {
        CHECK_THROWS_AS(evolve(l, rho, 1.0, 0.0), InvalidArgument);
        CHECK_THROWS_AS(evolve(l, rho, 1.0, -0.1), InvalidArgument);
        CHECK_THROWS_AS(evolve(l, rho, -1.0, 0.1), InvalidArgument);
    }
    SUBCASE("thermal steady state is unchanged by evolution") {
        Liouvillian lt = damped_cavity(14, 1.0, 0.5);
        const DensityMatrix ss = thermal_state(14, 0.5);
        const DensityMatrix out = evolve(lt, ss, 10.0, 0.002);
        CHECK(max_abs(out.matrix() - ss.matrix()) < 1e-7);
    }
    SUBCASE("semigroup composition") {
        const DensityMatrix full = evolve(l, rho, 0.9, 0.004);
        const DensityMatrix split = evolve(l, evolve(l, rho, 0.4, 0.004), 0.5, 0.004);
        CHECK(max_abs(full.matrix() - split.matrix()) < 1e-6);
    }
    SUBCASE("positivity is preserved") {
        Rng rng(37);
        Liouvillian lt = damped_cavity(6, 1.0, 1.0);
        DensityMatrix start(ModeSpace({6}), test::random_density(rng, 6));
        const DensityMatrix out = evolve(lt, start, 3.0, 0.002);
        Eigen::SelfAdjointEigenSolver<CMat> es(out.matrix(), Eigen::EigenvaluesOnly);
        CHECK(es.eigenvalues().minCoeff() > -1e-7);
    }
}

TEST_CASE("time-dependent drive matches the analytic coherent amplitude") {
    // Resonantly driven damped cavity starting from vacuum:
    // <n>(t) = |2 eps/delta (1 - e^{-delta t/2})|^2.
    const double delta = 2.0, eps = 0.1, omega = 5.0, t_final = 1.0;
    const int cutoff = 4;
    const CMat a = annihilation(cutoff);
    const CMat num = number_operator(cutoff);

    auto h = [&](double t) {
        const Complex phase = std::exp(Complex(0.0, -omega * t));
        CMat out = omega * num;
        out += Complex(0.0, eps) * (phase * a.adjoint() - std::conj(phase) * a);
        return out;
    };
    std::vector<CollapseChannel> channels{{a, delta}};
    const DensityMatrix rho =
        evolve(h, channels, DensityMatrix::vacuum(ModeSpace({cutoff})), t_final, 0.002);

    const double beta = 2.0 * eps / delta * (1.0 - std::exp(-delta * t_final / 2.0));
    const double n = expectation(rho, num).real();
    CHECK(n == doctest::Approx(beta * beta).epsilon(1e-6));
}

TEST_CASE("steady state") {
    SUBCASE("thermal bath fixes the truncated geometric distribution") {
        const int cutoff = 20;
        const double n_th = 2.0;
        const DensityMatrix ss = steady_state(damped_cavity(cutoff, 1.0, n_th));
        const DensityMatrix want = thermal_state(cutoff, n_th);
        CHECK(max_abs(ss.matrix() - want.matrix()) < 1e-10);
    }
    SUBCASE("zero-temperature cavity relaxes to vacuum") {
        const DensityMatrix ss = steady_state(damped_cavity(6, 0.8, 0.0));
        CHECK(std::abs(ss.matrix()(0, 0) - Complex(1.0)) < 1e-10);
        CHECK(max_abs(ss.matrix()) <= 1.0 + 1e-12);
    }
    SUBCASE("beam splitter with cold baths relaxes to the displaced vacuum") {
        TransducerParams p;
        p.delta = {2.0, 2.0};
        p.n_th = 0.0;
        p.gamma = {0.5, 0.5};
        p.n_pump = {1.0, 1.0};
        const ModeSpace space({2, 2, 2});
        Liouvillian l(build_beam_splitter_hamiltonian(p, space),
                      transducer_channels(p, space));

        const DensityMatrix ss = steady_state(l, space);
        CHECK(std::abs(ss.matrix()(0, 0) - Complex(1.0)) < 1e-8);

        // Independent route: evolve a random state for t = 50/delta_m.
        Rng rng(43);
        DensityMatrix start(space, test::random_density(rng, 8));
        const DensityMatrix relaxed = evolve(l, start, 50.0, 0.002);
        CHECK(max_abs(relaxed.matrix() - ss.matrix()) < 1e-7);
    }
    SUBCASE("degenerate generator is reported") {
        // Closed dynamics under a number Hamiltonian: every diagonal state is
        // stationary, so no unique steady state exists.
        Liouvillian l(number_operator(3), {});
        CHECK_THROWS_AS(steady_state(l), DegenerateSystem);
    }
    SUBCASE("superoperator materialization is bounded") {
        Liouvillian l(CMat::Zero(128, 128), {});
        CHECK_THROWS_AS(l.superoperator(), InvalidArgument);
    }
}

TEST_CASE("steady state of the steady state evolves to itself") {
    Liouvillian l = damped_cavity(10, 1.0, 1.0);
    const DensityMatrix ss = steady_state(l);
    const DensityMatrix out = evolve(l, ss, 5.0, 0.002);
    CHECK(max_abs(out.matrix() - ss.matrix()) < 1e-7);
}
