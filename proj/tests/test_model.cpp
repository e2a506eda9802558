#include <doctest.h>

#include <cmath>
#include <random>

#include "cavsim/model.hpp"
#include "helpers.hpp"

using namespace cavsim;
using qmath::Complex;
using qmath::ComplexMatrix;

namespace {

model::CouplingSchedule reference_schedule() {
    model::CouplingSchedule s;
    s.g_el_0 = 6e7;
    s.g_el_1 = 6e4;
    s.g_c1_amplitude = 4e3;
    s.g_c0_amplitude = 4.0;
    s.decay_rate = 0.1;
    s.g0 = 4.0;
    s.m_ev = 1e6;
    return s;
}

model::ModelParams reference_params(double omega_el) {
    model::ModelParams p;
    p.omega_el = omega_el;
    p.omega_c = omega_el / 2.0;
    p.mu = 0.4;
    p.schedule = reference_schedule();
    return p;
}

}  // namespace

TEST_SUITE("model") {

TEST_CASE("basis labels map to the canonical index order") {
    const char* expected[] = {"000", "001", "010", "011", "100", "101"};
    for (int idx = 0; idx < model::kSixLevelDim; ++idx) {
        const model::BasisLabel label = model::BasisLabel::from_index(idx);
        CHECK(label.index() == idx);
        CHECK(label.to_string() == expected[idx]);
        CHECK(model::BasisLabel::parse(expected[idx]).index() == idx);
    }
    CHECK_THROWS_AS(model::BasisLabel(1, 1, 0), ValidationError);
    CHECK_THROWS_AS(model::BasisLabel::parse("110"), ValidationError);
    CHECK_THROWS_AS(model::BasisLabel::parse("111"), ValidationError);
    CHECK_THROWS_AS(model::BasisLabel::parse("01"), ValidationError);
    CHECK_THROWS_AS(model::BasisLabel::parse("0a1"), ValidationError);
}

TEST_CASE("tunneling_hamiltonian matrix form") {
    const auto h = model::tunneling_hamiltonian({3.0, 2.0});
    ComplexMatrix expected(2, 2);
    expected << 0.0, -2.0, -2.0, 3.0;
    CHECK(test::max_diff(h.matrix(), expected) == 0.0);

    // Symmetric double-well limit a -> 0.
    const auto symmetric = model::tunneling_hamiltonian({1e-300, 1.0});
    CHECK(symmetric.matrix()(0, 1) == Complex(-1.0, 0.0));
    CHECK(symmetric.matrix()(1, 0) == Complex(-1.0, 0.0));

    CHECK_THROWS_AS(model::tunneling_hamiltonian({-1.0, 2.0}), ValidationError);
    CHECK_THROWS_AS(model::tunneling_hamiltonian({1.0, 0.0}), ValidationError);
}

TEST_CASE("orbital_gap closed form and limits") {
    CHECK(model::orbital_gap({3.0, 2.0}) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(model::orbital_gap({1e-12, 1.0}) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(model::orbital_gap({7.0, 1e-12}) == doctest::Approx(7.0).epsilon(1e-12));
}

TEST_CASE("orbital_gap equals the spectral gap of the tunneling operator") {
    std::mt19937 rng(101);
    std::uniform_real_distribution<double> dist(1e-6, 10.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const model::TunnelingParams p{dist(rng), dist(rng)};
        const auto eig = qmath::hermitian_eigendecompose(model::tunneling_hamiltonian(p));
        const double gap = eig.eigenvalues[1] - eig.eigenvalues[0];
        CHECK(std::abs(model::orbital_gap(p) - gap) <= 1e-12 * std::max(1.0, gap));
    }
}

TEST_CASE("molecular_orbitals hand-solved case and conventions") {
    // (a=3, g=2): ground energy (3-5)/2 = -1, vector (2,1)/sqrt(5).
    const auto orbitals = model::molecular_orbitals({3.0, 2.0});
    CHECK(orbitals.ground[0] == doctest::Approx(2.0 / std::sqrt(5.0)).epsilon(1e-14));
    CHECK(orbitals.ground[1] == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-14));
    CHECK(orbitals.excited[0] == doctest::Approx(-1.0 / std::sqrt(5.0)).epsilon(1e-14));
    CHECK(orbitals.excited[1] == doctest::Approx(2.0 / std::sqrt(5.0)).epsilon(1e-14));

    // Symmetric limit: equal weights.
    const auto symmetric = model::molecular_orbitals({1e-14, 1.0});
    CHECK(symmetric.ground[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-7));
    CHECK(symmetric.ground[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-7));
}

TEST_CASE("molecular_orbitals ordering and orthogonality for random parameters") {
    std::mt19937 rng(55);
    std::uniform_real_distribution<double> dist(1e-3, 10.0);
    for (int trial = 0; trial < 200; ++trial) {
        const model::TunnelingParams p{dist(rng), dist(rng)};
        const auto orbitals = model::molecular_orbitals(p);
        CHECK(std::abs(orbitals.ground[0]) > std::abs(orbitals.ground[1]));
        CHECK(std::abs(orbitals.excited[0]) < std::abs(orbitals.excited[1]));
        CHECK(orbitals.ground[0] > 0.0);
        CHECK(orbitals.excited[1] > 0.0);
        CHECK(std::abs(orbitals.ground.dot(orbitals.excited)) <= 1e-12);
        CHECK(orbitals.ground.norm() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(orbitals.excited.norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("cavity_coupling square-root law") {
    CHECK(model::cavity_coupling(4.0, 1.0, 1.0, 0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(model::cavity_coupling(1.0, 1.0, 1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    const double base = model::cavity_coupling(2.5, 3.0, 1.2, 0.8);
    CHECK(model::cavity_coupling(10.0, 3.0, 1.2, 0.8) == doctest::Approx(2.0 * base).epsilon(1e-14));
    CHECK_THROWS_AS(model::cavity_coupling(-1.0, 1.0, 1.0, 1.0), ValidationError);
    CHECK_THROWS_AS(model::cavity_coupling(1.0, 0.0, 1.0, 1.0), ValidationError);
}

TEST_CASE("effective_phonon_coupling") {
    CHECK(model::effective_phonon_coupling(4.0, 1e6) == doctest::Approx(4000.0).epsilon(1e-15));
    CHECK(model::effective_phonon_coupling(3.0, 0.0) == 0.0);
    CHECK(model::effective_phonon_coupling(0.0, 17.0) == 0.0);
    CHECK_THROWS_AS(model::effective_phonon_coupling(-1.0, 1.0), ValidationError);
}

TEST_CASE("coupling schedule ordering constraint") {
    model::CouplingSchedule s = reference_schedule();
    CHECK_NOTHROW(s.validate());

    s.g_el_0 = 1.0;
    s.g_el_1 = 10.0;
    CHECK_THROWS_AS(s.validate(), ValidationError);

    s = reference_schedule();
    s.g_c1_amplitude = 6e4;  // not strictly below g_el_1
    CHECK_THROWS_AS(s.validate(), ValidationError);

    s = reference_schedule();
    s.g_c0_amplitude = 1000.0;  // breaks g_c1 >= 100 g_c0
    CHECK_THROWS_AS(s.validate(), ValidationError);
}

TEST_CASE("coupling_schedule_eval decay law") {
    const model::CouplingSchedule s = reference_schedule();
    const auto at0 = model::coupling_schedule_eval(s, 0.0);
    CHECK(at0.g_c0 == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(at0.g_c1 == doctest::Approx(4000.0).epsilon(1e-15));
    CHECK(at0.g_el0 == doctest::Approx(6e7).epsilon(1e-15));
    CHECK(at0.g_el1 == doctest::Approx(6e4).epsilon(1e-15));

    // t = 60 (iteration 6000 at dt = 0.01).
    const auto at60 = model::coupling_schedule_eval(s, 60.0);
    CHECK(at60.g_c1 == doctest::Approx(4000.0 * std::exp(-6.0)).epsilon(1e-14));
    CHECK(at60.g_c0 == doctest::Approx(4.0 * std::exp(-6.0)).epsilon(1e-14));
    CHECK(at60.g_el0 == doctest::Approx(6e7).epsilon(1e-15));

    model::CouplingSchedule constant = reference_schedule();
    constant.decay_rate = 0.0;
    const auto later = model::coupling_schedule_eval(constant, 123.0);
    CHECK(later.g_c1 == doctest::Approx(4000.0).epsilon(1e-15));

    CHECK_THROWS_AS(model::coupling_schedule_eval(s, -1.0), ValidationError);
}

TEST_CASE("build_jc_hamiltonian free, rotating-wave, and strong terms") {
    const double omega = 4.0;
    const auto free = model::build_jc_hamiltonian(omega, 0.0, false);
    ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
    expected(1, 1) = omega;
    expected(2, 2) = omega;
    expected(3, 3) = 2.0 * omega;
    CHECK(test::max_diff(free.matrix(), expected) == 0.0);

    const double g = 0.5;
    const auto rwa = model::build_jc_hamiltonian(omega, g, false);
    expected(1, 2) = g;
    expected(2, 1) = g;
    CHECK(test::max_diff(rwa.matrix(), expected) == 0.0);

    const auto strong = model::build_jc_hamiltonian(omega, g, true);
    CHECK(strong.matrix()(0, 3) == Complex(g, 0.0));
    CHECK(strong.matrix()(3, 0) == Complex(g, 0.0));
}

TEST_CASE("rotating-wave term commutes with the excitation number, strong does not") {
    ComplexMatrix number = ComplexMatrix::Zero(4, 4);
    number(1, 1) = 1.0;
    number(2, 2) = 1.0;
    number(3, 3) = 2.0;
    const auto commutator = [&number](const ComplexMatrix& h) {
        return qmath::max_abs(h * number - number * h);
    };
    CHECK(commutator(model::build_jc_hamiltonian(2.0, 0.3, false).matrix()) == 0.0);
    CHECK(commutator(model::build_jc_hamiltonian(2.0, 0.3, true).matrix()) > 0.1);
}

TEST_CASE("six-level Hamiltonian matches the coupling pattern") {
    const model::ModelParams p = reference_params(4.0);
    const auto h = model::build_six_level_hamiltonian(p, 0.0);
    const ComplexMatrix& m = h.matrix();

    // Diagonal.
    const double diag[6] = {0.0, 2.0, 4.0, 6.0, 4.0, 6.0};
    for (int i = 0; i < 6; ++i) CHECK(m(i, i).real() == doctest::Approx(diag[i]).epsilon(1e-15));

    // The five couplings.
    CHECK(m(0, 1).real() == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(m(2, 3).real() == doctest::Approx(4000.0).epsilon(1e-15));
    CHECK(m(2, 4).real() == doctest::Approx(6e7).epsilon(1e-15));
    CHECK(m(3, 5).real() == doctest::Approx(6e4).epsilon(1e-15));
    CHECK(m(4, 5).real() == doctest::Approx(4.0).epsilon(1e-15));

    // Exactly 5 independent nonzero off-diagonal entries, and Hermitian.
    int nonzero_upper = 0;
    for (int i = 0; i < 6; ++i) {
        for (int j = i + 1; j < 6; ++j) {
            if (std::abs(m(i, j)) > 0.0) ++nonzero_upper;
        }
    }
    CHECK(nonzero_upper == 5);
    CHECK(qmath::hermiticity_defect(m) == 0.0);

    // Block diagonal over {0,1} and {2..5}.
    for (int i = 0; i < 2; ++i) {
        for (int j = 2; j < 6; ++j) {
            CHECK(m(i, j) == Complex(0.0, 0.0));
        }
    }
}

TEST_CASE("six-level diagonal is pure H0 once the couplings decay away") {
    model::ModelParams p = reference_params(0.4);
    // With decay exp(-0.1 t) underflowed, only the constant g_el couplings remain.
    const auto late = model::build_six_level_hamiltonian(p, 1e5);
    const ComplexMatrix& m = late.matrix();
    CHECK(m(0, 1) == Complex(0.0, 0.0));
    CHECK(m(2, 3) == Complex(0.0, 0.0));
    CHECK(m(4, 5) == Complex(0.0, 0.0));
    CHECK(m(2, 4).real() == doctest::Approx(6e7).epsilon(1e-15));
    const double diag[6] = {0.0, 0.2, 0.4, 0.6, 0.4, 0.6};
    for (int i = 0; i < 6; ++i) CHECK(m(i, i).real() == doctest::Approx(diag[i]).epsilon(1e-15));
}

TEST_CASE("temperature_from_ratio") {
    CHECK(model::temperature_from_ratio(0.4, 0.2) ==
          doctest::Approx(0.2 / std::log(2.5)).epsilon(1e-15));
    CHECK(model::temperature_from_ratio(std::exp(-1.0), 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(model::temperature_from_ratio(0.0, 1.0) == 0.0);
    CHECK(model::temperature_from_ratio(-0.5, 1.0) == 0.0);
    CHECK(model::temperature_from_ratio(1e-12, 1.0) > 0.0);
    CHECK_THROWS_AS(model::temperature_from_ratio(1.0, 1.0), ValidationError);
    CHECK_THROWS_AS(model::temperature_from_ratio(1.5, 1.0), ValidationError);
}

TEST_CASE("gibbs_state geometric populations") {
    const auto state = model::gibbs_state(0.4, 2);
    CHECK(state.matrix()(0, 0).real() == doctest::Approx(5.0 / 7.0).epsilon(1e-15));
    CHECK(state.matrix()(1, 1).real() == doctest::Approx(2.0 / 7.0).epsilon(1e-15));

    const auto cold = model::gibbs_state(0.0, 5);
    CHECK(cold.matrix()(0, 0).real() == doctest::Approx(1.0).epsilon(1e-15));
    for (int n = 1; n < 5; ++n) CHECK(cold.matrix()(n, n).real() == 0.0);

    const auto warm = model::gibbs_state(0.73, 8);
    for (int n = 0; n + 1 < 8; ++n) {
        CHECK(warm.matrix()(n + 1, n + 1).real() / warm.matrix()(n, n).real() ==
              doctest::Approx(0.73).epsilon(1e-12));
    }
    CHECK(warm.matrix().trace().real() == doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(model::gibbs_state(1.0, 3), ValidationError);
    CHECK_THROWS_AS(model::gibbs_state(-0.1, 3), ValidationError);
    CHECK_THROWS_AS(model::gibbs_state(0.4, 0), ValidationError);
}

TEST_CASE("gibbs_state is consistent with temperature_from_ratio") {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> mus(1e-4, 0.999);
    std::uniform_real_distribution<double> omegas(0.01, 10.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double mu = mus(rng);
        const double omega_c = omegas(rng);
        const double temperature = model::temperature_from_ratio(mu, omega_c);
        CHECK(std::exp(-omega_c / temperature) == doctest::Approx(mu).epsilon(1e-12));
    }
}

TEST_CASE("molecule params normalize and enforce alpha > beta > 0") {
    const model::MoleculeParams p(4.0, 0.5, 2.0, 1.0);
    CHECK(p.alpha == doctest::Approx(2.0 / std::sqrt(5.0)).epsilon(1e-15));
    CHECK(p.beta == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-15));
    CHECK(p.alpha * p.alpha + p.beta * p.beta == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(model::MoleculeParams(4.0, 0.5, 1.0, 2.0), ValidationError);
    CHECK_THROWS_AS(model::MoleculeParams(4.0, 0.5, 1.0, 0.0), ValidationError);
    CHECK_THROWS_AS(model::MoleculeParams(0.0, 0.5, 2.0, 1.0), ValidationError);
}

TEST_CASE("model params validation") {
    model::ModelParams p = reference_params(4.0);
    CHECK_NOTHROW(p.validate());
    p.mu = 1.0;
    CHECK_THROWS_AS(p.validate(), ValidationError);
    p = reference_params(4.0);
    p.omega_c = 0.0;
    CHECK_THROWS_AS(p.validate(), ValidationError);
}

}  // TEST_SUITE
