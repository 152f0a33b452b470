#include <catch2/catch.hpp>

#include <random>

#include "hodgeflow/hodge.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace hodgeflow;

namespace {

CellComplex open_triangle() {
    return CellComplex({{"a", ""}, {"b", ""}, {"c", ""}},
                       {{"e0", "a", "b", ""}, {"e1", "b", "c", ""}, {"e2", "a", "c", ""}}, {});
}

CellComplex filled_triangle() {
    return CellComplex({{"a", ""}, {"b", ""}, {"c", ""}},
                       {{"e0", "a", "b", ""}, {"e1", "b", "c", ""}, {"e2", "a", "c", ""}},
                       {{"f0", {{"e0", 1}, {"e1", 1}, {"e2", -1}}, ""}});
}

Cochain edge_flow(std::initializer_list<double> values) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (double x : values)
        v(i++) = x;
    return Cochain(1, std::move(v));
}

}  // namespace

TEST_CASE("unit-metric Laplacians reduce to the unweighted operators") {
    const IncidenceMatrices B = incidence_matrices(filled_triangle());
    const Laplacians L = laplacians(B, EdgeMetric::identity(3));
    const Eigen::MatrixXd B1 = B.B1d(), B2 = B.B2d();
    CHECK((L.L0 - B1 * B1.transpose()).cwiseAbs().maxCoeff() == Approx(0.0).margin(1e-14));
    CHECK((L.L1 - (B1.transpose() * B1 + B2 * B2.transpose())).cwiseAbs().maxCoeff() ==
          Approx(0.0).margin(1e-14));
    CHECK((L.L2 - B2.transpose() * B2).cwiseAbs().maxCoeff() == Approx(0.0).margin(1e-14));
    CHECK(L.L2(0, 0) == Approx(3.0));
}

TEST_CASE("open-triangle L0 is the 3-cycle graph Laplacian") {
    const IncidenceMatrices B = incidence_matrices(open_triangle());
    const Laplacians L = laplacians(B, EdgeMetric::identity(3));
    CHECK(L.L0.diagonal() == Eigen::Vector3d(2, 2, 2));
    CHECK(L.L0(0, 1) == -1);
}

TEST_CASE("weighted L1 is self-adjoint under the metric and has the right kernel") {
    std::mt19937_64 rng(411);
    for (int trial = 0; trial < 20; ++trial) {
        const CellComplex k = testing::random_complex(rng);
        const IncidenceMatrices B = incidence_matrices(k);
        const EdgeMetric M1 = testing::random_metric(rng, k.num_edges());
        const Laplacians L = laplacians(B, M1);

        // M1 L1 symmetric <=> L1 self-adjoint in the M1 inner product.
        const Eigen::MatrixXd M1L1 = M1.weights().asDiagonal() * L.L1;
        REQUIRE((M1L1 - M1L1.transpose()).cwiseAbs().maxCoeff() <=
                1e-9 * std::max(1.0, M1L1.cwiseAbs().maxCoeff()));

        // Any harmonic residual lies in ker L1.
        const Cochain f = testing::random_flow(rng, k.num_edges());
        const HodgeDecomposition dec = hodge_decompose(f, B, M1);
        const double scale = std::max(1.0, f.values.norm());
        REQUIRE((L.L1 * dec.f_harm.values).norm() <= 1e-7 * scale);
    }
}

TEST_CASE("laplacians reject mismatched metric size") {
    const IncidenceMatrices B = incidence_matrices(open_triangle());
    CHECK_THROWS_AS(laplacians(B, EdgeMetric::identity(2)), std::invalid_argument);
}

TEST_CASE("cycle flow on the open triangle is pure harmonic") {
    const IncidenceMatrices B = incidence_matrices(open_triangle());
    const Cochain f = edge_flow({1, 1, -1});
    const HodgeDecomposition dec = hodge_decompose(f, B, EdgeMetric::identity(3));
    CHECK(dec.f_grad.values.norm() == Approx(0.0).margin(1e-10));
    CHECK(dec.f_curl.values.norm() == Approx(0.0).margin(1e-10));
    CHECK((dec.f_harm.values - f.values).norm() == Approx(0.0).margin(1e-10));
}

TEST_CASE("the same cycle flow on the filled triangle is pure curl with psi = 1") {
    const IncidenceMatrices B = incidence_matrices(filled_triangle());
    const Cochain f = edge_flow({1, 1, -1});
    const HodgeDecomposition dec = hodge_decompose(f, B, EdgeMetric::identity(3));
    CHECK(dec.psi[0] == Approx(1.0));
    CHECK((dec.f_curl.values - f.values).norm() == Approx(0.0).margin(1e-10));
    CHECK(dec.f_harm.values.norm() == Approx(0.0).margin(1e-10));
}

TEST_CASE("an exact gradient input is recovered as pure gradient") {
    const IncidenceMatrices B = incidence_matrices(open_triangle());
    const Cochain f = edge_flow({1, 0, 1});  // B1^T phi for phi = (0, 1, 1)
    const HodgeDecomposition dec = hodge_decompose(f, B, EdgeMetric::identity(3));
    CHECK((dec.f_grad.values - f.values).norm() == Approx(0.0).margin(1e-10));
    CHECK(dec.f_curl.values.norm() == Approx(0.0).margin(1e-10));
    CHECK(dec.f_harm.values.norm() == Approx(0.0).margin(1e-10));
    // Potential differences match phi = (0, 1, 1) up to a constant.
    CHECK(dec.phi[1] - dec.phi[0] == Approx(1.0));
    CHECK(dec.phi[2] - dec.phi[0] == Approx(1.0));
}

TEST_CASE("zero flow decomposes to zero everywhere") {
    const IncidenceMatrices B = incidence_matrices(filled_triangle());
    const HodgeDecomposition dec =
        hodge_decompose(Cochain::zero(1, 3), B, EdgeMetric::identity(3));
    CHECK(dec.energy_grad == 0.0);
    CHECK(dec.energy_curl == 0.0);
    CHECK(dec.energy_harm == 0.0);
}

TEST_CASE("decompose validates inputs") {
    const IncidenceMatrices B = incidence_matrices(open_triangle());
    CHECK_THROWS_AS(hodge_decompose(edge_flow({1, 2}), B, EdgeMetric::identity(3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(hodge_decompose(Cochain(0, Eigen::Vector3d(1, 2, 3)), B,
                                    EdgeMetric::identity(3)),
                    std::invalid_argument);
    Eigen::VectorXd bad(3);
    bad << 1.0, std::numeric_limits<double>::quiet_NaN(), 0.0;
    CHECK_THROWS_AS(hodge_decompose(Cochain(1, bad), B, EdgeMetric::identity(3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(EdgeMetric(Eigen::Vector3d(1.0, 0.0, 1.0)), std::invalid_argument);
}

TEST_CASE("weighted decompositions are exact, orthogonal and Pythagorean") {
    std::mt19937_64 rng(2214);
    for (int trial = 0; trial < 60; ++trial) {
        const CellComplex k = testing::random_complex(rng);
        const IncidenceMatrices B = incidence_matrices(k);
        const EdgeMetric M1 = testing::random_metric(rng, k.num_edges());
        const Cochain f = testing::random_flow(rng, k.num_edges());
        const HodgeDecomposition dec = hodge_decompose(f, B, M1);

        const double f_energy = M1.norm_sq(f.values);
        const Eigen::VectorXd recon =
            dec.f_grad.values + dec.f_curl.values + dec.f_harm.values;
        REQUIRE((recon - f.values).norm() <= 1e-9 * std::max(1.0, f.values.norm()));
        REQUIRE(orthogonality_residual(dec, M1) <= 1e-8);
        const double energy_sum = dec.energy_grad + dec.energy_curl + dec.energy_harm;
        REQUIRE(energy_sum == Approx(f_energy).epsilon(1e-8).margin(1e-12));

        // Harmonic conditions in the weighted convention.
        const Eigen::VectorXd weighted_h = M1.weights().cwiseProduct(dec.f_harm.values);
        const double hscale = std::max(1.0, std::sqrt(f_energy));
        REQUIRE((B.B1d() * weighted_h).norm() <= 1e-8 * hscale);
        REQUIRE((B.B2d().transpose() * dec.f_harm.values).norm() <= 1e-8 * hscale);
    }
}

TEST_CASE("components match the Gram-Schmidt projector oracle") {
    std::mt19937_64 rng(515);
    for (int trial = 0; trial < 25; ++trial) {
        const CellComplex k = testing::random_complex(rng);
        const IncidenceMatrices B = incidence_matrices(k);
        const EdgeMetric M1 = testing::random_metric(rng, k.num_edges());
        const Cochain f = testing::random_flow(rng, k.num_edges());
        const HodgeDecomposition dec = hodge_decompose(f, B, M1);

        const Eigen::VectorXd grad_oracle =
            oracles::projector_oracle(f.values, B.B1d().transpose(), M1);
        REQUIRE((dec.f_grad.values - grad_oracle).norm() <=
                1e-8 * std::max(1.0, f.values.norm()));

        if (k.num_faces() > 0) {
            const Eigen::MatrixXd curl_basis =
                M1.inverse_weights().asDiagonal() * B.B2d();
            const Eigen::VectorXd curl_oracle =
                oracles::projector_oracle(f.values, curl_basis, M1);
            REQUIRE((dec.f_curl.values - curl_oracle).norm() <=
                    1e-8 * std::max(1.0, f.values.norm()));
        }
    }
}

TEST_CASE("projection onto the cycle's orthogonal complement is exact (B1 B2 = 0)") {
    std::mt19937_64 rng(616);
    for (int trial = 0; trial < 25; ++trial) {
        const CellComplex k = testing::random_complex(rng);
        if (k.num_faces() == 0)
            continue;
        const IncidenceMatrices B = incidence_matrices(k);
        const EdgeMetric M1 = testing::random_metric(rng, k.num_edges());

        // A pure curl input has no gradient part, and vice versa.
        std::normal_distribution<double> gauss;
        Eigen::VectorXd psi(k.num_faces());
        for (Eigen::Index i = 0; i < psi.size(); ++i)
            psi(i) = gauss(rng);
        const Cochain pure_curl(1, M1.inverse_weights().cwiseProduct(B.B2d() * psi));
        const HodgeDecomposition dc = hodge_decompose(pure_curl, B, M1);
        REQUIRE(dc.f_grad.values.norm() <= 1e-8 * std::max(1.0, pure_curl.values.norm()));

        Eigen::VectorXd phi(k.num_vertices());
        for (Eigen::Index i = 0; i < phi.size(); ++i)
            phi(i) = gauss(rng);
        const Cochain pure_grad(1, B.B1d().transpose() * phi);
        const HodgeDecomposition dg = hodge_decompose(pure_grad, B, M1);
        REQUIRE(dg.f_curl.values.norm() <= 1e-8 * std::max(1.0, pure_grad.values.norm()));
        REQUIRE(dg.f_harm.values.norm() <= 1e-8 * std::max(1.0, pure_grad.values.norm()));
    }
}

TEST_CASE("decomposing the harmonic part again is idempotent") {
    std::mt19937_64 rng(717);
    for (int trial = 0; trial < 20; ++trial) {
        const CellComplex k = testing::random_complex(rng);
        const IncidenceMatrices B = incidence_matrices(k);
        const EdgeMetric M1 = testing::random_metric(rng, k.num_edges());
        const Cochain f = testing::random_flow(rng, k.num_edges());
        const HodgeDecomposition first = hodge_decompose(f, B, M1);
        const HodgeDecomposition again = hodge_decompose(first.f_harm, B, M1);
        const double scale = std::max(1.0, f.values.norm());
        REQUIRE(again.f_grad.values.norm() <= 1e-8 * scale);
        REQUIRE(again.f_curl.values.norm() <= 1e-8 * scale);
        REQUIRE((again.f_harm.values - first.f_harm.values).norm() <= 1e-8 * scale);
    }
}

TEST_CASE("decomposition is linear and scale covariant") {
    std::mt19937_64 rng(818);
    const CellComplex k = testing::random_complex(rng);
    const IncidenceMatrices B = incidence_matrices(k);
    const EdgeMetric M1 = testing::random_metric(rng, k.num_edges());
    const Cochain f = testing::random_flow(rng, k.num_edges());
    const Cochain g = testing::random_flow(rng, k.num_edges());
    const double a = 2.25, b = -0.75;

    const Cochain combo(1, a * f.values + b * g.values);
    const HodgeDecomposition dc = hodge_decompose(combo, B, M1);
    const HodgeDecomposition df = hodge_decompose(f, B, M1);
    const HodgeDecomposition dg = hodge_decompose(g, B, M1);
    const double scale = std::max(1.0, combo.values.norm());
    CHECK((dc.f_grad.values - a * df.f_grad.values - b * dg.f_grad.values).norm() <=
          1e-8 * scale);
    CHECK((dc.f_curl.values - a * df.f_curl.values - b * dg.f_curl.values).norm() <=
          1e-8 * scale);
    CHECK((dc.f_harm.values - a * df.f_harm.values - b * dg.f_harm.values).norm() <=
          1e-8 * scale);

    const double c = 3.5;
    const HodgeDecomposition ds = hodge_decompose(Cochain(1, c * f.values), B, M1);
    CHECK((ds.f_harm.values - c * df.f_harm.values).norm() <= 1e-8 * scale);
    CHECK(ds.energy_harm == Approx(c * c * df.energy_harm).epsilon(1e-8).margin(1e-12));
    CHECK(ds.energy_grad == Approx(c * c * df.energy_grad).epsilon(1e-8).margin(1e-12));
}

TEST_CASE("with the unit metric both conventions coincide") {
    std::mt19937_64 rng(919);
    const CellComplex k = testing::random_complex(rng);
    const IncidenceMatrices B = incidence_matrices(k);
    const EdgeMetric unit = EdgeMetric::identity(k.num_edges());
    const Cochain f = testing::random_flow(rng, k.num_edges());
    const HodgeDecomposition a = hodge_decompose(f, B, unit, ProjectionConvention::Consistent);
    const HodgeDecomposition b = hodge_decompose(f, B, unit, ProjectionConvention::PaperLiteral);
    CHECK((a.f_grad.values - b.f_grad.values).norm() <= 1e-10 * std::max(1.0, f.values.norm()));
    CHECK((a.f_curl.values - b.f_curl.values).norm() <= 1e-10 * std::max(1.0, f.values.norm()));
}

TEST_CASE("the paper-literal convention loses orthogonality under a real metric") {
    // A weighted complex where the literal normal equations mix components.
    const IncidenceMatrices B = incidence_matrices(filled_triangle());
    Eigen::VectorXd w(3);
    w << 10.0, 0.2, 1.0;
    const EdgeMetric M1{w};
    const Cochain f = edge_flow({2.0, -1.0, 0.5});
    const HodgeDecomposition consistent =
        hodge_decompose(f, B, M1, ProjectionConvention::Consistent);
    const HodgeDecomposition literal =
        hodge_decompose(f, B, M1, ProjectionConvention::PaperLiteral);
    CHECK(orthogonality_residual(consistent, M1) <= 1e-8);
    CHECK(orthogonality_residual(literal, M1) > 1e-3);
}

TEST_CASE("betti numbers of the canonical complexes") {
    CHECK(betti(incidence_matrices(open_triangle())) == BettiNumbers{1, 1, 0});
    CHECK(betti(incidence_matrices(filled_triangle())) == BettiNumbers{1, 0, 0});

    const CellComplex with_isolated({{"a", ""}, {"b", ""}, {"c", ""}, {"x", ""}, {"y", ""}},
                                    {{"e0", "a", "b", ""}, {"e1", "b", "c", ""}, {"e2", "a", "c", ""}},
                                    {});
    const BettiNumbers bn = betti(incidence_matrices(with_isolated));
    CHECK(bn == BettiNumbers{3, 1, 0});
    CHECK(oracles::component_count(with_isolated) == 3);
}

TEST_CASE("betti agrees with the union-find and cycle-rank oracles on random complexes") {
    std::mt19937_64 rng(1020);
    for (int trial = 0; trial < 100; ++trial) {
        const CellComplex k = testing::random_complex(rng);
        const IncidenceMatrices B = incidence_matrices(k);
        const BettiNumbers bn = betti(B);
        REQUIRE(bn.beta0 == oracles::component_count(k));
        REQUIRE(bn.beta1 == oracles::cycle_rank_oracle(B));
        REQUIRE(bn.beta0 >= 1);
    }
}

TEST_CASE("betti validates rank_tol") {
    const IncidenceMatrices B = incidence_matrices(open_triangle());
    CHECK_THROWS_AS(betti(B, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(betti(B, 1.5), std::invalid_argument);
}

TEST_CASE("beta1 is invariant across random positive metrics") {
    std::mt19937_64 rng(1121);
    for (int trial = 0; trial < 5; ++trial) {
        const CellComplex k = testing::random_complex(rng);
        const IncidenceMatrices B = incidence_matrices(k);
        const int expected = betti(B).beta1;
        for (int m = 0; m < 50; ++m) {
            const EdgeMetric M1 = testing::random_metric(rng, k.num_edges());
            const Laplacians L = laplacians(B, M1);
            REQUIRE(kernel_dimension(L.L1) == expected);
        }
    }
}

TEST_CASE("spectrum of the open-triangle L0 is (0, 3, 3) with gap 3") {
    const Laplacians L = laplacians(incidence_matrices(open_triangle()), EdgeMetric::identity(3));
    const Spectrum s = spectrum(L.L0);
    REQUIRE(s.eigenvalues.size() == 3);
    CHECK(s.eigenvalues[0] == Approx(0.0).margin(1e-10));
    CHECK(s.eigenvalues[1] == Approx(3.0));
    CHECK(s.eigenvalues[2] == Approx(3.0));
    CHECK(s.gap == Approx(3.0));
    CHECK(s.kernel_dim == 1);
}

TEST_CASE("L0 kernel multiplicity equals the component count") {
    const CellComplex k({{"a", ""}, {"b", ""}, {"c", ""}, {"d", ""}, {"x", ""}},
                        {{"e0", "a", "b", ""}, {"e1", "c", "d", ""}}, {});
    const Laplacians L = laplacians(incidence_matrices(k), EdgeMetric::identity(2));
    const Spectrum s = spectrum(L.L0);
    CHECK(s.kernel_dim == 3);
    CHECK(betti(incidence_matrices(k)).beta0 == 3);
}

TEST_CASE("1x1 Laplacian spectrum") {
    const Laplacians L = laplacians(incidence_matrices(filled_triangle()), EdgeMetric::identity(3));
    const Spectrum s = spectrum(L.L2);
    REQUIRE(s.eigenvalues.size() == 1);
    CHECK(s.eigenvalues[0] == Approx(3.0));
    CHECK(s.gap == Approx(3.0));
}

TEST_CASE("spectrum handles the non-symmetric weighted L1 and rejects non-square input") {
    std::mt19937_64 rng(1222);
    const CellComplex k = testing::random_complex(rng);
    const IncidenceMatrices B = incidence_matrices(k);
    const EdgeMetric M1 = testing::random_metric(rng, k.num_edges());
    const Laplacians L = laplacians(B, M1);
    const Spectrum s = spectrum(L.L1);
    for (double ev : s.eigenvalues)
        REQUIRE(ev >= -1e-10 * std::max(1.0, std::abs(s.eigenvalues.back())));
    CHECK(s.kernel_dim == betti(B).beta1);

    CHECK_THROWS_AS(spectrum(Eigen::MatrixXd::Zero(2, 3)), std::invalid_argument);
}
