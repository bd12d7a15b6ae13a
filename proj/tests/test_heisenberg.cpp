#include "sicp/heisenberg.hpp"
#include "sicp/pinched_torus.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace sicp;

namespace {

const double pi = std::numbers::pi;
const cplx w = root_of_unity(3);

ProjectivePoint pt(std::vector<cplx> v) { return ProjectivePoint(ComplexVector(std::move(v))); }

bool same_set(const Configuration& a, const Configuration& b) {
    if (a.size() != b.size()) return false;
    for (const auto& p : a) {
        bool found = false;
        for (const auto& q : b) found |= p.same_as(q, 1e-9);
        if (!found) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("heisenberg_constructions") {
    TEST_CASE("unitary matrices are checked") {
        CHECK_NOTHROW(UnitaryMatrix(shift_matrix(3), "shift"));
        CHECK_THROWS(UnitaryMatrix(CMatrix::identity(3) * 2.0, "scaled"));
    }

    TEST_CASE("group elements are shift^j clock^k") {
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                const auto g = wh_element(3, j, k);
                const CMatrix expect = matrix_power(shift_matrix(3), j) * matrix_power(clock_matrix(3), k);
                CHECK(g.matrix.max_abs_diff(expect) == 0.0);
            }
    }

    TEST_CASE("Weyl commutation") {
        for (std::size_t n : {2u, 3u, 4u}) {
            const CMatrix A = shift_matrix(n), B = clock_matrix(n);
            CHECK((B * A).max_abs_diff(A * B * root_of_unity(static_cast<int>(n))) < 1e-15);
        }
    }

    TEST_CASE("orbits") {
        CHECK(verify_sic(wh_orbit(pt({0.0, 1.0, 1.0}))).is_sic);

        const auto degenerate = wh_orbit(pt({1.0, 0.0, 0.0}));
        CHECK(degenerate.size() == 9);
        for (const auto& e : {pt({1.0, 0.0, 0.0}), pt({0.0, 1.0, 0.0}), pt({0.0, 0.0, 1.0})}) {
            int hits = 0;
            for (const auto& p : degenerate) hits += p.same_as(e);
            CHECK(hits == 3);
        }
        CHECK_FALSE(verify_sic(degenerate).is_sic);

        const auto cp3 = wh_orbit(cp3_fiducial());
        CHECK(cp3.size() == 16);
        const auto rep = verify_sic(cp3);
        CHECK(rep.is_sic);
        for (std::size_t i = 0; i < 16; ++i)
            for (std::size_t j = i + 1; j < 16; ++j) CHECK(std::abs(cp3.gram(i, j) - 0.2) < 1e-11);
    }

    TEST_CASE("orbits are equivariant under the shift and the clock") {
        for (int i = 0; i < 10; ++i) {
            const auto z = testing::random_point(3);
            for (const CMatrix& U : {shift_matrix(3), clock_matrix(3)})
                CHECK(same_set(wh_orbit(transform(U, z)), transform(U, wh_orbit(z))));
        }
    }

    TEST_CASE("fiducial classification") {
        const auto a = classify_fiducial(pt({0.0, 1.0, 1.0}));
        CHECK(a.is_fiducial);
        CHECK(a.consistent());

        const auto z = incircle_fiducial(0.3, 1, 2);
        const auto b = classify_fiducial(z);
        CHECK(b.is_fiducial);
        CHECK(b.orbit_is_sic);

        const auto perturbed = pt({z[0], z[1] * std::polar(1.0, 0.1), z[2]});
        const auto c = classify_fiducial(perturbed);
        CHECK_FALSE(c.is_fiducial);
        CHECK_FALSE(c.orbit_is_sic);

        const auto d = classify_fiducial(pt({1.0, 0.0, 0.0}));
        CHECK_FALSE(d.is_fiducial);
        CHECK(d.consistent());
    }

    TEST_CASE("incircle fiducials over a grid") {
        for (int s = 0; s < 12; ++s) {
            const double theta = -pi / 2 + (s + 0.5) * pi / 12;
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) {
                    const auto z = incircle_fiducial(theta, j, k);
                    const auto v = classify_fiducial(z);
                    CHECK(v.is_fiducial);
                    CHECK(verify_sic(wh_orbit(z)).is_sic);
                }
        }
    }

    TEST_CASE("midpoint solutions") {
        for (const auto& s : {std::array{0.0, 0.0, 0.0}, std::array{pi, pi, pi}, std::array{0.4, -1.2, 2.9}}) {
            const auto c = midpoint_solution(s[0], s[1], s[2]);
            CHECK(c.size() == 9);
            CHECK(verify_sic(c).is_sic);
            CHECK(on_midpoint_circles(c));
        }
        CHECK(collinear_triples(midpoint_solution(pi, pi, pi)).count == 12);
        for (int i = 0; i < 10; ++i) {
            const auto c = midpoint_solution(testing::uniform(-pi, pi), testing::uniform(-pi, pi), testing::uniform(-pi, pi));
            CHECK(verify_sic(c).is_sic);
        }
    }

    TEST_CASE("the one-parameter family") {
        CHECK(verify_sic(s_theta(pi / 16)).is_sic);

        const auto special = s_theta(pi / 6);
        CHECK(verify_sic(special).is_sic);
        CHECK(on_midpoint_circles(special));

        const auto zero = s_theta(0.0);
        CHECK(verify_sic(zero).is_sic);
        const auto mu = moment_map(zero[7]);
        CHECK(mu[0] == doctest::Approx(2.0 / 3));
        CHECK(mu[1] == doctest::Approx(1.0 / 6));
        CHECK(mu[2] == doctest::Approx(1.0 / 6));

        for (int s = 0; s < 32; ++s) {
            const double theta = -pi / 2 + s * pi / 32;
            const auto rep = verify_sic(s_theta(theta));
            CHECK(rep.is_sic);
            CHECK(rep.max_deviation <= 1e-10);
        }
    }

    TEST_CASE("the Clifford element") {
        const auto M = clifford_M().matrix();
        const cplx i(0, 1);
        CHECK(matrix_power(M, 3).max_abs_diff(CMatrix::identity(3) * (i * w * w)) < 1e-13);
        const auto rep = clifford_relations();
        CHECK(rep.cube < 1e-13);
        CHECK(rep.shift_relation < 1e-13);
        CHECK(rep.clock_relation_alt < 1e-13);

        for (double theta : {0.0, 0.2, -0.7, 1.1}) {
            const auto image = transform(M, z_of(0.0, theta));
            CHECK(image.same_as(pt({std::polar(1.0, 2 * theta), w, 0.0})));
        }
        CHECK(on_midpoint_circles(transform(M, s_theta(0.2))));
    }

    TEST_CASE("eigenvector configurations") {
        for (int index = 0; index < 3; ++index) {
            const auto e = m_eigen_config(index);
            CHECK(e.config.size() == 9);
            CHECK(e.third_pairs == 27);
            CHECK(e.orthogonal_pairs == 9);
            CHECK(e.lines.count == 9);
            REQUIRE(e.orthonormal_triples.size() == 3);
            for (const auto& t : e.orthonormal_triples) {
                CHECK(e.config.gram(t[0], t[1]) < 1e-9);
                CHECK(e.config.gram(t[1], t[2]) < 1e-9);
                CHECK(e.config.gram(t[0], t[2]) < 1e-9);
            }
        }
        CHECK_THROWS(m_eigen_config(3));
    }

    TEST_CASE("tetrahedra") {
        const auto [a, b] = tetrahedra_cp1();
        for (const auto& c : {a, b}) {
            const auto rep = verify_sic(c);
            CHECK(rep.is_sic);
            CHECK(rep.resolution_defect <= 1e-12);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = i + 1; j < 4; ++j) CHECK(std::abs(c.gram(i, j) - 1.0 / 3) < 1e-12);
        }
    }

    TEST_CASE("clock orbits over the incircle are separated, elsewhere not") {
        int on = 0, off = 0;
        for (int s = 0; s < 32; ++s) {
            const double theta = testing::uniform(-pi / 2, pi / 2);
            const std::vector<double> phases{testing::uniform(-pi, pi), testing::uniform(-pi, pi), testing::uniform(-pi, pi)};
            on += clock_orbit_separated(point_over(incircle_point(theta), phases));
            auto mu = incircle_point(theta);
            const double scale = testing::uniform(0.2, 0.95);
            for (auto& m : mu) m = 1.0 / 3 + scale * (m - 1.0 / 3);
            off += !clock_orbit_separated(point_over(mu, phases));
        }
        CHECK(on == 32);
        CHECK(off == 32);
    }
}
