#include "sicp/classification.hpp"
#include "sicp/heisenberg.hpp"
#include "sicp/pinched_torus.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace sicp;

namespace {

const double pi = std::numbers::pi;

bool has_condition(const std::vector<Key5Condition>& found, const std::string& name) {
    return std::any_of(found.begin(), found.end(), [&](const Key5Condition& c) { return c.name == name; });
}

BigRational frac(long n, long d) {
    BigRational q(n, d);
    q.canonicalize();
    return q;
}

const CaseState& find_state(const std::vector<CaseState>& states, const std::string& label) {
    const auto it = std::find_if(states.begin(), states.end(), [&](const CaseState& s) { return s.label == label; });
    REQUIRE(it != states.end());
    return *it;
}

}  // namespace

TEST_SUITE("classification") {
    TEST_CASE("transcribed tables") {
        CHECK(F_poly().term_count() == 41);
        CHECK(F_i_poly(1).term_count() == 99);
        CHECK(F_i_poly(2).term_count() == 86);
        CHECK(F_i_poly(3).term_count() == 82);
        CHECK(F_i_poly(4).term_count() == 56);
        CHECK_THROWS(F_i_poly(5));
        CHECK(F_of<BigRational>(0, -3, 0) == 0);
        CHECK(G_of<BigRational>(0, frac(-2, 3), 0, frac(1, 9)) == 0);
    }

    TEST_CASE("derivations reproduce the tables exactly") {
        const auto rep = verify_derivations();
        CHECK(rep.all_match());
        CHECK(rep.cleared_content == 486);
        for (const auto& item : rep.items) {
            INFO(item.name);
            CHECK(item.mismatched_monomials == 0);
            CHECK(item.derived_terms == item.listed_terms);
        }
    }

    TEST_CASE("a corrupted table is caught and the monomial named") {
        ListedTables listed;
        const auto at = listed.F1.find("828*b^3");
        REQUIRE(at != std::string::npos);
        listed.F1.replace(at, 3, "829");
        const auto rep = verify_derivations(listed);
        CHECK_FALSE(rep.all_match());
        const auto it = std::find_if(rep.items.begin(), rep.items.end(), [](const auto& i) { return !i.match; });
        REQUIRE(it != rep.items.end());
        CHECK(it->name == "F1");
        CHECK(it->mismatched_monomials == 1);
        CHECK(it->first_mismatch.find("b^3") != std::string::npos);
    }

    TEST_CASE("identities") {
        for (int i = 0; i < 100; ++i) {
            CHECK(std::abs(trig_identity_residual(testing::uniform(-pi, pi), testing::uniform(-pi, pi))) <= 1e-12);
            CHECK(std::abs(sid_identity_residual(testing::uniform(-1, 1), testing::uniform(-1, 1), testing::uniform(-1, 1))) <= 1e-12);
        }
        CHECK(cleared_cosine_identity().content() == 486);
    }

    TEST_CASE("states from roots satisfy Vieta") {
        const auto s = SymmetricState<BigRational>::from_roots(1, 2, 3, 4);
        const auto g = s.quartic();
        for (long x : {1, 2, 3, 4}) {
            BigRational v = 0, pw = 1;
            for (const auto& c : g) {
                v += c * pw;
                pw *= x;
            }
            CHECK(v == 0);
        }
        const auto t = SymmetricState<BigRational>::from_triple(5, 6, 11, 6);  // (x, y, z) = (1, 2, 3)
        const auto direct = SymmetricState<BigRational>::from_roots(5, 1, 2, 3);
        CHECK(t.a == direct.a);
        CHECK(t.b == direct.b);
        CHECK(t.c == direct.c);
        CHECK(t.d == direct.d);
    }

    TEST_CASE("necessity on the one-parameter family") {
        const auto rep = necessity_check(s_theta(0.3));
        CHECK(rep.triples == 35);
        CHECK(rep.quadruples == 35);
        CHECK(rep.max_F <= 1e-7);
        CHECK(rep.max_F_i <= 1e-7);
        CHECK_THROWS_AS(necessity_check(midpoint_solution(pi, pi, pi)), std::domain_error);
        CHECK_THROWS_AS(necessity_check(Configuration({z_of(0.0, 0.1), z_of(1.0, 0.2)})), std::invalid_argument);
        CHECK_THROWS_AS(necessity_check(wh_orbit(incircle_fiducial(0.3, 1, 2))), std::domain_error);
    }

    TEST_CASE("factor conditions") {
        const double c = -8.0 / 27 * std::sqrt(26 - 2 * std::sqrt(97.0));
        const auto fake = key5_check(SymmetricState<double>{0, -22.0 / 9, c, 1.0 / 9});
        CHECK(has_condition(fake, "9d - 1"));
        CHECK(has_condition(fake, "9b + 27d + 19"));
        CHECK(fake.size() == 2);

        const auto ii = key5_check(SymmetricState<BigRational>{0, frac(-10, 3), 0, 1});
        CHECK(has_condition(ii, "d - 1"));

        for (int i = 0; i < 20; ++i) {
            const SymmetricState<double> s{testing::uniform(-2, 2), testing::uniform(-2, 2), testing::uniform(-2, 2),
                                           testing::uniform(-2, 2)};
            CHECK(key5_check(s).empty());
        }
    }

    TEST_CASE("case iv univariate") {
        const auto u = case_iv_univariate(frac(1, 2));
        CHECK(u.degree() == 6);
        CHECK(case_iv_resultant(frac(1, 2)).degree() >= 6);
        CHECK_THROWS_AS(case_iv_univariate(0), CaseIVError);
        const BigRational near_root = rational_from_double(1 / std::sqrt(3.0));
        CHECK(case_iv_excluded(near_root));
        CHECK(case_iv_excluded(-near_root));
        CHECK_THROWS_AS(case_iv_univariate(near_root), CaseIVError);
        CHECK_FALSE(case_iv_excluded(frac(1, 2)));
    }

    TEST_CASE("case iv solution counts") {
        const std::vector<std::pair<BigRational, std::size_t>> expect{
            {frac(1, 10), 2}, {frac(3, 10), 3}, {frac(1, 2), 5}, {frac(7, 10), 4}, {frac(6, 5), 3}};
        for (const auto& [t, n] : expect) {
            const auto sols = case_iv_solutions(t);
            INFO("t = " << t.get_d());
            CHECK(sols.size() == n);
            CHECK(case_iv_solutions(t, false).size() == n);
            for (const auto& s : sols) {
                CHECK(s.residual <= 1e-8);
                CHECK(s.f_residual <= 1e-8);
                for (double x : s.triple) CHECK(std::abs(std::abs(x) - 1 / std::sqrt(3.0)) > 1e-9);
                CHECK(std::is_sorted(s.triple.begin(), s.triple.end()));
            }
        }
    }

    TEST_CASE("counts are symmetric under t -> -t") {
        std::vector<BigRational> grid;
        for (long k : {15, 25, 45, 55, 65, 100, 130}) {
            grid.push_back(frac(k, 100));
            grid.push_back(frac(-k, 100));
        }
        const auto scan = scan_table(grid, 4, 0);
        REQUIRE(scan.rows.size() == grid.size());
        for (std::size_t i = 0; i < grid.size(); i += 2) CHECK(scan.rows[i].count == scan.rows[i + 1].count);
    }

    TEST_CASE("scan skips excluded values and localizes breakpoints") {
        const std::vector<BigRational> grid{frac(-1, 10), 0, frac(1, 10), frac(3, 10)};
        const auto scan = scan_table(grid, 2, 14);
        CHECK(scan.rows[1].skipped);
        CHECK_FALSE(scan.rows[2].skipped);
        bool found = false;
        for (const auto& b : scan.breakpoints)
            if (b.lo > 0) {
                found = true;
                CHECK(std::abs(b.estimate() - 0.1899) < 1e-3);
                CHECK(b.count_lo == 2);
                CHECK(b.count_hi == 3);
            }
        CHECK(found);
        CHECK(make_grid(frac(1, 10), frac(3, 10), frac(1, 10)).size() == 3);
    }

    TEST_CASE("fake SIC") {
        const auto f = fake_sic();
        const std::array<double, 4> expect{-1.687, -0.109, 0.442, 1.354};
        for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(f.roots[i] - expect[i]) < 1e-3);
        CHECK(f.vieta_d == frac(1, 9));
        CHECK(f.vieta_b == frac(-22, 9));
        CHECK(f.config.size() == 9);
        CHECK(f.separated.size() == 27);
        CHECK(f.extra_pairs.size() == 6);
        CHECK_FALSE(verify_sic(f.config).is_sic);
        for (double s : f.sigmas) CHECK(s > 0);
        // Each of the last six points has exactly two separated partners among the other five.
        std::array<int, 9> degree{};
        for (const auto& [i, j] : f.extra_pairs) {
            ++degree[i];
            ++degree[j];
        }
        for (std::size_t k = 3; k < 9; ++k) CHECK(degree[k] == 2);
    }

    TEST_CASE("cases i to iii") {
        const auto i = case_i_analysis();
        for (const auto& s : i) {
            INFO(s.label);
            CHECK(s.satisfies_system);
            CHECK(s.residual <= 1e-9);
        }
        const auto& tt = find_state(i, "b = (27c^2 - 8)/12, a + 3c = 0 (roots t, t, -1/3t, -1/3t at t = 2)");
        CHECK(tt.repeated_root);
        const auto& third = find_state(i, "b = -2/3");
        CHECK(third.real_roots == 4);
        for (const auto& r : third.quartic_roots) CHECK(std::abs(std::abs(r.real()) - 1 / std::sqrt(3.0)) < 1e-6);
        CHECK(find_state(i, "b = -22/9, c = -(8/27) sqrt(26 - 2 sqrt97)").real_roots == 4);

        const auto rest = case_ii_iii_solutions();
        const auto& ii = find_state(rest, "(0, -10/3, 0, 1)");
        CHECK(ii.satisfies_system);
        CHECK(ii.root_at_inv_sqrt3);
        for (const std::string sg : {"", "-"}) {
            const auto& a = find_state(rest, "(" + sg + "8/sqrt3, -6, 0, 1)");
            CHECK(a.satisfies_system);
            const auto& b = find_state(rest, "(" + sg + "8/sqrt3, 0, 0, -1)");
            CHECK(b.real_roots == 2);
            CHECK_FALSE(b.satisfies_system);
            const auto& c = find_state(rest, "(" + sg + "10/sqrt3, 0, " + (sg.empty() ? "-" : "") + "2 sqrt3, -1)");
            CHECK(c.satisfies_system);
            CHECK(c.root_at_inv_sqrt3);
        }
    }

    TEST_CASE("double-root family at t = 2 solves the system") {
        const auto s = SymmetricState<BigRational>::from_roots(2, 2, frac(-1, 6), frac(-1, 6));
        for (const auto& v : s.F_values()) CHECK(v == 0);
    }

    TEST_CASE("case iv solutions do not extend to a SIC") {
        const auto sols = case_iv_solutions(frac(1, 2));
        const auto rep = no_sic_extension(sols);
        CHECK(rep.solutions == sols.size());
        CHECK_FALSE(rep.sic_found);
        CHECK(rep.max_clique < 9);
        const auto cands = extension_candidates(sols.front());
        CHECK(cands.size() >= 3);
    }

    TEST_CASE("clique search") {
        const auto orbit = wh_orbit(ProjectivePoint{0.0, 1.0, 1.0});
        CHECK(max_separated_clique(orbit).size() == 9);
        CHECK(max_separated_clique(fake_sic().config).size() < 9);
    }
}
