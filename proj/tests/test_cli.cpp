#include "cli.hpp"
#include "sicp/config_json.hpp"
#include "sicp/heisenberg.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <unistd.h>

using namespace sicp;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

class TempDir {
public:
    TempDir() : path_(fs::temp_directory_path() / ("sicp_cli_" + std::to_string(::getpid()))) {
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("real parsing") {
        const double pi = std::numbers::pi;
        CHECK(cli::parse_real("0.3") == doctest::Approx(0.3));
        CHECK(cli::parse_real("pi/16") == doctest::Approx(pi / 16));
        CHECK(cli::parse_real("-pi/6") == doctest::Approx(-pi / 6));
        CHECK(cli::parse_real("3pi/4") == doctest::Approx(3 * pi / 4));
        CHECK(cli::parse_real("1/sqrt3") == doctest::Approx(1 / std::sqrt(3.0)));
        CHECK(cli::parse_real("sqrt(5/27)") == doctest::Approx(std::sqrt(5.0 / 27)));
        CHECK_THROWS(cli::parse_real("pie"));
        CHECK(cli::parse_t("1/2") == BigRational(1, 2));
        CHECK(cli::parse_t("0.7") == BigRational(7, 10));
    }

    TEST_CASE("construct and verify") {
        TempDir dir;
        const auto orbit = dir.file("orbit.json");
        auto r = run({"construct", "--kind", "wh-orbit", "--fiducial", "0,1,1", "--out", orbit});
        CHECK(r.code == 0);
        r = run({"verify", "--in", orbit});
        CHECK(r.code == 0);
        CHECK(contains(r.out, "36/36 pairs separated"));

        const auto st = dir.file("s.json");
        r = run({"construct", "--kind", "s-theta", "--theta", "pi/16", "--out", st});
        CHECK(r.code == 0);
        const auto before = r.out;
        r = run({"verify", "--in", st});
        CHECK(r.code == 0);
        CHECK(contains(before, "SIC"));

        const auto fake = dir.file("fake.json");
        r = run({"construct", "--kind", "fake-sic", "--out", fake});
        CHECK(r.code == 0);
        CHECK(contains(r.out, "not a SIC"));
        r = run({"verify", "--in", fake});
        CHECK(r.code == 1);
        CHECK(contains(r.out, "27/36 pairs separated"));

        for (const std::string kind : {"midpoint", "cp3", "tetrahedron", "m-eigen"}) {
            std::vector<std::string> args{"construct", "--kind", kind, "--out", dir.file(kind + ".json")};
            if (kind == "midpoint") args.insert(args.end(), {"--sigmas", "0.1,0.2,0.3"});
            CHECK(run(args).code == 0);
        }
    }

    TEST_CASE("usage and input errors exit 2") {
        TempDir dir;
        const auto eight = dir.file("eight.json");
        {
            auto pts = wh_orbit(ProjectivePoint{0.0, 1.0, 1.0}).points();
            pts.pop_back();
            std::ofstream(eight) << config_to_json(Configuration(pts));
        }
        CHECK(run({"verify", "--in", eight}).code == 2);

        const auto bad = dir.file("bad.json");
        std::ofstream(bad) << "{ not json";
        const auto r = run({"verify", "--in", bad});
        CHECK(r.code == 2);
        CHECK_FALSE(r.err.empty());

        CHECK(run({"verify", "--in", dir.file("missing.json")}).code == 2);
        CHECK(run({"construct", "--kind", "s-theta", "--out", dir.file("x.json")}).code == 2);
        CHECK(run({"construct", "--kind", "wh-orbit", "--out", dir.file("x.json")}).code == 2);
        CHECK(run({"construct", "--kind", "nonsense", "--out", dir.file("x.json")}).code == 2);
        CHECK(run({"frobnicate"}).code == 2);
        CHECK(run({}).code == 2);
    }

    TEST_CASE("curves") {
        TempDir dir;
        const auto csv = dir.file("c.csv");
        auto r = run({"curves", "--theta", "pi/16", "--out", csv});
        CHECK(r.code == 0);
        CHECK(contains(r.out, "components: 1"));
        CHECK(slurp(csv).rfind("sigma,phi,component\n", 0) == 0);

        r = run({"curves", "--anchor", "0,pi/7", "--out", csv});
        CHECK(r.code == 0);
        CHECK(contains(r.out, "components: 2"));

        CHECK(run({"curves", "--theta", "pi/16", "--resolution", "0", "--out", csv}).code == 2);
        CHECK(run({"curves", "--anchor", "0,pi/2", "--out", csv}).code == 2);
    }

    TEST_CASE("scan-table") {
        auto r = run({"scan-table", "--t", "0.5"});
        CHECK(r.code == 0);
        CHECK(contains(r.out, "0.5,5"));

        r = run({"scan-table", "--t", "1/sqrt3", "--t", "0.3"});
        CHECK(r.code == 0);
        CHECK(contains(r.err, "skip"));
        CHECK(contains(r.out, "0.3,3"));

        const auto one = run({"scan-table", "--from", "0.15", "--to", "0.25", "--step", "0.05", "--workers", "1"});
        const auto four = run({"scan-table", "--from", "0.15", "--to", "0.25", "--step", "0.05", "--workers", "4"});
        CHECK(one.code == 0);
        CHECK(one.out == four.out);
        CHECK(contains(one.out, "# breakpoint"));
    }

    TEST_CASE("selftest") {
        const auto good = run({"selftest"});
        CHECK(good.code == 0);
        CHECK(contains(good.out, "0 failed"));

        const auto bad = run({"selftest", "--f1", std::string(SICP_TEST_DATA_DIR) + "/F1_corrupted.txt"});
        CHECK(bad.code == 1);
        CHECK(contains(bad.out, "FAIL derivation F1"));
        CHECK(contains(bad.out, "b^3"));
    }
}
