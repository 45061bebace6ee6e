#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "djcm/commands.hpp"
#include "djcm/error.hpp"
#include "djcm/io.hpp"

using namespace djcm;
using json = nlohmann::json;

namespace {

RunConfig small(Family f) {
    RunConfig cfg;
    cfg.family = f;
    cfg.alpha_grid = 9;
    cfg.gt_steps = 65;
    return cfg;
}

}  // namespace

TEST_CASE("config validation") {
    RunConfig cfg;
    cfg.gt_steps = 0;
    CHECK_THROWS_AS(cfg.validate(), InvalidConfig);
    cfg = {};
    cfg.tol = 0.0;
    CHECK_THROWS_AS(cfg.validate(), InvalidConfig);
    cfg = {};
    cfg.format = "xml";
    CHECK_THROWS_AS(cfg.validate(), InvalidConfig);
    cfg = {};
    cfg.alphas = {Angle(2.0)};
    CHECK_THROWS_AS(cfg.validate(), InvalidConfig);
    cfg = {};
    CHECK_THROWS_AS(cmd_trace(cfg), InvalidConfig);  // needs one alpha
}

TEST_CASE("trace command") {
    RunConfig cfg;
    cfg.alphas = {Angle::quarter_pi()};
    cfg.gt_steps = 1;
    const CommandResult r = cmd_trace(cfg);
    CHECK(r.exit_code == 0);
    CHECK(r.content.find("\ngt,c_AB,c_ab,c_Aa,c_Bb,c_Ab,c_aB,p0,sum_sq\n0,1,0,0,0,0,0,0,1\n") != std::string::npos);

    cfg.alphas = {Angle(kPi / 6)};
    cfg.gt_steps = 257;
    std::istringstream is(cmd_trace(cfg).content);
    const CsvTable t = read_csv(is);
    double mn = 10;
    for (const auto& row : t.rows) mn = std::min(mn, row[t.column("sum_sq")]);
    CHECK(std::abs(mn - 0.75) <= 1e-12);

    cfg.format = "json";
    const json j = json::parse(cmd_trace(cfg).content);
    CHECK(j["rows"].size() == 257);
}

TEST_CASE("trace output is deterministic") {
    RunConfig cfg;
    cfg.family = Family::phi;
    cfg.alphas = {Angle::from_tan(1, 2)};
    CHECK(cmd_trace(cfg).content == cmd_trace(cfg).content);
}

TEST_CASE("verify passes and fails on demand") {
    for (Family f : {Family::psi, Family::phi}) {
        RunConfig cfg = small(f);
        cfg.alphas = {Angle(kPi / 9)};
        const CommandResult r = cmd_verify(cfg);
        INFO(r.content.substr(0, 2000));
        CHECK(r.exit_code == 0);
        const json j = json::parse(r.content);
        CHECK(j["status"] == "pass");
        CHECK(j["oracle"]["pass"] == true);
        if (f == Family::phi) {
            bool seen = false;
            for (const auto& d : j["death_birth"]) {
                if (d["alpha"] == Angle(kPi / 9).to_string()) {
                    seen = true;
                    CHECK(d["deviation"].get<double>() <= 1e-6);
                }
            }
            CHECK(seen);
            CHECK(j["death_birth_threshold"]["pass"] == true);
            CHECK(!j["warnings"].empty());
        }
        CHECK(cmd_verify(cfg).content == r.content);

        cfg.tol = 1e-20;
        const CommandResult bad = cmd_verify(cfg);
        CHECK(bad.exit_code != 0);
        CHECK(!bad.failures.empty());
    }
    RunConfig csv = small(Family::psi);
    csv.format = "csv";
    CHECK_THROWS_AS(cmd_verify(csv), InvalidConfig);
}

TEST_CASE("surface command") {
    RunConfig cfg;
    const CommandResult r = cmd_surface(cfg);
    std::istringstream is(r.content);
    const CsvTable t = read_csv(is);
    CHECK(t.rows.size() == 16705);
    CHECK(*t.find_meta("pairs") == "AB,Aa,Ab");
}

TEST_CASE("phi surface survives a write-read round trip") {
    RunConfig cfg = small(Family::phi);
    cfg.gt_steps = 129;
    std::istringstream is(cmd_surface(cfg).content);
    const CsvTable t = read_csv(is);
    const std::vector<Angle> alphas = uniform_alpha_grid(cfg.alpha_grid);
    const std::vector<double> gts = cfg.gt_grid();
    const SurfaceMesh fresh = surface_sample(Family::phi, Qubit::A, alphas, gts);
    SurfaceMesh loaded = fresh;
    REQUIRE(t.rows.size() == fresh.points.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        for (int k = 0; k < 3; ++k) loaded.points[i].c[k] = t.rows[i][2 + k];
        CHECK(loaded.points[i].c == fresh.points[i].c);
    }
    for (const RelationCheck& rc : projection_residuals(loaded)) {
        CHECK_FALSE(rc.failed());
        CHECK(rc.max_residual <= 1e-10);
    }
}

TEST_CASE("conics command") {
    RunConfig cfg;
    cfg.alphas = {Angle(kPi / 6)};
    CommandResult r = cmd_conics(cfg);
    CHECK(r.exit_code == 0);
    json j = json::parse(r.content);
    for (const auto& d : j["alphas"][0]["conics"]) {
        for (const auto& c : d["comparisons"]) {
            if (c["name"] == "focal_ratio_b_over_a") CHECK(std::abs(c["geometric"].get<double>() - std::sqrt(3.0)) <= 1e-12);
        }
    }

    cfg.alphas = {Angle::quarter_pi()};
    j = json::parse(cmd_conics(cfg).content);
    for (const auto& d : j["alphas"][0]["conics"]) {
        if (d["id"] == "psi.ellipse_AB_Bb") CHECK(d["geometry"]["eccentricity"].get<double>() == 0.0);
    }

    cfg.family = Family::phi;
    cfg.alphas = {Angle::from_tan(1, 2)};
    r = cmd_conics(cfg);
    CHECK(r.exit_code == 0);
    j = json::parse(r.content);
    for (const auto& d : j["alphas"][0]["conics"]) {
        if (d["id"] != "phi.ellipse_diff_Aa") continue;
        for (const auto& c : d["comparisons"]) {
            if (c["name"] == "focal_distance") {
                CHECK(std::abs(c["printed"].get<double>()) <= 1e-9);
                CHECK(std::abs(c["geometric"].get<double>()) <= 1e-9);
            }
        }
    }
    CHECK(!j["warnings"].empty());

    cfg.format = "csv";
    CHECK(cmd_conics(cfg).content.rfind("alpha,conic,parameter,", 0) == 0);
    cfg.alphas = {Angle::zero()};
    CHECK_THROWS_AS(cmd_conics(cfg), InvalidConfig);
}
