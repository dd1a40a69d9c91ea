#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "doctest.h"
#include "qco/io.hpp"

using namespace qco;

TEST_CASE("gate-set json round trip is exact") {
    Rng rng(55);
    GateSet s;
    s.label = "roundtrip";
    s.provenance.kind = "haar";
    s.provenance.seed = 55;
    for (int i = 0; i < 4; ++i) s.gates.push_back(haar_sample(rng));

    auto text = gateset_to_json(s);
    auto back = gateset_from_json(text);
    CHECK(back.label == s.label);
    CHECK(back.provenance.kind == "haar");
    CHECK(back.provenance.seed == 55);
    REQUIRE(back.size() == s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        CHECK((back.gates[i].matrix() - s.gates[i].matrix()).norm() == 0.0);
}

TEST_CASE("gate-set loader normalizes unnormalized matrices") {
    // the sqrt(11)-scaled involution in raw integer form
    std::string text = R"({"gates": [[[[3,0],[1,-1]],[[1,1],[-3,0]]]]})";
    auto s = gateset_from_json(text);
    REQUIRE(s.size() == 1);
    CHECK(projective_equal(s.gates[0], t12_gate()));
}

TEST_CASE("malformed gate-set files are rejected") {
    CHECK_THROWS_AS(gateset_from_json("not json"), InputError);
    CHECK_THROWS_AS(gateset_from_json("{}"), InputError);
    CHECK_THROWS_AS(gateset_from_json(R"({"gates": []})"), InputError);
    CHECK_THROWS_AS(gateset_from_json(R"({"gates": [[[1,0],[0,1]]]})"), InputError);
}

TEST_CASE("fmt17 round trips doubles") {
    for (double v : {0.1, 1.0 / 3.0, 2.0 * std::sqrt(23.0) / 24.0, 1e-300, 52.0}) {
        double back = std::strtod(fmt17(v).c_str(), nullptr);
        CHECK(back == v);
    }
}

TEST_CASE("profile csv layout") {
    GateSet s;
    s.gates.push_back(ProjectiveGate());
    auto p = delta_profile(s, 2, 1);
    auto csv = profile_to_csv(p);
    CHECK(csv.rfind("s,norm,delta,converged\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}

TEST_CASE("report csv flags no-gap sets in-band") {
    GateSet s;
    s.gates.push_back(ProjectiveGate());
    s.gates.push_back(ProjectiveGate());
    auto rep = q_report(s, 2, {}, 1);
    auto row = report_to_csv_row(rep);
    CHECK(row.find("no_gap") != std::string::npos);
    CHECK(row.find("inf") != std::string::npos);
    CHECK(report_csv_header() ==
          "variant,label,n,t,delta,q,q_opt_bar,delta_opt,flags\n");
}

TEST_CASE("histogram and spectrum csv") {
    std::vector<double> xs{1.0, 2.0, 3.0};
    auto h = histogram(xs, 2);
    auto hcsv = histogram_to_csv(h);
    CHECK(hcsv.rfind("bin_left,bin_right,density\n", 0) == 0);

    GateSet s;
    s.gates.push_back(ProjectiveGate());
    auto spec = singular_spectrum(s, 2, Weighting::Uniform, 1);
    CHECK(spectrum_to_csv(spec).rfind("value,weight\n", 0) == 0);

    auto km = km_overlay(12, false);
    auto kcsv = km_to_csv(km, 16);
    CHECK(kcsv.rfind("x,density\n", 0) == 0);
    CHECK(std::count(kcsv.begin(), kcsv.end(), '\n') == 17);
}

TEST_CASE("file io reports failures") {
    CHECK_THROWS_AS(read_file("/nonexistent/qco-test-file"), InputError);
    std::string path = "/tmp/qco_io_test.json";
    write_file(path, "{\"gates\": [[[[1,0],[0,0]],[[0,0],[1,0]]]]}");
    auto s = load_gateset(path);
    CHECK(s.size() == 1);
    std::remove(path.c_str());
}

TEST_CASE("search result serialization carries axis data") {
    auto h = hurwitz_group();
    auto res = search_best_completion(h, 2, 3, 6, SearchStrategy::Random, 1, 1);
    auto j = search_to_json(res, true);
    CHECK(j.find("best_axis") != std::string::npos);
    CHECK(j.find("trace") != std::string::npos);
    auto j2 = search_to_json(res, false);
    CHECK(j2.find("trace") == std::string::npos);
}
