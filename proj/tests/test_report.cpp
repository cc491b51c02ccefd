#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "ttlab/suites.hpp"
#include "ttlab/tau_json.hpp"

using namespace ttlab;

TEST_CASE("json report round-trips byte-identically") {
    SuiteConfig cfg;
    cfg.suite = "words";
    ReportBundle b = run_suite(cfg);
    std::string emitted = emit_json(b);
    nlohmann::json parsed = nlohmann::json::parse(emitted);
    CHECK(parsed.dump(2) + "\n" == emitted);
}

TEST_CASE("same-config reruns are identical") {
    SuiteConfig cfg;
    cfg.suite = "virasoro";
    cfg.seed = 7;
    std::string a = emit_json(run_suite(cfg));
    std::string b = emit_json(run_suite(cfg));
    CHECK(a == b);
}

TEST_CASE("csv has a stable header and one row per case") {
    SuiteConfig cfg;
    cfg.suite = "numeric";
    ReportBundle b = run_suite(cfg);
    std::string csv = emit_csv(b);
    CHECK(csv.rfind("check_id,paper_ref,status,order_verified,", 0) == 0);
    int rows = 0;
    for (char c : csv)
        if (c == '\n') ++rows;
    CHECK(rows == static_cast<int>(b.cases.size()) + 1);
}

TEST_CASE("text report ends with the tally") {
    SuiteConfig cfg;
    cfg.suite = "closed-forms";
    ReportBundle b = run_suite(cfg);
    std::string text = emit_text(b);
    std::string tail = std::to_string(b.n_passed()) + " passed / " +
                       std::to_string(b.n_failed()) + " failed\n";
    CHECK(text.size() >= tail.size());
    CHECK(text.substr(text.size() - tail.size()) == tail);
}

TEST_CASE("the all suite is the union of the named suites without duplicate ids") {
    SuiteConfig cfg;
    cfg.suite = "all";
    ReportBundle b = run_suite(cfg);
    std::set<std::string> ids;
    for (const auto& c : b.cases) {
        CHECK(ids.insert(c.result.check_id).second);
    }
    size_t total = 0;
    for (const auto& name : suite_names()) {
        if (name == "all") continue;
        SuiteConfig one = cfg;
        one.suite = name;
        total += run_suite(one).cases.size();
    }
    CHECK(b.cases.size() == total);
}

TEST_CASE("unknown suites are rejected") {
    SuiteConfig cfg;
    cfg.suite = "no-such-suite";
    CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
}

TEST_CASE("tau series serialization") {
    WeightSpec spec = WeightSpec::jacobi(Rat(-1, 2), Rat(-1, 2), 1);
    TauSeries t = tau(spec, 2, 3);
    nlohmann::json j = tau_to_json(t);
    CHECK(j["n"] == 2);
    CHECK(j["normalization"]["pi_power"] == 2);
    CHECK(j["terms"].size() == t.series.terms().size());
    // stable re-emission
    CHECK(nlohmann::json::parse(j.dump()).dump() == j.dump());
}
