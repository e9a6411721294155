#include "doctest.h"
#include "rspin/verify.hpp"

using namespace rspin;

TEST_CASE("verification battery is clean at small scale") {
    VerifyOptions opt;
    opt.n_max = 5;
    opt.r_max = 5;
    opt.jobs = 2;
    auto results = run_verification(opt);
    REQUIRE(results.size() == suite_names().size());
    for (const auto& s : results) {
        CAPTURE(s.name);
        CHECK(s.cases > 0);
        CHECK(s.failures == 0);
    }
}

TEST_CASE("unknown suites are rejected") {
    CHECK_THROWS_AS(run_suite("no-such-suite", VerifyOptions{}), UnknownSuite);
}

TEST_CASE("results are independent of the worker count") {
    VerifyOptions a{4, 4, 1}, b{4, 4, 3};
    auto ra = run_verification(a);
    auto rb = run_verification(b);
    REQUIRE(ra.size() == rb.size());
    for (size_t i = 0; i < ra.size(); ++i) {
        CHECK(ra[i].name == rb[i].name);
        CHECK(ra[i].cases == rb[i].cases);
        CHECK(ra[i].failures == rb[i].failures);
    }
}
