#include "cli.hpp"
#include "golden_cases.hpp"

#include <json.hpp>

#include "doctest.h"

#include <cstdlib>
#include <sstream>

using bellrec::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli")
{
    TEST_CASE("golden outputs")
    {
        for (const auto& c : load_golden_cases(BELLREC_GOLDEN_DIR)) {
            CAPTURE(c.name);
            const auto r = invoke(c.args);
            CHECK(r.code == 0);
            CHECK(r.out == c.expected);
        }
    }

    TEST_CASE("seq")
    {
        CHECK(invoke({"seq", "--coeffs", "1,1", "--init", "0,1", "--n", "7"}).out == "0\n1\n1\n2\n3\n5\n8\n13\n");
        CHECK(invoke({"seq", "--coeffs", "0,1,1", "--init", "1,0,0", "--n", "8"}).out == "1\n0\n0\n1\n0\n1\n1\n1\n2\n");
        CHECK(invoke({"seq", "--coeffs", "1", "--init", "1", "--n", "3"}).out == "1\n1\n1\n1\n");
        CHECK(invoke({"seq", "--coeffs", "1/2", "--init", "2", "--n", "2"}).out == "2\n1\n1/2\n");
        CHECK(invoke({"seq", "--family", "chebyshev-u", "--n", "3"}).out == "1\n0,2\n-1,0,4\n0,-4,0,8\n");

        CHECK(invoke({"seq", "--coeffs", "1,1", "--init", "0", "--n", "3"}).code == 1);
        CHECK(invoke({"seq", "--coeffs", "1,x", "--init", "0,1", "--n", "3"}).code == 1);
        CHECK(invoke({"seq", "--family", "lucas", "--n", "3"}).code == 1);
        CHECK(invoke({"seq", "--coeffs", "1", "--init", "1"}).code == 1);
    }

    TEST_CASE("decompose")
    {
        CHECK(invoke({"decompose", "--coeffs", "5", "--init", "7"}).out == "7\n");
        CHECK(invoke({"decompose", "--coeffs", "1,1", "--init", "1"}).code == 1);
    }

    TEST_CASE("conv parameter checks")
    {
        CHECK(invoke({"conv", "--coeffs", "1,1", "--r", "2", "--delta", "1", "--n", "4", "--method", "recurrence"}).code == 1);
        CHECK(invoke({"conv", "--coeffs", "1,1", "--r", "0", "--n", "4", "--method", "bell"}).code == 1);
        CHECK(invoke({"conv", "--coeffs", "1,1", "--r", "0", "--n", "3"}).out == "1\n0\n0\n0\n");
        CHECK(invoke({"conv", "--coeffs", "1,1", "--n", "3", "--method", "fast"}).code == 1);

        // delta > 0 with all: direct and bell only
        const auto r = invoke({"conv", "--coeffs", "0,1,1", "--r", "2", "--delta", "2", "--n", "10", "--method", "all",
                               "--format", "json"});
        CHECK(r.code == 0);
        const auto doc = nlohmann::json::parse(r.out);
        CHECK(doc["methods"] == nlohmann::json::array({"convolution-direct", "convolution-bell"}));
        CHECK(doc["verdict"] == "agree");
    }

    TEST_CASE("powersum")
    {
        CHECK(invoke({"powersum", "--roots", "1,2", "--n", "4"}).out == "2\n3\n5\n9\n17\nverdict: agree\n");
        CHECK(invoke({"powersum", "--roots", "3", "--n", "3"}).out == "1\n3\n9\n27\nverdict: agree\n");
        CHECK(invoke({"powersum", "--elems", "3,2", "--d", "2", "--n", "4"}).out == "2\n3\n5\n9\n17\nverdict: agree\n");
        CHECK(invoke({"powersum", "--roots", "1/2,-2,3", "--n", "2"}).out == "3\n3/2\n53/4\nverdict: agree\n");
        CHECK(invoke({"powersum", "--elems", "3,2", "--n", "4"}).code == 1);
        CHECK(invoke({"powersum", "--roots", "1", "--elems", "1", "--d", "1", "--n", "4"}).code == 1);
    }

    TEST_CASE("json records have the fixed schema")
    {
        const auto r = invoke({"powersum", "--roots", "1,2", "--n", "4", "--format", "json"});
        const auto doc = nlohmann::json::parse(r.out);
        for (const char* key : {"command", "params", "values", "methods", "verdict"}) {
            CHECK(doc.contains(key));
        }
        CHECK(doc["values"][4] == "17");
        CHECK(doc["methods"].size() == 3);

        const auto cheb = nlohmann::json::parse(invoke({"seq", "--family", "chebyshev-t", "--n", "2", "--format", "json"}).out);
        CHECK(cheb["values"][2] == nlohmann::json::array({"-1", "0", "2"}));
        CHECK(cheb["verdict"].is_null());
    }

    TEST_CASE("verify")
    {
        const auto a = invoke({"verify", "--suite", "thm4", "--trials", "25", "--seed", "42"});
        CHECK(a.code == 0);
        CHECK(a.out == "thm4: 25/25 passed\nverdict: pass\n");
        CHECK(invoke({"verify", "--suite", "lemma-key", "--trials", "25", "--seed", "1"}).code == 0);

        const auto all1 = invoke({"verify", "--suite", "all", "--trials", "5", "--seed", "7"});
        const auto all2 = invoke({"verify", "--suite", "all", "--trials", "5", "--seed", "7"});
        CHECK(all1.code == 0);
        CHECK(all1.out == all2.out);
        CHECK(all1.err.find("verify: ") != std::string::npos);

        CHECK(invoke({"verify", "--suite", "nope"}).code == 1);
        CHECK(invoke({"verify", "--trials", "0"}).code == 1);
    }

    TEST_CASE("n limit from the environment")
    {
        ::setenv("BELLREC_NMAX_LIMIT", "5", 1);
        CHECK(invoke({"seq", "--coeffs", "1", "--init", "1", "--n", "6"}).code == 1);
        CHECK(invoke({"seq", "--coeffs", "1", "--init", "1", "--n", "5"}).code == 0);
        ::unsetenv("BELLREC_NMAX_LIMIT");
        CHECK(invoke({"seq", "--coeffs", "1", "--init", "1", "--n", "500"}).code == 0);
        CHECK(invoke({"seq", "--coeffs", "1", "--init", "1", "--n", "501"}).code == 1);
    }

    TEST_CASE("help exits cleanly")
    {
        const auto r = invoke({"--help"});
        CHECK(r.code == 0);
        CHECK(r.out.find("conv") != std::string::npos);
    }
}
