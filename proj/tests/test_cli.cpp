#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "apery/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "apery");
    std::ostringstream out;
    std::ostringstream err;
    const int code = apery::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("compute") {
    CHECK(run({"compute", "--what", "b", "--method", "closed", "10"}).out == "2\n");
    CHECK(run({"compute", "--what", "a", "--method", "barnes", "0"}).out == "1\n");
    CHECK(run({"compute", "--what", "b", "--method", "thm1", "0"}).out == "0\n");
    CHECK(run({"compute", "--what", "a", "5"}).out == "1683\n");
    CHECK(run({"compute", "--what", "b", "3"}).out == "2\n");
    for (const char* m : {"direct", "barnes", "convolution", "recurrence"}) {
        CHECK(run({"compute", "--what", "a", "--method", m, "10"}).out == "8097453\n");
    }
    for (const char* m : {"closed", "closed_alt", "thm1", "thm3", "linrep", "oracle"}) {
        CHECK(run({"compute", "--what", "b", "--method", m, "27"}).out == "4\n");
    }
    CHECK(run({"compute", "--what", "b", "--method", "thm3", "123456789012345678901234567890123"}).out == "32\n");
}

TEST_CASE("compute usage errors exit 2") {
    CHECK(run({"compute", "--what", "b", "--method", "nope", "3"}).code == 2);
    CHECK(run({"compute", "--what", "a", "--method", "closed", "3"}).code == 2);
    CHECK(run({"compute", "--what", "c", "3"}).code == 2);
    CHECK(run({"compute", "--what", "b", "3x"}).code == 2);
    CHECK(run({"compute", "--what", "b", "-3"}).code == 2);
    CHECK(run({"compute", "3"}).code == 2);
    CHECK(run({"compute", "--what", "a", "99999999999999999999"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    const auto r = run({"compute", "--what", "b", "--method", "nope", "3"});
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("verify") {
    const auto a = run({"verify", "--suite", "a-methods", "0", "0"});
    CHECK(a.code == 0);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["suite"] == "a-methods");
    CHECK(j["lo"] == "0");
    CHECK(j["hi"] == "0");
    CHECK(j["mismatch"].is_null());
    CHECK(j["elapsed_ms"].is_number_integer());

    CHECK(run({"verify", "--suite", "b-vs-oracle", "0", "150"}).code == 0);
    CHECK(run({"verify", "--suite", "b-methods", "0", "5000"}).code == 0);
    CHECK(run({"verify", "--suite", "min-valuation", "1", "100"}).code == 0);
    CHECK(run({"verify", "--suite", "linrep-relation", "0", "3000", "--threads", "2"}).code == 0);
}

TEST_CASE("verify with an injected fault exits 1 and names n") {
    const auto r = run({"verify", "--suite", "linrep-relation", "--perturb", "1,0,0,1", "0", "500"});
    CHECK(r.code == 1);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["mismatch"].is_object());
    // mu(1) row 0 gains +b(n); first n with b(n) != 0 is 1
    CHECK(j["mismatch"]["n"] == "1");
    for (const char* key : {"lhs_method", "lhs", "rhs_method", "rhs"}) {
        CHECK(j["mismatch"][key].is_string());
    }
}

TEST_CASE("verify usage errors exit 2") {
    CHECK(run({"verify", "--suite", "nope", "0", "1"}).code == 2);
    CHECK(run({"verify", "--suite", "b-methods", "5", "4"}).code == 2);
    CHECK(run({"verify", "--suite", "b-methods", "5"}).code == 2);
    CHECK(run({"verify", "--suite", "b-methods", "x", "4"}).code == 2);
    CHECK(run({"verify", "--suite", "min-valuation", "0", "4"}).code == 2);
    CHECK(run({"verify", "--suite", "linrep-relation", "--perturb", "0,0,1,1", "0", "4"}).code == 2);
    CHECK(run({"verify", "--suite", "linrep-relation", "--perturb", "1,0", "0", "4"}).code == 2);
    CHECK(run({"verify", "0", "4"}).code == 2);
}

TEST_CASE("table") {
    CHECK(run({"table", "0", "3", "--format", "csv", "--columns", "n,b"}).out == "n,b\n0,0\n1,1\n2,0\n3,2\n");
    CHECK(run({"table", "5", "5", "--format", "json", "--columns", "n,a"}).out == "[{\"n\":5,\"a\":\"1683\"}]\n");
    CHECK(run({"table", "9", "10", "--columns", "n,digits,r,s"}).out == "n,digits,r,s\n9,100,1,[2]\n10,101,2,\"[0,2]\"\n");
    CHECK(run({"table", "0", "0", "--columns", "digits,s"}).out == "digits,s\n0,[]\n");
    CHECK(run({"table", "10", "10", "--format", "json", "--columns", "n,a,b,digits,r,s"}).out ==
          "[{\"n\":10,\"a\":\"8097453\",\"b\":2,\"digits\":\"101\",\"r\":2,\"s\":[0,2]}]\n");
    CHECK(run({"table", "0", "2"}).out == "n,a,b\n0,1,0\n1,3,1\n2,13,0\n");
}

TEST_CASE("table usage errors exit 2") {
    CHECK(run({"table", "2", "1", "--columns", "n"}).code == 2);
    CHECK(run({"table", "0", "3", "--columns", "n,q"}).code == 2);
    CHECK(run({"table", "0", "3", "--format", "xml"}).code == 2);
    CHECK(run({"table", "0"}).code == 2);
}

TEST_CASE("kernel") {
    CHECK(run({"kernel", "--depth", "0", "--len", "5"}).out == R"({"depth":0,"prefix_len":5,"rows":1,"rank":1})"
                                                                 "\n");
    const auto r = run({"kernel", "--depth", "3", "--len", "100"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["rank"] == 3);
    CHECK(nlohmann::json::parse(r.out)["rows"] == 40);
    CHECK(run({"kernel", "--depth", "7", "--len", "10"}).code == 2);
    CHECK(run({"kernel", "--depth", "2", "--len", "0"}).code == 2);
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> table = {"table", "0", "60", "--format", "json", "--columns", "n,a,b,digits,r,s"};
    CHECK(run(table).out == run(table).out);

    auto strip_elapsed = [](const std::string& s) {
        auto j = nlohmann::json::parse(s);
        j.erase("elapsed_ms");
        return j.dump();
    };
    const auto a = run({"verify", "--suite", "linrep-relation", "--perturb", "2,0,0,1", "0", "3000", "--threads", "1"});
    const auto b = run({"verify", "--suite", "linrep-relation", "--perturb", "2,0,0,1", "0", "3000", "--threads", "4"});
    CHECK(a.code == 1);
    CHECK(strip_elapsed(a.out) == strip_elapsed(b.out));
}
