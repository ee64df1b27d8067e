#include "qlat/cli/dispatch.hpp"

#include "doctest.h"
#include "json.hpp"

#include <fstream>
#include <sstream>

using qlat::cli::dispatch;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("documented invocations") {
    const auto qnum = run({"qnum", "--n", "2", "--r", "2", "--symbolic"});
    CHECK(qnum.code == 0);
    CHECK(qnum.out == "1 + q^2\n");

    const auto rep = run({"rep", "--j", "0.5", "--q", "1.5", "--check", "--json"});
    CHECK(rep.code == 0);
    const auto j = nlohmann::json::parse(rep.out);
    CHECK(j["dims"] == nlohmann::json::array({2}));
    CHECK(j["residuals"]["rel1"].get<double>() <= 1e-12);
    CHECK(j["spinor"]["exact"] == true);

    const auto flat = run({"plane", "flatness", "--preset", "counterexample", "--max-degree", "3"});
    CHECK(flat.code == 0);
    CHECK(flat.out.find("  x^3 + y^3 + x^2*y + x*y^2 = 0\n") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"rep", "--j", "0.3"}).code == 2);
    CHECK(run({"rep", "--j", "1", "--q", "0.5"}).code == 2);
    CHECK(run({"qnum", "--n", "2.5", "--r", "2", "--symbolic"}).code == 2);
    CHECK(run({"plane", "normalize", "--preset", "manin", "--expr", "x*(y"}).code == 2);
    CHECK(run({"plane", "flatness", "--preset", "nope"}).code == 2);
    CHECK(run({"plane", "flatness", "--preset", "counterexample", "--max-degree", "3", "--check"})
              .code == 1);
    CHECK(run({"phase", "reconstruct", "--N", "20", "--check"}).code == 1);
    CHECK(run({"phase", "rep", "--N", "20", "--check"}).code == 0);
    CHECK(run({"classical", "period", "--t-min", "0", "--t-max", "20"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("custom rules and derivatives") {
    CHECK(run({"plane", "normalize", "--gens", "x,y", "--rule", "y*x -> (1/q)*x*y", "--expr", "y*x*y"})
              .out == "q^(-1)*x*y^2\n");
    CHECK(run({"plane", "derive", "--preset", "wz-calculus", "--wrt", "dx", "--expr", "x*y"}).out ==
          "q^2*y\n");
    CHECK(run({"plane", "normalize", "--preset", "manin", "--gens", "x,y", "--expr", "x"}).code == 2);
}

TEST_CASE("output is byte-identical and --out writes the report") {
    const std::vector<std::string> args{"tensor", "--j", "0.5", "--j", "0.5", "--q", "1.2", "--json"};
    CHECK(run(args).out == run(args).out);
    const std::string path = "test_cli_out.csv";
    const auto r = run({"classical", "traj", "--t-max", "1", "--samples", "4", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::string header;
    std::getline(f, header);
    CHECK(header == "t,x_closed,x_integrated,rel_dev,energy_drift");
}
