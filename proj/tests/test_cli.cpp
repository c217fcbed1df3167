#include "bouquet/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = bouquet::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

nlohmann::json footer(const std::string& text)
{
    std::string last = lines(text).back();
    if (last.rfind("# ", 0) == 0)
        last = last.substr(2);
    return nlohmann::json::parse(last).at("footer");
}

} // namespace

TEST_CASE("fnv1a")
{
    CHECK(bouquet::cli::fnv1a_hex("") == "cbf29ce484222325");
    CHECK(bouquet::cli::fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("kernel rows")
{
    const auto r = run({"kernel", "--system", "yb", "--nu", "2,1", "--q", "1/2"});
    REQUIRE(r.code == 0);
    const auto row = nlohmann::json::parse(lines(r.out).front());
    CHECK(row.at("total") == "1/1");
    CHECK(row.at("source") == nlohmann::json::array({2, 1}));
    bool found = false;
    for (const auto& e : row.at("entries"))
        if (e.at("target") == nlohmann::json::array({1})) {
            CHECK(e.at("p") == "3/8");
            found = true;
        }
    CHECK(found);
    const auto f = footer(r.out);
    CHECK(f.at("exit_code") == 0);
    CHECK(f.at("config").at("system") == "yb");
    CHECK(f.at("config").contains("epsilon"));
    CHECK(f.at("config").at("seed") == 0);

    const auto gt = run({"kernel", "--system", "gt", "--nu", "2,0", "--level", "1"});
    CHECK(gt.code == 0);
    CHECK(lines(gt.out).front().find("\"1/3\"") != std::string::npos);
    const auto levels = run({"kernel", "--system", "binom", "--nu", "3", "--r-from", "3", "--r-to", "1"});
    CHECK(levels.code == 0);
    CHECK(lines(levels.out).front().find("\"8/27\"") != std::string::npos);
    CHECK(run({"kernel", "--system", "pascal", "--nu", "2,1"}).code == 0);
    CHECK(run({"kernel", "--system", "young", "--nu", "2,1", "--m", "2"}).code == 0);
}

TEST_CASE("invalid input and usage")
{
    auto r = run({"kernel", "--system", "binom", "--nu", "3", "--q", "2"});
    CHECK(r.code == 2);
    CHECK(footer(r.out).at("exit_code") == 2);
    r = run({"kernel", "--bogus"});
    CHECK(r.code == 2);
    CHECK(r.err.find("Usage") != std::string::npos);
    r = run({});
    CHECK(r.code == 2);
    r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("epsilon") != std::string::npos);
    CHECK(run({"kernel", "--system", "young", "--nu", "2,x", "--m", "1"}).code == 2);
    CHECK(run({"kernel", "--system", "young", "--nu", "1,2", "--m", "1"}).code == 2);
    CHECK(run({"measure", "--family", "z", "--z", "1", "--zp", "-1/2", "--level", "2"}).code == 2);
    CHECK(run({"verify", "--suite", "nope"}).code == 2);
}

TEST_CASE("tail budget failures exit 3")
{
    const auto r = run({"sample", "--system", "yb-path", "--delta", "10", "--r", "1", "--cutoff", "3"});
    CHECK(r.code == 3);
    CHECK(r.err.find("tail budget") != std::string::npos);
}

TEST_CASE("boundary and measure output")
{
    auto r = run({"boundary", "--system", "young", "--alpha", "1/2", "--beta", "1/4", "--delta", "1", "--mu", "1"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(lines(r.out).front()).at("value") == "1/1");
    r = run({"boundary", "--system", "poisson", "--x", "1", "--r", "1", "--m", "0"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(lines(r.out).front()).at("value").get<double>()
          == doctest::Approx(0.36787944117144233));
    r = run({"boundary", "--system", "gt", "--alpha", "1/2", "--signature", "1,0"});
    CHECK(r.code == 0);
    r = run({"boundary", "--system", "gt", "--beta", "1", "--signature", "1,0"});
    CHECK(r.code == 2);
    r = run({"measure", "--family", "z", "--z", "2", "--zp", "3", "--level", "2"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(lines(r.out).front());
    CHECK(j.at("entries").at(0).at("p") == "6/7");
    CHECK(j.at("total") == "1/1");
    r = run({"measure", "--family", "negbinom", "--c", "1", "--r", "1", "--m", "2"});
    CHECK(nlohmann::json::parse(lines(r.out).front()).at("value") == "1/8");
    r = run({"measure", "--family", "zw", "--z", "1/2", "--zp", "1/2", "--w", "1/2", "--wp", "1/2", "--level", "1",
             "--cutoff", "40"});
    CHECK(r.code == 0);
    r = run({"measure", "--family", "zw", "--z", "1/2", "--zp", "1/2", "--w", "1/2", "--wp", "1/2", "--signature", "0"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(lines(r.out).front()).at("value").get<double>() == doctest::Approx(0.5 * 16 / (M_PI * M_PI)));
}

TEST_CASE("sweeps and verification suites")
{
    auto r = run({"verify", "--suite", "thm5", "--mu", "1", "--nu", "2,1", "--ratio", "2", "--grid", "10,20,40,80"});
    // the fitted exponent for this pair is -2, outside the configured band
    CHECK(r.code == 3);
    CHECK(r.out.rfind("param,error,tail_bound,error_exact\n", 0) == 0);
    CHECK(r.out.find("fitted exponent -2.00") != std::string::npos);
    CHECK(r.out.find("FAIL thm5") != std::string::npos);
    r = run({"verify", "--suite", "thm5", "--mu", "0", "--nu", "1", "--ratio", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS thm5") != std::string::npos);

    r = run({"sweep", "--theorem", "cor2", "--mu", "1,1", "--grid", "10,15,20,25"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).size() == 6);
    CHECK(footer(r.out).at("sweep").at("passed") == true);

    const auto dir = std::filesystem::temp_directory_path() / "bouquet_cli_test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    r = run({"sweep", "--theorem", "lemma5", "--k", "1", "--grid", "10,100", "--out-dir", dir.string()});
    CHECK(r.code == 0);
    const std::string file = footer(r.out).at("csv_file");
    CHECK(std::filesystem::exists(file));
    CHECK(std::filesystem::path(file).filename().string().rfind("lemma5_", 0) == 0);
    std::filesystem::remove_all(dir);

    CHECK(run({"verify", "--suite", "coherence-all"}).code == 0);
    CHECK(run({"verify", "--suite", "gibbs"}).code == 0);
    CHECK(run({"verify", "--suite", "z-measures"}).code == 0);
    CHECK(run({"verify", "--suite", "stochasticity"}).code == 0);
}

TEST_CASE("sampling")
{
    const auto r = run({"sample", "--system", "poisson-path", "--x", "0", "--r", "1", "--n", "5", "--seed", "7"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 7);
    for (int i = 0; i < 5; ++i)
        CHECK(nlohmann::json::parse(ls[static_cast<std::size_t>(i)]).at("jumps").empty());
    CHECK(nlohmann::json::parse(ls[5]).contains("summary"));
    CHECK(footer(r.out).at("config").at("n") == "5");

    const std::vector<std::string> args{"sample", "--system", "ssyt", "--shape", "2,1", "--max-entry", "3", "--n", "4", "--seed", "11"};
    CHECK(run(args).out == run(args).out);
    auto other = args;
    other.back() = "12";
    CHECK(run(args).out != run(other).out);
    CHECK(run({"sample", "--system", "standard-tableau", "--shape", "3,2", "--n", "3"}).code == 0);
    CHECK(run({"sample", "--system", "gt-scheme", "--shape", "2", "--max-entry", "2", "--n", "3"}).code == 0);
    CHECK(run({"sample", "--system", "yb-path", "--alpha", "1/2", "--delta", "1", "--r", "1", "--n", "3"}).code == 0);
}

TEST_CASE("output file and environment")
{
    const auto path = std::filesystem::temp_directory_path() / "bouquet_cli_out.json";
    auto r = run({"--output", path.string(), "kernel", "--system", "young", "--nu", "1", "--m", "0"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str().find("\"total\":\"1/1\"") != std::string::npos);
    std::filesystem::remove(path);

    setenv("BOUQUET_EPSILON", "1/1000000", 1);
    r = run({"kernel", "--system", "young", "--nu", "1", "--m", "0"});
    auto fj = footer(r.out);
    CHECK(fj.at("env").at("BOUQUET_EPSILON") == "1/1000000");
    CHECK(fj.at("config").at("epsilon").get<double>() == doctest::Approx(1e-6));
    r = run({"--epsilon", "1e-5", "kernel", "--system", "young", "--nu", "1", "--m", "0"});
    fj = footer(r.out);
    CHECK_FALSE(fj.contains("env"));
    CHECK(fj.at("config").at("epsilon").get<double>() == doctest::Approx(1e-5));
    unsetenv("BOUQUET_EPSILON");
}
