#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "dsr");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    Run r;
    r.code = dsr::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

fs::path scratch(const std::string& name)
{
    const fs::path p = fs::temp_directory_path() / ("dsr-cli-" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

} // namespace

TEST_CASE("lambda1")
{
    auto r = run({"lambda1", "Bw"});
    CHECK(r.code == 0);
    CHECK(r.out == "2.000000000000\n");

    r = run({"lambda1", "Bg"});
    CHECK(r.out == "2.732050807569\n");

    r = run({"lambda1", "Bg", "--full-spectrum"});
    CHECK(r.code == 0);
    CHECK(r.out.find("spectrum: 2.732050807569 -0.732050807569 -2.000000000000") !=
          std::string::npos);

    CHECK(run({"lambda1", "B"}).code == 2);
    CHECK(run({"lambda1", "A?"}).code == 2); // disconnected
}

TEST_CASE("lambda1 from a file")
{
    const auto dir = scratch("file");
    std::ofstream(dir / "in.g6") << "Bw\nBg\n";
    const auto r = run({"lambda1", "-f", (dir / "in.g6").string()});
    CHECK(r.code == 0);
    CHECK(r.out == "Bw 2.000000000000\nBg 2.732050807569\n");
    fs::remove_all(dir);
}

TEST_CASE("ckappa")
{
    auto r = run({"ckappa", "EBj?", "--r", "2", "--h", "1"}); // C6
    CHECK(r.code == 0);
    CHECK(r.out.rfind("2\nwitness:", 0) == 0);
    CHECK(r.out.find("component sizes: 2 2") != std::string::npos);

    r = run({"ckappa", "Dhc", "--r", "2", "--h", "2"}); // C5
    CHECK(r.code == 0);
    CHECK(r.out == "undefined\n");

    CHECK(run({"ckappa", "Dhc", "--r", "1", "--h", "0"}).code == 2);
}

TEST_CASE("family")
{
    auto r = run({"family", "--n", "6", "--r", "2", "--h", "1", "--delta", "2", "--ckappa", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"all_pass\": true") != std::string::npos);
    CHECK(r.out.find("\"case\": \"iii\"") != std::string::npos);

    r = run({"family", "--n", "5", "--r", "2", "--h", "1", "--delta", "1", "--ckappa", "2"});
    CHECK(r.code == 2);
    CHECK(r.err.find("n >= ckappa + r(h+1)") != std::string::npos);

    r = run({"family", "--case", "i", "--n", "6", "--r", "2", "--h", "1", "--delta", "2",
             "--ckappa", "1"});
    CHECK(r.code == 2);
}

TEST_CASE("usage errors and help")
{
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"family", "--n", "6"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"verify", "--help"}).code == 0);
    CHECK(run({"enumerate", "--n", "99"}).code == 2);
}

TEST_CASE("enumerate")
{
    const auto r = run({"enumerate", "--n", "4"});
    CHECK(r.code == 0);
    int lines = 0;
    for (char c : r.out)
        lines += c == '\n';
    CHECK(lines == 6);
}

TEST_CASE("verify writes reports and maps verdicts to exit codes")
{
    const auto dir = scratch("verify");
    const auto out = (dir / "reports").string();
    const auto cache = (dir / "cache").string();

    auto r = run({"verify", "--edge-lemma", "--n", "5", "--out", out, "--cache-dir", cache});
    CHECK(r.code == 0);
    CHECK(fs::exists(fs::path(out) / "edge-lemma-n5.json"));

    r = run({"verify", "--join-lemma", "--n-max", "6", "--out", out, "--cache-dir", cache});
    CHECK(r.code == 0);
    CHECK(fs::exists(fs::path(out) / "join-lemma-n6.json"));

    r = run({"verify", "--theorem", "--n", "5", "--r", "2", "--h", "2", "--out", out,
             "--cache-dir", cache});
    CHECK(r.code == 0);
    CHECK(r.out.find("HYPOTHESIS_UNMET") != std::string::npos);
    r = run({"verify", "--theorem", "--n", "5", "--r", "2", "--h", "2", "--strict", "--out", out,
             "--cache-dir", cache});
    CHECK(r.code == 1);

    r = run({"verify", "--theorem", "--n", "6", "--r", "2", "--h", "1", "--out", out,
             "--cache-dir", cache});
    CHECK(r.code == 1); // case (i) classes do not match
    const auto json_path = fs::path(out) / "theorem-n6-r2-h1.json";
    REQUIRE(fs::exists(json_path));
    CHECK(fs::exists(fs::path(out) / "theorem-n6-r2-h1.csv"));
    std::ifstream in(json_path);
    const auto j = nlohmann::json::parse(in);
    CHECK(j.contains("results"));
    CHECK(j.contains("manifest"));
    CHECK(j["results"]["graphs"] == 112);
    CHECK(j["manifest"]["jobs"] == 1);

    CHECK(run({"verify", "--n", "5", "--out", out}).code == 2);
    CHECK(run({"verify", "--theorem", "--edge-lemma", "--n", "5", "--out", out}).code == 2);
    fs::remove_all(dir);
}
