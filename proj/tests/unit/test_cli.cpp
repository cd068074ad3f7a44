#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "qschubert/cli.hpp"

using namespace qschubert;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
    std::ifstream in(fs::path(QSCHUBERT_GOLDEN_DIR) / name);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Scoped QSCHUBERT_CACHE_DIR pointing at a fresh directory.
class TempCacheDir {
public:
    TempCacheDir() {
        path_ = fs::temp_directory_path() / ("qschubert-test-" + std::to_string(::getpid()));
        fs::remove_all(path_);
        fs::create_directories(path_);
        ::setenv("QSCHUBERT_CACHE_DIR", path_.c_str(), 1);
    }
    ~TempCacheDir() {
        ::unsetenv("QSCHUBERT_CACHE_DIR");
        fs::remove_all(path_);
    }
    fs::path file() const { return path_ / "qschubert-products.v1.txt"; }

private:
    fs::path path_;
};

const std::vector<std::string> kPair = {"--shape", "4,9", "--lambda", "5,4,4,3", "--mu", "5,4,4,1"};

std::vector<std::string> with(std::string command, std::vector<std::string> extra = {}) {
    std::vector<std::string> args{std::move(command)};
    args.insert(args.end(), kPair.begin(), kPair.end());
    args.insert(args.end(), extra.begin(), extra.end());
    return args;
}

}  // namespace

TEST_CASE("qprod matches the golden outputs") {
    auto plain = cli(with("qprod"));
    CHECK(plain.code == kExitOk);
    CHECK(plain.out == golden("qprod_gr49.txt"));

    auto json = cli(with("qprod", {"--format", "json"}));
    CHECK(json.code == kExitOk);
    CHECK(json.out == golden("qprod_gr49.json"));

    auto latex = cli(with("qprod", {"--format", "latex"}));
    CHECK(latex.code == kExitOk);
    CHECK(latex.out == golden("qprod_gr49.tex"));
}

TEST_CASE("JSON output round-trips byte for byte") {
    for (const auto& command : {"qprod", "cprod", "dmin", "dmax", "squares", "belkale", "fusion"}) {
        auto r = cli(with(command, {"--format", "json"}));
        INFO(command);
        REQUIRE(r.code == kExitOk);
        REQUIRE(!r.out.empty());
        std::string body = r.out.substr(0, r.out.size() - 1);
        auto doc = nlohmann::ordered_json::parse(body);
        CHECK(doc.dump() == body);
        CHECK(doc["meta"]["tool"] == "qschubert");
        CHECK(doc["shape"]["k"] == 4);
        CHECK(doc["shape"]["n"] == 9);
    }
    auto timed = cli(with("qprod", {"--format", "json", "--timing"}));
    auto doc = nlohmann::ordered_json::parse(timed.out);
    CHECK(doc["meta"].contains("elapsedMs"));
}

TEST_CASE("degree commands") {
    CHECK(cli(with("dmin")).out == "2\n");
    CHECK(cli(with("dmax")).out == "3\n");
    CHECK(cli(with("squares")).out == "2x2 at (2,2)\n2x2 at (2,3)\n2x2 at (3,2)\n");
    auto belkale = cli(with("belkale"));
    CHECK(belkale.code == kExitOk);
    CHECK(belkale.out.find("\"a\":4,\"b\":5,\"lambdaPrime\":[4,1],\"muPrime\":[3,2,1,1]") != std::string::npos);
    auto chosen = cli(with("belkale", {"--square", "3,2"}));
    CHECK(chosen.code == kExitOk);
    CHECK(cli(with("belkale", {"--square", "1,1"})).code == kExitInvalidInput);
    CHECK(cli(with("belkale", {"--square", "x"})).code == kExitInvalidInput);
}

TEST_CASE("classical and coefficient commands") {
    CHECK(cli(with("cprod")).out == "0\n");
    CHECK(cli({"cprod", "--shape", "4,9", "--lambda", "4,1", "--mu", "3,2,1,1"}).out ==
          "s[5,4,2,1] + s[5,3,3,1] + s[5,3,2,2]\n");
    CHECK(cli({"lr", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1"}).out == "2\n");
    CHECK(cli(with("lr", {"--nu", "2,1", "-d", "3"})).out == "2\n");
    CHECK(cli(with("lr", {"--nu", "5,3,2,2", "--degree", "2"})).out == "1\n");
    CHECK(cli({"lr", "--lambda", "1", "--mu", "1", "--nu", "2", "--degree", "1"}).code == kExitInvalidInput);
    CHECK(cli(with("fusion")).out == "s[5,4,2,1] + s[5,3,3,1] + s[5,3,2,2] + s[3] + 2*s[2,1] + s[1,1,1]\n");
}

TEST_CASE("empty partition spelled 0") {
    auto r = cli({"qprod", "--shape", "4,9", "--lambda", "0", "--mu", "5,4,4,1"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "s[5,4,4,1]\n");
}

TEST_CASE("invalid input exits 2") {
    CHECK(cli({"qprod", "--shape", "4,9", "--lambda", "6", "--mu", "1"}).code == kExitInvalidInput);
    CHECK(cli({"qprod", "--shape", "4,9", "--lambda", "1,1,1,1,1", "--mu", "1"}).code == kExitInvalidInput);
    CHECK(cli({"qprod", "--shape", "4,9", "--lambda", "1,2", "--mu", "1"}).code == kExitInvalidInput);
    CHECK(cli({"qprod", "--shape", "9,9", "--lambda", "1", "--mu", "1"}).code == kExitInvalidInput);
    CHECK(cli({"qprod", "--lambda", "1", "--mu", "1"}).code == kExitInvalidInput);
    CHECK(cli({"qprod", "--shape", "2,4", "--lambda", "1", "--mu", "1", "--format", "xml"}).code == kExitInvalidInput);
    CHECK(cli({"nonsense"}).code == kExitInvalidInput);
    CHECK(cli({}).code == kExitInvalidInput);
    auto usage = cli({"qprod", "--shape", "2,4"});
    CHECK(usage.code == kExitInvalidInput);
    CHECK(usage.err.find("--lambda") != std::string::npos);
    CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("resource limit exits 4") {
    auto r = cli({"fusion", "--shape", "1,13", "--lambda", "1", "--mu", "1"});
    CHECK(r.code == kExitResourceLimit);
    CHECK(r.err.find("resource limit") != std::string::npos);
}

TEST_CASE("table and selftest") {
    auto table = cli({"table", "--shape", "2,4", "--jobs", "2"});
    CHECK(table.code == kExitOk);
    CHECK(table.out.find("s[2,1] * s[2,1] = q*s[2] + q*s[1,1]") != std::string::npos);
    auto json = cli({"table", "--shape", "2,4", "--format", "json"});
    CHECK(json.code == kExitOk);
    CHECK(nlohmann::ordered_json::parse(json.out)["products"].size() == 21);

    auto selftest = cli({"selftest", "--max-n", "5", "--jobs", "2"});
    CHECK(selftest.code == kExitOk);
    CHECK(selftest.out.find("FAIL") == std::string::npos);
    CHECK(cli({"selftest", "--max-n", "1"}).code == kExitInvalidInput);
}

TEST_CASE("product cache") {
    TempCacheDir dir;
    auto first = cli(with("qprod"));
    CHECK(first.code == kExitOk);
    REQUIRE(fs::exists(dir.file()));
    auto second = cli(with("qprod"));
    CHECK(second.out == first.out);
    // order of the factors does not matter
    auto swapped = cli({"qprod", "--shape", "4,9", "--lambda", "5,4,4,1", "--mu", "5,4,4,3"});
    CHECK(swapped.out == first.out);

    CHECK(cli({"table", "--shape", "2,4"}).code == kExitOk);
    auto self = cli({"selftest", "--max-n", "3"});
    CHECK(self.code == kExitOk);
    CHECK(self.out.find("cache entries recomputed") != std::string::npos);

    // a tampered entry is caught by selftest
    {
        std::ofstream out(dir.file(), std::ios::app);
        out << "1,2|0|1|1|7\n";
    }
    CHECK(cli({"selftest", "--max-n", "3"}).code == kExitConsistency);

    // garbage is ignored with a warning
    {
        std::ofstream out(dir.file(), std::ios::trunc);
        out << "not a cache\n";
    }
    auto recovered = cli(with("qprod"));
    CHECK(recovered.code == kExitOk);
    CHECK(recovered.out == first.out);
    CHECK(recovered.err.find("warning") != std::string::npos);
}
