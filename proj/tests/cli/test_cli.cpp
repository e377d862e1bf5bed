#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

// stdout only; stderr is discarded
Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + "'" ABCALC_CLI_PATH "' " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string field(const std::string& csv, const std::string& column) {
    const auto nl = csv.find('\n');
    const std::string header = csv.substr(0, nl);
    const auto row_end = csv.find('\n', nl + 1);
    const std::string row = csv.substr(nl + 1, row_end - nl - 1);
    std::size_t idx = 0;
    std::size_t pos = 0;
    while (true) {
        const auto next = header.find(',', pos);
        if (header.substr(pos, next - pos) == column) break;
        REQUIRE(next != std::string::npos);
        pos = next + 1;
        ++idx;
    }
    pos = 0;
    for (std::size_t k = 0; k < idx; ++k) pos = row.find(',', pos) + 1;
    return row.substr(pos, row.find(',', pos) - pos);
}

}  // namespace

TEST_CASE("eval prints the AB integral of z") {
    const Run r = run("eval --operator ab-int --f \"pow(z-0,1)\" --c 0 --z 1 --nu 0.5 --B one");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("nu_re,nu_im,mu_re,mu_im,z_re,z_im,value_re,value_im,abs_err_est,terms_used,formulation", 0) == 0);
    CHECK(std::abs(std::stod(field(r.out, "value_re")) - 0.8761263890318376) <= 1e-12);
}

TEST_CASE("eval at order one and mu zero") {
    Run r = run("eval --operator abr --nu 1 --f \"pow(z-0,2)\" --z 3 --c 0");
    CHECK(r.code == 0);
    CHECK(field(r.out, "value_re") == "6");
    r = run("eval --operator iab --mu 0 --nu 0.5 --f \"exp(z)\" --z 1 --output json");
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc[0]["value_re"].get<double>() == std::exp(1.0));
}

TEST_CASE("exit codes") {
    CHECK(run("eval --operator abr --f \"exp(z)\" --nu -0.5").code == 2);
    CHECK(run("eval --operator abr --f \"exp(z)\" --nu 0.5 --formulation hankel").code == 2);
    CHECK(run("eval --operator abr --f \"pow(z-1,\" --nu 0.5").code == 1);
    CHECK(run("eval --operator abr --f \"exp(z)\" --nu 0.5 --mu 1").code == 1);
    CHECK(run("eval --operator iab --f \"exp(z)\" --nu 0.5").code == 1);
    CHECK(run("eval --operator abr --f \"exp(z)\" --nu 0.5+").code == 1);
    CHECK(run("frobnicate").code == 1);
    CHECK(run("eval --operator abr --f \"exp(z)\" --nu 0.9 --z 3", "ABCALC_MAX_TERMS=8").code == 3);
    CHECK(run("eval --operator abr --f \"exp(z)\" --nu 0.9 --z 3", "ABCALC_MAX_TERMS=lots").code == 1);
}

TEST_CASE("compare formulations") {
    Run r = run("compare --operator abr --f \"exp(z)\" --nu 0.5+0.4i --tol 1e-5");
    CHECK(r.code == 0);
    CHECK(r.out.find("dev_hankel") != std::string::npos);
    r = run("compare --operator abr --f \"exp(z)\" --nu 0.7 --formulations kernel,series --tol 1e-6");
    CHECK(r.code == 0);
    CHECK(run("compare --operator abr --f \"exp(z)\" --nu 0.5 --formulations series,hankel").code == 2);
    CHECK(run("compare --operator abr --f \"exp(z)\" --nu 0.7 --tol 1e-30").code == 3);
}

TEST_CASE("sweep emits ordered rows and skips forbidden orders") {
    const std::string args =
        "sweep --operator abr --f \"exp(z)\" --param nu --start -0.4 --stop 0.6 --steps 6 --axis real-line";
    const Run r = run(args);
    CHECK(r.code == 0);
    int rows = -1;  // header
    int skipped = 0;
    std::size_t start = 0;
    for (std::size_t nl; (nl = r.out.find('\n', start)) != std::string::npos; start = nl + 1) {
        const std::string line = r.out.substr(start, nl - start);
        ++rows;
        if (line.size() >= 14 && line.compare(line.size() - 14, 14, "skipped:domain") == 0) ++skipped;
    }
    CHECK(rows == 6);
    CHECK(skipped == 2);
    CHECK(run(args + " --threads 1").out == r.out);

    const Run rect = run("sweep --operator abr --f \"exp(z)\" --param nu --start 0.2-0.3i --stop 0.6+0.3i --steps 3 "
                         "--axis complex-rect --output json");
    CHECK(rect.code == 0);
    const auto doc = nlohmann::json::parse(rect.out);
    REQUIRE(doc.size() == 9);
    CHECK(doc[0]["nu_im"].get<double>() == -0.3);
    CHECK(doc[1]["nu_re"].get<double>() == 0.4);
}

TEST_CASE("identical invocations give identical bytes") {
    const std::string args = "eval --operator abc --f \"sin(z)+pow(z-0,1.5)\" --nu 0.3-0.2i --z 0.8+0.1i";
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("verify subcommand") {
    Run r = run("verify --suite golden");
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["passed"] == true);
    r = run("verify --suite golden --tol 1e-300 --output table");
    CHECK(r.code == 3);
    CHECK(r.out.find("FAIL") != std::string::npos);
}
