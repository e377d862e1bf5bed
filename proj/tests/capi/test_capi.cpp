#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <abcalc/abcalc.h>

#include <cmath>
#include <cstring>
#include <string>
#include <thread>

namespace {

struct Fn {
    abc_function* p = nullptr;
    explicit Fn(const char* text) { REQUIRE(abc_function_parse(text, &p, nullptr) == ABC_OK); }
    ~Fn() { abc_function_free(p); }
};

}  // namespace

TEST_CASE("parse, evaluate, differentiate, print") {
    Fn f("pow(z-0,2) + exp(z)");
    abc_complex v{};
    REQUIRE(abc_function_eval(f.p, {1.0, 0.0}, &v) == ABC_OK);
    CHECK(std::abs(v.re - (1.0 + std::exp(1.0))) <= 1e-15);
    CHECK(v.im == 0.0);

    abc_function* d = nullptr;
    REQUIRE(abc_function_derivative(f.p, &d) == ABC_OK);
    REQUIRE(abc_function_eval(d, {1.0, 0.0}, &v) == ABC_OK);
    CHECK(std::abs(v.re - (2.0 + std::exp(1.0))) <= 1e-15);
    abc_function_free(d);

    char* text = nullptr;
    REQUIRE(abc_function_to_string(f.p, &text) == ABC_OK);
    abc_function* back = nullptr;
    CHECK(abc_function_parse(text, &back, nullptr) == ABC_OK);
    abc_function_free(back);
    abc_string_free(text);
}

TEST_CASE("parse errors report a position and a message") {
    abc_function* f = nullptr;
    size_t pos = 0;
    CHECK(abc_function_parse("pow(z-1,", &f, &pos) == ABC_ERR_PARSE);
    CHECK(f == nullptr);
    CHECK(pos == 9);
    CHECK(std::string(abc_last_error()).find("column 9") != std::string::npos);
    CHECK(std::string(abc_status_name(ABC_ERR_PARSE)) == "ParseError");
}

TEST_CASE("evaluate operators") {
    Fn f("pow(z-0,1)");
    abc_request r;
    abc_request_init(&r);
    r.op = ABC_OP_AB_INTEGRAL;
    r.nu = {0.5, 0.0};
    abc_result out{};
    REQUIRE(abc_evaluate(f.p, &r, &out) == ABC_OK);
    CHECK(std::abs(out.value.re - 0.8761263890318376) <= 1e-12);
    CHECK(std::string(out.formulation) == "kernel");

    Fn sq("pow(z-0,2)");
    r.op = ABC_OP_ABR;
    r.nu = {1.0, 0.0};
    r.z = {3.0, 0.0};
    REQUIRE(abc_evaluate(sq.p, &r, &out) == ABC_OK);
    CHECK(out.value.re == 6.0);

    Fn e("exp(z)");
    abc_request_init(&r);
    r.op = ABC_OP_IAB;
    r.mu = {0.0, 0.0};
    REQUIRE(abc_evaluate(e.p, &r, &out) == ABC_OK);
    CHECK(out.value.re == std::exp(1.0));

    abc_request_init(&r);
    r.c_at_minus_infinity = 1;
    r.z = {0.5, 0.0};
    r.nu = {0.3, 0.0};
    REQUIRE(abc_evaluate(e.p, &r, &out) == ABC_OK);
    CHECK(std::abs(out.value.re - std::exp(0.5) / (0.7 + 0.3)) <= 1e-12);
}

TEST_CASE("failures map to status codes") {
    Fn f("exp(z)");
    abc_request r;
    abc_request_init(&r);
    abc_result out{};
    r.formulation = ABC_FORM_HANKEL;
    CHECK(abc_evaluate(f.p, &r, &out) == ABC_ERR_DOMAIN_NOT_SUPPORTED);
    CHECK(std::strlen(abc_last_error()) > 0);
    abc_request_init(&r);
    r.nu = {-0.5, 0.0};
    CHECK(abc_evaluate(f.p, &r, &out) == ABC_ERR_DOMAIN_NOT_SUPPORTED);
    abc_request_init(&r);
    r.mu = {1.0, 0.0};
    CHECK(abc_evaluate(f.p, &r, &out) == ABC_ERR_INVALID_ARGUMENT);
    abc_request_init(&r);
    r.max_terms = 8;
    r.nu = {0.9, 0.0};
    r.z = {3.0, 0.0};
    CHECK(abc_evaluate(f.p, &r, &out) == ABC_ERR_NOT_CONVERGED);
    abc_request_init(&r);
    r.op = ABC_OP_IAB;
    r.nu = {1.0, 0.0};
    r.mu = {0.5, 0.0};
    CHECK(abc_evaluate(f.p, &r, &out) == ABC_ERR_DOMAIN_NOT_SUPPORTED);
    CHECK(abc_evaluate(nullptr, &r, &out) == ABC_ERR_INVALID_ARGUMENT);
    abc_request_init(&r);
    CHECK(abc_evaluate(f.p, &r, &out) == ABC_OK);
    CHECK(std::string(abc_last_error()).empty());

    Fn recip("1/(z-1)");
    abc_complex v{};
    CHECK(abc_function_eval(recip.p, {1.0, 0.0}, &v) == ABC_ERR_EVAL_DOMAIN);
}

TEST_CASE("last error is per thread") {
    Fn f("exp(z)");
    abc_request r;
    abc_request_init(&r);
    r.nu = {-0.5, 0.0};
    abc_result out{};
    REQUIRE(abc_evaluate(f.p, &r, &out) != ABC_OK);
    std::string other;
    std::thread t([&] { other = abc_last_error(); });
    t.join();
    CHECK(other.empty());
    CHECK_FALSE(std::string(abc_last_error()).empty());
}

TEST_CASE("verify through the C API") {
    char* report = nullptr;
    int passed = 0;
    REQUIRE(abc_verify_run("golden", 0.0, ABC_REPORT_JSON, &report, &passed) == ABC_OK);
    CHECK(passed == 1);
    CHECK(std::string(report).find("\"suite\": \"golden\"") != std::string::npos);
    abc_string_free(report);
    CHECK(abc_verify_run("bogus", 0.0, ABC_REPORT_TABLE, &report, &passed) == ABC_ERR_INVALID_ARGUMENT);
    CHECK(report == nullptr);
}
