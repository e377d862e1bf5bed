#include "abcalc/abcalc.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "ab.hpp"
#include "expr.hpp"
#include "function.hpp"
#include "iab.hpp"
#include "rl.hpp"
#include "verify.hpp"

struct abc_function {
    abcalc::Function fn;
};

namespace {

using abcalc::Complex;
using abcalc::Error;
using abcalc::ErrorCode;

thread_local std::string g_last_error;

abc_status from_code(ErrorCode c) {
    // enum values mirror ErrorCode + 1
    return static_cast<abc_status>(static_cast<int>(c) + 1);
}

abc_status fail(abc_status s, const std::string& msg) {
    g_last_error = msg;
    return s;
}

// Runs body, translating every exception into a status; nothing escapes the C boundary.
template <class Body>
abc_status guarded(Body&& body) {
    try {
        abc_status s = body();
        if (s == ABC_OK) g_last_error.clear();
        return s;
    } catch (const Error& e) {
        return fail(from_code(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(ABC_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(ABC_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(ABC_ERR_INTERNAL, "unknown failure");
    }
}

Complex to_cpp(abc_complex v) { return {v.re, v.im}; }
abc_complex to_c(Complex v) { return {v.real(), v.imag()}; }

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.data(), s.size() + 1);
    return out;
}

abcalc::MultiplierFunction multiplier(abc_multiplier m) {
    switch (m) {
        case ABC_B_ONE: return abcalc::MultiplierFunction::constant_one();
        case ABC_B_ABNORM: return abcalc::MultiplierFunction::ab_normalization();
    }
    throw Error(ErrorCode::InvalidArgument, "unknown multiplier");
}

abcalc::Formulation ab_formulation(abc_formulation f) {
    switch (f) {
        case ABC_FORM_AUTO: return abcalc::Formulation::automatic;
        case ABC_FORM_KERNEL: return abcalc::Formulation::kernel;
        case ABC_FORM_SERIES: return abcalc::Formulation::series;
        case ABC_FORM_HANKEL: return abcalc::Formulation::hankel;
        case ABC_FORM_INTEGRAL: break;
    }
    throw Error(ErrorCode::DomainNotSupported, "the integral formulation exists for the iterated operator only");
}

abcalc::EvalResult eval_infinite(const abcalc::Function& f, const abc_request& r) {
    const abcalc::expr::FunctionExpr* e = f.expr();
    const auto form = e ? e->as_exponential() : std::nullopt;
    if (!form) throw Error(ErrorCode::DomainNotSupported, "basepoint -inf needs f of the form k*exp(a*z)");
    if (r.formulation != ABC_FORM_AUTO && r.formulation != ABC_FORM_SERIES)
        throw Error(ErrorCode::DomainNotSupported, "basepoint -inf is evaluated by the series form only");
    const abcalc::Order nu(to_cpp(r.nu));
    const abcalc::MultiplierFunction B = multiplier(r.multiplier);
    abcalc::SeriesControl ctl;
    if (r.max_terms > 0) ctl.max_terms = r.max_terms;
    const Complex z = to_cpp(r.z);
    switch (r.op) {
        case ABC_OP_RL_INTEGRAL:
        case ABC_OP_RL_DERIVATIVE: {
            const Complex order = r.op == ABC_OP_RL_INTEGRAL ? nu.value() : -nu.value();
            abcalc::EvalResult out;
            out.value = form->coefficient * abcalc::rl_infinite_basepoint_exp(form->rate, order, z);
            out.formulation = "closed";
            return out;
        }
        case ABC_OP_AB_INTEGRAL: return abcalc::ab_integral_exp_infinite(form->coefficient, form->rate, z, nu, B);
        case ABC_OP_ABR: return abcalc::abr_exp_infinite(form->coefficient, form->rate, z, nu, B, ctl);
        case ABC_OP_ABC: return abcalc::abc_exp_infinite(form->coefficient, form->rate, z, nu, B, ctl);
        default: break;
    }
    throw Error(ErrorCode::DomainNotSupported, "basepoint -inf is not available for the iterated operator");
}

abcalc::EvalResult eval_request(const abcalc::Function& f, const abc_request& r) {
    if (!(r.tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tol must be positive");
    if (r.max_terms < 0) throw Error(ErrorCode::InvalidArgument, "max_terms must be >= 0");
    if (r.op != ABC_OP_IAB && (r.mu.re != 0.0 || r.mu.im != 0.0))
        throw Error(ErrorCode::InvalidArgument, "mu applies to the iterated operator only");
    if (r.c_at_minus_infinity) return eval_infinite(f, r);

    const Complex c = to_cpp(r.c);
    const Complex z = to_cpp(r.z);
    const Complex nu = to_cpp(r.nu);
    switch (r.op) {
        case ABC_OP_RL_INTEGRAL:
        case ABC_OP_RL_DERIVATIVE: {
            const bool integral = r.op == ABC_OP_RL_INTEGRAL;
            abcalc::RLRequest q{f, c, z, abcalc::Order(nu), r.tol, r.epsilon};
            bool contour = r.formulation == ABC_FORM_HANKEL;
            if (r.formulation == ABC_FORM_AUTO) contour = integral ? nu.real() <= 0.0 : nu.real() < 0.0;
            else if (r.formulation != ABC_FORM_KERNEL && r.formulation != ABC_FORM_HANKEL)
                throw Error(ErrorCode::DomainNotSupported, "RL operators have kernel and hankel formulations");
            if (contour) {
                // rl_cauchy takes the derivative-convention order
                if (integral) q.nu = abcalc::Order(-nu);
                return abcalc::rl_cauchy(q);
            }
            return integral ? abcalc::rl_integral(q) : abcalc::rl_derivative(q);
        }
        case ABC_OP_AB_INTEGRAL:
        case ABC_OP_ABR:
        case ABC_OP_ABC: {
            abcalc::ABRequest q;
            q.f = f;
            q.c = c;
            q.z = z;
            q.nu = abcalc::Order(nu);
            q.B = multiplier(r.multiplier);
            q.tol = r.tol;
            q.epsilon = r.epsilon;
            q.formulation = ab_formulation(r.formulation);
            if (r.max_terms > 0) q.series.max_terms = r.max_terms;
            if (r.op == ABC_OP_ABR) return abcalc::abr_derivative(q);
            if (r.op == ABC_OP_ABC) return abcalc::abc_derivative(q);
            if (q.formulation == abcalc::Formulation::hankel) return abcalc::ab_integral_hankel(q);
            if (q.formulation == abcalc::Formulation::series)
                throw Error(ErrorCode::DomainNotSupported, "the AB integral has kernel and hankel formulations");
            return abcalc::ab_integral(q);
        }
        case ABC_OP_IAB: {
            abcalc::IABRequest q;
            q.f = f;
            q.c = c;
            q.z = z;
            q.nu = abcalc::Order(nu);
            q.mu = to_cpp(r.mu);
            q.B = multiplier(r.multiplier);
            q.tol = r.tol;
            q.epsilon = r.epsilon;
            if (r.max_terms > 0) q.series.max_terms = r.max_terms;
            switch (r.formulation) {
                case ABC_FORM_AUTO: q.formulation = abcalc::IABFormulation::automatic; break;
                case ABC_FORM_SERIES: q.formulation = abcalc::IABFormulation::series; break;
                case ABC_FORM_KERNEL:
                case ABC_FORM_INTEGRAL: q.formulation = abcalc::IABFormulation::integral; break;
                case ABC_FORM_HANKEL: q.formulation = abcalc::IABFormulation::hankel; break;
            }
            return abcalc::iab(q);
        }
    }
    throw Error(ErrorCode::InvalidArgument, "unknown operator");
}

}  // namespace

extern "C" {

const char* abc_version(void) { return "0.1.0"; }

const char* abc_status_name(abc_status status) {
    if (status == ABC_OK) return "Ok";
    if (status == ABC_ERR_INTERNAL) return "Internal";
    if (status > ABC_OK && status < ABC_ERR_INTERNAL) return abcalc::to_string(static_cast<ErrorCode>(status - 1));
    return "Unknown";
}

const char* abc_last_error(void) { return g_last_error.c_str(); }

void abc_string_free(char* s) { std::free(s); }

abc_status abc_function_parse(const char* text, abc_function** out, size_t* error_position) {
    return guarded([&] {
        if (text == nullptr || out == nullptr) return fail(ABC_ERR_INVALID_ARGUMENT, "null argument");
        *out = nullptr;
        auto parsed = abcalc::expr::try_parse(text);
        if (auto* err = std::get_if<abcalc::expr::ParseError>(&parsed)) {
            if (error_position != nullptr) *error_position = err->position;
            return fail(ABC_ERR_PARSE,
                        "parse error at column " + std::to_string(err->position) + ": " + err->message);
        }
        *out = new abc_function{abcalc::Function(std::get<abcalc::expr::FunctionExpr>(std::move(parsed)))};
        return ABC_OK;
    });
}

void abc_function_free(abc_function* f) { delete f; }

abc_status abc_function_eval(const abc_function* f, abc_complex z, abc_complex* out) {
    return guarded([&] {
        if (f == nullptr || out == nullptr) return fail(ABC_ERR_INVALID_ARGUMENT, "null argument");
        *out = to_c(f->fn(to_cpp(z)));
        return ABC_OK;
    });
}

abc_status abc_function_derivative(const abc_function* f, abc_function** out) {
    return guarded([&] {
        if (f == nullptr || out == nullptr) return fail(ABC_ERR_INVALID_ARGUMENT, "null argument");
        *out = new abc_function{f->fn.derivative()};
        return ABC_OK;
    });
}

abc_status abc_function_to_string(const abc_function* f, char** out) {
    return guarded([&] {
        if (f == nullptr || out == nullptr) return fail(ABC_ERR_INVALID_ARGUMENT, "null argument");
        const abcalc::expr::FunctionExpr* e = f->fn.expr();
        *out = dup_string(e ? e->to_string() : f->fn.label());
        return ABC_OK;
    });
}

void abc_request_init(abc_request* req) {
    if (req == nullptr) return;
    *req = abc_request{};
    req->op = ABC_OP_ABR;
    req->formulation = ABC_FORM_AUTO;
    req->multiplier = ABC_B_ONE;
    req->z = {1.0, 0.0};
    req->nu = {0.5, 0.0};
    req->tol = 1e-8;
    req->epsilon = 0.1;
}

abc_status abc_evaluate(const abc_function* f, const abc_request* req, abc_result* out) {
    return guarded([&] {
        if (f == nullptr || req == nullptr || out == nullptr) return fail(ABC_ERR_INVALID_ARGUMENT, "null argument");
        const abcalc::EvalResult r = eval_request(f->fn, *req);
        *out = abc_result{};
        out->value = to_c(r.value);
        out->abs_err_estimate = r.abs_err_estimate;
        out->terms_used = r.terms_used;
        out->nodes_used = r.nodes_used;
        out->eps_sensitivity = r.eps_sensitivity;
        std::strncpy(out->formulation, r.formulation.c_str(), sizeof out->formulation - 1);
        return ABC_OK;
    });
}

abc_status abc_verify_run(const char* suite, double tol, abc_report_format format, char** report, int* all_passed) {
    return guarded([&] {
        if (suite == nullptr || report == nullptr) return fail(ABC_ERR_INVALID_ARGUMENT, "null argument");
        *report = nullptr;
        abcalc::verify::SuiteOptions opt;
        opt.tol = tol;
        const auto reports = abcalc::verify::run_suite(suite, opt);
        const std::string text = format == ABC_REPORT_TABLE ? abcalc::verify::to_table(reports)
                                                            : abcalc::verify::to_json(suite, reports);
        *report = dup_string(text);
        if (all_passed != nullptr) *all_passed = abcalc::verify::all_passed(reports) ? 1 : 0;
        return ABC_OK;
    });
}

}  // extern "C"
