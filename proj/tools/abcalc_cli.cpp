// Command-line front end. Links only the C API in libabcalc.
#include <abcalc/abcalc.h>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitNumeric = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- literals ----------------------------------------------------------

bool parse_real(std::string_view s, double& out) {
    if (s.empty()) return false;
    if (s.front() == '+') s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

// a, bi, a+bi, a-bi (no spaces); "i" alone means 1i.
std::optional<abc_complex> parse_complex(std::string_view s) {
    if (s.empty()) return std::nullopt;
    if (s.back() != 'i') {
        double re = 0.0;
        if (!parse_real(s, re)) return std::nullopt;
        return abc_complex{re, 0.0};
    }
    std::string_view body = s.substr(0, s.size() - 1);
    // split before the last sign that is not the leading one and not an exponent sign
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    const std::string_view re_txt = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
    std::string_view im_txt = split == std::string_view::npos ? body : body.substr(split);
    double re = 0.0;
    double im = 0.0;
    if (!re_txt.empty() && !parse_real(re_txt, re)) return std::nullopt;
    if (im_txt.empty() || im_txt == "+") im = 1.0;
    else if (im_txt == "-") im = -1.0;
    else if (!parse_real(im_txt, im)) return std::nullopt;
    return abc_complex{re, im};
}

abc_complex complex_arg(const std::string& text, const char* flag) {
    const auto v = parse_complex(text);
    if (!v) throw UsageError(std::string("invalid complex literal for ") + flag + ": '" + text + "' (expected a+bi)");
    return *v;
}

// ---- formatting ----------------------------------------------------------

std::string num(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

// One output row: ordered (column, value) pairs. Numbers are kept as doubles
// so JSON can emit them natively.
struct Cell {
    std::string name;
    std::variant<double, long, std::string> value;
};
using Row = std::vector<Cell>;

std::string cell_text(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c.value)) return num(*d);
    if (const auto* l = std::get_if<long>(&c.value)) return std::to_string(*l);
    return std::get<std::string>(c.value);
}

void write_rows(std::ostream& os, const std::vector<Row>& rows, const std::string& format) {
    if (format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const Row& r : rows) {
            nlohmann::ordered_json obj = nlohmann::ordered_json::object();
            for (const Cell& c : r) {
                if (const auto* d = std::get_if<double>(&c.value)) {
                    obj[c.name] = std::isfinite(*d) ? nlohmann::ordered_json(*d) : nlohmann::ordered_json(nullptr);
                } else if (const auto* l = std::get_if<long>(&c.value)) {
                    obj[c.name] = *l;
                } else {
                    obj[c.name] = std::get<std::string>(c.value);
                }
            }
            arr.push_back(std::move(obj));
        }
        os << arr.dump(2) << "\n";
        return;
    }
    if (rows.empty()) return;
    if (format == "csv") {
        for (std::size_t k = 0; k < rows[0].size(); ++k) os << (k ? "," : "") << csv_field(rows[0][k].name);
        os << "\n";
        for (const Row& r : rows) {
            for (std::size_t k = 0; k < r.size(); ++k) os << (k ? "," : "") << csv_field(cell_text(r[k]));
            os << "\n";
        }
        return;
    }
    std::vector<std::size_t> width(rows[0].size());
    for (std::size_t k = 0; k < width.size(); ++k) width[k] = rows[0][k].name.size();
    for (const Row& r : rows) {
        for (std::size_t k = 0; k < r.size() && k < width.size(); ++k) width[k] = std::max(width[k], cell_text(r[k]).size());
    }
    auto line = [&](auto&& text_of) {
        for (std::size_t k = 0; k < width.size(); ++k) {
            const std::string t = text_of(k);
            os << (k ? "  " : "") << t << std::string(width[k] - t.size(), ' ');
        }
        os << "\n";
    };
    line([&](std::size_t k) { return rows[0][k].name; });
    for (const Row& r : rows) line([&](std::size_t k) { return cell_text(r[k]); });
}

// ---- configuration -----------------------------------------------------

struct Config {
    std::string op;
    std::string formulation = "auto";
    std::string f;
    std::string c = "0";
    std::string z = "1";
    std::string nu;
    std::optional<std::string> mu;
    std::string B = "one";
    double tol = 1e-8;
    double epsilon = 0.1;
    std::string output = "csv";
};

const std::map<std::string, abc_operator> kOperators = {
    {"rl-int", ABC_OP_RL_INTEGRAL}, {"rl-der", ABC_OP_RL_DERIVATIVE}, {"ab-int", ABC_OP_AB_INTEGRAL},
    {"abr", ABC_OP_ABR},           {"abc", ABC_OP_ABC},               {"iab", ABC_OP_IAB}};
const std::map<std::string, abc_formulation> kFormulations = {{"auto", ABC_FORM_AUTO},
                                                              {"kernel", ABC_FORM_KERNEL},
                                                              {"series", ABC_FORM_SERIES},
                                                              {"hankel", ABC_FORM_HANKEL},
                                                              {"integral", ABC_FORM_INTEGRAL}};

int max_terms_from_env() {
    const char* v = std::getenv("ABCALC_MAX_TERMS");
    if (v == nullptr || *v == '\0') return 0;
    int n = 0;
    const std::string_view s(v);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (ec != std::errc() || ptr != s.data() + s.size() || n < 8)
        throw UsageError("ABCALC_MAX_TERMS must be an integer >= 8");
    return n;
}

abc_request build_request(const Config& cfg) {
    abc_request r;
    abc_request_init(&r);
    r.op = kOperators.at(cfg.op);
    r.formulation = kFormulations.at(cfg.formulation);
    r.multiplier = cfg.B == "abnorm" ? ABC_B_ABNORM : ABC_B_ONE;
    if (cfg.op == "iab" && !cfg.mu) throw UsageError("--mu is required for --operator iab");
    if (cfg.op != "iab" && cfg.mu) throw UsageError("--mu applies to --operator iab only");
    if (cfg.mu) r.mu = complex_arg(*cfg.mu, "--mu");
    if (cfg.c == "-inf") r.c_at_minus_infinity = 1;
    else r.c = complex_arg(cfg.c, "--c");
    r.z = complex_arg(cfg.z, "--z");
    r.nu = complex_arg(cfg.nu, "--nu");
    if (!(cfg.tol > 0.0)) throw UsageError("--tol must be positive");
    if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0)) throw UsageError("--epsilon must lie in (0, 1)");
    r.tol = cfg.tol;
    r.epsilon = cfg.epsilon;
    r.max_terms = max_terms_from_env();
    return r;
}

struct FunctionHandle {
    abc_function* fn = nullptr;
    ~FunctionHandle() { abc_function_free(fn); }
};

void parse_function(const std::string& text, FunctionHandle& h) {
    std::size_t pos = 0;
    if (abc_function_parse(text.c_str(), &h.fn, &pos) != ABC_OK) throw UsageError(std::string("--f: ") + abc_last_error());
}

int exit_code_for(abc_status s) {
    switch (s) {
        case ABC_OK: return kExitOk;
        case ABC_ERR_NOT_CONVERGED:
        case ABC_ERR_TOLERANCE_NOT_REACHED:
        case ABC_ERR_EPSILON_UNSTABLE:
        case ABC_ERR_INTERNAL: return kExitNumeric;
        case ABC_ERR_PARSE:
        case ABC_ERR_INVALID_ARGUMENT: return kExitUsage;
        default: return kExitDomain;
    }
}

struct Outcome {
    abc_status status = ABC_OK;
    std::string message;
    abc_result result{};
};

Outcome evaluate(const abc_function* f, const abc_request& r) {
    Outcome o;
    o.status = abc_evaluate(f, &r, &o.result);
    if (o.status != ABC_OK) o.message = abc_last_error();
    return o;
}

Row result_row(const abc_request& r, const Outcome& o, const std::string& status) {
    const bool ok = o.status == ABC_OK;
    const double nan = std::nan("");
    return {{"nu_re", r.nu.re},
            {"nu_im", r.nu.im},
            {"mu_re", r.mu.re},
            {"mu_im", r.mu.im},
            {"z_re", r.z.re},
            {"z_im", r.z.im},
            {"value_re", ok ? o.result.value.re : nan},
            {"value_im", ok ? o.result.value.im : nan},
            {"abs_err_est", ok ? o.result.abs_err_estimate : nan},
            {"terms_used", static_cast<long>(ok ? o.result.terms_used : 0)},
            {"formulation", std::string(ok ? o.result.formulation : "")},
            {"status", status}};
}

std::string error_status(const Outcome& o) { return std::string("error:") + abc_status_name(o.status); }

// ---- subcommands -------------------------------------------------------

int cmd_eval(const Config& cfg) {
    const abc_request r = build_request(cfg);
    FunctionHandle f;
    parse_function(cfg.f, f);
    const Outcome o = evaluate(f.fn, r);
    if (o.status != ABC_OK) {
        std::cerr << "abcalc: " << abc_status_name(o.status) << ": " << o.message << "\n";
        return exit_code_for(o.status);
    }
    write_rows(std::cout, {result_row(r, o, "ok")}, cfg.output);
    return kExitOk;
}

std::vector<std::string> default_formulations(const std::string& op) {
    if (op == "iab") return {"series", "integral", "hankel"};
    if (op == "abr" || op == "abc") return {"kernel", "series", "hankel"};
    return {"kernel", "hankel"};
}

int cmd_compare(const Config& cfg, std::vector<std::string> forms) {
    const bool explicit_list = !forms.empty();
    if (!explicit_list) forms = default_formulations(cfg.op);
    for (const std::string& name : forms) {
        if (name == "auto" || !kFormulations.count(name)) throw UsageError("unknown formulation '" + name + "'");
    }
    const abc_request base = build_request(cfg);
    FunctionHandle f;
    parse_function(cfg.f, f);

    std::vector<std::pair<std::string, Outcome>> done;
    for (const std::string& name : forms) {
        abc_request r = base;
        r.formulation = kFormulations.at(name);
        Outcome o = evaluate(f.fn, r);
        if (o.status != ABC_OK) {
            // the automatic list drops formulations that do not exist at this order
            if (!explicit_list && o.status == ABC_ERR_DOMAIN_NOT_SUPPORTED) continue;
            std::cerr << "abcalc: " << name << ": " << abc_status_name(o.status) << ": " << o.message << "\n";
            return exit_code_for(o.status);
        }
        done.emplace_back(name, std::move(o));
    }
    if (done.size() < 2) {
        std::cerr << "abcalc: fewer than two formulations are available at this order\n";
        return kExitDomain;
    }
    bool agree = true;
    std::vector<Row> rows;
    for (const auto& [name, o] : done) {
        Row row = result_row(base, o, "ok");
        for (const auto& [other, p] : done) {
            const double scale = std::hypot(p.result.value.re, p.result.value.im);
            const double dev = std::hypot(o.result.value.re - p.result.value.re, o.result.value.im - p.result.value.im) /
                               (scale > 0.0 ? scale : 1.0);
            if (dev > cfg.tol) agree = false;
            row.push_back({"dev_" + other, dev});
        }
        rows.push_back(std::move(row));
    }
    write_rows(std::cout, rows, cfg.output);
    if (!agree) std::cerr << "abcalc: formulations disagree beyond tol " << num(cfg.tol) << "\n";
    return agree ? kExitOk : kExitNumeric;
}

struct SweepSpec {
    std::string param = "nu";
    std::string start;
    std::string stop;
    int steps = 11;
    std::string axis = "real-line";
    int threads = 0;
};

// Points the operators reject by definition; they are reported, not evaluated.
bool forbidden(const std::string& op, const abc_request& r) {
    const bool neg_real = r.nu.im == 0.0 && r.nu.re < 0.0;
    if ((op == "abr" || op == "abc" || op == "iab") && neg_real) return true;
    if (op == "iab" && std::hypot(r.nu.re - 1.0, r.nu.im) < 1e-6) return true;
    return false;
}

int cmd_sweep(const Config& cfg, const SweepSpec& sw) {
    if (sw.steps < 1) throw UsageError("--steps must be >= 1");
    if (sw.param == "mu" && cfg.op != "iab") throw UsageError("--param mu applies to --operator iab only");
    const abc_complex a = complex_arg(sw.start, "--start");
    const abc_complex b = complex_arg(sw.stop, "--stop");
    Config probe = cfg;
    if (sw.param == "nu" && probe.nu.empty()) probe.nu = "0";
    if (sw.param == "mu" && !probe.mu) probe.mu = "0";
    const abc_request base = build_request(probe);
    FunctionHandle f;
    parse_function(cfg.f, f);

    auto lerp = [](double lo, double hi, int k, int n) { return n == 1 ? lo : lo + (hi - lo) * k / (n - 1); };
    std::vector<abc_complex> points;
    if (sw.axis == "real-line") {
        for (int k = 0; k < sw.steps; ++k) points.push_back({lerp(a.re, b.re, k, sw.steps), lerp(a.im, b.im, k, sw.steps)});
    } else {
        for (int j = 0; j < sw.steps; ++j) {
            for (int k = 0; k < sw.steps; ++k) points.push_back({lerp(a.re, b.re, k, sw.steps), lerp(a.im, b.im, j, sw.steps)});
        }
    }
    std::vector<abc_request> reqs(points.size(), base);
    for (std::size_t k = 0; k < points.size(); ++k) {
        if (sw.param == "nu") reqs[k].nu = points[k];
        else if (sw.param == "mu") reqs[k].mu = points[k];
        else reqs[k].z = points[k];
    }

    std::vector<Outcome> out(points.size());
    std::vector<char> skipped(points.size(), 0);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < reqs.size();) {
            if (forbidden(cfg.op, reqs[k])) {
                skipped[k] = 1;
                continue;
            }
            out[k] = evaluate(f.fn, reqs[k]);
        }
    };
    const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
    const unsigned n_threads = sw.threads > 0 ? static_cast<unsigned>(sw.threads) : std::min<unsigned>(hw, 8U);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();

    int code = kExitOk;
    std::vector<Row> rows;
    for (std::size_t k = 0; k < reqs.size(); ++k) {
        if (skipped[k]) {
            Outcome none;
            none.status = ABC_ERR_DOMAIN_NOT_SUPPORTED;
            rows.push_back(result_row(reqs[k], none, "skipped:domain"));
            continue;
        }
        const Outcome& o = out[k];
        if (o.status != ABC_OK) code = std::max(code, exit_code_for(o.status));
        rows.push_back(result_row(reqs[k], o, o.status == ABC_OK ? "ok" : error_status(o)));
    }
    write_rows(std::cout, rows, cfg.output);
    return code;
}

int cmd_verify(const std::string& suite, double tol, const std::string& output) {
    char* report = nullptr;
    int passed = 0;
    const abc_status s =
        abc_verify_run(suite.c_str(), tol, output == "table" ? ABC_REPORT_TABLE : ABC_REPORT_JSON, &report, &passed);
    if (s != ABC_OK) {
        std::cerr << "abcalc: " << abc_last_error() << "\n";
        return s == ABC_ERR_INVALID_ARGUMENT ? kExitUsage : exit_code_for(s);
    }
    std::cout << report;
    if (output != "table") std::cout << "\n";
    abc_string_free(report);
    return passed ? kExitOk : kExitNumeric;
}

void add_common(CLI::App* app, Config& cfg, bool nu_required) {
    std::vector<std::string> ops;
    for (const auto& [k, v] : kOperators) ops.push_back(k);
    app->add_option("--operator", cfg.op, "rl-int | rl-der | ab-int | abr | abc | iab")
        ->required()
        ->check(CLI::IsMember(ops));
    app->add_option("--formulation", cfg.formulation, "auto | kernel | series | hankel | integral")
        ->check(CLI::IsMember({"auto", "kernel", "series", "hankel", "integral"}));
    app->add_option("--f", cfg.f, "function of z, e.g. \"pow(z-0,1.5)\"")->required();
    app->add_option("--c", cfg.c, "basepoint a+bi, or -inf for k*exp(a*z)");
    app->add_option("--z", cfg.z, "evaluation point a+bi");
    auto* nu = app->add_option("--nu", cfg.nu, "order a+bi");
    if (nu_required) nu->required();
    app->add_option("--mu", cfg.mu, "iteration order (iab only)");
    app->add_option("--B", cfg.B, "multiplier: one | abnorm")->check(CLI::IsMember({"one", "abnorm"}));
    app->add_option("--tol", cfg.tol, "quadrature tolerance");
    app->add_option("--epsilon", cfg.epsilon, "contour radius fraction");
    app->add_option("--output", cfg.output, "csv | json | table")->check(CLI::IsMember({"csv", "json", "table"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fractional differintegrals of complex order"};
    app.require_subcommand(1);
    app.set_version_flag("--version", abc_version());

    Config cfg;
    CLI::App* eval = app.add_subcommand("eval", "evaluate one operator at a point");
    add_common(eval, cfg, true);

    std::vector<std::string> forms;
    CLI::App* compare = app.add_subcommand("compare", "evaluate every formulation and report pairwise deviations");
    add_common(compare, cfg, true);
    compare->add_option("--formulations", forms, "formulations to compare (default: all available)")->delimiter(',');

    SweepSpec sw;
    CLI::App* sweep = app.add_subcommand("sweep", "evaluate over a grid of nu, mu or z");
    add_common(sweep, cfg, false);
    sweep->add_option("--param", sw.param, "swept parameter")->check(CLI::IsMember({"nu", "mu", "z"}));
    sweep->add_option("--start", sw.start, "grid corner a+bi")->required();
    sweep->add_option("--stop", sw.stop, "opposite grid corner a+bi")->required();
    sweep->add_option("--steps", sw.steps, "points per axis");
    sweep->add_option("--axis", sw.axis, "real-line | complex-rect")->check(CLI::IsMember({"real-line", "complex-rect"}));
    sweep->add_option("--threads", sw.threads, "worker threads (0: automatic)");

    std::string suite = "all";
    double vtol = 0.0;
    std::string voutput = "json";
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "golden | identity | continuation | all")
        ->check(CLI::IsMember({"golden", "identity", "continuation", "all"}));
    verify->add_option("--tol", vtol, "override the nominal tolerances (0 keeps them)");
    verify->add_option("--output", voutput, "json | table")->check(CLI::IsMember({"json", "table"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (eval->parsed()) return cmd_eval(cfg);
        if (compare->parsed()) return cmd_compare(cfg, forms);
        if (sweep->parsed()) {
            if (sw.param != "nu" && cfg.nu.empty()) throw UsageError("--nu is required unless --param nu");
            return cmd_sweep(cfg, sw);
        }
        if (verify->parsed()) return cmd_verify(suite, vtol, voutput);
    } catch (const UsageError& e) {
        std::cerr << "abcalc: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
