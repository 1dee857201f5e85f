// qcalc command-line tool: q-Pochhammer symbols and q-binomials, n-fold
// q-derivatives of user expressions, numeric zero-limit verification against
// the Taylor-coefficient prediction, series coefficients, randomized exact
// identity sweeps, and a cancellation bench.
//
// Exit codes: 0 success / all checks pass, 1 verification or identity
// failure, 2 usage or parse error, 3 domain error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qcalc/qcalc.hpp"

namespace {

using namespace qcalc;

enum class OutFormat { plain, csv, json };

struct Field {
    enum class Kind { number, text, boolean };
    std::string name;
    std::string value;
    Kind kind = Kind::text;
};

struct Record {
    std::vector<Field> fields;

    void add_text(const std::string& name, const std::string& value) {
        fields.push_back({name, value, Field::Kind::text});
    }
    void add_int(const std::string& name, long long value) {
        fields.push_back({name, std::to_string(value), Field::Kind::number});
    }
    void add_double(const std::string& name, double value) {
        // non-finite values have no bare JSON representation
        const auto kind = std::isfinite(value) ? Field::Kind::number : Field::Kind::text;
        fields.push_back({name, format_double(value), kind});
    }
    void add_bool(const std::string& name, bool value) {
        fields.push_back({name, value ? "true" : "false", Field::Kind::boolean});
    }
    // exact values stay "p/q" text; reals are bare numbers; complex is "a+bi"
    void add_scalar(const std::string& name, const Scalar& value) {
        if (value.kind() == ScalarKind::real) {
            add_double(name, value.as_real());
        } else {
            add_text(name, to_string(value));
        }
    }
};

std::string csv_escape(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string json_escape(const std::string& value) {
    std::string out;
    for (char c : value) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buffer[8];
                    std::snprintf(buffer, sizeof(buffer), "\\u%04x", c);
                    out += buffer;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

class Emitter {
public:
    explicit Emitter(OutFormat format) : format_(format) {}

    void emit(const Record& record) {
        switch (format_) {
            case OutFormat::plain: {
                bool first = true;
                for (const auto& field : record.fields) {
                    if (!first) std::cout << ' ';
                    std::cout << field.name << '=' << field.value;
                    first = false;
                }
                std::cout << '\n';
                break;
            }
            case OutFormat::csv: {
                if (!header_written_) {
                    bool first = true;
                    for (const auto& field : record.fields) {
                        if (!first) std::cout << ',';
                        std::cout << csv_escape(field.name);
                        first = false;
                    }
                    std::cout << '\n';
                    header_written_ = true;
                }
                bool first = true;
                for (const auto& field : record.fields) {
                    if (!first) std::cout << ',';
                    std::cout << csv_escape(field.value);
                    first = false;
                }
                std::cout << '\n';
                break;
            }
            case OutFormat::json: {
                std::cout << '{';
                bool first = true;
                for (const auto& field : record.fields) {
                    if (!first) std::cout << ',';
                    std::cout << '"' << json_escape(field.name) << "\":";
                    if (field.kind == Field::Kind::text) {
                        std::cout << '"' << json_escape(field.value) << '"';
                    } else {
                        std::cout << field.value;
                    }
                    first = false;
                }
                std::cout << "}\n";
                break;
            }
        }
    }

private:
    OutFormat format_;
    bool header_written_ = false;
};

/// Bare value in plain mode, full record otherwise.
void emit_value(Emitter& emitter, OutFormat format, Record record, const Scalar& value) {
    if (format == OutFormat::plain) {
        std::cout << to_string(value) << '\n';
        return;
    }
    record.add_scalar("value", value);
    emitter.emit(record);
}

Scalar parse_number_arg(const std::string& text, const char* what) {
    const auto value = parse_scalar(text);
    if (!value) {
        throw std::invalid_argument(std::string("could not parse ") + what + " '" + text + "'");
    }
    return *value;
}

Scalar parse_q_arg(const std::string& text) {
    const Scalar q = parse_number_arg(text, "q value");
    if (q.is_one()) {
        throw std::invalid_argument(
            "q = 1 is rejected: the q-derivative (f(x) - f(qx))/((1-q)x) is undefined at q = 1");
    }
    return q;
}

std::pair<int, int> parse_n_range(const std::string& text) {
    const auto dots = text.find("..");
    long long lo = 0;
    long long hi = 0;
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoll(text);
        } else {
            lo = std::stoll(text.substr(0, dots));
            hi = std::stoll(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("could not parse n range '" + text + "' (use N or A..B)");
    }
    if (lo < 1 || hi < lo || hi > 64) {
        throw std::invalid_argument("n range must satisfy 1 <= A <= B <= 64");
    }
    return {static_cast<int>(lo), static_cast<int>(hi)};
}

double resolve_radius(const ExprNode& expr, double radius_flag) {
    if (radius_flag > 0.0) return radius_flag;
    if (radius_flag != 0.0) throw std::invalid_argument("--radius must be positive");
    if (requires_explicit_radius(expr)) {
        throw std::invalid_argument(
            "this expression needs --radius: it divides by, inverts, or takes log of an "
            "x-dependent subexpression, so the domain radius cannot be inferred");
    }
    return std::numeric_limits<double>::infinity();
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(text.substr(start));
            break;
        }
        out.push_back(text.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

// ---------------------------------------------------------------------------

struct CommonArgs {
    std::string expr_text;
    std::string q_text;
    int n = 1;
    double radius = 0.0;
    bool exact = false;
};

int run_qpoch(Emitter& emitter, OutFormat format, const std::string& a_text,
              const std::string& q_text, int n) {
    const Scalar a = parse_number_arg(a_text, "a value");
    const Scalar q = parse_number_arg(q_text, "q value");  // q = 1 is fine here
    Scalar value;
    if (a.kind() == ScalarKind::cplx || q.kind() == ScalarKind::cplx) {
        value = Scalar(q_pochhammer(a.as_complex(), q.as_complex(), n));
    } else {
        value = Scalar(q_pochhammer(a.rational(), q.rational(), n));
    }
    Record record;
    record.add_text("a", a_text);
    record.add_text("q", q_text);
    record.add_int("n", n);
    emit_value(emitter, format, record, value);
    return 0;
}

int run_qbinom(Emitter& emitter, OutFormat format, int n, int k, const std::string& q_text) {
    const Scalar q = parse_number_arg(q_text, "q value");
    Scalar value;
    if (q.kind() == ScalarKind::cplx) {
        value = Scalar(q_binomial(n, k, q.as_complex()));
    } else {
        value = Scalar(q_binomial(n, k, q.rational()));
    }
    Record record;
    record.add_int("n", n);
    record.add_int("k", k);
    record.add_text("q", q_text);
    emit_value(emitter, format, record, value);
    return 0;
}

int run_deriv(Emitter& emitter, OutFormat format, const CommonArgs& args, const std::string& x_text) {
    const ExprPtr expr = parse_expression(args.expr_text);
    const double radius = resolve_radius(*expr, args.radius);
    const Scalar q = parse_q_arg(args.q_text);
    const Scalar x = parse_number_arg(x_text, "x value");

    Scalar value;
    if (q.kind() == ScalarKind::cplx || x.kind() == ScalarKind::cplx) {
        const auto f = make_point_fn<Complex>(expr, radius);
        value = Scalar(q_derivative_n_at(f, q.as_complex(), args.n, x.as_complex()));
    } else {
        // rational inputs: prefer the exact path, fall back to binary64 when
        // the expression has no exact value there (e.g. exp at nonzero x)
        bool have_exact = false;
        try {
            const auto f = make_point_fn<Rational>(expr, radius);
            value = Scalar(q_derivative_n_at(f, q.rational(), args.n, x.rational()));
            have_exact = true;
        } catch (const std::domain_error&) {
            if (args.exact) throw;
        }
        if (!have_exact) {
            const auto f = make_point_fn<double>(expr, radius);
            value = Scalar(q_derivative_n_at(f, q.as_real(), args.n, x.as_real()));
        }
    }

    Record record;
    record.add_text("expr", args.expr_text);
    record.add_text("q", args.q_text);
    record.add_int("n", args.n);
    record.add_text("x", x_text);
    emit_value(emitter, format, record, value);
    return 0;
}

template <ScalarType T>
void emit_limit_report(Emitter& emitter, const CommonArgs& args, const LimitReport<T>& report,
                       bool dump_samples) {
    if (dump_samples) {
        // one record per sample (x_j, D_q^n f(x_j)), in descending |x|
        for (std::size_t j = 0; j < report.samples.size(); ++j) {
            Record record;
            record.add_int("j", static_cast<long long>(j));
            record.add_scalar("x", Scalar(report.samples[j].first));
            record.add_scalar("value", Scalar(report.samples[j].second));
            emitter.emit(record);
        }
        return;
    }
    Record record;
    record.add_text("expr", args.expr_text);
    record.add_text("q", args.q_text);
    record.add_int("n", args.n);
    record.add_scalar("estimate", Scalar(report.estimate));
    record.add_double("uncertainty", report.uncertainty);
    record.add_bool("converged", report.converged);
    record.add_int("samples", static_cast<long long>(report.samples.size()));
    emitter.emit(record);
}

int run_limit(Emitter& emitter, const CommonArgs& args, const LimitOptions& opts, bool dump_samples) {
    const ExprPtr expr = parse_expression(args.expr_text);
    const double radius = resolve_radius(*expr, args.radius);
    const Scalar q = parse_q_arg(args.q_text);

    if (q.kind() == ScalarKind::cplx) {
        const auto f = make_point_fn<Complex>(expr, radius);
        emit_limit_report(emitter, args, estimate_zero_limit(f, q.as_complex(), args.n, opts),
                          dump_samples);
    } else {
        const auto f = make_point_fn<double>(expr, radius);
        emit_limit_report(emitter, args, estimate_zero_limit(f, q.as_real(), args.n, opts),
                          dump_samples);
    }
    return 0;
}

void add_verify_inputs(Record& record, const std::string& expr_text, const std::string& q_text,
                       int n) {
    record.add_text("expr", expr_text);
    record.add_text("q", q_text);
    record.add_int("n", n);
}

int run_verify(Emitter& emitter, const std::string& expr_text, const std::string& q_list,
               const std::string& n_range, double radius_flag, double tol, bool exact) {
    const ExprPtr expr = parse_expression(expr_text);
    const auto [n_lo, n_hi] = parse_n_range(n_range);

    std::optional<Polynomial> poly;
    double radius = std::numeric_limits<double>::infinity();
    if (exact) {
        try {
            poly = to_polynomial(*expr);
        } catch (const std::domain_error& e) {
            throw std::invalid_argument(std::string("--exact verification needs a polynomial expression: ") +
                                        e.what());
        }
    } else {
        radius = resolve_radius(*expr, radius_flag);
    }

    bool all_pass = true;
    for (const std::string& q_text : split_commas(q_list)) {
        const Scalar q = parse_q_arg(q_text);
        for (int n = n_lo; n <= n_hi; ++n) {
            Record record;
            add_verify_inputs(record, expr_text, q_text, n);
            if (exact) {
                if (q.kind() == ScalarKind::cplx) {
                    throw std::invalid_argument("--exact verification needs rational q");
                }
                const Rational estimate = q_derivative_n(*poly, q.rational(), n).coeff(0);
                const Rational predicted = qderiv_at_zero(*poly, q.rational(), n);
                const bool pass = (estimate == predicted);
                record.add_scalar("estimate", Scalar(estimate));
                record.add_scalar("predicted", Scalar(predicted));
                record.add_scalar("abs_err", Scalar(Rational(estimate - predicted)));
                record.add_scalar("rel_err", Scalar(Rational(0)));
                record.add_bool("converged", true);
                record.add_bool("pass", pass);
                all_pass = all_pass && pass;
            } else if (q.kind() == ScalarKind::cplx) {
                const auto f = make_point_fn<Complex>(expr, radius);
                const auto report = verify_zero_limit(f, q.as_complex(), n, {}, tol);
                record.add_scalar("estimate", Scalar(report.limit.estimate));
                record.add_scalar("predicted", Scalar(report.predicted));
                record.add_double("abs_err", report.abs_err);
                record.add_double("rel_err", report.rel_err);
                record.add_bool("converged", report.limit.converged);
                record.add_bool("pass", report.pass);
                all_pass = all_pass && report.pass;
            } else {
                const auto f = make_point_fn<double>(expr, radius);
                const auto report = verify_zero_limit(f, q.as_real(), n, {}, tol);
                record.add_scalar("estimate", Scalar(report.limit.estimate));
                record.add_scalar("predicted", Scalar(report.predicted));
                record.add_double("abs_err", report.abs_err);
                record.add_double("rel_err", report.rel_err);
                record.add_bool("converged", report.limit.converged);
                record.add_bool("pass", report.pass);
                all_pass = all_pass && report.pass;
            }
            emitter.emit(record);
        }
    }
    return all_pass ? 0 : 1;
}

int run_series(Emitter& emitter, const CommonArgs& args, int order) {
    const ExprPtr expr = parse_expression(args.expr_text);
    const double radius = resolve_radius(*expr, args.radius);
    const Scalar q = parse_q_arg(args.q_text);
    if (order < args.n) throw std::invalid_argument("--order must be at least n");

    auto emit_rows = [&](const auto& series) {
        for (int j = 0; j <= series.order(); ++j) {
            Record record;
            record.add_text("expr", args.expr_text);
            record.add_text("q", args.q_text);
            record.add_int("n", args.n);
            record.add_int("j", j);
            record.add_scalar("coefficient", Scalar(series.coeff(j)));
            record.add_double("radius", series.radius());
            emitter.emit(record);
        }
    };

    if (q.kind() == ScalarKind::cplx) {
        PowerSeries<Complex> s(evaluate_jet(*expr, Complex(0.0, 0.0), order), radius);
        emit_rows(series_q_derivative(s, q.as_complex(), args.n));
        return 0;
    }
    // rational q: prefer exact coefficients, fall back to binary64
    try {
        PowerSeries<Rational> s(evaluate_jet(*expr, Rational(0), order), radius);
        emit_rows(series_q_derivative(s, q.rational(), args.n));
        return 0;
    } catch (const std::domain_error&) {
        if (args.exact) throw;
    }
    PowerSeries<double> s(evaluate_jet(*expr, 0.0, order), radius);
    emit_rows(series_q_derivative(s, q.as_real(), args.n));
    return 0;
}

int run_identity(Emitter& emitter, const std::string& which, std::uint64_t seed, long long trials) {
    SweepOutcome outcome;
    if (which == "gauss") {
        outcome = sweep_gauss_identity(seed, trials);
    } else if (which == "sumdelta") {
        outcome = sweep_alternating_sum(seed, trials);
    } else if (which == "qminus1") {
        outcome = sweep_qminus1_collapse(seed, trials);
    } else {
        outcome = sweep_closed_form(seed, trials);
    }

    Record record;
    record.add_text("which", which);
    record.add_int("seed", static_cast<long long>(seed));
    record.add_int("trials", outcome.trials);
    record.add_int("failures", outcome.failures);
    emitter.emit(record);
    if (outcome.failures > 0) {
        std::cerr << "identity sweep failed: " << outcome.first_failure << "\n";
        return 1;
    }
    return 0;
}

int run_bench(Emitter& emitter, const CommonArgs& args, double x0_flag, int points) {
    const ExprPtr expr = parse_expression(args.expr_text);
    const double radius = resolve_radius(*expr, args.radius);
    const Scalar q_scalar = parse_q_arg(args.q_text);
    if (q_scalar.kind() == ScalarKind::cplx) {
        throw std::invalid_argument("bench supports real q only");
    }
    const double q = q_scalar.as_real();
    const auto f = make_point_fn<double>(expr, radius);

    // reference: series action on a deep jet, evaluated directly
    const int jet_order = args.n + 24;
    const PowerSeries<double> s(evaluate_jet(*expr, 0.0, jet_order), radius);
    const auto reference_series = series_q_derivative(s, q, args.n);

    double x = x0_flag;
    if (x == 0.0) {
        x = std::min(radius, 1.0) / 4.0;
        if (std::fabs(q) > 1.0) x /= std::pow(std::fabs(q), args.n);
    } else if (!(x > 0.0)) {
        throw std::invalid_argument("--x0 must be positive");
    }

    for (int i = 0; i < points; ++i) {
        const double value = q_derivative_n_at(f, q, args.n, x);
        const double reference = reference_series.jet().evaluate_offset(x);
        Record record;
        record.add_double("x", x);
        record.add_double("value", value);
        record.add_double("reference", reference);
        record.add_double("abs_err", std::fabs(value - reference));
        emitter.emit(record);
        x *= 0.1;
    }
    return 0;
}

const char kFooter[] = R"(Expression grammar:
  expression := term ((+|-) term)*           functions: exp, log, sin, cos
  term       := unary ((*|/) unary)*         variable: x
  unary      := - unary | power              numbers: integers, decimals
  power      := atom (^ integer)?            (decimals convert exactly;
  atom       := number | x | fn(expr) | (expr)   "1/2" is the rational 1/2)

Numbers on the command line: rationals ("3/7", "-5/3"), decimals ("0.25",
"1e-3", both converted exactly), complex ("1+2i", "0.5i", "i/2").

Polynomial text ("1/2*x^3-2*x+5") is the polynomial subset of the grammar.

Expressions that divide by, invert, or take log of an x-dependent
subexpression have unknown singularities and need --radius.

QCALC_FORMAT environment variable sets the default --format.

Exit codes: 0 success/all-pass, 1 verification or identity failure,
2 usage or parse error, 3 domain error.)";

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qcalc - exact and numeric q-derivative calculus"};
    app.require_subcommand(1);
    app.fallthrough();
    app.footer(kFooter);

    std::string format_text = "plain";
    app.add_option("--format", format_text, "output format")
        ->check(CLI::IsMember({"plain", "csv", "json"}))
        ->envname("QCALC_FORMAT");

    // qpoch
    auto* qpoch = app.add_subcommand("qpoch", "q-Pochhammer symbol (a;q)_n");
    std::string qpoch_a, qpoch_q;
    int qpoch_n = 0;
    qpoch->add_option("a", qpoch_a, "first argument")->required();
    qpoch->add_option("q", qpoch_q, "base q")->required();
    qpoch->add_option("n", qpoch_n, "number of factors")->required()->check(CLI::Range(0, 1000000));

    // qbinom
    auto* qbinom = app.add_subcommand("qbinom", "Gaussian binomial [n k] at q");
    int qbinom_n = 0, qbinom_k = 0;
    std::string qbinom_q;
    qbinom->add_option("n", qbinom_n, "upper index")->required()->check(CLI::Range(0, 1024));
    qbinom->add_option("k", qbinom_k, "lower index")->required();
    qbinom->add_option("q", qbinom_q, "evaluation point")->required();

    // deriv
    auto* deriv = app.add_subcommand("deriv", "n-fold q-derivative of an expression at x");
    CommonArgs deriv_args;
    std::string deriv_x;
    deriv->add_option("--expr", deriv_args.expr_text, "expression in x")->required();
    deriv->add_option("--q", deriv_args.q_text, "q value")->required();
    deriv->add_option("--n", deriv_args.n, "derivative order")->required()->check(CLI::Range(1, 64));
    deriv->add_option("--x", deriv_x, "evaluation point")->required();
    deriv->add_option("--radius", deriv_args.radius, "domain radius");
    deriv->add_flag("--exact", deriv_args.exact, "exact rational evaluation");

    // limit
    auto* limit = app.add_subcommand("limit", "numeric limit of the n-fold q-derivative at 0");
    CommonArgs limit_args;
    LimitOptions limit_opts;
    limit->add_option("--expr", limit_args.expr_text, "expression in x")->required();
    limit->add_option("--q", limit_args.q_text, "q value")->required();
    limit->add_option("--n", limit_args.n, "derivative order")->required()->check(CLI::Range(1, 64));
    limit->add_option("--radius", limit_args.radius, "domain radius");
    limit->add_option("--tol", limit_opts.tol, "convergence tolerance");
    limit->add_option("--x0", limit_opts.x0, "initial sample point");
    limit->add_option("--ratio", limit_opts.ratio, "geometric sample ratio");
    limit->add_option("--max-steps", limit_opts.max_steps, "maximum samples");
    bool limit_samples = false;
    limit->add_flag("--samples", limit_samples, "emit the sample table instead of the summary");

    // verify
    auto* verify = app.add_subcommand(
        "verify", "check the limit at 0 against c_n(q) f^(n)(0) over a (q, n) sweep");
    std::string verify_expr, verify_q, verify_n = "1..1";
    double verify_radius = 0.0, verify_tol = 0.0;
    bool verify_exact = false;
    verify->add_option("--expr", verify_expr, "expression in x")->required();
    verify->add_option("--q", verify_q, "comma-separated q values")->required();
    verify->add_option("--n", verify_n, "order or range A..B")->required();
    verify->add_option("--radius", verify_radius, "domain radius");
    verify->add_option("--tol", verify_tol, "pass tolerance (default by n)");
    verify->add_flag("--exact", verify_exact, "exact polynomial verification");

    // series
    auto* series = app.add_subcommand("series", "coefficients of the n-fold q-derivative series");
    CommonArgs series_args;
    int series_order = 0;
    series->add_option("--expr", series_args.expr_text, "expression in x")->required();
    series->add_option("--q", series_args.q_text, "q value")->required();
    series->add_option("--n", series_args.n, "derivative order")->required()->check(CLI::Range(1, 64));
    series->add_option("--order", series_order, "input truncation order")->required()->check(CLI::Range(1, 4096));
    series->add_option("--radius", series_args.radius, "domain radius");
    series->add_flag("--exact", series_args.exact, "exact rational coefficients");

    // identity
    auto* identity = app.add_subcommand("identity", "randomized exact identity sweep");
    std::string identity_which;
    std::uint64_t identity_seed = 12345;
    long long identity_trials = 200;
    identity->add_option("--which", identity_which, "identity to sweep")
        ->required()
        ->check(CLI::IsMember({"gauss", "sumdelta", "qminus1", "closedform"}));
    identity->add_option("--seed", identity_seed, "random seed");
    identity->add_option("--trials", identity_trials, "number of trials")->check(CLI::PositiveNumber);

    // bench
    auto* bench = app.add_subcommand("bench", "error-vs-x table for the n-fold sum form");
    CommonArgs bench_args;
    double bench_x0 = 0.0;
    int bench_points = 12;
    bench->add_option("--expr", bench_args.expr_text, "expression in x")->required();
    bench->add_option("--q", bench_args.q_text, "q value")->required();
    bench->add_option("--n", bench_args.n, "derivative order")->required()->check(CLI::Range(1, 64));
    bench->add_option("--radius", bench_args.radius, "domain radius");
    bench->add_option("--x0", bench_x0, "largest sample point");
    bench->add_option("--points", bench_points, "number of rows")->check(CLI::Range(1, 200));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    OutFormat format = OutFormat::plain;
    if (format_text == "csv") format = OutFormat::csv;
    if (format_text == "json") format = OutFormat::json;
    Emitter emitter(format);

    try {
        if (qpoch->parsed()) return run_qpoch(emitter, format, qpoch_a, qpoch_q, qpoch_n);
        if (qbinom->parsed()) return run_qbinom(emitter, format, qbinom_n, qbinom_k, qbinom_q);
        if (deriv->parsed()) return run_deriv(emitter, format, deriv_args, deriv_x);
        if (limit->parsed()) return run_limit(emitter, limit_args, limit_opts, limit_samples);
        if (verify->parsed()) {
            return run_verify(emitter, verify_expr, verify_q, verify_n, verify_radius, verify_tol,
                              verify_exact);
        }
        if (series->parsed()) return run_series(emitter, series_args, series_order);
        if (identity->parsed()) return run_identity(emitter, identity_which, identity_seed, identity_trials);
        if (bench->parsed()) return run_bench(emitter, bench_args, bench_x0, bench_points);
    } catch (const qcalc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
