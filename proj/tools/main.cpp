// Batch CLI: evaluate eta and its reflection factor, evaluate the weighted
// embedding, tabulate shift coefficients, scan and count zeros, and run the
// verification / audit suites.  All grid commands are deterministic for any
// --threads value.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "etaembed/audit.hpp"
#include "etaembed/coefficients.hpp"
#include "etaembed/embedding.hpp"
#include "etaembed/errors.hpp"
#include "etaembed/eta.hpp"
#include "etaembed/numkernel.hpp"
#include "etaembed/parallel.hpp"
#include "etaembed/textio.hpp"
#include "etaembed/zeros.hpp"

namespace {

using etaembed::cplx;
using etaembed::EvalConfig;

int env_threads() {
    const char* v = std::getenv("ETA_EMBED_THREADS");
    if (!v) return 1;
    char* end = nullptr;
    long n = std::strtol(v, &end, 10);
    if (end == v || *end != '\0' || n < 1) return 1;
    return static_cast<int>(std::min(n, 256L));
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw etaembed::error("cannot open output path: " + out_path);
    f << text;
}

EvalConfig point_config(double tol) {
    return EvalConfig{256, tol, etaembed::AccumMode::compensated};
}

nlohmann::ordered_json complex_json(cplx z) {
    nlohmann::ordered_json j;
    j["re"] = z.real();
    j["im"] = z.imag();
    return j;
}

// Shared numeric flags; tol carries a per-command default.
struct Options {
    std::string s_text;
    double kappa = 2.0;
    double nu = 1.0;
    double tmin = 0.0, tmax = 0.0, step = 0.05;
    std::string rect_text;
    int n = 32;
    double tol = 0.0;  // 0 = command default
    std::string format;
    std::string out;
    int threads = env_threads();
    std::string suite = "all";
};

std::vector<cplx> build_points(const Options& opt, bool have_s, bool have_grid) {
    std::vector<cplx> points;
    if (have_grid) {
        if (!(opt.tmin < opt.tmax))
            throw etaembed::domain_error("grid needs tmin < tmax");
        double sigma = have_s ? etaembed::parse_complex(opt.s_text).real() : 0.5;
        size_t count =
            static_cast<size_t>(std::floor((opt.tmax - opt.tmin) / opt.step)) + 1;
        for (size_t i = 0; i < count; ++i)
            points.emplace_back(sigma, opt.tmin + static_cast<double>(i) * opt.step);
    } else {
        points.push_back(etaembed::parse_complex(opt.s_text));
    }
    return points;
}

int run_eval(const Options& opt, bool have_s, bool have_grid) {
    EvalConfig cfg = point_config(opt.tol > 0.0 ? opt.tol : 4e-10);
    std::vector<cplx> points = build_points(opt, have_s, have_grid);

    struct Row {
        cplx s;
        etaembed::EtaValue e;
        bool has_lambda = false;
        cplx lambda;
        double residual = 0.0;
    };
    std::vector<Row> rows(points.size());
    etaembed::parallel_for_index(points.size(), opt.threads, [&](size_t i) {
        Row& r = rows[i];
        r.s = points[i];
        r.e = etaembed::eta(r.s, cfg);
        try {
            r.lambda = etaembed::lambda_factor(r.s);
            r.residual = std::abs(r.e.value - r.lambda * etaembed::eta(1.0 - r.s, cfg).value);
            r.has_lambda = true;
        } catch (const etaembed::singularity_error&) {
            r.has_lambda = false;
        }
    });

    std::string format = opt.format.empty() ? "csv" : opt.format;
    std::string text;
    if (format == "csv") {
        text = "s,eta_re,eta_im,est_error,terms,lambda_re,lambda_im,residual\n";
        for (const Row& r : rows) {
            text += etaembed::format_complex(r.s) + ',' +
                    etaembed::format_real(r.e.value.real()) + ',' +
                    etaembed::format_real(r.e.value.imag()) + ',' +
                    etaembed::format_real(r.e.est_error) + ',' +
                    std::to_string(r.e.terms_used) + ',';
            if (r.has_lambda)
                text += etaembed::format_real(r.lambda.real()) + ',' +
                        etaembed::format_real(r.lambda.imag()) + ',' +
                        etaembed::format_real(r.residual);
            else
                text += "nan,nan,nan";
            text += '\n';
        }
    } else {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const Row& r : rows) {
            nlohmann::ordered_json item;
            item["s"] = etaembed::format_complex(r.s);
            item["eta"] = complex_json(r.e.value);
            item["est_error"] = r.e.est_error;
            item["terms"] = r.e.terms_used;
            if (r.has_lambda) {
                item["lambda"] = complex_json(r.lambda);
                item["residual"] = r.residual;
            } else {
                item["lambda"] = nullptr;
                item["residual"] = nullptr;
            }
            arr.push_back(std::move(item));
        }
        text = arr.dump(2) + "\n";
    }
    emit(text, opt.out);
    return 0;
}

int run_embed(const Options& opt, bool have_s, bool have_grid) {
    EvalConfig cfg = point_config(opt.tol > 0.0 ? opt.tol : 4e-10);
    etaembed::EmbeddingParams params(opt.kappa, opt.nu);
    std::vector<cplx> points = build_points(opt, have_s, have_grid);

    std::vector<etaembed::EtaValue> rows(points.size());
    etaembed::parallel_for_index(points.size(), opt.threads, [&](size_t i) {
        rows[i] = etaembed::eta_embedding(points[i], params, cfg);
    });

    std::string format = opt.format.empty() ? "csv" : opt.format;
    std::string text;
    if (format == "csv") {
        text = "s,kappa,nu,value_re,value_im,est_error,terms\n";
        for (size_t i = 0; i < rows.size(); ++i) {
            text += etaembed::format_complex(points[i]) + ',' +
                    etaembed::format_real(opt.kappa) + ',' +
                    etaembed::format_real(opt.nu) + ',' +
                    etaembed::format_real(rows[i].value.real()) + ',' +
                    etaembed::format_real(rows[i].value.imag()) + ',' +
                    etaembed::format_real(rows[i].est_error) + ',' +
                    std::to_string(rows[i].terms_used) + '\n';
        }
    } else {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (size_t i = 0; i < rows.size(); ++i) {
            nlohmann::ordered_json item;
            item["s"] = etaembed::format_complex(points[i]);
            item["kappa"] = opt.kappa;
            item["nu"] = opt.nu;
            item["value"] = complex_json(rows[i].value);
            item["est_error"] = rows[i].est_error;
            item["terms"] = rows[i].terms_used;
            arr.push_back(std::move(item));
        }
        text = arr.dump(2) + "\n";
    }
    emit(text, opt.out);
    return 0;
}

int run_coeffs(const Options& opt) {
    double tol = opt.tol > 0.0 ? opt.tol : 1e-15;
    etaembed::CoeffTable table =
        etaembed::b_coeffs(etaembed::a_coeffs(opt.kappa, opt.n, tol));
    etaembed::CoeffSumIdentities sums =
        etaembed::coeff_sum_identities(opt.kappa, opt.n);

    std::string format = opt.format.empty() ? "csv" : opt.format;
    std::string text;
    if (format == "csv") {
        text = "n,a,b\n";
        for (int k = 0; k <= table.N; ++k)
            text += std::to_string(k) + ',' + etaembed::format_real(table.a[k]) +
                    ',' + etaembed::format_real(table.b[k]) + '\n';
    } else {
        nlohmann::ordered_json root =
            nlohmann::ordered_json::parse(etaembed::coeff_table_to_json(table));
        nlohmann::ordered_json s;
        s["a_sum_lhs"] = sums.a_sum_lhs;
        s["a_sum_rhs"] = sums.a_sum_rhs;
        s["a_residual"] = sums.a_residual;
        s["a_tail"] = sums.a_tail;
        s["b_sum_lhs"] = sums.b_sum_lhs;
        s["b_sum_rhs"] = sums.b_sum_rhs;
        s["b_residual"] = sums.b_residual;
        s["b_tail"] = sums.b_tail;
        root["sums"] = s;
        text = root.dump(2) + "\n";
    }
    emit(text, opt.out);
    return 0;
}

int run_zeros_scan(const Options& opt) {
    double tol = opt.tol > 0.0 ? opt.tol : 4e-10;
    EvalConfig scan_cfg = point_config(tol);
    EvalConfig refine_cfg = point_config(std::min(tol, 1e-12));

    std::vector<double> candidates = etaembed::scan_critical_line(
        opt.tmin, opt.tmax, opt.step, scan_cfg, opt.threads);
    std::vector<etaembed::ZeroRecord> zeros;
    for (double t0 : candidates)
        zeros.push_back(etaembed::refine_zero(t0, refine_cfg));

    std::string format = opt.format.empty() ? "csv" : opt.format;
    std::string text = (format == "csv") ? etaembed::zeros_to_csv(zeros)
                                         : etaembed::zeros_to_json(zeros) + "\n";
    emit(text, opt.out);
    return 0;
}

etaembed::Rect parse_rect(const std::string& text) {
    etaembed::Rect r;
    double* slots[4] = {&r.sigma_min, &r.sigma_max, &r.t_min, &r.t_max};
    size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        size_t comma = (i < 3) ? text.find(',', pos) : text.size();
        if (comma == std::string::npos)
            throw etaembed::domain_error("rect needs smin,smax,tmin,tmax");
        std::string piece = text.substr(pos, comma - pos);
        char* end = nullptr;
        *slots[i] = std::strtod(piece.c_str(), &end);
        if (end != piece.c_str() + piece.size() || piece.empty())
            throw etaembed::domain_error("rect: cannot parse '" + piece + "'");
        pos = comma + 1;
    }
    return r;
}

int run_zeros_count(const Options& opt) {
    EvalConfig cfg = point_config(opt.tol > 0.0 ? opt.tol : 4e-10);
    etaembed::Rect rect = parse_rect(opt.rect_text);
    double winding = etaembed::winding_rect(rect, cfg);
    int count = etaembed::count_zeros_rect(rect, cfg);

    std::string format = opt.format.empty() ? "csv" : opt.format;
    std::string text;
    if (format == "csv") {
        text = "sigma_min,sigma_max,t_min,t_max,winding,count\n";
        text += etaembed::format_real(rect.sigma_min) + ',' +
                etaembed::format_real(rect.sigma_max) + ',' +
                etaembed::format_real(rect.t_min) + ',' +
                etaembed::format_real(rect.t_max) + ',' +
                etaembed::format_real(winding) + ',' + std::to_string(count) + '\n';
    } else {
        nlohmann::ordered_json item;
        item["rect"] = {rect.sigma_min, rect.sigma_max, rect.t_min, rect.t_max};
        item["winding"] = winding;
        item["count"] = count;
        text = item.dump(2) + "\n";
    }
    emit(text, opt.out);
    return 0;
}

int run_verify(const Options& opt) {
    etaembed::AuditOutcome outcome =
        etaembed::run_suite(etaembed::AuditConfig{}, opt.threads);

    bool identities_only = opt.suite == "identities";
    std::string format = opt.format.empty() ? "csv" : opt.format;
    std::string text;
    if (format == "csv") {
        text = "check_id,verdict,residual,tolerance\n";
        for (const auto& r : outcome.reports) {
            if (identities_only && r.verdict == etaembed::Verdict::informational)
                continue;
            text += r.check_id + ',' + etaembed::verdict_name(r.verdict) + ',' +
                    etaembed::format_real(r.residual) + ',' +
                    etaembed::format_real(r.tolerance) + '\n';
        }
    } else {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : outcome.reports) {
            if (identities_only && r.verdict == etaembed::Verdict::informational)
                continue;
            nlohmann::ordered_json item;
            item["check_id"] = r.check_id;
            item["verdict"] = etaembed::verdict_name(r.verdict);
            item["residual"] = r.residual;
            item["tolerance"] = r.tolerance;
            arr.push_back(std::move(item));
        }
        text = arr.dump(2) + "\n";
    }
    emit(text, opt.out);
    std::cerr << "pass=" << outcome.summary.pass << " fail=" << outcome.summary.fail
              << " informational=" << outcome.summary.informational
              << " skipped=" << outcome.summary.skipped.size() << "\n";
    return outcome.summary.fail > 0 ? 1 : 0;
}

int run_audit(const Options& opt) {
    etaembed::AuditOutcome outcome =
        etaembed::run_suite(etaembed::AuditConfig{}, opt.threads);

    std::string format = opt.format.empty() ? "json" : opt.format;
    std::string text;
    if (format == "json") {
        text = etaembed::audit_to_json(outcome) + "\n";
    } else {
        text = "check_id,paper_anchor,verdict,residual,tolerance\n";
        for (const auto& r : outcome.reports)
            text += r.check_id + ',' + r.paper_anchor + ',' +
                    etaembed::verdict_name(r.verdict) + ',' +
                    etaembed::format_real(r.residual) + ',' +
                    etaembed::format_real(r.tolerance) + '\n';
    }
    emit(text, opt.out);
    return outcome.summary.fail > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dirichlet eta toolkit: evaluation, weighted embedding, shift "
                 "coefficients, zeros and claim audits"};
    app.require_subcommand(1);

    Options opt;
    int exit_code = 0;
    std::function<int()> action;

    auto add_output_flags = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "Output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", opt.out, "Write output to this path");
        cmd->add_option("--threads", opt.threads, "Worker thread count")
            ->check(CLI::Range(1, 256));
    };

    CLI::App* eval = app.add_subcommand("eval", "Evaluate eta, the reflection factor and the functional residual");
    auto* eval_s = eval->add_option("--s", opt.s_text, "Point as complex literal a+bi");
    auto* eval_tmin = eval->add_option("--tmin", opt.tmin, "Grid start height");
    eval->add_option("--tmax", opt.tmax, "Grid end height");
    eval->add_option("--step", opt.step, "Grid spacing")->check(CLI::PositiveNumber);
    eval->add_option("--tol", opt.tol, "Series tolerance")->check(CLI::PositiveNumber);
    add_output_flags(eval);
    eval->callback([&, eval_s, eval_tmin] {
        bool have_s = eval_s->count() > 0;
        bool have_grid = eval_tmin->count() > 0;
        if (!have_s && !have_grid)
            throw CLI::ValidationError("eval", "need --s or --tmin/--tmax");
        action = [&, have_s, have_grid] { return run_eval(opt, have_s, have_grid); };
    });

    CLI::App* embed = app.add_subcommand("embed", "Evaluate the weighted embedding of eta");
    auto* embed_s = embed->add_option("--s", opt.s_text, "Point as complex literal a+bi");
    embed->add_option("--kappa", opt.kappa, "Kernel width")
        ->check(CLI::PositiveNumber);
    embed->add_option("--nu", opt.nu, "Shift exponent")->check(CLI::PositiveNumber);
    auto* embed_tmin = embed->add_option("--tmin", opt.tmin, "Grid start height");
    embed->add_option("--tmax", opt.tmax, "Grid end height");
    embed->add_option("--step", opt.step, "Grid spacing")->check(CLI::PositiveNumber);
    embed->add_option("--tol", opt.tol, "Series tolerance")->check(CLI::PositiveNumber);
    add_output_flags(embed);
    embed->callback([&, embed_s, embed_tmin] {
        bool have_s = embed_s->count() > 0;
        bool have_grid = embed_tmin->count() > 0;
        if (!have_s && !have_grid)
            throw CLI::ValidationError("embed", "need --s or --tmin/--tmax");
        action = [&, have_s, have_grid] { return run_embed(opt, have_s, have_grid); };
    });

    CLI::App* coeffs = app.add_subcommand("coeffs", "Tabulate shift coefficients and their sum identities");
    coeffs->add_option("--kappa", opt.kappa, "Kernel width")
        ->required()
        ->check(CLI::PositiveNumber);
    coeffs->add_option("--n", opt.n, "Largest coefficient index")
        ->check(CLI::Range(0, 64));
    coeffs->add_option("--tol", opt.tol, "Inner series tolerance")
        ->check(CLI::PositiveNumber);
    add_output_flags(coeffs);
    coeffs->callback([&] { action = [&] { return run_coeffs(opt); }; });

    CLI::App* zscan = app.add_subcommand("zeros-scan", "Scan the half line and refine zeros");
    zscan->add_option("--tmin", opt.tmin, "Scan start height")->required();
    zscan->add_option("--tmax", opt.tmax, "Scan end height")->required();
    zscan->add_option("--step", opt.step, "Scan grid spacing")
        ->check(CLI::PositiveNumber);
    zscan->add_option("--tol", opt.tol, "Series tolerance")->check(CLI::PositiveNumber);
    add_output_flags(zscan);
    zscan->callback([&] { action = [&] { return run_zeros_scan(opt); }; });

    CLI::App* zcount = app.add_subcommand("zeros-count", "Count zeros in a rectangle by boundary winding");
    zcount->add_option("--rect", opt.rect_text, "Rectangle smin,smax,tmin,tmax")
        ->required();
    zcount->add_option("--tol", opt.tol, "Series tolerance")
        ->check(CLI::PositiveNumber);
    add_output_flags(zcount);
    zcount->callback([&] { action = [&] { return run_zeros_count(opt); }; });

    CLI::App* verify = app.add_subcommand("verify", "Run the identity suite; exit 1 on any failed check");
    verify->add_option("--suite", opt.suite, "Which checks to list: identities or all")
        ->check(CLI::IsMember({"identities", "all"}));
    add_output_flags(verify);
    verify->callback([&] { action = [&] { return run_verify(opt); }; });

    CLI::App* audit = app.add_subcommand("audit", "Emit the full audit report including informational claims");
    add_output_flags(audit);
    audit->callback([&] { action = [&] { return run_audit(opt); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        exit_code = action ? action() : 2;
    } catch (const etaembed::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return exit_code;
}
