#include "darboux3/climain.hpp"

#include <charconv>
#include <cctype>
#include <fstream>
#include <ostream>
#include <set>

#include "CLI11.hpp"

#include "darboux3/diagnostics.hpp"
#include "darboux3/errors.hpp"
#include "darboux3/exportio.hpp"
#include "darboux3/parse.hpp"
#include "darboux3/report.hpp"
#include "darboux3/search.hpp"
#include "darboux3/systemfile.hpp"
#include "darboux3/transforms.hpp"

namespace dbx {

namespace {

std::string fmt_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::array<double, 3> parse_x0(const std::string& text) {
    std::array<double, 3> out{};
    std::size_t start = 0;
    for (int i = 0; i < 3; ++i) {
        const std::size_t comma = text.find(',', start);
        if ((i < 2) == (comma == std::string::npos))
            throw SyntaxError("--x0 expects three comma-separated values", start);
        const std::string cell =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        out[i] = Rational::from_string(cell).to_double();
        start = comma + 1;
    }
    return out;
}

void write_json(const Json& j, const std::string& path, std::ostream& out) {
    const std::string text = j.dump(2) + "\n";
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open " + path + " for writing");
    file << text;
    if (!file.good()) throw IoError("write failed for " + path);
}

// Re-check every emitted certificate against the field before anything is shown.
void recheck(const VectorField& X, const SearchReport& rep) {
    for (const auto& c : rep.certificates)
        if (!c.verified || !verify_certificate(X, c))
            throw Error("internal: certificate failed re-verification");
}

std::string cert_key(const DarbouxCertificate& c) {
    std::string key = c.kind == DarbouxCertificate::Kind::polynomial
                          ? "p:" + format_polynomial(c.f)
                          : "e:" + format_polynomial(c.g) + "/" + format_polynomial(c.h);
    for (const auto& k : c.cofactor.coeffs()) key += "|" + k.str();
    return key;
}

struct Options {
    std::string file;
    int max_degree = 4;
    std::string cofactor_mode = "linear";
    int max_branches = 512;
    std::string json_path;
    std::string poly_expr, cof_expr = "0", num_expr, den_expr;
    std::string x0_text;
    double t_end = 0, rtol = 1e-9, atol = 1e-12, renorm_dt = 0.5;
    int samples = 0;
    std::string output_path;
    std::vector<std::string> svg_args;
    std::string target;
    std::string alpha_text = "1";
};

SearchReport run_search(const VectorField& X, const Options& o) {
    if (o.cofactor_mode == "zero") return find_polynomial_first_integrals(X, o.max_degree);
    if (o.cofactor_mode == "constant") return find_darboux_constant_cofactor(X, o.max_degree);
    return find_darboux_linear_cofactor(X, o.max_degree, o.max_branches);
}

int do_analyze(const Options& o, std::ostream& out) {
    const SystemFile sf = load_system_file(o.file);
    const SearchReport rep = run_search(sf.field, o);
    recheck(sf.field, rep);
    out << render_search_report(rep);
    if (!o.json_path.empty()) write_json(search_report_json(rep), o.json_path, out);
    if (!rep.certificates.empty()) return 0;
    return rep.partial ? 3 : 1;
}

int do_verify(const Options& o, std::ostream& out, std::ostream& err) {
    const SystemFile sf = load_system_file(o.file);
    if (!o.num_expr.empty() || !o.den_expr.empty()) {
        if (o.num_expr.empty() || o.den_expr.empty() || !o.poly_expr.empty()) {
            err << "verify needs either --poly [--cofactor] or both --num and --den\n";
            return 2;
        }
        const Polynomial num = parse_polynomial(o.num_expr, sf.params);
        const Polynomial den = parse_polynomial(o.den_expr, sf.params);
        const bool ok = verify_rational_first_integral(sf.field, num, den);
        out << (ok ? "verified: X(num/den) = 0\n" : "failed: num/den is not a first integral\n");
        return ok ? 0 : 1;
    }
    if (o.poly_expr.empty()) {
        err << "verify needs either --poly [--cofactor] or both --num and --den\n";
        return 2;
    }
    DarbouxCertificate cert;
    cert.f = parse_polynomial(o.poly_expr, sf.params);
    cert.cofactor = Cofactor::from_polynomial(parse_polynomial(o.cof_expr, sf.params));
    const bool ok = verify_certificate(sf.field, cert);
    out << (ok ? "verified: X(f) = K*f\n" : "failed: X(f) - K*f is nonzero\n");
    return ok ? 0 : 1;
}

int do_expfactor(const Options& o, std::ostream& out, std::ostream& err) {
    const SystemFile sf = load_system_file(o.file);
    std::optional<DarbouxCertificate> hcert;
    if (!o.den_expr.empty()) {
        DarbouxCertificate c;
        c.f = parse_polynomial(o.den_expr, sf.params);
        const auto kh = cofactor_of(sf.field, c.f);
        if (!kh || !kh->is_constant()) {
            err << "denominator is not an invariant polynomial with constant cofactor\n";
            return 1;
        }
        c.cofactor = *kh;
        c.verified = verify_certificate(sf.field, c);
        hcert = std::move(c);
    }
    const SearchReport rep = find_exponential_factors(sf.field, o.max_degree, hcert);
    recheck(sf.field, rep);
    out << render_search_report(rep);
    out << "nullspace dimension: " << (rep.branches.empty() ? 0 : rep.branches[0].nullity)
        << "\n";
    if (!o.json_path.empty()) write_json(search_report_json(rep), o.json_path, out);
    return rep.certificates.empty() ? 1 : 0;
}

int do_compose(const Options& o, std::ostream& out) {
    const SystemFile sf = load_system_file(o.file);
    const SearchReport rep = run_search(sf.field, o);
    recheck(sf.field, rep);
    const auto integral = compose_first_integral(rep.certificates);
    if (!integral) {
        out << "no nontrivial cofactor relation among " << rep.certificates.size()
            << " certificate(s)\n";
        return 1;
    }
    out << "first integral: " << integral->description() << "\n";
    if (const auto rat = integral->as_rational_function()) {
        const bool exact = verify_rational_first_integral(sf.field, rat->first, rat->second);
        out << "exact rational first integral: " << (exact ? "yes" : "NO") << "\n";
        if (!exact) throw Error("internal: composed integral failed exact verification");
    }
    if (!o.json_path.empty()) write_json(first_integral_json(*integral), o.json_path, out);
    return 0;
}

int do_simulate(const Options& o, std::ostream& out, std::ostream& err) {
    const SystemFile sf = load_system_file(o.file);
    const NumericField F(sf.field);
    const auto x0 = parse_x0(o.x0_text);
    const Trajectory traj = integrate(F, x0, o.t_end, o.rtol, o.atol, o.samples);
    out << "samples: " << traj.times.size() << "  accepted: " << traj.accepted
        << "  rejected: " << traj.rejected << "\n";
    const auto& last = traj.states.back();
    out << "final state: " << fmt_double(last[0]) << ", " << fmt_double(last[1]) << ", "
        << fmt_double(last[2]) << "\n";
    if (!o.output_path.empty()) write_csv(traj, o.output_path);
    for (std::size_t i = 0; i + 1 < o.svg_args.size(); i += 2) {
        const auto plane = plane_from_string(o.svg_args[i]);
        if (!plane) {
            err << "unknown projection plane '" << o.svg_args[i] << "' (use xy, xz, or yz)\n";
            return 2;
        }
        write_svg(traj, *plane, o.svg_args[i + 1]);
    }
    return 0;
}

int do_lyapunov(const Options& o, std::ostream& out, std::ostream& err) {
    const SystemFile sf = load_system_file(o.file);
    const NumericField F(sf.field);
    if (o.t_end < 100 * o.renorm_dt) {
        err << "--t-end must cover at least 100 renormalization intervals\n";
        return 2;
    }
    const double lam = lyapunov_max(F, parse_x0(o.x0_text), o.t_end, o.renorm_dt);
    out << "largest lyapunov exponent estimate: " << fmt_double(lam) << "\n";
    return 0;
}

int do_transform(const Options& o, std::ostream& out, std::ostream& err) {
    const SystemFile sf = load_system_file(o.file);
    const auto gd = match_gd(sf.field);
    if (!gd) {
        err << "system is not of the gd form A*y*z + C*z - sigma*x / -x*z + Ra - y / -z + x*y\n";
        return 2;
    }
    const NamedSystem target = o.target == "rabinovich"      ? NamedSystem::rabinovich
                               : o.target == "forced-damped" ? NamedSystem::forced_damped
                                                             : NamedSystem::d2;
    NamedEquivalence eq;
    try {
        eq = gd_to_named(*gd, target, Rational::from_string(o.alpha_text));
    } catch (const ConditionViolated& e) {
        err << "condition violated: " << e.what() << "\n";
        return 1;
    } catch (const IrrationalRadical& e) {
        err << "irrational radical: " << e.what() << "\n";
        return 1;
    }

    out << "target: " << o.target << "\nderived parameters:";
    for (const auto& p : eq.params) out << " " << p.str();
    out << "\nold = M * new + b, old time = tau * new time\n";
    for (int i = 0; i < 3; ++i) {
        out << (i == 0 ? "M = [" : "    [");
        for (int j = 0; j < 3; ++j) out << eq.change.matrix(i, j).str() << (j < 2 ? ", " : "]\n");
    }
    out << "b = [" << eq.change.shift(0).str() << ", " << eq.change.shift(1).str() << ", "
        << eq.change.shift(2).str() << "]\n";
    out << "tau = " << eq.change.time_scale.str() << "\n";
    out << "dX = " << format_polynomial(eq.field.P) << "\ndY = " << format_polynomial(eq.field.Q)
        << "\ndZ = " << format_polynomial(eq.field.R) << "\n";

    if (!o.json_path.empty()) {
        Json j;
        j["system"] = sf.field.description;
        j["target"] = o.target;
        j["params"] = Json::array();
        for (const auto& p : eq.params) j["params"].push_back(p.str());
        j["matrix"] = Json::array();
        for (int i = 0; i < 3; ++i) {
            Json row = Json::array();
            for (int jj = 0; jj < 3; ++jj) row.push_back(eq.change.matrix(i, jj).str());
            j["matrix"].push_back(std::move(row));
        }
        j["shift"] = {eq.change.shift(0).str(), eq.change.shift(1).str(),
                      eq.change.shift(2).str()};
        j["time_scale"] = eq.change.time_scale.str();
        j["field"] = {{"dx", format_polynomial(eq.field.P)},
                      {"dy", format_polynomial(eq.field.Q)},
                      {"dz", format_polynomial(eq.field.R)}};
        write_json(j, o.json_path, out);
    }
    return 0;
}

int do_report(const Options& o, std::ostream& out) {
    const SystemFile sf = load_system_file(o.file);
    const VectorField& X = sf.field;
    const std::array<SearchReport, 4> searches = {
        find_polynomial_first_integrals(X, o.max_degree),
        find_darboux_constant_cofactor(X, o.max_degree),
        find_darboux_linear_cofactor(X, o.max_degree, o.max_branches),
        find_exponential_factors(X, o.max_degree),
    };
    std::vector<DarbouxCertificate> all;
    std::set<std::string> seen;
    for (const auto& rep : searches) {
        recheck(X, rep);
        for (const auto& c : rep.certificates)
            if (seen.insert(cert_key(c)).second) all.push_back(c);
    }
    Json j;
    j["system"] = X.description;
    j["degree_bound"] = o.max_degree;
    j["searches"] = Json::array();
    for (const auto& rep : searches) j["searches"].push_back(search_report_json(rep));
    const auto integral = compose_first_integral(all);
    j["first_integral"] = integral ? first_integral_json(*integral) : Json(nullptr);
    write_json(j, o.json_path, out);
    return 0;
}

// CLI11 refuses "--opt -2" (the value looks like a flag); fuse such values onto
// their option with '='.
std::vector<std::string> fuse_negative_values(const std::vector<std::string>& args) {
    static const std::set<std::string> value_opts = {"--cofactor", "--x0",  "--alpha", "--t-end",
                                                     "--rtol",     "--atol", "--poly", "--num",
                                                     "--den"};
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const bool fusable = value_opts.count(args[i]) && i + 1 < args.size() &&
                             args[i + 1].size() > 1 && args[i + 1][0] == '-' &&
                             args[i + 1][1] != '-' && args[i + 1] != "-h";
        if (fusable) {
            out.push_back(args[i] + "=" + args[i + 1]);
            ++i;
        } else {
            out.push_back(args[i]);
        }
    }
    return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Darboux analysis and numeric validation of quadratic vector fields in x, y, z"};
    app.name("darboux3");
    app.require_subcommand(1);

    Options o;
    const auto add_file = [&](CLI::App* sub) {
        sub->add_option("file", o.file, "system definition file")->required();
    };
    const auto add_search_flags = [&](CLI::App* sub, bool with_mode) {
        sub->add_option("--max-degree", o.max_degree, "degree bound for candidates")
            ->capture_default_str();
        if (with_mode)
            sub->add_option("--cofactor", o.cofactor_mode, "cofactor mode")
                ->check(CLI::IsMember({"zero", "constant", "linear"}))
                ->capture_default_str();
        sub->add_option("--max-branches", o.max_branches, "case-split budget")
            ->capture_default_str();
        sub->add_option("--json", o.json_path, "write a JSON report to this path");
    };

    auto* analyze = app.add_subcommand("analyze", "search for Darboux polynomials");
    add_file(analyze);
    add_search_flags(analyze, true);

    auto* verify = app.add_subcommand("verify", "check a certificate against the field");
    add_file(verify);
    verify->add_option("--poly", o.poly_expr, "candidate polynomial f");
    verify->add_option("--cofactor", o.cof_expr, "cofactor K, degree <= 1 (default 0)");
    verify->add_option("--num", o.num_expr, "numerator of a rational first integral");
    verify->add_option("--den", o.den_expr, "denominator of a rational first integral");

    auto* expfactor = app.add_subcommand("expfactor", "search for exponential factors exp(g/h)");
    add_file(expfactor);
    add_search_flags(expfactor, false);
    expfactor->add_option("--den", o.den_expr, "denominator h (invariant polynomial)");

    auto* compose = app.add_subcommand("compose", "combine certificates into a first integral");
    add_file(compose);
    add_search_flags(compose, true);

    auto* simulate = app.add_subcommand("simulate", "integrate a trajectory");
    add_file(simulate);
    simulate->add_option("--x0", o.x0_text, "initial state a,b,c")->required();
    simulate->add_option("--t-end", o.t_end, "integration horizon")
        ->required()
        ->check(CLI::PositiveNumber);
    simulate->add_option("--rtol", o.rtol, "relative tolerance")->capture_default_str();
    simulate->add_option("--atol", o.atol, "absolute tolerance")->capture_default_str();
    simulate->add_option("--samples", o.samples, "uniform output samples (0 = accepted steps)")
        ->capture_default_str();
    simulate->add_option("--output", o.output_path, "write CSV here");
    simulate->add_option("--svg", o.svg_args, "projection plane (xy|xz|yz) and output path")
        ->type_size(2);

    auto* lyapunov = app.add_subcommand("lyapunov", "estimate the largest Lyapunov exponent");
    add_file(lyapunov);
    lyapunov->add_option("--x0", o.x0_text, "initial state a,b,c")->required();
    lyapunov->add_option("--t-end", o.t_end, "total horizon")->required()->check(CLI::PositiveNumber);
    lyapunov->add_option("--renorm-dt", o.renorm_dt, "renormalization interval")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto* transform = app.add_subcommand("transform", "map a gd system onto a named family");
    add_file(transform);
    transform->add_option("--target", o.target, "target family")
        ->check(CLI::IsMember({"rabinovich", "forced-damped", "d2"}))
        ->required();
    transform->add_option("--alpha", o.alpha_text, "free scaling of the rabinovich change")
        ->capture_default_str();
    transform->add_option("--json", o.json_path, "write a JSON report to this path");

    auto* report = app.add_subcommand("report", "run every search and emit one JSON document");
    add_file(report);
    add_search_flags(report, false);

    try {
        const auto fused = fuse_negative_values(args);
        std::vector<const char*> argv;
        argv.reserve(fused.size() + 1);
        argv.push_back("darboux3");
        for (const auto& a : fused) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) return do_analyze(o, out);
        if (verify->parsed()) return do_verify(o, out, err);
        if (expfactor->parsed()) return do_expfactor(o, out, err);
        if (compose->parsed()) return do_compose(o, out);
        if (simulate->parsed()) return do_simulate(o, out, err);
        if (lyapunov->parsed()) return do_lyapunov(o, out, err);
        if (transform->parsed()) return do_transform(o, out, err);
        if (report->parsed()) return do_report(o, out);
        err << "no subcommand selected\n";
        return 2;
    } catch (const Divergence& e) {
        err << "divergence: " << e.what() << "\n";
        return 3;
    } catch (const StepUnderflow& e) {
        err << "integration stalled: " << e.what() << "\n";
        return 3;
    } catch (const SystemFileError& e) {
        err << o.file << ": " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        err << "io error: " << e.what() << "\n";
        return 2;
    } catch (const SyntaxError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UnboundIdentifier& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DegreeError& e) {
        err << "unsupported input: " << e.what() << "\n";
        return 2;
    } catch (const ZeroDenominator& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace dbx
