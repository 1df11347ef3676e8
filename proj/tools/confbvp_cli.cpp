// Command-line front end: evaluate kernels on grids, run linear/nonlinear
// solves, run the per-family verification suite, scan bound inequalities.
// CSV goes to stdout (or --out); verification reports are tab-separated.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 solver divergence, 64 usage error.

#include "confbvp/bounds.hpp"
#include "confbvp/greens.hpp"
#include "confbvp/numerics.hpp"
#include "confbvp/report.hpp"
#include "confbvp/solver.hpp"
#include "confbvp/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace confbvp;

struct Flags {
    std::string family;
    double alpha = 1.0, beta = 1.0, gamma = 1.0, delta = 1.0;
    double tau = -1.0;
    double gamma_bc = 1.0, delta_bc = 0.0, eta_bc = 1.0, zeta_bc = 0.0;
    double delta3p = 0.0, eta3p = 0.5;
    int n = 0;
    double tol = 1e-4;
    std::string out;
    std::string h = "one";
    std::string f = "one";
    std::string a_weight = "one";
    double lambda = 1.0;
    int max_iter = 50;
    bool nonlinear = false;
    std::string inject = "none";
};

ScalarFn parse_profile(const std::string& text) {
    if (text == "one") return [](double) { return 1.0; };
    if (text.rfind("poly:", 0) == 0) {
        std::vector<double> coeffs;
        std::stringstream ss(text.substr(5));
        std::string item;
        while (std::getline(ss, item, ',')) coeffs.push_back(std::stod(item));
        if (coeffs.empty()) throw CLI::ValidationError("--h", "empty coefficient list");
        return FracPoly::from_coeffs(coeffs).as_fn();
    }
    throw CLI::ValidationError("forcing", "expected 'one' or 'poly:c0,c1,...': " + text);
}

std::function<double(double, double)> parse_rhs(const std::string& name) {
    if (name == "one") return [](double, double) { return 1.0; };
    if (name == "x") return [](double, double x) { return x; };
    if (name == "onepluxsq") return [](double, double x) { return 1.0 + x * x; };
    if (name.rfind("poly:", 0) == 0) {
        auto fn = parse_profile(name);
        return [fn](double t, double) { return fn(t); };
    }
    throw CLI::ValidationError("--f", "expected one|x|onepluxsq|poly:... : " + name);
}

KernelSpec make_spec(const Flags& fl) {
    const Order a{fl.alpha}, b{fl.beta};
    if (fl.family == "sl2")
        return KernelSpec::sl2(a, b, BcCoeffs{fl.gamma_bc, fl.delta_bc, fl.eta_bc, fl.zeta_bc});
    if (fl.family == "conjugate2") return KernelSpec::conjugate2(a, b);
    if (fl.family == "rightfocal2") return KernelSpec::right_focal2(a, b);
    if (fl.family == "rightfocal3") {
        if (fl.tau < 0.0) throw CLI::ValidationError("--tau", "required for rightfocal3");
        return KernelSpec::right_focal3(a, b, Order{fl.gamma}, fl.tau);
    }
    if (fl.family == "cantilever4")
        return KernelSpec::cantilever4(a, b, Order{fl.gamma}, Order{fl.delta});
    if (fl.family == "lidstone4") return KernelSpec::lidstone4(a, b);
    throw CLI::ValidationError("--family", "unknown family: " + fl.family);
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw CLI::ValidationError("--out", "cannot open " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void warn_below_threshold(const KernelSpec& spec) {
    if (spec.family != KernelFamily::RightFocal3) return;
    const double thr = g3_positivity_threshold(spec.orders.alpha, spec.orders.beta);
    if (spec.tau <= thr)
        std::cerr << "warning: tau=" << fmt17(spec.tau) << " at or below positivity threshold "
                  << fmt17(thr) << "; the kernel bound is not guaranteed\n";
}

int cmd_eval(const Flags& fl) {
    KernelSpec spec = make_spec(fl);
    warn_below_threshold(spec);
    Output out(fl.out);
    const int n = fl.n > 0 ? fl.n : 101;
    if (n < 3) throw CLI::ValidationError("--n", "grid needs at least 3 points");
    const auto mesh = num::linspace(0.0, 1.0, n);
    out.stream() << "t,s,G\n";
    for (double t : mesh)
        for (double s : mesh)
            out.stream() << fmt17(t) << ',' << fmt17(s) << ','
                         << fmt17(kernel_value(spec, t, s)) << '\n';
    return 0;
}

int cmd_solve(const Flags& fl) {
    Output out(fl.out);
    const int n = fl.n > 0 ? fl.n : 257;
    if (n < 3) throw CLI::ValidationError("--n", "mesh needs at least 3 points");
    const auto mesh = num::linspace(0.0, 1.0, n);

    if (fl.family == "threepoint") {
        const Order a{fl.alpha}, b{fl.beta};
        ThreePointParams p{fl.delta3p, fl.eta3p};
        GridFunction x = solve_threepoint(parse_profile(fl.h), a, b, p, mesh);
        out.stream() << "t,x\n";
        for (size_t i = 0; i < mesh.size(); ++i)
            out.stream() << fmt17(mesh[i]) << ',' << fmt17(x.values[i]) << '\n';
        // Residual/boundary summary for the equivalent three-point conditions.
        std::vector<double> ords{fl.alpha, fl.beta};
        double resid = 0.0;
        for (double t : num::linspace(0.05, 0.95, 7))
            resid = std::max(resid,
                             std::abs(iterated_conf_diff(x.dense, ords, t) + parse_profile(fl.h)(t)));
        const double bc0 = std::abs(x.dense(0.0));
        const double bc1 = std::abs(fl.delta3p * x.dense(fl.eta3p) - x.dense(1.0));
        out.stream() << "# residual=" << fmt17(resid) << " bc=" << fmt17(std::max(bc0, bc1))
                     << '\n';
        return 0;
    }

    KernelSpec spec = make_spec(fl);
    warn_below_threshold(spec);

    if (fl.nonlinear) {
        RhsFn rhs{parse_rhs(fl.f), fl.lambda, fl.a_weight == "one" ? ScalarFn{} : parse_profile(fl.a_weight)};
        SolveReport rep;
        try {
            rep = solve_nonlinear_picard(spec, rhs, fl.tol > 0 ? fl.tol : 1e-10, fl.max_iter, mesh);
        } catch (const DivergenceError& e) {
            std::cerr << "divergence: " << e.what() << '\n';
            return 2;
        }
        out.stream() << "t,x\n";
        for (size_t i = 0; i < mesh.size(); ++i)
            out.stream() << fmt17(mesh[i]) << ',' << fmt17(rep.solution.values[i]) << '\n';
        ScalarFn frozen_h = [rhs, sol = rep.solution](double s) {
            return rhs.eval(s, sol.eval_linear(s));
        };
        VerifyReport res = verify_residual(rep.solution, frozen_h, spec);
        VerifyReport bcs = verify_bcs(rep.solution, spec);
        out.stream() << "# residual=" << fmt17(res.magnitude) << " bc=" << fmt17(bcs.magnitude)
                     << " iterations=" << rep.iterations << " converged=" << (rep.converged ? 1 : 0)
                     << '\n';
        return 0;
    }

    ScalarFn h = parse_profile(fl.h);
    GridFunction x = solve_linear(spec, h, mesh);
    out.stream() << "t,x\n";
    for (size_t i = 0; i < mesh.size(); ++i)
        out.stream() << fmt17(mesh[i]) << ',' << fmt17(x.values[i]) << '\n';
    VerifyReport res = verify_residual(x, h, spec);
    VerifyReport bcs = verify_bcs(x, spec);
    out.stream() << "# residual=" << fmt17(res.magnitude) << " bc=" << fmt17(bcs.magnitude) << '\n';
    return 0;
}

int cmd_verify(const Flags& fl) {
    KernelSpec spec = make_spec(fl);
    warn_below_threshold(spec);
    Output out(fl.out);
    FaultInjection inj = FaultInjection::None;
    if (fl.inject == "sign-flip") inj = FaultInjection::SignFlip;
    else if (fl.inject == "perturb") inj = FaultInjection::PerturbSolution;
    else if (fl.inject != "none")
        throw CLI::ValidationError("--inject", "expected none|sign-flip|perturb");

    const auto reports = run_family_suite(spec, fl.tol, inj, parse_profile(fl.h));
    bool all = true;
    for (const auto& r : reports) {
        out.stream() << r.to_line() << '\n';
        all = all && r.pass;
    }
    return all ? 0 : 1;
}

int cmd_scan(const Flags& fl) {
    KernelSpec spec = make_spec(fl);
    warn_below_threshold(spec);
    Output out(fl.out);
    const int n = fl.n > 0 ? fl.n : 101;
    std::vector<VerifyReport> reports;
    reports.push_back(check_positivity(spec, n));
    switch (spec.family) {
        case KernelFamily::Sl2:
        case KernelFamily::Conjugate2:
        case KernelFamily::RightFocal2:
            reports.push_back(check_two_sided_bound(spec, n));
            break;
        case KernelFamily::RightFocal3:
            reports.push_back(check_two_sided_bound(spec, n));
            reports.push_back(check_monotonic_profile(spec, n));
            break;
        default: break;
    }
    bool all = true;
    for (const auto& r : reports) {
        out.stream() << r.to_line() << '\n';
        all = all && r.pass;
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Green's-kernel boundary value solver for conformable fractional derivatives"};
    app.require_subcommand(1);

    Flags fl;
    auto add_common = [&fl](CLI::App* cmd) {
        cmd->add_option("--family", fl.family, "kernel family or 'threepoint' (solve only)");
        cmd->add_option("--alpha", fl.alpha, "order alpha in (0,1]");
        cmd->add_option("--beta", fl.beta, "order beta in (0,1]");
        cmd->add_option("--gamma", fl.gamma, "order gamma in (0,1]");
        cmd->add_option("--delta", fl.delta, "order delta in (0,1]");
        cmd->add_option("--tau", fl.tau, "interior point for rightfocal3");
        cmd->add_option("--gamma-bc", fl.gamma_bc, "sl2 coefficient gamma");
        cmd->add_option("--delta-bc", fl.delta_bc, "sl2 coefficient delta");
        cmd->add_option("--eta-bc", fl.eta_bc, "sl2 coefficient eta");
        cmd->add_option("--zeta-bc", fl.zeta_bc, "sl2 coefficient zeta");
        cmd->add_option("--n", fl.n, "grid/mesh size");
        cmd->add_option("--tol", fl.tol, "tolerance");
        cmd->add_option("--out", fl.out, "write output to file instead of stdout");
    };

    CLI::App* eval = app.add_subcommand("eval", "evaluate a kernel on a grid, CSV t,s,G");
    add_common(eval);

    CLI::App* solve = app.add_subcommand("solve", "solve a boundary value problem, CSV t,x");
    solve->set_help_flag("--help", "print help"); // frees -h/--h for the forcing flag
    add_common(solve);
    solve->add_option("--h", fl.h, "forcing: one | poly:c0,c1,...");
    solve->add_option("--delta3p", fl.delta3p, "three-point coefficient delta");
    solve->add_option("--eta3p", fl.eta3p, "three-point location eta in (0,1)");
    solve->add_flag("--nonlinear", fl.nonlinear, "Picard iteration on lambda a(t) f(t,x)");
    solve->add_option("--f", fl.f, "nonlinear rhs: one | x | onepluxsq | poly:...");
    solve->add_option("--a", fl.a_weight, "nonlinear weight a(t): one | poly:...");
    solve->add_option("--lambda", fl.lambda, "nonlinear scalar factor");
    solve->add_option("--max-iter", fl.max_iter, "Picard iteration cap");

    CLI::App* verify = app.add_subcommand("verify", "run the family property suite");
    verify->set_help_flag("--help", "print help");
    add_common(verify);
    verify->add_option("--h", fl.h, "forcing for the solve-based checks");
    verify->add_option("--inject", fl.inject, "fault injection: none | sign-flip | perturb");

    CLI::App* scan = app.add_subcommand("scan", "grid scan of bound/positivity inequalities");
    add_common(scan);

    try {
        app.parse(argc, argv);
        if (eval->parsed()) return cmd_eval(fl);
        if (solve->parsed()) return cmd_solve(fl);
        if (verify->parsed()) return cmd_verify(fl);
        if (scan->parsed()) return cmd_scan(fl);
        return 64;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 64;
    }
}
