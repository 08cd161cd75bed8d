#include "bhc/cli.hpp"

#include "bhc/errors.hpp"
#include "bhc/form_io.hpp"
#include "bhc/rng.hpp"
#include "bhc/verification.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <ostream>
#include <sstream>

namespace bhc {

namespace {

ScalarField scalar_field_from_string(const std::string& name)
{
    if (name == "real")
        return ScalarField::Real;
    if (name == "complex")
        return ScalarField::Complex;
    throw DomainError("unknown scalars '" + name + "' (expected real or complex)");
}

void require_json(const OutputSpec& out, const char* what)
{
    if (out.format != OutputFormat::Json)
        throw DomainError(std::string(what) + " output is JSON only; pass --format json");
}

void emit_report(const ExperimentReport& report, const OutputSpec& out, std::ostream& os)
{
    write_output(out, report.to_json().dump(2) + "\n", os);
}

std::string surface_path(const std::string& path)
{
    const std::filesystem::path p(path);
    std::filesystem::path s = p.parent_path() / (p.stem().string() + "_surface");
    s += p.extension();
    return s.string();
}

DivergenceMode mode_from_string(const std::string& name, DivergenceMode fallback)
{
    if (name.empty())
        return fallback;
    if (name == "real")
        return DivergenceMode::RealMultilinear;
    if (name == "complex")
        return DivergenceMode::ComplexPolynomial;
    throw DomainError("unknown mode '" + name + "' (expected real or complex)");
}

ExperimentReport ratio_experiment(const ExperimentRequest& req)
{
    ExperimentReport report;
    report.experiment = "ratio";

    FormInput input = littlewood_form();
    std::string source = "littlewood";
    if (!req.form_path.empty()) {
        input = load_form(req.form_path);
        source = req.form_path;
    } else if (!req.dims.empty()) {
        const MultilinearForm shape(req.dims, ScalarField::Real);
        CounterRng rng(req.seed);
        std::vector<Complex> signs(shape.coefficients().size());
        for (Complex& c : signs)
            c = static_cast<double>(rng.sign());
        input = MultilinearForm(req.dims, std::move(signs), ScalarField::Real);
        source = "random-bernoulli";
        report.seed = req.seed;
    }
    report.params["source"] = source;

    if (const auto* form = std::get_if<MultilinearForm>(&input)) {
        if (form->field() != ScalarField::Real)
            throw DomainError("ratio: complex multilinear forms have no exact norm oracle");
        const double m = static_cast<double>(form->arity());
        const double q = req.q > 0.0 ? req.q : 2.0 * m / (m + 1.0);
        report.params["q"] = q;
        report.params["dims"] = form->dims();
        const double lq = coeff_lq_norm(*form, q);
        const double norm = sup_norm_real_exact(*form);
        if (lq == 0.0)
            throw DegenerateError("ratio: zero form");
        const double ratio = lq / norm;
        report.details["coeff_lq_norm"] = lq;
        report.details["sup_norm"] = norm;
        report.details["sup_norm_exact"] = true;
        report.details["ratio"] = ratio;
        report.details["form"] = to_json(*form);
        if (q >= 2.0 * m / (m + 1.0)) {
            const double bound = c_real(form->arity());
            report.details["c_real"] = bound;
            report.add_check("ratio <= C_m", ratio <= bound * (1.0 + kTightRelativeSlack));
        }
        return report;
    }

    const auto& poly = std::get<HomogeneousPolynomial>(input);
    const double m = poly.degree();
    const double q = req.q > 0.0 ? req.q : 2.0 * m / (m + 1.0);
    report.seed = req.seed;
    report.params["q"] = q;
    report.params["m"] = poly.degree();
    report.params["n"] = poly.variables();
    report.params["restarts"] = req.restarts;
    const double lq = coeff_lq_norm(poly, q);
    if (lq == 0.0)
        throw DegenerateError("ratio: zero polynomial");
    const TorusMaximum best = maximize_on_torus(poly, req.restarts, req.seed);
    report.details["coeff_lq_norm"] = lq;
    report.details["sup_norm"] = best.value;
    report.details["sup_norm_exact"] = false;
    report.details["ratio"] = lq / best.value;
    report.details["phases"] = best.phases;
    report.details["form"] = to_json(poly);
    return report;
}

} // namespace

int cmd_constants(const SequenceSpec& spec, std::uint64_t n_max, const OutputSpec& out, std::ostream& os)
{
    out.validate();
    spec.validate();
    const ConstantTable table = make_table(spec, n_max);
    if (out.format == OutputFormat::Csv)
        write_output(out, to_csv(table, out.precision), os);
    else
        write_output(out, to_json(table, out.precision).dump(2) + "\n", os);
    return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t n_max, const OutputSpec& out, std::ostream& os)
{
    out.validate();
    require_json(out, "verify");
    ExperimentReport report;
    if (suite == "monotonicity")
        report = verify_monotonicity(n_max);
    else if (suite == "sandwich")
        report = verify_sandwich(n_max);
    else if (suite == "reduction")
        report = verify_reduction(n_max);
    else if (suite == "fundamental-lemma")
        report = verify_fundamental_lemma(n_max);
    else if (suite == "block-ratios")
        report = verify_block_ratios(n_max);
    else if (suite == "ksz-exhaustive")
        report = exhaustive_m2n2();
    else
        throw DomainError("unknown suite '" + suite + "'");
    emit_report(report, out, os);
    return report.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_figure(const std::string& name, unsigned t_steps, std::uint64_t n_max, const OutputSpec& out,
               std::ostream& os)
{
    out.validate();
    ScalarField field;
    if (name == "pcr")
        field = ScalarField::Real;
    else if (name == "pcrx")
        field = ScalarField::Complex;
    else
        throw DomainError("unknown figure '" + name + "' (expected pcr or pcrx)");
    if (t_steps < 2)
        throw DomainError("t_steps must be >= 2");
    if (n_max < 2)
        throw DomainError("n_max must be >= 2");

    DataTable curves;
    curves.columns = {{"t", false}, {"p", false}, {"c", false}, {"r", false}};
    DataTable surface;
    surface.columns = {{"n", true}, {"t", false}, {"upper_bound", false}};
    for (unsigned i = 0; i < t_steps; ++i) {
        const double t = 1.0 + static_cast<double>(i) / t_steps;
        const ClosedBoundCoefficients k = closed_bound_coefficients(t, field);
        curves.rows.push_back({t, k.p, k.c, k.r});
        for (std::uint64_t n = 2; n <= n_max; ++n)
            surface.rows.push_back({static_cast<double>(n), t, closed_bound(n, t, field)});
    }

    if (out.format == OutputFormat::Json) {
        Json doc = {{"figure", name},
                    {"scalars", to_string(field)},
                    {"t_steps", t_steps},
                    {"n_max", n_max},
                    {"curves", to_json(curves, out.precision)},
                    {"surface", to_json(surface, out.precision)}};
        write_output(out, doc.dump(2) + "\n", os);
        return kExitOk;
    }
    const std::string a = to_csv(curves, out.precision);
    const std::string b = to_csv(surface, out.precision);
    if (out.path.empty() || out.path == "-") {
        write_output(out, a + "\n" + b, os);
    } else {
        write_file_atomic(out.path, a);
        write_file_atomic(surface_path(out.path), b);
    }
    return kExitOk;
}

int cmd_experiment(const ExperimentRequest& req, const OutputSpec& out, std::ostream& os)
{
    out.validate();
    require_json(out, "experiment");
    ExperimentReport report;
    if (req.kind == "ratio") {
        report = ratio_experiment(req);
    } else if (req.kind == "ksz") {
        KszParams p;
        p.m = req.m;
        p.n = req.n_list.empty() ? 2 : req.n_list.front();
        if (req.n_list.size() > 1)
            throw DomainError("ksz takes a single --n");
        p.seed = req.seed;
        p.trials = req.trials ? req.trials : p.trials;
        p.mode = mode_from_string(req.mode, DivergenceMode::ComplexPolynomial);
        p.restarts = req.restarts;
        report = ksz_experiment(p);
    } else if (req.kind == "divergence") {
        DivergenceParams p;
        p.m = req.m;
        p.q = req.q > 0.0 ? req.q : p.q;
        if (!req.n_list.empty())
            p.n_list = req.n_list;
        p.seed = req.seed;
        p.trials = req.trials ? req.trials : p.trials;
        p.mode = mode_from_string(req.mode, DivergenceMode::RealMultilinear);
        p.restarts = req.restarts;
        report = divergence_experiment(p);
    } else {
        throw DomainError("unknown experiment '" + req.kind + "' (expected ratio, ksz or divergence)");
    }
    emit_report(report, out, os);
    return kExitOk;
}

namespace {

constexpr const char* kFamilyHelp =
    "C: Khinchine recursion constants; S: recursion with every factor replaced by the limit ratio D (t = 1); "
    "M: block majorant base*D^{k-1} on B_k (t = 1); R: M interpolated linearly across each block; "
    "closed: c(t)(n-1)^{r(t)} + p(t); partial: 1 + a*sum_{j<n} j^b; diff: step bound a*n^b; "
    "lower: 2^{(n-1)(2-t)/(nt)} (real only)";

struct OutputFlags {
    std::string format = "csv";
    std::string path;
    int precision = kDefaultPrecision;

    void attach(CLI::App* app, const char* default_format)
    {
        format = default_format;
        app->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        app->add_option("--out", path, "Destination file (default: standard output)");
        app->add_option("--precision", precision, "Significant digits, 6..17")->capture_default_str();
    }

    OutputSpec spec() const
    {
        OutputSpec s;
        s.format = output_format_from_string(format);
        s.path = path;
        s.precision = precision;
        return s;
    }
};

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Bohnenblust-Hille constant sequences, bounds, norm oracles and KSZ experiments", "bhconst"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "bhconst 1.0.0");

    auto* constants = app.add_subcommand("constants", "Tabulate a constant family for n = first..n_max");
    std::string family = "C";
    std::string scalars = "real";
    double t = 1.0;
    std::uint64_t n_max = 0;
    OutputFlags constants_out;
    constants->add_option("--family", family, kFamilyHelp)->capture_default_str();
    constants->add_option("--scalars", scalars, "real or complex")->capture_default_str();
    constants->add_option("--t", t, "Continuum parameter in [1, 2)")->capture_default_str();
    constants->add_option("--n-max", n_max, "Last index")->required();
    constants_out.attach(constants, "csv");

    auto* verify = app.add_subcommand("verify", "Run a verification suite; exit 1 if any check fails");
    std::string suite;
    std::uint64_t verify_n_max = 1000;
    OutputFlags verify_out;
    verify->add_option("suite", suite,
                       "monotonicity | sandwich | reduction | fundamental-lemma | block-ratios | ksz-exhaustive")
        ->required();
    verify->add_option("--n-max", verify_n_max, "Largest index checked")->capture_default_str();
    verify_out.attach(verify, "json");

    auto* figure = app.add_subcommand("figure", "Emit plot data for the closed-bound coefficients");
    std::string figure_name;
    unsigned t_steps = kDefaultTSteps;
    std::uint64_t figure_n_max = kDefaultFigureNMax;
    OutputFlags figure_out;
    figure->add_option("name", figure_name, "pcr (real) or pcrx (complex)")->required();
    figure->add_option("--t-steps", t_steps, "Grid points on [1, 2)")->capture_default_str();
    figure->add_option("--n-max", figure_n_max, "Last n of the bound surface")->capture_default_str();
    figure_out.attach(figure, "csv");

    auto* experiment = app.add_subcommand("experiment", "Norm-ratio and random Bernoulli polynomial experiments");
    ExperimentRequest req;
    OutputFlags experiment_out;
    experiment->add_option("kind", req.kind, "ratio | ksz | divergence")->required();
    experiment->add_option("--m", req.m, "Degree")->capture_default_str();
    experiment->add_option("--n", req.n_list, "Variable count(s), comma separated")->delimiter(',');
    experiment->add_option("--q", req.q, "Coefficient exponent (default 2m/(m+1) for ratio, 1.2 for divergence)");
    experiment->add_option("--dims", req.dims, "ratio: random Bernoulli form with these dimensions")
        ->delimiter(',');
    experiment->add_option("--form", req.form_path, "ratio: JSON form or polynomial file");
    experiment->add_option("--seed", req.seed, "Random seed")->capture_default_str();
    experiment->add_option("--trials", req.trials, "Random instances per n (default 100 ksz, 64 divergence)");
    experiment->add_option("--mode", req.mode, "real (exact multilinear) or complex (polynomial, torus estimate)")
        ->check(CLI::IsMember({"real", "complex"}));
    experiment->add_option("--restarts", req.restarts, "Torus ascent restarts")->capture_default_str();
    experiment_out.attach(experiment, "json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, x;
        const int code = app.exit(e, o, x);
        out << o.str();
        err << x.str();
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*constants) {
            SequenceSpec spec;
            spec.family = family_from_string(family);
            spec.scalar_field = scalar_field_from_string(scalars);
            spec.t = t;
            return cmd_constants(spec, n_max, constants_out.spec(), out);
        }
        if (*verify)
            return cmd_verify(suite, verify_n_max, verify_out.spec(), out);
        if (*figure)
            return cmd_figure(figure_name, t_steps, figure_n_max, figure_out.spec(), out);
        return cmd_experiment(req, experiment_out.spec(), out);
    } catch (const IoError& e) {
        err << "bhconst: " << e.what() << "\n";
        return kExitIo;
    } catch (const CapacityError& e) {
        err << "bhconst: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const OverflowError& e) {
        err << "bhconst: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const std::exception& e) {
        err << "bhconst: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace bhc
