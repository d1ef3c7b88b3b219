// Command-line front end: run-catalog, verify, sweep, specfun-eval, residues.
// Exit status: 0 when everything run passes, 1 on a verification failure,
// 2 on a configuration error.

#include <glasser/runner.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace glasser;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_config = 2;

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct common_options {
    double tolerance = 1e-6;
    std::string format = "json";
    std::string out;
    int jobs = default_jobs();
    unsigned seed = verify_settings{}.seed;
    bool no_timing = false;
};

void add_common(CLI::App* cmd, common_options& o)
{
    cmd->add_option("--tolerance", o.tolerance, "relative residual allowed")->check(CLI::PositiveNumber);
    cmd->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", o.out, "write the report here instead of stdout");
    cmd->add_option("--jobs", o.jobs, "worker threads (default from GLASSER_JOBS)")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed, "seed for the criterion sample points");
    cmd->add_flag("--no-timing", o.no_timing, "report seconds as 0 for byte-stable output");
}

verify_settings settings_from(const common_options& o)
{
    verify_settings vs;
    vs.tolerance = o.tolerance;
    vs.seed = o.seed;
    return vs;
}

void write_output(const std::string& text, const std::string& path)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f)
        throw config_error("cannot open '" + path + "' for writing");
    f << text;
}

/// name=value pairs from repeated --param options.
param_map parse_overrides(const std::vector<std::string>& items, std::string* sweep_name = nullptr)
{
    param_map out;
    for (const std::string& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            if (sweep_name == nullptr || !sweep_name->empty())
                throw config_error("--param '" + item + "' needs the form name=value");
            *sweep_name = item;
            continue;
        }
        try {
            out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw config_error("--param '" + item + "': value is not a number");
        }
    }
    return out;
}

std::vector<double> parse_values(const std::string& list)
{
    std::vector<double> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw config_error("--values: '" + item + "' is not a number");
        }
    }
    if (out.empty())
        throw config_error("--values is empty");
    return out;
}

std::vector<catalog_entry> select_suite(const std::string& suite)
{
    if (suite == "all")
        return catalog();
    if (suite == "headline")
        return headline_suite();
    if (suite.rfind("family:", 0) == 0)
        return family_suite(suite.substr(7));
    throw config_error("unknown suite '" + suite + "'");
}

int finish(const std::vector<labelled_report>& reports, const common_options& o)
{
    write_output(emit_reports(reports, parse_format(o.format)), o.out);
    return all_pass(reports) ? exit_ok : exit_failure;
}

std::string complex_json(cplx z)
{
    return "{\"re\":" + detail::number(z.real()) + ",\"im\":" + detail::number(z.imag()) + "}";
}

int specfun_eval(const std::string& fn, const std::vector<double>& s, int order, double w, const common_options& o)
{
    if (s.empty() || s.size() > 2)
        throw config_error("--s takes re or re,im");
    const cplx z(s[0], s.size() == 2 ? s[1] : 0.0);
    cplx value;
    double error = 0.0;
    if (fn == "zeta")
        value = riemann_zeta(z);
    else if (fn == "zeta_prime")
        value = zeta_prime(z);
    else if (fn == "zeta_derivative") {
        const estimate e = zeta_derivative(z, order);
        value = e.value;
        error = e.error;
    } else if (fn == "hurwitz")
        value = hurwitz_zeta(z, w);
    else if (fn == "gamma")
        value = gamma(z);
    else if (fn == "log_gamma")
        value = log_gamma(z);
    else if (fn == "xi")
        value = xi(z);
    else if (fn == "upsilon")
        value = upsilon(z);
    else if (fn == "stieltjes")
        value = stieltjes_constant(order);
    else if (fn == "euler")
        value = static_cast<double>(euler_number(order));
    else
        throw config_error("unknown function '" + fn + "'");

    std::string text;
    if (o.format == "json")
        text = "{\"function\":" + detail::quoted(fn) + ",\"s\":" + complex_json(z) +
               ",\"order\":" + std::to_string(order) + ",\"w\":" + detail::number(w) +
               ",\"value\":" + complex_json(value) + ",\"err\":" + detail::number(error) + "}\n";
    else if (o.format == "csv")
        text = "function,s_re,s_im,order,w,value_re,value_im,err\n" + fn + "," + detail::number(z.real()) + "," +
               detail::number(z.imag()) + "," + std::to_string(order) + "," + detail::number(w) + "," +
               detail::number(value.real()) + "," + detail::number(value.imag()) + "," + detail::number(error) + "\n";
    else
        text = fn + "(" + detail::number(z.real()) + " + " + detail::number(z.imag()) + "i) = " +
               detail::number(value.real()) + " + " + detail::number(value.imag()) + "i\n";
    write_output(text, o.out);
    return exit_ok;
}

int residues_command(const catalog_entry& e, const param_map& overrides, const common_options& o)
{
    const identity idn = e.bind(overrides);
    if (!idn.theorem)
        throw config_error(e.id + " has no pole catalogue");
    const theorem_spec& t = *idn.theorem;
    const std::vector<cplx> numeric = numeric_residues(t.F, t.poles, t.avoid);
    std::ostringstream out;
    if (o.format == "json") {
        out << "{\"id\":" << detail::quoted(e.id) << ",\"b\":" << detail::number(t.b) << ",\"poles\":[";
        for (std::size_t i = 0; i < t.poles.size(); ++i) {
            const pole_spec& p = t.poles[i];
            out << (i ? "," : "") << "{\"location\":" << complex_json(p.location) << ",\"order\":" << p.order
                << ",\"weight\":" << detail::number(p.boundary_weight) << ",\"residue\":" << complex_json(numeric[i])
                << ",\"analytic\":" << (p.analytic_residue ? complex_json(*p.analytic_residue) : "null") << "}";
        }
        out << "],\"rhs\":" << complex_json(theorem_rhs(t)) << "}\n";
    } else {
        const bool csv = o.format == "csv";
        out << (csv ? "location_re,location_im,order,weight,residue_re,residue_im\n"
                    : "location                         order weight residue\n");
        for (std::size_t i = 0; i < t.poles.size(); ++i) {
            const pole_spec& p = t.poles[i];
            const cplx loc = p.location;
            if (csv)
                out << detail::number(loc.real()) << "," << detail::number(loc.imag()) << "," << p.order << ","
                    << detail::number(p.boundary_weight) << "," << detail::number(numeric[i].real()) << ","
                    << detail::number(numeric[i].imag()) << "\n";
            else
                out << detail::number(loc.real()) << " + " << detail::number(loc.imag()) << "i  " << p.order << "  "
                    << p.boundary_weight << "  " << detail::number(numeric[i].real()) << " + "
                    << detail::number(numeric[i].imag()) << "i\n";
        }
        if (!csv)
            out << "rhs = " << detail::number(theorem_rhs(t).real()) << " + "
                << detail::number(theorem_rhs(t).imag()) << "i\n";
    }
    write_output(out.str(), o.out);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Verify strip-theorem integral identities against closed forms and residue sums"};
    app.require_subcommand(1);

    common_options o;
    std::string suite = "all", entry, values, function = "zeta";
    std::vector<std::string> params;
    std::vector<double> s_value;
    int order = 0;
    double w = 1.0;
    bool list = false;

    CLI::App* run = app.add_subcommand("run-catalog", "verify a suite of catalogue entries");
    run->add_option("--suite", suite, "headline, all or family:<name>");
    run->add_flag("--list", list, "print the catalogue entries as JSON instead of running them");
    add_common(run, o);

    CLI::App* ver = app.add_subcommand("verify", "verify one entry");
    ver->add_option("--entry", entry, "catalogue id")->required();
    ver->add_option("--param", params, "parameter override name=value (repeatable)");
    add_common(ver, o);

    CLI::App* sweep = app.add_subcommand("sweep", "verify one entry over a list of parameter values");
    sweep->add_option("--entry", entry, "catalogue id")->required();
    sweep->add_option("--param", params, "swept parameter name, plus fixed name=value overrides")->required();
    sweep->add_option("--values", values, "comma-separated values")->required();
    add_common(sweep, o);

    CLI::App* sf = app.add_subcommand("specfun-eval", "evaluate a special function");
    sf->add_option("--function", function,
                   "zeta, zeta_prime, zeta_derivative, hurwitz, gamma, log_gamma, xi, upsilon, stieltjes, euler");
    sf->add_option("--s", s_value, "argument: re or re,im")->delimiter(',');
    sf->add_option("--order", order, "derivative order, Stieltjes index or Euler index");
    sf->add_option("--w", w, "Hurwitz shift");
    add_common(sf, o);

    CLI::App* res = app.add_subcommand("residues", "list the poles and residues of an entry's theorem function");
    res->add_option("--entry", entry, "catalogue id")->required();
    res->add_option("--param", params, "parameter override name=value (repeatable)");
    add_common(res, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_config;
    }

    try {
        const verify_settings vs = settings_from(o);
        if (*run) {
            const std::vector<catalog_entry> entries = select_suite(suite);
            if (list) {
                write_output(catalog_json(entries), o.out);
                return exit_ok;
            }
            std::vector<run_task> tasks;
            for (const catalog_entry& e : entries)
                tasks.push_back(make_task(e));
            return finish(run_tasks(tasks, vs, o.jobs, !o.no_timing), o);
        }
        if (*ver) {
            const std::vector<run_task> tasks = {make_task(find_entry(entry), parse_overrides(params))};
            return finish(run_tasks(tasks, vs, 1, !o.no_timing), o);
        }
        if (*sweep) {
            std::string name;
            const param_map fixed = parse_overrides(params, &name);
            if (name.empty())
                throw config_error("sweep needs one --param without a value");
            const catalog_entry& e = find_entry(entry);
            std::vector<run_task> tasks;
            for (double v : parse_values(values)) {
                param_map p = fixed;
                p[name] = v;
                tasks.push_back(make_task(e, p));
            }
            return finish(run_tasks(tasks, vs, o.jobs, !o.no_timing), o);
        }
        if (*sf)
            return specfun_eval(function, s_value, order, w, o);
        if (*res)
            return residues_command(find_entry(entry), parse_overrides(params), o);
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_config;
}
