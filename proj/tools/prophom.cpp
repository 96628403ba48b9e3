#include <prophom/prophom.hpp>
#include <prophom/verify/suite.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace prophom;
using verify::InvalidJob;

struct Flags
{
    verify::JobParams params;
    int jobs = 1;
    std::string cache;
    std::string out;
    std::string format = "json";
    verify::Limits limits;
};

void add_param(CLI::App* app, const std::string& name, std::optional<int>& slot, const std::string& help)
{
    app->add_option_function<int>("--" + name, [&slot](int v) { slot = v; }, help);
}

void add_job_flags(CLI::App* app, Flags& f)
{
    add_param(app, "z", f.params.z, "number of bracketed inputs z");
    add_param(app, "N", f.params.N, "number of extra inputs N");
    add_param(app, "q", f.params.q, "number of Lie outputs q");
    add_param(app, "n", f.params.n, "letter count for the Koszul slice");
    add_param(app, "eps", f.params.eps, "first bit of an elementary complex");
    add_param(app, "epsp", f.params.epsp, "second bit of an elementary complex");
    add_param(app, "pmin", f.params.pmin, "lowest window degree");
    add_param(app, "pmax", f.params.pmax, "highest window degree");
    app->add_option_function<std::string>("--sigma", [&f](const std::string& s) { f.params.sigma = s; },
                                          "permutation of [1, z+N] fixing 1, in cycle notation");
}

void add_output_flags(CLI::App* app, Flags& f, bool with_format)
{
    app->add_option("--jobs", f.jobs, "worker threads")->check(CLI::PositiveNumber);
    app->add_option("--cache", f.cache, "cache directory (overridden by PROP_HOMOLOGY_CACHE)");
    app->add_option("--out", f.out, "output file (default stdout)");
    if (with_format)
        app->add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app->add_option("--max-letters", f.limits.max_letters, "cap on the letter count of a job");
    app->add_option("--max-n", f.limits.max_n, "cap on symmetric-group degrees");
}

void emit(const Flags& f, const std::string& text)
{
    if (f.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(f.out, std::ios::binary | std::ios::trunc);
    if (!os)
        throw InvalidJob("cannot open " + f.out);
    os << text;
}

std::string render(const Flags& f, const std::vector<verify::Report>& reports, bool single)
{
    if (f.format == "csv") {
        std::string s = verify::csv_header();
        for (const auto& r : reports)
            s += verify::to_csv_rows(r);
        return s;
    }
    if (single)
        return verify::to_json(reports.front()).dump(2) + "\n";
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports)
        arr.push_back(verify::to_json(r));
    return arr.dump(2) + "\n";
}

verify::RunOptions options(const Flags& f)
{
    return {f.jobs, verify::resolve_cache_dir(f.cache), f.limits};
}

int summarize(const std::vector<verify::Report>& reports)
{
    bool failed = false;
    for (const auto& r : reports) {
        std::cerr << (r.failed() ? "FAIL " : r.verdict == "pass" ? "PASS " : "INCOMPLETE ") << r.claim << ' '
                  << verify::params_json(r.params).dump() << ' ' << static_cast<long>(r.elapsed_ms) << "ms\n";
        for (const auto& c : r.checks)
            if (!c.ok)
                std::cerr << "    failed: " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << '\n';
        failed = failed || r.failed();
    }
    return failed ? 1 : 0;
}

int need(const std::optional<int>& v, const char* name)
{
    if (!v)
        throw InvalidJob(std::string("missing --") + name);
    return *v;
}

exactlin::ComplexWindow build_for_dump(const std::string& what, const verify::JobParams& p)
{
    using namespace complexes;
    if (what == "chevalley-wedge")
        return build_chevalley_wedge(need(p.z, "z"));
    if (what == "assoc-wedge")
        return build_assoc_wedge(need(p.z, "z"));
    if (what == "koszul")
        return build_koszul_multilinear(need(p.n, "n"));
    if (what == "C")
        return build_C(need(p.z, "z"), p.N.value_or(0), p.q.value_or(1), p.pmin.value_or(0), need(p.pmax, "pmax"));
    if (what == "A")
        return build_A(need(p.z, "z"), p.N.value_or(0), p.pmin.value_or(0), need(p.pmax, "pmax"));
    if (what == "elementary")
        return elementary_window(build_elementary(need(p.eps, "eps"), need(p.epsp, "epsp"), need(p.pmax, "pmax")));
    if (what == "poisson")
        return build_poisson_graded(need(p.eps, "eps"), need(p.epsp, "epsp"), need(p.pmax, "pmax")).window;
    throw InvalidJob("unknown complex: " + what);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of the prop homology computations"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(verify::version));

    Flags f;
    std::string claim, suite_name, complex_name;
    int chartable_n = 0;

    auto* run = app.add_subcommand("run", "verify one claim");
    run->add_option("claim", claim, "claim id")->required()->check(CLI::IsMember(verify::claim_ids()));
    add_job_flags(run, f);
    add_output_flags(run, f, true);

    auto* suite = app.add_subcommand("suite", "run a battery of claims");
    suite->add_option("name", suite_name, "smoke or full")->required()->check(CLI::IsMember({"smoke", "full"}));
    add_output_flags(suite, f, true);

    auto* chartable = app.add_subcommand("chartable", "character table of S_n as CSV");
    chartable->add_option("n", chartable_n, "degree")->required()->check(CLI::PositiveNumber);
    chartable->add_option("--out", f.out, "output file (default stdout)");
    chartable->add_option("--max-n", f.limits.max_n, "cap on symmetric-group degrees");

    auto* dump = app.add_subcommand("dump", "print the bases and matrices of a complex");
    dump->add_option("complex", complex_name, "chevalley-wedge, assoc-wedge, koszul, C, A, elementary or poisson")
        ->required();
    add_job_flags(dump, f);
    dump->add_option("--out", f.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*run) {
            auto reports = std::vector<verify::Report>{verify::run({claim, f.params}, options(f))};
            emit(f, render(f, reports, true));
            return summarize(reports);
        }
        if (*suite) {
            auto reports = verify::run_suite(verify::suite_jobs(suite_name), options(f));
            emit(f, render(f, reports, false));
            return summarize(reports);
        }
        if (*chartable) {
            if (chartable_n > f.limits.max_n)
                throw InvalidJob("n = " + std::to_string(chartable_n) + " exceeds the cap of " +
                                 std::to_string(f.limits.max_n));
            emit(f, symgrp::character_table(chartable_n, f.limits.max_n)->to_csv());
            return 0;
        }
        if (*dump) {
            std::ostringstream os;
            exactlin::write_window(os, build_for_dump(complex_name, f.params));
            emit(f, os.str());
            return 0;
        }
    } catch (const InvalidJob& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
