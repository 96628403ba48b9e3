#include <catch_amalgamated.hpp>

#include <prophom/verify/suite.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

using namespace prophom;
using namespace prophom::verify;

namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name)
{
    auto dir = fs::temp_directory_path() / ("prophom_test_" + name);
    fs::remove_all(dir);
    return dir;
}

std::string body(const Report& r) { return to_json(r, false).dump(); }

bool check_ok(const Report& r, const std::string& name)
{
    for (const auto& c : r.checks)
        if (c.name == name)
            return c.ok;
    return false;
}

int cli(const std::string& args)
{
    const std::string cmd = std::string(PROPHOM_CLI) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("normalize fills defaults and enforces caps")
{
    auto j = normalize({"elementary", {.eps = 0, .epsp = 1}});
    CHECK(*j.params.pmax == 6);
    CHECK_FALSE(j.params.z);

    auto d = normalize({"dynkin", {.z = 2, .q = 3}});
    CHECK(*d.params.N == 0);
    CHECK(*d.params.pmin == 0);
    CHECK(*d.params.pmax == 4);
    CHECK_FALSE(d.params.q);  // unused by the claim, dropped

    CHECK_THROWS_WITH(normalize({"c-acyclic", {.z = 3, .N = 3, .pmax = 4}}),
                      Catch::Matchers::ContainsSubstring("cap of 10"));
    CHECK_THROWS_WITH(normalize({"poisson-graded", {.eps = 0, .epsp = 0, .pmax = 8}}),
                      Catch::Matchers::ContainsSubstring("cap of 8"));
    CHECK_NOTHROW(normalize({"poisson-graded", {.eps = 0, .epsp = 0, .pmax = 8}}, {.max_letters = 10, .max_n = 9}));
    CHECK_THROWS_AS(normalize({"nope", {}}), InvalidJob);
    CHECK_THROWS_WITH(normalize({"lemma34", {}}), Catch::Matchers::ContainsSubstring("missing --z"));
    CHECK_THROWS_AS(normalize({"elementary", {.eps = 2, .epsp = 0}}), InvalidJob);
    CHECK_THROWS_AS(normalize({"kunneth-c", {.z = 1, .q = 4}}), InvalidJob);
    CHECK_THROWS_AS(run({"koszul", {.n = 11}}), InvalidJob);
}

TEST_CASE("run: worked examples")
{
    auto r = run({"lemma34", {.z = 3}});
    CHECK(r.verdict == "pass");
    for (const auto& d : r.degrees)
        CHECK(d.betti == 0);

    auto e = run({"elementary", {.eps = 0, .epsp = 0, .pmax = 6}});
    CHECK(e.verdict == "pass");
    REQUIRE_FALSE(e.degrees.empty());
    CHECK(e.degrees.front().betti == 1);
    CHECK(e.degrees.front().complete);

    CHECK(run({"koszul", {.n = 2}}).verdict == "pass");

    auto f = run({"a-e-factorization", {.z = 2, .N = 1, .pmax = 3, .sigma = "(2 3)"}});
    CHECK(f.verdict == "pass");
    CHECK(check_ok(f, "sigma=(2 3) chain isomorphism"));
    CHECK_THROWS_AS(run({"a-e-factorization", {.z = 2, .N = 1, .pmax = 3, .sigma = "(1 2)"}}), InvalidJob);
}

TEST_CASE("verdict is incomplete without any complete degree")
{
    auto r = run({"elementary", {.eps = 0, .epsp = 1, .pmax = 0}});
    CHECK(r.verdict == "incomplete");
    CHECK_FALSE(r.failed());
}

TEST_CASE("reports are deterministic and follow the schema")
{
    Job job{"dynkin", {.z = 1, .N = 1, .pmax = 3}};
    auto a = run(job, {.jobs = 1});
    auto b = run(job, {.jobs = 3});
    CHECK(body(a) == body(b));
    auto j = to_json(a);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it)
        keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"claim", "params", "degrees", "checks", "verdict", "elapsed_ms", "version",
                                           "input_hash"});
    CHECK(a.input_hash.size() == 64);
    CHECK(a.input_hash == input_hash(normalize(job)));
    CHECK(report_from_json(nlohmann::ordered_json::parse(to_json(a).dump())).checks == a.checks);
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("cache: warm and cold runs agree")
{
    auto dir = fresh_dir("cache");
    Job job{"c-acyclic", {.z = 1, .N = 1, .pmax = 3}};
    auto cold = run(job, {.cache_dir = dir.string()});
    CHECK(fs::exists(dir / (cold.input_hash + ".json")));
    CHECK(fs::exists(dir / (cold.input_hash + ".window")));
    auto warm = run(job, {.cache_dir = dir.string()});
    CHECK(body(cold) == body(warm));
    for (const auto& entry : fs::directory_iterator(dir))
        CHECK(entry.path().string().find(".tmp.") == std::string::npos);

    // a damaged entry is recomputed
    {
        std::ofstream(dir / (cold.input_hash + ".json")) << "{not json";
    }
    CHECK(body(run(job, {.cache_dir = dir.string()})) == body(cold));
    fs::remove_all(dir);
}

TEST_CASE("cache directory from the environment wins")
{
    auto dir = fresh_dir("env");
    ::setenv(cache_env, dir.string().c_str(), 1);
    CHECK(resolve_cache_dir("/somewhere/else") == dir.string());
    ::unsetenv(cache_env);
    CHECK(resolve_cache_dir("/somewhere/else") == "/somewhere/else");
    CHECK(resolve_cache_dir("").empty());
}

TEST_CASE("suite smoke passes with a worker pool")
{
    auto jobs = suite_jobs("smoke");
    auto reports = run_suite(jobs, {.jobs = 4});
    REQUIRE(reports.size() == jobs.size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        INFO(reports[i].claim << " " << params_json(reports[i].params).dump());
        CHECK(reports[i].claim == jobs[i].claim);
        CHECK_FALSE(reports[i].failed());
    }
    std::set<std::string> claims;
    for (const auto& j : jobs)
        claims.insert(j.claim);
    CHECK(claims.size() == claim_ids().size());
    CHECK_THROWS_AS(suite_jobs("huge"), InvalidJob);
}

TEST_CASE("property: repeated runs are byte-identical", "[property]")
{
    auto dir = fresh_dir("repeat");
    auto jobs = suite_jobs("smoke");
    auto first = run_suite(jobs, {.jobs = 2, .cache_dir = dir.string()});
    auto second = run_suite(jobs, {.jobs = 4, .cache_dir = dir.string()});
    auto third = run_suite(jobs, {.jobs = 1});
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        CHECK(body(first[i]) == body(second[i]));
        CHECK(body(first[i]) == body(third[i]));
    }
    fs::remove_all(dir);
}

TEST_CASE("cli exit codes")
{
    CHECK(cli("run lemma34 --z 2") == 0);
    CHECK(cli("run elementary --eps 1 --epsp 0 --pmax 4 --format csv") == 0);
    CHECK(cli("run koszul --n 40") == 2);
    CHECK(cli("run lemma34") == 2);
    CHECK(cli("run nonsense --z 1") == 2);
    CHECK(cli("frobnicate") == 2);
    CHECK(cli("run lemma34 --z 2 --format xml") == 2);
    CHECK(cli("chartable 4") == 0);
    CHECK(cli("chartable 12") == 2);
    CHECK(cli("dump C --z 1 --N 1 --pmax 2") == 0);
    CHECK(cli("dump D --z 1") == 2);

    auto out = fs::temp_directory_path() / "prophom_test_cli.json";
    REQUIRE(cli("run koszul --n 3 --out " + out.string()) == 0);
    std::ifstream in(out);
    auto j = nlohmann::ordered_json::parse(in);
    CHECK(j.at("verdict") == "pass");
    fs::remove(out);
}
