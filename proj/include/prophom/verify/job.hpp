#pragma once

#include <prophom/core/rational.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace prophom::verify {

inline constexpr const char* version = "0.1.0";

/// Raised for unknown claims, missing or malformed parameters and over-cap requests (exit status 2).
class InvalidJob : public Error
{
public:
    using Error::Error;
};

struct Limits
{
    int max_letters = 10;  // z + N + p' + q, or the letter count the claim actually uses
    int max_n = 8;         // symmetric-group degree for character computations
};

struct JobParams
{
    std::optional<int> z, N, q, n, eps, epsp, pmin, pmax;
    std::optional<std::string> sigma;
};

struct Job
{
    std::string claim;
    JobParams params;
};

inline const std::vector<std::string>& claim_ids()
{
    static const std::vector<std::string> ids{"lemma34",     "assoc-wedge", "koszul",         "elementary",
                                              "poisson-graded", "pbw-filtration", "dynkin",    "sigma-split",
                                              "a-e-factorization", "kunneth-c", "c-acyclic", "a-acyclic", "dims"};
    return ids;
}

namespace detail {

inline int need(const std::optional<int>& v, const char* name, const std::string& claim)
{
    if (!v)
        throw InvalidJob(claim + ": missing --" + name);
    return *v;
}

inline void fill(std::optional<int>& v, int value)
{
    if (!v)
        v = value;
}

inline void bit(const std::optional<int>& v, const char* name)
{
    if (*v != 0 && *v != 1)
        throw InvalidJob(std::string("--") + name + " must be 0 or 1");
}

inline void at_least(const std::optional<int>& v, int lo, const char* name)
{
    if (*v < lo)
        throw InvalidJob(std::string("--") + name + " must be at least " + std::to_string(lo));
}

inline void cap(int used, int limit, const std::string& what)
{
    if (used > limit)
        throw InvalidJob(what + " = " + std::to_string(used) + " exceeds the cap of " + std::to_string(limit));
}

}  // namespace detail

/**
 * Fills defaults, drops parameters the claim does not use and enforces the caps.
 * The result is the canonical form that is echoed and hashed.
 */
inline Job normalize(const Job& job, const Limits& limits = {})
{
    using namespace detail;
    const std::string& c = job.claim;
    const JobParams& in = job.params;
    JobParams out;
    auto letters = [&](int used) { cap(used, limits.max_letters, "letter count"); };
    if (c == "lemma34" || c == "assoc-wedge") {
        out.z = need(in.z, "z", c);
        at_least(out.z, 1, "z");
        letters(*out.z);
    } else if (c == "koszul") {
        out.n = need(in.n, "n", c);
        at_least(out.n, 1, "n");
        letters(*out.n);
    } else if (c == "elementary" || c == "poisson-graded" || c == "pbw-filtration") {
        out.eps = need(in.eps, "eps", c);
        out.epsp = need(in.epsp, "epsp", c);
        bit(out.eps, "eps");
        bit(out.epsp, "epsp");
        out.pmax = in.pmax ? *in.pmax : (c == "elementary" ? 6 : 4);
        at_least(out.pmax, 0, "pmax");
        letters(*out.pmax);
        if (c == "poisson-graded")
            cap(*out.pmax + 1, limits.max_n, "n");
    } else if (c == "dynkin" || c == "sigma-split" || c == "a-acyclic" || c == "a-e-factorization" ||
               c == "c-acyclic" || c == "kunneth-c") {
        out.z = need(in.z, "z", c);
        out.N = in.N ? *in.N : 0;
        at_least(out.z, 1, "z");
        at_least(out.N, 0, "N");
        if (c == "c-acyclic" || c == "kunneth-c") {
            out.q = in.q ? *in.q : (c == "kunneth-c" ? 2 : 1);
            at_least(out.q, 1, "q");
            if (*out.q > 3)
                throw InvalidJob("--q = " + std::to_string(*out.q) + " exceeds the cap of 3");
        }
        const bool from_zero = c == "a-e-factorization" || c == "kunneth-c";
        out.pmin = from_zero ? 0 : (in.pmin ? *in.pmin : 0);
        if (from_zero && in.pmin && *in.pmin != 0)
            throw InvalidJob(c + ": the window starts at p' = 0");
        out.pmax = in.pmax ? *in.pmax : (c == "kunneth-c" ? 2 : 4);
        at_least(out.pmin, 0, "pmin");
        if (*out.pmax < *out.pmin)
            throw InvalidJob("--pmax must be at least --pmin");
        letters(*out.z + *out.N + *out.pmax + (out.q ? *out.q : 1));
        if (c == "a-e-factorization" && in.sigma)
            out.sigma = *in.sigma;
    } else if (c == "dims") {
        out.z = need(in.z, "z", c);
        out.N = in.N ? *in.N : 0;
        out.q = in.q ? *in.q : 1;
        out.pmax = in.pmax ? *in.pmax : 2;
        at_least(out.z, 1, "z");
        at_least(out.N, 0, "N");
        at_least(out.q, 1, "q");
        at_least(out.pmax, 0, "pmax");
        if (*out.q > 3)
            throw InvalidJob("--q = " + std::to_string(*out.q) + " exceeds the cap of 3");
        letters(*out.z);
        letters(*out.z + *out.N + *out.pmax + *out.q);
    } else {
        throw InvalidJob("unknown claim: " + c);
    }
    return {c, out};
}

inline nlohmann::ordered_json params_json(const JobParams& p)
{
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    auto put = [&](const char* k, const std::optional<int>& v) {
        if (v)
            j[k] = *v;
    };
    put("z", p.z);
    put("N", p.N);
    put("q", p.q);
    put("n", p.n);
    put("eps", p.eps);
    put("epsp", p.epsp);
    put("pmin", p.pmin);
    put("pmax", p.pmax);
    if (p.sigma)
        j["sigma"] = *p.sigma;
    return j;
}

inline JobParams params_from_json(const nlohmann::ordered_json& j)
{
    JobParams p;
    auto get = [&](const char* k, std::optional<int>& v) {
        if (j.contains(k))
            v = j.at(k).get<int>();
    };
    get("z", p.z);
    get("N", p.N);
    get("q", p.q);
    get("n", p.n);
    get("eps", p.eps);
    get("epsp", p.epsp);
    get("pmin", p.pmin);
    get("pmax", p.pmax);
    if (j.contains("sigma"))
        p.sigma = j.at("sigma").get<std::string>();
    return p;
}

}  // namespace prophom::verify
