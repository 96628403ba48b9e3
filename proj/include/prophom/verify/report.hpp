#pragma once

#include <prophom/exactlin/homology.hpp>
#include <prophom/verify/job.hpp>

#include <openssl/evp.h>

#include <sstream>

namespace prophom::verify {

struct DegreeRow
{
    int p = 0;
    std::size_t dim = 0;
    std::size_t rank_in = 0;
    std::size_t rank_out = 0;
    std::size_t betti = 0;
    bool complete = false;
    bool operator==(const DegreeRow&) const = default;
};

struct Check
{
    std::string name;
    bool ok = false;
    std::string detail;
    bool operator==(const Check&) const = default;
};

struct Report
{
    std::string claim;
    JobParams params;
    std::vector<DegreeRow> degrees;
    std::vector<Check> checks;
    std::string verdict;  // pass, fail or incomplete
    double elapsed_ms = 0;
    std::string version = verify::version;
    std::string input_hash;

    bool failed() const { return verdict == "fail"; }
};

inline std::vector<DegreeRow> degree_rows(const exactlin::HomologyProfile& h)
{
    std::vector<DegreeRow> rows;
    for (const auto& d : h.degrees)
        rows.push_back({d.p, d.dim, d.rank_in, d.rank_out, d.betti, d.complete});
    return rows;
}

inline std::string sha256_hex(const std::string& data)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw Error("sha256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

/// Hash of the canonical job echo and the tool version.
inline std::string input_hash(const Job& normalized)
{
    nlohmann::ordered_json j;
    j["claim"] = normalized.claim;
    j["params"] = params_json(normalized.params);
    j["version"] = version;
    return sha256_hex(j.dump());
}

/// Report as JSON; elapsed_ms is the only field that varies between identical runs.
inline nlohmann::ordered_json to_json(const Report& r, bool with_timing = true)
{
    nlohmann::ordered_json j;
    j["claim"] = r.claim;
    j["params"] = params_json(r.params);
    j["degrees"] = nlohmann::ordered_json::array();
    for (const auto& d : r.degrees)
        j["degrees"].push_back({{"p", d.p},
                                {"dim", d.dim},
                                {"rank_in", d.rank_in},
                                {"rank_out", d.rank_out},
                                {"betti", d.betti},
                                {"complete", d.complete}});
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks)
        j["checks"].push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    j["verdict"] = r.verdict;
    if (with_timing)
        j["elapsed_ms"] = r.elapsed_ms;
    j["version"] = r.version;
    j["input_hash"] = r.input_hash;
    return j;
}

inline Report report_from_json(const nlohmann::ordered_json& j)
{
    Report r;
    r.claim = j.at("claim").get<std::string>();
    r.params = params_from_json(j.at("params"));
    for (const auto& d : j.at("degrees"))
        r.degrees.push_back({d.at("p").get<int>(), d.at("dim").get<std::size_t>(), d.at("rank_in").get<std::size_t>(),
                             d.at("rank_out").get<std::size_t>(), d.at("betti").get<std::size_t>(),
                             d.at("complete").get<bool>()});
    for (const auto& c : j.at("checks"))
        r.checks.push_back({c.at("name").get<std::string>(), c.at("ok").get<bool>(), c.at("detail").get<std::string>()});
    r.verdict = j.at("verdict").get<std::string>();
    if (j.contains("elapsed_ms"))
        r.elapsed_ms = j.at("elapsed_ms").get<double>();
    r.version = j.at("version").get<std::string>();
    r.input_hash = j.at("input_hash").get<std::string>();
    return r;
}

inline std::string csv_header() { return "claim,input_hash,p,dim,rank_in,rank_out,betti,complete\n"; }

/// Dimension table rows of one report.
inline std::string to_csv_rows(const Report& r)
{
    std::ostringstream os;
    for (const auto& d : r.degrees)
        os << r.claim << ',' << r.input_hash << ',' << d.p << ',' << d.dim << ',' << d.rank_in << ',' << d.rank_out
           << ',' << d.betti << ',' << (d.complete ? "true" : "false") << '\n';
    return os.str();
}

}  // namespace prophom::verify
