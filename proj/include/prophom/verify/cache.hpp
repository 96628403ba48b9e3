#pragma once

#include <prophom/core/rational.hpp>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

namespace prophom::verify {

inline constexpr const char* cache_env = "PROP_HOMOLOGY_CACHE";

/// The cache directory in effect: the environment variable wins over the flag; empty disables caching.
inline std::string resolve_cache_dir(const std::string& flag)
{
    if (const char* env = std::getenv(cache_env); env && *env)
        return env;
    return flag;
}

/// Flat directory of files named by input hash. Writes go to a unique temporary file and are renamed into place.
class Cache
{
public:
    Cache() = default;
    explicit Cache(std::string dir) : dir_(std::move(dir))
    {
        if (!dir_.empty())
            std::filesystem::create_directories(dir_);
    }

    bool enabled() const { return !dir_.empty(); }

    std::optional<std::string> load(const std::string& key, const std::string& ext) const
    {
        if (!enabled())
            return std::nullopt;
        std::ifstream in(path(key, ext), std::ios::binary);
        if (!in)
            return std::nullopt;
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    void store(const std::string& key, const std::string& ext, const std::string& data) const
    {
        if (!enabled())
            return;
        static std::atomic<unsigned long> counter{0};
        std::ostringstream tmp_name;
        tmp_name << key << '.' << ext << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << '.'
                 << counter++;
        const auto tmp = std::filesystem::path(dir_) / tmp_name.str();
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out)
                throw Error("cannot write cache file " + tmp.string());
            out << data;
            if (!out.flush())
                throw Error("cannot write cache file " + tmp.string());
        }
        std::filesystem::rename(tmp, path(key, ext));
    }

private:
    std::filesystem::path path(const std::string& key, const std::string& ext) const
    {
        return std::filesystem::path(dir_) / (key + "." + ext);
    }

    std::string dir_;
};

}  // namespace prophom::verify
