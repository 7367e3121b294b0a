#ifndef SPECMOD_TOOLS_COMMON_HPP
#define SPECMOD_TOOLS_COMMON_HPP

#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

namespace specmod::cli {

using json = nlohmann::ordered_json;

// Exit codes shared by every subcommand.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;    // audit/flow failure: a result, not a crash
inline constexpr int exit_usage = 2;     // bad arguments or degenerate input
inline constexpr int exit_numeric = 3;   // insufficient order, non-convergence, signature

struct Config {
    std::int64_t order = 30;
    double tol = 1e-10;
    std::uint64_t seed = 1;
    std::string format = "csv"; // csv | json
    int precision = 17;
};

/// Locale-independent fixed-precision significant-digit formatting.
inline std::string fmt(double x, int precision)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, x);
    return buf;
}

/// Doubles destined for JSON pass through the same precision filter, so
/// csv and json modes agree and output is byte-stable.
inline double rounded(double x, int precision)
{
    return std::strtod(fmt(x, precision).c_str(), nullptr);
}

/// quantity,value table in the configured format.
class KeyValueSink {
public:
    explicit KeyValueSink(const Config& cfg) : cfg_(cfg) {}

    void add(const std::string& key, double value)
    {
        rows_.emplace_back(key, fmt(value, cfg_.precision));
        obj_[key] = rounded(value, cfg_.precision);
    }
    void add_text(const std::string& key, const std::string& value)
    {
        rows_.emplace_back(key, value);
        obj_[key] = value;
    }

    void print() const
    {
        if (cfg_.format == "json") {
            std::printf("%s\n", obj_.dump(2).c_str());
            return;
        }
        std::printf("quantity,value\n");
        for (const auto& [k, v] : rows_) {
            std::printf("%s,%s\n", k.c_str(), v.c_str());
        }
    }

private:
    const Config& cfg_;
    std::vector<std::pair<std::string, std::string>> rows_;
    json obj_ = json::object();
};

} // namespace specmod::cli

#endif
