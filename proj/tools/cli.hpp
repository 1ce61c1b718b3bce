#ifndef HEIGHTCENSUS_TOOLS_CLI_HPP
#define HEIGHTCENSUS_TOOLS_CLI_HPP

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hc::cli {

struct RunConfig {
    int precision_cap_bits = 4096;
    double candidate_cap = 1e9;
    int workers = 1;
    std::string cache_path; // empty: no persistence
    std::string output_format = "csv"; // csv, json or table
    std::uint64_t seed = 1;
    int digits = 12;
};

/* Line-delimited JSON store. Each line is {"key": ..., "value": ..., "digest": ...};
 * lines that do not parse or whose digest does not match are counted and skipped. */
class InvariantCache {
public:
    explicit InvariantCache(std::string path);

    std::optional<nlohmann::json> lookup(std::string const& key) const;
    void store(std::string const& key, nlohmann::json const& value);
    int malformed_lines() const { return malformed_; }
    bool enabled() const { return !path_.empty(); }

    static std::string digest(std::string const& key, nlohmann::json const& value);

private:
    std::string path_;
    std::map<std::string, nlohmann::json> entries_;
    int malformed_ = 0;
};

/* Exit codes: 0 ok, 1 failed verification, 2 invalid input, 3 precision, 4 cap refusal. */
int run_command(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

} // namespace hc::cli

#endif
