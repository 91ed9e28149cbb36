#ifndef SQZ_CLI_CONFIG_HPP
#define SQZ_CLI_CONFIG_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace sqz::cli
{
inline constexpr const char *kVersion = "0.1.0";

// Run configuration: flat key/value pairs grouped in sections.
//
//   # comment (whole line, '#' or ';')
//   [section]
//   key = value
//
// Section and key names use [a-z0-9_]. Values are trimmed; lists are
// comma separated. Duplicate keys and keys outside a section are errors.
// A document whose first non-blank character is '{' is read as JSON instead,
// either {"section": {"key": value}} or a previous JSON output carrying the
// same object under metadata.config.
//
// Commands read every parameter through the typed getters below, then call
// reject_unknown(); anything in the file that was never asked for is an error.
// echo() returns the fully resolved parameter set (defaults included) with the
// exact value text, so feeding it back reproduces the run.
class Config
{
public:
    Config() = default;

    static Config parse(std::string_view text);
    static Config load(const std::string &path);

    double get_double(const std::string &section, const std::string &key, double fallback);
    long long get_int(const std::string &section, const std::string &key, long long fallback);
    std::uint64_t get_u64(const std::string &section, const std::string &key, std::uint64_t fallback);
    bool get_bool(const std::string &section, const std::string &key, bool fallback);
    std::string get_string(const std::string &section, const std::string &key, const std::string &fallback);
    std::vector<double> get_list(const std::string &section, const std::string &key, const std::vector<double> &fallback);

    bool has(const std::string &section, const std::string &key) const;

    // Overrides (or adds) a raw value, e.g. from a command-line flag.
    void set(const std::string &section, const std::string &key, const std::string &value);

    void reject_unknown() const;

    nlohmann::ordered_json echo() const;

private:
    const std::string *raw(const std::string &section, const std::string &key);
    void resolve(const std::string &section, const std::string &key, const std::string &text);

    std::map<std::string, std::map<std::string, std::string>> raw_;
    std::map<std::string, std::map<std::string, std::string>> resolved_;
};

// Shortest text that parses back to the same double.
std::string format_double(double v);

} // namespace sqz::cli

#endif // SQZ_CLI_CONFIG_HPP
