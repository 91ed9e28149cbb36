#include "sqz/cli/config.hpp"

#include "sqz/errors.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace sqz::cli
{
namespace
{
std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

bool valid_name(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!(std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '_'))
            return false;
    return true;
}

[[noreturn]] void fail(const std::string &what)
{
    throw InvalidArgument("config: " + what);
}

std::string where(const std::string &section, const std::string &key)
{
    return "[" + section + "] " + key;
}

double to_double(std::string_view text, const std::string &ctx)
{
    text = trim(text);
    double v = 0.0;
    const auto *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || !std::isfinite(v))
        fail(ctx + ": expected a finite number, got '" + std::string(text) + "'");
    return v;
}

std::string json_scalar_text(const nlohmann::json &v, const std::string &ctx)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_boolean())
        return v.get<bool>() ? "true" : "false";
    if (v.is_number_integer() || v.is_number_unsigned())
        return v.dump();
    if (v.is_number_float())
        return format_double(v.get<double>());
    fail(ctx + ": values must be scalars");
}

Config parse_json(std::string_view text)
{
    nlohmann::json doc;
    try
    {
        doc = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::parse_error &e)
    {
        fail(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        fail("JSON config must be an object");
    if (doc.contains("metadata"))
    {
        const auto &meta = doc.at("metadata");
        if (!meta.is_object() || !meta.contains("config"))
            fail("JSON metadata has no config block");
        doc = meta.at("config");
    }
    if (!doc.is_object())
        fail("JSON config must be an object of sections");

    Config cfg;
    for (const auto &[section, body] : doc.items())
    {
        if (!valid_name(section))
            fail("invalid section name '" + section + "'");
        if (!body.is_object())
            fail("section '" + section + "' must be an object");
        for (const auto &[key, value] : body.items())
        {
            if (!valid_name(key))
                fail("invalid key name '" + key + "'");
            cfg.set(section, key, json_scalar_text(value, where(section, key)));
        }
    }
    return cfg;
}

} // namespace

std::string format_double(double v)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc())
        throw NumericRangeError("cannot format number");
    return std::string(buf, ptr);
}

Config Config::parse(std::string_view text)
{
    const std::string_view body = trim(text);
    if (!body.empty() && body.front() == '{')
        return parse_json(body);

    Config cfg;
    std::string section;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line))
    {
        ++lineno;
        const std::string_view s = trim(line);
        const std::string at = "line " + std::to_string(lineno) + ": ";
        if (s.empty() || s.front() == '#' || s.front() == ';')
            continue;
        if (s.front() == '[')
        {
            if (s.back() != ']')
                fail(at + "unterminated section header");
            const std::string_view name = trim(s.substr(1, s.size() - 2));
            if (!valid_name(name))
                fail(at + "invalid section name '" + std::string(name) + "'");
            section = std::string(name);
            cfg.raw_[section];
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string_view::npos)
            fail(at + "expected 'key = value'");
        if (section.empty())
            fail(at + "key outside of any section");
        const std::string key(trim(s.substr(0, eq)));
        if (!valid_name(key))
            fail(at + "invalid key name '" + key + "'");
        if (cfg.raw_[section].count(key))
            fail(at + "duplicate key " + where(section, key));
        cfg.raw_[section][key] = std::string(trim(s.substr(eq + 1)));
    }
    return cfg;
}

Config Config::load(const std::string &path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        fail("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse(ss.str());
}

const std::string *Config::raw(const std::string &section, const std::string &key)
{
    const auto s = raw_.find(section);
    if (s == raw_.end())
        return nullptr;
    const auto k = s->second.find(key);
    return k == s->second.end() ? nullptr : &k->second;
}

void Config::resolve(const std::string &section, const std::string &key, const std::string &text)
{
    resolved_[section][key] = text;
}

bool Config::has(const std::string &section, const std::string &key) const
{
    const auto s = raw_.find(section);
    return s != raw_.end() && s->second.count(key) > 0;
}

void Config::set(const std::string &section, const std::string &key, const std::string &value)
{
    raw_[section][key] = value;
}

double Config::get_double(const std::string &section, const std::string &key, double fallback)
{
    if (const auto *r = raw(section, key))
    {
        const double v = to_double(*r, where(section, key));
        resolve(section, key, *r);
        return v;
    }
    resolve(section, key, format_double(fallback));
    return fallback;
}

long long Config::get_int(const std::string &section, const std::string &key, long long fallback)
{
    if (const auto *r = raw(section, key))
    {
        const std::string_view t = trim(*r);
        long long v = 0;
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc() || ptr != t.data() + t.size())
            fail(where(section, key) + ": expected an integer, got '" + *r + "'");
        resolve(section, key, *r);
        return v;
    }
    resolve(section, key, std::to_string(fallback));
    return fallback;
}

std::uint64_t Config::get_u64(const std::string &section, const std::string &key, std::uint64_t fallback)
{
    if (const auto *r = raw(section, key))
    {
        const std::string_view t = trim(*r);
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc() || ptr != t.data() + t.size())
            fail(where(section, key) + ": expected an unsigned integer, got '" + *r + "'");
        resolve(section, key, *r);
        return v;
    }
    resolve(section, key, std::to_string(fallback));
    return fallback;
}

bool Config::get_bool(const std::string &section, const std::string &key, bool fallback)
{
    if (const auto *r = raw(section, key))
    {
        const std::string_view t = trim(*r);
        bool v = false;
        if (t == "true" || t == "yes" || t == "1")
            v = true;
        else if (t == "false" || t == "no" || t == "0")
            v = false;
        else
            fail(where(section, key) + ": expected true or false, got '" + *r + "'");
        resolve(section, key, *r);
        return v;
    }
    resolve(section, key, fallback ? "true" : "false");
    return fallback;
}

std::string Config::get_string(const std::string &section, const std::string &key, const std::string &fallback)
{
    if (const auto *r = raw(section, key))
    {
        resolve(section, key, *r);
        return *r;
    }
    resolve(section, key, fallback);
    return fallback;
}

std::vector<double> Config::get_list(const std::string &section, const std::string &key, const std::vector<double> &fallback)
{
    if (const auto *r = raw(section, key))
    {
        std::vector<double> out;
        std::string_view rest = *r;
        while (true)
        {
            const auto comma = rest.find(',');
            out.push_back(to_double(rest.substr(0, comma), where(section, key)));
            if (comma == std::string_view::npos)
                break;
            rest.remove_prefix(comma + 1);
        }
        resolve(section, key, *r);
        return out;
    }
    std::string text;
    for (std::size_t i = 0; i < fallback.size(); ++i)
        text += (i ? "," : "") + format_double(fallback[i]);
    resolve(section, key, text);
    return fallback;
}

void Config::reject_unknown() const
{
    for (const auto &[section, keys] : raw_)
    {
        const auto s = resolved_.find(section);
        if (s == resolved_.end() && !keys.empty())
            fail("unknown section [" + section + "]");
        for (const auto &[key, value] : keys)
            if (s == resolved_.end() || !s->second.count(key))
                fail("unknown key " + where(section, key));
    }
}

nlohmann::ordered_json Config::echo() const
{
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto &[section, keys] : resolved_)
        for (const auto &[key, value] : keys)
            out[section][key] = value;
    return out;
}

} // namespace sqz::cli
