/**
 * @file config_file.hpp
 * @brief Flat key-value configuration text with [section] headers.
 *
 * The same representation backs run configs and manifests, so a manifest can
 * be re-fed to the tool and diffs stay line-oriented. Insertion order is
 * preserved on serialization.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace stmd::io {

class ConfigFile {
public:
    struct Entry {
        std::string key;
        std::string value;
    };
    struct Section {
        std::string name;
        std::vector<Entry> entries;
    };

    static ConfigFile parse_file(const std::string& path);
    static ConfigFile parse_string(const std::string& text, const std::string& origin = "<string>");

    bool has_section(const std::string& section) const;
    bool has(const std::string& section, const std::string& key) const;

    std::optional<std::string> find(const std::string& section, const std::string& key) const;
    std::string get(const std::string& section, const std::string& key) const;
    std::string get_or(const std::string& section, const std::string& key,
                       const std::string& fallback) const;

    double get_double(const std::string& section, const std::string& key, double fallback) const;
    int get_int(const std::string& section, const std::string& key, int fallback) const;
    long get_long(const std::string& section, const std::string& key, long fallback) const;
    bool get_bool(const std::string& section, const std::string& key, bool fallback) const;

    /// Overwrites an existing key or appends (section created on demand).
    void set(const std::string& section, const std::string& key, const std::string& value);
    void set_double(const std::string& section, const std::string& key, double value);
    void set_long(const std::string& section, const std::string& key, long value);

    std::string serialize() const;
    void write_file(const std::string& path) const;

    const std::vector<Section>& sections() const { return sections_; }

private:
    Section* find_section(const std::string& name);
    const Section* find_section(const std::string& name) const;

    std::vector<Section> sections_;
};

}  // namespace stmd::io
