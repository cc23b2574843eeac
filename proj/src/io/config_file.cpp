#include <stmd/io/config_file.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace stmd::io {
namespace {

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

ConfigFile ConfigFile::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_string(buf.str(), path);
}

ConfigFile ConfigFile::parse_string(const std::string& text, const std::string& origin) {
    ConfigFile cfg;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string s = strip(line);
        if (s.empty() || s[0] == '#') continue;
        if (s.front() == '[') {
            if (s.back() != ']' || s.size() < 3) {
                throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                                         ": malformed section header");
            }
            section = strip(s.substr(1, s.size() - 2));
            if (!cfg.has_section(section)) cfg.sections_.push_back({section, {}});
            continue;
        }
        std::size_t eq = s.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                                     ": expected key = value");
        }
        std::string key = strip(s.substr(0, eq));
        std::string value = strip(s.substr(eq + 1));
        if (key.empty()) {
            throw std::runtime_error(origin + ":" + std::to_string(line_no) + ": empty key");
        }
        cfg.set(section, key, value);
    }
    return cfg;
}

ConfigFile::Section* ConfigFile::find_section(const std::string& name) {
    for (auto& s : sections_) {
        if (s.name == name) return &s;
    }
    return nullptr;
}

const ConfigFile::Section* ConfigFile::find_section(const std::string& name) const {
    for (const auto& s : sections_) {
        if (s.name == name) return &s;
    }
    return nullptr;
}

bool ConfigFile::has_section(const std::string& section) const {
    return find_section(section) != nullptr;
}

bool ConfigFile::has(const std::string& section, const std::string& key) const {
    return find(section, key).has_value();
}

std::optional<std::string> ConfigFile::find(const std::string& section,
                                            const std::string& key) const {
    const Section* s = find_section(section);
    if (!s) return std::nullopt;
    for (const auto& e : s->entries) {
        if (e.key == key) return e.value;
    }
    return std::nullopt;
}

std::string ConfigFile::get(const std::string& section, const std::string& key) const {
    auto v = find(section, key);
    if (!v) throw std::runtime_error("config: missing [" + section + "] " + key);
    return *v;
}

std::string ConfigFile::get_or(const std::string& section, const std::string& key,
                               const std::string& fallback) const {
    auto v = find(section, key);
    return v ? *v : fallback;
}

double ConfigFile::get_double(const std::string& section, const std::string& key,
                              double fallback) const {
    auto v = find(section, key);
    if (!v) return fallback;
    try {
        return std::stod(*v);
    } catch (const std::exception&) {
        throw std::runtime_error("config: [" + section + "] " + key + " is not a number: " + *v);
    }
}

int ConfigFile::get_int(const std::string& section, const std::string& key, int fallback) const {
    return static_cast<int>(get_long(section, key, fallback));
}

long ConfigFile::get_long(const std::string& section, const std::string& key,
                          long fallback) const {
    auto v = find(section, key);
    if (!v) return fallback;
    try {
        return std::stol(*v);
    } catch (const std::exception&) {
        throw std::runtime_error("config: [" + section + "] " + key + " is not an integer: " + *v);
    }
}

bool ConfigFile::get_bool(const std::string& section, const std::string& key,
                          bool fallback) const {
    auto v = find(section, key);
    if (!v) return fallback;
    if (*v == "true" || *v == "1" || *v == "yes") return true;
    if (*v == "false" || *v == "0" || *v == "no") return false;
    throw std::runtime_error("config: [" + section + "] " + key + " is not a bool: " + *v);
}

void ConfigFile::set(const std::string& section, const std::string& key,
                     const std::string& value) {
    Section* s = find_section(section);
    if (!s) {
        sections_.push_back({section, {}});
        s = &sections_.back();
    }
    for (auto& e : s->entries) {
        if (e.key == key) {
            e.value = value;
            return;
        }
    }
    s->entries.push_back({key, value});
}

void ConfigFile::set_double(const std::string& section, const std::string& key, double value) {
    char buf[40];
    if (value == std::floor(value) && std::fabs(value) < 1e15) {
        std::snprintf(buf, sizeof(buf), "%.0f", value);
    } else {
        std::snprintf(buf, sizeof(buf), "%.17g", value);
    }
    set(section, key, buf);
}

void ConfigFile::set_long(const std::string& section, const std::string& key, long value) {
    set(section, key, std::to_string(value));
}

std::string ConfigFile::serialize() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& s : sections_) {
        if (!first) out << '\n';
        first = false;
        out << '[' << s.name << "]\n";
        for (const auto& e : s.entries) {
            out << e.key << " = " << e.value << '\n';
        }
    }
    return out.str();
}

void ConfigFile::write_file(const std::string& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("config: cannot write " + path);
    out << serialize();
    if (!out) throw std::runtime_error("config: write failed: " + path);
}

}  // namespace stmd::io
