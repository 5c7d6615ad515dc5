#pragma once

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "mchrift/common.hpp"

namespace mchrift {

// Flat key=value config files. '#' starts a comment, blank lines are ignored,
// keys may appear once. Every key must be consumed by the experiment driver;
// leftovers are reported as unknown keys so typos fail loudly.
class Config {
  public:
    static Config from_file(const std::string& path) {
        std::ifstream f(path);
        if (!f) throw numeric_error("config: cannot open " + path);
        std::stringstream ss;
        ss << f.rdbuf();
        return from_string(ss.str(), path);
    }

    static Config from_string(const std::string& text, const std::string& origin = "<string>") {
        Config c;
        c.origin_ = origin;
        std::istringstream in(text);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            line = trim(line);
            if (line.empty()) continue;
            auto eq = line.find('=');
            if (eq == std::string::npos)
                throw numeric_error("config " + origin + ":" + std::to_string(lineno) +
                                    ": expected key=value");
            std::string key = trim(line.substr(0, eq));
            std::string val = trim(line.substr(eq + 1));
            if (key.empty()) throw numeric_error("config " + origin + ": empty key");
            if (c.kv_.count(key))
                throw numeric_error("config " + origin + ": duplicate key '" + key + "'");
            c.kv_[key] = val;
        }
        return c;
    }

    bool has(const std::string& key) const { return kv_.count(key) != 0; }

    std::string get_string(const std::string& key) const {
        auto it = kv_.find(key);
        if (it == kv_.end())
            throw numeric_error("config " + origin_ + ": missing required key '" + key + "'");
        used_.insert(key);
        return it->second;
    }

    std::string get_string(const std::string& key, const std::string& dflt) const {
        if (!has(key)) return dflt;
        return get_string(key);
    }

    double get_double(const std::string& key) const { return parse_double(key, get_string(key)); }
    double get_double(const std::string& key, double dflt) const {
        return has(key) ? get_double(key) : dflt;
    }

    int get_int(const std::string& key) const {
        const std::string v = get_string(key);
        std::size_t pos = 0;
        int out = 0;
        try {
            out = std::stoi(v, &pos);
        } catch (const std::exception&) {
            throw numeric_error("config " + origin_ + ": key '" + key + "' is not an integer: " + v);
        }
        if (pos != v.size())
            throw numeric_error("config " + origin_ + ": key '" + key + "' is not an integer: " + v);
        return out;
    }
    int get_int(const std::string& key, int dflt) const { return has(key) ? get_int(key) : dflt; }

    bool get_bool(const std::string& key, bool dflt) const {
        if (!has(key)) return dflt;
        const std::string v = get_string(key);
        if (v == "true" || v == "1" || v == "yes") return true;
        if (v == "false" || v == "0" || v == "no") return false;
        throw numeric_error("config " + origin_ + ": key '" + key + "' is not a boolean: " + v);
    }

    // call once all expected keys were read
    void assert_all_consumed() const {
        for (const auto& [k, v] : kv_)
            if (!used_.count(k))
                throw numeric_error("config " + origin_ + ": unknown key '" + k + "'");
    }

  private:
    static std::string trim(const std::string& s) {
        auto b = s.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) return "";
        auto e = s.find_last_not_of(" \t\r\n");
        return s.substr(b, e - b + 1);
    }

    double parse_double(const std::string& key, const std::string& v) const {
        std::size_t pos = 0;
        double out = 0.0;
        try {
            out = std::stod(v, &pos);
        } catch (const std::exception&) {
            throw numeric_error("config " + origin_ + ": key '" + key + "' is not a number: " + v);
        }
        if (pos != v.size())
            throw numeric_error("config " + origin_ + ": key '" + key + "' is not a number: " + v);
        return out;
    }

    std::string origin_;
    std::map<std::string, std::string> kv_;
    mutable std::set<std::string> used_;
};

inline Config parse_config(const std::string& path) { return Config::from_file(path); }

}  // namespace mchrift
