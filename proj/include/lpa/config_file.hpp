// Flat key = value run configuration. Chosen over nested formats so
// experiment logs diff cleanly. '#' starts a comment, blank lines are
// skipped, keys may appear once. Errors carry "file:line:" prefixes.
//
// Keys:
//   xi                  = (0,1,0) | 0,1,0 | rank 2 of 3
//   r                   = integer (optional; must match xi's length)
//   alpha               = real > -1
//   n0                  = integer >= 2
//   initial_locations   = random | comma list of n0 reals in (0,1)
//   steps               = integer >= 0
//   seed                = unsigned integer
//   grid_points         = integer >= 2 (uniform grid on [0,1])
//   grid                = explicit comma list of reals
//   checkpoints         = geometric | comma list of integers
//   tracked             = comma list of initial-vertex indices
#pragma once

#include <cctype>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpa/model_config.hpp"

namespace lpa {
namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

[[noreturn]] inline void config_error(const std::string& source, int line,
                                      const std::string& message) {
    throw std::runtime_error(source + ":" + std::to_string(line) + ": " + message);
}

inline double parse_real(const std::string& source, int line, const std::string& text) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) config_error(source, line, "trailing characters in '" + text + "'");
        return v;
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception&) {
        config_error(source, line, "expected a number, got '" + text + "'");
    }
}

inline long long parse_integer(const std::string& source, int line, const std::string& text) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(text, &used);
        if (used != text.size()) config_error(source, line, "trailing characters in '" + text + "'");
        return v;
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception&) {
        config_error(source, line, "expected an integer, got '" + text + "'");
    }
}

inline std::uint64_t parse_unsigned(const std::string& source, int line, const std::string& text) {
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(text, &used);
        if (used != text.size()) config_error(source, line, "trailing characters in '" + text + "'");
        return v;
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception&) {
        config_error(source, line, "expected an unsigned integer, got '" + text + "'");
    }
}

inline std::vector<std::string> split_list(const std::string& source, int line, std::string text) {
    // Optional surrounding parentheses or brackets.
    if (text.size() >= 2 && (text.front() == '(' || text.front() == '[') &&
        (text.back() == ')' || text.back() == ']')) {
        text = trim(text.substr(1, text.size() - 2));
    }
    std::vector<std::string> items;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string item =
            trim(comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start));
        if (item.empty()) config_error(source, line, "empty list element");
        items.push_back(item);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (items.empty()) config_error(source, line, "expected a comma-separated list");
    return items;
}

// "rank k of r" shorthand, or an explicit weight vector.
inline ChoiceVector parse_xi(const std::string& source, int line, const std::string& text) {
    std::istringstream words(text);
    std::string w1, w2, w3, w4, rest;
    if (words >> w1 && w1 == "rank") {
        if (!(words >> w2 >> w3 >> w4) || w3 != "of" || (words >> rest)) {
            config_error(source, line, "xi shorthand must be 'rank k of r'");
        }
        const long long k = parse_integer(source, line, w2);
        const long long r = parse_integer(source, line, w4);
        if (k < 1 || r < 1 || k > r || r > kMaxSampleSize) {
            config_error(source, line, "xi shorthand needs 1 <= k <= r");
        }
        return ChoiceVector::basis(static_cast<int>(k), static_cast<int>(r));
    }
    std::vector<double> weights;
    for (const std::string& item : split_list(source, line, text)) {
        weights.push_back(parse_real(source, line, item));
    }
    try {
        return ChoiceVector(weights);
    } catch (const std::invalid_argument& e) {
        config_error(source, line, e.what());
    }
}

}  // namespace detail

// Parses configuration text; `source` names the origin in error messages.
inline ModelConfig parse_config_text(const std::string& text, const std::string& source) {
    ModelConfig config;
    std::set<std::string> seen;
    int declared_r = 0;
    int declared_r_line = 0;

    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::size_t hash = raw.find('#');
        const std::string stripped = detail::trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (stripped.empty()) continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            detail::config_error(source, line, "expected 'key = value'");
        }
        const std::string key = detail::trim(stripped.substr(0, eq));
        const std::string value = detail::trim(stripped.substr(eq + 1));
        if (key.empty()) detail::config_error(source, line, "missing key before '='");
        if (value.empty()) detail::config_error(source, line, "missing value for '" + key + "'");
        if (!seen.insert(key).second) {
            detail::config_error(source, line, "duplicate key '" + key + "'");
        }

        if (key == "xi") {
            config.xi = detail::parse_xi(source, line, value);
        } else if (key == "r") {
            const long long r = detail::parse_integer(source, line, value);
            if (r < 1 || r > kMaxSampleSize) detail::config_error(source, line, "r out of range");
            declared_r = static_cast<int>(r);
            declared_r_line = line;
        } else if (key == "alpha") {
            config.alpha = detail::parse_real(source, line, value);
        } else if (key == "n0") {
            config.n0 = static_cast<int>(detail::parse_integer(source, line, value));
        } else if (key == "initial_locations") {
            if (value == "random") {
                config.initial_locations.clear();
            } else {
                config.initial_locations.clear();
                for (const std::string& item : detail::split_list(source, line, value)) {
                    config.initial_locations.push_back(detail::parse_real(source, line, item));
                }
            }
        } else if (key == "steps") {
            config.steps = detail::parse_integer(source, line, value);
        } else if (key == "seed") {
            config.seed = detail::parse_unsigned(source, line, value);
        } else if (key == "grid_points") {
            const long long points = detail::parse_integer(source, line, value);
            if (points < 2 || points > 1000000) {
                detail::config_error(source, line, "grid_points must be in [2, 1000000]");
            }
            config.grid = uniform_grid(static_cast<int>(points));
        } else if (key == "grid") {
            config.grid.clear();
            for (const std::string& item : detail::split_list(source, line, value)) {
                config.grid.push_back(detail::parse_real(source, line, item));
            }
        } else if (key == "checkpoints") {
            if (value == "geometric") {
                config.checkpoints.clear();
            } else {
                config.checkpoints.clear();
                for (const std::string& item : detail::split_list(source, line, value)) {
                    config.checkpoints.push_back(detail::parse_integer(source, line, item));
                }
            }
        } else if (key == "tracked") {
            config.tracked.clear();
            for (const std::string& item : detail::split_list(source, line, value)) {
                config.tracked.push_back(static_cast<int>(detail::parse_integer(source, line, item)));
            }
        } else {
            detail::config_error(source, line, "unknown key '" + key + "'");
        }
    }
    if (seen.count("grid") && seen.count("grid_points")) {
        throw std::runtime_error(source + ": give either 'grid' or 'grid_points', not both");
    }
    if (declared_r != 0 && declared_r != config.xi.r()) {
        detail::config_error(source, declared_r_line,
                             "r = " + std::to_string(declared_r) + " does not match xi with " +
                                 std::to_string(config.xi.r()) + " entries");
    }
    config.validate();
    return config;
}

inline ModelConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str(), path);
}

}  // namespace lpa
