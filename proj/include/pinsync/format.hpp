#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace pinsync {

// Decimal with 17 significant digits: round-trip exact for double.
inline std::string fmt_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string join_g17(const Eigen::ArrayXd& values, char sep = ',') {
    std::string out;
    for (long i = 0; i < values.size(); ++i) {
        if (i)
            out += sep;
        out += fmt_g17(values[i]);
    }
    return out;
}

inline std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos)
        return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

} // namespace pinsync
