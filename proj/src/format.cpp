#include "swarm/format.hpp"

#include <charconv>
#include <istream>
#include <sstream>

#include "swarm/errors.hpp"

namespace swarm {

std::string fmt_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view text, std::string_view what) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
        text.remove_suffix(1);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size() || text.empty()) {
        throw ConfigError("invalid number for " + std::string(what) + ": '" +
                          std::string(text) + "'");
    }
    return v;
}

std::vector<std::vector<double>> read_number_rows(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<double> row;
        std::string tok;
        while (ls >> tok) row.push_back(parse_double(tok, "line " + std::to_string(lineno)));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace swarm
