#include "condlab/csvio.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "condlab/errors.hpp"

namespace condlab {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw InvalidParameter("cannot open output file " + tmp);
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

std::string growth_series_csv(const std::vector<GrowthSeries>& series) {
    std::ostringstream out;
    out << "quantity,system,m,value,kind\n";
    for (const auto& s : series)
        for (const auto& e : s.entries)
            out << s.quantity << ',' << s.system << ',' << e.m << ',' << format_double(e.value) << ','
                << to_string(e.kind) << '\n';
    return out.str();
}

std::vector<GrowthSeries> parse_growth_series_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<GrowthSeries> out;
    bool first = true;
    while (std::getline(in, line)) {
        if (first) {
            first = false;
            continue;  // header
        }
        if (line.empty()) continue;
        // quantity and system may not contain commas; the rest is numeric
        std::vector<std::string> parts;
        std::size_t pos = 0;
        for (int i = 0; i < 4; ++i) {
            const auto c = line.find(',', pos);
            if (c == std::string::npos) throw InvalidParameter("bad series row: " + line);
            parts.push_back(line.substr(pos, c - pos));
            pos = c + 1;
        }
        parts.push_back(line.substr(pos));
        if (out.empty() || out.back().quantity != parts[0] || out.back().system != parts[1]) {
            GrowthSeries s;
            s.quantity = parts[0];
            s.system = parts[1];
            out.push_back(std::move(s));
        }
        out.back().add(std::stol(parts[2]), std::stod(parts[3]), value_kind_from_string(parts[4]));
    }
    return out;
}

std::string table_csv(const std::string& header, const std::vector<std::pair<double, double>>& rows) {
    std::ostringstream out;
    out << header << '\n';
    for (const auto& [a, b] : rows) out << format_double(a) << ',' << format_double(b) << '\n';
    return out.str();
}

}  // namespace condlab
