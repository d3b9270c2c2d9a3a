#include "condlab/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "condlab/errors.hpp"

namespace condlab {

ExperimentConfig ExperimentConfig::parse(const std::string& text) {
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\r' || line.back() == '\t')) line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        const auto eq = line.find('=', start);
        if (eq == std::string::npos) throw InvalidParameter("config line without '=': " + line);
        cfg.kv_[line.substr(start, eq - start)] = line.substr(eq + 1);
    }
    return cfg;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParameter("cannot read config " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::string ExperimentConfig::emit() const {
    std::ostringstream out;
    for (const auto& [k, v] : kv_) out << k << '=' << v << '\n';
    return out.str();
}

std::string ExperimentConfig::get(const std::string& key, const std::string& fallback) const {
    const auto it = kv_.find(key);
    return it == kv_.end() ? fallback : it->second;
}

long ExperimentConfig::get_long(const std::string& key, long fallback) const {
    const auto it = kv_.find(key);
    return it == kv_.end() ? fallback : std::stol(it->second);
}

double ExperimentConfig::get_double(const std::string& key, double fallback) const {
    const auto it = kv_.find(key);
    return it == kv_.end() ? fallback : std::stod(it->second);
}

std::string cache_directory() {
    if (const char* env = std::getenv("CONDLAB_CACHE_DIR")) return env;
    return ".condlab-cache";
}

namespace {

// splits on commas at bracket depth 0 ('(' and '[' both nest)
std::vector<std::string> split_args(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\n");
    std::size_t b = s.find_last_not_of(" \t\n");
    if (a == std::string::npos) return "";
    return s.substr(a, b - a + 1);
}

std::string unbracket(const std::string& s) {
    if (s.size() >= 2 && s.front() == '[' && s.back() == ']') return s.substr(1, s.size() - 2);
    return s;
}

struct Args {
    std::vector<std::string> positional;
    std::map<std::string, std::string> named;

    std::string need(const std::string& key) const {
        const auto it = named.find(key);
        if (it == named.end()) throw InvalidParameter("system constructor missing '" + key + "='");
        return it->second;
    }
    std::string get(const std::string& key, const std::string& fallback) const {
        const auto it = named.find(key);
        return it == named.end() ? fallback : it->second;
    }
};

Args parse_args(const std::string& inner) {
    Args args;
    for (const std::string& raw : split_args(inner)) {
        const std::string part = strip(raw);
        if (part.empty()) continue;
        // a key=value pair only when '=' appears before any nesting
        const auto eq = part.find('=');
        const auto par = part.find('(');
        if (eq != std::string::npos && (par == std::string::npos || eq < par)) {
            args.named[part.substr(0, eq)] = strip(part.substr(eq + 1));
        } else {
            args.positional.push_back(part);
        }
    }
    return args;
}

Arrangement parse_arrangement(const std::string& s) {
    if (s == "raw") return Arrangement::RawInteger;
    if (s == "natural") return Arrangement::ComplexNatural;
    if (s == "real") return Arrangement::RealNatural;
    throw InvalidParameter("unknown arrangement '" + s + "'");
}

std::vector<int> parse_sizes(const std::string& s) {
    if (s.rfind("dyadic:", 0) == 0) {
        const int k = std::stoi(s.substr(7));
        std::vector<int> sizes;
        for (int j = 1; j <= k; ++j) sizes.push_back(1 << j);
        return sizes;
    }
    // bar-separated explicit list, e.g. list:1|2|4
    if (s.rfind("list:", 0) == 0) {
        std::vector<int> sizes;
        std::istringstream in(s.substr(5));
        std::string tok;
        while (std::getline(in, tok, '|')) sizes.push_back(std::stoi(tok));
        return sizes;
    }
    throw InvalidParameter("bad sizes spec '" + s + "' (want dyadic:K or list:a|b|c)");
}

}  // namespace

SystemPtr parse_system(const std::string& text, const std::string& cache_dir) {
    const std::string s = strip(text);
    const auto par = s.find('(');
    if (par == std::string::npos || s.back() != ')')
        throw InvalidParameter("bad system constructor '" + s + "'");
    const std::string name = s.substr(0, par);
    const Args args = parse_args(s.substr(par + 1, s.size() - par - 2));

    if (name == "ortho") return orthonormal_system(int(std::stol(args.need("n"))));
    if (name == "unit")
        return sequence_system(parse_space_spec(unbracket(args.need("space"))), int(std::stol(args.need("n"))));
    if (name == "trig") {
        const WeightParams params(std::stod(args.need("lambda")));
        const int n = int(std::stol(args.need("n")));
        const Arrangement arr = parse_arrangement(args.get("arr", "natural"));
        const double tol = std::stod(args.get("tol", "1e-10"));
        int reach = n + 2;  // frequency differences; RealNatural sums reach n
        if (arr == Arrangement::ComplexNatural) reach = n + 2;
        const auto table = WeightFourierTable::build_cached(params, reach, tol, cache_dir);
        return trig_system(table, n, arr, args.get("field", "real") == "complex");
    }
    if (name == "rotate") {
        if (args.positional.size() != 1) throw InvalidParameter("rotate needs one system argument");
        return rotate(parse_system(args.positional[0], cache_dir));
    }
    if (name == "dsum" || name == "diamond") {
        if (args.positional.size() != 2) throw InvalidParameter(name + " needs two system arguments");
        SystemPtr a = parse_system(args.positional[0], cache_dir);
        SystemPtr b = parse_system(args.positional[1], cache_dir);
        if (name == "diamond") return diamond(std::move(a), std::move(b));
        return direct_sum(std::move(a), std::move(b), std::stod(args.get("p", "2")));
    }
    if (name == "prefix") {
        if (args.positional.size() != 1) throw InvalidParameter("prefix needs one system argument");
        return prefix_sum_system(parse_system(args.positional[0], cache_dir), parse_sizes(args.need("sizes")),
                                 std::stod(args.get("p", "2")));
    }
    if (name == "dkk") {
        if (args.positional.size() != 1) throw InvalidParameter("dkk needs one inner system argument");
        const SpaceSpec space = parse_space_spec(unbracket(args.get("space", "lp:2")));
        const int blocks = int(std::stol(args.need("blocks")));
        auto sigma = std::make_shared<Partition>(dyadic_partition(space, blocks));
        return dkk_system(parse_system(args.positional[0], cache_dir), std::move(sigma));
    }
    throw InvalidParameter("unknown system constructor '" + name + "'");
}

}  // namespace condlab
