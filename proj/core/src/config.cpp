#include "levyclt/config.hpp"
#include "levyclt/errors.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace levyclt {
namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0')
        throw ConfigError("invalid number for key '" + key + "': " + v);
    return x;
}

int parse_int(const std::string& key, const std::string& v) {
    const double x = parse_double(key, v);
    const int i = static_cast<int>(x);
    if (static_cast<double>(i) != x)
        throw ConfigError("expected integer for key '" + key + "': " + v);
    return i;
}

std::vector<double> parse_list(const std::string& key, std::string v) {
    for (char& c : v)
        if (c == ',' || c == ';')
            c = ' ';
    std::istringstream in(v);
    std::vector<double> out;
    std::string tok;
    while (in >> tok)
        out.push_back(parse_double(key, tok));
    return out;
}

} // namespace

std::map<std::string, std::string> parse_key_values(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": empty key");
        kv[key] = value;
    }
    return kv;
}

std::map<std::string, std::string> load_key_values(const std::string& path) {
    std::ifstream is(path);
    if (!is)
        throw IoError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << is.rdbuf();
    return parse_key_values(buf.str());
}

TripletConfig triplet_from_key_values(const std::map<std::string, std::string>& kv) {
    auto get = [&kv](const std::string& key) -> std::optional<std::string> {
        const auto it = kv.find(key);
        if (it == kv.end())
            return std::nullopt;
        return it->second;
    };
    const auto family = get("family");
    if (!family)
        throw ConfigError("missing key 'family'");
    const int dim = get("dim") ? parse_int("dim", *get("dim")) : 1;
    if (dim < 1)
        throw ConfigError("dim must be positive");

    RadialLevyMeasure measure;
    if (*family == "powerlog") {
        if (!get("sigma_shell") || !get("beta"))
            throw ConfigError("powerlog requires sigma_shell and beta");
        measure = RadialLevyMeasure::power_log(
            parse_double("sigma_shell", *get("sigma_shell")),
            parse_double("beta", *get("beta")), dim);
    } else if (*family == "boundedshell") {
        if (!get("sigma_shell") || !get("outer_radius"))
            throw ConfigError("boundedshell requires sigma_shell and outer_radius");
        measure = RadialLevyMeasure::bounded_shell(
            parse_double("sigma_shell", *get("sigma_shell")),
            parse_double("outer_radius", *get("outer_radius")), dim);
    } else if (*family == "zero") {
        measure = RadialLevyMeasure::zero(dim);
    } else {
        throw ConfigError("unknown family: " + *family);
    }

    Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(dim, dim);
    if (get("gaussian_cov")) {
        const auto vals = parse_list("gaussian_cov", *get("gaussian_cov"));
        if (static_cast<int>(vals.size()) == dim * dim) {
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j)
                    cov(i, j) = vals[i * dim + j];
        } else if (static_cast<int>(vals.size()) == 1) {
            cov = vals[0] * Eigen::MatrixXd::Identity(dim, dim);
        } else {
            throw ConfigError("gaussian_cov needs 1 or dim*dim entries");
        }
    }

    TripletConfig cfg{LevyTriplet::isotropic(measure, cov), std::nullopt};
    if (get("kappa")) {
        const double kappa = parse_double("kappa", *get("kappa"));
        if (!(kappa >= 1.0))
            throw ConfigError("kappa must be >= 1");
        cfg.kappa = kappa;
    }
    return cfg;
}

TripletConfig load_triplet_config(const std::string& path) {
    return triplet_from_key_values(load_key_values(path));
}

} // namespace levyclt
