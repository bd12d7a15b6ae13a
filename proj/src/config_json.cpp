#include "sicp/config_json.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sicp {

namespace {

std::string fmt17(double v) {
    if (v == 0.0) v = 0.0;  // no "-0"
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

Configuration config_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("points"))
        throw std::runtime_error("configuration needs \"n\" and \"points\"");
    if (!j["n"].is_number_integer()) throw std::runtime_error("\"n\" must be an integer");
    const auto n = j["n"].get<long long>();
    if (n < 2 || n > 4) throw std::runtime_error("\"n\" must be 2, 3 or 4");
    if (!j["points"].is_array()) throw std::runtime_error("\"points\" must be an array");

    std::vector<ProjectivePoint> pts;
    for (const auto& jp : j["points"]) {
        if (!jp.is_array() || static_cast<long long>(jp.size()) != n)
            throw std::runtime_error("each point needs exactly n complex entries");
        std::vector<cplx> v;
        for (const auto& e : jp) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                throw std::runtime_error("complex entries are [re, im] pairs");
            v.emplace_back(e[0].get<double>(), e[1].get<double>());
        }
        try {
            pts.emplace_back(ComplexVector(std::move(v)));
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error(std::string("bad point: ") + e.what());
        }
    }
    return Configuration(std::move(pts));
}

Configuration read_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return config_from_json(ss.str());
}

std::string config_to_json(const Configuration& c) {
    std::string out = "{\n  \"n\": " + std::to_string(c.dim()) + ",\n  \"points\": [";
    for (std::size_t i = 0; i < c.size(); ++i) {
        out += i ? ",\n    [" : "\n    [";
        for (std::size_t k = 0; k < c.dim(); ++k) {
            if (k) out += ", ";
            out += "[" + fmt17(c[i][k].real()) + ", " + fmt17(c[i][k].imag()) + "]";
        }
        out += "]";
    }
    out += "\n  ]\n}\n";
    return out;
}

void write_config(const std::filesystem::path& path, const Configuration& c) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << config_to_json(c);
}

}  // namespace sicp
