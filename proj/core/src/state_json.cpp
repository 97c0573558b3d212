#include "quadcoh/states/state_json.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "quadcoh/errors.hpp"

namespace quadcoh {

namespace {

using nlohmann::json;

void require_fields(const json& obj, const std::set<std::string>& allowed,
                    const std::set<std::string>& required) {
    for (const auto& item : obj.items()) {
        if (!allowed.contains(item.key()))
            throw ParseError("state spec: unknown field \"" + item.key() + "\"");
    }
    for (const auto& key : required) {
        if (!obj.contains(key))
            throw ParseError("state spec: missing field \"" + key + "\"");
    }
}

double number_field(const json& obj, const std::string& key, double fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number())
        throw ParseError("state spec: field \"" + key + "\" must be a number");
    return obj[key].get<double>();
}

std::complex<double> complex_pair(const json& v, const std::string& context) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        throw ParseError("state spec: " + context + " entries must be [re, im] pairs");
    return {v[0].get<double>(), v[1].get<double>()};
}

StateModel parse_object(const json& obj);

StateModel parse_gaussian(const json& obj) {
    require_fields(obj, {"type", "x_mean", "y_mean", "delta_x"}, {});
    return GaussianPureState::minimum_uncertainty(number_field(obj, "x_mean", 0.0),
                                                  number_field(obj, "y_mean", 0.0),
                                                  number_field(obj, "delta_x", 0.5));
}

StateModel parse_thermal(const json& obj) {
    require_fields(obj, {"type", "n_mean"}, {"n_mean"});
    return ThermalState{number_field(obj, "n_mean", 0.0)};
}

StateModel parse_fock_vector(const json& obj) {
    require_fields(obj, {"type", "coefficients"}, {"coefficients"});
    const json& coeffs = obj["coefficients"];
    if (!coeffs.is_array() || coeffs.empty())
        throw ParseError("state spec: \"coefficients\" must be a nonempty array");
    FockVector v;
    v.coefficients.reserve(coeffs.size());
    for (const auto& c : coeffs) v.coefficients.push_back(complex_pair(c, "coefficients"));
    return v;
}

StateModel parse_fock_matrix(const json& obj) {
    require_fields(obj, {"type", "entries"}, {"entries"});
    const json& rows = obj["entries"];
    if (!rows.is_array() || rows.empty())
        throw ParseError("state spec: \"entries\" must be a nonempty matrix");
    const std::size_t dim = rows.size();
    FockDensityMatrix m;
    m.entries.resize(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        if (!rows[i].is_array() || rows[i].size() != dim)
            throw ParseError("state spec: \"entries\" must be square");
        for (std::size_t j = 0; j < dim; ++j)
            m.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                complex_pair(rows[i][j], "entries");
    }
    return m;
}

StateModel parse_product(const json& obj) {
    require_fields(obj, {"type", "factors"}, {"factors"});
    const json& factors = obj["factors"];
    if (!factors.is_array() || factors.empty())
        throw ParseError("state spec: \"factors\" must be a nonempty array");
    ProductState p;
    p.factors.reserve(factors.size());
    for (const auto& f : factors) p.factors.push_back(parse_object(f));
    return p;
}

StateModel parse_object(const json& obj) {
    if (!obj.is_object()) throw ParseError("state spec: expected a JSON object");
    if (!obj.contains("type") || !obj["type"].is_string())
        throw ParseError("state spec: missing \"type\"");
    const std::string type = obj["type"].get<std::string>();
    if (type == "gaussian") return parse_gaussian(obj);
    if (type == "thermal") return parse_thermal(obj);
    if (type == "fock_vector") return parse_fock_vector(obj);
    if (type == "fock_matrix") return parse_fock_matrix(obj);
    if (type == "product") return parse_product(obj);
    throw ParseError("state spec: unknown type \"" + type + "\"");
}

}  // namespace

StateModel parse_state_spec(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("state spec: invalid JSON: ") + e.what());
    }
    return parse_object(doc);
}

StateModel load_state_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("state spec: cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_state_spec(buf.str());
}

}  // namespace quadcoh
