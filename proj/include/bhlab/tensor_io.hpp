#pragma once

// JSON tensor format:
//   {"field":"real"|"complex","shape":[n1,...,nm],"entries":[...]}
// row-major entries, complex entries as [re, im] pairs.

#include <fstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "bhlab/tensor.hpp"

namespace bhlab {

using AnyTensor = std::variant<Tensor<double>, Tensor<std::complex<double>>>;

inline nlohmann::json tensor_to_json(const Tensor<double>& t) {
    nlohmann::json j;
    j["field"] = "real";
    j["shape"] = std::vector<std::size_t>(t.shape().begin(), t.shape().end());
    j["entries"] = std::vector<double>(t.entries().begin(), t.entries().end());
    return j;
}

inline nlohmann::json tensor_to_json(const Tensor<std::complex<double>>& t) {
    nlohmann::json j;
    j["field"] = "complex";
    j["shape"] = std::vector<std::size_t>(t.shape().begin(), t.shape().end());
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& z : t.entries()) entries.push_back({z.real(), z.imag()});
    j["entries"] = std::move(entries);
    return j;
}

inline nlohmann::json tensor_to_json(const AnyTensor& t) {
    return std::visit([](const auto& x) { return tensor_to_json(x); }, t);
}

inline AnyTensor tensor_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("shape") || !j.contains("entries"))
        throw std::runtime_error("tensor JSON needs field, shape and entries");
    const Field field = field_from_string(j.at("field").get<std::string>());
    auto shape = j.at("shape").get<std::vector<std::size_t>>();
    const auto& entries = j.at("entries");
    if (!entries.is_array()) throw std::runtime_error("tensor entries must be an array");
    if (field == Field::Real) {
        std::vector<double> e;
        e.reserve(entries.size());
        for (const auto& v : entries) {
            if (!v.is_number()) throw std::runtime_error("real tensor entries must be numbers");
            e.push_back(v.get<double>());
        }
        return Tensor<double>(std::move(shape), std::move(e));
    }
    std::vector<std::complex<double>> e;
    e.reserve(entries.size());
    for (const auto& v : entries) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
            throw std::runtime_error("complex tensor entries must be [re, im] pairs");
        e.emplace_back(v[0].get<double>(), v[1].get<double>());
    }
    return Tensor<std::complex<double>>(std::move(shape), std::move(e));
}

inline AnyTensor load_tensor(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open tensor file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("malformed tensor file " + path + ": " + e.what());
    }
    return tensor_from_json(j);
}

inline void save_tensor(const std::string& path, const AnyTensor& t) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write tensor file: " + path);
    out << tensor_to_json(t).dump(2) << '\n';
}

} // namespace bhlab
