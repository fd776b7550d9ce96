#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyclo/polynomial.hpp"
#include "cyclo/primesearch.hpp"
#include "cyclo/structure.hpp"

namespace cyclo {

// JSON wire formats. Coefficients travel as decimal strings so arbitrary
// precision survives the trip; object keys keep their insertion order.
using Json = nlohmann::ordered_json;

// ["c0", "c1", ...] ascending degree; the zero polynomial is [].
inline Json to_json(const Polynomial& p) {
    Json arr = Json::array();
    for (const Int& c : p.coefficients())
        arr.push_back(c.str());
    return arr;
}

inline Polynomial polynomial_from_json(const Json& j) {
    if (!j.is_array())
        throw std::invalid_argument("polynomial JSON must be an array of coefficient strings");
    std::vector<Int> coeffs;
    coeffs.reserve(j.size());
    for (const auto& item : j) {
        if (item.is_string())
            coeffs.emplace_back(item.get<std::string>());
        else if (item.is_number_integer())
            coeffs.emplace_back(item.get<long long>());
        else
            throw std::invalid_argument("polynomial JSON coefficients must be strings or integers");
    }
    return Polynomial(std::move(coeffs));
}

// [{"index": 9, "multiplicity": 1}, ...] sorted by index.
inline Json to_json(const CycloProduct& f) {
    Json arr = Json::array();
    for (const auto& [idx, mult] : f.entries)
        arr.push_back(Json{{"index", idx}, {"multiplicity", mult}});
    return arr;
}

inline CycloProduct cyclo_product_from_json(const Json& j) {
    if (!j.is_array())
        throw std::invalid_argument("cyclotomic product JSON must be an array");
    CycloProduct f;
    for (const auto& item : j) {
        const std::uint64_t idx = item.at("index").get<std::uint64_t>();
        const std::uint64_t mult = item.at("multiplicity").get<std::uint64_t>();
        if (idx == 0 || mult == 0)
            throw std::invalid_argument("cyclotomic product entries must be positive");
        f.entries[idx] += mult;
    }
    return f;
}

// {"k":..., "n":..., "a_max":..., "hits":[...], "count":..., "primality_mode":"..."}
inline Json to_json(const PrimeSearchReport& r) {
    Json j;
    j["k"] = r.k;
    j["n"] = r.n;
    j["a_max"] = r.a_max;
    j["hits"] = r.hits;
    j["count"] = r.hits.size();
    j["primality_mode"] = r.primality_mode;
    return j;
}

inline PrimeSearchReport report_from_json(const Json& j) {
    PrimeSearchReport r;
    r.k = j.at("k").get<std::uint64_t>();
    r.n = j.at("n").get<std::uint64_t>();
    r.a_max = j.at("a_max").get<std::uint64_t>();
    r.hits = j.at("hits").get<std::vector<std::uint64_t>>();
    r.primality_mode = j.at("primality_mode").get<std::string>();
    if (j.at("count").get<std::uint64_t>() != r.hits.size())
        throw std::invalid_argument("report JSON: count does not match hits");
    r.irreducible = is_irreducible_composition(r.k, r.n);
    return r;
}

} // namespace cyclo
