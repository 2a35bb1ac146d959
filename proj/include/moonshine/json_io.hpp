#ifndef MOONSHINE_JSON_IO_HPP
#define MOONSHINE_JSON_IO_HPP

#include "moonshine/laurent_series.hpp"

#include <json.hpp>

namespace moonshine {

/// {"valuation": v, "order": N, "coeffs": [["num","den"], ...]} with the
/// integers as decimal strings (coefficients exceed 64 bits quickly).
inline nlohmann::json series_to_json(const LaurentSeries& f) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int e = f.valuation(); e <= f.order(); ++e) {
        const Rat c = f.coefficient(e);
        coeffs.push_back({numerator(c).str(), denominator(c).str()});
    }
    return {{"valuation", f.valuation()}, {"order", f.order()}, {"coeffs", coeffs}};
}

inline LaurentSeries series_from_json(const nlohmann::json& j) {
    const int val = j.at("valuation").get<int>();
    const int order = j.at("order").get<int>();
    std::vector<Rat> coeffs;
    for (const auto& pair : j.at("coeffs")) {
        const Int num(pair.at(0).get<std::string>());
        const Int den(pair.at(1).get<std::string>());
        coeffs.emplace_back(num, den);
    }
    if (coeffs.empty()) return LaurentSeries::zero(order);
    return LaurentSeries(val, order, std::move(coeffs));
}

} // namespace moonshine

#endif
