#ifndef TTLAB_TAU_JSON_HPP
#define TTLAB_TAU_JSON_HPP

#include <json.hpp>

#include "ttlab/tau.hpp"

namespace ttlab {

// {model, n, order, variables, normalization, terms: [{exponents, numerator,
// denominator, pi_power}]}; numerators and denominators are decimal strings
// so arbitrary-precision values survive the trip.
inline nlohmann::json tau_to_json(const TauSeries& t) {
    nlohmann::json j;
    j["model"] = t.spec.str();
    j["n"] = t.n;
    j["order"] = t.order;
    nlohmann::json vars = nlohmann::json::array();
    TablePtr table = t.series.table();
    for (int v = 0; v < table->size(); ++v) vars.push_back(table->name(v));
    j["variables"] = vars;
    j["normalization"] = {{"numerator", t.normalization.value.get_num().get_str()},
                          {"denominator", t.normalization.value.get_den().get_str()},
                          {"pi_power", t.normalization.pi_power}};
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : t.series.terms()) {
        nlohmann::json term;
        nlohmann::json expo = nlohmann::json::array();
        for (int v = 0; v < table->size(); ++v) expo.push_back(m[v]);
        term["exponents"] = expo;
        term["numerator"] = c.get_num().get_str();
        term["denominator"] = c.get_den().get_str();
        term["pi_power"] = 0;  // the series is normalized; pi sits in `normalization`
        terms.push_back(term);
    }
    j["terms"] = terms;
    return j;
}

}  // namespace ttlab

#endif
