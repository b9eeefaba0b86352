#include "riemcurv/series_json.hpp"

namespace riemcurv {

nlohmann::ordered_json series_to_json(const GradedSeries& s) {
    nlohmann::ordered_json j;
    j["alphabet"] = nlohmann::ordered_json::array();
    for (const auto& v : s.alphabet().vars())
        j["alphabet"].push_back({{"name", v.name}, {"weight", v.weight}});
    j["order"] = s.order();
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [m, c] : s.terms()) {
        nlohmann::ordered_json mono = nlohmann::ordered_json::object();
        for (size_t i = 0; i < s.alphabet().size(); ++i)
            if (m[i] > 0) mono[s.alphabet().var(i).name] = m[i];
        j["terms"].push_back({{"monomial", std::move(mono)}, {"coeff", c.to_string()}});
    }
    return j;
}

GradedSeries series_from_json(const nlohmann::ordered_json& j) {
    std::vector<Variable> vars;
    for (const auto& v : j.at("alphabet"))
        vars.push_back({v.at("name").get<std::string>(), v.at("weight").get<int>()});
    Alphabet alphabet(std::move(vars));
    GradedSeries s(alphabet, j.at("order").get<long>());
    for (const auto& t : j.at("terms")) {
        std::vector<unsigned> exps(alphabet.size(), 0);
        for (const auto& [name, e] : t.at("monomial").items())
            exps.at(alphabet.index_of(name)) = e.get<unsigned>();
        s.add_term(Monomial(std::move(exps)), ExactScalar::parse(t.at("coeff").get<std::string>()));
    }
    return s;
}

}  // namespace riemcurv
