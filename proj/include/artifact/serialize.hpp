#ifndef ARTIFACT_SERIALIZE_HPP
#define ARTIFACT_SERIALIZE_HPP

#include <json.hpp>

#include "artifact/poly.hpp"

namespace artifact {

// {"vars": [...], "terms": [{"e": [...], "c": "p/q"}, ...]} with terms in
// increasing monomial order.
template <class U>
nlohmann::ordered_json poly_to_json(const Poly<U>& p)
{
    nlohmann::ordered_json j;
    j["vars"] = nlohmann::ordered_json::array();
    for (auto* n : U::names) j["vars"].push_back(n);
    j["terms"] = nlohmann::ordered_json::array();
    for (auto& t : p.terms()) {
        nlohmann::ordered_json term;
        term["e"] = Monomial<U>(t.first).exponents();
        term["c"] = t.second.str();
        j["terms"].push_back(std::move(term));
    }
    return j;
}

template <class U>
Poly<U> poly_from_json(const nlohmann::ordered_json& j)
{
    std::vector<typename Poly<U>::Term> terms;
    for (auto& term : j.at("terms")) {
        std::array<int, U::nvars> e{};
        for (int i = 0; i < U::nvars; ++i) e[i] = term.at("e").at(i).template get<int>();
        terms.emplace_back(Monomial<U>::from_exponents(e).key(),
                           Rational::parse(term.at("c").template get<std::string>()));
    }
    return Poly<U>::from_terms(std::move(terms));
}

} // namespace artifact

#endif
