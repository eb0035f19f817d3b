#pragma once

#include <optional>
#include <string>

#include "crepant/base_geometry.hpp"
#include "crepant/chen_ruan.hpp"
#include "crepant/cyclotomic.hpp"
#include "crepant/quantum.hpp"
#include "crepant/ring_element.hpp"
#include "json.hpp"

namespace crepant {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const CycNum& c);  // minimal conductor, {"conductor", "coeffs"}

template <class K>
Json to_json(const Graded<K>& g) {
    Json out = Json::array();
    for (const auto& c : g.coeffs()) out.push_back(to_json(c));
    return out;
}

template <class K>
Json to_json(const Total<K>& t) {
    return Json{{"base", to_json(t.base)}, {"sigma", to_json(t.sigma)}};
}

template <class Tag, class K>
Json to_json(const RingElement<Tag, K>& x) {
    Json twisted = Json::array();
    for (const auto& t : x.twisted) twisted.push_back(to_json(t));
    return Json{{"y", to_json(x.y)}, {"twisted", twisted}};
}

Json to_json(const Geometry& g);
Json to_json(const QPoint& q);

Rational rational_from_json(const Json& j);
CycNum cyc_from_json(const Json& j);
GradedClass graded_from_json(const Json& j);
CycGradedClass cyc_graded_from_json(const Json& j);
ResClass res_class_from_json(const Json& j);
OrbClass orb_class_from_json(const Json& j);
CycResClass cyc_res_class_from_json(const Json& j);
QPoint qpoint_from_json(const Json& j);

/// Run configuration: the geometry plus optional defaults for the twist
/// flag and the q-spec.
struct Config {
    Geometry geometry;
    ConventionFlags flags;
    std::optional<std::string> q;
};

/// {"n": 2, "base": {"model": "projective_space", "dim": 1},
///  "classes": {"l": "1", "m": "2", "k": "1"}, "flags": {"twist": "-1/(n+1)"},
///  "q": "zeta3,zeta3"}. Class values may be strings or integers.
Geometry geometry_from_json(const Json& j);
Config config_from_json(const Json& j);
Json config_to_json(const Config& c);

/// Parses QSeries::to_string output back ("2 - 8*d(1,1) + 1/3*d(1,2)").
QSeries parse_qseries(const std::string& text);

/// "-2*sigma + 1/3*h*E1", "(2 + zeta3)*e1", "0".
template <class Tag, class K>
std::string render(const RingElement<Tag, K>& x);

extern template std::string render(const RingElement<OrbTag, Rational>&);
extern template std::string render(const RingElement<ResTag, Rational>&);
extern template std::string render(const RingElement<OrbTag, CycNum>&);
extern template std::string render(const RingElement<ResTag, CycNum>&);

}  // namespace crepant
