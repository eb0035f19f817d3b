#include "crepant/json_io.hpp"

#include <regex>

#include "crepant/errors.hpp"

namespace crepant {

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const CycNum& c) {
    const CycNum m = c.minimized();
    Json coeffs = Json::array();
    for (const auto& r : m.coeffs()) coeffs.push_back(to_json(r));
    return Json{{"conductor", m.conductor()}, {"coeffs", coeffs}};
}

Json to_json(const Geometry& g) {
    Json out{{"n", g.n()},
             {"base", {{"model", g.base.model_name()}, {"dim", g.base.dim()}}},
             {"classes", Json::object()}};
    if (g.n() >= 2) {
        out["classes"]["l"] = to_json(g.taut.ell_multiple);
        out["classes"]["m"] = to_json(g.taut.em_multiple);
    }
    out["classes"]["k"] = to_json(g.taut.kap_multiple);
    return out;
}

Json to_json(const QPoint& q) {
    Json out = Json::array();
    for (const auto& v : q.q) out.push_back(to_json(v));
    return out;
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw ValidationError("expected a rational (string \"p/q\" or integer), got " + j.dump());
}

CycNum cyc_from_json(const Json& j) {
    if (j.is_string()) return parse_cyc(j.get<std::string>());
    if (j.is_number_integer()) return CycNum(Rational(j.get<long>()));
    if (!j.is_object() || !j.contains("conductor") || !j.contains("coeffs")) {
        throw ValidationError("expected {\"conductor\", \"coeffs\"}, got " + j.dump());
    }
    const int conductor = j.at("conductor").get<int>();
    if (conductor < 1) throw ValidationError("conductor must be positive");
    const auto& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != euler_phi(conductor)) {
        throw ValidationError("coeffs must hold phi(N) entries");
    }
    std::vector<Rational> poly;
    for (const auto& c : coeffs) poly.push_back(rational_from_json(c));
    return CycNum::from_poly(conductor, poly);
}

namespace {

template <class K, class Parse>
Graded<K> graded_from(const Json& j, Parse parse) {
    if (!j.is_array() || j.empty()) throw ValidationError("expected a non-empty coefficient array");
    Graded<K> g(j.size());
    for (std::size_t k = 0; k < j.size(); ++k) g[k] = parse(j[k]);
    return g;
}

template <class Tag, class K, class Parse>
RingElement<Tag, K> element_from(const Json& j, Parse parse) {
    if (!j.is_object() || !j.contains("y") || !j.contains("twisted")) {
        throw ValidationError("expected {\"y\", \"twisted\"}");
    }
    RingElement<Tag, K> x;
    x.y.base = graded_from<K>(j.at("y").at("base"), parse);
    x.y.sigma = graded_from<K>(j.at("y").at("sigma"), parse);
    for (const auto& t : j.at("twisted")) x.twisted.push_back(graded_from<K>(t, parse));
    for (const auto& t : x.twisted) {
        if (t.size() != x.y.base.size()) throw ValidationError("twisted part over a different base ring");
    }
    if (x.y.sigma.size() != x.y.base.size()) throw ValidationError("sigma part over a different base ring");
    return x;
}

}  // namespace

GradedClass graded_from_json(const Json& j) { return graded_from<Rational>(j, rational_from_json); }
CycGradedClass cyc_graded_from_json(const Json& j) { return graded_from<CycNum>(j, cyc_from_json); }
ResClass res_class_from_json(const Json& j) { return element_from<ResTag, Rational>(j, rational_from_json); }
OrbClass orb_class_from_json(const Json& j) { return element_from<OrbTag, Rational>(j, rational_from_json); }
CycResClass cyc_res_class_from_json(const Json& j) { return element_from<ResTag, CycNum>(j, cyc_from_json); }

QPoint qpoint_from_json(const Json& j) {
    if (j.is_string()) {
        const std::string text = j.get<std::string>();
        const auto count = std::count(text.begin(), text.end(), ',') + 1;
        return parse_qpoint(text, static_cast<int>(count));
    }
    if (!j.is_array()) throw ValidationError("expected a q-point array");
    QPoint q;
    for (const auto& v : j) q.q.push_back(cyc_from_json(v));
    return q;
}

Geometry geometry_from_json(const Json& j) {
    if (!j.is_object()) throw ValidationError("geometry must be a JSON object");
    if (!j.contains("n") || !j.at("n").is_number_integer()) throw ValidationError("geometry needs an integer \"n\"");
    const int n = j.at("n").get<int>();
    BaseRing base = BaseRing::point();
    if (j.contains("base")) {
        const auto& b = j.at("base");
        const std::string model = b.value("model", "point");
        if (model == "point") {
            base = BaseRing::point();
        } else if (model == "projective_space") {
            if (!b.contains("dim") || !b.at("dim").is_number_integer()) {
                throw ValidationError("projective_space needs an integer \"dim\"");
            }
            base = BaseRing::projective_space(b.at("dim").get<int>());
        } else {
            throw ValidationError("unknown base model '" + model + "' (point or projective_space)");
        }
    }
    const Json classes = j.value("classes", Json::object());
    auto read = [&classes](const char* key) {
        return classes.contains(key) ? rational_from_json(classes.at(key)) : Rational(0);
    };
    if (n == 1) return Geometry::make(1, base, 0, 0, read("k"));
    return Geometry::make(n, base, read("l"), read("m"), read("k"));
}

Config config_from_json(const Json& j) {
    Config c{geometry_from_json(j), {}, std::nullopt};
    if (j.contains("flags") && j.at("flags").contains("twist")) {
        c.flags = ConventionFlags::parse(j.at("flags").at("twist").get<std::string>(), c.geometry.n());
    }
    if (j.contains("q")) c.q = j.at("q").get<std::string>();
    return c;
}

Json config_to_json(const Config& c) {
    Json out = to_json(c.geometry);
    out["flags"] = {{"twist", c.flags.describe()}};
    if (c.q) out["q"] = *c.q;
    return out;
}

QSeries parse_qseries(const std::string& text) {
    static const std::regex term(R"(\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?(d\((\d+),(\d+)\))?\s*)");
    QSeries out;
    std::string rest = text;
    if (rest.find_first_not_of(" \t") == std::string::npos) throw ValidationError("empty series");
    bool first = true;
    while (rest.find_first_not_of(" \t") != std::string::npos) {
        std::smatch m;
        if (!std::regex_search(rest, m, term, std::regex_constants::match_continuous) || m.length(0) == 0 ||
            (!m[2].matched && !m[3].matched) || (!first && !m[1].matched)) {
            throw ValidationError("malformed series '" + text + "'");
        }
        Rational c = m[2].matched ? Rational::parse(m[2].str()) : Rational(1);
        if (m[1].matched && m[1].str() == "-") c = -c;
        if (m[3].matched) {
            out += QSeries::atom({std::stoi(m[4].str()), std::stoi(m[5].str())}, c);
        } else {
            out += QSeries(c);
        }
        rest = m.suffix();
        first = false;
    }
    return out;
}

namespace {

std::string power_label(std::size_t p) {
    if (p == 0) return "";
    if (p == 1) return "h";
    return "h^" + std::to_string(p);
}

std::string scalar_label(const Rational& c, bool& negative) {
    negative = c.sign() < 0;
    const Rational a = negative ? -c : c;
    return a == Rational(1) ? "" : a.to_string();
}

std::string scalar_label(const CycNum& c, bool& negative) {
    if (const auto r = c.as_rational()) return scalar_label(*r, negative);
    negative = false;
    return "(" + c.to_string() + ")";
}

}  // namespace

template <class Tag, class K>
std::string render(const RingElement<Tag, K>& x) {
    std::string out;
    auto term = [&out](const K& c, std::vector<std::string> parts) {
        if (c.is_zero()) return;
        bool negative = false;
        const std::string s = scalar_label(c, negative);
        std::string body;
        if (!s.empty()) parts.insert(parts.begin(), s);
        for (const auto& p : parts) {
            if (p.empty()) continue;
            body += body.empty() ? p : "*" + p;
        }
        if (body.empty()) body = "1";
        if (out.empty()) {
            out = negative ? "-" + body : body;
        } else {
            out += negative ? " - " : " + ";
            out += body;
        }
    };
    for (std::size_t p = 0; p < x.size(); ++p) term(x.y.base[p], {power_label(p)});
    for (std::size_t p = 0; p < x.size(); ++p) term(x.y.sigma[p], {power_label(p), "sigma"});
    for (std::size_t a = 0; a < x.twisted.size(); ++a) {
        for (std::size_t p = 0; p < x.size(); ++p) {
            term(x.twisted[a][p], {power_label(p), std::string(Tag::generator) + std::to_string(a + 1)});
        }
    }
    return out.empty() ? "0" : out;
}

template std::string render(const RingElement<OrbTag, Rational>&);
template std::string render(const RingElement<ResTag, Rational>&);
template std::string render(const RingElement<OrbTag, CycNum>&);
template std::string render(const RingElement<ResTag, CycNum>&);

}  // namespace crepant
