#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "crepant/cartan.hpp"
#include "crepant/errors.hpp"
#include "crepant/gromov_witten.hpp"
#include "crepant/json_io.hpp"
#include "crepant/mckay.hpp"
#include "crepant/resolution.hpp"
#include "crepant/verify.hpp"

namespace crepant::cli {

namespace {

enum class DefaultGeometry { A1, A2 };

Config default_config(DefaultGeometry kind) {
    if (kind == DefaultGeometry::A1) return {Geometry::make(1, BaseRing::projective_space(1), 0, 0, 1), {}, "-1"};
    return {Geometry::make(2, BaseRing::projective_space(1), 1, 2, 1), {}, std::nullopt};
}

Config load_config(const std::string& path, DefaultGeometry fallback) {
    if (path.empty()) return default_config(fallback);
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read config file '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::exception& e) {
        throw ValidationError("config file '" + path + "' is not valid JSON: " + e.what());
    }
    return config_from_json(j);
}

Json conventions(const Config& c) {
    Json out{{"twist", c.flags.describe()}, {"twist_value", to_json(c.flags.twist_value(c.geometry.n()))}};
    out["model_dependent"] = c.geometry.model_dependent();
    if (c.geometry.model_dependent()) {
        out["model_caveat"] =
            "dim_C S >= 2: the square-zero model of H*(Y) sets i^* i_* = 0, which is an extra assumption";
    }
    out["gw_assumption"] = kGwAssumption;
    return out;
}

Json violations_json(const std::vector<Violation>& v) {
    Json out = Json::array();
    for (const auto& x : v) {
        out.push_back({{"where", x.where}, {"component", x.component}, {"difference", to_json(x.difference)}});
    }
    return out;
}

Json hom_report_json(const HomReport& r) {
    return Json{{"pass", r.pass}, {"singular", r.singular}, {"violations", violations_json(r.violations)}};
}

Json matrix_json(const IntMatrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        out.push_back(row);
    }
    return out;
}

Json matrix_json(const RatMatrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        out.push_back(row);
    }
    return out;
}

// Text rendering for reports that carry no dedicated table: one
// "path  value" line per leaf, aligned.
void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object() && !(j.contains("conductor") && j.contains("coeffs") && j.size() == 2)) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
    } else if (j.is_object()) {
        rows.emplace_back(prefix, cyc_from_json(j).to_string());
    } else if (j.is_string()) {
        rows.emplace_back(prefix, j.get<std::string>());
    } else {
        rows.emplace_back(prefix, j.dump());
    }
}

std::string aligned(const std::vector<std::pair<std::string, std::string>>& rows) {
    std::size_t width = 0;
    for (const auto& r : rows) width = std::max(width, r.first.size());
    std::ostringstream out;
    for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << "\n";
    return out.str();
}

struct Report {
    Json json;
    std::vector<std::pair<std::string, std::string>> table;  // preferred text rows
};

struct Options {
    std::string output = "json";
    std::string config;
    std::string flag;
    std::string q;
    std::string scalar;
    std::string gamma;
    std::vector<std::string> insert;
    std::string coeff;
    std::string ring = "orb";
    std::string group;
    std::string exponents;
    int max_order = 12;
    int n = 0;
    int order = 0;
    bool series = false;
    bool resolution = false;
};

Config configured(const Options& o, DefaultGeometry fallback) {
    Config c = load_config(o.config, fallback);
    if (!o.flag.empty()) c.flags = ConventionFlags::parse(o.flag, c.geometry.n());
    return c;
}

Json base_report(const Config& c) { return Json{{"conventions", conventions(c)}, {"geometry", config_to_json(c)}}; }

QPoint q_from(const Options& o, const Config& c) {
    const std::string text = !o.q.empty() ? o.q : c.q.value_or("");
    if (text.empty()) throw ValidationError("no q-point given (use --q or a \"q\" entry in the config)");
    return parse_qpoint(text, c.geometry.n());
}

template <class Table>
Report table_report(const Config& c, const Table& table) {
    Report r{base_report(c), {}};
    Json products = Json::object();
    for (const auto& e : table) {
        const std::string key = e.left + "*" + e.right;
        products[key] = to_json(e.product);
        r.table.emplace_back(key, render(e.product));
    }
    r.json["products"] = products;
    return r;
}

Report cmd_orb_table(const Options& o) {
    const Config c = configured(o, DefaultGeometry::A2);
    return table_report(c, orbifold_table(OrbifoldRing(c.geometry, c.flags)).entries);
}

Report cmd_res_table(const Options& o) {
    const Config c = configured(o, DefaultGeometry::A2);
    return table_report(c, resolution_table(ResolutionRing(c.geometry)).entries);
}

// "h", "2*h", "h^2", "1/2", "3*h^1".
GradedClass parse_base_class(const std::string& text, std::size_t size) {
    static const std::regex pattern(R"(\s*(?:([+-]?\d+(?:/\d+)?)\s*\*?\s*)?(h(?:\^(\d+))?)?\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, pattern) || (!m[1].matched && !m[2].matched)) {
        throw ValidationError("malformed base class '" + text + "' (use e.g. 1, h, 2*h, h^2)");
    }
    const Rational c = m[1].matched ? Rational::parse(m[1].str()) : Rational(1);
    const std::size_t power = m[2].matched ? (m[3].matched ? std::stoul(m[3].str()) : 1) : 0;
    return GradedClass::monomial(size, power, c);
}

std::vector<std::string> split(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        token.erase(0, token.find_first_not_of(" \t"));
        token.erase(token.find_last_not_of(" \t") + 1);
        out.push_back(token);
    }
    return out;
}

Report cmd_gw(const Options& o) {
    const Config c = configured(o, DefaultGeometry::A2);
    const Geometry& g = c.geometry;
    const CurveClass gamma = parse_curve_class(g.n(), o.gamma);
    const std::vector<std::string>& tokens = o.insert;
    if (tokens.size() != 3) throw ValidationError("--insert needs exactly three comma-separated insertions");
    auto coeffs = o.coeff.empty() ? std::vector<std::string>{"1", "1", "1"} : split(o.coeff);
    if (coeffs.size() != 3) throw ValidationError("--coeff needs exactly three comma-separated classes");
    const ResolutionRing ring(g);
    std::array<ResClass, 3> insertions;
    static const std::regex exceptional(R"(E(\d+))");
    for (std::size_t t = 0; t < 3; ++t) {
        const GradedClass alpha = parse_base_class(coeffs[t], g.size());
        std::smatch m;
        if (std::regex_match(tokens[t], m, exceptional)) {
            insertions[t] = ring.exc_push(std::stoi(m[1].str()), alpha);
        } else if (tokens[t] == "Y") {
            insertions[t] = ring.rho_pull(TotalClass{alpha, GradedClass(g.size())});
        } else if (tokens[t] == "sigma") {
            insertions[t] = ring.rho_pull(TotalClass{GradedClass(g.size()), alpha});
        } else {
            throw ValidationError("insertion '" + tokens[t] + "' is not E<l>, Y or sigma");
        }
    }
    Report r{base_report(c), {}};
    const Rational value = gw_invariant(g, gamma, insertions);
    r.json["gamma"] = gamma.to_string();
    r.json["insertions"] = tokens;
    r.json["coefficients"] = coeffs;
    r.json["symplectic"] = gw_vanishing_symplectic(g.taut);
    r.json["value"] = to_json(value);
    return r;
}

Report cmd_qc_table(const Options& o) {
    const Config c = configured(o, DefaultGeometry::A2);
    const int n = c.geometry.n();
    if (o.series) {
        Report r{base_report(c), {}};
        Json rpoly = Json::object();
        for (int i = 1; i <= n; ++i) {
            for (int j = i; j <= n; ++j) {
                for (int m = j; m <= n; ++m) {
                    const std::string key = "R(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(m) + ")";
                    rpoly[key] = r_poly(i, j, m, n).to_string();
                }
            }
        }
        Json products = Json::object();
        for (int i = 1; i <= n; ++i) {
            for (int j = i; j <= n; ++j) {
                const std::string key = "E" + std::to_string(i) + "*E" + std::to_string(j);
                Json entry{{"sigma", to_json(Rational(std::abs(i - j) > 1 ? 0 : (i == j ? -2 : 1)))}};
                for (int l = 1; l <= n; ++l) {
                    const auto coeff = quantum_coefficient(i, j, l, n);
                    const std::string slot = "E" + std::to_string(l);
                    entry[slot] = {{"em", to_json(coeff.em)}, {"kap", coeff.kap.to_string()}};
                    r.table.emplace_back(key + " " + slot,
                                         "(" + coeff.em.to_string() + ")*M + (" + coeff.kap.to_string() + ")*K");
                }
                products[key] = entry;
            }
        }
        r.json["r_poly"] = rpoly;
        r.json["products"] = products;
        return r;
    }
    const QPoint q = q_from(o, c);
    Report r = table_report(c, quantum_table(QuantumRing(c.geometry, q)));
    r.json["q"] = to_json(q);
    return r;
}

Report cmd_verify_a1(const Options& o) {
    Config c = configured(o, DefaultGeometry::A1);
    const QPoint q = parse_qpoint(!o.q.empty() ? o.q : c.q.value_or("-1"), c.geometry.n());
    Report r{base_report(c), {}};
    r.json["q"] = to_json(q);
    r.json["direction"] = "orbifold->resolution: (delta, alpha) -> (delta, c*alpha)";
    if (!o.scalar.empty()) {
        const CycNum scalar = parse_cyc(o.scalar);
        r.json["scalar"] = to_json(scalar);
        const Json h = hom_report_json(verify_a1(c.geometry, scalar, q, c.flags));
        for (const auto& [k, v] : h.items()) r.json[k] = v;
        return r;
    }
    auto sample = a1_scalar_sample();
    sample.push_back(CycNum::imaginary_unit() * CycNum(Rational(1, 2)));
    sample.push_back(CycNum::imaginary_unit() * CycNum(Rational(-1, 2)));
    Json passing = Json::array();
    for (const auto& s : sample) {
        if (verify_a1(c.geometry, s, q, c.flags).pass) passing.push_back(to_json(s));
    }
    r.json["tested"] = sample.size();
    r.json["passing"] = passing;
    return r;
}

Report cmd_solve_a2(const Options& o) {
    const Config c = configured(o, DefaultGeometry::A2);
    const A2SolveReport s = solve_a2_symmetric(c.geometry, o.max_order, c.flags);
    Report r{base_report(c), {}};
    r.json["max_order"] = o.max_order;
    r.json["searched"] = s.searched.size();
    Json solutions = Json::array();
    for (const auto& x : s.solutions) {
        solutions.push_back({{"order", x.order}, {"power", x.power}, {"q", to_json(x.q)}, {"a", to_json(x.a)},
                             {"b", to_json(x.b)}});
        r.table.emplace_back("q = zeta" + std::to_string(x.order) + "^" + std::to_string(x.power),
                             "a = " + x.a.to_string() + ", b = " + x.b.to_string());
    }
    Json poles = Json::array();
    for (const auto& p : s.poles) {
        poles.push_back({{"order", p.order}, {"power", p.power}, {"q", to_json(p.q)}, {"span", {p.span.r, p.span.s}}});
        r.table.emplace_back("pole q = zeta" + std::to_string(p.order) + "^" + std::to_string(p.power),
                             "span " + p.span.to_string());
    }
    r.json["solutions"] = solutions;
    r.json["poles"] = poles;
    return r;
}

Report cmd_check_assoc(const Options& o) {
    const Config c = configured(o, DefaultGeometry::A2);
    RingId ring;
    QPoint q;
    if (o.ring == "orb") {
        ring = RingId::Orbifold;
    } else if (o.ring == "res") {
        ring = RingId::Resolution;
    } else if (o.ring == "quantum") {
        ring = RingId::Quantum;
        q = q_from(o, c);
    } else {
        throw ValidationError("--ring must be orb, res or quantum");
    }
    Report r{base_report(c), {}};
    r.json["ring"] = o.ring;
    if (ring == RingId::Quantum) r.json["q"] = to_json(q);
    const Json h = hom_report_json(check_associativity(ring, c.geometry, q, c.flags));
    for (const auto& [k, v] : h.items()) {
        if (k != "singular") r.json[k] = v;
    }
    return r;
}

Report cmd_reconcile(const Options& o) {
    const Config c = configured(o, DefaultGeometry::A2);
    const ReconcileReport rep = reconcile_6_2(c.geometry);
    Report r{base_report(c), {}};
    Json slots = Json::array();
    for (const auto& s : rep.slots) {
        Json entry{{"product", s.product}, {"slot", s.slot}};
        if (s.slot == "sigma") {
            entry["printed"] = s.printed_m.to_string();
            entry["derived"] = s.derived_m.to_string();
        } else {
            entry["printed"] = {{"M", s.printed_m.to_string()}, {"L", s.printed_l.to_string()}};
            entry["derived"] = {{"M", s.derived_m.to_string()}, {"L", s.derived_l.to_string()}};
        }
        slots.push_back(entry);
    }
    Json transforms = Json::array();
    for (const auto& t : rep.transforms) {
        Json mism = Json::array();
        for (const auto& m : t.mismatches) {
            mism.push_back({{"product", m.product}, {"slot", m.slot}, {"component", m.component},
                            {"difference", m.difference.to_string()}});
        }
        transforms.push_back({{"name", t.name}, {"match", t.match}, {"residuals", mism}});
        r.table.emplace_back(t.name, t.match ? "match" : std::to_string(t.mismatches.size()) + " residual(s)");
    }
    Json breaks = Json::array();
    for (const auto& b : rep.display_symmetry_breaks) {
        breaks.push_back({{"slot", b.slot}, {"mirror", b.mirror}, {"component", b.component},
                          {"difference", b.difference.to_string()}, {"immaterial_when_q1_eq_q2", b.immaterial}});
    }
    r.json["specialisation"] = "q1 = q2 (delta_2 -> delta_1)";
    r.json["slots"] = slots;
    r.json["transforms"] = transforms;
    r.json["matching"] = rep.matching;
    r.json["best"] = rep.best;
    r.json["best_residuals"] = rep.best_residuals;
    r.json["needs_equal_deltas"] = rep.needs_equal_deltas;
    r.json["display_symmetry_breaks"] = breaks;
    r.table.emplace_back("best", rep.best + " (" + std::to_string(rep.best_residuals) + " residual(s))");
    return r;
}

Json graph_json(const Graph& g) {
    Json vertices = Json::array();
    for (const auto& v : g.vertices) vertices.push_back({{"id", v.id}, {"dim", v.dim}});
    Json edges = Json::array();
    for (const auto& e : g.edges) edges.push_back({e.i, e.j, e.multiplicity});
    return Json{{"vertices", vertices}, {"edges", edges}};
}

Report cmd_mckay(const Options& o) {
    const AdeLabel label = AdeLabel::parse(o.group);
    const GroupSpec spec = group_spec(label);
    const Graph g = o.resolution ? resolution_graph(spec) : mckay_graph(spec);
    const std::string verdict = recognize_dynkin(g).value_or("unrecognised");
    Report r{Json{{"conventions", conventions(default_config(DefaultGeometry::A2))}}, {}};
    r.json["group"] = label.to_string();
    r.json["group_name"] = spec.group_name;
    r.json["order"] = spec.table.order();
    r.json["irreps"] = spec.table.irrep_names;
    r.json["graph"] = graph_json(g);
    r.json["dynkin"] = verdict;
    r.json["equation"] = ade_equation(label);
    const auto aut = resolution_graph_automorphisms(label);
    r.json["resolution_graph_automorphisms"] = {{"name", aut.name}, {"order", aut.order}};
    r.table.emplace_back(o.resolution ? "resolution graph" : "McKay graph", verdict);
    return r;
}

Report cmd_cartan(const Options& o) {
    if (o.n < 1) throw ValidationError("--n must be at least 1");
    Report r{Json{{"n", o.n}}, {}};
    r.json["cartan"] = matrix_json(cartan_matrix(o.n));
    r.json["inverse"] = matrix_json(cartan_inverse(o.n));
    return r;
}

Report cmd_age(const Options& o) {
    std::vector<int> exps;
    for (const auto& t : split(o.exponents)) {
        try {
            exps.push_back(std::stoi(t));
        } catch (const std::exception&) {
            throw ValidationError("exponent '" + t + "' is not an integer");
        }
    }
    Report r{Json{{"order", o.order}, {"exponents", exps}}, {}};
    r.json["age"] = to_json(age(o.order, exps));
    return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    // The override only lasts for this command (run() is also called in-process).
    struct CapGuard {
        int saved = max_conductor();
        ~CapGuard() { set_max_conductor(saved); }
    } guard;
    if (const char* cap = std::getenv("CREPANT_MAX_CONDUCTOR")) {
        try {
            set_max_conductor(std::stoi(cap));
        } catch (const std::exception&) {
            err << "error: CREPANT_MAX_CONDUCTOR must be a positive integer\n";
            return kUsage;
        }
    }

    CLI::App app{"Exact Chen-Ruan / crepant resolution toolkit for transversal A_n singularities", "crepant"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--output", o.output, "Output format")->check(CLI::IsMember({"json", "text"}));

    std::vector<std::pair<CLI::App*, std::function<Report(const Options&)>>> commands;
    auto add = [&](const char* name, const char* help, std::function<Report(const Options&)> fn) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--output", o.output, "Output format")->check(CLI::IsMember({"json", "text"}));
        commands.emplace_back(sub, std::move(fn));
        return sub;
    };
    auto geometry_opts = [&o](CLI::App* sub) {
        sub->add_option("--config", o.config, "Geometry config (JSON)");
        sub->add_option("--flag", o.flag, "Twist convention, e.g. t=-1/(n+1)");
    };

    geometry_opts(add("orb-table", "Orbifold cup product table", cmd_orb_table));
    geometry_opts(add("res-table", "Classical resolution product table", cmd_res_table));
    {
        auto* sub = add("gw", "Genus-zero 3-point GW invariant", cmd_gw);
        geometry_opts(sub);
        sub->add_option("--gamma", o.gamma, "Curve class, e.g. 2*b(1,2)")->required();
        sub->add_option("--insert", o.insert, "Three insertions among E<l>, Y, sigma (comma list or repeated)")
            ->required()
            ->delimiter(',');
        sub->add_option("--coeff", o.coeff, "Base-class coefficients, e.g. h,1,1");
    }
    {
        auto* sub = add("qc-table", "Quantum corrected product table", cmd_qc_table);
        geometry_opts(sub);
        sub->add_option("--q", o.q, "q-spec, e.g. zeta3,zeta3");
        sub->add_flag("--series", o.series, "Print unevaluated series in the atoms d(r,s)");
    }
    {
        auto* sub = add("verify-a1", "A_1 isomorphism check", cmd_verify_a1);
        geometry_opts(sub);
        sub->add_option("--q", o.q, "q-spec (default -1)");
        sub->add_option("--scalar", o.scalar, "Scalar c, e.g. i/2; omitted: test the sample set");
    }
    {
        auto* sub = add("solve-a2", "Symmetric A_2 isomorphism search", cmd_solve_a2);
        geometry_opts(sub);
        sub->add_option("--max-order", o.max_order, "Largest root-of-unity order searched")->check(CLI::Range(1, 60));
    }
    {
        auto* sub = add("check-assoc", "Associativity on all basis triples", cmd_check_assoc);
        geometry_opts(sub);
        sub->add_option("--ring", o.ring, "orb, res or quantum");
        sub->add_option("--q", o.q, "q-spec for the quantum ring");
    }
    geometry_opts(add("reconcile-6-2", "Compare the displayed A_2 products with the derived ones", cmd_reconcile));
    {
        auto* sub = add("mckay", "McKay graph of a finite subgroup of SL(2,C)", cmd_mckay);
        sub->add_option("--group", o.group, "A<n>, D<n>, E6, E7 or E8")->required();
        sub->add_flag("--resolution", o.resolution, "Drop the trivial representation");
    }
    add("cartan", "Cartan matrix and its inverse", cmd_cartan)->add_option("--n", o.n, "Rank")->required();
    {
        auto* sub = add("age", "Degree-shifting number", cmd_age);
        sub->add_option("--order", o.order, "Element order")->required();
        sub->add_option("--exponents", o.exponents, "Comma-separated eigenvalue exponents")->required();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    for (const auto& [sub, fn] : commands) {
        if (!sub->parsed()) continue;
        try {
            const Report r = fn(o);
            if (o.output == "text") {
                auto rows = r.table;
                if (rows.empty()) flatten(r.json, "", rows);
                out << aligned(rows);
            } else {
                out << r.json.dump(2) << "\n";
            }
            return kOk;
        } catch (const PoleError& e) {
            err << "error: " << e.what() << "\n";
            Json diag{{"error", "pole"}, {"span", {e.r(), e.s()}}, {"message", e.what()}};
            out << diag.dump(2) << "\n";
            return kPole;
        } catch (const Error& e) {
            err << "error: " << e.what() << "\n";
            return kValidation;
        } catch (const Json::exception& e) {
            err << "error: " << e.what() << "\n";
            return kValidation;
        }
    }
    return kUsage;
}

}  // namespace crepant::cli
