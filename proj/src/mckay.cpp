#include "crepant/mckay.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <regex>

#include "crepant/errors.hpp"

namespace crepant {

long CharacterTable::order() const { return std::accumulate(class_sizes.begin(), class_sizes.end(), 0L); }

AdeLabel AdeLabel::parse(const std::string& text) {
    static const std::regex pattern(R"(\s*([ADEade])_?(\d+)\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, pattern)) throw ValidationError("unrecognised ADE label '" + text + "'");
    AdeLabel label{static_cast<char>(std::toupper(m[1].str()[0])), std::stoi(m[2].str())};
    const bool ok = (label.type == 'A' && label.n >= 1) || (label.type == 'D' && label.n >= 4) ||
                    (label.type == 'E' && label.n >= 6 && label.n <= 8);
    if (!ok) throw ValidationError("no rational double point of type " + label.to_string());
    return label;
}

namespace {

CycNum z(int conductor, long power) {
    const long p = ((power % conductor) + conductor) % conductor;
    return CycNum::zeta(conductor, static_cast<int>(p));
}

CharacterTable cyclic_table(int m) {
    CharacterTable t;
    for (int k = 0; k < m; ++k) {
        t.class_names.push_back(k == 0 ? "1" : "g^" + std::to_string(k));
        t.class_sizes.push_back(1);
    }
    for (int j = 0; j < m; ++j) {
        t.irrep_names.push_back("chi" + std::to_string(j));
        std::vector<CycNum> row;
        for (int k = 0; k < m; ++k) row.push_back(z(m, static_cast<long>(j) * k));
        t.characters.push_back(std::move(row));
    }
    for (int k = 0; k < m; ++k) t.natural.push_back(z(m, k) + z(m, -k));
    return t;
}

// Binary dihedral group <a, b | a^(2m) = 1, b^2 = a^m, b a b^-1 = a^-1> of
// order 4m. Classes: 1, a^m, {a^k, a^-k} (k = 1..m-1), b a^even, b a^odd.
CharacterTable binary_dihedral_table(int m) {
    CharacterTable t;
    const int c = 2 * m;
    t.class_names = {"1", "a^" + std::to_string(m)};
    t.class_sizes = {1, 1};
    for (int k = 1; k < m; ++k) {
        t.class_names.push_back("a^" + std::to_string(k));
        t.class_sizes.push_back(2);
    }
    t.class_names.insert(t.class_names.end(), {"b", "b*a"});
    t.class_sizes.insert(t.class_sizes.end(), {m, m});
    std::vector<int> powers = {0, m};
    for (int k = 1; k < m; ++k) powers.push_back(k);

    // One-dimensional characters: a -> s, b -> t with t^2 = s^m.
    const CycNum i = CycNum::imaginary_unit();
    struct Linear {
        int s;
        CycNum t;
        const char* name;
    };
    const bool odd = m % 2 == 1;
    const std::vector<Linear> linear = {
        {1, CycNum(1), "triv"},
        {1, CycNum(-1), "sign_b"},
        {-1, odd ? i : CycNum(1), "sign_a+"},
        {-1, odd ? -i : CycNum(-1), "sign_a-"},
    };
    for (const auto& l : linear) {
        std::vector<CycNum> row;
        for (int k : powers) row.push_back(CycNum(k % 2 == 0 ? 1 : l.s));
        row.push_back(l.t);
        row.push_back(l.t * CycNum(l.s));
        t.irrep_names.push_back(l.name);
        t.characters.push_back(std::move(row));
    }
    for (int h = 1; h < m; ++h) {
        std::vector<CycNum> row;
        for (int k : powers) row.push_back(z(c, static_cast<long>(h) * k) + z(c, -static_cast<long>(h) * k));
        row.push_back(CycNum(0));
        row.push_back(CycNum(0));
        t.irrep_names.push_back("rho" + std::to_string(h));
        t.characters.push_back(std::move(row));
    }
    t.natural = t.characters[4];
    return t;
}

std::vector<CycNum> row(std::initializer_list<CycNum> values) { return values; }

// Binary tetrahedral group, order 24. x has order 6.
CharacterTable binary_tetrahedral_table() {
    const CycNum w = CycNum::zeta(3);
    const CycNum w2 = CycNum::zeta(3, 2);
    CharacterTable t;
    t.class_names = {"1", "-1", "ord4", "x", "x^2", "x^4", "x^5"};
    t.class_sizes = {1, 1, 6, 4, 4, 4, 4};
    t.irrep_names = {"1", "1'", "1''", "2", "2'", "2''", "3"};
    t.characters = {
        row({1, 1, 1, 1, 1, 1, 1}),
        row({1, 1, 1, w, w2, w, w2}),
        row({1, 1, 1, w2, w, w2, w}),
        row({2, -2, 0, 1, -1, -1, 1}),
        row({2, -2, 0, w, -w2, -w, w2}),
        row({2, -2, 0, w2, -w, -w2, w}),
        row({3, 3, -1, 0, 0, 0, 0}),
    };
    t.natural = t.characters[3];
    return t;
}

// Binary octahedral group, order 48.
CharacterTable binary_octahedral_table() {
    const CycNum r2 = CycNum::zeta(8) - CycNum::zeta(8, 3);  // sqrt(2)
    CharacterTable t;
    t.class_names = {"1", "-1", "ord4", "ord8", "ord8'", "ord4'", "ord6", "ord3"};
    t.class_sizes = {1, 1, 6, 6, 6, 12, 8, 8};
    t.irrep_names = {"1", "1'", "2", "3", "3'", "2s", "2s'", "4s"};
    t.characters = {
        row({1, 1, 1, 1, 1, 1, 1, 1}),
        row({1, 1, 1, -1, -1, -1, 1, 1}),
        row({2, 2, 2, 0, 0, 0, -1, -1}),
        row({3, 3, -1, -1, -1, 1, 0, 0}),
        row({3, 3, -1, 1, 1, -1, 0, 0}),
        row({2, -2, 0, r2, -r2, 0, 1, -1}),
        row({2, -2, 0, -r2, r2, 0, 1, -1}),
        row({4, -4, 0, 0, 0, 0, -1, 1}),
    };
    t.natural = t.characters[5];
    return t;
}

// Binary icosahedral group, order 120; golden ratio phi = -zeta5^2 - zeta5^3.
CharacterTable binary_icosahedral_table() {
    const CycNum phi = -(CycNum::zeta(5, 2) + CycNum::zeta(5, 3));
    const CycNum one(1);
    CharacterTable t;
    t.class_names = {"1", "-1", "ord4", "ord10", "ord10'", "ord5", "ord5'", "ord6", "ord3"};
    t.class_sizes = {1, 1, 30, 12, 12, 12, 12, 20, 20};
    t.irrep_names = {"1", "3", "3'", "4", "5", "2", "2'", "4s", "6s"};
    t.characters = {
        row({1, 1, 1, 1, 1, 1, 1, 1, 1}),
        row({3, 3, -1, phi, one - phi, one - phi, phi, 0, 0}),
        row({3, 3, -1, one - phi, phi, phi, one - phi, 0, 0}),
        row({4, 4, 0, -1, -1, -1, -1, 1, 1}),
        row({5, 5, 1, 0, 0, 0, 0, -1, -1}),
        row({2, -2, 0, phi, one - phi, phi - one, -phi, 1, -1}),
        row({2, -2, 0, one - phi, phi, -phi, phi - one, 1, -1}),
        row({4, -4, 0, 1, 1, -1, -1, -1, 1}),
        row({6, -6, 0, -1, -1, 1, 1, 0, 0}),
    };
    t.natural = t.characters[5];
    return t;
}

}  // namespace

GroupSpec group_spec(const AdeLabel& label) {
    GroupSpec g{label, {}, {}};
    switch (label.type) {
        case 'A':
            g.group_name = "cyclic Z_" + std::to_string(label.n + 1);
            g.table = cyclic_table(label.n + 1);
            break;
        case 'D':
            g.group_name = "binary dihedral of order " + std::to_string(4 * (label.n - 2));
            g.table = binary_dihedral_table(label.n - 2);
            break;
        default:
            if (label.n == 6) {
                g.group_name = "binary tetrahedral";
                g.table = binary_tetrahedral_table();
            } else if (label.n == 7) {
                g.group_name = "binary octahedral";
                g.table = binary_octahedral_table();
            } else {
                g.group_name = "binary icosahedral";
                g.table = binary_icosahedral_table();
            }
    }
    validate_table(g.table);
    return g;
}

void validate_table(const CharacterTable& t) {
    const std::size_t classes = t.class_sizes.size();
    if (t.characters.size() != classes || t.natural.size() != classes || t.irrep_names.size() != classes) {
        throw ValidationError("character table is not square");
    }
    for (const auto& r : t.characters) {
        if (r.size() != classes) throw ValidationError("character table row of the wrong length");
    }
    const long order = t.order();
    long dims = 0;
    for (const auto& r : t.characters) {
        const auto d = r[0].as_rational();
        if (!d || !d->is_integer() || d->sign() <= 0) throw ValidationError("character degree is not a positive integer");
        dims += std::stol(d->to_string()) * std::stol(d->to_string());
    }
    if (dims != order) throw ValidationError("sum of squared degrees differs from the group order");
    for (std::size_t a = 0; a < classes; ++a) {
        for (std::size_t b = 0; b < classes; ++b) {
            CycNum s(0);
            for (const auto& r : t.characters) s += r[a] * r[b].conj();
            const CycNum expected = a == b ? CycNum(Rational(order, t.class_sizes[a])) : CycNum(0);
            if (s != expected) {
                throw ValidationError("column orthogonality fails for classes " + t.class_names[a] + ", " +
                                      t.class_names[b]);
            }
        }
    }
    for (std::size_t i = 0; i < classes; ++i) {
        for (std::size_t j = 0; j < classes; ++j) {
            CycNum s(0);
            for (std::size_t c = 0; c < classes; ++c) {
                s += CycNum(t.class_sizes[c]) * t.characters[i][c] * t.characters[j][c].conj();
            }
            if (s != CycNum(i == j ? order : 0)) {
                throw ValidationError("row orthogonality fails for " + t.irrep_names[i] + ", " + t.irrep_names[j]);
            }
        }
    }
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> a(vertices.size(), std::vector<int>(vertices.size(), 0));
    auto index = [this](int id) {
        for (std::size_t k = 0; k < vertices.size(); ++k) {
            if (vertices[k].id == id) return k;
        }
        throw ValidationError("edge refers to a missing vertex");
    };
    for (const auto& e : edges) {
        const auto i = index(e.i);
        const auto j = index(e.j);
        a[i][j] += e.multiplicity;
        if (i != j) a[j][i] += e.multiplicity;
    }
    return a;
}

bool Graph::connected() const {
    if (vertices.empty()) return true;
    const auto a = adjacency();
    std::vector<bool> seen(vertices.size(), false);
    std::vector<std::size_t> stack = {0};
    seen[0] = true;
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (std::size_t w = 0; w < a.size(); ++w) {
            if (a[v][w] && !seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

Graph mckay_graph(const GroupSpec& group) {
    const auto& t = group.table;
    const std::size_t k = t.size();
    const Rational inv_order(1, t.order());
    Graph g;
    for (std::size_t i = 0; i < k; ++i) {
        g.vertices.push_back({static_cast<int>(i), static_cast<int>(std::stol(t.characters[i][0].as_rational()->to_string()))});
    }
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            CycNum s(0);
            for (std::size_t c = 0; c < k; ++c) {
                s += CycNum(t.class_sizes[c]) * t.natural[c] * t.characters[j][c] * t.characters[i][c].conj();
            }
            s *= CycNum(inv_order);
            const auto value = s.as_rational();
            if (!value || !value->is_integer() || value->sign() < 0) {
                throw ValidationError("corrupted character table: <" + t.irrep_names[i] + ", Q x " +
                                      t.irrep_names[j] + "> = " + s.to_string());
            }
            const int mult = std::stoi(value->to_string());
            if (mult) g.edges.push_back({static_cast<int>(i), static_cast<int>(j), mult});
        }
    }
    return g;
}

Graph resolution_graph(const GroupSpec& group) {
    Graph g = mckay_graph(group);
    g.vertices.erase(g.vertices.begin());
    std::erase_if(g.edges, [](const Graph::Edge& e) { return e.i == 0 || e.j == 0; });
    return g;
}

bool dimension_vector_in_kernel(const Graph& g) {
    const auto a = g.adjacency();
    for (std::size_t i = 0; i < a.size(); ++i) {
        long s = 2L * g.vertices[i].dim;
        for (std::size_t j = 0; j < a.size(); ++j) s -= static_cast<long>(a[i][j]) * g.vertices[j].dim;
        if (s != 0) return false;
    }
    return true;
}

std::optional<std::string> recognize_dynkin(const Graph& g) {
    const auto a = g.adjacency();
    const std::size_t v = a.size();
    if (v == 0 || !g.connected()) return std::nullopt;
    if (v == 1) return a[0][0] == 0 ? std::optional<std::string>("A1") : std::nullopt;
    if (v == 2 && a[0][1] == 2 && a[0][0] == 0 && a[1][1] == 0) return "A~1";
    std::vector<int> degree(v, 0);
    std::size_t edge_count = 0;
    for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t j = 0; j < v; ++j) {
            if (a[i][j] > 1 || (i == j && a[i][j])) return std::nullopt;
            degree[i] += a[i][j];
            if (j > i) edge_count += a[i][j];
        }
    }
    const auto vs = std::to_string(v);
    if (edge_count == v) {
        const bool cycle = std::all_of(degree.begin(), degree.end(), [](int d) { return d == 2; });
        return cycle ? std::optional<std::string>("A~" + std::to_string(v - 1)) : std::nullopt;
    }
    if (edge_count != v - 1) return std::nullopt;

    std::vector<std::size_t> branch;
    for (std::size_t i = 0; i < v; ++i) {
        if (degree[i] > 4) return std::nullopt;
        if (degree[i] >= 3) branch.push_back(i);
    }
    if (branch.empty()) return "A" + vs;
    if (branch.size() == 1 && degree[branch[0]] == 4) return v == 5 ? std::optional<std::string>("D~4") : std::nullopt;
    if (branch.size() == 2) {
        for (auto b : branch) {
            if (degree[b] != 3) return std::nullopt;
            int leaves = 0;
            for (std::size_t w = 0; w < v; ++w) leaves += (a[b][w] && degree[w] == 1);
            if (leaves != 2) return std::nullopt;
        }
        return "D~" + std::to_string(v - 1);
    }
    if (branch.size() != 1) return std::nullopt;

    // One trivalent vertex: measure its three arms.
    const std::size_t centre = branch[0];
    std::vector<int> arms;
    for (std::size_t start = 0; start < v; ++start) {
        if (!a[centre][start]) continue;
        int length = 1;
        std::size_t prev = centre;
        std::size_t cur = start;
        while (degree[cur] == 2) {
            std::size_t next = cur;
            for (std::size_t w = 0; w < v; ++w) {
                if (a[cur][w] && w != prev) next = w;
            }
            prev = cur;
            cur = next;
            ++length;
        }
        arms.push_back(length);
    }
    std::sort(arms.begin(), arms.end());
    const std::vector<std::pair<std::vector<int>, std::string>> shapes = {
        {{1, 2, 2}, "E6"}, {{1, 2, 3}, "E7"}, {{1, 2, 4}, "E8"},
        {{2, 2, 2}, "E~6"}, {{1, 3, 3}, "E~7"}, {{1, 2, 5}, "E~8"},
    };
    if (arms[0] == 1 && arms[1] == 1) return "D" + vs;
    for (const auto& [shape, name] : shapes) {
        if (arms == shape) return name;
    }
    return std::nullopt;
}

Graph affine_template(const AdeLabel& label) {
    Graph g;
    auto add = [&g](int i, int j) { g.edges.push_back({std::min(i, j), std::max(i, j), 1}); };
    switch (label.type) {
        case 'A': {
            const int m = label.n + 1;
            for (int i = 0; i < m; ++i) g.vertices.push_back({i, 1});
            if (m == 2) {
                g.edges.push_back({0, 1, 2});
            } else {
                for (int i = 0; i < m; ++i) add(i, (i + 1) % m);
            }
            break;
        }
        case 'D': {
            const int m = label.n - 2;
            for (int i = 0; i < 4; ++i) g.vertices.push_back({i, 1});
            for (int h = 1; h < m; ++h) g.vertices.push_back({3 + h, 2});
            add(0, 4);
            add(1, 4);
            add(2, 2 + m);
            add(3, 2 + m);
            for (int h = 1; h + 1 < m; ++h) add(3 + h, 4 + h);
            break;
        }
        default: {
            std::vector<int> dims;
            std::vector<std::pair<int, int>> edges;
            if (label.n == 6) {
                dims = {1, 1, 1, 2, 2, 2, 3};
                edges = {{0, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 6}, {5, 6}};
            } else if (label.n == 7) {
                dims = {1, 1, 2, 3, 3, 2, 2, 4};
                edges = {{0, 5}, {4, 5}, {4, 7}, {3, 7}, {3, 6}, {1, 6}, {2, 7}};
            } else {
                dims = {1, 3, 3, 4, 5, 2, 2, 4, 6};
                edges = {{0, 5}, {1, 5}, {1, 7}, {4, 7}, {4, 8}, {3, 8}, {3, 6}, {2, 8}};
            }
            for (std::size_t i = 0; i < dims.size(); ++i) g.vertices.push_back({static_cast<int>(i), dims[i]});
            for (auto [i, j] : edges) add(i, j);
        }
    }
    std::sort(g.edges.begin(), g.edges.end(),
              [](const auto& x, const auto& y) { return std::pair(x.i, x.j) < std::pair(y.i, y.j); });
    return g;
}

long automorphism_count(const Graph& g) {
    const auto a = g.adjacency();
    const std::size_t v = a.size();
    std::vector<int> image(v, -1);
    std::vector<bool> used(v, false);
    long count = 0;
    std::function<void(std::size_t)> extend = [&](std::size_t k) {
        if (k == v) {
            ++count;
            return;
        }
        for (std::size_t c = 0; c < v; ++c) {
            if (used[c]) continue;
            bool ok = a[k][k] == a[c][c];
            for (std::size_t p = 0; p < k && ok; ++p) ok = a[k][p] == a[c][static_cast<std::size_t>(image[p])];
            if (!ok) continue;
            used[c] = true;
            image[k] = static_cast<int>(c);
            extend(k + 1);
            used[c] = false;
        }
    };
    extend(0);
    return count;
}

AutMetadata resolution_graph_automorphisms(const AdeLabel& label) {
    switch (label.type) {
        case 'A': return label.n == 1 ? AutMetadata{1, "1"} : AutMetadata{2, "Z2"};
        case 'D': return label.n == 4 ? AutMetadata{6, "S3"} : AutMetadata{2, "Z2"};
        default: return label.n == 6 ? AutMetadata{2, "Z2"} : AutMetadata{1, "1"};
    }
}

std::string ade_equation(const AdeLabel& label) {
    switch (label.type) {
        case 'A': return "x*y - z^" + std::to_string(label.n + 1);
        case 'D': return "x^2 + y^2*z + z^" + std::to_string(label.n - 1);
        default:
            if (label.n == 6) return "x^2 + y^3 + z^4";
            if (label.n == 7) return "x^2 + y^3 + y*z^3";
            return "x^2 + y^3 + z^5";
    }
}

}  // namespace crepant
