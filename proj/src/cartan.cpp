#include "crepant/cartan.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include "crepant/errors.hpp"

namespace crepant {

namespace {

void check_rank(int n) {
    if (n < 1) throw ValidationError("Cartan matrix rank must be at least 1");
}

}  // namespace

bool CurveClass::is_zero() const {
    return std::all_of(multiplicities.begin(), multiplicities.end(), [](int a) { return a == 0; });
}

std::optional<CurveClass::Span> CurveClass::as_span_multiple() const {
    int first = -1;
    int last = -1;
    for (int l = 0; l < n(); ++l) {
        if (multiplicities[l] < 0) return std::nullopt;
        if (multiplicities[l] != 0) {
            if (first < 0) first = l;
            last = l;
        }
    }
    if (first < 0) return std::nullopt;
    const int a = multiplicities[first];
    for (int l = first; l <= last; ++l) {
        if (multiplicities[l] != a) return std::nullopt;
    }
    return Span{first + 1, last + 1, a};
}

std::string CurveClass::to_string() const {
    if (auto s = as_span_multiple()) {
        std::ostringstream os;
        if (s->multiple != 1) os << s->multiple << "*";
        os << "b(" << s->i << "," << s->j << ")";
        return os.str();
    }
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int l = 0; l < n(); ++l) {
        if (multiplicities[l] == 0) continue;
        if (!first) os << "+";
        os << multiplicities[l] << "*b" << (l + 1);
        first = false;
    }
    return os.str();
}

IntMatrix cartan_matrix(int n) {
    check_rank(n);
    IntMatrix c(n, n);
    for (int i = 0; i < n; ++i) {
        c(i, i) = -2;
        if (i + 1 < n) {
            c(i, i + 1) = 1;
            c(i + 1, i) = 1;
        }
    }
    return c;
}

Rational cartan_inverse_entry(int n, int i, int j) {
    check_rank(n);
    if (i < 0 || j < 0 || i > n + 1 || j > n + 1) {
        throw ValidationError("Cartan inverse index out of range");
    }
    if (i == 0 || j == 0 || i == n + 1 || j == n + 1) return Rational(0);
    return Rational(-static_cast<long>(std::min(i, j)) * (n + 1 - std::max(i, j)), n + 1);
}

RatMatrix cartan_inverse(int n) {
    check_rank(n);
    RatMatrix inv(n, n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) inv(i - 1, j - 1) = cartan_inverse_entry(n, i, j);
    }
    return inv;
}

CurveClass curve_class(int n, int i, int j) {
    check_rank(n);
    if (i < 1 || j > n || i > j) {
        throw ValidationError("curve class b(" + std::to_string(i) + "," + std::to_string(j) +
                              ") out of range for n = " + std::to_string(n));
    }
    CurveClass c{std::vector<int>(static_cast<std::size_t>(n), 0)};
    for (int l = i; l <= j; ++l) c.multiplicities[l - 1] = 1;
    return c;
}

long intersection(int l, const CurveClass& gamma) {
    const int n = gamma.n();
    if (l < 1 || l > n) throw ValidationError("exceptional index out of range");
    long total = 0;
    for (int m = 1; m <= n; ++m) {
        long c = 0;
        if (m == l) c = -2;
        else if (m == l - 1 || m == l + 1) c = 1;
        total += c * gamma.multiplicities[m - 1];
    }
    return total;
}

CurveClass parse_curve_class(int n, const std::string& text) {
    static const std::regex span_re(R"(^\s*(?:(\d+)\s*\*\s*)?b\(\s*(\d+)\s*(?:,\s*(\d+)\s*)?\)\s*$)");
    std::smatch m;
    if (std::regex_match(text, m, span_re)) {
        const int a = m[1].matched ? std::stoi(m[1]) : 1;
        const int i = std::stoi(m[2]);
        const int j = m[3].matched ? std::stoi(m[3]) : i;
        if (a < 1) throw ValidationError("curve multiple must be positive");
        CurveClass c = curve_class(n, i, j);
        for (auto& x : c.multiplicities) x *= a;
        return c;
    }
    CurveClass c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (v < 0) throw ValidationError("negative curve multiplicity");
            c.multiplicities.push_back(v);
        } catch (const std::logic_error&) {
            throw ValidationError("cannot parse curve class '" + text + "'");
        }
    }
    if (c.n() != n) throw ValidationError("curve class '" + text + "' must have " + std::to_string(n) + " entries");
    return c;
}

}  // namespace crepant
