#include "crepant/cyclotomic.hpp"

#include <atomic>
#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "crepant/errors.hpp"

namespace crepant {

namespace {

using Poly = std::vector<Rational>;

std::atomic<int> g_max_conductor{120};

void check_conductor(int n) {
    if (n < 1) throw ValidationError("conductor must be positive, got " + std::to_string(n));
    if (n > max_conductor()) {
        throw ValidationError("conductor " + std::to_string(n) + " exceeds the cap of " +
                              std::to_string(max_conductor()) +
                              " (set CREPANT_MAX_CONDUCTOR to raise it)");
    }
}

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Remainder of p modulo the monic polynomial m (both constant term first).
Poly reduce_mod(Poly p, const std::vector<long>& m) {
    const std::size_t deg = m.size() - 1;
    for (std::size_t i = p.size(); i-- > deg;) {
        if (p[i].is_zero()) continue;
        const Rational c = p[i];
        for (std::size_t j = 0; j <= deg; ++j) {
            if (m[j] != 0) p[i - deg + j] -= c * Rational(m[j]);
        }
    }
    p.resize(deg);
    return p;
}

// Quotient and remainder of a / b over Q; b must be nonzero after trimming.
std::pair<Poly, Poly> divmod(Poly a, Poly b) {
    trim(a);
    trim(b);
    if (b.empty()) throw DivisionByZero();
    if (a.size() < b.size()) return {Poly{}, a};
    Poly q(a.size() - b.size() + 1);
    const Rational lead = b.back();
    for (std::size_t top = a.size(); top >= b.size(); --top) {
        const std::size_t shift = top - b.size();
        const Rational c = a[top - 1] / lead;
        q[shift] = c;
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    }
    trim(a);
    trim(q);
    return {q, a};
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

Poly poly_sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

std::vector<int> divisors(int n) {
    std::vector<int> d;
    for (int i = 1; i <= n; ++i) {
        if (n % i == 0) d.push_back(i);
    }
    return d;
}

// Solves M x = v over Q; M is given column-wise. Returns nullopt when inconsistent.
std::optional<Poly> solve_columns(const std::vector<Poly>& cols, const Poly& v) {
    const std::size_t rows = v.size();
    const std::size_t ncols = cols.size();
    std::vector<Poly> aug(rows, Poly(ncols + 1));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < ncols; ++c) aug[r][c] = cols[c][r];
        aug[r][ncols] = v[r];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t c = 0; c < ncols && row < rows; ++c) {
        std::size_t p = row;
        while (p < rows && aug[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(aug[p], aug[row]);
        const Rational piv = aug[row][c];
        for (auto& x : aug[row]) x /= piv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || aug[r][c].is_zero()) continue;
            const Rational f = aug[r][c];
            for (std::size_t k = c; k <= ncols; ++k) aug[r][k] -= f * aug[row][k];
        }
        pivot_col.push_back(c);
        ++row;
    }
    for (std::size_t r = row; r < rows; ++r) {
        if (!aug[r][ncols].is_zero()) return std::nullopt;
    }
    Poly x(ncols);
    for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = aug[r][ncols];
    return x;
}

}  // namespace

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<long>& cyclotomic_polynomial(int n) {
    static std::mutex mutex;
    static std::map<int, std::vector<long>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    // x^n - 1 divided by Phi_d for every proper divisor d.
    std::vector<long> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d : divisors(n)) {
        if (d == n) continue;
        const auto& f = cyclotomic_polynomial(d);
        const std::size_t fd = f.size() - 1;
        std::vector<long> q(p.size() - fd, 0);
        for (std::size_t i = p.size(); i-- > fd;) {
            const long c = p[i];  // f is monic
            q[i - fd] = c;
            for (std::size_t j = 0; j <= fd; ++j) p[i - fd + j] -= c * f[j];
        }
        p = std::move(q);
    }
    std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(p)).first->second;
}

int max_conductor() { return g_max_conductor.load(); }

void set_max_conductor(int cap) {
    if (cap < 1) throw ValidationError("conductor cap must be positive");
    g_max_conductor.store(cap);
}

CycNum::CycNum(const Rational& r) : conductor_(1), coeffs_{r} {}

CycNum CycNum::from_poly(int conductor, std::span<const Rational> poly) {
    check_conductor(conductor);
    Poly p(poly.begin(), poly.end());
    const auto& phi = cyclotomic_polynomial(conductor);
    if (p.size() < phi.size() - 1) p.resize(phi.size() - 1);
    return CycNum(conductor, reduce_mod(std::move(p), phi));
}

CycNum CycNum::from_poly(int conductor, std::initializer_list<Rational> poly) {
    return from_poly(conductor, std::span<const Rational>(poly.begin(), poly.size()));
}

CycNum CycNum::zeta(int conductor, int power) {
    check_conductor(conductor);
    const int k = ((power % conductor) + conductor) % conductor;
    Poly p(static_cast<std::size_t>(k) + 1);
    p[k] = 1;
    return from_poly(conductor, p);
}

bool CycNum::is_zero() const {
    for (const auto& c : coeffs_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

std::optional<Rational> CycNum::as_rational() const {
    const CycNum m = minimized();
    if (m.conductor_ <= 2) return m.coeffs_[0];
    return std::nullopt;
}

CycNum CycNum::embed(int target) const {
    if (target == conductor_) return *this;
    if (target % conductor_ != 0) {
        throw ValidationError("cannot embed Q(zeta_" + std::to_string(conductor_) + ") into Q(zeta_" +
                              std::to_string(target) + ")");
    }
    check_conductor(target);
    const int k = target / conductor_;
    Poly p(static_cast<std::size_t>(k) * coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) p[i * k] = coeffs_[i];
    return from_poly(target, p);
}

CycNum CycNum::minimized() const {
    for (int d : divisors(conductor_)) {
        if (d == conductor_) return *this;
        const int k = conductor_ / d;
        std::vector<Poly> cols;
        for (int j = 0; j < euler_phi(d); ++j) cols.push_back(zeta(conductor_, j * k).coeffs_);
        if (auto x = solve_columns(cols, coeffs_)) return CycNum(d, std::move(*x));
    }
    return *this;
}

CycNum CycNum::conj() const {
    Poly p(static_cast<std::size_t>(conductor_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        p[(conductor_ - static_cast<int>(i)) % conductor_] += coeffs_[i];
    }
    return from_poly(conductor_, p);
}

CycNum CycNum::inv() const {
    if (is_zero()) throw DivisionByZero();
    // Extended Euclid: find u with u * a = 1 mod Phi_N.
    const auto& phi = cyclotomic_polynomial(conductor_);
    Poly r0(phi.begin(), phi.end());
    Poly r1 = coeffs_;
    trim(r1);
    Poly s0, s1{Rational(1)};
    while (r1.size() > 1) {
        auto [q, r] = divmod(r0, r1);
        Poly s = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r1 is a nonzero constant since Phi_N is irreducible.
    const Rational c = r1.at(0);
    for (auto& x : s1) x /= c;
    return from_poly(conductor_, s1);
}

CycNum CycNum::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    CycNum result = CycNum(1).embed(conductor_);
    CycNum base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

std::complex<double> CycNum::to_complex() const {
    std::complex<double> z = 0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / conductor_;
        z += coeffs_[k].to_double() * std::polar(1.0, angle);
    }
    return z;
}

std::string CycNum::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        const Rational a = neg ? -c : c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << a;
            continue;
        }
        if (a != Rational(1)) os << a << "*";
        os << "zeta" << conductor_;
        if (k > 1) os << "^" << k;
    }
    if (first) return "0";
    return os.str();
}

namespace {

int lcm_conductor(int a, int b) { return std::lcm(a, b); }

}  // namespace

CycNum& CycNum::operator+=(const CycNum& o) {
    const int n = lcm_conductor(conductor_, o.conductor_);
    if (n != conductor_) *this = embed(n);
    const CycNum b = o.embed(n);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
    const int n = lcm_conductor(conductor_, o.conductor_);
    if (n != conductor_) *this = embed(n);
    const CycNum b = o.embed(n);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
    return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
    const int n = lcm_conductor(conductor_, o.conductor_);
    const CycNum a = embed(n);
    const CycNum b = o.embed(n);
    if (n == 1) {
        coeffs_ = {a.coeffs_[0] * b.coeffs_[0]};
        conductor_ = 1;
        return *this;
    }
    *this = CycNum(n, reduce_mod(poly_mul(a.coeffs_, b.coeffs_), cyclotomic_polynomial(n)));
    return *this;
}

CycNum operator-(const CycNum& a) {
    CycNum r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

bool operator==(const CycNum& a, const CycNum& b) {
    if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
    const int n = std::lcm(a.conductor_, b.conductor_);
    return a.embed(n).coeffs_ == b.embed(n).coeffs_;
}

namespace {

class ScalarParser {
public:
    explicit ScalarParser(std::string_view text) : text_(text) {}

    CycNum parse() {
        if (text_.find('.') != std::string::npos) {
            fail("decimal literals are not accepted");
        }
        if (text_.empty()) fail("empty scalar");
        CycNum total;
        bool first = true;
        while (pos_ < text_.size()) {
            bool neg = false;
            if (peek() == '+' || peek() == '-') {
                neg = peek() == '-';
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            CycNum term = parse_term();
            total += neg ? -term : term;
            first = false;
        }
        return total;
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& why) const {
        throw ValidationError("cannot parse scalar '" + text_ + "': " + why);
    }

    long read_int() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::stol(text_.substr(start, pos_ - start));
    }

    bool at_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    CycNum parse_term() {
        Rational coef(1);
        bool have_coef = false;
        if (at_digit()) {
            coef = Rational(read_int());
            have_coef = true;
            if (peek() == '/' && pos_ + 1 < text_.size() &&
                std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
                ++pos_;
                const long den = read_int();
                if (den == 0) throw DivisionByZero();
                coef /= Rational(den);
            }
            if (peek() == '*') ++pos_;
        }
        std::optional<CycNum> atom;
        if (text_.compare(pos_, 4, "zeta") == 0) {
            pos_ += 4;
            const long n = read_int();
            if (n < 1) fail("zeta order must be positive");
            long k = 1;
            if (peek() == '^') {
                ++pos_;
                k = read_int();
            }
            atom = CycNum::zeta(static_cast<int>(n), static_cast<int>(k % n));
        } else if (peek() == 'i') {
            ++pos_;
            atom = CycNum::imaginary_unit();
        }
        if (!atom) {
            if (!have_coef) fail("expected a number, 'i' or 'zetaN'");
            return coef;
        }
        if (peek() == '/') {
            ++pos_;
            const long den = read_int();
            if (den == 0) throw DivisionByZero();
            coef /= Rational(den);
        }
        return *atom * CycNum(coef);
    }

    std::string text_;
    std::size_t pos_ = 0;
};

// Drops whitespace, but "1 1" or "zeta3 2" must not silently fuse into one token.
std::string strip_spaces(std::string_view s) {
    auto word = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    std::string out;
    bool gap = false;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            gap = true;
            continue;
        }
        if (gap && !out.empty() && word(out.back()) && word(c)) {
            throw ValidationError("unexpected whitespace inside scalar '" + std::string(s) + "'");
        }
        gap = false;
        out.push_back(c);
    }
    return out;
}

}  // namespace

CycNum parse_cyc(std::string_view text) { return ScalarParser(strip_spaces(text)).parse(); }

}  // namespace crepant
