#include "afflie/weights.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace afflie {

const char* error_code(ErrorKind k) {
    switch (k) {
    case ErrorKind::InvalidModulus: return "invalid-modulus";
    case ErrorKind::ModulusMismatch: return "modulus-mismatch";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::ContractViolation: return "contract-violation";
    case ErrorKind::Inconsistency: return "inconsistency";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::ResourceLimit: return "resource-limit";
    case ErrorKind::CrossCheck: return "cross-check";
    }
    return "unknown";
}

std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << '/' << denominator(q);
    return os.str();
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::exception&) {
        fail(ErrorKind::Parse, "bad rational '" + s + "'");
    }
}

void check_modulus(int n) {
    require(n >= 2, ErrorKind::InvalidModulus, "modulus must be at least 2, got " + std::to_string(n));
}

void check_same(int a, int b) {
    require(a == b, ErrorKind::ModulusMismatch,
            "modulus mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

AffineWeight::AffineWeight(int n) : n_(n), c_(), d_(0) {
    check_modulus(n);
    c_.assign(n, 0);
}

AffineWeight::AffineWeight(int n, std::vector<long long> coeffs, long long delta)
    : n_(n), c_(std::move(coeffs)), d_(delta) {
    check_modulus(n);
    require(static_cast<int>(c_.size()) == n, ErrorKind::ContractViolation,
            "weight needs exactly n coefficients");
}

AffineWeight& AffineWeight::operator+=(const AffineWeight& o) {
    check_same(n_, o.n_);
    for (int i = 0; i < n_; ++i) c_[i] += o.c_[i];
    d_ += o.d_;
    return *this;
}

AffineWeight& AffineWeight::operator-=(const AffineWeight& o) {
    check_same(n_, o.n_);
    for (int i = 0; i < n_; ++i) c_[i] -= o.c_[i];
    d_ -= o.d_;
    return *this;
}

AffineWeight operator*(long long k, AffineWeight a) {
    for (auto& x : a.c_) x *= k;
    a.d_ *= k;
    return a;
}

AffineWeight zero_weight(int n) { return AffineWeight(n); }

AffineWeight fundamental(int n, long long i) {
    AffineWeight w(n);
    w.at(i) = 1;
    return w;
}

AffineWeight null_root(int n) {
    AffineWeight w(n);
    w.set_delta(1);
    return w;
}

AffineWeight simple_root(int n, long long i) {
    AffineWeight w = alpha_prime(n, i);
    if (mod(i, n) == 0) w.set_delta(1);
    return w;
}

AffineWeight epsilon(int n, long long i) { return fundamental(n, i + 1) - fundamental(n, i); }

AffineWeight alpha_prime(int n, long long i) {
    AffineWeight w(n);
    w.at(i) += 2;
    w.at(i - 1) -= 1;
    w.at(i + 1) -= 1;
    return w;
}

AffineWeight rho(int n) { return AffineWeight(n, std::vector<long long>(n, 1)); }

long long level(const AffineWeight& w) {
    return std::accumulate(w.coeffs().begin(), w.coeffs().end(), 0LL);
}

bool is_dominant(const AffineWeight& w) {
    return std::all_of(w.coeffs().begin(), w.coeffs().end(), [](long long a) { return a >= 0; });
}

AffineWeight sigma(const AffineWeight& w) {
    AffineWeight r(w.n());
    for (int i = 0; i < w.n(); ++i) r.at(i - 1) = w[i];
    r.set_delta(w.delta());
    return r;
}

AffineWeight sharp(const AffineWeight& w) {
    AffineWeight r(w.n());
    for (int i = 0; i < w.n(); ++i) r.at(-i) = w[i];
    r.set_delta(w.delta());
    return r;
}

AffineWeight finite_part(const AffineWeight& w) { return AffineWeight(w.n(), w.coeffs(), 0); }

AffineWeight weight_from_charges(int n, const std::vector<int>& charges) {
    AffineWeight w(n);
    for (int v : charges) w.at(v) += 1;
    return w;
}

std::vector<int> charges_of(const AffineWeight& w) {
    require(is_dominant(w), ErrorKind::Precondition, "weight must be dominant: " + to_string(w));
    std::vector<int> v;
    for (int i = 0; i < w.n(); ++i)
        for (long long k = 0; k < w[i]; ++k) v.push_back(i);
    return v;
}

bool solve_alpha_prime(const AffineWeight& w, std::vector<long long>& out) {
    const int n = w.n();
    // c_s = s*t + b_s with c_0 = 0, c_1 = t
    std::vector<long long> b(n + 2, 0);
    for (int s = 1; s <= n; ++s) b[s + 1] = 2 * b[s] - b[s - 1] - w[s];
    if (b[n] % n != 0) return false;
    long long t = -b[n] / n;
    out.assign(n, 0);
    for (int s = 0; s < n; ++s) out[s] = s * t + b[s];
    AffineWeight check(n);
    for (int r = 0; r < n; ++r) check += out[r] * alpha_prime(n, r);
    return check == finite_part(w);
}

std::optional<long long> principal_degree(const AffineWeight& lambda, const AffineWeight& w) {
    AffineWeight d = lambda - w;
    std::vector<long long> c;
    if (!solve_alpha_prime(d, c)) return std::nullopt;
    // N^r = N^0 + c_r with N^0 the null root coefficient
    long long s = 0;
    for (long long x : c) s += d.delta() + x;
    return s;
}

ClassicalWeight::ClassicalWeight(int n) : x_(n) { check_modulus(n); }

ClassicalWeight::ClassicalWeight(int n, std::vector<Rational> coords) : x_(std::move(coords)) {
    check_modulus(n);
    require(static_cast<int>(x_.size()) == n, ErrorKind::ContractViolation,
            "classical weight needs n coordinates");
    Rational s = 0;
    for (auto& c : x_) s += c;
    require(s == 0, ErrorKind::ContractViolation, "classical coordinates must sum to zero");
}

ClassicalWeight& ClassicalWeight::operator+=(const ClassicalWeight& o) {
    check_same(n(), o.n());
    for (int i = 0; i < n(); ++i) x_[i] += o.x_[i];
    return *this;
}

ClassicalWeight& ClassicalWeight::operator-=(const ClassicalWeight& o) {
    check_same(n(), o.n());
    for (int i = 0; i < n(); ++i) x_[i] -= o.x_[i];
    return *this;
}

ClassicalWeight operator*(const Rational& k, ClassicalWeight a) {
    for (auto& c : a.x_) c *= k;
    return a;
}

ClassicalWeight ClassicalWeight::permuted(const std::vector<int>& perm) const {
    std::vector<Rational> y(n());
    for (int i = 0; i < n(); ++i) y[perm[i]] = x_[i];
    return ClassicalWeight(n(), std::move(y));
}

ClassicalWeight classical_projection(const AffineWeight& w) {
    // bar L_i has coordinates 1 - i/n on the first i slots and -i/n elsewhere
    const int n = w.n();
    std::vector<Rational> x(n);
    for (int i = 1; i < n; ++i) {
        if (w[i] == 0) continue;
        for (int c = 0; c < n; ++c) {
            Rational v = Rational(c < i ? n - i : -i, n);
            x[c] += v * w[i];
        }
    }
    return ClassicalWeight(n, std::move(x));
}

Rational bilinear(const AffineWeight& a, const AffineWeight& b) {
    check_same(a.n(), b.n());
    const int n = a.n();
    Rational s = 0;
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            s += Rational(a[i] * b[j]) * (Rational(std::min(i, j)) - Rational(i * j, n));
        }
    }
    s += Rational(a.delta() * level(b) + b.delta() * level(a));
    return s;
}

Rational bilinear(const ClassicalWeight& a, const ClassicalWeight& b) {
    check_same(a.n(), b.n());
    Rational s = 0;
    for (int i = 0; i < a.n(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<std::pair<int, ClassicalWeight>> weyl_orbit_terms(const ClassicalWeight& w, int max_n) {
    require(w.n() <= max_n, ErrorKind::ResourceLimit,
            "Weyl group sum over S_" + std::to_string(w.n()) + " exceeds bound " + std::to_string(max_n));
    std::vector<int> perm(w.n());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<int, ClassicalWeight>> out;
    do {
        int inv = 0;
        for (int i = 0; i < w.n(); ++i)
            for (int j = i + 1; j < w.n(); ++j)
                if (perm[i] > perm[j]) ++inv;
        out.emplace_back(inv % 2 ? -1 : 1, w.permuted(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::string to_string(const AffineWeight& w) {
    std::string s;
    auto term = [&](long long c, const std::string& sym) {
        if (c == 0) return;
        if (c > 0 && !s.empty()) s += '+';
        s += std::to_string(c) + '*' + sym;
    };
    for (int i = 0; i < w.n(); ++i) term(w[i], "L" + std::to_string(i));
    term(w.delta(), "d");
    return s.empty() ? "0" : s;
}

std::string to_string(const ClassicalWeight& w) {
    std::string s = "(";
    for (int i = 0; i < w.n(); ++i) {
        if (i) s += ',';
        s += to_string(w[i]);
    }
    return s + ")";
}

AffineWeight parse_weight(int n, const std::string& text) {
    check_modulus(n);
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    auto bad = [&](const std::string& why) -> AffineWeight {
        fail(ErrorKind::Parse, "cannot parse weight '" + text + "': " + why);
    };
    if (t.empty()) bad("empty");
    AffineWeight w(n);
    if (t == "0") return w;
    size_t p = 0;
    auto digits = [&](long long& out) {
        size_t q = p;
        while (q < t.size() && std::isdigit(static_cast<unsigned char>(t[q]))) ++q;
        if (q == p) return false;
        if (q - p > 15) bad("number too long");
        out = std::stoll(t.substr(p, q - p));
        p = q;
        return true;
    };
    bool first = true;
    while (p < t.size()) {
        long long sign = 1;
        if (t[p] == '+' || t[p] == '-') {
            sign = t[p] == '-' ? -1 : 1;
            ++p;
        } else if (!first) {
            bad("expected + or -");
        }
        first = false;
        long long coef = 1;
        if (p < t.size() && std::isdigit(static_cast<unsigned char>(t[p]))) {
            digits(coef);
            if (p >= t.size() || t[p] != '*') bad("coefficient must be followed by '*'");
            ++p;
        }
        if (p >= t.size()) bad("missing symbol");
        if (t[p] == 'd') {
            ++p;
            w.set_delta(w.delta() + sign * coef);
        } else if (t[p] == 'L') {
            ++p;
            long long idx;
            if (!digits(idx)) bad("missing index after L");
            w.at(idx) += sign * coef;
        } else {
            bad(std::string("unexpected '") + t[p] + "'");
        }
    }
    return w;
}

} // namespace afflie
