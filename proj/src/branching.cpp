#include "afflie/branching.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <boost/multiprecision/integer.hpp>
#include <json.hpp>

namespace afflie {

namespace {

BigInt floor_q(const Rational& q) {
    BigInt a = numerator(q), b = denominator(q);
    BigInt r = a / b;
    if (a % b != 0 && a < 0) --r;
    return r;
}

BigInt ceil_q(const Rational& q) { return -floor_q(-q); }

long long to_ll(const BigInt& x) {
    require(x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max(),
            ErrorKind::ResourceLimit, "integer overflow in series arithmetic");
    return static_cast<long long>(x);
}

} // namespace

ShiftedSeries ShiftedSeries::one(long long order) {
    std::vector<long long> c(order + 1, 0);
    if (order >= 0) c[0] = 1;
    return ShiftedSeries(0, c);
}

ShiftedSeries ShiftedSeries::normalized() const {
    ShiftedSeries s = *this;
    while (s.offset_ >= 1) {
        s.c_.insert(s.c_.begin(), 0);
        s.offset_ -= 1;
    }
    while (s.offset_ < 0 && !s.c_.empty() && s.c_.front() == 0) {
        s.c_.erase(s.c_.begin());
        s.offset_ += 1;
    }
    return s;
}

ShiftedSeries ShiftedSeries::truncated(long long order) const {
    require(order <= this->order(), ErrorKind::Precondition, "cannot extend a truncated series");
    ShiftedSeries s = *this;
    s.c_.resize(order + 1);
    return s;
}

ShiftedSeries& ShiftedSeries::operator+=(const ShiftedSeries& o) {
    if (o.c_.empty()) return *this;
    if (c_.empty()) return *this = o;
    Rational d = o.offset_ - offset_;
    require(denominator(d) == 1, ErrorKind::ContractViolation, "series offsets differ by a non-integer");
    Rational lo = std::min(offset_, o.offset_);
    Rational prec = std::min(precision(), o.precision());
    long long len = to_ll(numerator(prec - lo)) + 1;
    std::vector<long long> c(std::max(len, 0LL), 0);
    auto put = [&](const ShiftedSeries& s) {
        long long sh = to_ll(numerator(s.offset_ - lo));
        for (size_t k = 0; k < s.c_.size(); ++k)
            if (sh + static_cast<long long>(k) < len) c[sh + k] += s.c_[k];
    };
    put(*this);
    put(o);
    offset_ = lo;
    c_ = std::move(c);
    return *this;
}

ShiftedSeries operator*(const ShiftedSeries& a, const ShiftedSeries& b) {
    size_t len = std::min(a.c_.size(), b.c_.size());
    std::vector<long long> c(len, 0);
    for (size_t i = 0; i < len; ++i)
        for (size_t j = 0; i + j < len; ++j) c[i + j] += a.c_[i] * b.c_[j];
    return ShiftedSeries(a.offset_ + b.offset_, c);
}

ShiftedSeries operator*(long long k, ShiftedSeries a) {
    for (auto& x : a.c_) x *= k;
    return a;
}

bool ShiftedSeries::same_as(const ShiftedSeries& o) const {
    auto a = normalized(), b = o.normalized();
    if (a.offset_ != b.offset_) return false;
    size_t len = std::min(a.c_.size(), b.c_.size());
    return std::equal(a.c_.begin(), a.c_.begin() + len, b.c_.begin());
}

std::string to_string(const ShiftedSeries& s) {
    std::string body;
    for (size_t k = 0; k < s.coeffs().size(); ++k) {
        long long c = s.coeffs()[k];
        if (!c) continue;
        long long a = c < 0 ? -c : c;
        if (body.empty()) body += c < 0 ? "-" : "";
        else body += c < 0 ? " - " : " + ";
        if (k == 0) {
            body += std::to_string(a);
            continue;
        }
        if (a != 1) body += std::to_string(a);
        body += "z";
        if (k != 1) body += "^" + std::to_string(k);
    }
    if (body.empty()) body = "0";
    if (s.offset() != 0) return "z^(" + to_string(s.offset()) + ")*(" + body + ")";
    return body;
}

std::string to_json(const ShiftedSeries& s) {
    std::string out = "{\"offset\":\"" + to_string(s.offset()) + "\",\"coeffs\":[";
    for (size_t k = 0; k < s.coeffs().size(); ++k) {
        if (k) out += ',';
        out += std::to_string(s.coeffs()[k]);
    }
    return out + "]}";
}

ShiftedSeries parse_series_json(const std::string& text) {
    try {
        auto j = nlohmann::json::parse(text);
        return ShiftedSeries(parse_rational(j.at("offset").get<std::string>()),
                             j.at("coeffs").get<std::vector<long long>>());
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        fail(ErrorKind::Parse, std::string("cannot parse series JSON: ") + e.what());
    }
}

namespace {

struct LatticeBall {
    std::vector<Rational> y; // centre -mu/m
    Rational half_m;

    Rational value(const std::vector<BigInt>& a) const {
        Rational s = 0;
        for (size_t c = 0; c < a.size(); ++c) {
            Rational x = Rational(a[c]) - y[c];
            s += x * x;
        }
        return half_m * s;
    }

    // every alpha in the root lattice with value <= bound
    void points(const Rational& bound, const std::function<void(const Rational&)>& visit) const {
        if (bound < 0) return;
        const int n = static_cast<int>(y.size());
        Rational R2 = bound / half_m;
        BigInt r = boost::multiprecision::sqrt(ceil_q(R2)) + 1;
        std::vector<BigInt> a(n);
        std::function<void(int, Rational, BigInt)> rec = [&](int c, Rational ps, BigInt sum) {
            if (c == n - 1) {
                a[c] = -sum;
                Rational x = Rational(a[c]) - y[c];
                if (ps + x * x <= R2) visit(half_m * (ps + x * x));
                return;
            }
            for (BigInt v = ceil_q(y[c] - Rational(r)); v <= floor_q(y[c] + Rational(r)); ++v) {
                Rational x = Rational(v) - y[c];
                Rational q = ps + x * x;
                if (q > R2) continue;
                a[c] = v;
                rec(c + 1, q, sum + v);
            }
        };
        rec(0, 0, 0);
    }

    Rational minimum() const {
        const int n = static_cast<int>(y.size());
        std::vector<BigInt> a(n);
        BigInt sum = 0;
        for (int c = 0; c < n; ++c) {
            a[c] = floor_q(y[c] + Rational(1, 2));
            sum += a[c];
        }
        while (sum != 0) {
            int best = 0;
            for (int c = 1; c < n; ++c) {
                Rational dc = Rational(a[c]) - y[c], db = Rational(a[best]) - y[best];
                if (sum > 0 ? dc > db : dc < db) best = c;
            }
            if (sum > 0) { --a[best]; --sum; }
            else { ++a[best]; ++sum; }
        }
        Rational lo = value(a);
        points(lo, [&](const Rational& e) { lo = std::min(lo, e); });
        return lo;
    }
};

LatticeBall ball(const ClassicalWeight& mu, long long m) {
    require(m >= 1, ErrorKind::Precondition, "theta index must be positive");
    LatticeBall b{{}, Rational(m, 2)};
    for (int c = 0; c < mu.n(); ++c) b.y.push_back(-mu[c] / Rational(m));
    return b;
}

ShiftedSeries collect(const LatticeBall& b, const Rational& lo, const Rational& bound) {
    if (bound < lo) return ShiftedSeries(lo, {});
    long long len = to_ll(floor_q(bound - lo)) + 1;
    std::vector<long long> c(len, 0);
    b.points(bound, [&](const Rational& e) {
        Rational d = e - lo;
        require(denominator(d) == 1, ErrorKind::Inconsistency, "theta exponents are not congruent mod 1");
        ++c[to_ll(numerator(d))];
    });
    return ShiftedSeries(lo, c);
}

} // namespace

ShiftedSeries theta_series_upto(const ClassicalWeight& mu, long long m, const Rational& bound) {
    auto b = ball(mu, m);
    return collect(b, b.minimum(), bound);
}

ShiftedSeries theta_series(const ClassicalWeight& mu, long long m, long long order) {
    require(order >= 0, ErrorKind::Precondition, "truncation order must be nonnegative");
    auto b = ball(mu, m);
    Rational lo = b.minimum();
    return collect(b, lo, lo + Rational(order));
}

ShiftedSeries eta_power(long long e, long long order) {
    require(order >= 0, ErrorKind::Precondition, "truncation order must be nonnegative");
    const size_t len = order + 1;
    std::vector<long long> P(len, 0);
    P[0] = 1;
    for (long long k = 1; k <= order; ++k)
        for (long long i = order; i >= k; --i) P[i] -= P[i - k];
    std::vector<long long> base = P;
    if (e < 0) {
        std::vector<long long> Q(len, 0);
        Q[0] = 1;
        for (size_t k = 1; k < len; ++k)
            for (size_t i = 1; i <= k; ++i) Q[k] -= P[i] * Q[k - i];
        base = Q;
    }
    ShiftedSeries b(0, base), r = ShiftedSeries::one(order);
    for (long long t = 0; t < (e < 0 ? -e : e); ++t) r = r * b;
    return r.shifted(Rational(e, 24));
}

Rational gamma_shift(const AffineWeight& lambda1, const AffineWeight& lambda2, const AffineWeight& lambda) {
    const int n = lambda.n();
    AffineWeight r = rho(n);
    auto term = [&](const AffineWeight& w) {
        AffineWeight x = finite_part(w) + r;
        return norm2(x) / Rational(2 * (level(w) + n));
    };
    return term(lambda1) + term(lambda2) - term(lambda) - norm2(r) / Rational(2 * n);
}

ThetaReport theta_branching_report(const AffineWeight& lambda1, const AffineWeight& lambda2,
                                   const AffineWeight& lambda, long long order) {
    const int n = lambda.n();
    check_same(n, lambda1.n());
    check_same(n, lambda2.n());
    require(is_dominant(lambda2) && level(lambda2) == 1, ErrorKind::Unsupported,
            "the theta formula needs a fundamental second factor");
    require(is_dominant(lambda1) && is_dominant(lambda), ErrorKind::Precondition, "weights must be dominant");
    require(level(lambda) == level(lambda1) + 1, ErrorKind::Precondition, "levels do not add up");
    std::vector<long long> c;
    require(solve_alpha_prime(finite_part(lambda1 + lambda2 - lambda), c), ErrorKind::Precondition,
            "weight is not congruent to the tensor product weights");
    ThetaReport rep;
    rep.L = n + level(lambda);
    rep.m = rep.L * (rep.L - 1);
    rep.gamma = gamma_shift(lambda1, lambda2, lambda);
    ClassicalWeight a = Rational(-rep.L) * classical_projection(finite_part(lambda1) + rho(n));
    Rational bound = rep.gamma + Rational(order) + Rational(n - 1, 24);
    ShiftedSeries sum;
    for (auto& [sg, w] : weyl_orbit_terms(classical_projection(finite_part(lambda) + rho(n)))) {
        ClassicalWeight mu = a + Rational(rep.L - 1) * w;
        rep.terms.push_back({sg, mu});
        sum += sg * theta_series_upto(mu, rep.m, bound);
    }
    if (sum.coeffs().empty()) {
        rep.result = ShiftedSeries(0, std::vector<long long>(order + 1, 0));
        return rep;
    }
    rep.raw = eta_power(-(n - 1), sum.order()) * sum;
    Rational d = rep.raw.offset() - rep.gamma;
    require(denominator(d) == 1, ErrorKind::Inconsistency, "theta formula gives a non-integral series");
    ShiftedSeries b = rep.raw.shifted(-rep.gamma).normalized();
    require(b.offset() == 0, ErrorKind::Inconsistency, "theta formula gives a series with negative powers");
    require(b.order() >= order, ErrorKind::Inconsistency, "theta enumeration too short");
    rep.result = b.truncated(order);
    return rep;
}

ShiftedSeries theta_branching(const AffineWeight& lambda1, const AffineWeight& lambda2,
                              const AffineWeight& lambda, long long order) {
    return theta_branching_report(lambda1, lambda2, lambda, order).result;
}

std::vector<Multipartition> restricted_Y(const AffineWeight& lambda1, const AffineWeight& lambda2,
                                         long long max_degree) {
    check_same(lambda1.n(), lambda2.n());
    require(is_dominant(lambda1), ErrorKind::Precondition, "restricting weight must be dominant");
    std::vector<Multipartition> out;
    for (auto& v : build_Y_crystal(lambda2, max_degree).vertices) {
        bool ok = true;
        for (int r = 0; r < v.n() && ok; ++r) ok = eps(v, r) <= lambda1[r];
        if (ok) out.push_back(v);
    }
    return out;
}

std::vector<Multipartition> restricted_Y_from_paths(const AffineWeight& lambda1, const AffineWeight& lambda2,
                                                    long long max_degree) {
    std::vector<Multipartition> out;
    enumerate_paths(lambda2, max_degree, [&](const Path& q) { out.push_back(highest_lift(q)); }, lambda1);
    std::sort(out.begin(), out.end());
    return out;
}

long long class_size_base(const AffineWeight& lambda1, const AffineWeight& lambda2, const AffineWeight& lambda) {
    check_same(lambda1.n(), lambda2.n());
    check_same(lambda.n(), lambda2.n());
    require(level(lambda) == level(lambda1) + level(lambda2), ErrorKind::Precondition,
            "level of " + to_string(lambda) + " is not the sum of the factor levels");
    std::vector<long long> c;
    require(solve_alpha_prime(finite_part(lambda1 + lambda2 - lambda), c), ErrorKind::Precondition,
            "weight class of " + to_string(lambda) + " does not occur in the tensor product");
    long long s = 0;
    for (long long x : c) s += x;
    return s;
}

ShiftedSeries branching_series_multipartitions(const AffineWeight& lambda1, const AffineWeight& lambda2,
                                               const AffineWeight& lambda, long long order) {
    long long D = lambda.n() * order + class_size_base(lambda1, lambda2, lambda);
    std::vector<long long> c(order + 1, 0);
    if (D >= 0) {
        AffineWeight target = finite_part(lambda - lambda1);
        for (auto& v : restricted_Y(lambda1, lambda2, D)) {
            if (finite_part(weight(v)) != target) continue;
            long long d = degree(v);
            if (d <= order) ++c[d];
        }
    }
    return ShiftedSeries(0, c);
}

ShiftedSeries branching_series_paths(const AffineWeight& lambda1, const AffineWeight& lambda2,
                                     const AffineWeight& lambda, long long order) {
    long long D = lambda.n() * order + class_size_base(lambda1, lambda2, lambda);
    std::vector<long long> c(order + 1, 0);
    if (D >= 0) {
        AffineWeight target = finite_part(lambda);
        enumerate_paths(lambda2, D, [&](const Path& q) {
            if (point(q, 0) + finite_part(lambda1) != target) return;
            long long e = energy(q);
            if (e <= order) ++c[e];
        }, lambda1);
    }
    return ShiftedSeries(0, c);
}

ShiftedSeries branching_series(const AffineWeight& lambda1, const AffineWeight& lambda2,
                               const AffineWeight& lambda, long long order) {
    auto a = branching_series_paths(lambda1, lambda2, lambda, order);
    auto b = branching_series_multipartitions(lambda1, lambda2, lambda, order);
    require(a == b, ErrorKind::CrossCheck,
            "path and multipartition enumerations differ: " + to_string(a) + " vs " + to_string(b));
    return a;
}

std::vector<AffineWeight> congruent_dominant_weights(const AffineWeight& base, long long L) {
    const int n = base.n();
    std::vector<AffineWeight> out;
    std::vector<long long> a(n, 0);
    std::function<void(int, long long)> rec = [&](int i, long long left) {
        if (i == n - 1) {
            a[i] = left;
            AffineWeight w(n, a);
            std::vector<long long> c;
            if (solve_alpha_prime(finite_part(w - base), c)) out.push_back(w);
            return;
        }
        for (long long x = left; x >= 0; --x) {
            a[i] = x;
            rec(i + 1, left - x);
        }
    };
    if (level(base) == L) rec(0, L);
    else if (L >= 0) {
        // classes only make sense at equal level
        rec(0, L);
        out.clear();
    }
    return out;
}

AffineWeight profile_weight(int n, const std::vector<long long>& profile) {
    require(static_cast<int>(profile.size()) == n, ErrorKind::Precondition, "profile needs one entry per residue");
    for (long long x : profile) require(x >= 0, ErrorKind::Precondition, "profile entries must be nonnegative");
    return AffineWeight(n, profile);
}

ShiftedSeries js_series_crystal(const std::vector<long long>& i, const std::vector<long long>& j, long long order) {
    const int n = static_cast<int>(i.size());
    AffineWeight li = profile_weight(n, i);
    AffineWeight lj = profile_weight(n, j);
    std::vector<long long> c(order + 1, 0);
    for (auto& v : build_crystal(li, order, Labels::Y, Cutoff::ZeroNodes).vertices) {
        bool ok = true;
        for (int r = 0; r < n && ok; ++r) ok = eps(v, r) <= lj[r];
        if (ok) ++c[degree(v)];
    }
    return ShiftedSeries(0, c);
}

ShiftedSeries js_series_branching(const std::vector<long long>& i, const std::vector<long long>& j, long long order) {
    const int n = static_cast<int>(i.size());
    AffineWeight li = profile_weight(n, i);
    AffineWeight lj = profile_weight(n, j);
    ShiftedSeries total(0, std::vector<long long>(order + 1, 0));
    for (auto& w : congruent_dominant_weights(li + lj, level(li) + level(lj)))
        total += branching_series(lj, li, w, order);
    return total;
}

ShiftedSeries js_generating_function(const std::vector<long long>& i, const std::vector<long long>& j,
                                     long long order) {
    auto a = js_series_crystal(i, j, order);
    auto b = js_series_branching(i, j, order);
    require(a == b, ErrorKind::CrossCheck,
            "crystal filter and weight sum differ: " + to_string(a) + " vs " + to_string(b));
    return a;
}

std::vector<Multipartition> js_modules(const std::vector<long long>& i, const std::vector<long long>& j, int m) {
    const int n = static_cast<int>(i.size());
    AffineWeight li = profile_weight(n, i);
    AffineWeight lj = profile_weight(n, j);
    std::vector<Multipartition> out;
    for (auto& v : build_Y_crystal(li, m).vertices) {
        if (v.size() != m) continue;
        bool ok = true;
        for (int r = 0; r < n && ok; ++r) ok = eps(v, r) <= lj[r];
        if (ok) out.push_back(v);
    }
    return out;
}

std::vector<Multipartition> irreducible_restriction(const std::vector<long long>& i, int m) {
    const int n = static_cast<int>(i.size());
    std::set<Multipartition> all;
    for (int k = 0; k < n; ++k) {
        std::vector<long long> j(n, 0);
        j[k] = 1;
        for (auto& v : js_modules(i, j, m)) all.insert(v);
    }
    return {all.begin(), all.end()};
}

} // namespace afflie
