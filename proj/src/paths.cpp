#include "afflie/paths.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace afflie {

EtaStep ground_step(const AffineWeight& lambda, int k) {
    auto v = charges_of(lambda);
    EtaStep s;
    for (int c : v) s.push_back(mod(static_cast<long long>(c) + k, lambda.n()));
    std::sort(s.begin(), s.end());
    return s;
}

Path ground_state(const AffineWeight& lambda) { return Path(lambda); }

Path::Path(const AffineWeight& lambda, std::vector<EtaStep> deviation)
    : n_(lambda.n()), charges_(charges_of(lambda)), dev_(std::move(deviation)) {
    require(!charges_.empty(), ErrorKind::Precondition, "paths need a weight of positive level");
    for (auto& s : dev_) {
        require(static_cast<int>(s.size()) == level(), ErrorKind::ContractViolation,
                "step length differs from the level");
        for (int g : s)
            require(g >= 0 && g < n_, ErrorKind::ContractViolation, "step residue out of range");
        std::sort(s.begin(), s.end());
    }
    while (!dev_.empty() && dev_.back() == ground_step(lambda, length() - 1)) dev_.pop_back();
}

EtaStep Path::step(int k) const {
    if (k < length()) return dev_[k];
    return ground_step(lambda(), k);
}

AffineWeight step_vector(int n, const EtaStep& s) {
    AffineWeight w(n);
    for (int g : s) w += epsilon(n, g);
    return w;
}

AffineWeight step_hat(int n, const EtaStep& s) {
    AffineWeight w(n);
    for (int g : s) w.at(g) += 1;
    return w;
}

std::optional<EtaStep> step_from_vector(const AffineWeight& v, int l) {
    const int n = v.n();
    if (level(v) != 0 || v.delta() != 0) return std::nullopt;
    // v_s = c_{s-1} - c_s
    std::vector<long long> partial(n, 0);
    long long S = 0;
    for (int s = 1; s < n; ++s) {
        partial[s] = partial[s - 1] + v[s];
        S += partial[s];
    }
    if ((l + S) % n != 0) return std::nullopt;
    long long c0 = (l + S) / n;
    EtaStep out;
    for (int s = 0; s < n; ++s) {
        long long c = c0 - partial[s];
        if (c < 0) return std::nullopt;
        for (long long t = 0; t < c; ++t) out.push_back(s);
    }
    if (static_cast<int>(out.size()) != l) return std::nullopt;
    return out;
}

std::vector<AffineWeight> points(const Path& p) {
    const int K = p.length();
    std::vector<AffineWeight> pts(K + 1, AffineWeight(p.n()));
    for (int c : p.charges()) pts[K].at(static_cast<long long>(c) + K) += 1;
    for (int k = K - 1; k >= 0; --k) pts[k] = pts[k + 1] - step_vector(p.n(), p.step(k));
    return pts;
}

AffineWeight point(const Path& p, int k) {
    require(k >= 0, ErrorKind::Precondition, "path index must be nonnegative");
    if (k >= p.length()) {
        AffineWeight w(p.n());
        for (int c : p.charges()) w.at(static_cast<long long>(c) + k) += 1;
        return w;
    }
    return points(p)[k];
}

int local_energy(const EtaStep& a, const EtaStep& b, int max_l) {
    require(a.size() == b.size(), ErrorKind::ContractViolation, "steps of different level");
    const int l = static_cast<int>(a.size());
    require(l <= max_l, ErrorKind::ResourceLimit,
            "local energy minimises over S_" + std::to_string(l) + ", bound is " + std::to_string(max_l));
    std::vector<int> perm(l);
    std::iota(perm.begin(), perm.end(), 0);
    int best = l;
    do {
        int h = 0;
        for (int i = 0; i < l; ++i) h += a[i] - b[perm[i]] >= 0 ? 1 : 0;
        best = std::min(best, h);
    } while (best > 0 && std::next_permutation(perm.begin(), perm.end()));
    return best;
}

long long energy(const Path& p) {
    const AffineWeight lam = p.lambda();
    long long e = 0;
    for (int k = 1; k <= p.length(); ++k) {
        int h = local_energy(p.step(k - 1), p.step(k));
        int g = local_energy(ground_step(lam, k - 1), ground_step(lam, k));
        e += static_cast<long long>(k) * (h - g);
    }
    return e;
}

AffineWeight path_weight(const Path& p) {
    AffineWeight w = point(p, 0);
    w.set_delta(-energy(p));
    return w;
}

Path pi(const Multipartition& mp) {
    require(mp.standard_charges(), ErrorKind::Precondition, "paths need sorted charges");
    const int K = mp.largest_part();
    std::vector<Partition> conj;
    for (auto& p : mp.parts()) conj.push_back(conjugate(p));
    std::vector<EtaStep> dev(K);
    for (int k = 0; k < K; ++k)
        for (int j = 0; j < mp.level(); ++j) {
            int h = k < static_cast<int>(conj[j].size()) ? conj[j][k] : 0;
            dev[k].push_back(mod(static_cast<long long>(mp.charges()[j]) + k - h, mp.n()));
        }
    return Path(highest_weight(mp), std::move(dev));
}

std::vector<long long> eps_path_profile(const Path& p, int r) {
    auto pts = points(p);
    std::vector<long long> out;
    for (int k = 0; k <= p.length(); ++k) {
        long long a = (pts[k] - step_hat(p.n(), p.step(k)))[r];
        out.push_back(a <= 0 ? -a : 0);
    }
    return out;
}

long long eps_path(const Path& p, int r) {
    auto prof = eps_path_profile(p, r);
    return *std::max_element(prof.begin(), prof.end());
}

bool is_restricted(const Path& q, const AffineWeight& lambda1) {
    check_same(q.n(), lambda1.n());
    require(is_dominant(lambda1), ErrorKind::Precondition, "restricting weight must be dominant");
    auto pts = points(q);
    for (int k = 0; k <= q.length(); ++k)
        if (!is_dominant(finite_part(pts[k] + lambda1 - step_hat(q.n(), q.step(k))))) return false;
    return true;
}

bool is_restricted_eps(const Path& q, const AffineWeight& lambda1) {
    check_same(q.n(), lambda1.n());
    for (int r = 0; r < q.n(); ++r)
        if (eps_path(q, r) > lambda1[r]) return false;
    return true;
}

std::vector<int> end_colour_profile(const Path& p, int k) {
    require(k >= 1, ErrorKind::Precondition, "row length must be positive");
    const int n = p.n();
    EtaStep shifted = p.step(k);
    for (auto& g : shifted) g = mod(g - 1, n);
    AffineWeight diff = step_vector(n, p.step(k - 1)) - step_vector(n, shifted);
    std::vector<long long> psi;
    require(solve_alpha_prime(diff, psi), ErrorKind::Inconsistency,
            "end colours undetermined at k=" + std::to_string(k));
    long long lo = *std::min_element(psi.begin(), psi.end());
    std::vector<int> out;
    for (int r = 0; r < n; ++r)
        for (long long t = lo; t < psi[r]; ++t) out.push_back(r);
    return out;
}

namespace {

// Sorted lift of a residue multiset to Z: T[idx + l] = T[idx] + n.
struct Lift {
    std::vector<int> res;
    int n;
    long long at(long long idx) const {
        const long long l = static_cast<long long>(res.size());
        long long q = idx >= 0 ? idx / l : -((-idx + l - 1) / l);
        return res[idx - q * l] + q * n;
    }
};

// t_{j,k} = v_j - (height of column k+1 of component j); the highest lift
// takes, for each k, the largest admissible shift of the lifted residues
// that keeps t_{j,k} <= t_{j,k+1}.
std::vector<long long> lower_column(const EtaStep& step, int k, int n, const std::vector<long long>& above) {
    const int l = static_cast<int>(step.size());
    Lift T{{}, n};
    for (int g : step) T.res.push_back(mod(static_cast<long long>(g) - k, n));
    std::sort(T.res.begin(), T.res.end());
    auto fits = [&](long long s) {
        for (int j = 0; j < l; ++j)
            if (T.at(j + s) > above[j]) return false;
        return true;
    };
    // largest s with T(s) <= above[0], then walk down
    long long s = (above[0] / n + 2) * l;
    while (T.at(s) > above[0]) --s;
    while (!fits(s)) --s;
    std::vector<long long> t(l);
    for (int j = 0; j < l; ++j) t[j] = T.at(j + s);
    return t;
}

} // namespace

Multipartition highest_lift(const Path& p) {
    const int l = p.level(), n = p.n(), K = p.length();
    std::vector<long long> t(p.charges().begin(), p.charges().end());
    std::vector<std::vector<int>> cols(l, std::vector<int>(K, 0));
    for (int k = K - 1; k >= 0; --k) {
        t = lower_column(p.step(k), k, n, t);
        for (int j = 0; j < l; ++j) {
            long long h = p.charges()[j] - t[j];
            require(h >= 0, ErrorKind::Inconsistency, "negative column height in highest lift");
            cols[j][k] = static_cast<int>(h);
        }
    }
    std::vector<Partition> parts(l);
    for (int j = 0; j < l; ++j) {
        Partition c;
        for (int h : cols[j])
            if (h > 0) c.push_back(h);
        parts[j] = conjugate(c);
    }
    Multipartition mp(n, p.charges(), std::move(parts));
    require(pi(mp) == p, ErrorKind::Inconsistency, "highest lift does not project back onto the path");
    return mp;
}

namespace {

void all_steps(int n, int l, int lo, EtaStep& cur, std::vector<EtaStep>& out) {
    if (static_cast<int>(cur.size()) == l) {
        out.push_back(cur);
        return;
    }
    for (int g = lo; g < n; ++g) {
        cur.push_back(g);
        all_steps(n, l, g, cur, out);
        cur.pop_back();
    }
}

struct Enumerator {
    AffineWeight lambda;
    int n, l;
    long long max_degree;
    std::optional<AffineWeight> lambda1;
    const std::function<void(const Path&)>& visit;
    std::vector<EtaStep> steps;
    std::vector<long long> v;
    std::vector<EtaStep> dev;

    bool admissible(const AffineWeight& pk, const EtaStep& s) const {
        if (!lambda1) return true;
        return is_dominant(pk + *lambda1 - step_hat(n, s));
    }

    // dev[k..K-1] fixed; t holds t_{.,k}; pk = p_k
    void down(int k, const std::vector<long long>& t, const AffineWeight& pk, long long deg) {
        if (k == 0) {
            visit(Path(lambda, dev));
            return;
        }
        for (auto& s : steps) {
            if (k == static_cast<int>(dev.size()) && s == ground_step(lambda, k - 1)) continue;
            auto tk = lower_column(s, k - 1, n, t);
            long long add = 0;
            for (int j = 0; j < l; ++j) add += v[j] - tk[j];
            if (deg + add > max_degree) continue;
            AffineWeight prev = pk - step_vector(n, s);
            if (!admissible(prev, s)) continue;
            dev[k - 1] = s;
            down(k - 1, tk, prev, deg + add);
        }
    }
};

} // namespace

void enumerate_paths(const AffineWeight& lambda, long long max_degree,
                     const std::function<void(const Path&)>& visit,
                     const std::optional<AffineWeight>& lambda1) {
    if (lambda1) {
        check_same(lambda.n(), lambda1->n());
        require(is_dominant(*lambda1), ErrorKind::Precondition, "restricting weight must be dominant");
    }
    Enumerator e{lambda, lambda.n(), static_cast<int>(level(lambda)), max_degree, lambda1, visit, {}, {}, {}};
    auto ch = charges_of(lambda);
    e.v.assign(ch.begin(), ch.end());
    EtaStep cur;
    all_steps(e.n, e.l, 0, cur, e.steps);
    if (max_degree < 0) return;
    visit(Path(lambda));
    for (int K = 1; K <= max_degree; ++K) {
        e.dev.assign(K, EtaStep{});
        Path g(lambda);
        e.down(K, e.v, point(g, K), 0);
    }
}

std::string to_string(const Path& p) {
    std::string s;
    for (int k = 0; k < p.length(); ++k) {
        if (k) s += ',';
        for (int g : p.step(k)) {
            require(g < 10, ErrorKind::Unsupported, "text form of paths needs residues below 10");
            s += static_cast<char>('0' + g);
        }
    }
    return s + '|' + to_string(p.lambda());
}

Path parse_path(int n, const std::string& text) {
    auto bar = text.find('|');
    require(bar != std::string::npos, ErrorKind::Parse, "path needs '|weight': " + text);
    AffineWeight lam = parse_weight(n, text.substr(bar + 1));
    require(is_dominant(lam) && level(lam) > 0, ErrorKind::Parse, "path weight must be dominant of positive level");
    std::vector<EtaStep> dev;
    std::stringstream ss(text.substr(0, bar));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        EtaStep s;
        for (char c : tok) {
            require(c >= '0' && c <= '9' && c - '0' < n, ErrorKind::Parse, "bad step '" + tok + "'");
            s.push_back(c - '0');
        }
        require(static_cast<long long>(s.size()) == level(lam), ErrorKind::Parse,
                "step '" + tok + "' does not match the level");
        dev.push_back(s);
    }
    return Path(lam, std::move(dev));
}

} // namespace afflie
