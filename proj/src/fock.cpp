#include "afflie/fock.hpp"

#include <sstream>

namespace afflie {

LaurentPoly LaurentPoly::monomial(long long e, long long c) {
    LaurentPoly p;
    if (c) p.t_[e] = c;
    return p;
}

long long LaurentPoly::coeff(long long e) const {
    auto it = t_.find(e);
    return it == t_.end() ? 0 : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (auto [e, c] : o.t_) {
        auto& x = t_[e];
        x += c;
        if (!x) t_.erase(e);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (auto [e, c] : o.t_) {
        auto& x = t_[e];
        x -= c;
        if (!x) t_.erase(e);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    LaurentPoly r;
    for (auto [e1, c1] : t_)
        for (auto [e2, c2] : o.t_) r += monomial(e1 + e2, c1 * c2);
    *this = std::move(r);
    return *this;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (auto [e, c] : t_) r.t_[-e] = c;
    return r;
}

long long LaurentPoly::at_one() const {
    long long s = 0;
    for (auto [e, c] : t_) s += c;
    return s;
}

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (auto [e, c] : p.terms()) {
        long long a = c < 0 ? -c : c;
        if (s.empty()) s += c < 0 ? "-" : "";
        else s += c < 0 ? " - " : " + ";
        if (e == 0) {
            s += std::to_string(a);
            continue;
        }
        if (a != 1) s += std::to_string(a) + "*";
        s += "q";
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

FockVector::FockVector(int n, std::vector<int> charges) : n_(n), charges_(std::move(charges)) {
    check_modulus(n);
}

FockVector FockVector::basis(const Multipartition& mp, const LaurentPoly& c) {
    FockVector v(mp.n(), mp.charges());
    v.add(mp, c);
    return v;
}

LaurentPoly FockVector::coeff(const Multipartition& mp) const {
    auto it = t_.find(mp);
    return it == t_.end() ? LaurentPoly() : it->second;
}

void FockVector::add(const Multipartition& mp, const LaurentPoly& c) {
    require(mp.n() == n_ && mp.charges() == charges_, ErrorKind::ModulusMismatch,
            "multipartition does not belong to this Fock space");
    if (c.is_zero()) return;
    auto& x = t_[mp];
    x += c;
    if (x.is_zero()) t_.erase(mp);
}

FockVector& FockVector::operator+=(const FockVector& o) {
    require(o.n_ == n_ && o.charges_ == charges_, ErrorKind::ModulusMismatch, "Fock spaces differ");
    for (auto& [mp, c] : o.t_) add(mp, c);
    return *this;
}

FockVector FockVector::scaled(const LaurentPoly& c) const {
    FockVector r(n_, charges_);
    for (auto& [mp, x] : t_) r.add(mp, x * c);
    return r;
}

std::string to_string(const FockVector& v) {
    if (v.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [mp, c] : v.terms()) {
        if (!first) os << " + ";
        first = false;
        os << '(' << to_string(c) << ")*" << to_compact(mp);
    }
    return os.str();
}

int hweight(const Multipartition& mp, int r) {
    int s = 0;
    for (auto& x : r_signature(mp, mod(r, mp.n()))) s += x.kind == NodeKind::Addable ? 1 : -1;
    return s;
}

namespace {

// signed count of addable/removable r-nodes y of mp with x < y (above) or y < x
int count_side(const Multipartition& mp, const Node& x, bool above) {
    int s = 0;
    for (auto& y : r_signature(mp, x.colour)) {
        bool take = above ? node_less(x, y) : node_less(y, x);
        if (take) s += y.kind == NodeKind::Addable ? 1 : -1;
    }
    return s;
}

} // namespace

FockVector fock_f(const FockVector& v, int r) {
    r = mod(r, v.n());
    FockVector out(v.n(), v.charges());
    for (auto& [lam, c] : v.terms())
        for (auto& x : addable_nodes(lam, r))
            out.add(add_node(lam, x), c * LaurentPoly::monomial(count_side(lam, x, true)));
    return out;
}

FockVector fock_e(const FockVector& v, int r) {
    r = mod(r, v.n());
    FockVector out(v.n(), v.charges());
    for (auto& [mu, c] : v.terms())
        for (auto& x : removable_nodes(mu, r)) {
            Multipartition lam = remove_node(mu, x);
            Node a = x;
            a.kind = NodeKind::Addable;
            out.add(lam, c * LaurentPoly::monomial(-count_side(lam, a, false)));
        }
    return out;
}

FockVector fock_qh(const FockVector& v, int r, int power) {
    FockVector out(v.n(), v.charges());
    for (auto& [lam, c] : v.terms())
        out.add(lam, c * LaurentPoly::monomial(static_cast<long long>(power) * hweight(lam, r)));
    return out;
}

FockVector fock_qd(const FockVector& v) {
    FockVector out(v.n(), v.charges());
    for (auto& [lam, c] : v.terms()) out.add(lam, c * LaurentPoly::monomial(-degree(lam)));
    return out;
}

namespace {

FockVector at_one(const FockVector& v) {
    FockVector out(v.n(), v.charges());
    for (auto& [lam, c] : v.terms()) out.add(lam, c.at_one());
    return out;
}

} // namespace

FockVector classical_f(const FockVector& v, int r) {
    require(v.charges().size() == 1, ErrorKind::Precondition, "classical action is defined at level one");
    return at_one(fock_f(at_one(v), r));
}

FockVector classical_e(const FockVector& v, int r) {
    require(v.charges().size() == 1, ErrorKind::Precondition, "classical action is defined at level one");
    return at_one(fock_e(at_one(v), r));
}

LaurentPoly scalar(const FockVector& u, const FockVector& v) {
    require(u.n() == v.n() && u.charges() == v.charges(), ErrorKind::ModulusMismatch, "Fock spaces differ");
    LaurentPoly s;
    for (auto& [lam, c] : u.terms()) s += c * v.coeff(lam);
    return s;
}

namespace {

std::vector<int> primed_charges(const std::vector<int>& v) {
    std::vector<int> w(v.size());
    for (size_t j = 0; j < v.size(); ++j) w[j] = -v[v.size() - 1 - j];
    return w;
}

} // namespace

FockVector prime_map(const FockVector& v) {
    FockVector out(v.n(), primed_charges(v.charges()));
    for (auto& [lam, c] : v.terms()) out.add(conjugate_reverse(lam), c.bar());
    return out;
}

FockVector fock_f_sharp(const FockVector& v, int i) { return fock_f(v, mod(-i, v.n())); }
FockVector fock_e_sharp(const FockVector& v, int i) { return fock_e(v, mod(-i, v.n())); }

TensorFockVector::TensorFockVector(int n, std::vector<int> left, std::vector<int> right)
    : n_(n), left_(std::move(left)), right_(std::move(right)) {
    check_modulus(n);
}

TensorFockVector TensorFockVector::basis(const Multipartition& a, const Multipartition& b,
                                         const LaurentPoly& c) {
    check_same(a.n(), b.n());
    TensorFockVector w(a.n(), a.charges(), b.charges());
    w.add(a, b, c);
    return w;
}

void TensorFockVector::add(const Multipartition& a, const Multipartition& b, const LaurentPoly& c) {
    require(a.n() == n_ && b.n() == n_ && a.charges() == left_ && b.charges() == right_,
            ErrorKind::ModulusMismatch, "tensor factors do not match the ambient spaces");
    if (c.is_zero()) return;
    TensorKey k{a, b};
    auto& x = t_[k];
    x += c;
    if (x.is_zero()) t_.erase(k);
}

TensorFockVector& TensorFockVector::operator+=(const TensorFockVector& o) {
    require(o.n_ == n_ && o.left_ == left_ && o.right_ == right_, ErrorKind::ModulusMismatch,
            "tensor spaces differ");
    for (auto& [k, c] : o.t_) add(k.first, k.second, c);
    return *this;
}

TensorFockVector TensorFockVector::scaled(const LaurentPoly& c) const {
    TensorFockVector r(n_, left_, right_);
    for (auto& [k, x] : t_) r.add(k.first, k.second, x * c);
    return r;
}

std::string to_string(const TensorFockVector& v) {
    if (v.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : v.terms()) {
        if (!first) os << " + ";
        first = false;
        os << '(' << to_string(c) << ")*" << to_compact(k.first) << " (x) " << to_compact(k.second);
    }
    return os.str();
}

TensorFockVector tensor_f(const TensorFockVector& w, int r) {
    // f (x) 1 + q^h (x) f
    TensorFockVector out(w.n(), w.left(), w.right());
    for (auto& [k, c] : w.terms()) {
        const auto terms_1 = fock_f(FockVector::basis(k.first), r);
        for (auto& [a, x] : terms_1.terms()) out.add(a, k.second, c * x);
        LaurentPoly tw = LaurentPoly::monomial(hweight(k.first, r));
        const auto terms_2 = fock_f(FockVector::basis(k.second), r);
        for (auto& [b, x] : terms_2.terms())
            out.add(k.first, b, c * x * tw);
    }
    return out;
}

TensorFockVector tensor_e(const TensorFockVector& w, int r) {
    // e (x) q^{-h} + 1 (x) e
    TensorFockVector out(w.n(), w.left(), w.right());
    for (auto& [k, c] : w.terms()) {
        LaurentPoly tw = LaurentPoly::monomial(-hweight(k.second, r));
        const auto terms_3 = fock_e(FockVector::basis(k.first), r);
        for (auto& [a, x] : terms_3.terms()) out.add(a, k.second, c * x * tw);
        const auto terms_4 = fock_e(FockVector::basis(k.second), r);
        for (auto& [b, x] : terms_4.terms()) out.add(k.first, b, c * x);
    }
    return out;
}

TensorFockVector tensor_qh(const TensorFockVector& w, int r, int power) {
    TensorFockVector out(w.n(), w.left(), w.right());
    for (auto& [k, c] : w.terms())
        out.add(k.first, k.second,
                c * LaurentPoly::monomial(static_cast<long long>(power) *
                                          (hweight(k.first, r) + hweight(k.second, r))));
    return out;
}

TensorFockVector tensor_prime(const TensorFockVector& w) {
    TensorFockVector out(w.n(), primed_charges(w.right()), primed_charges(w.left()));
    for (auto& [k, c] : w.terms())
        out.add(conjugate_reverse(k.second), conjugate_reverse(k.first), c.bar());
    return out;
}

TensorFockVector tensor_f_sharp(const TensorFockVector& w, int i) { return tensor_f(w, mod(-i, w.n())); }
TensorFockVector tensor_e_sharp(const TensorFockVector& w, int i) { return tensor_e(w, mod(-i, w.n())); }

} // namespace afflie
