#include "afflie/multipartition.hpp"

#include <algorithm>
#include <json.hpp>
#include <set>
#include <sstream>

namespace afflie {

Partition conjugate(const Partition& p) {
    Partition c;
    if (p.empty()) return c;
    c.assign(p.front(), 0);
    for (int part : p)
        for (int k = 0; k < part; ++k) ++c[k];
    return c;
}

bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i && p[i] > p[i - 1]) return false;
    }
    return true;
}

Multipartition::Multipartition(int n, std::vector<int> charges, std::vector<Partition> parts,
                               bool free_charges)
    : n_(n), charges_(std::move(charges)), parts_(std::move(parts)) {
    check_modulus(n);
    require(!charges_.empty(), ErrorKind::ContractViolation, "a multipartition needs at least one component");
    if (parts_.empty()) parts_.assign(charges_.size(), Partition{});
    require(parts_.size() == charges_.size(), ErrorKind::ContractViolation,
            "number of components differs from number of charges");
    for (auto& p : parts_)
        require(is_partition(p), ErrorKind::ContractViolation, "component is not a partition");
    if (!free_charges)
        require(standard_charges(), ErrorKind::ContractViolation,
                "charges must be sorted residues in [0,n)");
}

Multipartition Multipartition::empty(const AffineWeight& lambda) {
    return Multipartition(lambda.n(), charges_of(lambda));
}

std::vector<int> Multipartition::charge_residues() const {
    std::vector<int> r;
    for (int v : charges_) r.push_back(mod(v, n_));
    return r;
}

bool Multipartition::standard_charges() const {
    for (size_t j = 0; j < charges_.size(); ++j) {
        if (charges_[j] < 0 || charges_[j] >= n_) return false;
        if (j && charges_[j] < charges_[j - 1]) return false;
    }
    return true;
}

int Multipartition::row(int j, int i) const {
    const auto& p = parts_[j];
    return i >= 1 && i <= static_cast<int>(p.size()) ? p[i - 1] : 0;
}

int Multipartition::size() const {
    int s = 0;
    for (auto& p : parts_)
        for (int x : p) s += x;
    return s;
}

int Multipartition::largest_part() const {
    int m = 0;
    for (auto& p : parts_)
        if (!p.empty()) m = std::max(m, p.front());
    return m;
}

int Multipartition::colour(int j, int i, int k) const { return mod(diagonal(j, i, k), n_); }

Multipartition Multipartition::with_parts(std::vector<Partition> parts) const {
    return Multipartition(n_, charges_, std::move(parts), true);
}

bool Multipartition::operator<(const Multipartition& o) const {
    int a = size(), b = o.size();
    if (a != b) return a < b;
    if (parts_ != o.parts_) return parts_ < o.parts_;
    if (n_ != o.n_) return n_ < o.n_;
    return charges_ < o.charges_;
}

bool node_less(const Node& a, const Node& b) {
    if (a.diagonal != b.diagonal) return a.diagonal < b.diagonal;
    return a.component > b.component;
}

int node_colour(const Multipartition& mp, int j, int i, int k) {
    require(j >= 0 && j < mp.level(), ErrorKind::Precondition, "component index out of range");
    require(i >= 1 && k >= 1, ErrorKind::Precondition, "rows and columns start at 1");
    return mp.colour(j, i, k);
}

namespace {

void collect(const Multipartition& mp, int r, bool add, bool rem, std::vector<Node>& out) {
    for (int j = 0; j < mp.level(); ++j) {
        const auto& p = mp.part(j);
        const int len = static_cast<int>(p.size());
        for (int i = 1; i <= len + 1; ++i) {
            int cur = mp.row(j, i);
            if (add && (i == 1 || mp.row(j, i - 1) > cur)) {
                int c = mp.colour(j, i, cur + 1);
                if (r < 0 || c == r)
                    out.push_back({j, i, cur + 1, mp.diagonal(j, i, cur + 1), c, NodeKind::Addable});
            }
            if (rem && i <= len && cur > mp.row(j, i + 1)) {
                int c = mp.colour(j, i, cur);
                if (r < 0 || c == r)
                    out.push_back({j, i, cur, mp.diagonal(j, i, cur), c, NodeKind::Removable});
            }
        }
    }
    std::sort(out.begin(), out.end(), node_less);
}

} // namespace

std::vector<Node> addable_nodes(const Multipartition& mp, int r) {
    std::vector<Node> v;
    collect(mp, r, true, false, v);
    return v;
}

std::vector<Node> removable_nodes(const Multipartition& mp, int r) {
    std::vector<Node> v;
    collect(mp, r, false, true, v);
    return v;
}

std::vector<Node> r_signature(const Multipartition& mp, int r) {
    require(r >= 0 && r < mp.n(), ErrorKind::Precondition, "colour out of range");
    std::vector<Node> v;
    collect(mp, r, true, true, v);
    return v;
}

std::vector<Node> normal_reduce(const std::vector<Node>& sig) {
    for (size_t i = 1; i < sig.size(); ++i)
        require(!node_less(sig[i], sig[i - 1]), ErrorKind::ContractViolation,
                "signature is not sorted by node order");
    // A nodes survive unless an unmatched R precedes them
    std::vector<Node> kept;
    std::vector<size_t> open_r;
    for (const auto& x : sig) {
        if (x.kind == NodeKind::Removable) {
            open_r.push_back(kept.size());
            kept.push_back(x);
        } else if (!open_r.empty()) {
            kept.erase(kept.begin() + static_cast<long>(open_r.back()));
            open_r.pop_back();
        } else {
            kept.push_back(x);
        }
    }
    return kept;
}

std::optional<Node> good_addable(const Multipartition& mp, int r) {
    auto red = normal_reduce(r_signature(mp, r));
    std::optional<Node> g;
    for (auto& x : red)
        if (x.kind == NodeKind::Addable) g = x;
    return g;
}

std::optional<Node> good_removable(const Multipartition& mp, int r) {
    for (auto& x : normal_reduce(r_signature(mp, r)))
        if (x.kind == NodeKind::Removable) return x;
    return std::nullopt;
}

int eps(const Multipartition& mp, int r) {
    auto red = normal_reduce(r_signature(mp, r));
    return static_cast<int>(std::count_if(red.begin(), red.end(),
                                          [](const Node& x) { return x.kind == NodeKind::Removable; }));
}

int phi(const Multipartition& mp, int r) {
    auto red = normal_reduce(r_signature(mp, r));
    return static_cast<int>(std::count_if(red.begin(), red.end(),
                                          [](const Node& x) { return x.kind == NodeKind::Addable; }));
}

Multipartition add_node(const Multipartition& mp, const Node& x) {
    auto parts = mp.parts();
    auto& p = parts.at(x.component);
    require(x.col == mp.row(x.component, x.row) + 1 && (x.row == 1 || mp.row(x.component, x.row - 1) >= x.col),
            ErrorKind::Precondition, "node is not addable");
    if (x.row == static_cast<int>(p.size()) + 1) p.push_back(1);
    else ++p[x.row - 1];
    return mp.with_parts(std::move(parts));
}

Multipartition remove_node(const Multipartition& mp, const Node& x) {
    auto parts = mp.parts();
    auto& p = parts.at(x.component);
    require(x.col == mp.row(x.component, x.row) && mp.row(x.component, x.row + 1) < x.col,
            ErrorKind::Precondition, "node is not removable");
    if (--p[x.row - 1] == 0) p.pop_back();
    return mp.with_parts(std::move(parts));
}

std::optional<Multipartition> f_tilde(const Multipartition& mp, int r) {
    auto g = good_addable(mp, r);
    if (!g) return std::nullopt;
    return add_node(mp, *g);
}

std::optional<Multipartition> e_tilde(const Multipartition& mp, int r) {
    auto g = good_removable(mp, r);
    if (!g) return std::nullopt;
    return remove_node(mp, *g);
}

std::vector<long long> node_counts(const Multipartition& mp) {
    std::vector<long long> N(mp.n(), 0);
    for (int j = 0; j < mp.level(); ++j)
        for (int i = 1; i <= static_cast<int>(mp.part(j).size()); ++i)
            for (int k = 1; k <= mp.row(j, i); ++k) ++N[mp.colour(j, i, k)];
    return N;
}

AffineWeight highest_weight(const Multipartition& mp) {
    AffineWeight w(mp.n());
    for (int v : mp.charges()) w.at(v) += 1;
    return w;
}

AffineWeight weight(const Multipartition& mp) {
    AffineWeight w = highest_weight(mp);
    auto N = node_counts(mp);
    for (int r = 0; r < mp.n(); ++r) w -= N[r] * simple_root(mp.n(), r);
    return w;
}

long long degree(const Multipartition& mp) { return node_counts(mp)[0]; }

bool is_cylindrical(const Multipartition& mp) {
    require(mp.standard_charges(), ErrorKind::Precondition, "cylindricity needs sorted charges");
    const int l = mp.level();
    const auto& v = mp.charges();
    for (int j = 0; j < l; ++j) {
        int next = (j + 1) % l;
        int shift = j + 1 < l ? v[j + 1] - v[j] : mp.n() + v[0] - v[l - 1];
        int rows = static_cast<int>(mp.part(next).size());
        for (int i = 1; i + shift <= rows; ++i)
            if (mp.row(j, i) < mp.row(next, i + shift)) return false;
    }
    return true;
}

bool is_highest_lift(const Multipartition& mp) {
    if (!is_cylindrical(mp)) return false;
    // length -> set of right end colours
    std::vector<std::set<int>> ends(mp.largest_part() + 1);
    for (int j = 0; j < mp.level(); ++j)
        for (int i = 1; i <= static_cast<int>(mp.part(j).size()); ++i) {
            int k = mp.row(j, i);
            ends[k].insert(mp.colour(j, i, k));
        }
    for (size_t k = 1; k < ends.size(); ++k)
        if (static_cast<int>(ends[k].size()) == mp.n()) return false;
    return true;
}

bool is_highest_lift_tjk(const Multipartition& mp) {
    require(mp.standard_charges(), ErrorKind::Precondition, "criterion needs sorted charges");
    const int l = mp.level(), n = mp.n();
    const int K = mp.largest_part();
    std::vector<Partition> conj;
    for (auto& p : mp.parts()) conj.push_back(conjugate(p));
    // t(j,k) for j in [0,l], k in [0,K+1]
    auto t = [&](int j, int k) -> long long {
        int shift = 0;
        if (j == l) { j = 0; shift = n; }
        const auto& c = conj[j];
        int h = k < static_cast<int>(c.size()) ? c[k] : 0;
        return static_cast<long long>(mp.charges()[j]) - h + shift;
    };
    for (int k = 0; k <= K; ++k)
        for (int j = 0; j < l; ++j)
            if (t(j, k) > t(j + 1, k)) return false;
    for (int k = 0; k <= K; ++k) {
        bool found = false;
        for (int j = 0; j < l && !found; ++j) found = t(j + 1, k) > t(j, k + 1);
        if (!found) return false;
    }
    return true;
}

bool is_regular(const Partition& p, int n) {
    int run = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        run = (i && p[i] == p[i - 1]) ? run + 1 : 1;
        if (run >= n) return false;
    }
    return true;
}

Multipartition conjugate_reverse(const Multipartition& mp) {
    const int l = mp.level();
    std::vector<int> v(l);
    std::vector<Partition> parts(l);
    for (int j = 0; j < l; ++j) {
        v[j] = -mp.charges()[l - 1 - j];
        parts[j] = conjugate(mp.part(l - 1 - j));
    }
    return Multipartition(mp.n(), std::move(v), std::move(parts), true);
}

std::string parts_string(const Multipartition& mp) {
    std::string s = "(";
    for (int j = 0; j < mp.level(); ++j) {
        if (j) s += ',';
        s += '(';
        for (size_t i = 0; i < mp.part(j).size(); ++i) {
            if (i) s += ',';
            s += std::to_string(mp.part(j)[i]);
        }
        s += ')';
    }
    return s + ")";
}

std::string to_compact(const Multipartition& mp) {
    std::string s = "[";
    for (int j = 0; j < mp.level(); ++j) {
        if (j) s += ',';
        s += '[';
        for (size_t i = 0; i < mp.part(j).size(); ++i) {
            if (i) s += ',';
            s += std::to_string(mp.part(j)[i]);
        }
        s += ']';
    }
    s += "]@";
    for (int j = 0; j < mp.level(); ++j) {
        if (j) s += ',';
        s += std::to_string(mp.charges()[j]);
    }
    return s;
}

Multipartition parse_compact(int n, const std::string& text) {
    auto at = text.find('@');
    require(at != std::string::npos, ErrorKind::Parse, "multipartition needs '@charges': " + text);
    std::vector<Partition> parts;
    std::vector<int> charges;
    try {
        parts = nlohmann::json::parse(text.substr(0, at)).get<std::vector<Partition>>();
        std::stringstream ss(text.substr(at + 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) charges.push_back(std::stoi(tok));
    } catch (const std::exception& e) {
        fail(ErrorKind::Parse, "cannot parse multipartition '" + text + "': " + e.what());
    }
    for (auto& p : parts) require(is_partition(p), ErrorKind::Parse, "not a partition in " + text);
    require(parts.size() == charges.size() && !charges.empty(), ErrorKind::Parse,
            "component count differs from charge count in " + text);
    Multipartition mp(n, charges, parts, true);
    require(mp.standard_charges(), ErrorKind::Parse, "charges must be sorted residues in [0,n): " + text);
    return mp;
}

std::string to_json(const Multipartition& mp) {
    nlohmann::json j;
    j["n"] = mp.n();
    j["charges"] = mp.charges();
    j["parts"] = mp.parts();
    return j.dump();
}

Multipartition parse_json_multipartition(const std::string& text) {
    int n = 0;
    std::vector<int> charges;
    std::vector<Partition> parts;
    try {
        auto j = nlohmann::json::parse(text);
        n = j.at("n").get<int>();
        charges = j.at("charges").get<std::vector<int>>();
        parts = j.at("parts").get<std::vector<Partition>>();
    } catch (const std::exception& e) {
        fail(ErrorKind::Parse, std::string("cannot parse multipartition JSON: ") + e.what());
    }
    for (auto& p : parts) require(is_partition(p), ErrorKind::Parse, "not a partition in " + text);
    require(parts.size() == charges.size() && !charges.empty(), ErrorKind::Parse,
            "component count differs from charge count in " + text);
    Multipartition mp(n, charges, parts, true);
    require(mp.standard_charges(), ErrorKind::Parse, "charges must be sorted residues in [0,n): " + text);
    return mp;
}

Multipartition parse_multipartition(int n, const std::string& text) {
    auto p = text.find_first_not_of(" \t\n");
    if (p != std::string::npos && text[p] == '{') {
        Multipartition mp = parse_json_multipartition(text);
        check_same(n, mp.n());
        return mp;
    }
    return parse_compact(n, text);
}

std::string diagram(const Multipartition& mp) {
    std::ostringstream os;
    for (int j = 0; j < mp.level(); ++j) {
        os << "component " << j << " (charge " << mp.charges()[j] << ")\n";
        if (mp.part(j).empty()) os << "  -\n";
        for (int i = 1; i <= static_cast<int>(mp.part(j).size()); ++i) {
            os << ' ';
            for (int k = 1; k <= mp.row(j, i); ++k) os << ' ' << mp.colour(j, i, k);
            os << '\n';
        }
    }
    return os.str();
}

} // namespace afflie
