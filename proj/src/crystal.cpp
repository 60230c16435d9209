#include "afflie/crystal.hpp"

#include <algorithm>
#include <deque>
#include <json.hpp>
#include <sstream>

namespace afflie {

int CrystalGraph::find(const Multipartition& mp) const {
    auto it = index_.find(mp);
    return it == index_.end() ? -1 : it->second;
}

std::vector<long long> CrystalGraph::degree_counts() const {
    std::vector<long long> c;
    for (auto& v : vertices) {
        long long d = cutoff_kind == Cutoff::Size ? v.size() : degree(v);
        if (static_cast<long long>(c.size()) <= d) c.resize(d + 1, 0);
        ++c[d];
    }
    return c;
}

namespace {

Multipartition factor(const Multipartition& mp, int j) {
    return Multipartition(mp.n(), {mp.charges()[j]}, {mp.part(j)});
}

struct Prefix {
    std::vector<int> e, f; // e[m], f[m]: eps and phi of b_0 (x) ... (x) b_{m-1}
};

Prefix prefixes(const Multipartition& mp, int r, std::vector<int>& fe, std::vector<int>& ff) {
    const int l = mp.level();
    fe.resize(l);
    ff.resize(l);
    for (int j = 0; j < l; ++j) {
        auto b = factor(mp, j);
        fe[j] = eps(b, r);
        ff[j] = phi(b, r);
    }
    Prefix p;
    p.e.assign(l + 1, 0);
    p.f.assign(l + 1, 0);
    p.e[1] = fe[0];
    p.f[1] = ff[0];
    for (int m = 1; m < l; ++m) {
        int wt_u = p.f[m] - p.e[m], wt_v = ff[m] - fe[m];
        p.e[m + 1] = std::max(p.e[m], fe[m] - wt_u);
        p.f[m + 1] = std::max(ff[m], p.f[m] + wt_v);
    }
    return p;
}

std::optional<Multipartition> act_on_factor(const Multipartition& mp, int j, int r, bool raise) {
    auto b = factor(mp, j);
    auto c = raise ? e_tilde(b, r) : f_tilde(b, r);
    if (!c) return std::nullopt;
    auto parts = mp.parts();
    parts[j] = c->part(0);
    return mp.with_parts(std::move(parts));
}

} // namespace

std::optional<Multipartition> m_f_tilde(const Multipartition& mp, int r) {
    std::vector<int> fe, ff;
    auto p = prefixes(mp, r, fe, ff);
    int m = mp.level() - 1;
    while (m > 0 && p.f[m] > fe[m]) --m;
    return act_on_factor(mp, m, r, false);
}

std::optional<Multipartition> m_e_tilde(const Multipartition& mp, int r) {
    std::vector<int> fe, ff;
    auto p = prefixes(mp, r, fe, ff);
    int m = mp.level() - 1;
    while (m > 0 && p.f[m] >= fe[m]) --m;
    return act_on_factor(mp, m, r, true);
}

int m_eps(const Multipartition& mp, int r) {
    std::vector<int> fe, ff;
    return prefixes(mp, r, fe, ff).e[mp.level()];
}

int m_phi(const Multipartition& mp, int r) {
    std::vector<int> fe, ff;
    return prefixes(mp, r, fe, ff).f[mp.level()];
}

CrystalGraph build_crystal(const AffineWeight& lambda, long long cutoff, Labels labels, Cutoff kind) {
    require(is_dominant(lambda) && level(lambda) > 0, ErrorKind::Precondition,
            "crystal needs a dominant weight of positive level");
    require(cutoff >= 0, ErrorKind::Precondition, "cutoff must be nonnegative");
    auto inside = [&](const Multipartition& mp) {
        return (kind == Cutoff::Size ? mp.size() : degree(mp)) <= cutoff;
    };
    auto apply = [&](const Multipartition& mp, int r) {
        return labels == Labels::Y ? f_tilde(mp, r) : m_f_tilde(mp, r);
    };
    const int n = lambda.n();
    std::map<Multipartition, std::vector<int>> found;
    Multipartition root = Multipartition::empty(lambda);
    found[root] = {};
    std::deque<Multipartition> queue{root};
    std::vector<std::tuple<Multipartition, int, Multipartition>> raw;
    while (!queue.empty()) {
        Multipartition x = queue.front();
        queue.pop_front();
        for (int r = 0; r < n; ++r) {
            auto y = apply(x, r);
            if (!y || !inside(*y)) continue;
            raw.emplace_back(x, r, *y);
            if (!found.count(*y)) {
                auto w = found[x];
                w.push_back(r);
                found[*y] = w;
                queue.push_back(*y);
            }
        }
    }
    CrystalGraph g{lambda};
    g.labels = labels;
    g.cutoff = cutoff;
    g.cutoff_kind = kind;
    for (auto& [mp, w] : found) {
        g.index_[mp] = static_cast<int>(g.vertices.size());
        g.vertices.push_back(mp);
        g.words.push_back(w);
    }
    for (auto& [x, r, y] : raw) g.edges.push_back({g.index_[x], r, g.index_[y]});
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

CrystalGraph build_Y_crystal(const AffineWeight& lambda, long long max_degree) {
    return build_crystal(lambda, max_degree, Labels::Y);
}

CrystalGraph build_M_crystal(const AffineWeight& lambda, long long max_degree) {
    return build_crystal(lambda, max_degree, Labels::M);
}

Character character(const AffineWeight& lambda, long long max_degree) {
    Character ch;
    for (auto& v : build_Y_crystal(lambda, max_degree).vertices) ++ch[weight(v)];
    return ch;
}

Character character_from_paths(const AffineWeight& lambda, long long max_degree) {
    Character ch;
    enumerate_paths(lambda, max_degree, [&](const Path& p) {
        AffineWeight w = path_weight(p);
        auto d = principal_degree(lambda, w);
        require(d.has_value(), ErrorKind::Inconsistency, "path weight outside the root lattice coset");
        if (*d <= max_degree) ++ch[w];
    });
    return ch;
}

Multipartition relabel(const CrystalGraph& y, const Multipartition& mp) {
    require(y.labels == Labels::Y, ErrorKind::Precondition, "relabel starts from a Y-labelled crystal");
    int i = y.find(mp);
    require(i >= 0, ErrorKind::Precondition, "label " + parts_string(mp) + " is outside the built crystal");
    Multipartition cur = Multipartition::empty(y.lambda);
    for (int r : y.words[i]) {
        auto nxt = m_f_tilde(cur, r);
        require(nxt.has_value(), ErrorKind::Inconsistency, "arrow word cannot be replayed in the tensor crystal");
        cur = *nxt;
    }
    return cur;
}

Multipartition relabel(const Multipartition& mp, const AffineWeight& lambda) {
    return relabel(build_Y_crystal(lambda, mp.size()), mp);
}

Multipartition conjugate_switch(const Multipartition& mp) {
    const int l = mp.level();
    std::vector<int> v(l);
    std::vector<Partition> parts(l);
    for (int j = 0; j < l; ++j) {
        v[j] = mp.charges()[l - 1 - j];
        parts[j] = conjugate(mp.part(l - 1 - j));
    }
    return Multipartition(mp.n(), v, parts, true);
}

std::string export_dot(const CrystalGraph& g) {
    std::ostringstream os;
    os << "digraph crystal {\n";
    os << "  // n=" << g.lambda.n() << " weight=" << to_string(g.lambda)
       << " labels=" << (g.labels == Labels::Y ? "Y" : "M") << " cutoff=" << g.cutoff << "\n";
    for (size_t i = 0; i < g.vertices.size(); ++i)
        os << "  v" << i << " [label=\"" << parts_string(g.vertices[i]) << "\"];\n";
    for (auto& e : g.edges) os << "  v" << e.src << " -> v" << e.dst << " [label=\"" << e.colour << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string export_json(const CrystalGraph& g) {
    nlohmann::json j;
    j["n"] = g.lambda.n();
    j["weight"] = to_string(g.lambda);
    j["labels"] = g.labels == Labels::Y ? "Y" : "M";
    j["cutoff"] = g.cutoff;
    j["vertices"] = nlohmann::json::array();
    for (auto& v : g.vertices) j["vertices"].push_back(v.parts());
    j["edges"] = nlohmann::json::array();
    for (auto& e : g.edges) j["edges"].push_back({e.src, e.colour, e.dst});
    return j.dump();
}

} // namespace afflie
