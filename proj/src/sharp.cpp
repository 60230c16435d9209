#include "afflie/sharp.hpp"

#include <algorithm>

namespace afflie {

namespace {

// (sharp p)_k = sum_i a_i(k) L_{k-i}
AffineWeight sharp_at(const AffineWeight& pk, int k) {
    AffineWeight w(pk.n());
    for (int i = 0; i < pk.n(); ++i) w.at(static_cast<long long>(k) - i) += pk[i];
    return w;
}

} // namespace

Path sharp_path(const Path& q, const AffineWeight& lambda1) {
    check_same(q.n(), lambda1.n());
    require(is_dominant(lambda1) && level(lambda1) > 0, ErrorKind::Precondition,
            "the restricting weight must be dominant of positive level");
    require(is_restricted(q, lambda1), ErrorKind::Precondition, "path is not restricted by " + to_string(lambda1));
    const int K = q.length(), l1 = static_cast<int>(level(lambda1));
    const AffineWeight s2 = sharp(q.lambda());
    auto pts = points(q);
    std::vector<AffineWeight> image;
    for (int k = 0; k <= K; ++k) {
        AffineWeight pk = pts[k] + lambda1;
        require(is_dominant(pk), ErrorKind::Precondition, "restricted path point is not dominant");
        image.push_back(sharp_at(pk, k) - s2);
    }
    std::vector<EtaStep> dev;
    for (int k = 0; k < K; ++k) {
        auto s = step_from_vector(image[k + 1] - image[k], l1);
        require(s.has_value(), ErrorKind::Inconsistency, "image step is not in A^+");
        dev.push_back(*s);
    }
    Path out(sharp(lambda1), std::move(dev));
    require(point(out, 0) == image[0], ErrorKind::Inconsistency, "image path does not reach its ground state");
    return out;
}

Multipartition sharp_multipartition(const Multipartition& mp, const AffineWeight& lambda1) {
    check_same(mp.n(), lambda1.n());
    require(is_highest_lift(mp), ErrorKind::Precondition, "input must be a highest-lift multipartition");
    for (int r = 0; r < mp.n(); ++r)
        require(eps(mp, r) <= lambda1[r], ErrorKind::Precondition,
                "input is not restricted by " + to_string(lambda1));
    return highest_lift(sharp_path(pi(mp), lambda1));
}

std::map<int, std::vector<int>> left_end_colours(const Multipartition& mp) {
    std::map<int, std::vector<int>> out;
    for (int j = 0; j < mp.level(); ++j)
        for (int i = 1; i <= static_cast<int>(mp.part(j).size()); ++i)
            out[mp.row(j, i)].push_back(mp.colour(j, i, 1));
    for (auto& [k, v] : out) std::sort(v.begin(), v.end());
    return out;
}

std::map<int, std::vector<int>> right_end_colours(const Multipartition& mp) {
    std::map<int, std::vector<int>> out;
    for (int j = 0; j < mp.level(); ++j)
        for (int i = 1; i <= static_cast<int>(mp.part(j).size()); ++i)
            out[mp.row(j, i)].push_back(mp.colour(j, i, mp.row(j, i)));
    for (auto& [k, v] : out) std::sort(v.begin(), v.end());
    return out;
}

Multipartition collect_rows(const Multipartition& mp, int u) {
    Partition rows;
    for (auto& p : mp.parts()) rows.insert(rows.end(), p.begin(), p.end());
    std::sort(rows.rbegin(), rows.rend());
    return Multipartition(mp.n(), {mod(-u, mp.n())}, {rows});
}

bool js_membership_fundamental(const Multipartition& mp, int u) {
    require(is_highest_lift(mp), ErrorKind::Precondition, "input must be a highest-lift multipartition");
    const int n = mp.n();
    Multipartition under = collect_rows(mp, u);
    if (!is_regular(under.part(0), n)) return false;
    auto left = left_end_colours(under);
    auto right = right_end_colours(mp);
    for (auto& [k, cols] : right) {
        std::vector<int> neg;
        for (int c : cols) neg.push_back(mod(-c, n));
        std::sort(neg.begin(), neg.end());
        if (left[k] != neg) return false;
    }
    return true;
}

} // namespace afflie
