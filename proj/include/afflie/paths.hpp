#pragma once

#include <functional>
#include <optional>
#include <tuple>
#include <string>
#include <vector>

#include "afflie/multipartition.hpp"

namespace afflie {

// eta = sum_j eps_{gamma_j}, kept as the sorted list of the gamma_j mod n
using EtaStep = std::vector<int>;

// A Lambda-path: finitely many steps, then the ground state.
class Path {
public:
    // strips trailing ground steps
    Path(const AffineWeight& lambda, std::vector<EtaStep> deviation = {});

    int n() const { return n_; }
    int level() const { return static_cast<int>(charges_.size()); }
    const std::vector<int>& charges() const { return charges_; }
    AffineWeight lambda() const { return weight_from_charges(n_, charges_); }
    const std::vector<EtaStep>& deviation() const { return dev_; }
    int length() const { return static_cast<int>(dev_.size()); }
    EtaStep step(int k) const;

    bool operator==(const Path& o) const = default;
    bool operator<(const Path& o) const {
        return std::tie(n_, charges_, dev_) < std::tie(o.n_, o.charges_, o.dev_);
    }

private:
    int n_;
    std::vector<int> charges_;
    std::vector<EtaStep> dev_;
};

EtaStep ground_step(const AffineWeight& lambda, int k);
Path ground_state(const AffineWeight& lambda);

// sum_j eps_{gamma_j} and sum_j L_{gamma_j}
AffineWeight step_vector(int n, const EtaStep& s);
AffineWeight step_hat(int n, const EtaStep& s);
// inverse of step_vector for a level-zero vector; nullopt if not in A_l^+
std::optional<EtaStep> step_from_vector(const AffineWeight& v, int l);

AffineWeight point(const Path& p, int k);
// p_0, ..., p_{length}
std::vector<AffineWeight> points(const Path& p);

int local_energy(const EtaStep& a, const EtaStep& b, int max_l = 8);
long long energy(const Path& p);
AffineWeight path_weight(const Path& p);

Path pi(const Multipartition& mp);

// |p_k - hat eta_k|^-_r for k = 0..length
std::vector<long long> eps_path_profile(const Path& p, int r);
long long eps_path(const Path& p, int r);
// q is a Lambda''-path; tests dominance of q_k + Lambda' - hat eta_k
bool is_restricted(const Path& q, const AffineWeight& lambda1);
bool is_restricted_eps(const Path& q, const AffineWeight& lambda1);

// right end colours of the rows of length k of lambda(p), as a sorted multiset
std::vector<int> end_colour_profile(const Path& p, int k);
Multipartition highest_lift(const Path& p);

// Visits every Lambda-path whose highest lift has at most max_degree nodes,
// optionally only those restricted by lambda1.
void enumerate_paths(const AffineWeight& lambda, long long max_degree,
                     const std::function<void(const Path&)>& visit,
                     const std::optional<AffineWeight>& lambda1 = std::nullopt);

// "01,11,00|2*L0"
std::string to_string(const Path& p);
Path parse_path(int n, const std::string& text);

} // namespace afflie
