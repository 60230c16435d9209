#pragma once

#include <optional>
#include <string>
#include <vector>

#include "afflie/weights.hpp"

namespace afflie {

using Partition = std::vector<int>;

Partition conjugate(const Partition& p);
bool is_partition(const Partition& p);

// An l-tuple of partitions whose j-th main diagonal has colour v_j mod n.
// Charges are normally sorted residues in [0,n); "free" charges are arbitrary
// integers with meaningful component order (conjugate_reverse produces them).
class Multipartition {
public:
    Multipartition(int n, std::vector<int> charges, std::vector<Partition> parts = {},
                   bool free_charges = false);

    static Multipartition empty(const AffineWeight& lambda);

    int n() const { return n_; }
    int level() const { return static_cast<int>(charges_.size()); }
    const std::vector<int>& charges() const { return charges_; }
    std::vector<int> charge_residues() const;
    const std::vector<Partition>& parts() const { return parts_; }
    const Partition& part(int j) const { return parts_.at(j); }
    // row i, 1-based; zero past the end
    int row(int j, int i) const;
    int size() const;
    int largest_part() const;
    bool standard_charges() const;

    // colour of the cell in row i, column k (both 1-based) of component j
    int colour(int j, int i, int k) const;
    long long diagonal(int j, int i, int k) const { return static_cast<long long>(k) - i + charges_[j]; }

    Multipartition with_parts(std::vector<Partition> parts) const;

    bool operator==(const Multipartition& o) const = default;
    // canonical order: size, then parts, then charges
    bool operator<(const Multipartition& o) const;

private:
    int n_;
    std::vector<int> charges_;
    std::vector<Partition> parts_;
};

enum class NodeKind { Addable, Removable };

struct Node {
    int component;
    int row;
    int col;
    long long diagonal;
    int colour;
    NodeKind kind;
    bool operator==(const Node& o) const = default;
};

// (d,j) < (d',j') iff d < d', or d = d' and j > j'
bool node_less(const Node& a, const Node& b);

int node_colour(const Multipartition& mp, int j, int i, int k);
std::vector<Node> addable_nodes(const Multipartition& mp, int r);
std::vector<Node> removable_nodes(const Multipartition& mp, int r);
std::vector<Node> r_signature(const Multipartition& mp, int r);
std::vector<Node> normal_reduce(const std::vector<Node>& sig);
std::optional<Node> good_addable(const Multipartition& mp, int r);
std::optional<Node> good_removable(const Multipartition& mp, int r);
int eps(const Multipartition& mp, int r);
int phi(const Multipartition& mp, int r);

Multipartition add_node(const Multipartition& mp, const Node& x);
Multipartition remove_node(const Multipartition& mp, const Node& x);
std::optional<Multipartition> f_tilde(const Multipartition& mp, int r);
std::optional<Multipartition> e_tilde(const Multipartition& mp, int r);

// N^r for r = 0..n-1
std::vector<long long> node_counts(const Multipartition& mp);
AffineWeight highest_weight(const Multipartition& mp);
AffineWeight weight(const Multipartition& mp);
long long degree(const Multipartition& mp);

bool is_cylindrical(const Multipartition& mp);
bool is_highest_lift(const Multipartition& mp);
bool is_highest_lift_tjk(const Multipartition& mp);
bool is_regular(const Partition& p, int n);

Multipartition conjugate_reverse(const Multipartition& mp);

// "((3,2),(1,1,1),(5,4,1))"
std::string parts_string(const Multipartition& mp);
// "[[3,2],[1,1,1],[5,4,1]]@1,1,2"
std::string to_compact(const Multipartition& mp);
Multipartition parse_compact(int n, const std::string& text);
// {"n":3,"charges":[1,1,2],"parts":[[3,2],[1,1,1],[5,4,1]]}
std::string to_json(const Multipartition& mp);
Multipartition parse_json_multipartition(const std::string& text);
// JSON object or compact form
Multipartition parse_multipartition(int n, const std::string& text);
// colour grid, one block per component
std::string diagram(const Multipartition& mp);

} // namespace afflie
