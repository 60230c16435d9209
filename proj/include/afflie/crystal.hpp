#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "afflie/multipartition.hpp"
#include "afflie/paths.hpp"

namespace afflie {

enum class Labels { Y, M };
// which quantity the cutoff bounds: node count or number of 0-nodes
enum class Cutoff { Size, ZeroNodes };

struct CrystalEdge {
    int src;
    int colour;
    int dst;
    bool operator==(const CrystalEdge& o) const = default;
    auto operator<=>(const CrystalEdge& o) const = default;
};

struct CrystalGraph {
    AffineWeight lambda;
    Labels labels = Labels::Y;
    long long cutoff = 0;
    Cutoff cutoff_kind = Cutoff::Size;
    std::vector<Multipartition> vertices; // canonical order, root first
    std::vector<CrystalEdge> edges;       // sorted
    // colours of the first-discovered arrow word reaching each vertex
    std::vector<std::vector<int>> words;

    explicit CrystalGraph(AffineWeight l) : lambda(std::move(l)) {}

    int find(const Multipartition& mp) const;
    std::vector<long long> degree_counts() const;

private:
    std::map<Multipartition, int> index_;
    friend CrystalGraph build_crystal(const AffineWeight&, long long, Labels, Cutoff);
};

// tensor product of level-one crystals, nested ((B0 (x) B1) (x) B2)...
std::optional<Multipartition> m_f_tilde(const Multipartition& mp, int r);
std::optional<Multipartition> m_e_tilde(const Multipartition& mp, int r);
int m_eps(const Multipartition& mp, int r);
int m_phi(const Multipartition& mp, int r);

CrystalGraph build_crystal(const AffineWeight& lambda, long long cutoff, Labels labels,
                           Cutoff kind = Cutoff::Size);
CrystalGraph build_Y_crystal(const AffineWeight& lambda, long long max_degree);
CrystalGraph build_M_crystal(const AffineWeight& lambda, long long max_degree);

using Character = std::map<AffineWeight, long long>;
Character character(const AffineWeight& lambda, long long max_degree);
Character character_from_paths(const AffineWeight& lambda, long long max_degree);

// replays the arrow word of a Y-vertex from the root of the M-crystal
Multipartition relabel(const CrystalGraph& y, const Multipartition& mp);
Multipartition relabel(const Multipartition& mp, const AffineWeight& lambda);

// conjugate each component and reverse their order (labels only)
Multipartition conjugate_switch(const Multipartition& mp);

std::string export_dot(const CrystalGraph& g);
std::string export_json(const CrystalGraph& g);

} // namespace afflie
