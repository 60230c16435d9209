#pragma once

#include <string>
#include <vector>

#include "afflie/crystal.hpp"
#include "afflie/paths.hpp"

namespace afflie {

// z^offset * sum_k coeffs[k] z^k, exact through z^{offset + coeffs.size() - 1}
class ShiftedSeries {
public:
    ShiftedSeries() = default;
    ShiftedSeries(Rational offset, std::vector<long long> coeffs)
        : offset_(std::move(offset)), c_(std::move(coeffs)) {}
    static ShiftedSeries one(long long order);

    const Rational& offset() const { return offset_; }
    const std::vector<long long>& coeffs() const { return c_; }
    long long order() const { return static_cast<long long>(c_.size()) - 1; }
    long long coeff(long long k) const { return k >= 0 && k < static_cast<long long>(c_.size()) ? c_[k] : 0; }
    // last exponent known exactly
    Rational precision() const { return offset_ + Rational(order()); }
    bool is_integral() const { return denominator(offset_) == 1; }

    // offset moved into [0,1) as far as leading zeros allow
    ShiftedSeries normalized() const;
    ShiftedSeries truncated(long long order) const;
    ShiftedSeries shifted(const Rational& by) const { return ShiftedSeries(offset_ + by, c_); }

    ShiftedSeries& operator+=(const ShiftedSeries& o);
    friend ShiftedSeries operator+(ShiftedSeries a, const ShiftedSeries& b) { return a += b; }
    friend ShiftedSeries operator*(const ShiftedSeries& a, const ShiftedSeries& b);
    friend ShiftedSeries operator*(long long k, ShiftedSeries a);

    // equal offsets after normalisation and equal coefficients on the common range
    bool same_as(const ShiftedSeries& o) const;
    bool operator==(const ShiftedSeries& o) const = default;

private:
    Rational offset_{0};
    std::vector<long long> c_;
};

std::string to_string(const ShiftedSeries& s);
std::string to_json(const ShiftedSeries& s);
ShiftedSeries parse_series_json(const std::string& text);

ShiftedSeries theta_series(const ClassicalWeight& mu, long long m, long long order);
// theta series exact through the absolute exponent bound
ShiftedSeries theta_series_upto(const ClassicalWeight& mu, long long m, const Rational& bound);
ShiftedSeries eta_power(long long e, long long order);

struct ThetaTerm {
    int sign;
    ClassicalWeight mu;
};

struct ThetaReport {
    long long L = 0;
    long long m = 0;
    Rational gamma;
    std::vector<ThetaTerm> terms;
    ShiftedSeries raw;    // eta^{-(n-1)} times the signed theta sum
    ShiftedSeries result; // raw divided by z^gamma
};

Rational gamma_shift(const AffineWeight& lambda1, const AffineWeight& lambda2, const AffineWeight& lambda);
ThetaReport theta_branching_report(const AffineWeight& lambda1, const AffineWeight& lambda2,
                                   const AffineWeight& lambda, long long order);
ShiftedSeries theta_branching(const AffineWeight& lambda1, const AffineWeight& lambda2,
                              const AffineWeight& lambda, long long order);

// Y(L', L'') up to the node count
std::vector<Multipartition> restricted_Y(const AffineWeight& lambda1, const AffineWeight& lambda2,
                                         long long max_degree);
// { lambda(p) : p in P(L',L'') } up to the node count
std::vector<Multipartition> restricted_Y_from_paths(const AffineWeight& lambda1, const AffineWeight& lambda2,
                                                    long long max_degree);

// node count of any lambda in Y(L'') of weight class L - L' with N^0 = k is n*k + base
long long class_size_base(const AffineWeight& lambda1, const AffineWeight& lambda2, const AffineWeight& lambda);

ShiftedSeries branching_series_paths(const AffineWeight& lambda1, const AffineWeight& lambda2,
                                     const AffineWeight& lambda, long long order);
ShiftedSeries branching_series_multipartitions(const AffineWeight& lambda1, const AffineWeight& lambda2,
                                               const AffineWeight& lambda, long long order);
// both enumerations; a disagreement raises a cross-check error
ShiftedSeries branching_series(const AffineWeight& lambda1, const AffineWeight& lambda2,
                               const AffineWeight& lambda, long long order);

// dominant level-L weights congruent to base modulo the span of the alpha'_r
std::vector<AffineWeight> congruent_dominant_weights(const AffineWeight& base, long long L);

AffineWeight profile_weight(int n, const std::vector<long long>& profile);

ShiftedSeries js_series_crystal(const std::vector<long long>& i, const std::vector<long long>& j, long long order);
ShiftedSeries js_series_branching(const std::vector<long long>& i, const std::vector<long long>& j, long long order);
ShiftedSeries js_generating_function(const std::vector<long long>& i, const std::vector<long long>& j,
                                     long long order);

std::vector<Multipartition> js_modules(const std::vector<long long>& i, const std::vector<long long>& j, int m);
std::vector<Multipartition> irreducible_restriction(const std::vector<long long>& i, int m);

} // namespace afflie
