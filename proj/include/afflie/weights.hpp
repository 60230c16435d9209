#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "afflie/error.hpp"

namespace afflie {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

// Integral weight sum a_i L_i + c d of affine sl_n.
class AffineWeight {
public:
    explicit AffineWeight(int n);
    AffineWeight(int n, std::vector<long long> coeffs, long long delta = 0);

    int n() const { return n_; }
    // coefficient of L_i, index reduced mod n
    long long operator[](long long i) const { return c_[mod(i, n_)]; }
    long long& at(long long i) { return c_[mod(i, n_)]; }
    const std::vector<long long>& coeffs() const { return c_; }
    long long delta() const { return d_; }
    void set_delta(long long d) { d_ = d; }

    AffineWeight& operator+=(const AffineWeight& o);
    AffineWeight& operator-=(const AffineWeight& o);
    friend AffineWeight operator+(AffineWeight a, const AffineWeight& b) { return a += b; }
    friend AffineWeight operator-(AffineWeight a, const AffineWeight& b) { return a -= b; }
    friend AffineWeight operator*(long long k, AffineWeight a);
    AffineWeight operator-() const { return (-1) * *this; }

    bool operator==(const AffineWeight& o) const = default;
    auto operator<=>(const AffineWeight& o) const = default;

private:
    int n_;
    std::vector<long long> c_;
    long long d_;
};

void check_modulus(int n);
void check_same(int a, int b);

AffineWeight zero_weight(int n);
AffineWeight fundamental(int n, long long i);
AffineWeight null_root(int n);
AffineWeight simple_root(int n, long long i);
AffineWeight epsilon(int n, long long i);
AffineWeight alpha_prime(int n, long long i);
AffineWeight rho(int n);

long long level(const AffineWeight& w);
bool is_dominant(const AffineWeight& w);
AffineWeight sigma(const AffineWeight& w);
AffineWeight sharp(const AffineWeight& w);
// drops the null root part
AffineWeight finite_part(const AffineWeight& w);

// Weight with charges v_0 <= ... <= v_{l-1}: sum of L_{v_j}.
AffineWeight weight_from_charges(int n, const std::vector<int>& charges);
// sorted charges of a dominant weight
std::vector<int> charges_of(const AffineWeight& w);

// Coordinates c_r with sum_r c_r alpha'_r = w (classical part only, level 0),
// normalised so that c_0 = 0. Empty result if no integral solution exists.
bool solve_alpha_prime(const AffineWeight& w, std::vector<long long>& out);
// sum_r N^r where lambda - w = sum_r N^r alpha_r; nullopt off the root lattice
std::optional<long long> principal_degree(const AffineWeight& lambda, const AffineWeight& w);

// Weights in centred epsilon-bar coordinates.
class ClassicalWeight {
public:
    explicit ClassicalWeight(int n);
    ClassicalWeight(int n, std::vector<Rational> coords);

    int n() const { return static_cast<int>(x_.size()); }
    const Rational& operator[](int i) const { return x_[i]; }
    const std::vector<Rational>& coords() const { return x_; }

    ClassicalWeight& operator+=(const ClassicalWeight& o);
    ClassicalWeight& operator-=(const ClassicalWeight& o);
    friend ClassicalWeight operator+(ClassicalWeight a, const ClassicalWeight& b) { return a += b; }
    friend ClassicalWeight operator-(ClassicalWeight a, const ClassicalWeight& b) { return a -= b; }
    friend ClassicalWeight operator*(const Rational& k, ClassicalWeight a);
    ClassicalWeight operator-() const { return Rational(-1) * *this; }

    ClassicalWeight permuted(const std::vector<int>& perm) const;
    bool operator==(const ClassicalWeight& o) const { return x_ == o.x_; }

private:
    std::vector<Rational> x_;
};

ClassicalWeight classical_projection(const AffineWeight& w);
Rational bilinear(const AffineWeight& a, const AffineWeight& b);
Rational bilinear(const ClassicalWeight& a, const ClassicalWeight& b);
inline Rational norm2(const ClassicalWeight& a) { return bilinear(a, a); }
inline Rational norm2(const AffineWeight& a) { return bilinear(a, a); }

// All (sgn(pi), pi.w) for pi in S_n, in lexicographic order of pi.
std::vector<std::pair<int, ClassicalWeight>> weyl_orbit_terms(const ClassicalWeight& w,
                                                              int max_n = 8);

std::string to_string(const AffineWeight& w);
std::string to_string(const ClassicalWeight& w);
AffineWeight parse_weight(int n, const std::string& text);

} // namespace afflie
