#pragma once

#include <map>
#include <string>
#include <utility>

#include "afflie/multipartition.hpp"

namespace afflie {

// Laurent polynomial in q with integer coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long long c) { if (c) t_[0] = c; }
    static LaurentPoly monomial(long long e, long long c = 1);

    const std::map<long long, long long>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    long long coeff(long long e) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    bool operator==(const LaurentPoly& o) const = default;

    // q -> q^{-1}
    LaurentPoly bar() const;
    long long at_one() const;

private:
    std::map<long long, long long> t_;
};

std::string to_string(const LaurentPoly& p);

// Finite combination of basis vectors v_lambda of one Fock space.
class FockVector {
public:
    FockVector(int n, std::vector<int> charges);
    static FockVector basis(const Multipartition& mp, const LaurentPoly& c = 1);

    int n() const { return n_; }
    const std::vector<int>& charges() const { return charges_; }
    const std::map<Multipartition, LaurentPoly>& terms() const { return t_; }
    LaurentPoly coeff(const Multipartition& mp) const;
    bool is_zero() const { return t_.empty(); }

    void add(const Multipartition& mp, const LaurentPoly& c);
    FockVector& operator+=(const FockVector& o);
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    FockVector scaled(const LaurentPoly& c) const;
    bool operator==(const FockVector& o) const = default;

private:
    int n_;
    std::vector<int> charges_;
    std::map<Multipartition, LaurentPoly> t_;
};

std::string to_string(const FockVector& v);

// N_r(lambda) = #addable - #removable r-nodes
int hweight(const Multipartition& mp, int r);

FockVector fock_f(const FockVector& v, int r);
FockVector fock_e(const FockVector& v, int r);
// multiplies v_lambda by q^{power * N_r(lambda)}
FockVector fock_qh(const FockVector& v, int r, int power = 1);
FockVector fock_qd(const FockVector& v);
// q = 1 specialisation
FockVector classical_f(const FockVector& v, int r);
FockVector classical_e(const FockVector& v, int r);
LaurentPoly scalar(const FockVector& u, const FockVector& v);

// semilinear v_lambda -> v_{lambda'} with q -> q^{-1}
FockVector prime_map(const FockVector& v);
FockVector fock_f_sharp(const FockVector& v, int i);
FockVector fock_e_sharp(const FockVector& v, int i);

using TensorKey = std::pair<Multipartition, Multipartition>;

class TensorFockVector {
public:
    TensorFockVector(int n, std::vector<int> left, std::vector<int> right);
    static TensorFockVector basis(const Multipartition& a, const Multipartition& b,
                                  const LaurentPoly& c = 1);

    int n() const { return n_; }
    const std::vector<int>& left() const { return left_; }
    const std::vector<int>& right() const { return right_; }
    const std::map<TensorKey, LaurentPoly>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add(const Multipartition& a, const Multipartition& b, const LaurentPoly& c);
    TensorFockVector& operator+=(const TensorFockVector& o);
    TensorFockVector scaled(const LaurentPoly& c) const;
    bool operator==(const TensorFockVector& o) const = default;

private:
    int n_;
    std::vector<int> left_, right_;
    std::map<TensorKey, LaurentPoly> t_;
};

std::string to_string(const TensorFockVector& v);

TensorFockVector tensor_f(const TensorFockVector& w, int r);
TensorFockVector tensor_e(const TensorFockVector& w, int r);
TensorFockVector tensor_qh(const TensorFockVector& w, int r, int power = 1);
TensorFockVector tensor_prime(const TensorFockVector& w);
TensorFockVector tensor_f_sharp(const TensorFockVector& w, int i);
TensorFockVector tensor_e_sharp(const TensorFockVector& w, int i);

} // namespace afflie
