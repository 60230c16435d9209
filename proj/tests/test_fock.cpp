#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "afflie/fock.hpp"
#include "oracle.hpp"

using namespace afflie;

namespace {

using LP = LaurentPoly;
LP q(long long e) { return LP::monomial(e); }

Multipartition triple(std::vector<Partition> parts = {{3, 2}, {1, 1, 1}, {5, 4, 1}}) {
    return Multipartition(3, {1, 1, 2}, parts);
}

LP random_poly(std::mt19937& g) {
    std::uniform_int_distribution<int> c(-3, 3), e(-3, 3), k(1, 2);
    LP p;
    for (int t = k(g); t > 0; --t) p += LP::monomial(e(g), c(g));
    if (p.is_zero()) p = q(e(g));
    return p;
}

FockVector random_vector(const std::vector<Multipartition>& pool, std::mt19937& g, int terms = 3) {
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    FockVector v(pool[0].n(), pool[0].charges());
    for (int t = 0; t < terms; ++t) v.add(pool[pick(g)], random_poly(g));
    return v;
}

// ambients for the random property checks
std::vector<std::vector<Multipartition>> pools(int max_size) {
    std::vector<std::vector<Multipartition>> out;
    for (int n = 2; n <= 3; ++n)
        for (int l = 1; l <= 2; ++l)
            for (auto& ch : oracle::charge_vectors(n, l)) out.push_back(oracle::multipartitions(n, ch, max_size));
    return out;
}

} // namespace

TEST_CASE("Laurent polynomials") {
    LP p = LP::monomial(-3) + LP::monomial(1, 2);
    CHECK(to_string(p) == "q^-3 + 2*q");
    CHECK(to_string(LP(0)) == "0");
    CHECK(to_string(LP(1) - q(2)) == "1 - q^2");
    CHECK(p.bar() == LP::monomial(3) + LP::monomial(-1, 2));
    CHECK(p.at_one() == 3);
    CHECK((p * p.bar()).coeff(0) == 5);
    CHECK((p - p).is_zero());
}

TEST_CASE("the q-deformed action on the level three example") {
    FockVector v = FockVector::basis(triple());
    CHECK(fock_f(v, 0).is_zero());

    FockVector f1 = fock_f(v, 1);
    CHECK(f1.terms().size() == 4);
    CHECK(f1.coeff(triple({{4, 2}, {1, 1, 1}, {5, 4, 1}})) == q(1));
    CHECK(f1.coeff(triple({{3, 2}, {1, 1, 1, 1}, {5, 4, 1}})) == q(1));
    CHECK(f1.coeff(triple({{3, 2}, {1, 1, 1}, {6, 4, 1}})) == q(0));
    CHECK(f1.coeff(triple({{3, 2}, {1, 1, 1}, {5, 4, 2}})) == q(0));

    FockVector f2 = fock_f(v, 2);
    CHECK(f2.terms().size() == 5);
    CHECK(f2.coeff(triple({{3, 3}, {1, 1, 1}, {5, 4, 1}})) == q(1));
    CHECK(f2.coeff(triple({{3, 2, 1}, {1, 1, 1}, {5, 4, 1}})) == q(3));
    CHECK(f2.coeff(triple({{3, 2}, {2, 1, 1}, {5, 4, 1}})) == q(2));
    CHECK(f2.coeff(triple({{3, 2}, {1, 1, 1}, {5, 5, 1}})) == q(0));
    CHECK(f2.coeff(triple({{3, 2}, {1, 1, 1}, {5, 4, 1, 1}})) == q(3));

    // at q = 1 every coefficient is 1
    for (auto* w : {&f1, &f2})
        for (auto& [mp, c] : w->terms()) CHECK(c.at_one() == 1);
    CHECK(scalar(f1, f1) == LP(2) + LP::monomial(2, 2));
}

TEST_CASE("q^h and q^d") {
    FockVector v = FockVector::basis(triple());
    CHECK(fock_qd(v) == FockVector::basis(triple(), q(-7)));
    FockVector vac = FockVector::basis(Multipartition(2, {0, 0}));
    CHECK(fock_qh(vac, 0) == vac.scaled(q(2)));
    CHECK(fock_qh(vac, 1) == vac);
    for (int n = 2; n <= 3; ++n)
        for (auto& ch : oracle::charge_vectors(n, 2))
            for (auto& mp : oracle::multipartitions(n, ch, 4))
                for (int r = 0; r < n; ++r) {
                    int bal = 0;
                    for (auto& c : oracle::signature(mp, r)) bal += c.removable ? -1 : 1;
                    CHECK(hweight(mp, r) == bal);
                    CHECK(hweight(mp, r) == weight(mp)[r]);
                }
}

TEST_CASE("level one and the classical action") {
    for (int n = 2; n <= 4; ++n) {
        Multipartition empty(n, {0});
        FockVector vac = FockVector::basis(empty);
        CHECK(fock_e(fock_f(vac, 0), 0) == vac);
        for (int r = 1; r < n; ++r) CHECK(classical_f(vac, r).is_zero());
        CHECK(classical_f(vac, 0) == FockVector::basis(Multipartition(n, {0}, {{1}})));
    }
    FockVector two = FockVector::basis(Multipartition(2, {0, 0}));
    CHECK_THROWS_AS(classical_f(two, 0), Error);
}

TEST_CASE("q = 1 action is the sum over components of level one actions") {
    for (int n = 2; n <= 3; ++n)
        for (int l = 1; l <= 3; ++l)
            for (auto& ch : oracle::charge_vectors(n, l))
                for (auto& mp : oracle::multipartitions(n, ch, 4))
                    for (int r = 0; r < n; ++r) {
                        std::map<Multipartition, long long> want;
                        for (int j = 0; j < l; ++j) {
                            FockVector one = FockVector::basis(Multipartition(n, {ch[j]}, {mp.part(j)}));
                            const auto terms_1 = classical_f(one, r);
                            for (auto& [x, c] : terms_1.terms()) {
                                auto parts = mp.parts();
                                parts[j] = x.part(0);
                                want[mp.with_parts(parts)] += c.at_one();
                            }
                        }
                        std::map<Multipartition, long long> got;
                        const auto terms_2 = fock_f(FockVector::basis(mp), r);
                        for (auto& [x, c] : terms_2.terms()) got[x] = c.at_one();
                        CHECK(got == want);
                    }
}

TEST_CASE("scalar product") {
    Multipartition a = triple(), b = triple({{3, 3}, {1, 1, 1}, {5, 4, 1}});
    CHECK(scalar(FockVector::basis(a), FockVector::basis(a)) == LP(1));
    CHECK(scalar(FockVector::basis(a), FockVector::basis(b)).is_zero());
    FockVector other = FockVector::basis(Multipartition(3, {0, 1}));
    CHECK_THROWS_AS(scalar(FockVector::basis(a), other), Error);
}

TEST_CASE("adjointness of e and f") {
    auto& g = oracle::rng();
    for (auto& pool : pools(5)) {
        for (int t = 0; t < 8; ++t) {
            FockVector u = random_vector(pool, g), v = random_vector(pool, g);
            for (int i = 0; i < pool[0].n(); ++i) {
                // <f u, v> = <u, q^{h-1} e v>
                CHECK(scalar(fock_f(u, i), v) == scalar(u, fock_qh(fock_e(v, i), i).scaled(q(-1))));
                // <e u, v> = <u, q^{-1-h} f v>
                CHECK(scalar(fock_e(u, i), v) == scalar(u, fock_qh(fock_f(v, i), i, -1).scaled(q(-1))));
            }
        }
    }
}

TEST_CASE("prime map") {
    Multipartition e(3, {0, 1});
    FockVector pe = prime_map(FockVector::basis(e));
    REQUIRE(pe.terms().size() == 1);
    auto& key = pe.terms().begin()->first;
    CHECK(key.size() == 0);
    CHECK(key.charge_residues() == std::vector<int>{2, 0});
    CHECK(weight_from_charges(3, key.charge_residues()) == sharp(weight(e)));
    Multipartition m(2, {0, 1}, {{2, 1}, {3}});
    FockVector pm = prime_map(FockVector::basis(m, q(3)));
    CHECK(pm.coeff(conjugate_reverse(m)) == q(-3));
}

TEST_CASE("sharp semilinear identity on a single Fock space") {
    auto& g = oracle::rng();
    int count = 0;
    for (auto& pool : pools(5)) {
        std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
        for (int t = 0; t < 10; ++t) {
            FockVector u = t < 6 ? FockVector::basis(pool[pick(g)]) : random_vector(pool, g);
            for (int i = 0; i < u.n(); ++i) {
                FockVector lhs = fock_f_sharp(prime_map(u), i);
                FockVector rhs = prime_map(fock_qh(fock_f(u, i), i, -1).scaled(q(-1)));
                CHECK(lhs == rhs);
                FockVector lhs_e = fock_e_sharp(prime_map(u), i);
                FockVector rhs_e = prime_map(fock_qh(fock_e(u, i), i, 1).scaled(q(-1)));
                CHECK(lhs_e == rhs_e);
            }
            ++count;
        }
    }
    CHECK(count >= 50);
}

TEST_CASE("coproduct action on the vacuum tensor") {
    Multipartition a(3, {0}), b(3, {0, 2});
    TensorFockVector w = TensorFockVector::basis(a, b);
    for (int r = 0; r < 3; ++r) {
        TensorFockVector got = tensor_f(w, r);
        TensorFockVector want(3, a.charges(), b.charges());
        const auto terms_3 = fock_f(FockVector::basis(a), r);
        for (auto& [x, c] : terms_3.terms()) want.add(x, b, c);
        const auto terms_4 = fock_f(FockVector::basis(b), r);
        for (auto& [y, c] : terms_4.terms()) want.add(a, y, c * q(hweight(a, r)));
        CHECK(got == want);
    }
    CHECK(tensor_f(w, 0).terms().size() == 2);
    CHECK(tensor_f(w, 1).terms().empty());
    CHECK(tensor_f(w, 2).terms().size() == 1);
}

TEST_CASE("sharp semilinear identity on tensor products") {
    auto& g = oracle::rng();
    int count = 0;
    for (int n = 2; n <= 3; ++n)
        for (auto& c1 : oracle::charge_vectors(n, 1))
            for (auto& c2 : oracle::charge_vectors(n, n == 2 ? 2 : 1)) {
                auto left = oracle::multipartitions(n, c1, 3), right = oracle::multipartitions(n, c2, 3);
                std::uniform_int_distribution<size_t> pl(0, left.size() - 1), pr(0, right.size() - 1);
                for (int t = 0; t < 6; ++t) {
                    TensorFockVector w(n, c1, c2);
                    for (int k = 0; k < 1 + t % 3; ++k) w.add(left[pl(g)], right[pr(g)], random_poly(g));
                    for (int i = 0; i < n; ++i) {
                        CHECK(tensor_f_sharp(tensor_prime(w), i) ==
                              tensor_prime(tensor_qh(tensor_f(w, i), i, -1).scaled(q(-1))));
                        CHECK(tensor_e_sharp(tensor_prime(w), i) ==
                              tensor_prime(tensor_qh(tensor_e(w, i), i, 1).scaled(q(-1))));
                    }
                    ++count;
                }
            }
    CHECK(count >= 50);
}

TEST_CASE("highest weight tensors stay highest weight under the prime map") {
    // V(L0) (x) V(L0): the vacuum and v_(1) (x) v_() - q^{-1} v_() (x) v_(1)
    for (int n = 2; n <= 4; ++n) {
        Multipartition e(n, {0}), one(n, {0}, {{1}});
        TensorFockVector vac = TensorFockVector::basis(e, e);
        TensorFockVector w = TensorFockVector::basis(one, e);
        w.add(e, one, LP::monomial(-1, -1));
        for (auto* x : {&vac, &w}) {
            for (int i = 0; i < n; ++i) REQUIRE(tensor_e(*x, i).is_zero());
            TensorFockVector xp = tensor_prime(*x);
            for (int i = 0; i < n; ++i) CHECK(tensor_e_sharp(xp, i).is_zero());
        }
        // the other combination is not highest weight
        TensorFockVector bad = TensorFockVector::basis(one, e);
        bad.add(e, one, LP(1));
        CHECK_FALSE(tensor_e(bad, 0).is_zero());
    }
}
