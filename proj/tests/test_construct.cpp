#include <doctest.h>

#include "permlab/construct.hpp"
#include "support.hpp"

using namespace permlab;

namespace {

AprePerm ex4_sdpp() {
    const Fixture f = fixture("ex4");
    return split_from_admissible(f.algebra, "dot", f.operators.at("P"),
                                 f.operators.at("Phat"));
}

// The "averaging translation" of the four-dimensional fixture: the full
// commutative product as tri_r with tri_l = 0 (the splitting of the
// admissible pair (id, 0)).
AprePerm ex4_plain_sdpp() {
    AprePerm s;
    s.dim = 4;
    s.tri_r = fixture("ex4").algebra.mult("dot");
    s.tri_l = MulTensor(4);
    return s;
}

}  // namespace

TEST_CASE("double_comm of the Frobenius fixture") {
    const Fixture f = fixture("ex4");
    DoubledAlgebra d = double_comm(f.algebra, "dot", MulTensor(4));
    CHECK(d.total.dim == 8);
    CHECK(d.verdicts.at("total.commutative").passed);
    CHECK(d.verdicts.at("total.associative").passed);
    CHECK(d.verdicts.at("form.frobenius").passed);
    CHECK(d.verdicts.at("inf-bialgebra").passed);
    CHECK(d.total.basis_names[4] == "e1*");
    CHECK(!determinant(d.B_d.gram).is_zero());

    SUBCASE("the zero algebra still receives a nondegenerate pairing") {
        Algebra zero = make_algebra(2, {}, {{"dot", MulTensor(2)}});
        DoubledAlgebra dz = double_comm(zero, "dot", MulTensor(2));
        CHECK(dz.verdicts.at("form.frobenius").passed);
        CHECK(!determinant(dz.B_d.gram).is_zero());
    }
    SUBCASE("a dual product breaking the compatibility fails coherently") {
        // pointwise product on the dual side is commutative associative but
        // incompatible with the fixture's product
        DoubledAlgebra bad = double_comm(f.algebra, "dot", testgen::diag_mult(4));
        const bool frobenius_double = bad.verdicts.at("total.commutative").passed &&
                                      bad.verdicts.at("total.associative").passed &&
                                      bad.verdicts.at("form.frobenius").passed;
        CHECK(frobenius_double == bad.verdicts.at("inf-bialgebra").passed);
        CHECK(!frobenius_double);
    }
    SUBCASE("non-associative input is refused") {
        MulTensor t(2);
        t.at(0, 0, 1) = Scalar(1);                   // e1.e1 = e2
        t.at(0, 1, 0) = t.at(1, 0, 0) = Scalar(1);   // e1.e2 = e1: (e1e1)e2 != e1(e1e2)
        Algebra a = make_algebra(2, {}, {{"dot", t}});
        CHECK(!checks::associative(t).passed);
        CHECK_THROWS_AS(double_comm(a, "dot", MulTensor(2)), precondition_error);
    }
    SUBCASE("a nonzero compatible dual product passes everything") {
        MulTensor t(2);
        t.at(0, 0, 1) = Scalar(1);  // t.t = t^2
        ComulTensor delta(2);
        delta.at(0, 1, 1) = Scalar(1);  // D(t) = t^2 (x) t^2
        Algebra a = make_algebra(2, {}, {{"dot", t}});
        DoubledAlgebra dn = double_comm(a, "dot", dualize(delta));
        CHECK(dn.verdicts.at("total.associative").passed);
        CHECK(dn.verdicts.at("form.frobenius").passed);
        CHECK(dn.verdicts.at("inf-bialgebra").passed);
    }
}

TEST_CASE("check_avg_double") {
    const Fixture f = fixture("ex4");
    DoubledAlgebra d = double_comm(f.algebra, "dot", MulTensor(4));

    CHECK(check_avg_double(d, f.operators.at("P"), f.operators.at("Phat")).passed);
    CHECK(check_avg_double(d, Matrix::zero(4, 4), Matrix::zero(4, 4)).passed);

    SUBCASE("a non-averaging block operator fails on both routes coherently") {
        testgen::Rng rng(8);
        Matrix bad = testgen::bump(f.operators.at("P"), 2, 0);
        Report rep = check_avg_double(d, bad, f.operators.at("Phat"));
        CHECK(!rep.passed);
        bool total_fail = false, base_fail = false;
        for (const auto& v : rep.violations) {
            if (v.equation.rfind("total:", 0) == 0) total_fail = true;
            if (v.equation.rfind("base:", 0) == 0) base_fail = true;
        }
        CHECK(total_fail);
        CHECK(base_fail);
    }
}

TEST_CASE("manin_perm") {
    const AprePerm s = ex4_sdpp();

    SUBCASE("with the zero dual splitting") {
        DoubledAlgebra d = manin_perm(s, AprePerm::zero(4));
        CHECK(d.total.dim == 8);
        CHECK(d.verdicts.at("perm").passed);
        CHECK(d.verdicts.at("form.symmetric").passed);
        CHECK(d.verdicts.at("form.left-invariant").passed);
    }
    SUBCASE("both zero") {
        DoubledAlgebra d = manin_perm(AprePerm::zero(2), AprePerm::zero(2));
        CHECK(d.verdicts.at("perm").passed);
        CHECK(d.total.mult("circ").is_zero());
    }
    SUBCASE("non-special inputs are refused") {
        AprePerm bad = AprePerm::zero(4);
        bad.tri_l.at(0, 1, 0) = Scalar(1);
        CHECK_THROWS_AS(manin_perm(bad, AprePerm::zero(4)), precondition_error);
    }
    SUBCASE("incompatible pairs report a failing verdict without refusing") {
        DoubledAlgebra d = manin_perm(s, s);
        CHECK(d.verdicts.count("perm") == 1);  // verdict attached either way
    }
}

TEST_CASE("manin_sdpp against the worked double splitting") {
    const Fixture f = fixture("ex4");
    const MulTensor& dot = f.algebra.mult("dot");
    ManinSdpp m = manin_sdpp(ex4_plain_sdpp(), AprePerm::zero(4));
    REQUIRE(m.verdicts.at("special-apre-perm").passed);
    CHECK(m.verdicts.at("quadratic").passed);

    // frozen mixed products:
    //   (x + a*) <| (y + b*) = -L*(x) b* - L*(y) a*
    //   (x + a*) |> (y + b*) = x.y + 2 L*(x) b* + L*(y) a*
    MulTensor want_r(8), want_l(8);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) {
                want_r.at(i, j, k) = dot.at(i, j, k);
                want_r.at(i, 4 + j, 4 + k) = Scalar(2) * dot.at(i, k, j);
                want_r.at(4 + i, j, 4 + k) = dot.at(j, k, i);
                want_l.at(i, 4 + j, 4 + k) = -dot.at(i, k, j);
                want_l.at(4 + i, j, 4 + k) = -dot.at(j, k, i);
            }
    CHECK(m.pair.tri_r == want_r);
    CHECK(m.pair.tri_l == want_l);

    SUBCASE("recombination matches the perm double") {
        DoubledAlgebra d = manin_perm(ex4_plain_sdpp(), AprePerm::zero(4));
        CHECK(associated_perm(m.pair) == d.total.mult("circ"));
    }
    SUBCASE("splitting the perm double through the pairing recovers the pair") {
        DoubledAlgebra d = manin_perm(ex4_plain_sdpp(), AprePerm::zero(4));
        REQUIRE(d.verdicts.at("perm").passed);
        AprePerm back = split_from_form(d.total, "circ", d.B_d);
        CHECK(back.tri_r == m.pair.tri_r);
        CHECK(back.tri_l == m.pair.tri_l);
    }
    SUBCASE("both zero") {
        ManinSdpp z = manin_sdpp(AprePerm::zero(2), AprePerm::zero(2));
        CHECK(z.pair.tri_r.is_zero());
        CHECK(z.pair.tri_l.is_zero());
    }
}

TEST_CASE("avg_double_to_sdpp_manin") {
    const Fixture f = fixture("ex4");
    DoubledAlgebra d = double_comm(f.algebra, "dot", MulTensor(4));
    const Matrix& p = f.operators.at("P");
    const Matrix& phat = f.operators.at("Phat");

    AprePerm big = avg_double_to_sdpp_manin(d, p, phat);
    CHECK(is_special(big));
    CHECK(check_quadratic(QuadraticSDPP{big, d.B_d}).passed);

    SUBCASE("the A block is the worked splitting") {
        const AprePerm s = ex4_sdpp();
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                for (int k = 0; k < 4; ++k) {
                    CHECK(big.tri_r.at(i, j, k) == s.tri_r.at(i, j, k));
                    CHECK(big.tri_l.at(i, j, k) == s.tri_l.at(i, j, k));
                    // block closure: nothing leaks into the dual block
                    CHECK(big.tri_r.at(i, j, 4 + k).is_zero());
                    CHECK(big.tri_l.at(i, j, 4 + k).is_zero());
                }
    }
    SUBCASE("agreement with the splitting-level double of the blocks") {
        // A-side block: split of (dot, P, Phat); dual-side block: zero
        ManinSdpp m = manin_sdpp(ex4_sdpp(), AprePerm::zero(4));
        CHECK(big.tri_r == m.pair.tri_r);
        CHECK(big.tri_l == m.pair.tri_l);
    }
    SUBCASE("failing the averaging-double precondition is an error") {
        testgen::Rng rng(14);
        CHECK_THROWS_AS(avg_double_to_sdpp_manin(d, testgen::bump(p, 2, 0), phat),
                        precondition_error);
    }
}

TEST_CASE("lie_manin") {
    DoubledAlgebra d = manin_perm(ex4_sdpp(), AprePerm::zero(4));
    auto [bracket, rep] = lie_manin(d);
    CHECK(rep.passed);
    CHECK(checks::lie(bracket).passed);

    SUBCASE("zero double") {
        DoubledAlgebra z = manin_perm(AprePerm::zero(2), AprePerm::zero(2));
        CHECK(lie_manin(z).second.passed);
    }
    SUBCASE("an off-pattern pairing breaks the 2-cocycle law with a witness") {
        DoubledAlgebra mutated = d;
        mutated.B_d.gram.at(0, 0) += Scalar(1);
        mutated.B_d.gram.at(0, 4) += Scalar(1);
        auto [b2, rep2] = lie_manin(mutated);
        CHECK(!rep2.passed);
        bool cocycle_fail = false;
        for (const auto& v : rep2.violations)
            if (v.equation.rfind("form.2-cocycle", 0) == 0) cocycle_fail = true;
        CHECK(cocycle_fail);
    }
    SUBCASE("a non-perm double is refused") {
        DoubledAlgebra bad = manin_perm(ex4_sdpp(), ex4_sdpp());
        if (!bad.verdicts.at("perm").passed)
            CHECK_THROWS_AS(lie_manin(bad), precondition_error);
    }
}

TEST_CASE("fixtures") {
    CHECK(fixture("ex4").algebra.dim == 4);
    CHECK(fixture("tensor_square").algebra.dim == 16);
    CHECK(fixture("semidirect_projection").algebra.dim == 8);
    CHECK_THROWS_AS(fixture("nope"), std::invalid_argument);

    SUBCASE("tensor-square pairing values") {
        const Fixture ts = fixture("tensor_square");
        const Fixture base = fixture("ex4");
        const Matrix& g = base.forms.at("B").gram;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                CHECK(ts.forms.at("B").gram.at(i * 4 + j, i * 4 + j) ==
                      g.at(i, i) * g.at(j, j));
        // B'(e1(x)e2, e3(x)e4) = B(e1,e3) B(e2,e4) = 1
        CHECK(ts.forms.at("B").gram.at(0 * 4 + 1, 2 * 4 + 3) == Scalar(1));
    }
    SUBCASE("the semidirect projection fixture is the commutative double") {
        const Fixture sp = fixture("semidirect_projection");
        DoubledAlgebra d = double_comm(fixture("ex4").algebra, "dot", MulTensor(4));
        CHECK(sp.algebra.mult("dot") == d.total.mult("dot"));
        CHECK(sp.forms.at("B").gram == d.B_d.gram);
    }
}
