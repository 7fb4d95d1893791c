#include "permlab/construct.hpp"

#include <stdexcept>

namespace permlab {

namespace {

std::vector<std::string> doubled_names(const std::vector<std::string>& base) {
    std::vector<std::string> names = base;
    for (const auto& n : base) names.push_back(n + "*");
    return names;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return m;
}

void require_special_input(const AprePerm& s, const char* what) {
    Report rep = checks::special_apre_perm(s.tri_r, s.tri_l, s.basis_names);
    if (!rep.passed)
        throw precondition_error(std::string(what) + ": input is not a special splitting", rep);
}

}  // namespace

BilinearForm canonical_pairing(int base_dim) {
    Matrix g(2 * base_dim, 2 * base_dim);
    for (int i = 0; i < base_dim; ++i) {
        g.at(i, base_dim + i) = Scalar(1);
        g.at(base_dim + i, i) = Scalar(1);
    }
    return BilinearForm{std::move(g)};
}

DoubledAlgebra double_comm(const Algebra& a, const std::string& dot,
                           const MulTensor& dual_mult) {
    const MulTensor& t = a.mult(dot);
    if (dual_mult.dim != a.dim)
        throw std::invalid_argument("double_comm: dual multiplication dimension mismatch");
    for (auto&& [tensor, tag] : {std::pair<const MulTensor&, const char*>{t, "base"},
                                 {dual_mult, "dual"}}) {
        Report comm = checks::commutative(tensor);
        if (!comm.passed)
            throw precondition_error(std::string("double_comm: ") + tag +
                                         " multiplication is not commutative",
                                     comm);
        Report assoc = checks::associative(tensor);
        if (!assoc.passed)
            throw precondition_error(std::string("double_comm: ") + tag +
                                         " multiplication is not associative",
                                     assoc);
    }

    const int n = a.dim;
    MulTensor total(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) total.at(i, j, k) = t.at(i, j, k);
            for (int k = 0; k < n; ++k) total.at(n + i, n + j, n + k) = dual_mult.at(i, j, k);
        }
    // e_i . e_j* = L*_{dual}(e_j*) e_i + L*_{dot}(e_i) e_j*
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int m = 0; m < n; ++m) {
                total.at(i, n + j, m) = dual_mult.at(j, m, i);
                total.at(n + j, i, m) = dual_mult.at(j, m, i);
            }
            for (int k = 0; k < n; ++k) {
                total.at(i, n + j, n + k) = t.at(i, k, j);
                total.at(n + j, i, n + k) = t.at(i, k, j);
            }
        }

    DoubledAlgebra d;
    d.base = a;
    d.dual_mult = dual_mult;
    d.B_d = canonical_pairing(n);
    d.total = make_algebra(2 * n, doubled_names(a.basis_names), {{"dot", std::move(total)}});
    d.provenance = "double_comm";

    Report assoc = check_identity(d.total, {"dot"}, IdentityKind::Associative);
    Report comm = check_identity(d.total, {"dot"}, IdentityKind::Commutative);
    Report frob = check_form(d.total, {"dot"}, d.B_d, FormProperty::FrobeniusInvariant);

    BialgebraSpec bspec;
    bspec.algebra = make_algebra(n, a.basis_names, {{"dot", t}});
    bspec.coalgebra = make_coalgebra(n, a.basis_names, {{"delta", dualize(dual_mult)}});
    bspec.kind = BialgebraKind::CommCocommInfinitesimal;
    Report bialg = check_inf_bialgebra(bspec);

    if ((assoc.passed && comm.passed && frob.passed) != bialg.passed)
        throw std::logic_error(
            "double_comm: Frobenius-double verdict disagrees with the bialgebra verdict");

    d.verdicts["total.commutative"] = std::move(comm);
    d.verdicts["total.associative"] = std::move(assoc);
    d.verdicts["form.frobenius"] = std::move(frob);
    d.verdicts["inf-bialgebra"] = std::move(bialg);
    return d;
}

Report check_avg_double(const DoubledAlgebra& d, const Matrix& P, const Matrix& Qstar) {
    const int n = d.base_dim();
    if (P.rows() != n || P.cols() != n || Qstar.rows() != n || Qstar.cols() != n)
        throw std::invalid_argument("check_avg_double: block operator shape mismatch");

    Report total_avg = check_averaging(d.total, "dot", block_diag(P, Qstar));

    // Block-law route: both blocks must be admissible averaging pairs.
    const Matrix Q = Qstar.transpose();
    const Matrix Pstar = P.transpose();
    Algebra dual = make_algebra(n, {}, {{"dot", d.dual_mult}});
    Report base_adm = check_admissible(d.base, "dot", P, Q);
    Report dual_adm = check_admissible(dual, "dot", Qstar, Pstar);

    if (total_avg.passed != (base_adm.passed && dual_adm.passed))
        throw std::logic_error(
            "check_avg_double: total-algebra verdict disagrees with the block laws");

    Report rep;
    rep.merge_prefixed("total:", total_avg);
    rep.merge_prefixed("base:", base_adm);
    rep.merge_prefixed("dual:", dual_adm);
    return rep;
}

DoubledAlgebra manin_perm(const AprePerm& a_sdpp, const AprePerm& astar_sdpp) {
    if (a_sdpp.dim != astar_sdpp.dim)
        throw std::invalid_argument("manin_perm: block dimensions differ");
    require_special_input(a_sdpp, "manin_perm");
    require_special_input(astar_sdpp, "manin_perm");

    const int n = a_sdpp.dim;
    const MulTensor circ_a = associated_perm(a_sdpp);
    const MulTensor circ_s = associated_perm(astar_sdpp);
    const MulTensor& tl_a = a_sdpp.tri_l;
    const MulTensor& tl_s = astar_sdpp.tri_l;

    MulTensor total(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                total.at(i, j, k) = circ_a.at(i, j, k);
                total.at(n + i, n + j, n + k) = circ_s.at(i, j, k);
            }
    // e_i o e_j* = -L*_{tl*}(e_j*) e_i + L*_{circ}(e_i) e_j*
    // e_i* o e_j = L*_{circ*}(e_i*) e_j - L*_{tl}(e_j) e_i*
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int m = 0; m < n; ++m) {
                total.at(i, n + j, m) = -tl_s.at(j, m, i);
                total.at(n + i, j, m) = circ_s.at(i, m, j);
            }
            for (int k = 0; k < n; ++k) {
                total.at(i, n + j, n + k) = circ_a.at(i, k, j);
                total.at(n + i, j, n + k) = -tl_a.at(j, k, i);
            }
        }

    std::vector<std::string> base_names = a_sdpp.basis_names;
    if (base_names.empty())
        for (int i = 0; i < n; ++i) base_names.push_back("e" + std::to_string(i + 1));

    DoubledAlgebra d;
    d.B_d = canonical_pairing(n);
    d.base = make_algebra(n, base_names,
                          {{"tri_r", a_sdpp.tri_r}, {"tri_l", a_sdpp.tri_l}, {"circ", circ_a}});
    d.dual_mult = circ_s;
    d.total = make_algebra(2 * n, doubled_names(base_names), {{"circ", std::move(total)}});
    d.provenance = "manin_perm";

    Report perm = check_identity(d.total, {"circ"}, IdentityKind::Perm);
    const bool is_perm = perm.passed;
    d.verdicts["perm"] = std::move(perm);
    if (is_perm) {
        d.verdicts["form.symmetric"] = check_form(d.total, {}, d.B_d, FormProperty::Symmetric);
        d.verdicts["form.left-invariant"] =
            check_form(d.total, {"circ"}, d.B_d, FormProperty::LeftInvariant);
    }
    return d;
}

ManinSdpp manin_sdpp(const AprePerm& a_sdpp, const AprePerm& astar_sdpp) {
    if (a_sdpp.dim != astar_sdpp.dim)
        throw std::invalid_argument("manin_sdpp: block dimensions differ");
    require_special_input(a_sdpp, "manin_sdpp");
    require_special_input(astar_sdpp, "manin_sdpp");

    const int n = a_sdpp.dim;
    const MulTensor circ_a = associated_perm(a_sdpp);
    const MulTensor circ_s = associated_perm(astar_sdpp);

    AprePerm pair;
    pair.dim = 2 * n;
    pair.tri_r = MulTensor(2 * n);
    pair.tri_l = MulTensor(2 * n);
    std::vector<std::string> base_names = a_sdpp.basis_names;
    if (base_names.empty())
        for (int i = 0; i < n; ++i) base_names.push_back("e" + std::to_string(i + 1));
    pair.basis_names = doubled_names(base_names);

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                pair.tri_r.at(i, j, k) = a_sdpp.tri_r.at(i, j, k);
                pair.tri_r.at(n + i, n + j, n + k) = astar_sdpp.tri_r.at(i, j, k);
                pair.tri_l.at(i, j, k) = a_sdpp.tri_l.at(i, j, k);
                pair.tri_l.at(n + i, n + j, n + k) = astar_sdpp.tri_l.at(i, j, k);
            }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int m = 0; m < n; ++m) {
                // A-valued mixed parts
                pair.tri_r.at(i, n + j, m) = astar_sdpp.tri_r.at(m, j, i);
                pair.tri_r.at(n + i, j, m) = circ_s.at(i, m, j) + circ_s.at(m, i, j);
                pair.tri_l.at(i, n + j, m) = -circ_s.at(m, j, i);
                pair.tri_l.at(n + i, j, m) = -circ_s.at(m, i, j);
            }
            for (int k = 0; k < n; ++k) {
                // A*-valued mixed parts
                pair.tri_r.at(i, n + j, n + k) = circ_a.at(i, k, j) + circ_a.at(k, i, j);
                pair.tri_r.at(n + i, j, n + k) = a_sdpp.tri_r.at(k, j, i);
                pair.tri_l.at(i, n + j, n + k) = -circ_a.at(k, i, j);
                pair.tri_l.at(n + i, j, n + k) = -circ_a.at(k, j, i);
            }
        }

    ManinSdpp out;
    out.pair = std::move(pair);
    out.B_d = canonical_pairing(n);
    Report sapp = checks::special_apre_perm(out.pair.tri_r, out.pair.tri_l,
                                            out.pair.basis_names);
    const bool ok = sapp.passed;
    out.verdicts["special-apre-perm"] = std::move(sapp);
    if (ok) out.verdicts["quadratic"] = check_quadratic(QuadraticSDPP{out.pair, out.B_d});
    return out;
}

AprePerm avg_double_to_sdpp_manin(const DoubledAlgebra& d, const Matrix& P,
                                  const Matrix& Qstar) {
    Report avg = check_avg_double(d, P, Qstar);
    if (!avg.passed)
        throw precondition_error("avg_double_to_sdpp_manin: not an averaging double", avg);

    const Matrix R = block_diag(P, Qstar);
    const Matrix S = block_diag(Qstar.transpose(), P.transpose());
    const MulTensor& t = d.total.mult("dot");
    const int n = d.total.dim;

    AprePerm s;
    s.dim = n;
    s.basis_names = d.total.basis_names;
    s.tri_r = MulTensor(n);
    s.tri_l = MulTensor(n);
    for (int i = 0; i < n; ++i) {
        const Vec ri = R.apply(basis_vec(n, i));
        for (int j = 0; j < n; ++j) {
            const Vec head = apply_right(t, ri, j);
            const Vec tail = S.apply(prod(t, i, j));
            for (int k = 0; k < n; ++k) {
                s.tri_r.at(i, j, k) = head[k] + tail[k];
                s.tri_l.at(i, j, k) = -tail[k];
            }
        }
    }
    return s;
}

std::pair<MulTensor, Report> lie_manin(const DoubledAlgebra& d) {
    if (!d.total.has_mult("circ"))
        throw std::invalid_argument("lie_manin: double carries no perm product");
    // sub_adjacent_lie re-checks the perm law and throws when it fails
    MulTensor bracket = sub_adjacent_lie(d.total, "circ");

    Report rep;
    rep.merge(checks::lie(bracket, d.total.basis_names));
    Algebra wrap = make_algebra(d.total.dim, d.total.basis_names, {{"bracket", bracket}});
    rep.merge(check_form(wrap, {"bracket"}, d.B_d, FormProperty::Commutative2Cocycle));

    const int n = d.base_dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                if (!bracket.at(i, j, n + k).is_zero())
                    rep.add("lie-manin.closure", {i, j}, "bracket leaves the A block", "0");
                if (!bracket.at(n + i, n + j, k).is_zero())
                    rep.add("lie-manin.closure", {n + i, n + j}, "bracket leaves the A* block",
                            "0");
            }
        }
    return {std::move(bracket), std::move(rep)};
}

BialgebraSpec induce_sdpp_bialgebra(const Algebra& a, const ComulTensor& delta, const Matrix& P,
                                    const Matrix& Q) {
    const MulTensor& dot = a.mult("dot");
    const int n = a.dim;
    if (delta.dim != n)
        throw std::invalid_argument("induce_sdpp_bialgebra: comultiplication dimension mismatch");

    BialgebraSpec in{make_algebra(n, a.basis_names, {{"dot", dot}}),
                     make_coalgebra(n, a.basis_names, {{"delta", delta}}),
                     {{"P", P}, {"Q", Q}},
                     BialgebraKind::AveragingCommCocomm};
    Report avg = check_averaging_bialgebra(in);
    if (!avg.passed)
        throw precondition_error("induce_sdpp_bialgebra: input is not an averaging bialgebra",
                                 avg);

    AprePerm s = split_from_admissible(a, "dot", P, Q);
    ComulTensor vartheta(n), theta(n);
    for (int i = 0; i < n; ++i) {
        const Grid d_i = comul_of_basis(delta, i);
        const Grid d_p = comul_apply(delta, P.apply(basis_vec(n, i)));
        const Matrix vt = Q * d_i + d_p;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                vartheta.at(i, x, y) = vt.at(x, y);
                theta.at(i, x, y) = -d_p.at(x, y);
            }
    }

    BialgebraSpec out;
    out.algebra = make_algebra(n, a.basis_names,
                               {{"tri_r", s.tri_r},
                                {"tri_l", s.tri_l},
                                {"circ", associated_perm(s)}});
    out.coalgebra = make_coalgebra(
        n, a.basis_names, {{"vartheta", std::move(vartheta)}, {"theta", std::move(theta)}});
    out.operators = {{"P", P}, {"Q", Q}};
    out.kind = BialgebraKind::SpecialAprePerm;
    return out;
}

namespace {

Fixture build_ex4() {
    const int n = 4;
    MulTensor dot(n);
    auto set_comm = [&](int i, int j, int k, long v) {
        dot.at(i, j, k) = Scalar(v);
        dot.at(j, i, k) = Scalar(v);
    };
    set_comm(0, 0, 0, 1);  // e1.e1 = e1
    set_comm(0, 1, 1, 1);  // e1.e2 = e2
    set_comm(0, 2, 2, 1);  // e1.e3 = e3
    set_comm(1, 3, 2, 1);  // e2.e4 = e3
    set_comm(0, 3, 3, 1);  // e1.e4 = e4

    Fixture f;
    f.name = "ex4";
    f.algebra = make_algebra(n, {}, {{"dot", std::move(dot)}});
    f.operators["P"] = Matrix::diagonal({Scalar(1), Scalar(1), Scalar(0), Scalar(0)});
    f.operators["Phat"] = Matrix::diagonal({Scalar(0), Scalar(0), Scalar(1), Scalar(1)});
    Matrix g(n, n);
    g.at(0, 2) = g.at(2, 0) = Scalar(1);
    g.at(1, 3) = g.at(3, 1) = Scalar(1);
    f.forms["B"] = BilinearForm{std::move(g)};
    f.comults["delta"] = ComulTensor(n);
    return f;
}

Fixture build_tensor_square() {
    const Fixture base = build_ex4();
    const MulTensor& t = base.algebra.mult("dot");
    const Matrix& g = base.forms.at("B").gram;
    const int n = base.algebra.dim;
    const int nn = n * n;
    auto idx = [n](int i, int j) { return i * n + j; };

    MulTensor dot(nn);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    // (e_i (x) e_j).(e_k (x) e_l) = e_i.e_k (x) e_j.e_l
                    for (int p = 0; p < n; ++p) {
                        const Scalar& cik = t.at(i, k, p);
                        if (cik.is_zero()) continue;
                        for (int q = 0; q < n; ++q) {
                            const Scalar& cjl = t.at(j, l, q);
                            if (!cjl.is_zero())
                                dot.at(idx(i, j), idx(k, l), idx(p, q)) += cik * cjl;
                        }
                    }
                }

    Matrix p(nn, nn);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            p.at(idx(i, j), idx(i, j)) += Scalar(1);
            p.at(idx(j, i), idx(i, j)) += Scalar(1);
        }

    Matrix gram(nn, nn);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    gram.at(idx(i, j), idx(k, l)) = g.at(i, k) * g.at(j, l);

    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            names.push_back(base.algebra.basis_names[i] + "." + base.algebra.basis_names[j]);

    Fixture f;
    f.name = "tensor_square";
    f.algebra = make_algebra(nn, std::move(names), {{"dot", std::move(dot)}});
    f.operators["P"] = p;
    f.operators["Phat"] = p;
    f.forms["B"] = BilinearForm{std::move(gram)};
    return f;
}

Fixture build_semidirect_projection() {
    const Fixture base = build_ex4();
    DoubledAlgebra d = double_comm(base.algebra, "dot", MulTensor(base.algebra.dim));
    const int n = base.algebra.dim;

    Vec diag_p(2 * n), diag_phat(2 * n);
    for (int i = 0; i < n; ++i) {
        diag_p[i] = Scalar(1);
        diag_phat[n + i] = Scalar(1);
    }

    Fixture f;
    f.name = "semidirect_projection";
    f.algebra = d.total;
    f.operators["P"] = Matrix::diagonal(diag_p);
    f.operators["Phat"] = Matrix::diagonal(diag_phat);
    f.forms["B"] = d.B_d;
    return f;
}

void self_test(const Fixture& f) {
    auto require = [&](const Report& rep, const char* what) {
        if (!rep.passed)
            throw std::logic_error("fixture " + f.name + " failed self-test: " + what + "\n" +
                                   rep.summary());
    };
    const BilinearForm& B = f.forms.at("B");
    require(check_averaging(f.algebra, "dot", f.operators.at("P")), "averaging");
    require(check_form(f.algebra, {}, B, FormProperty::Symmetric), "symmetric");
    require(check_form(f.algebra, {}, B, FormProperty::Nondegenerate), "nondegenerate");
    require(check_form(f.algebra, {"dot"}, B, FormProperty::FrobeniusInvariant), "frobenius");
    require(check_admissible(f.algebra, "dot", f.operators.at("P"), f.operators.at("Phat")),
            "admissible");
    if (adjoint_wrt_form(f.operators.at("P"), B) != f.operators.at("Phat"))
        throw std::logic_error("fixture " + f.name + ": stored adjoint is wrong");
}

}  // namespace

Fixture fixture(const std::string& name) {
    Fixture f;
    if (name == "ex4")
        f = build_ex4();
    else if (name == "tensor_square")
        f = build_tensor_square();
    else if (name == "semidirect_projection")
        f = build_semidirect_projection();
    else
        throw std::invalid_argument("unknown fixture \"" + name + "\"");
    self_test(f);
    return f;
}

std::vector<std::string> fixture_names() {
    return {"ex4", "tensor_square", "semidirect_projection"};
}

}  // namespace permlab
