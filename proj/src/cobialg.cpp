#include "permlab/cobialg.hpp"

#include <stdexcept>

#include "permlab/parallel.hpp"

namespace permlab {

const ComulTensor& Coalgebra::comult(const std::string& name) const {
    auto it = comults.find(name);
    if (it == comults.end())
        throw std::invalid_argument("unknown comultiplication \"" + name + "\"");
    return it->second;
}

Coalgebra make_coalgebra(int dim, std::vector<std::string> basis_names,
                         std::map<std::string, ComulTensor> comults) {
    if (dim < 0) throw std::invalid_argument("make_coalgebra: negative dimension");
    if (basis_names.empty())
        for (int i = 0; i < dim; ++i) basis_names.push_back("e" + std::to_string(i + 1));
    if (int(basis_names.size()) != dim)
        throw std::invalid_argument("make_coalgebra: basis name count does not match dimension");
    for (const auto& [name, t] : comults)
        if (t.dim != dim)
            throw std::invalid_argument("make_coalgebra: comultiplication \"" + name +
                                        "\" has mismatched dimension");
    return Coalgebra{dim, std::move(basis_names), std::move(comults)};
}

const Matrix& BialgebraSpec::op(const std::string& name) const {
    auto it = operators.find(name);
    if (it == operators.end())
        throw std::invalid_argument("missing operator \"" + name + "\"");
    return it->second;
}

ComulTensor dualize(const MulTensor& mult) {
    ComulTensor d(mult.dim);
    for (int i = 0; i < mult.dim; ++i)
        for (int j = 0; j < mult.dim; ++j)
            for (int k = 0; k < mult.dim; ++k) d.at(k, i, j) = mult.at(i, j, k);
    return d;
}

MulTensor dualize(const ComulTensor& comult) {
    MulTensor c(comult.dim);
    for (int i = 0; i < comult.dim; ++i)
        for (int j = 0; j < comult.dim; ++j)
            for (int k = 0; k < comult.dim; ++k) c.at(i, j, k) = comult.at(k, i, j);
    return c;
}

namespace {

void expect_scalar(Report& rep, const char* id, std::vector<int> witness, const Scalar& lhs,
                   const Scalar& rhs) {
    if (lhs != rhs) rep.add(id, std::move(witness), lhs.str(), rhs.str());
}

// sum_m t1(i, m, c) t2(m, a, b): comultiply the left tensor leg.
Scalar comp_left(const ComulTensor& t1, const ComulTensor& t2, int i, int a, int b, int c) {
    Scalar r;
    for (int m = 0; m < t1.dim; ++m) {
        const Scalar& x = t1.at(i, m, c);
        if (!x.is_zero()) r += x * t2.at(m, a, b);
    }
    return r;
}

// sum_m t1(i, a, m) t2(m, b, c): comultiply the right tensor leg.
Scalar comp_right(const ComulTensor& t1, const ComulTensor& t2, int i, int a, int b, int c) {
    Scalar r;
    for (int m = 0; m < t1.dim; ++m) {
        const Scalar& x = t1.at(i, a, m);
        if (!x.is_zero()) r += x * t2.at(m, b, c);
    }
    return r;
}

Report cocommutative(const ComulTensor& d) {
    return basis_scan(d.dim, [&](int i, Report& rep) {
        for (int j = 0; j < d.dim; ++j)
            for (int k = j + 1; k < d.dim; ++k)
                expect_scalar(rep, "co.cocomm", {i, j, k}, d.at(i, j, k), d.at(i, k, j));
    });
}

Report coassociative(const ComulTensor& d) {
    return basis_scan(d.dim, [&](int i, Report& rep) {
        for (int a = 0; a < d.dim; ++a)
            for (int b = 0; b < d.dim; ++b)
                for (int c = 0; c < d.dim; ++c)
                    expect_scalar(rep, "co.coassoc", {i, a, b, c},
                                  comp_left(d, d, i, a, b, c), comp_right(d, d, i, a, b, c));
    });
}

Report perm_coalgebra(const ComulTensor& eta) {
    return basis_scan(eta.dim, [&](int i, Report& rep) {
        for (int a = 0; a < eta.dim; ++a)
            for (int b = 0; b < eta.dim; ++b)
                for (int c = 0; c < eta.dim; ++c) {
                    const Scalar right = comp_right(eta, eta, i, a, b, c);
                    expect_scalar(rep, "co.perm.1", {i, a, b, c},
                                  comp_left(eta, eta, i, a, b, c), right);
                    expect_scalar(rep, "co.perm.2", {i, a, b, c}, right,
                                  comp_left(eta, eta, i, b, a, c));
                }
    });
}

Report sapp_coalgebra(const ComulTensor& vartheta, const ComulTensor& theta) {
    ComulTensor eta(vartheta.dim);
    for (size_t i = 0; i < eta.d.size(); ++i) eta.d[i] = vartheta.d[i] + theta.d[i];
    Report rep = perm_coalgebra(eta);
    rep.merge(basis_scan(eta.dim, [&](int i, Report& part) {
        const int n = eta.dim;
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                expect_scalar(part, "co.sapp.symm", {i, j, k}, theta.at(i, j, k),
                              theta.at(i, k, j));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    expect_scalar(part, "co.sapp.1", {i, a, b, c},
                                  comp_left(theta, eta, i, a, b, c),
                                  comp_right(eta, theta, i, a, b, c));
                    Scalar lhs = comp_right(eta, theta, i, a, b, c) +
                                 comp_right(theta, theta, i, a, b, c);
                    expect_scalar(part, "co.sapp.2", {i, a, b, c}, lhs, Scalar(0));
                }
    }));
    return rep;
}

}  // namespace

Report check_coalgebra(const Coalgebra& c, const std::vector<std::string>& names,
                       CoalgebraKind kind) {
    const size_t want = kind == CoalgebraKind::SpecialAprePermCoalgebra ? 2 : 1;
    if (names.size() != want)
        throw std::invalid_argument("check_coalgebra: kind takes " + std::to_string(want) +
                                    " comultiplication(s), got " + std::to_string(names.size()));
    switch (kind) {
        case CoalgebraKind::CocommCoassoc: {
            const ComulTensor& d = c.comult(names[0]);
            Report rep = cocommutative(d);
            rep.merge(coassociative(d));
            return rep;
        }
        case CoalgebraKind::PermCoalgebra: return perm_coalgebra(c.comult(names[0]));
        case CoalgebraKind::SpecialAprePermCoalgebra:
            return sapp_coalgebra(c.comult(names[0]), c.comult(names[1]));
    }
    throw std::logic_error("check_coalgebra: unreachable");
}

Report check_inf_bialgebra(const BialgebraSpec& spec) {
    const Algebra& a = spec.algebra;
    const MulTensor& dot = a.mult("dot");
    const ComulTensor& delta = spec.coalgebra.comult("delta");
    if (spec.coalgebra.dim != a.dim)
        throw std::invalid_argument("check_inf_bialgebra: algebra/coalgebra dimension mismatch");

    Report rep;
    rep.merge_prefixed("pre:", checks::commutative(dot, a.basis_names));
    rep.merge_prefixed("pre:", checks::associative(dot, a.basis_names));
    rep.merge_prefixed("pre:", cocommutative(delta));
    rep.merge_prefixed("pre:", coassociative(delta));

    rep.merge(basis_scan(a.dim, [&](int i, Report& part) {
        const int n = a.dim;
        for (int j = 0; j < n; ++j)
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    Scalar lhs;
                    for (int m = 0; m < n; ++m) {
                        const Scalar& c = dot.at(i, j, m);
                        if (!c.is_zero()) lhs += c * delta.at(m, x, y);
                    }
                    Scalar rhs;
                    for (int p = 0; p < n; ++p) {
                        const Scalar& d1 = delta.at(j, p, y);
                        if (!d1.is_zero()) rhs += d1 * dot.at(i, p, x);
                        const Scalar& d2 = delta.at(i, x, p);
                        if (!d2.is_zero()) rhs += d2 * dot.at(j, p, y);
                    }
                    expect_scalar(part, "ibialg.main", {i, j, x, y}, lhs, rhs);
                }
    }));
    return rep;
}

Report check_averaging_compat(const ComulTensor& delta, const Matrix& P, const Matrix& Q) {
    const int n = delta.dim;
    if (P.rows() != n || P.cols() != n || Q.rows() != n || Q.cols() != n)
        throw std::invalid_argument("check_averaging_compat: operator shape mismatch");
    return basis_scan(n, [&](int i, Report& rep) {
        const Grid g = comul_of_basis(delta, i);
        const Grid g_q = comul_apply(delta, Q.apply(basis_vec(n, i)));
        const Grid g_p = comul_apply(delta, P.apply(basis_vec(n, i)));
        const Matrix lhs1 = Q * g * Q.transpose();
        const Matrix rhs1 = Q * g_q;
        if (lhs1 != rhs1) rep.add("abialg.1", {i}, lhs1.str(), rhs1.str());
        const Matrix lhs2 = Q * g * P.transpose();
        const Matrix mid2 = Q * g_p;
        if (lhs2 != mid2) rep.add("abialg.2a", {i}, lhs2.str(), mid2.str());
        const Matrix rhs2 = g_p * P.transpose();
        if (mid2 != rhs2) rep.add("abialg.2b", {i}, mid2.str(), rhs2.str());
    });
}

Report check_averaging_bialgebra(const BialgebraSpec& spec) {
    Report rep;
    rep.merge_prefixed("pre:bialg:", check_inf_bialgebra(spec));
    rep.merge_prefixed("pre:adm:",
                       check_admissible(spec.algebra, "dot", spec.op("P"), spec.op("Q")));
    rep.merge(check_averaging_compat(spec.coalgebra.comult("delta"), spec.op("P"),
                                     spec.op("Q")));
    return rep;
}

Report check_sdpp_compat(const MulTensor& tri_r, const MulTensor& tri_l,
                         const ComulTensor& vartheta, const ComulTensor& theta,
                         const std::vector<std::string>& names) {
    (void)names;
    const int n = tri_r.dim;
    if (tri_l.dim != n || vartheta.dim != n || theta.dim != n)
        throw std::invalid_argument("check_sdpp_compat: dimension mismatch");
    const MulTensor circ = tensor_add(tri_r, tri_l);
    ComulTensor eta(n);
    for (size_t i = 0; i < eta.d.size(); ++i) eta.d[i] = vartheta.d[i] + theta.d[i];

    return basis_scan(n, [&](int i, Report& rep) {
        for (int j = 0; j < n; ++j) {
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    Scalar lhs_circ, lhs_theta, lhs_tl;
                    for (int m = 0; m < n; ++m) {
                        const Scalar& cc = circ.at(i, j, m);
                        if (!cc.is_zero()) {
                            lhs_circ += cc * eta.at(m, x, y);
                            lhs_theta += cc * theta.at(m, x, y);
                        }
                        const Scalar& cl = tri_l.at(i, j, m);
                        if (!cl.is_zero()) lhs_tl += cl * eta.at(m, x, y);
                    }

                    // bialg.1: eta(x o y) = (L_o(x) (x) id) eta(y) - (id (x) R_o(y)) theta(x)
                    Scalar rhs;
                    for (int p = 0; p < n; ++p) {
                        const Scalar& d1 = eta.at(j, p, y);
                        if (!d1.is_zero()) rhs += d1 * circ.at(i, p, x);
                        const Scalar& d2 = theta.at(i, x, p);
                        if (!d2.is_zero()) rhs -= d2 * circ.at(p, j, y);
                    }
                    expect_scalar(rep, "bialg.1", {i, j, x, y}, lhs_circ, rhs);

                    // bialg.2: eta(x o y) = (id (x) R_o(y)) eta(x) - (L_tl(x) (x) id) eta(y)
                    rhs = Scalar(0);
                    for (int p = 0; p < n; ++p) {
                        const Scalar& d1 = eta.at(i, x, p);
                        if (!d1.is_zero()) rhs += d1 * circ.at(p, j, y);
                        const Scalar& d2 = eta.at(j, p, y);
                        if (!d2.is_zero()) rhs -= d2 * tri_l.at(i, p, x);
                    }
                    expect_scalar(rep, "bialg.2", {i, j, x, y}, lhs_circ, rhs);

                    // bialg.3: eta(x o y) = (id (x) L_o(x)) eta(y) + (L_tl(y) (x) id) theta(x)
                    rhs = Scalar(0);
                    for (int p = 0; p < n; ++p) {
                        const Scalar& d1 = eta.at(j, x, p);
                        if (!d1.is_zero()) rhs += d1 * circ.at(i, p, y);
                        const Scalar& d2 = theta.at(i, p, y);
                        if (!d2.is_zero()) rhs += d2 * tri_l.at(j, p, x);
                    }
                    expect_scalar(rep, "bialg.3", {i, j, x, y}, lhs_circ, rhs);

                    // bialg.4: eta(x <| y) = (id (x) L_tl(x)) eta(y)
                    //                        + tau (id (x) L_tl(y)) eta(x)
                    rhs = Scalar(0);
                    for (int p = 0; p < n; ++p) {
                        const Scalar& d1 = eta.at(j, x, p);
                        if (!d1.is_zero()) rhs += d1 * tri_l.at(i, p, y);
                        const Scalar& d2 = eta.at(i, y, p);
                        if (!d2.is_zero()) rhs += d2 * tri_l.at(j, p, x);
                    }
                    expect_scalar(rep, "bialg.4", {i, j, x, y}, lhs_tl, rhs);

                    // bialg.5: eta(x <| y) = tau eta(x <| y)
                    Scalar sym;
                    for (int m = 0; m < n; ++m) {
                        const Scalar& cl = tri_l.at(i, j, m);
                        if (!cl.is_zero()) sym += cl * eta.at(m, y, x);
                    }
                    expect_scalar(rep, "bialg.5", {i, j, x, y}, lhs_tl, sym);

                    // bialg.6: theta(x o y) = (id (x) L_o(x)) theta(y)
                    //                         + (L_o(y) (x) id) theta(x)
                    rhs = Scalar(0);
                    for (int p = 0; p < n; ++p) {
                        const Scalar& d1 = theta.at(j, x, p);
                        if (!d1.is_zero()) rhs += d1 * circ.at(i, p, y);
                        const Scalar& d2 = theta.at(i, p, y);
                        if (!d2.is_zero()) rhs += d2 * circ.at(j, p, x);
                    }
                    expect_scalar(rep, "bialg.6", {i, j, x, y}, lhs_theta, rhs);

                    // bialg.7: theta(x o y) = theta(y o x)
                    Scalar rev;
                    for (int m = 0; m < n; ++m) {
                        const Scalar& cc = circ.at(j, i, m);
                        if (!cc.is_zero()) rev += cc * theta.at(m, x, y);
                    }
                    expect_scalar(rep, "bialg.7", {i, j, x, y}, lhs_theta, rev);
                }
        }
    });
}

Report check_sdpp_bialgebra(const BialgebraSpec& spec) {
    const Algebra& a = spec.algebra;
    const MulTensor& tri_r = a.mult("tri_r");
    const MulTensor& tri_l = a.mult("tri_l");
    const ComulTensor& vartheta = spec.coalgebra.comult("vartheta");
    const ComulTensor& theta = spec.coalgebra.comult("theta");
    if (spec.coalgebra.dim != a.dim)
        throw std::invalid_argument("check_sdpp_bialgebra: dimension mismatch");

    Report rep;
    rep.merge_prefixed("pre:algebra:",
                       checks::special_apre_perm(tri_r, tri_l, a.basis_names));
    rep.merge_prefixed("pre:coalgebra:",
                       check_coalgebra(spec.coalgebra, {"vartheta", "theta"},
                                       CoalgebraKind::SpecialAprePermCoalgebra));
    rep.merge(check_sdpp_compat(tri_r, tri_l, vartheta, theta, a.basis_names));
    return rep;
}

MulTensor matched_pair_product(const Algebra& a, const std::string& a_mult, const Algebra& b,
                               const std::string& b_mult, const std::vector<Matrix>& l_a,
                               const std::vector<Matrix>& r_a, const std::vector<Matrix>& l_b,
                               const std::vector<Matrix>& r_b) {
    const MulTensor& ta = a.mult(a_mult);
    const MulTensor& tb = b.mult(b_mult);
    const int n = a.dim, m = b.dim;
    MulTensor total(n + m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) total.at(i, j, k) = ta.at(i, j, k);
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q)
            for (int k = 0; k < m; ++k) total.at(n + p, n + q, n + k) = tb.at(p, q, k);
    // (x+a') o (y+b') = x o y + l_B(a')y + r_B(b')x + a' o b' + l_A(x)b' + r_A(y)a'
    for (int i = 0; i < n; ++i)
        for (int q = 0; q < m; ++q) {
            for (int p = 0; p < m; ++p) total.at(i, n + q, n + p) = l_a[i].at(p, q);
            for (int k = 0; k < n; ++k) total.at(i, n + q, k) = r_b[q].at(k, i);
        }
    for (int p = 0; p < m; ++p)
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) total.at(n + p, j, k) = l_b[p].at(k, j);
            for (int q = 0; q < m; ++q) total.at(n + p, j, n + q) = r_a[j].at(q, p);
        }
    return total;
}

Report check_matched_pair(const Algebra& a, const std::string& a_mult, const Algebra& b,
                          const std::string& b_mult, const std::vector<Matrix>& l_a,
                          const std::vector<Matrix>& r_a, const std::vector<Matrix>& l_b,
                          const std::vector<Matrix>& r_b) {
    const MulTensor& ta = a.mult(a_mult);
    const MulTensor& tb = b.mult(b_mult);
    const int n = a.dim, m = b.dim;

    Report rep;
    rep.merge_prefixed("pre:", checks::perm(ta, a.basis_names));
    rep.merge_prefixed("pre:", checks::perm(tb, b.basis_names));

    Representation rep_a{RepKind::Perm, m, l_a, r_a, std::nullopt};
    Representation rep_b{RepKind::Perm, n, l_b, r_b, std::nullopt};
    rep.merge_prefixed("rep.a:", check_rep(a, a_mult, rep_a));
    rep.merge_prefixed("rep.b:", check_rep(b, b_mult, rep_b));

    Report mp = basis_scan(n, [&](int i, Report& part) {
        for (int p = 0; p < m; ++p)
            for (int q = 0; q < m; ++q) {
                const Vec ab = prod(tb, p, q);                  // a o_B b
                const Vec la_x_ab = l_a[i].apply(ab);
                const Vec ra_x_ab = r_a[i].apply(ab);
                const Vec la_x_a = basis_vec(m, p), la_x_b = basis_vec(m, q);

                // mp.1: l_A(x)(a o b) = l_A(x)a o b + l_A(r_B(a)x)b
                Vec rhs = apply_right(tb, l_a[i].apply(la_x_a), q);
                rhs = vec_add(rhs, rep_of(l_a, r_b[p].apply(basis_vec(n, i))).apply(la_x_b));
                if (la_x_ab != rhs)
                    part.add("mp.1", {i, p, q}, render(la_x_ab, b.basis_names),
                             render(rhs, b.basis_names));

                // mp.2: l_A(x)(a o b) = r_A(x)a o b + l_A(l_B(a)x)b
                rhs = apply_right(tb, r_a[i].apply(la_x_a), q);
                rhs = vec_add(rhs, rep_of(l_a, l_b[p].apply(basis_vec(n, i))).apply(la_x_b));
                if (la_x_ab != rhs)
                    part.add("mp.2", {i, p, q}, render(la_x_ab, b.basis_names),
                             render(rhs, b.basis_names));

                // mp.3: l_A(x)(a o b) = a o l_A(x)b + r_A(r_B(b)x)a
                rhs = apply_left(tb, p, l_a[i].apply(la_x_b));
                rhs = vec_add(rhs, rep_of(r_a, r_b[q].apply(basis_vec(n, i))).apply(la_x_a));
                if (la_x_ab != rhs)
                    part.add("mp.3", {i, p, q}, render(la_x_ab, b.basis_names),
                             render(rhs, b.basis_names));

                // mp.4: r_A(x)(a o b) = a o r_A(x)b + r_A(l_B(b)x)a
                rhs = apply_left(tb, p, r_a[i].apply(la_x_b));
                rhs = vec_add(rhs, rep_of(r_a, l_b[q].apply(basis_vec(n, i))).apply(la_x_a));
                if (ra_x_ab != rhs)
                    part.add("mp.4", {i, p, q}, render(ra_x_ab, b.basis_names),
                             render(rhs, b.basis_names));

                // mp.5: r_A(x)(a o b) = r_A(x)(b o a)
                rhs = r_a[i].apply(prod(tb, q, p));
                if (ra_x_ab != rhs)
                    part.add("mp.5", {i, p, q}, render(ra_x_ab, b.basis_names),
                             render(rhs, b.basis_names));
            }
    });
    rep.merge(mp);

    Report mp2 = basis_scan(m, [&](int p, Report& part) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const Vec xy = prod(ta, i, j);                  // x o_A y
                const Vec lb_a_xy = l_b[p].apply(xy);
                const Vec rb_a_xy = r_b[p].apply(xy);

                // mp.6: l_B(a)(x o y) = l_B(a)x o y + l_B(r_A(x)a)y
                Vec rhs = apply_right(ta, l_b[p].apply(basis_vec(n, i)), j);
                rhs = vec_add(rhs, rep_of(l_b, r_a[i].apply(basis_vec(m, p)))
                                        .apply(basis_vec(n, j)));
                if (lb_a_xy != rhs)
                    part.add("mp.6", {p, i, j}, render(lb_a_xy, a.basis_names),
                             render(rhs, a.basis_names));

                // mp.7: l_B(a)(x o y) = r_B(a)x o y + l_B(l_A(x)a)y
                rhs = apply_right(ta, r_b[p].apply(basis_vec(n, i)), j);
                rhs = vec_add(rhs, rep_of(l_b, l_a[i].apply(basis_vec(m, p)))
                                        .apply(basis_vec(n, j)));
                if (lb_a_xy != rhs)
                    part.add("mp.7", {p, i, j}, render(lb_a_xy, a.basis_names),
                             render(rhs, a.basis_names));

                // mp.8: l_B(a)(x o y) = x o l_B(a)y + r_B(r_A(y)a)x
                rhs = apply_left(ta, i, l_b[p].apply(basis_vec(n, j)));
                rhs = vec_add(rhs, rep_of(r_b, r_a[j].apply(basis_vec(m, p)))
                                        .apply(basis_vec(n, i)));
                if (lb_a_xy != rhs)
                    part.add("mp.8", {p, i, j}, render(lb_a_xy, a.basis_names),
                             render(rhs, a.basis_names));

                // mp.9: r_B(a)(x o y) = x o r_B(a)y + r_B(l_A(y)a)x
                rhs = apply_left(ta, i, r_b[p].apply(basis_vec(n, j)));
                rhs = vec_add(rhs, rep_of(r_b, l_a[j].apply(basis_vec(m, p)))
                                        .apply(basis_vec(n, i)));
                if (rb_a_xy != rhs)
                    part.add("mp.9", {p, i, j}, render(rb_a_xy, a.basis_names),
                             render(rhs, a.basis_names));

                // mp.10: r_B(a)(x o y) = r_B(a)(y o x)
                rhs = r_b[p].apply(prod(ta, j, i));
                if (rb_a_xy != rhs)
                    part.add("mp.10", {p, i, j}, render(rb_a_xy, a.basis_names),
                             render(rhs, a.basis_names));
            }
    });
    rep.merge(mp2);

    const MulTensor doubled =
        matched_pair_product(a, a_mult, b, b_mult, l_a, r_a, l_b, r_b);
    Report doubled_perm = checks::perm(doubled);
    if (rep.passed != doubled_perm.passed)
        throw std::logic_error(
            "check_matched_pair: equation-level verdict and doubled-product verdict disagree");
    rep.merge_prefixed("doubled:", doubled_perm);
    return rep;
}

}  // namespace permlab
