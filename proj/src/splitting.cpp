#include "permlab/splitting.hpp"

#include <stdexcept>

#include "permlab/parallel.hpp"

namespace permlab {

namespace {

Vec column(const Matrix& m, int j) {
    Vec v(m.rows());
    for (int i = 0; i < m.rows(); ++i) v[i] = m.at(i, j);
    return v;
}

void require_perm_rep(const Representation& rep) {
    if (rep.kind != RepKind::Perm)
        throw std::invalid_argument("dual a-O-operator: representation must be of perm kind");
}

}  // namespace

AprePerm AprePerm::zero(int dim) {
    AprePerm s;
    s.dim = dim;
    s.tri_r = MulTensor(dim);
    s.tri_l = MulTensor(dim);
    return s;
}

MulTensor associated_perm(const AprePerm& s) { return tensor_add(s.tri_r, s.tri_l); }

MulTensor bullet_product(const AprePerm& s) {
    return tensor_add(s.tri_r, tensor_swap_args(s.tri_l));
}

bool is_special(const AprePerm& s) {
    return checks::special_apre_perm(s.tri_r, s.tri_l, s.basis_names).passed;
}

Report check_apre_perm(const AprePerm& s) {
    Report axioms = checks::apre_perm(s.tri_r, s.tri_l, s.basis_names);

    // Independent route: (L*_bullet, -R*_tri_l) must be a perm
    // representation of the associated product on the dual space.
    const MulTensor circ = associated_perm(s);
    const MulTensor bullet = bullet_product(s);
    Algebra wrap = make_algebra(s.dim, s.basis_names, {{"circ", circ}});
    Representation dual;
    dual.kind = RepKind::Perm;
    dual.carrier_dim = s.dim;
    for (int i = 0; i < s.dim; ++i) {
        dual.left.push_back(left_mult_matrix(bullet, i).transpose());
        dual.right.push_back(-right_mult_matrix(s.tri_l, i).transpose());
    }
    Report dual_route = checks::perm(circ, s.basis_names);
    dual_route.merge(check_rep(wrap, "circ", dual));

    if (axioms.passed != dual_route.passed)
        throw std::logic_error("check_apre_perm: axiom route and dual-representation route "
                               "disagree");

    Report out = axioms;
    out.merge_prefixed("dualrep:", dual_route);
    return out;
}

Report check_quadratic(const QuadraticSDPP& q) {
    Report rep = checks::special_apre_perm(q.sdpp.tri_r, q.sdpp.tri_l, q.sdpp.basis_names);
    Algebra wrap = make_algebra(q.sdpp.dim, q.sdpp.basis_names,
                                {{"tri_r", q.sdpp.tri_r}, {"tri_l", q.sdpp.tri_l}});
    rep.merge(check_form(wrap, {}, q.B, FormProperty::Symmetric));
    rep.merge(check_form(wrap, {}, q.B, FormProperty::Nondegenerate));
    rep.merge(check_form(wrap, {"tri_r", "tri_l"}, q.B, FormProperty::SDPPInvariant));
    return rep;
}

AprePerm split_from_form(const Algebra& a, const std::string& circ, const BilinearForm& B) {
    const MulTensor& t = a.mult(circ);
    if (B.dim() != a.dim) throw std::invalid_argument("split_from_form: form shape mismatch");

    Report perm_ok = checks::perm(t, a.basis_names);
    if (!perm_ok.passed)
        throw precondition_error("split_from_form: \"" + circ + "\" is not perm", perm_ok);
    auto ginv_t = invert(B.gram.transpose());
    if (!ginv_t) {
        Report rep;
        rep.add("form.nondegenerate", {}, "det = 0", "nonzero");
        throw precondition_error("split_from_form: singular form", rep);
    }
    Report inv1 = check_form(a, {circ}, B, FormProperty::LeftInv1);
    if (!inv1.passed)
        throw precondition_error("split_from_form: form fails extended left-invariance", inv1);

    const int n = a.dim;
    AprePerm s;
    s.dim = n;
    s.basis_names = a.basis_names;
    s.tri_r = MulTensor(n);
    s.tri_l = MulTensor(n);
    for (int i = 0; i < n; ++i) {
        const Vec ei = basis_vec(n, i);
        for (int j = 0; j < n; ++j) {
            const Vec ej = basis_vec(n, j);
            Vec rhs_l(n), rhs_r(n);
            for (int k = 0; k < n; ++k) {
                rhs_l[k] = -B.eval(ei, prod(t, k, j));
                rhs_r[k] = B.eval(ej, vec_add(prod(t, i, k), prod(t, k, i)));
            }
            const Vec tl = ginv_t->apply(rhs_l);
            const Vec tr = ginv_t->apply(rhs_r);
            for (int k = 0; k < n; ++k) {
                s.tri_l.at(i, j, k) = tl[k];
                s.tri_r.at(i, j, k) = tr[k];
            }
        }
    }
    if (tensor_add(s.tri_r, s.tri_l) != t)
        throw std::logic_error("split_from_form: splitting does not recompose the product");
    return s;
}

AprePerm split_from_admissible(const Algebra& a, const std::string& dot,
                               const LinearOperator& P, const LinearOperator& Q) {
    Report adm = check_admissible(a, dot, P, Q);
    if (!adm.passed)
        throw precondition_error("split_from_admissible: pair is not admissible", adm);

    const MulTensor& t = a.mult(dot);
    const int n = a.dim;
    AprePerm s;
    s.dim = n;
    s.basis_names = a.basis_names;
    s.tri_r = MulTensor(n);
    s.tri_l = MulTensor(n);
    for (int i = 0; i < n; ++i) {
        const Vec pi = P.apply(basis_vec(n, i));
        for (int j = 0; j < n; ++j) {
            const Vec head = apply_right(t, pi, j);      // P(x).y
            const Vec tail = Q.apply(prod(t, i, j));     // Q(x.y)
            for (int k = 0; k < n; ++k) {
                s.tri_r.at(i, j, k) = head[k] + tail[k];
                s.tri_l.at(i, j, k) = -tail[k];
            }
        }
    }
    return s;
}

namespace {

void require_special(const AprePerm& s, const char* what) {
    Report rep = checks::special_apre_perm(s.tri_r, s.tri_l, s.basis_names);
    if (!rep.passed)
        throw precondition_error(std::string(what) + ": splitting is not special", rep);
}

}  // namespace

MulTensor induced_pre_lie(const AprePerm& s) {
    require_special(s, "induced_pre_lie");
    return s.tri_r;
}

MulTensor induced_anti_pre_lie(const AprePerm& s) {
    require_special(s, "induced_anti_pre_lie");
    return tensor_add(s.tri_r, tensor_scaled(s.tri_l, Scalar(2)));
}

namespace {

struct DualAOContext {
    int n = 0, m = 0;
    std::vector<Vec> t_col;         // T e*_i in A
    std::vector<Matrix> lr_star;    // ((l+r)(T e*_i))^T on V*
    std::vector<Matrix> r_star;     // (r(T e*_i))^T on V*

    DualAOContext(const Algebra& a, const DualAOOperator& op) {
        n = a.dim;
        m = op.rep.carrier_dim;
        if (op.T.rows() != n || op.T.cols() != m)
            throw std::invalid_argument("dual a-O-operator: T shape mismatch");
        for (int i = 0; i < m; ++i) {
            Vec ti = column(op.T, i);
            Matrix l = rep_of(op.rep.left, ti);
            Matrix r = rep_of(op.rep.right, ti);
            lr_star.push_back((l + r).transpose());
            r_star.push_back(r.transpose());
            t_col.push_back(std::move(ti));
        }
    }

    // (l*+r*)(T e*_i) e*_j - r*(T e*_j) e*_i, the induced dual product.
    Vec dual_prod(int i, int j) const {
        return vec_sub(column(lr_star[i], j), column(r_star[j], i));
    }
};

}  // namespace

DualAOVerdict check_dual_aO(const Algebra& a, const std::string& circ,
                            const DualAOOperator& op) {
    require_perm_rep(op.rep);
    Report rep_ok = check_rep(a, circ, op.rep);
    if (!rep_ok.passed)
        throw precondition_error("check_dual_aO: representation fails its axioms", rep_ok);

    const MulTensor& t = a.mult(circ);
    const DualAOContext ctx(a, op);

    DualAOVerdict v;
    v.main = basis_scan(ctx.m, [&](int i, Report& part) {
        for (int j = 0; j < ctx.m; ++j) {
            const Vec lhs = apply(t, ctx.t_col[i], ctx.t_col[j]);
            const Vec rhs = op.T.apply(ctx.dual_prod(i, j));
            if (lhs != rhs)
                part.add("daop.main", {i, j}, render(lhs, a.basis_names),
                         render(rhs, a.basis_names));
        }
    });

    MulTensor dual_circ(ctx.m);
    for (int i = 0; i < ctx.m; ++i)
        for (int j = 0; j < ctx.m; ++j) {
            const Vec p = ctx.dual_prod(i, j);
            for (int k = 0; k < ctx.m; ++k) dual_circ.at(i, j, k) = p[k];
        }
    v.strong.merge_prefixed("daop.strong:", checks::perm(dual_circ));

    v.special = basis_scan(ctx.m, [&](int i, Report& part) {
        for (int j = 0; j < ctx.m; ++j) {
            const Vec lhs = column(ctx.r_star[i], j);
            const Vec rhs = column(ctx.r_star[j], i);
            if (lhs != rhs) part.add("daop.special", {i, j}, render(lhs, {}), render(rhs, {}));
        }
    });
    return v;
}

AprePerm induced_apre_perm_on_dual(const Algebra& a, const std::string& circ,
                                   const DualAOOperator& op) {
    DualAOVerdict v = check_dual_aO(a, circ, op);
    if (!v.main.passed)
        throw precondition_error("induced_apre_perm_on_dual: defining equation fails", v.main);
    if (!v.strong.passed)
        throw precondition_error("induced_apre_perm_on_dual: operator is not strong", v.strong);

    const DualAOContext ctx(a, op);
    AprePerm s;
    s.dim = ctx.m;
    s.tri_r = MulTensor(ctx.m);
    s.tri_l = MulTensor(ctx.m);
    for (int i = 0; i < ctx.m; ++i)
        for (int j = 0; j < ctx.m; ++j)
            for (int k = 0; k < ctx.m; ++k) {
                s.tri_r.at(i, j, k) = ctx.lr_star[i].at(k, j);
                s.tri_l.at(i, j, k) = -ctx.r_star[j].at(k, i);
            }
    return s;
}

AOVerdict check_aO(const Algebra& a, const std::string& circ, const Matrix& T,
                   const Representation& rep) {
    require_perm_rep(rep);
    Report rep_ok = check_rep(a, circ, rep);
    if (!rep_ok.passed)
        throw precondition_error("check_aO: representation fails its axioms", rep_ok);
    const int n = a.dim, m = rep.carrier_dim;
    if (T.rows() != n || T.cols() != m)
        throw std::invalid_argument("check_aO: T shape mismatch");

    const MulTensor& t = a.mult(circ);
    std::vector<Vec> t_col(m);
    std::vector<Matrix> tilde_l(m), tilde_r(m);
    for (int i = 0; i < m; ++i) {
        t_col[i] = column(T, i);
        const Matrix l = rep_of(rep.left, t_col[i]);
        const Matrix r = rep_of(rep.right, t_col[i]);
        tilde_l[i] = l.scaled(Scalar(2)) - r;  // (2l - r)(Tu)
        tilde_r[i] = r - l;                    // (r - l)(Tu)
    }
    auto carrier_prod = [&](int i, int j) {
        return vec_add(column(tilde_l[i], j), column(tilde_r[j], i));
    };

    AOVerdict v;
    v.main = basis_scan(m, [&](int i, Report& part) {
        for (int j = 0; j < m; ++j) {
            const Vec lhs = apply(t, t_col[i], t_col[j]);
            const Vec rhs = T.apply(carrier_prod(i, j));
            if (lhs != rhs)
                part.add("aop.main", {i, j}, render(lhs, a.basis_names),
                         render(rhs, a.basis_names));
        }
    });

    MulTensor carrier_circ(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const Vec p = carrier_prod(i, j);
            for (int k = 0; k < m; ++k) carrier_circ.at(i, j, k) = p[k];
        }
    v.strong.merge_prefixed("aop.strong:", checks::perm(carrier_circ));
    return v;
}

}  // namespace permlab
