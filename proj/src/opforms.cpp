#include "permlab/opforms.hpp"

#include <stdexcept>

#include "permlab/parallel.hpp"

namespace permlab {

namespace {

void require_operator_shape(const Matrix& m, int dim, const char* what) {
    if (m.rows() != dim || m.cols() != dim)
        throw std::invalid_argument(std::string(what) + ": operator shape mismatch");
}

std::vector<Vec> images_of_basis(const Matrix& m) {
    std::vector<Vec> out(m.cols());
    for (int i = 0; i < m.cols(); ++i) out[i] = m.apply(basis_vec(m.cols(), i));
    return out;
}

void expect_scalar(Report& rep, const char* id, std::vector<int> witness, const Scalar& lhs,
                   const Scalar& rhs) {
    if (lhs != rhs) rep.add(id, std::move(witness), lhs.str(), rhs.str());
}

void expect_vec(Report& rep, const char* id, std::vector<int> witness, const Vec& lhs,
                const Vec& rhs, const std::vector<std::string>& names) {
    if (lhs != rhs) rep.add(id, std::move(witness), render(lhs, names), render(rhs, names));
}

void expect_matrix(Report& rep, const char* id, std::vector<int> witness, const Matrix& lhs,
                   const Matrix& rhs) {
    if (lhs != rhs) rep.add(id, std::move(witness), lhs.str(), rhs.str());
}

}  // namespace

Scalar BilinearForm::eval(const Vec& x, const Vec& y) const {
    if (int(x.size()) != dim() || int(y.size()) != dim())
        throw std::invalid_argument("BilinearForm: dimension mismatch");
    Scalar r;
    for (int i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim(); ++j) {
            const Scalar& g = gram.at(i, j);
            if (!g.is_zero() && !y[j].is_zero()) r += x[i] * g * y[j];
        }
    }
    return r;
}

int form_property_arity(FormProperty prop) {
    switch (prop) {
        case FormProperty::Symmetric:
        case FormProperty::Nondegenerate: return 0;
        case FormProperty::SDPPInvariant: return 2;
        default: return 1;
    }
}

Report check_averaging(const Algebra& a, const std::string& dot, const LinearOperator& P) {
    const MulTensor& t = a.mult(dot);
    require_operator_shape(P, a.dim, "check_averaging");
    Report rep;
    rep.merge_prefixed("pre:", checks::commutative(t, a.basis_names));
    rep.merge(checks::averaging_law(t, P, a.basis_names));
    return rep;
}

Report check_admissible(const Algebra& a, const std::string& dot, const LinearOperator& P,
                        const LinearOperator& Q) {
    const MulTensor& t = a.mult(dot);
    require_operator_shape(P, a.dim, "check_admissible");
    require_operator_shape(Q, a.dim, "check_admissible");
    Report rep;
    rep.merge_prefixed("pre:", checks::commutative(t, a.basis_names));
    rep.merge_prefixed("pre:", checks::averaging_law(t, P, a.basis_names));

    const std::vector<Vec> p_of = images_of_basis(P);
    const std::vector<Vec> q_of = images_of_basis(Q);
    rep.merge(basis_scan(a.dim, [&](int i, Report& part) {
        for (int j = 0; j < a.dim; ++j) {
            const Vec lhs = apply(t, p_of[i], q_of[j]);                  // P(x).Q(y)
            const Vec mid = Q.apply(apply_right(t, p_of[i], j));        // Q(P(x).y)
            const Vec rhs = Q.apply(apply_left(t, i, q_of[j]));         // Q(x.Q(y))
            expect_vec(part, "adm.1", {i, j}, lhs, mid, a.basis_names);
            expect_vec(part, "adm.2", {i, j}, mid, rhs, a.basis_names);
        }
    }));
    return rep;
}

LinearOperator adjoint_wrt_form(const LinearOperator& P, const BilinearForm& B) {
    if (P.rows() != B.dim() || !P.square())
        throw std::invalid_argument("adjoint_wrt_form: shape mismatch");
    auto g_inv = invert(B.gram);
    if (!g_inv) {
        Report rep;
        rep.add("form.nondegenerate", {}, "det = 0", "nonzero");
        throw precondition_error("adjoint_wrt_form: singular form", rep);
    }
    // B(Px, y) = B(x, P^y)  <=>  P^T G = G P^  <=>  P^ = G^-1 P^T G.
    Matrix adj = (*g_inv) * P.transpose() * B.gram;
    for (int i = 0; i < P.rows(); ++i)
        for (int j = 0; j < P.cols(); ++j) {
            Vec lhs = P.apply(basis_vec(P.rows(), i));
            Vec rhs = adj.apply(basis_vec(P.rows(), j));
            if (B.eval(lhs, basis_vec(P.rows(), j)) != B.eval(basis_vec(P.rows(), i), rhs))
                throw std::logic_error("adjoint_wrt_form: post-check failed");
        }
    return adj;
}

Report check_form(const Algebra& a, const std::vector<std::string>& mult_names,
                  const BilinearForm& B, FormProperty prop) {
    if (B.dim() != a.dim || !B.gram.square())
        throw std::invalid_argument("check_form: form shape mismatch");
    if (int(mult_names.size()) != form_property_arity(prop))
        throw std::invalid_argument("check_form: property takes " +
                                    std::to_string(form_property_arity(prop)) +
                                    " multiplication(s), got " +
                                    std::to_string(mult_names.size()));
    const auto& G = B.gram;
    const int n = a.dim;

    switch (prop) {
        case FormProperty::Symmetric:
            return basis_scan(n, [&](int i, Report& rep) {
                for (int j = 0; j < n; ++j)
                    expect_scalar(rep, "form.symmetric", {i, j}, G.at(i, j), G.at(j, i));
            });
        case FormProperty::Nondegenerate: {
            Report rep;
            if (determinant(G).is_zero()) rep.add("form.nondegenerate", {}, "det = 0", "nonzero");
            return rep;
        }
        case FormProperty::SDPPInvariant: {
            const MulTensor& tr = a.mult(mult_names[0]);
            const MulTensor& tl = a.mult(mult_names[1]);
            const MulTensor circ = tensor_add(tr, tl);
            return basis_scan(n, [&](int i, Report& rep) {
                const Vec ei = basis_vec(n, i);
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k)
                        expect_scalar(rep, "form.sdpp-invariant", {i, j, k},
                                      B.eval(prod(tl, i, j), basis_vec(n, k)),
                                      -B.eval(ei, prod(circ, k, j)));
            });
        }
        default: break;
    }

    const MulTensor& t = a.mult(mult_names[0]);
    switch (prop) {
        case FormProperty::FrobeniusInvariant:
            return basis_scan(n, [&](int i, Report& rep) {
                const Vec ei = basis_vec(n, i);
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k)
                        expect_scalar(rep, "form.frobenius", {i, j, k},
                                      B.eval(prod(t, i, j), basis_vec(n, k)),
                                      B.eval(ei, prod(t, j, k)));
            });
        case FormProperty::LeftInvariant:
            return basis_scan(n, [&](int i, Report& rep) {
                for (int j = 0; j < n; ++j) {
                    const Vec ej = basis_vec(n, j);
                    for (int k = 0; k < n; ++k)
                        expect_scalar(rep, "form.left-invariant", {i, j, k},
                                      B.eval(prod(t, i, j), basis_vec(n, k)),
                                      B.eval(ej, prod(t, i, k)));
                }
            });
        case FormProperty::LeftInv1:
            return basis_scan(n, [&](int i, Report& rep) {
                const Vec ei = basis_vec(n, i);
                for (int j = 0; j < n; ++j) {
                    const Vec ej = basis_vec(n, j);
                    for (int k = 0; k < n; ++k) {
                        const Scalar lhs = B.eval(prod(t, i, j), basis_vec(n, k));
                        const Scalar rhs =
                            B.eval(ej, vec_add(prod(t, i, k), prod(t, k, i))) -
                            B.eval(ei, prod(t, k, j));
                        expect_scalar(rep, "form.left-invariant-ext", {i, j, k}, lhs, rhs);
                    }
                }
            });
        case FormProperty::DoubleLeftInvariant:
            return basis_scan(n, [&](int i, Report& rep) {
                for (int j = 0; j < n; ++j) {
                    const Vec ej = basis_vec(n, j);
                    for (int k = 0; k < n; ++k) {
                        const Scalar mid = B.eval(ej, prod(t, i, k));
                        expect_scalar(rep, "form.double-left-invariant.a", {i, j, k},
                                      B.eval(prod(t, i, j), basis_vec(n, k)), mid);
                        expect_scalar(rep, "form.double-left-invariant.b", {i, j, k}, mid,
                                      B.eval(prod(t, i, k), ej));
                    }
                }
            });
        case FormProperty::Commutative2Cocycle: {
            Report rep = basis_scan(n, [&](int i, Report& part) {
                for (int j = 0; j < n; ++j)
                    expect_scalar(part, "form.2-cocycle.symmetric", {i, j}, G.at(i, j),
                                  G.at(j, i));
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k) {
                        Scalar cyc = B.eval(prod(t, i, j), basis_vec(n, k)) +
                                     B.eval(prod(t, j, k), basis_vec(n, i)) +
                                     B.eval(prod(t, k, i), basis_vec(n, j));
                        expect_scalar(part, "form.2-cocycle", {i, j, k}, cyc, Scalar(0));
                    }
            });
            return rep;
        }
        default: break;
    }
    throw std::logic_error("check_form: unreachable");
}

Matrix rep_of(const std::vector<Matrix>& maps, const Vec& x) {
    if (maps.empty()) return Matrix();
    Matrix m(maps[0].rows(), maps[0].cols());
    for (size_t i = 0; i < maps.size(); ++i) {
        if (x[i].is_zero()) continue;
        m = m + maps[i].scaled(x[i]);
    }
    return m;
}

namespace {

void require_rep_shape(const Algebra& a, const Representation& rep) {
    auto check_family = [&](const std::vector<Matrix>& fam, const char* what) {
        if (int(fam.size()) != a.dim)
            throw std::invalid_argument(std::string("check_rep: ") + what +
                                        " family length does not match algebra dimension");
        for (const auto& m : fam)
            if (m.rows() != rep.carrier_dim || m.cols() != rep.carrier_dim)
                throw std::invalid_argument(std::string("check_rep: ") + what +
                                            " matrix shape does not match carrier");
    };
    check_family(rep.left, "left");
    if (rep.kind == RepKind::Perm) {
        if (rep.right.empty() && a.dim > 0)
            throw std::invalid_argument("check_rep: perm representation without right maps");
        check_family(rep.right, "right");
    }
    if (rep.kind == RepKind::AveragingCommAssoc) {
        if (!rep.alpha)
            throw std::invalid_argument("check_rep: averaging representation without alpha");
        if (rep.alpha->rows() != rep.carrier_dim || rep.alpha->cols() != rep.carrier_dim)
            throw std::invalid_argument("check_rep: alpha shape does not match carrier");
    }
}

}  // namespace

Report check_rep(const Algebra& a, const std::string& mult_name, const Representation& rep,
                 const std::optional<Matrix>& P) {
    const MulTensor& t = a.mult(mult_name);
    require_rep_shape(a, rep);

    if (rep.kind == RepKind::Perm) {
        return basis_scan(a.dim, [&](int i, Report& part) {
            for (int j = 0; j < a.dim; ++j) {
                const Vec ij = prod(t, i, j);
                const Matrix l_ij = rep_of(rep.left, ij);
                const Matrix ll = rep.left[i] * rep.left[j];
                expect_matrix(part, "rep.perm.l1", {i, j}, l_ij, ll);
                expect_matrix(part, "rep.perm.l2", {i, j}, ll, rep.left[j] * rep.left[i]);
                const Matrix r_ij = rep_of(rep.right, ij);
                const Matrix rr = rep.right[j] * rep.right[i];
                expect_matrix(part, "rep.perm.r1", {i, j}, r_ij, rr);
                const Matrix rl = rep.right[j] * rep.left[i];
                expect_matrix(part, "rep.perm.r2", {i, j}, rr, rl);
                expect_matrix(part, "rep.perm.r3", {i, j}, rl, rep.left[i] * rep.right[j]);
            }
        });
    }

    Report rep_out = basis_scan(a.dim, [&](int i, Report& part) {
        for (int j = 0; j < a.dim; ++j)
            expect_matrix(part, "rep.alg", {i, j}, rep_of(rep.left, prod(t, i, j)),
                          rep.left[i] * rep.left[j]);
    });

    if (rep.kind == RepKind::AveragingCommAssoc) {
        if (!P) throw std::invalid_argument("check_rep: averaging kind needs the operator P");
        require_operator_shape(*P, a.dim, "check_rep");
        const Matrix& alpha = *rep.alpha;
        rep_out.merge(basis_scan(a.dim, [&](int i, Report& part) {
            const Matrix mu_pi = rep_of(rep.left, P->apply(basis_vec(a.dim, i)));
            const Matrix lhs = mu_pi * alpha;
            const Matrix mid = alpha * mu_pi;
            expect_matrix(part, "rep.avg.a", {i}, lhs, mid);
            expect_matrix(part, "rep.avg.b", {i}, mid, alpha * rep.left[i] * alpha);
        }));
    }
    return rep_out;
}

Representation dualize_rep(const Algebra& a, const std::string& mult_name,
                           const Representation& rep, const std::optional<Matrix>& P) {
    Report ok = check_rep(a, mult_name, rep, P);
    if (!ok.passed) throw precondition_error("dualize_rep: input fails its axioms", ok);

    Representation dual;
    dual.kind = rep.kind;
    dual.carrier_dim = rep.carrier_dim;
    for (const auto& m : rep.left) dual.left.push_back(m.transpose());
    if (rep.kind == RepKind::Perm)
        for (int i = 0; i < a.dim; ++i)
            dual.right.push_back(rep.left[i].transpose() - rep.right[i].transpose());
    if (rep.kind == RepKind::AveragingCommAssoc) dual.alpha = rep.alpha->transpose();
    return dual;
}

Algebra semidirect(const Algebra& a, const std::string& mult_name, const Representation& rep,
                   const std::optional<Matrix>& P, std::vector<std::string> carrier_names) {
    Report ok = check_rep(a, mult_name, rep, P);
    if (!ok.passed) throw precondition_error("semidirect: representation fails its axioms", ok);

    const MulTensor& t = a.mult(mult_name);
    const int n = a.dim, m = rep.carrier_dim;
    MulTensor total(n + m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) total.at(i, j, k) = t.at(i, j, k);

    if (rep.kind == RepKind::Perm) {
        // (x+u) o (y+v) = x o y + l(x)v + r(y)u
        for (int i = 0; i < n; ++i)
            for (int q = 0; q < m; ++q)
                for (int p = 0; p < m; ++p) {
                    total.at(i, n + q, n + p) = rep.left[i].at(p, q);
                    total.at(n + q, i, n + p) = rep.right[i].at(p, q);
                }
    } else {
        // (x+u) . (y+v) = x.y + mu(x)v + mu(y)u
        for (int i = 0; i < n; ++i)
            for (int q = 0; q < m; ++q)
                for (int p = 0; p < m; ++p) {
                    total.at(i, n + q, n + p) = rep.left[i].at(p, q);
                    total.at(n + q, i, n + p) = rep.left[i].at(p, q);
                }
    }

    std::vector<std::string> names = a.basis_names;
    if (carrier_names.empty())
        for (int q = 0; q < m; ++q) carrier_names.push_back("v" + std::to_string(q + 1));
    if (int(carrier_names.size()) != m)
        throw std::invalid_argument("semidirect: carrier name count mismatch");
    names.insert(names.end(), carrier_names.begin(), carrier_names.end());
    return make_algebra(n + m, std::move(names), {{mult_name, std::move(total)}});
}

namespace {

std::vector<std::pair<const Matrix*, const Matrix*>> intertwine_pairs(
    const Representation& r1, const Representation& r2) {
    std::vector<std::pair<const Matrix*, const Matrix*>> pairs;
    for (size_t i = 0; i < r1.left.size(); ++i) pairs.push_back({&r1.left[i], &r2.left[i]});
    if (r1.kind == RepKind::Perm)
        for (size_t i = 0; i < r1.right.size(); ++i)
            pairs.push_back({&r1.right[i], &r2.right[i]});
    if (r1.kind == RepKind::AveragingCommAssoc) pairs.push_back({&*r1.alpha, &*r2.alpha});
    return pairs;
}

bool intertwines(const Matrix& phi,
                 const std::vector<std::pair<const Matrix*, const Matrix*>>& pairs) {
    for (const auto& [a1, a2] : pairs)
        if (phi * *a1 != *a2 * phi) return false;
    return true;
}

Matrix combine(const std::vector<Vec>& basis, const std::vector<Scalar>& coeff, int m) {
    Matrix phi(m, m);
    for (size_t s = 0; s < basis.size(); ++s) {
        if (coeff[s].is_zero()) continue;
        for (int p = 0; p < m; ++p)
            for (int q = 0; q < m; ++q) phi.at(p, q) += basis[s][size_t(p) * m + q] * coeff[s];
    }
    return phi;
}

}  // namespace

EquivResult find_rep_equivalence(const Representation& r1, const Representation& r2) {
    if (r1.kind != r2.kind)
        throw std::invalid_argument("find_rep_equivalence: representation kinds differ");
    if (r1.carrier_dim != r2.carrier_dim || r1.left.size() != r2.left.size())
        throw std::invalid_argument("find_rep_equivalence: carrier dimensions differ");
    const int m = r1.carrier_dim;
    const auto pairs = intertwine_pairs(r1, r2);

    // Rows: entries of phi*A1 - A2*phi per pair; unknowns: phi entries.
    Matrix sys(int(pairs.size()) * m * m, m * m);
    int row = 0;
    for (const auto& [a1, a2] : pairs) {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                for (int q = 0; q < m; ++q) sys.at(row, i * m + q) += a1->at(q, j);
                for (int p = 0; p < m; ++p) sys.at(row, p * m + j) -= a2->at(i, p);
                ++row;
            }
    }
    LinearSolution sol = solve_linear(sys, Vec(sys.rows()));
    const auto& space = sol.nullspace;
    const int d = int(space.size());

    EquivResult result;
    auto accept = [&](Matrix phi) -> bool {
        if (!invert(phi)) return false;
        if (!intertwines(phi, pairs))
            throw std::logic_error("find_rep_equivalence: solver produced a non-intertwiner");
        result.status = EquivStatus::Found;
        result.phi = std::move(phi);
        return true;
    };

    if (d == 0) {
        result.status = EquivStatus::AbsentProved;
        return result;
    }
    for (int s = 0; s < d; ++s) {
        std::vector<Scalar> coeff(d);
        coeff[s] = Scalar(1);
        if (accept(combine(space, coeff, m))) return result;
    }

    if (d <= 3) {
        // det restricted to the span has degree <= m in each coordinate, so
        // vanishing on the grid {0..m}^d proves it is the zero polynomial;
        // any nonzero point is itself an invertible combination.
        std::vector<Scalar> coeff(d);
        std::vector<int> idx(d, 0);
        while (true) {
            for (int s = 0; s < d; ++s) coeff[s] = Scalar(idx[s]);
            if (accept(combine(space, coeff, m))) return result;
            int s = 0;
            while (s < d && ++idx[s] > m) idx[s++] = 0;
            if (s == d) break;
        }
        result.status = EquivStatus::AbsentProved;
        return result;
    }

    // Deterministic small-integer sweep for larger spaces.
    constexpr int kMaxTrials = 10000;
    std::vector<int> idx(d, 0);
    for (int trial = 0; trial < kMaxTrials; ++trial) {
        std::vector<Scalar> coeff(d);
        for (int s = 0; s < d; ++s) coeff[s] = Scalar(idx[s] - 3);  // range -3..3
        bool all_zero = true;
        for (int s = 0; s < d; ++s) all_zero = all_zero && idx[s] == 3;
        if (!all_zero && accept(combine(space, coeff, m))) return result;
        int s = 0;
        while (s < d && ++idx[s] > 6) idx[s++] = 0;
        if (s == d) break;
    }
    result.status = EquivStatus::Inconclusive;
    return result;
}

Matrix form_to_map(const BilinearForm& B) { return B.gram.transpose(); }

BilinearForm map_to_form(const Matrix& m) {
    if (!m.square()) throw std::invalid_argument("map_to_form: matrix not square");
    return BilinearForm{m.transpose()};
}

Representation comm_adjoint_rep(const Algebra& a, const std::string& dot,
                                const std::optional<Matrix>& alpha) {
    const MulTensor& t = a.mult(dot);
    Representation rep;
    rep.kind = alpha ? RepKind::AveragingCommAssoc : RepKind::CommAssoc;
    rep.carrier_dim = a.dim;
    for (int i = 0; i < a.dim; ++i) rep.left.push_back(left_mult_matrix(t, i));
    rep.alpha = alpha;
    return rep;
}

Representation perm_adjoint_rep(const Algebra& a, const std::string& circ) {
    const MulTensor& t = a.mult(circ);
    Representation rep;
    rep.kind = RepKind::Perm;
    rep.carrier_dim = a.dim;
    for (int i = 0; i < a.dim; ++i) {
        rep.left.push_back(left_mult_matrix(t, i));
        rep.right.push_back(right_mult_matrix(t, i));
    }
    return rep;
}

}  // namespace permlab
