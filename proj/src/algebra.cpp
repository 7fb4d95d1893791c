#include "permlab/algebra.hpp"

#include <stdexcept>

#include "permlab/parallel.hpp"

namespace permlab {

const MulTensor& Algebra::mult(const std::string& name) const {
    auto it = mults.find(name);
    if (it == mults.end())
        throw std::invalid_argument("unknown multiplication \"" + name + "\"");
    return it->second;
}

Algebra make_algebra(int dim, std::vector<std::string> basis_names,
                     std::map<std::string, MulTensor> mults) {
    if (dim < 0) throw std::invalid_argument("make_algebra: negative dimension");
    if (basis_names.empty())
        for (int i = 0; i < dim; ++i) basis_names.push_back("e" + std::to_string(i + 1));
    if (int(basis_names.size()) != dim)
        throw std::invalid_argument("make_algebra: basis name count does not match dimension");
    for (const auto& [name, t] : mults)
        if (t.dim != dim)
            throw std::invalid_argument("make_algebra: multiplication \"" + name +
                                        "\" has mismatched dimension");
    return Algebra{dim, std::move(basis_names), std::move(mults)};
}

int identity_arity(IdentityKind kind) {
    return (kind == IdentityKind::AprePerm || kind == IdentityKind::SpecialAprePerm) ? 2 : 1;
}

std::string identity_kind_name(IdentityKind kind) {
    switch (kind) {
        case IdentityKind::Commutative: return "commutative";
        case IdentityKind::Associative: return "associative";
        case IdentityKind::Perm: return "perm";
        case IdentityKind::Lie: return "lie";
        case IdentityKind::PreLie: return "pre-lie";
        case IdentityKind::AntiPreLie: return "anti-pre-lie";
        case IdentityKind::AprePerm: return "apre-perm";
        case IdentityKind::SpecialAprePerm: return "special-apre-perm";
    }
    return "?";
}

namespace checks {

namespace {

void expect(Report& rep, const char* id, std::vector<int> witness, const Vec& lhs,
            const Vec& rhs, const std::vector<std::string>& names) {
    if (lhs != rhs) rep.add(id, std::move(witness), render(lhs, names), render(rhs, names));
}

void expect_zero(Report& rep, const char* id, std::vector<int> witness, const Vec& v,
                 const std::vector<std::string>& names) {
    if (!vec_is_zero(v)) rep.add(id, std::move(witness), render(v, names), "0");
}

}  // namespace

Report commutative(const MulTensor& t, const std::vector<std::string>& names) {
    return basis_scan(t.dim, [&](int i, Report& rep) {
        for (int j = 0; j < t.dim; ++j)
            expect(rep, "comm", {i, j}, prod(t, i, j), prod(t, j, i), names);
    });
}

Report associative(const MulTensor& t, const std::vector<std::string>& names) {
    return basis_scan(t.dim, [&](int i, Report& rep) {
        for (int j = 0; j < t.dim; ++j) {
            const Vec ij = prod(t, i, j);
            for (int k = 0; k < t.dim; ++k)
                expect(rep, "assoc", {i, j, k}, apply_right(t, ij, k),
                       apply_left(t, i, prod(t, j, k)), names);
        }
    });
}

Report perm(const MulTensor& t, const std::vector<std::string>& names) {
    return basis_scan(t.dim, [&](int i, Report& rep) {
        for (int j = 0; j < t.dim; ++j) {
            const Vec ij = prod(t, i, j);
            const Vec ji = prod(t, j, i);
            for (int k = 0; k < t.dim; ++k) {
                const Vec assoc = apply_right(t, ij, k);
                expect(rep, "perm.assoc", {i, j, k}, apply_left(t, i, prod(t, j, k)), assoc,
                       names);
                expect(rep, "perm.left-comm", {i, j, k}, assoc, apply_right(t, ji, k), names);
            }
        }
    });
}

Report lie(const MulTensor& t, const std::vector<std::string>& names) {
    return basis_scan(t.dim, [&](int i, Report& rep) {
        for (int j = 0; j < t.dim; ++j) {
            expect(rep, "lie.antisym", {i, j}, prod(t, i, j), vec_neg(prod(t, j, i)), names);
            const Vec ij = prod(t, i, j);
            for (int k = 0; k < t.dim; ++k) {
                Vec cyc = apply_right(t, ij, k);
                cyc = vec_add(cyc, apply_right(t, prod(t, j, k), i));
                cyc = vec_add(cyc, apply_right(t, prod(t, k, i), j));
                expect_zero(rep, "lie.jacobi", {i, j, k}, cyc, names);
            }
        }
    });
}

Report pre_lie(const MulTensor& t, const std::vector<std::string>& names) {
    return basis_scan(t.dim, [&](int i, Report& rep) {
        for (int j = 0; j < t.dim; ++j) {
            const Vec ij = prod(t, i, j);
            const Vec ji = prod(t, j, i);
            for (int k = 0; k < t.dim; ++k) {
                const Vec lhs =
                    vec_sub(apply_right(t, ij, k), apply_left(t, i, prod(t, j, k)));
                const Vec rhs =
                    vec_sub(apply_right(t, ji, k), apply_left(t, j, prod(t, i, k)));
                expect(rep, "pre-lie", {i, j, k}, lhs, rhs, names);
            }
        }
    });
}

Report anti_pre_lie(const MulTensor& t, const std::vector<std::string>& names) {
    const MulTensor bracket = tensor_sub(t, tensor_swap_args(t));
    Report rep = basis_scan(t.dim, [&](int i, Report& part) {
        for (int j = 0; j < t.dim; ++j)
            for (int k = 0; k < t.dim; ++k) {
                const Vec lhs = vec_sub(apply_left(t, i, prod(t, j, k)),
                                        apply_left(t, j, prod(t, i, k)));
                const Vec rhs = apply_right(t, prod(bracket, j, i), k);
                expect(part, "anti-pre-lie.main", {i, j, k}, lhs, rhs, names);
            }
    });
    Report jac = lie(bracket, names);
    Report out;
    out.merge_prefixed("anti-pre-lie.", jac);
    out.merge(rep);
    return out;
}

Report apre_perm(const MulTensor& tri_r, const MulTensor& tri_l,
                 const std::vector<std::string>& names) {
    if (tri_r.dim != tri_l.dim)
        throw std::invalid_argument("apre_perm: dimension mismatch between tri_r and tri_l");
    const MulTensor circ = tensor_add(tri_r, tri_l);
    return basis_scan(circ.dim, [&](int i, Report& rep) {
        const int n = circ.dim;
        for (int j = 0; j < n; ++j) {
            const Vec circ_ij = prod(circ, i, j);
            const Vec circ_ji = prod(circ, j, i);
            const Vec mix_ji = vec_add(prod(tri_r, j, i), prod(tri_l, i, j));  // y|>x + x<|y
            for (int k = 0; k < n; ++k) {
                const Vec circ_jk = prod(circ, j, k);
                const Vec assoc = apply_right(circ, circ_ij, k);
                expect(rep, "apre.1a", {i, j, k}, apply_left(circ, i, circ_jk), assoc, names);
                expect(rep, "apre.1b", {i, j, k}, assoc, apply_right(circ, circ_ji, k), names);

                const Vec tl_jk = prod(tri_l, j, k);
                Vec mix = apply_left(tri_r, i, tl_jk);
                mix = vec_add(mix, vec_scaled(apply_right(tri_l, tl_jk, i), Scalar(2)));
                expect_zero(rep, "apre.2", {i, j, k}, mix, names);

                const Vec left = apply_left(tri_l, i, circ_jk);
                const Vec mid = vec_neg(apply_right(tri_l, prod(tri_l, i, k), j));
                expect(rep, "apre.3a", {i, j, k}, left, mid, names);
                expect(rep, "apre.3b", {i, j, k}, mid, apply_right(tri_l, mix_ji, k), names);

                const Vec r_lhs = apply_right(tri_r, circ_ij, k);
                const Vec r_mid = apply_left(
                    tri_r, j, vec_add(prod(tri_r, i, k), prod(tri_l, k, i)));
                expect(rep, "apre.4a", {i, j, k}, r_lhs, r_mid, names);
                const Vec rjk = prod(tri_r, j, k);
                const Vec r_rhs =
                    vec_add(apply_left(tri_r, i, rjk), apply_right(tri_l, rjk, i));
                expect(rep, "apre.4b", {i, j, k}, r_mid, r_rhs, names);
            }
        }
    });
}

Report special_apre_perm(const MulTensor& tri_r, const MulTensor& tri_l,
                         const std::vector<std::string>& names) {
    if (tri_r.dim != tri_l.dim)
        throw std::invalid_argument("special_apre_perm: dimension mismatch");
    const MulTensor circ = tensor_add(tri_r, tri_l);
    Report out = basis_scan(circ.dim, [&](int i, Report& rep) {
        const int n = circ.dim;
        for (int j = 0; j < n; ++j)
            expect(rep, "sapp.comm", {i, j}, prod(tri_l, i, j), prod(tri_l, j, i), names);
        for (int j = 0; j < n; ++j) {
            const Vec circ_ij = prod(circ, i, j);
            const Vec circ_ji = prod(circ, j, i);
            for (int k = 0; k < n; ++k) {
                const Vec assoc = apply_right(circ, circ_ij, k);
                expect(rep, "sapp.perm.assoc", {i, j, k}, apply_left(circ, i, prod(circ, j, k)),
                       assoc, names);
                expect(rep, "sapp.perm.left-comm", {i, j, k}, assoc,
                       apply_right(circ, circ_ji, k), names);

                const Vec tl_jk = prod(tri_l, j, k);
                const Vec mid = apply_left(circ, i, tl_jk);
                expect(rep, "sapp.absorb.a", {i, j, k}, apply_right(tri_l, circ_ij, k), mid,
                       names);
                expect(rep, "sapp.absorb.b", {i, j, k}, mid,
                       vec_neg(apply_left(tri_l, i, tl_jk)), names);
            }
        }
    });
    return out;
}

Report averaging_law(const MulTensor& dot, const Matrix& P,
                     const std::vector<std::string>& names) {
    if (P.rows() != dot.dim || P.cols() != dot.dim)
        throw std::invalid_argument("averaging_law: operator shape mismatch");
    std::vector<Vec> p_of(dot.dim);
    for (int i = 0; i < dot.dim; ++i) p_of[i] = P.apply(basis_vec(dot.dim, i));
    return basis_scan(dot.dim, [&](int i, Report& rep) {
        for (int j = 0; j < dot.dim; ++j) {
            const Vec lhs = apply(dot, p_of[i], p_of[j]);
            const Vec rhs = P.apply(apply_right(dot, p_of[i], j));
            if (lhs != rhs) rep.add("averaging", {i, j}, render(lhs, names), render(rhs, names));
        }
    });
}

}  // namespace checks

Report check_identity(const Algebra& a, const std::vector<std::string>& mult_names,
                      IdentityKind kind) {
    const int arity = identity_arity(kind);
    if (int(mult_names.size()) != arity)
        throw std::invalid_argument("check_identity: " + identity_kind_name(kind) + " takes " +
                                    std::to_string(arity) + " multiplication(s), got " +
                                    std::to_string(mult_names.size()));
    if (arity == 2) {
        const MulTensor& tr = a.mult(mult_names[0]);
        const MulTensor& tl = a.mult(mult_names[1]);
        return kind == IdentityKind::AprePerm ? checks::apre_perm(tr, tl, a.basis_names)
                                              : checks::special_apre_perm(tr, tl, a.basis_names);
    }
    const MulTensor& t = a.mult(mult_names[0]);
    switch (kind) {
        case IdentityKind::Commutative: return checks::commutative(t, a.basis_names);
        case IdentityKind::Associative: return checks::associative(t, a.basis_names);
        case IdentityKind::Perm: return checks::perm(t, a.basis_names);
        case IdentityKind::Lie: return checks::lie(t, a.basis_names);
        case IdentityKind::PreLie: return checks::pre_lie(t, a.basis_names);
        case IdentityKind::AntiPreLie: return checks::anti_pre_lie(t, a.basis_names);
        default: break;
    }
    throw std::logic_error("check_identity: unreachable");
}

Vec multiply(const Algebra& a, const std::string& mult_name, const Vec& x, const Vec& y) {
    if (int(x.size()) != a.dim || int(y.size()) != a.dim)
        throw std::invalid_argument("multiply: vector length does not match dimension");
    return apply(a.mult(mult_name), x, y);
}

MulTensor sub_adjacent_lie(const Algebra& a, const std::string& perm_mult) {
    const MulTensor& t = a.mult(perm_mult);
    Report rep = checks::perm(t, a.basis_names);
    if (!rep.passed)
        throw precondition_error("sub_adjacent_lie: \"" + perm_mult + "\" is not perm", rep);
    return tensor_sub(t, tensor_swap_args(t));
}

MulTensor induce_perm(const Algebra& a, const std::string& dot, const Matrix& P) {
    const MulTensor& t = a.mult(dot);
    Report comm = checks::commutative(t, a.basis_names);
    if (!comm.passed)
        throw precondition_error("induce_perm: \"" + dot + "\" is not commutative", comm);
    Report assoc = checks::associative(t, a.basis_names);
    if (!assoc.passed)
        throw precondition_error("induce_perm: \"" + dot + "\" is not associative", assoc);
    Report avg = checks::averaging_law(t, P, a.basis_names);
    if (!avg.passed)
        throw precondition_error("induce_perm: operator fails the averaging law", avg);

    MulTensor circ(a.dim);
    for (int i = 0; i < a.dim; ++i) {
        const Vec pi = P.apply(basis_vec(a.dim, i));
        for (int j = 0; j < a.dim; ++j) {
            const Vec v = apply_right(t, pi, j);
            for (int k = 0; k < a.dim; ++k) circ.at(i, j, k) = v[k];
        }
    }
    return circ;
}

std::pair<MulTensor, MulTensor> combine_split(const Algebra& a, const std::string& tri_r,
                                              const std::string& tri_l) {
    const MulTensor& tr = a.mult(tri_r);
    const MulTensor& tl = a.mult(tri_l);
    return {tensor_add(tr, tl), tensor_add(tr, tensor_swap_args(tl))};
}

}  // namespace permlab
