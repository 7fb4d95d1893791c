#ifndef PERMLAB_SPLITTING_HPP
#define PERMLAB_SPLITTING_HPP

#include <string>
#include <vector>

#include "permlab/opforms.hpp"

namespace permlab {

/// Two-multiplication splitting (tri_r = |>, tri_l = <|) of a perm
/// product. Validity is checked, never assumed; see check_apre_perm.
struct AprePerm {
    int dim = 0;
    MulTensor tri_r, tri_l;
    std::vector<std::string> basis_names;

    static AprePerm zero(int dim);
};

/// tri_r + tri_l.
MulTensor associated_perm(const AprePerm& s);
/// x tri_r y + y tri_l x.
MulTensor bullet_product(const AprePerm& s);

/// True iff tri_l is commutative and the special axioms hold. Always
/// computed from the tables, never trusted from input.
bool is_special(const AprePerm& s);

/// Verifies the defining axioms and, independently, that the dual pair
/// (L*_bullet, -R*_tri_l) acts as a perm representation of the associated
/// product on the dual space. The two routes must agree; both verdicts
/// are merged into the returned report (dual route under "dualrep:").
Report check_apre_perm(const AprePerm& s);

/// Special splitting plus an invariant form: B symmetric, nondegenerate,
/// and B(x <| y, z) = -B(x, z o y).
struct QuadraticSDPP {
    AprePerm sdpp;
    BilinearForm B;
};

Report check_quadratic(const QuadraticSDPP& q);

/// Splits a perm product through a nondegenerate form satisfying the
/// extended left-invariance law: B(x|>y, z) = B(y, x o z + z o x) and
/// B(x<|y, z) = -B(x, z o y). Preconditions are checked and throw.
AprePerm split_from_form(const Algebra& a, const std::string& circ, const BilinearForm& B);

/// x |> y = P(x).y + Q(x.y), x <| y = -Q(x.y) from an admissible pair;
/// the result is always special.
AprePerm split_from_admissible(const Algebra& a, const std::string& dot,
                               const LinearOperator& P, const LinearOperator& Q);

/// For a special splitting, tri_r itself is pre-Lie and
/// tri_r + 2 tri_l is anti-pre-Lie.
MulTensor induced_pre_lie(const AprePerm& s);
MulTensor induced_anti_pre_lie(const AprePerm& s);

/// T : V* -> A against a perm representation (l, r, V); columns of T are
/// indexed by the dual basis of the carrier.
struct DualAOOperator {
    Matrix T;
    Representation rep;  // perm kind
};

struct DualAOVerdict {
    Report main;     ///< the defining equation
    Report strong;   ///< the induced dual product is perm
    Report special;  ///< r*(Tu*)v* is symmetric in u*, v*
};

DualAOVerdict check_dual_aO(const Algebra& a, const std::string& circ, const DualAOOperator& op);

/// u* |> v* = (l*+r*)(Tu*)v*, u* <| v* = -r*(Tv*)u* on V*; requires the
/// operator to check out and be strong.
AprePerm induced_apre_perm_on_dual(const Algebra& a, const std::string& circ,
                                   const DualAOOperator& op);

struct AOVerdict {
    Report main;
    Report strong;
};

/// The non-dual variant: T : V -> A with
/// (Tu) o (Tv) = T((2l-r)(Tu)v + (r-l)(Tv)u).
AOVerdict check_aO(const Algebra& a, const std::string& circ, const Matrix& T,
                   const Representation& rep);

}  // namespace permlab

#endif
