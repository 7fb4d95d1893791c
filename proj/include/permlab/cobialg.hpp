#ifndef PERMLAB_COBIALG_HPP
#define PERMLAB_COBIALG_HPP

#include <map>
#include <string>
#include <vector>

#include "permlab/opforms.hpp"

namespace permlab {

/// A vector space with named comultiplications A -> A (x) A.
struct Coalgebra {
    int dim = 0;
    std::vector<std::string> basis_names;
    std::map<std::string, ComulTensor> comults;

    const ComulTensor& comult(const std::string& name) const;
};

Coalgebra make_coalgebra(int dim, std::vector<std::string> basis_names,
                         std::map<std::string, ComulTensor> comults);

/// Linear dual across the canonical pairing: the comultiplication on A
/// dual to a multiplication on A*, and back. Round trip is the identity.
ComulTensor dualize(const MulTensor& mult);
MulTensor dualize(const ComulTensor& comult);

enum class CoalgebraKind { CocommCoassoc, PermCoalgebra, SpecialAprePermCoalgebra };

/// names: (delta) or (eta) or (vartheta, theta) per kind. For the special
/// apre-perm kind the perm-coalgebra axioms run on eta = vartheta + theta.
Report check_coalgebra(const Coalgebra& c, const std::vector<std::string>& names,
                       CoalgebraKind kind);

enum class BialgebraKind { CommCocommInfinitesimal, AveragingCommCocomm, SpecialAprePerm };

/// An algebra and a coalgebra on the same space, optionally with
/// operators, tied by the compatibility axioms of the kind. Name
/// conventions: multiplication "dot" (or "tri_r"/"tri_l"), comultiplication
/// "delta" (or "vartheta"/"theta"), operators "P" and "Q".
struct BialgebraSpec {
    Algebra algebra;
    Coalgebra coalgebra;
    std::map<std::string, Matrix> operators;
    BialgebraKind kind = BialgebraKind::CommCocommInfinitesimal;

    const Matrix& op(const std::string& name) const;
};

/// delta(x.y) = (L(x) (x) id) delta(y) + (id (x) L(y)) delta(x), with the
/// algebra/coalgebra preconditions layered under "pre:".
Report check_inf_bialgebra(const BialgebraSpec& spec);

/// The two operator-coalgebra compatibility axioms alone
/// ((Q(x)Q)D = (Q(x)id)D.Q and the three-way P variant).
Report check_averaging_compat(const ComulTensor& delta, const Matrix& P, const Matrix& Q);

/// Full averaging bialgebra verdict: infinitesimal bialgebra and
/// admissibility preconditions layered under "pre:", then the
/// operator-coalgebra axioms.
Report check_averaging_bialgebra(const BialgebraSpec& spec);

/// The seven compatibility axioms of a special apre-perm bialgebra,
/// with eta = vartheta + theta derived internally.
Report check_sdpp_compat(const MulTensor& tri_r, const MulTensor& tri_l,
                         const ComulTensor& vartheta, const ComulTensor& theta,
                         const std::vector<std::string>& names = {});

Report check_sdpp_bialgebra(const BialgebraSpec& spec);

/// Matched-pair conditions for two perm algebras acting on each other.
/// Verifies both action pairs as representations, the ten compatibility
/// equations, and independently that the doubled product is perm; the two
/// verdicts must agree and both are merged into the report.
Report check_matched_pair(const Algebra& a, const std::string& a_mult, const Algebra& b,
                          const std::string& b_mult, const std::vector<Matrix>& l_a,
                          const std::vector<Matrix>& r_a, const std::vector<Matrix>& l_b,
                          const std::vector<Matrix>& r_b);

/// The doubled perm product on A + B defined by the matched-pair actions.
MulTensor matched_pair_product(const Algebra& a, const std::string& a_mult, const Algebra& b,
                               const std::string& b_mult, const std::vector<Matrix>& l_a,
                               const std::vector<Matrix>& r_a, const std::vector<Matrix>& l_b,
                               const std::vector<Matrix>& r_b);

}  // namespace permlab

#endif
