#ifndef PERMLAB_OPFORMS_HPP
#define PERMLAB_OPFORMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "permlab/algebra.hpp"
#include "permlab/linalg.hpp"

namespace permlab {

/// Square matrix acting on the algebra in its fixed basis.
using LinearOperator = Matrix;

/// Bilinear form with B(e_i, e_j) = gram(i, j).
struct BilinearForm {
    Matrix gram;

    int dim() const { return gram.rows(); }
    Scalar eval(const Vec& x, const Vec& y) const;
    const Scalar& eval(int i, int j) const { return gram.at(i, j); }
};

enum class FormProperty {
    Symmetric,
    Nondegenerate,
    FrobeniusInvariant,    // B(x.y, z) = B(x, y.z)
    LeftInvariant,         // B(x o y, z) = B(y, x o z)
    LeftInv1,              // B(x o y, z) = B(y, x o z + z o x) - B(x, z o y)
    DoubleLeftInvariant,   // B(x o y, z) = B(y, x o z) = B(x o z, y)
    Commutative2Cocycle,   // symmetric, cyclic sum over the bracket vanishes
    SDPPInvariant,         // B(x <| y, z) = -B(x, z o y) with o = |> + <|
};

/// Multiplications the property references (0, 1 or 2).
int form_property_arity(FormProperty prop);

enum class RepKind { CommAssoc, AveragingCommAssoc, Perm };

/// Action maps of a representation on a carrier space. `left` holds mu
/// (or l) indexed by the algebra basis; `right` holds r for the perm
/// kind; `alpha` is the carrier operator of the averaging kind.
struct Representation {
    RepKind kind = RepKind::CommAssoc;
    int carrier_dim = 0;
    std::vector<Matrix> left;
    std::vector<Matrix> right;
    std::optional<Matrix> alpha;
};

/// mu(x) for an arbitrary element, by linearity.
Matrix rep_of(const std::vector<Matrix>& maps, const Vec& x);

/// P(x) . P(y) = P(P(x) . y) on all basis pairs; the commutativity of the
/// multiplication is a checked precondition reported under "pre:".
Report check_averaging(const Algebra& a, const std::string& dot, const LinearOperator& P);

/// P(x) . Q(y) = Q(P(x) . y) = Q(x . Q(y)); a failing averaging law for P
/// is reported under "pre:averaging", distinct from "adm.*" violations.
Report check_admissible(const Algebra& a, const std::string& dot, const LinearOperator& P,
                        const LinearOperator& Q);

/// Adjoint of P with respect to a nondegenerate form: B(Px, y) = B(x, P^ y).
/// Throws precondition_error when the form is singular.
LinearOperator adjoint_wrt_form(const LinearOperator& P, const BilinearForm& B);

Report check_form(const Algebra& a, const std::vector<std::string>& mult_names,
                  const BilinearForm& B, FormProperty prop);

/// Axioms of the representation kind on all basis x carrier-basis tuples.
/// The averaging kind references the ambient operator P.
Report check_rep(const Algebra& a, const std::string& mult_name, const Representation& rep,
                 const std::optional<Matrix>& P = std::nullopt);

/// CommAssoc: (mu*, alpha*); Perm: (l*, l* - r*). The input is re-checked.
Representation dualize_rep(const Algebra& a, const std::string& mult_name,
                           const Representation& rep,
                           const std::optional<Matrix>& P = std::nullopt);

/// Semidirect-sum algebra on A + V. The commutative kinds use
/// (x+u).(y+v) = x.y + mu(x)v + mu(y)u, the perm kind
/// (x+u)o(y+v) = x o y + l(x)v + r(y)u.
Algebra semidirect(const Algebra& a, const std::string& mult_name, const Representation& rep,
                   const std::optional<Matrix>& P = std::nullopt,
                   std::vector<std::string> carrier_names = {});

enum class EquivStatus { Found, AbsentProved, Inconclusive };

struct EquivResult {
    EquivStatus status = EquivStatus::Inconclusive;
    std::optional<Matrix> phi;  ///< invertible intertwiner when Found
};

/// Searches for an invertible intertwiner between two representations of
/// the same kind on equal carriers. The intertwiner space is computed
/// exactly; an invertible element is sought by testing the basis, then a
/// deterministic sequence of small-integer combinations, and for spaces
/// of at most 3 parameters the determinant polynomial is decided exactly,
/// so "AbsentProved" is a proof.
EquivResult find_rep_equivalence(const Representation& r1, const Representation& r2);

/// Matrix of the map u -> B(u, -) in the dual basis, and its inverse.
Matrix form_to_map(const BilinearForm& B);
BilinearForm map_to_form(const Matrix& m);

/// Adjoint representations used throughout: (L., alpha) on A itself and
/// (L, R) of a perm product.
Representation comm_adjoint_rep(const Algebra& a, const std::string& dot,
                                const std::optional<Matrix>& alpha = std::nullopt);
Representation perm_adjoint_rep(const Algebra& a, const std::string& circ);

}  // namespace permlab

#endif
