#ifndef PERMLAB_ALGEBRA_HPP
#define PERMLAB_ALGEBRA_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "permlab/report.hpp"
#include "permlab/tensor.hpp"

namespace permlab {

/// A finite-dimensional vector space carrying any number of named binary
/// multiplications given by exact structure constants. One value routinely
/// holds several related products on the same space ("dot", "circ",
/// "tri_r", "tri_l", "bracket", ...).
struct Algebra {
    int dim = 0;
    std::vector<std::string> basis_names;
    std::map<std::string, MulTensor> mults;

    const MulTensor& mult(const std::string& name) const;
    bool has_mult(const std::string& name) const { return mults.count(name) != 0; }
};

/// Builds an algebra and validates dimensions. Basis names default to
/// e1..en when empty.
Algebra make_algebra(int dim, std::vector<std::string> basis_names,
                     std::map<std::string, MulTensor> mults);

/// Families of defining multilinear identities. Each kind expands to a
/// finite list of equations over 2-3 arguments, evaluated on all basis
/// tuples (multilinearity makes this equivalent to all-vector
/// quantification). The equation ids appearing in reports are documented
/// in the README.
enum class IdentityKind {
    Commutative,
    Associative,
    Perm,
    Lie,
    PreLie,
    AntiPreLie,
    AprePerm,         // two multiplications (tri_r, tri_l)
    SpecialAprePerm,  // two multiplications (tri_r, tri_l)
};

/// Number of multiplications the kind takes (1 or 2).
int identity_arity(IdentityKind kind);
std::string identity_kind_name(IdentityKind kind);

/// Evaluates every defining equation of the kind on all basis tuples.
Report check_identity(const Algebra& a, const std::vector<std::string>& mult_names,
                      IdentityKind kind);

/// Bilinear contraction of two coordinate vectors against a named product.
Vec multiply(const Algebra& a, const std::string& mult_name, const Vec& x, const Vec& y);

/// Commutator bracket of a perm product; the input is checked and a
/// precondition_error carrying the report is thrown when it is not perm.
MulTensor sub_adjacent_lie(const Algebra& a, const std::string& perm_mult);

/// Perm product x o y := P(x) . y induced by an averaging operator on a
/// commutative associative multiplication. Both preconditions are checked.
MulTensor induce_perm(const Algebra& a, const std::string& dot, const Matrix& P);

/// circ = tri_r + tri_l and bullet(x,y) = x tri_r y + y tri_l x.
std::pair<MulTensor, MulTensor> combine_split(const Algebra& a, const std::string& tri_r,
                                              const std::string& tri_l);

/// Tensor-level checkers shared by the higher modules. `names` is used
/// only to render witnesses and may be empty.
namespace checks {

Report commutative(const MulTensor& t, const std::vector<std::string>& names = {});
Report associative(const MulTensor& t, const std::vector<std::string>& names = {});
Report perm(const MulTensor& t, const std::vector<std::string>& names = {});
Report lie(const MulTensor& t, const std::vector<std::string>& names = {});
Report pre_lie(const MulTensor& t, const std::vector<std::string>& names = {});
Report anti_pre_lie(const MulTensor& t, const std::vector<std::string>& names = {});
Report apre_perm(const MulTensor& tri_r, const MulTensor& tri_l,
                 const std::vector<std::string>& names = {});
Report special_apre_perm(const MulTensor& tri_r, const MulTensor& tri_l,
                         const std::vector<std::string>& names = {});

/// The raw averaging-operator law P(x) . P(y) = P(P(x) . y) on basis pairs.
Report averaging_law(const MulTensor& dot, const Matrix& P,
                     const std::vector<std::string>& names = {});

}  // namespace checks

}  // namespace permlab

#endif
