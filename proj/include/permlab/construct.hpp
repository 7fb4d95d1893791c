#ifndef PERMLAB_CONSTRUCT_HPP
#define PERMLAB_CONSTRUCT_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "permlab/cobialg.hpp"
#include "permlab/splitting.hpp"

namespace permlab {

/// An algebra structure on A + A* with basis (e_1..e_n, e_1*..e_n*) and
/// the canonical pairing form. Builders attach their verdicts instead of
/// refusing to build, so broken inputs still produce inspectable objects.
struct DoubledAlgebra {
    Algebra total;            ///< product named "dot" or "circ" per builder
    BilinearForm B_d;         ///< canonical pairing, block antidiagonal
    Algebra base;             ///< the A block with its own multiplications
    MulTensor dual_mult;      ///< the A* block product in the dual basis
    std::string provenance;
    std::map<std::string, Report> verdicts;

    int base_dim() const { return base.dim; }
};

/// The canonical pairing form on A + A*.
BilinearForm canonical_pairing(int base_dim);

/// Commutative double: A and A* as subalgebras with the mixed products
/// given by the coadjoint actions of each side. Attaches the Frobenius
/// verdicts and the equivalent infinitesimal-bialgebra verdict; the two
/// must agree.
DoubledAlgebra double_comm(const Algebra& a, const std::string& dot,
                           const MulTensor& dual_mult);

/// Is P + Q* an averaging operator on the double? Checked directly on the
/// total algebra and, independently, through the admissibility laws of
/// both blocks; the verdicts must agree and are merged.
Report check_avg_double(const DoubledAlgebra& d, const Matrix& P, const Matrix& Qstar);

/// Perm product on A + A* built from two special splittings via the
/// coadjoint-type mixed actions. Attaches "perm" and the form verdicts.
DoubledAlgebra manin_perm(const AprePerm& a_sdpp, const AprePerm& astar_sdpp);

struct ManinSdpp {
    AprePerm pair;       ///< (tri_r_d, tri_l_d) on A + A*
    BilinearForm B_d;
    std::map<std::string, Report> verdicts;
};

/// The splitting-level double of two special splittings.
ManinSdpp manin_sdpp(const AprePerm& a_sdpp, const AprePerm& astar_sdpp);

/// Splits an averaging double into the doubled special splitting
/// x |> y = (P+Q*)(x).y + (Q+P*)(x.y), x <| y = -(Q+P*)(x.y).
AprePerm avg_double_to_sdpp_manin(const DoubledAlgebra& d, const Matrix& P,
                                  const Matrix& Qstar);

/// Commutator bracket of a perm double, with the 2-cocycle and block
/// closure verdicts.
std::pair<MulTensor, Report> lie_manin(const DoubledAlgebra& d);

/// End-to-end induction: from an averaging structure (dot, delta, P, Q)
/// to the special splitting x |> y = P(x).y + Q(x.y), x <| y = -Q(x.y)
/// with comultiplications vartheta = (Q (x) id) delta + delta P and
/// theta = -delta P. The averaging-bialgebra axioms are a checked
/// precondition.
BialgebraSpec induce_sdpp_bialgebra(const Algebra& a, const ComulTensor& delta, const Matrix& P,
                                    const Matrix& Q);

/// A worked structure shipped with the library; every fixture passes its
/// advertised checks on construction.
struct Fixture {
    std::string name;
    Algebra algebra;
    std::map<std::string, Matrix> operators;
    std::map<std::string, BilinearForm> forms;
    std::map<std::string, ComulTensor> comults;
};

/// Known names: "ex4" (the 4-dimensional Frobenius algebra with the
/// rank-2 projection averaging operator), "tensor_square" (its 16-dim
/// tensor square with the flip-symmetrizer), "semidirect_projection"
/// (the 8-dim coadjoint semidirect sum with the projection onto A).
Fixture fixture(const std::string& name);

std::vector<std::string> fixture_names();

}  // namespace permlab

#endif
