#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lca/report.hpp"
#include "lca/table.hpp"

namespace lca {

// Finite-rank Lie conformal algebra given by structure constants: the value
// of [e_i lambda e_j] as a rank-n module element over C[d, l1].
struct LieConformalAlgebra {
    std::string name;
    std::vector<std::string> basis;
    MultiTable structure; // dims {n, n}, target rank n

    int rank() const { return static_cast<int>(basis.size()); }
    const ModElem &entry(int i, int j) const { return structure.at({i, j}); }
    ModElem &entry(int i, int j) { return structure.at({i, j}); }

    static LieConformalAlgebra make(std::string name,
                                    std::vector<std::string> basis);

    bool operator==(const LieConformalAlgebra &o) const {
        return basis == o.basis && structure == o.structure;
    }
};

// Associative conformal algebra; structure holds a lambda b.
struct AssocConformalAlgebra {
    std::string name;
    std::vector<std::string> basis;
    MultiTable structure;

    int rank() const { return static_cast<int>(basis.size()); }
};

std::string tuple_name(const LieConformalAlgebra &A, const std::vector<int> &t);

// [x lambda y] with lambda = l_slot; sesquilinear extension of the structure
// constants. Throws on rank mismatch.
ModElem bracket_eval(const LieConformalAlgebra &A, const ModElem &x,
                     const ModElem &y, int slot);
// Same with explicit slot polynomials for both arguments.
ModElem bracket_eval(const LieConformalAlgebra &A, const ModElem &x,
                     const Poly &sx, const ModElem &y, const Poly &sy);

Report check_skew(const LieConformalAlgebra &A);
Report check_jacobi(const LieConformalAlgebra &A);

// Averaging identity of an operator P: P([P(x) lambda y]) = [P(x) lambda P(y)].
// When two_sided is set, also tests P([x lambda P(y)]) = [P(x) lambda P(y)],
// the analogue of the second identity for ordinary Lie algebras; it is not
// part of the default pass criterion.
Report check_averaging(const LieConformalAlgebra &A, const ConformalMap &P,
                       bool two_sided = false);

// [x lambda y]_P = [P(x) lambda y]. The result is returned as stated; run
// check_skew / check_jacobi on it to diagnose.
LieConformalAlgebra induced_bracket(const LieConformalAlgebra &A,
                                    const ConformalMap &P);

Report check_assoc(const AssocConformalAlgebra &B);
// [x lambda y] = x a_lambda y - y a_{-d-lambda} x.
LieConformalAlgebra commutator_lca(const AssocConformalAlgebra &B);

// Direct sum of n copies with the twisted bracket whose i-th place is
// [x1 lambda a_i] - [a1_{-d-lambda} x_i] for i >= 2. Returns the algebra and
// the operators P, P_2, ..., P_n.
std::pair<LieConformalAlgebra, std::vector<ConformalMap>>
direct_sum_example(const LieConformalAlgebra &A, int n);

// Builtins.
LieConformalAlgebra virasoro();
LieConformalAlgebra cur_sl2();
LieConformalAlgebra abelian(int n);

} // namespace lca
