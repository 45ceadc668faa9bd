#pragma once

#include "qtgc/gqc.hpp"
#include "qtgc/lemma.hpp"

namespace qtgc {

// Plain left module over one component H_degree: one action matrix per basis
// element of the component.
struct RepModule {
    long degree = 0;
    long dim = 0;
    std::vector<LinMap> action;
};

// H_lambda acting on itself by left multiplication.
RepModule regular_module(const QuasiTuraevCoalgebra& h, long lambda);
// Same carrier, action twisted through the crossing: x acts as phi_{g^{-1}}(x).
RepModule conjugate_module(const QuasiTuraevCoalgebra& h, long g, const RepModule& m);
// Carrier X⊗Y with the action routed through Delta.
RepModule tensor_module(const QuasiTuraevCoalgebra& h, const RepModule& x, const RepModule& y);

// Sum of action matrices weighted by the element coordinates.
LinMap act_elem(const Field& f, const std::vector<LinMap>& action, const Vec& elem);

Report validate_rep(const QuasiTuraevCoalgebra& h, const RepModule& m);

// Module with one coaction per group element, subject to the twisted
// coassociativity and crossed-compatibility laws. The coaction at lambda is
// stored as a map V -> V⊗H_lambda (rows indexed flat (v, h)).
struct YDModule {
    std::string name;
    long degree = 0;
    long dim = 0;
    std::vector<LinMap> action;   // per basis element of H_degree
    std::vector<LinMap> coaction; // per lambda

    RepModule as_rep() const { return {degree, dim, action}; }
    const LinMap& coaction_at(long lambda) const {
        return coaction[static_cast<std::size_t>(lambda)];
    }

    bool operator==(const YDModule& rhs) const {
        return degree == rhs.degree && dim == rhs.dim && action == rhs.action &&
               coaction == rhs.coaction;
    }
};

// The tensor unit: the ground field with the counit action and unit coactions.
YDModule yd_unit(const QuasiTuraevCoalgebra& h);

// Full validator: representation axioms, counitarity, twisted coassociativity
// over every (lambda1, lambda2), crossed compatibility over every beta.
Report validate_yd(const QuasiTuraevCoalgebra& h, const YDModule& m);

// Independently coded validator for the trivial-associator degeneration:
// plain multiplicative coassociativity instead of the twisted law. Used to
// cross-check that the two validators agree on trivial-associator instances.
Report validate_yd_classical(const QuasiTuraevCoalgebra& h, const YDModule& m);

// Tensor product of a degree-a and a degree-b module (degree ab). The result
// is re-validated; a failure raises CheckFailed.
YDModule yd_tensor(const QuasiTuraevCoalgebra& h, const YDModule& m, const YDModule& n);

// Conjugation by g: degree becomes g a g^{-1}, action twisted through the
// crossing, coaction reindexed by conjugation.
YDModule yd_conjugate(const QuasiTuraevCoalgebra& h, long g, const YDModule& m);

// Half-braiding of a YD module against an arbitrary module X over one
// component: the map V⊗X -> X⊗V assembled from the lemma elements, the
// inverse associator and the antipode. Rows are indexed flat (x, v), columns
// flat (v, x).
LinMap half_braiding(const QuasiTuraevCoalgebra& h, const YDModule& v, const RepModule& x);
// Candidate inverse: (x⊗v) -> v_(0,0) ⊗ v_(1,lambda)·x.
LinMap half_braiding_inv(const QuasiTuraevCoalgebra& h, const YDModule& v, const RepModule& x);

struct Braiding {
    LinMap c;     // V⊗W -> W⊗V (target carries the conjugated module structure)
    LinMap c_inv; // two-sided inverse, verified
};

// Braiding of two YD modules; throws BraidingNotInvertible if the candidate
// inverse fails on either side.
Braiding yd_braiding(const QuasiTuraevCoalgebra& h, const YDModule& m, const YDModule& n);

// f: M -> N (same degree): H-linearity plus compatibility with every coaction.
Report check_yd_morphism(const QuasiTuraevCoalgebra& h, const LinMap& f, const YDModule& m,
                         const YDModule& n);

// Action of Phi at one index triple on a triple of modules, each leg acting
// through its module structure. `inverse` selects the inverse associator.
LinMap associator_action(const QuasiTuraevCoalgebra& h, const RepModule& m1, const RepModule& m2,
                         const RepModule& m3, bool inverse = false);

// Braiding hexagon for a triple of YD modules, with the associativity
// constraints realized as associator actions. Exact matrix identity.
Report check_hexagon(const QuasiTuraevCoalgebra& h, const YDModule& u, const YDModule& v,
                     const YDModule& w);

// The braiding computed on conjugated modules equals the braiding matrix of
// the original pair, for every group element.
Report check_crossing_invariance(const QuasiTuraevCoalgebra& h, const YDModule& m,
                                 const YDModule& n);

} // namespace qtgc
