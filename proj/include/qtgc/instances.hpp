#pragma once

#include <map>

#include "qtgc/gqc.hpp"
#include "qtgc/ydmod.hpp"

namespace qtgc {

// Function on group triples with invertible scalar values, given as an
// explicit table. Carries its coefficient field.
struct CocycleTable {
    FinGroup group;
    Field field;
    std::vector<Scalar> values; // flat ((a*n + b)*n + c)

    const Scalar& at(long a, long b, long c) const {
        long n = group.order();
        return values[static_cast<std::size_t>((a * n + b) * n + c)];
    }

    // Throws NotNormalized / NotACocycle / NotConjInvariant on the first
    // violated condition. Conjugation invariance means invariance under
    // independent conjugation of each argument; it is required exactly when
    // the group is nonabelian.
    void check(bool require_conj_invariant) const;
};

CocycleTable cocycle_trivial(const FinGroup& g, const Field& f);

// On the cyclic group of order n: omega(a,b,c) = zeta^{(N/n) * a * floor((b+c)/n)}
// with representatives in [0, n). field_order N must be a multiple of n;
// 0 selects the default 2n (which keeps square roots of the values in the
// field, as the scalar-coaction search needs).
CocycleTable cocycle_cyclic_root(long n, unsigned field_order = 0);

// All components one-dimensional, everything trivial. Passes all validators.
QuasiTuraevCoalgebra build_trivial(const FinGroup& pi, Field f = CycloField::rationals());

// All components one-dimensional, associator given by a normalized 3-cocycle
// (conjugation-invariant when pi is nonabelian). q is solved from the
// associator contraction.
QuasiTuraevCoalgebra build_graded_line(const FinGroup& pi, const CocycleTable& omega);

// Every component the group algebra k[G] with the standard Hopf structure;
// trivial associator and crossing.
QuasiTuraevCoalgebra build_constant_hopf(const FinGroup& pi, const FinGroup& g,
                                         Field f = CycloField::rationals());

// Every component the function algebra on G with the coproduct dual to
// multiplication and the associator given by a 3-cocycle on G. Antipode data
// p, q is solved from the axioms over a diagonal ansatz and verified; a
// failing candidate raises AntipodeSolveFailed.
QuasiTuraevCoalgebra build_twisted_dual(const FinGroup& pi, const FinGroup& g,
                                        const CocycleTable& omega);

// The unit module, every one-dimensional module found by exhaustive search
// over root-of-unity coaction scalars (instances with all components
// one-dimensional), and the adjoint module in degree 1 for group-algebra
// instances. Deterministic order, duplicates removed.
std::vector<YDModule> builtin_yd_examples(const QuasiTuraevCoalgebra& h);

// ---- named builders for the command line ----

// "z<n>", "s3", and direct products joined with 'x' ("z2xz2").
FinGroup named_group(const std::string& spec);

std::vector<std::string> builder_names();

// Builds by name with string parameters:
//   trivial:        pi, [order]
//   graded_line:    pi (cyclic for omega=root), [omega=root|trivial], [order]
//   constant_hopf:  pi, G, [order]
//   twisted_dual:   pi, G (cyclic for omega=root), [omega=root|trivial], [order]
QuasiTuraevCoalgebra build_named(const std::string& name,
                                 const std::map<std::string, std::string>& params);

} // namespace qtgc
