#pragma once

#include <map>

#include "qtgc/ydmod.hpp"

namespace qtgc {

// Syntax tree naming a test module: a regular component, a conjugate of a
// module, or a tensor product. Canonical form pushes conjugations onto
// regular leaves and collapses conjugations that act as the identity on the
// data, so structurally identical modules share one key.
struct ModuleDesc {
    enum class Kind { reg, conj, tensor };

    Kind kind = Kind::reg;
    long index = 0; // reg: component; conj: group element
    std::vector<ModuleDesc> children;

    static ModuleDesc reg(long lambda);
    static ModuleDesc conj(long g, ModuleDesc inner);
    static ModuleDesc tensor(ModuleDesc left, ModuleDesc right);

    long degree(const FinGroup& g) const;
    std::string str() const;
    static ModuleDesc parse(const std::string& text);

    bool operator==(const ModuleDesc& rhs) const {
        return kind == rhs.kind && index == rhs.index && children == rhs.children;
    }
};

ModuleDesc canonical(const QuasiTuraevCoalgebra& h, const ModuleDesc& d);
RepModule build_module(const QuasiTuraevCoalgebra& h, const ModuleDesc& d);

// The generating family: regular modules, iterated tensor products with up to
// `depth` factors, and their conjugates by every group element (canonical
// form removes conjugates that change nothing). Sorted by key.
std::vector<ModuleDesc> test_family(const QuasiTuraevCoalgebra& h, long depth);

// Object of the center: a module together with one invertible half-braiding
// component per test module, keyed by the canonical descriptor.
struct CenterObject {
    std::string name;
    long degree = 0;
    RepModule carrier;
    std::map<std::string, std::pair<ModuleDesc, LinMap>> components;

    const LinMap& component(const QuasiTuraevCoalgebra& h, const ModuleDesc& d) const;
    bool has_component(const QuasiTuraevCoalgebra& h, const ModuleDesc& d) const;
};

// Builds the half-braiding components of a YD module on the given family,
// verifying each component is a two-sided inverse pair with its candidate
// inverse. Throws BraidingNotInvertible on failure.
CenterObject f2(const QuasiTuraevCoalgebra& h, const YDModule& m,
                const std::vector<ModuleDesc>& family);

struct F1Result {
    YDModule module;
    Report report; // validation of the extracted module
};

// Extracts the coaction family from the components at the regular modules by
// inverting them against the unit vectors; validates the result.
// Throws MissingComponent if a regular component is absent.
F1Result f1(const QuasiTuraevCoalgebra& h, const CenterObject& z);

// f1 after f2 reproduces the module exactly; f2 after f1 reproduces every
// stored component exactly.
Report roundtrip_check(const QuasiTuraevCoalgebra& h, const YDModule& m, const CenterObject& z);

// Tensor product in the center: components assembled through the associator
// actions and both factors' components. The family lists the test modules the
// result should carry. Throws MissingComponent when an input lacks a needed
// component.
CenterObject center_tensor(const QuasiTuraevCoalgebra& h, const CenterObject& z1,
                           const CenterObject& z2, const std::vector<ModuleDesc>& family);

// Conjugation in the center: the carrier is conjugated and each component is
// re-keyed at the conjugated test module (the underlying matrix is unchanged).
CenterObject center_conjugate(const QuasiTuraevCoalgebra& h, long g, const CenterObject& z);

// Per component: invertibility, linearity over the ambient component, the
// braiding-against-tensor identity on pairs whose tensor is in the family,
// and naturality against the right-multiplication morphisms of the regular
// modules.
Report check_half_braiding(const QuasiTuraevCoalgebra& h, const CenterObject& z);

} // namespace qtgc
