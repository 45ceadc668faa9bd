#include "qtgc/center.hpp"

#include <algorithm>
#include <set>

namespace qtgc {

ModuleDesc ModuleDesc::reg(long lambda) {
    ModuleDesc d;
    d.kind = Kind::reg;
    d.index = lambda;
    return d;
}

ModuleDesc ModuleDesc::conj(long g, ModuleDesc inner) {
    ModuleDesc d;
    d.kind = Kind::conj;
    d.index = g;
    d.children.push_back(std::move(inner));
    return d;
}

ModuleDesc ModuleDesc::tensor(ModuleDesc left, ModuleDesc right) {
    ModuleDesc d;
    d.kind = Kind::tensor;
    d.children.push_back(std::move(left));
    d.children.push_back(std::move(right));
    return d;
}

long ModuleDesc::degree(const FinGroup& g) const {
    switch (kind) {
    case Kind::reg:
        return index;
    case Kind::conj:
        return g.conjugate(index, children[0].degree(g));
    default:
        return g.mul(children[0].degree(g), children[1].degree(g));
    }
}

std::string ModuleDesc::str() const {
    switch (kind) {
    case Kind::reg:
        return "(reg " + std::to_string(index) + ")";
    case Kind::conj:
        return "(conj " + std::to_string(index) + " " + children[0].str() + ")";
    default:
        return "(tensor " + children[0].str() + " " + children[1].str() + ")";
    }
}

namespace {

struct DescParser {
    const std::string& text;
    std::size_t pos = 0;

    explicit DescParser(const std::string& t) : text(t) {}

    void skip() {
        while (pos < text.size() && text[pos] == ' ')
            ++pos;
    }

    void expect(char c) {
        skip();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(pos, std::string(1, c),
                             pos < text.size() ? std::string(1, text[pos]) : "");
        ++pos;
    }

    std::string word() {
        skip();
        std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '-'))
            ++pos;
        if (start == pos)
            throw ParseError(pos, "descriptor keyword or number",
                             pos < text.size() ? std::string(1, text[pos]) : "");
        return text.substr(start, pos - start);
    }

    ModuleDesc parse() {
        expect('(');
        std::string kw = word();
        ModuleDesc d;
        if (kw == "reg") {
            d = ModuleDesc::reg(std::stol(word()));
        } else if (kw == "conj") {
            long g = std::stol(word());
            d = ModuleDesc::conj(g, parse());
        } else if (kw == "tensor") {
            ModuleDesc l = parse();
            ModuleDesc r = parse();
            d = ModuleDesc::tensor(std::move(l), std::move(r));
        } else {
            throw ParseError(pos, "'reg', 'conj' or 'tensor'", kw);
        }
        expect(')');
        return d;
    }
};

// A conjugation of a regular component carries no data when the crossing map
// on that component is the identity and both components share the same
// structure constants; then the conjugate IS the regular module at the
// conjugated index.
bool conj_is_trivial(const QuasiTuraevCoalgebra& h, long g, long lambda) {
    long target = h.group().conjugate(g, lambda);
    if (h.dim(lambda) != h.dim(target))
        return false;
    if (!h.crossing_at(g, lambda).is_identity())
        return false;
    return h.algebra.mult(lambda) == h.algebra.mult(target) &&
           h.algebra.unit(lambda) == h.algebra.unit(target);
}

} // namespace

ModuleDesc ModuleDesc::parse(const std::string& text) {
    DescParser p(text);
    ModuleDesc d = p.parse();
    p.skip();
    if (p.pos != text.size())
        throw ParseError(p.pos, "end of descriptor", std::string(1, text[p.pos]));
    return d;
}

ModuleDesc canonical(const QuasiTuraevCoalgebra& h, const ModuleDesc& d) {
    switch (d.kind) {
    case ModuleDesc::Kind::reg:
        return d;
    case ModuleDesc::Kind::tensor:
        return ModuleDesc::tensor(canonical(h, d.children[0]), canonical(h, d.children[1]));
    default: {
        long g = d.index;
        ModuleDesc inner = canonical(h, d.children[0]);
        if (g == h.group().identity())
            return inner;
        if (inner.kind == ModuleDesc::Kind::conj)
            return canonical(h,
                             ModuleDesc::conj(h.group().mul(g, inner.index), inner.children[0]));
        if (inner.kind == ModuleDesc::Kind::tensor)
            return ModuleDesc::tensor(
                canonical(h, ModuleDesc::conj(g, inner.children[0])),
                canonical(h, ModuleDesc::conj(g, inner.children[1])));
        // regular leaf
        if (conj_is_trivial(h, g, inner.index))
            return ModuleDesc::reg(h.group().conjugate(g, inner.index));
        return ModuleDesc::conj(g, std::move(inner));
    }
    }
}

RepModule build_module(const QuasiTuraevCoalgebra& h, const ModuleDesc& d) {
    switch (d.kind) {
    case ModuleDesc::Kind::reg:
        return regular_module(h, d.index);
    case ModuleDesc::Kind::conj:
        return conjugate_module(h, d.index, build_module(h, d.children[0]));
    default:
        return tensor_module(h, build_module(h, d.children[0]),
                             build_module(h, d.children[1]));
    }
}

std::vector<ModuleDesc> test_family(const QuasiTuraevCoalgebra& h, long depth) {
    std::vector<ModuleDesc> base;
    for (long l = 0; l < h.n(); ++l)
        base.push_back(ModuleDesc::reg(l));
    std::vector<ModuleDesc> level = base;
    for (long k = 2; k <= depth; ++k) {
        std::vector<ModuleDesc> next;
        for (const auto& t : level)
            for (long l = 0; l < h.n(); ++l)
                next.push_back(ModuleDesc::tensor(t, ModuleDesc::reg(l)));
        base.insert(base.end(), next.begin(), next.end());
        level = std::move(next);
    }

    std::set<std::string> seen;
    std::vector<ModuleDesc> out;
    for (const auto& d : base)
        for (long g = 0; g < h.n(); ++g) {
            ModuleDesc c = canonical(h, ModuleDesc::conj(g, d));
            if (seen.insert(c.str()).second)
                out.push_back(std::move(c));
        }
    std::sort(out.begin(), out.end(),
              [](const ModuleDesc& a, const ModuleDesc& b) { return a.str() < b.str(); });
    return out;
}

const LinMap& CenterObject::component(const QuasiTuraevCoalgebra& h, const ModuleDesc& d) const {
    auto it = components.find(canonical(h, d).str());
    if (it == components.end())
        throw MissingComponent(d.str());
    return it->second.second;
}

bool CenterObject::has_component(const QuasiTuraevCoalgebra& h, const ModuleDesc& d) const {
    return components.find(canonical(h, d).str()) != components.end();
}

CenterObject f2(const QuasiTuraevCoalgebra& h, const YDModule& m,
                const std::vector<ModuleDesc>& family) {
    CenterObject z;
    z.name = "F2(" + m.name + ")";
    z.degree = m.degree;
    z.carrier = m.as_rep();
    for (const auto& d : family) {
        ModuleDesc cd = canonical(h, d);
        std::string key = cd.str();
        if (z.components.count(key))
            continue;
        RepModule x = build_module(h, cd);
        LinMap c = half_braiding(h, m, x);
        LinMap cinv = half_braiding_inv(h, m, x);
        LinMap left = compose(cinv, c);
        LinMap right = compose(c, cinv);
        if (!left.is_identity() || !right.is_identity()) {
            LinMap residual = left.is_identity()
                                  ? right - LinMap::identity(right.rows(), h.field())
                                  : left - LinMap::identity(left.rows(), h.field());
            throw BraidingNotInvertible("component at " + key + ": " + residual.str());
        }
        z.components.emplace(key, std::make_pair(cd, std::move(c)));
    }
    return z;
}

F1Result f1(const QuasiTuraevCoalgebra& h, const CenterObject& z) {
    YDModule m;
    m.name = "F1(" + z.name + ")";
    m.degree = z.degree;
    m.dim = z.carrier.dim;
    m.action = z.carrier.action;

    for (long l = 0; l < h.n(); ++l) {
        const LinMap& comp = z.component(h, ModuleDesc::reg(l));
        LinMap cinv = invert(comp);
        long dl = h.dim(l);
        const Vec& unit = h.algebra.unit(l);
        LinMap co(m.dim * dl, m.dim, h.field());
        for (long v = 0; v < m.dim; ++v) {
            // assemble 1_lambda ⊗ e_v in the flat (x, v) ordering
            std::vector<Scalar> in(static_cast<std::size_t>(dl * m.dim), Scalar::zero(h.field()));
            for (long k = 0; k < dl; ++k)
                in[static_cast<std::size_t>(k * m.dim + v)] = unit[static_cast<std::size_t>(k)];
            std::vector<Scalar> img = apply_map(cinv, in); // flat (v0, h)
            for (long r = 0; r < m.dim * dl; ++r)
                co.entry(r, v) = img[static_cast<std::size_t>(r)];
        }
        m.coaction.push_back(std::move(co));
    }

    Report rep = validate_yd(h, m);
    return {std::move(m), std::move(rep)};
}

Report roundtrip_check(const QuasiTuraevCoalgebra& h, const YDModule& m, const CenterObject& z) {
    Report rep;

    {
        CheckResult r = CheckResult::passed("roundtrip.coaction", h.n());
        F1Result back = f1(h, z);
        if (!back.report.passed()) {
            r = CheckResult::failed("roundtrip.coaction", h.n(), "(module=" + m.name + ")",
                                    "extracted module fails validation", "valid module");
        } else if (!(back.module == m)) {
            for (long l = 0; l < h.n(); ++l)
                if (back.module.coaction_at(l) != m.coaction_at(l)) {
                    r = CheckResult::failed("roundtrip.coaction", h.n(),
                                            "(module=" + m.name + ", lambda=" +
                                                std::to_string(l) + ")",
                                            back.module.coaction_at(l).str(),
                                            m.coaction_at(l).str());
                    break;
                }
        }
        rep.add(r);
    }

    {
        CheckResult r =
            CheckResult::passed("roundtrip.components", static_cast<long>(z.components.size()));
        F1Result back = f1(h, z);
        for (const auto& [key, entry] : z.components) {
            RepModule x = build_module(h, entry.first);
            LinMap regen = half_braiding(h, back.module, x);
            if (regen != entry.second) {
                r = CheckResult::failed("roundtrip.components",
                                        static_cast<long>(z.components.size()),
                                        "(component=" + key + ")", regen.str(),
                                        entry.second.str());
                break;
            }
        }
        rep.add(r);
    }

    return rep;
}

CenterObject center_tensor(const QuasiTuraevCoalgebra& h, const CenterObject& z1,
                           const CenterObject& z2, const std::vector<ModuleDesc>& family) {
    long a = z1.degree;
    long b = z2.degree;
    CenterObject out;
    out.name = z1.name + "(x)" + z2.name;
    out.degree = h.group().mul(a, b);
    out.carrier = tensor_module(h, z1.carrier, z2.carrier);

    for (const auto& d : family) {
        ModuleDesc cd = canonical(h, d);
        std::string key = cd.str();
        if (out.components.count(key))
            continue;
        ModuleDesc conj_b = canonical(h, ModuleDesc::conj(b, cd));
        ModuleDesc conj_ab = canonical(h, ModuleDesc::conj(out.degree, cd));

        const LinMap& c2 = z2.component(h, cd);
        const LinMap& c1 = z1.component(h, conj_b);

        RepModule mu = z1.carrier;
        RepModule mv = z2.carrier;
        RepModule mx = build_module(h, cd);
        RepModule mconj_b = build_module(h, conj_b);
        RepModule mconj_ab = build_module(h, conj_ab);

        LinMap a1 = associator_action(h, mu, mv, mx);
        LinMap a2 = associator_action(h, mu, mconj_b, mv, /*inverse=*/true);
        LinMap a3 = associator_action(h, mconj_ab, mu, mv);
        LinMap step = compose(kron(LinMap::identity(mu.dim, h.field()), c2), a1);
        step = compose(a2, step);
        step = compose(kron(c1, LinMap::identity(mv.dim, h.field())), step);
        step = compose(a3, step);
        out.components.emplace(key, std::make_pair(cd, std::move(step)));
    }
    return out;
}

CenterObject center_conjugate(const QuasiTuraevCoalgebra& h, long g, const CenterObject& z) {
    CenterObject out;
    out.name = "^" + std::to_string(g) + "(" + z.name + ")";
    out.degree = h.group().conjugate(g, z.degree);
    out.carrier = conjugate_module(h, g, z.carrier);
    for (const auto& [key, entry] : z.components) {
        ModuleDesc moved = canonical(h, ModuleDesc::conj(g, entry.first));
        out.components.emplace(moved.str(), std::make_pair(moved, entry.second));
    }
    return out;
}

Report check_half_braiding(const QuasiTuraevCoalgebra& h, const CenterObject& z) {
    Report rep;
    long a = z.degree;
    const Field& f = h.field();

    CheckResult inv = CheckResult::passed("center.invertible",
                                          static_cast<long>(z.components.size()));
    CheckResult lin = CheckResult::passed("center.h_linear", 0);
    bool lin_live = true;

    for (const auto& [key, entry] : z.components) {
        const ModuleDesc& d = entry.first;
        const LinMap& comp = entry.second;
        RepModule x = build_module(h, d);
        long lam = x.degree;

        if (inv.status == CheckResult::Status::pass) {
            try {
                (void)invert(comp);
            } catch (const Singular& s) {
                inv = CheckResult::failed("center.invertible",
                                          static_cast<long>(z.components.size()),
                                          "(component=" + key + ")",
                                          "rank " + std::to_string(s.rank), "full rank");
            }
        }

        if (lin_live) {
            long al = h.group().mul(a, lam);
            long ala = h.group().conjugate(a, lam);
            RepModule cx = conjugate_module(h, a, x);
            for (long i = 0; i < h.dim(al) && lin_live; ++i) {
                ++lin.cases;
                LinMap act_in(z.carrier.dim * x.dim, z.carrier.dim * x.dim, f);
                for (const auto& sd : sweedler_basis(h, a, lam, i))
                    act_in = act_in + kron(z.carrier.action[static_cast<std::size_t>(sd.i)],
                                           x.action[static_cast<std::size_t>(sd.j)])
                                          .scaled(sd.coeff);
                LinMap act_out(x.dim * z.carrier.dim, x.dim * z.carrier.dim, f);
                for (const auto& sd : sweedler_basis(h, ala, a, i))
                    act_out = act_out + kron(cx.action[static_cast<std::size_t>(sd.i)],
                                             z.carrier.action[static_cast<std::size_t>(sd.j)])
                                            .scaled(sd.coeff);
                LinMap lhs = compose(comp, act_in);
                LinMap rhs = compose(act_out, comp);
                if (lhs != rhs) {
                    lin = CheckResult::failed("center.h_linear", lin.cases,
                                              "(component=" + key + ", h=" + std::to_string(i) +
                                                  ")",
                                              lhs.str(), rhs.str());
                    lin_live = false;
                }
            }
        }
    }
    rep.add(inv);
    rep.add(lin);

    {
        CheckResult hex = CheckResult::passed("center.hexagon", 0);
        bool live = true;
        for (const auto& [k1, e1] : z.components) {
            if (!live)
                break;
            for (const auto& [k2, e2] : z.components) {
                if (!live)
                    break;
                ModuleDesc prod = canonical(h, ModuleDesc::tensor(e1.first, e2.first));
                if (!z.components.count(prod.str()))
                    continue;
                ++hex.cases;
                RepModule x = build_module(h, e1.first);
                RepModule y = build_module(h, e2.first);
                RepModule cx = conjugate_module(h, a, x);
                RepModule cy = conjugate_module(h, a, y);
                LinMap lhs = z.components.at(prod.str()).second;
                LinMap step1 = associator_action(h, z.carrier, x, y, /*inverse=*/true);
                LinMap step2 = kron(e1.second, LinMap::identity(y.dim, h.field()));
                LinMap step3 = associator_action(h, cx, z.carrier, y);
                LinMap step4 = kron(LinMap::identity(x.dim, h.field()), e2.second);
                LinMap step5 = associator_action(h, cx, cy, z.carrier, /*inverse=*/true);
                LinMap rhs =
                    compose(step5, compose(step4, compose(step3, compose(step2, step1))));
                if (lhs != rhs) {
                    hex = CheckResult::failed("center.hexagon", hex.cases,
                                              "(X=" + k1 + ", Y=" + k2 + ")", lhs.str(),
                                              rhs.str());
                    live = false;
                }
            }
        }
        rep.add(hex);
    }

    {
        CheckResult nat = CheckResult::passed("center.naturality", 0);
        bool live = true;
        for (const auto& [key, entry] : z.components) {
            if (!live)
                break;
            if (entry.first.kind != ModuleDesc::Kind::reg)
                continue;
            long lam = entry.first.index;
            long dl = h.dim(lam);
            for (long j = 0; j < dl && live; ++j) {
                ++nat.cases;
                // right multiplication by e_j is a module morphism of H_lambda
                LinMap rh(dl, dl, f);
                for (long i = 0; i < dl; ++i) {
                    Vec prod =
                        h.algebra.mul(lam, h.algebra.basis(lam, i), h.algebra.basis(lam, j));
                    for (long k = 0; k < dl; ++k)
                        rh.entry(k, i) = prod[static_cast<std::size_t>(k)];
                }
                LinMap lhs = compose(kron(rh, LinMap::identity(z.carrier.dim, f)), entry.second);
                LinMap rhs = compose(entry.second, kron(LinMap::identity(z.carrier.dim, f), rh));
                if (lhs != rhs) {
                    nat = CheckResult::failed("center.naturality", nat.cases,
                                              "(component=" + key + ", h=" + std::to_string(j) +
                                                  ")",
                                              lhs.str(), rhs.str());
                    live = false;
                }
            }
        }
        rep.add(nat);
    }

    return rep;
}

} // namespace qtgc
