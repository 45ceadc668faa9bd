#include "qtgc/instances.hpp"

#include <algorithm>

namespace qtgc {

void CocycleTable::check(bool require_conj_invariant) const {
    long n = group.order();
    long e = group.identity();
    for (const auto& v : values)
        if (v.is_zero())
            throw NotACocycle("(zero value in table)");
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            if (!at(a, e, b).is_one())
                throw NotNormalized("(a=" + std::to_string(a) + ", b=" + std::to_string(b) + ")");
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            for (long c = 0; c < n; ++c)
                for (long d = 0; d < n; ++d) {
                    Scalar lhs = at(b, c, d) * at(a, group.mul(b, c), d) * at(a, b, c);
                    Scalar rhs = at(a, b, group.mul(c, d)) * at(group.mul(a, b), c, d);
                    if (lhs != rhs)
                        throw NotACocycle("(a=" + std::to_string(a) + ", b=" + std::to_string(b) +
                                          ", c=" + std::to_string(c) + ", d=" + std::to_string(d) +
                                          ")");
                }
    if (require_conj_invariant)
        for (long g1 = 0; g1 < n; ++g1)
            for (long g2 = 0; g2 < n; ++g2)
                for (long g3 = 0; g3 < n; ++g3)
                    for (long a = 0; a < n; ++a)
                        for (long b = 0; b < n; ++b)
                            for (long c = 0; c < n; ++c)
                                if (at(group.conjugate(g1, a), group.conjugate(g2, b),
                                       group.conjugate(g3, c)) != at(a, b, c))
                                    throw NotConjInvariant(
                                        "(a=" + std::to_string(a) + ", b=" + std::to_string(b) +
                                        ", c=" + std::to_string(c) + ")");
}

CocycleTable cocycle_trivial(const FinGroup& g, const Field& f) {
    long n = g.order();
    return {g, f, std::vector<Scalar>(static_cast<std::size_t>(n * n * n), Scalar::one(f))};
}

CocycleTable cocycle_cyclic_root(long n, unsigned field_order) {
    if (field_order == 0)
        field_order = static_cast<unsigned>(2 * n);
    if (field_order % static_cast<unsigned>(n) != 0)
        throw FieldMismatch("field order " + std::to_string(field_order) +
                            " is not a multiple of " + std::to_string(n));
    Field f = CycloField::cyclotomic(field_order);
    FinGroup g = FinGroup::cyclic(n);
    long step = static_cast<long>(field_order) / n;
    std::vector<Scalar> vals;
    vals.reserve(static_cast<std::size_t>(n * n * n));
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            for (long c = 0; c < n; ++c)
                vals.push_back(Scalar::zeta_pow(f, step * a * ((b + c) / n)));
    return {std::move(g), std::move(f), std::move(vals)};
}

namespace {

GradedComponent scalar_component(const Field& f) {
    GradedComponent c;
    c.dim = 1;
    c.unit = {Scalar::one(f)};
    c.mult = LinMap(1, 1, f);
    c.mult.entry(0, 0) = Scalar::one(f);
    return c;
}

GradedComponent group_algebra_component(const FinGroup& g, const Field& f) {
    long d = g.order();
    GradedComponent c;
    c.dim = d;
    c.unit = basis_vec(f, d, g.identity());
    c.mult = LinMap(d, d * d, f);
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j)
            c.mult.entry(g.mul(i, j), i * d + j) = Scalar::one(f);
    return c;
}

GradedComponent function_algebra_component(const FinGroup& g, const Field& f) {
    long d = g.order();
    GradedComponent c;
    c.dim = d;
    c.unit = Vec(static_cast<std::size_t>(d), Scalar::one(f));
    c.mult = LinMap(d, d * d, f);
    for (long i = 0; i < d; ++i)
        c.mult.entry(i, i * d + i) = Scalar::one(f);
    return c;
}

void run_builder_validators(QuasiTuraevCoalgebra& h, const std::string& builder) {
    Report rep = validate_all(h);
    if (!rep.passed()) {
        bool antipode_only = true;
        for (const auto& c : rep.checks)
            if (c.status == CheckResult::Status::fail && c.id.rfind("antipode.", 0) != 0)
                antipode_only = false;
        if (antipode_only)
            throw AntipodeSolveFailed(to_text(rep));
        throw CheckFailed("builder '" + builder + "' produced an invalid instance:\n" +
                          to_text(rep));
    }
}

} // namespace

QuasiTuraevCoalgebra build_trivial(const FinGroup& pi, Field f) {
    long n = pi.order();
    std::vector<GradedComponent> comps(static_cast<std::size_t>(n), scalar_component(f));
    QuasiTuraevCoalgebra h;
    h.algebra = GradedAlgebra(pi, std::move(comps), f);

    LinMap one(1, 1, f);
    one.entry(0, 0) = Scalar::one(f);
    h.delta.assign(static_cast<std::size_t>(n * n), one);
    h.counit = one;
    TensorElement unit3({1, 1, 1}, {0, 0, 0}, f);
    unit3.coeffs()[0] = Scalar::one(f);
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            for (long c = 0; c < n; ++c) {
                TensorElement t({1, 1, 1}, {a, b, c}, f);
                t.coeffs()[0] = Scalar::one(f);
                h.phi.push_back(t);
                h.phi_inv.push_back(std::move(t));
            }
    h.antipode.assign(static_cast<std::size_t>(n), one);
    h.antipode_inv.assign(static_cast<std::size_t>(n), one);
    h.p_elem.assign(static_cast<std::size_t>(n), Vec{Scalar::one(f)});
    h.q_elem.assign(static_cast<std::size_t>(n), Vec{Scalar::one(f)});
    h.crossing.assign(static_cast<std::size_t>(n * n), one);

    run_builder_validators(h, "trivial");
    return h;
}

QuasiTuraevCoalgebra build_graded_line(const FinGroup& pi, const CocycleTable& omega) {
    if (!(omega.group == pi))
        throw GradingMismatch("cocycle table is over a different group");
    bool abelian = true;
    for (long a = 0; a < pi.order() && abelian; ++a)
        for (long b = 0; b < pi.order() && abelian; ++b)
            if (pi.mul(a, b) != pi.mul(b, a))
                abelian = false;
    omega.check(/*require_conj_invariant=*/!abelian);

    const Field& f = omega.field;
    long n = pi.order();
    QuasiTuraevCoalgebra h = build_trivial(pi, f);
    h.validated = false;
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            for (long c = 0; c < n; ++c) {
                std::size_t idx = static_cast<std::size_t>((a * n + b) * n + c);
                h.phi[idx].coeffs()[0] = omega.at(a, b, c);
                h.phi_inv[idx].coeffs()[0] = omega.at(a, b, c).inverse();
            }
    for (long a = 0; a < n; ++a) {
        long ai = pi.inverse(a);
        h.q_elem[static_cast<std::size_t>(a)] = {omega.at(a, ai, a).inverse()};
    }

    run_builder_validators(h, "graded_line");
    return h;
}

QuasiTuraevCoalgebra build_constant_hopf(const FinGroup& pi, const FinGroup& g, Field f) {
    long n = pi.order();
    long d = g.order();
    std::vector<GradedComponent> comps(static_cast<std::size_t>(n),
                                       group_algebra_component(g, f));
    QuasiTuraevCoalgebra h;
    h.algebra = GradedAlgebra(pi, std::move(comps), f);

    LinMap dl(d * d, d, f);
    for (long x = 0; x < d; ++x)
        dl.entry(x * d + x, x) = Scalar::one(f);
    h.delta.assign(static_cast<std::size_t>(n * n), dl);

    h.counit = LinMap(1, d, f);
    for (long x = 0; x < d; ++x)
        h.counit.entry(0, x) = Scalar::one(f);

    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            for (long c = 0; c < n; ++c) {
                TensorElement t({d, d, d}, {a, b, c}, f);
                t.coeff({g.identity(), g.identity(), g.identity()}) = Scalar::one(f);
                h.phi.push_back(t);
                h.phi_inv.push_back(std::move(t));
            }

    LinMap s(d, d, f);
    for (long x = 0; x < d; ++x)
        s.entry(g.inverse(x), x) = Scalar::one(f);
    h.antipode.assign(static_cast<std::size_t>(n), s);
    h.antipode_inv.assign(static_cast<std::size_t>(n), s);

    h.p_elem.assign(static_cast<std::size_t>(n), basis_vec(f, d, g.identity()));
    h.q_elem.assign(static_cast<std::size_t>(n), basis_vec(f, d, g.identity()));
    h.crossing.assign(static_cast<std::size_t>(n * n), LinMap::identity(d, f));

    run_builder_validators(h, "constant_hopf");
    return h;
}

QuasiTuraevCoalgebra build_twisted_dual(const FinGroup& pi, const FinGroup& g,
                                        const CocycleTable& omega) {
    if (!(omega.group == g))
        throw GradingMismatch("cocycle table is over a different group");
    omega.check(/*require_conj_invariant=*/false);

    const Field& f = omega.field;
    long n = pi.order();
    long d = g.order();
    std::vector<GradedComponent> comps(static_cast<std::size_t>(n),
                                       function_algebra_component(g, f));
    QuasiTuraevCoalgebra h;
    h.algebra = GradedAlgebra(pi, std::move(comps), f);

    // coproduct dual to multiplication
    LinMap dl(d * d, d, f);
    for (long x = 0; x < d; ++x)
        for (long y = 0; y < d; ++y)
            dl.entry(x * d + y, g.mul(x, y)) = Scalar::one(f);
    h.delta.assign(static_cast<std::size_t>(n * n), dl);

    h.counit = LinMap(1, d, f);
    h.counit.entry(0, g.identity()) = Scalar::one(f);

    TensorElement t({d, d, d}, {0, 0, 0}, f);
    for (long x = 0; x < d; ++x)
        for (long y = 0; y < d; ++y)
            for (long z = 0; z < d; ++z)
                t.coeff({x, y, z}) = omega.at(x, y, z);
    TensorElement ti({d, d, d}, {0, 0, 0}, f);
    for (long x = 0; x < d; ++x)
        for (long y = 0; y < d; ++y)
            for (long z = 0; z < d; ++z)
                ti.coeff({x, y, z}) = omega.at(x, y, z).inverse();
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            for (long c = 0; c < n; ++c) {
                TensorElement ta({d, d, d}, {a, b, c}, f);
                ta.coeffs() = t.coeffs();
                TensorElement tb({d, d, d}, {a, b, c}, f);
                tb.coeffs() = ti.coeffs();
                h.phi.push_back(std::move(ta));
                h.phi_inv.push_back(std::move(tb));
            }

    LinMap s(d, d, f);
    for (long x = 0; x < d; ++x)
        s.entry(g.inverse(x), x) = Scalar::one(f);
    h.antipode.assign(static_cast<std::size_t>(n), s);
    h.antipode_inv.assign(static_cast<std::size_t>(n), s);

    // diagonal ansatz: p = 1; q solved from the associator contraction,
    // whose diagonal coefficient at x is omega(x, x^{-1}, x).
    h.p_elem.assign(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(d), Scalar::one(f)));
    Vec q(static_cast<std::size_t>(d), Scalar::one(f));
    for (long x = 0; x < d; ++x)
        q[static_cast<std::size_t>(x)] = omega.at(x, g.inverse(x), x).inverse();
    h.q_elem.assign(static_cast<std::size_t>(n), q);
    h.crossing.assign(static_cast<std::size_t>(n * n), LinMap::identity(d, f));

    run_builder_validators(h, "twisted_dual");
    return h;
}

namespace {

bool all_components_scalar(const QuasiTuraevCoalgebra& h) {
    for (long a = 0; a < h.n(); ++a)
        if (h.dim(a) != 1)
            return false;
    return true;
}

// Recovers a group table from a component whose multiplication permutes the
// basis and whose coproduct is diagonal on it; empty when it is not of that
// shape.
std::vector<long> group_like_table(const QuasiTuraevCoalgebra& h) {
    long n = h.n();
    long d = h.dim(h.group().identity());
    std::vector<long> table;
    for (long a = 0; a < n; ++a) {
        if (h.dim(a) != d || h.algebra.mult(a) != h.algebra.mult(h.group().identity()))
            return {};
        if (h.algebra.unit(a) != h.algebra.unit(h.group().identity()))
            return {};
    }
    const LinMap& m = h.algebra.mult(h.group().identity());
    table.assign(static_cast<std::size_t>(d * d), -1);
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j) {
            long hit = -1;
            for (long k = 0; k < d; ++k) {
                const Scalar& c = m.entry(k, i * d + j);
                if (c.is_zero())
                    continue;
                if (!c.is_one() || hit >= 0)
                    return {};
                hit = k;
            }
            if (hit < 0)
                return {};
            table[static_cast<std::size_t>(i * d + j)] = hit;
        }
    // coproduct must be diagonal: Delta(e_x) = e_x ⊗ e_x everywhere
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b) {
            const LinMap& dl = h.delta_at(a, b);
            for (long x = 0; x < d; ++x)
                for (long r = 0; r < d * d; ++r) {
                    bool want = (r == x * d + x);
                    const Scalar& c = dl.entry(r, x);
                    if (want != c.is_one() || (!want && !c.is_zero()))
                        return {};
                }
        }
    return table;
}

} // namespace

std::vector<YDModule> builtin_yd_examples(const QuasiTuraevCoalgebra& h) {
    std::vector<YDModule> out;
    out.push_back(yd_unit(h));
    long n = h.n();
    const Field& f = h.field();

    if (all_components_scalar(h)) {
        // exhaustive search over root-of-unity coaction scalars
        long nroots = static_cast<long>(f->order());
        long slots = n - 1; // scalar at the identity is forced to 1
        double total = 1;
        for (long s = 0; s < slots; ++s)
            total *= static_cast<double>(nroots);
        if (total <= 100000.0) {
            for (long deg = 0; deg < n; ++deg) {
                std::vector<long> expo(static_cast<std::size_t>(slots), 0);
                for (;;) {
                    YDModule m;
                    m.degree = deg;
                    m.dim = 1;
                    LinMap one(1, 1, f);
                    one.entry(0, 0) = Scalar::one(f);
                    m.action = {one};
                    std::string suffix;
                    long slot = 0;
                    for (long l = 0; l < n; ++l) {
                        LinMap co(1, 1, f);
                        if (l == h.group().identity()) {
                            co.entry(0, 0) = Scalar::one(f);
                        } else {
                            long k = expo[static_cast<std::size_t>(slot++)];
                            co.entry(0, 0) = Scalar::zeta_pow(f, k);
                            suffix += (suffix.empty() ? "" : "_") + std::to_string(k);
                        }
                        m.coaction.push_back(std::move(co));
                    }
                    m.name = "scalar_d" + std::to_string(deg) +
                             (suffix.empty() ? "" : "_" + suffix);
                    if (validate_yd(h, m).passed() &&
                        std::find(out.begin(), out.end(), m) == out.end())
                        out.push_back(std::move(m));
                    // odometer
                    long i = 0;
                    while (i < slots) {
                        if (++expo[static_cast<std::size_t>(i)] < nroots)
                            break;
                        expo[static_cast<std::size_t>(i)] = 0;
                        ++i;
                    }
                    if (i == slots || slots == 0)
                        break;
                }
            }
        }
    }

    std::vector<long> table = group_like_table(h);
    if (!table.empty() && h.dim(h.group().identity()) > 1) {
        // adjoint module in degree 1: x acts by conjugation, the coaction is
        // diagonal on the basis
        long d = h.dim(h.group().identity());
        long gid = 0;
        const Vec& u = h.algebra.unit(h.group().identity());
        for (long i = 0; i < d; ++i)
            if (u[static_cast<std::size_t>(i)].is_one())
                gid = i;
        FinGroup g(d, table, gid);
        YDModule m;
        m.name = "adjoint";
        m.degree = h.group().identity();
        m.dim = d;
        for (long x = 0; x < d; ++x) {
            LinMap act(d, d, f);
            for (long v = 0; v < d; ++v)
                act.entry(g.mul(g.mul(x, v), g.inverse(x)), v) = Scalar::one(f);
            m.action.push_back(std::move(act));
        }
        for (long l = 0; l < n; ++l) {
            LinMap co(d * d, d, f);
            for (long v = 0; v < d; ++v)
                co.entry(v * d + v, v) = Scalar::one(f);
            m.coaction.push_back(std::move(co));
        }
        if (validate_yd(h, m).passed() && std::find(out.begin(), out.end(), m) == out.end())
            out.push_back(std::move(m));
    }

    return out;
}

FinGroup named_group(const std::string& spec) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= spec.size()) {
        std::size_t x = spec.find('x', start);
        if (x == std::string::npos) {
            parts.push_back(spec.substr(start));
            break;
        }
        parts.push_back(spec.substr(start, x - start));
        start = x + 1;
    }
    auto single = [](const std::string& s) -> FinGroup {
        if (s == "s3")
            return FinGroup::symmetric3();
        if (s.size() >= 2 && s[0] == 'z') {
            long m = std::stol(s.substr(1));
            if (m >= 1)
                return FinGroup::cyclic(m);
        }
        throw Error("unknown group '" + s + "' (expected z<n>, s3, or products like z2xz2)");
    };
    FinGroup g = single(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i)
        g = FinGroup::direct_product(g, single(parts[i]));
    return g;
}

std::vector<std::string> builder_names() {
    return {"trivial", "graded_line", "constant_hopf", "twisted_dual"};
}

QuasiTuraevCoalgebra build_named(const std::string& name,
                                 const std::map<std::string, std::string>& params) {
    auto get = [&](const std::string& key) -> std::string {
        auto it = params.find(key);
        if (it == params.end())
            throw Error("builder '" + name + "' needs parameter '" + key + "'");
        return it->second;
    };
    auto get_or = [&](const std::string& key, const std::string& dflt) -> std::string {
        auto it = params.find(key);
        return it == params.end() ? dflt : it->second;
    };
    auto field_for = [&](unsigned dflt) -> Field {
        unsigned order = static_cast<unsigned>(std::stoul(get_or("order", std::to_string(dflt))));
        return order == 1 ? CycloField::rationals() : CycloField::cyclotomic(order);
    };

    if (name == "trivial")
        return build_trivial(named_group(get("pi")), field_for(1));
    if (name == "constant_hopf")
        return build_constant_hopf(named_group(get("pi")), named_group(get("G")), field_for(1));
    if (name == "graded_line") {
        FinGroup pi = named_group(get("pi"));
        std::string omega = get_or("omega", "root");
        if (omega == "trivial")
            return build_graded_line(pi, cocycle_trivial(pi, field_for(1)));
        if (omega == "root") {
            long m = pi.order();
            if (!(FinGroup::cyclic(m) == pi))
                throw Error("omega=root needs a cyclic grading group");
            unsigned order = static_cast<unsigned>(
                std::stoul(get_or("order", std::to_string(2 * m))));
            return build_graded_line(pi, cocycle_cyclic_root(m, order));
        }
        throw Error("unknown omega '" + omega + "' (expected trivial or root)");
    }
    if (name == "twisted_dual") {
        FinGroup pi = named_group(get("pi"));
        FinGroup g = named_group(get("G"));
        std::string omega = get_or("omega", "root");
        if (omega == "trivial")
            return build_twisted_dual(pi, g, cocycle_trivial(g, field_for(1)));
        if (omega == "root") {
            long m = g.order();
            if (!(FinGroup::cyclic(m) == g))
                throw Error("omega=root needs a cyclic G");
            unsigned order =
                static_cast<unsigned>(std::stoul(get_or("order", std::to_string(m))));
            return build_twisted_dual(pi, g, cocycle_cyclic_root(m, order));
        }
        throw Error("unknown omega '" + omega + "' (expected trivial or root)");
    }
    throw Error("unknown builder '" + name + "'");
}

} // namespace qtgc
