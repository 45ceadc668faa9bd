#include "qtgc/io.hpp"

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace qtgc {

using nlohmann::json;

namespace {

Scalar parse_scalar_in(const std::string& text, const Field& f, const std::string& block,
                       const std::string& key) {
    try {
        return parse_scalar(text, f);
    } catch (const ParseError& e) {
        throw ParseError(e.offset, "[" + block + " " + key + "] " + e.expected, e.found);
    } catch (const FieldMismatch& e) {
        throw FieldMismatch("in block '" + block + "' at " + key + ": " + e.what());
    }
}

// Flat input-major scalar array -> LinMap (rows = out_dim, cols = in_dim).
LinMap read_map(const json& arr, long in_dim, long out_dim, const Field& f,
                const std::string& block, const std::string& key) {
    if (!arr.is_array() || static_cast<long>(arr.size()) != in_dim * out_dim)
        throw ShapeError(block, key, std::to_string(in_dim * out_dim) + " entries",
                         arr.is_array() ? std::to_string(arr.size()) + " entries"
                                        : "non-array");
    LinMap m(out_dim, in_dim, f);
    m.src_label = block + (key == "-" ? "" : " " + key);
    for (long i = 0; i < in_dim; ++i)
        for (long o = 0; o < out_dim; ++o) {
            const json& cell = arr[static_cast<std::size_t>(i * out_dim + o)];
            if (!cell.is_string())
                throw ShapeError(block, key, "scalar string", cell.dump());
            m.entry(o, i) = parse_scalar_in(cell.get<std::string>(), f, block, key);
        }
    return m;
}

json write_map(const LinMap& m) {
    json arr = json::array();
    for (long i = 0; i < m.cols(); ++i)
        for (long o = 0; o < m.rows(); ++o)
            arr.push_back(m.entry(o, i).str());
    return arr;
}

Vec read_vec(const json& arr, long dim, const Field& f, const std::string& block,
             const std::string& key) {
    if (!arr.is_array() || static_cast<long>(arr.size()) != dim)
        throw ShapeError(block, key, std::to_string(dim) + " entries",
                         arr.is_array() ? std::to_string(arr.size()) + " entries"
                                        : "non-array");
    Vec v;
    v.reserve(static_cast<std::size_t>(dim));
    for (const auto& cell : arr) {
        if (!cell.is_string())
            throw ShapeError(block, key, "scalar string", cell.dump());
        v.push_back(parse_scalar_in(cell.get<std::string>(), f, block, key));
    }
    return v;
}

json write_vec(const Vec& v) {
    json arr = json::array();
    for (const auto& s : v)
        arr.push_back(s.str());
    return arr;
}

const json& need(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end())
        throw ShapeError(key, "-", "block present", "missing");
    return *it;
}

// Inverse of a tensor element in the componentwise algebra, via the matrix of
// left multiplication. The result is verified on both sides.
TensorElement invert_tensor(const QuasiTuraevCoalgebra& h, const TensorElement& t) {
    long total = t.total_dim();
    LinMap lmul(total, total, h.field());
    // columns: products t * basis
    for (long col = 0; col < total; ++col) {
        TensorElement b(t.shape(), t.grading(), h.field());
        b.coeffs()[static_cast<std::size_t>(col)] = Scalar::one(h.field());
        TensorElement prod = mul_tensor(h, t, b);
        for (long r = 0; r < total; ++r)
            lmul.entry(r, col) = prod.coeffs()[static_cast<std::size_t>(r)];
    }
    LinMap inv_map = [&] {
        try {
            return invert(lmul);
        } catch (const Singular&) {
            throw Error("associator component is not invertible");
        }
    }();
    TensorElement unit = unit_tensor(h, t.grading());
    TensorElement out(t.shape(), t.grading(), h.field());
    out.coeffs() = apply_map(inv_map, unit.coeffs());
    if (mul_tensor(h, t, out) != unit || mul_tensor(h, out, t) != unit)
        throw Error("computed associator inverse failed verification");
    return out;
}

YDModule read_yd_module(const json& j, const QuasiTuraevCoalgebra& h, const std::string& name) {
    const std::string block = "yd_modules." + name;
    YDModule m;
    m.name = name;
    m.degree = need(j, "degree").get<long>();
    if (m.degree < 0 || m.degree >= h.n())
        throw ShapeError(block, "degree", "index in [0," + std::to_string(h.n()) + ")",
                         std::to_string(m.degree));
    m.dim = need(j, "dim").get<long>();
    if (m.dim < 1)
        throw ShapeError(block, "dim", "positive dimension", std::to_string(m.dim));
    const json& act = need(j, "action");
    if (!act.is_array() || static_cast<long>(act.size()) != h.dim(m.degree))
        throw ShapeError(block, "action", std::to_string(h.dim(m.degree)) + " matrices",
                         std::to_string(act.size()));
    for (const auto& a : act)
        m.action.push_back(read_map(a, m.dim, m.dim, h.field(), block, "action"));
    const json& co = need(j, "coaction");
    for (long l = 0; l < h.n(); ++l) {
        std::string key = std::to_string(l);
        if (!co.contains(key))
            throw ShapeError(block, "coaction." + key, "coaction present", "missing");
        m.coaction.push_back(
            read_map(co[key], m.dim, m.dim * h.dim(l), h.field(), block, "coaction." + key));
    }
    return m;
}

json write_yd_module(const YDModule& m) {
    json j;
    j["degree"] = m.degree;
    j["dim"] = m.dim;
    json act = json::array();
    for (const auto& a : m.action)
        act.push_back(write_map(a));
    j["action"] = act;
    json co;
    for (std::size_t l = 0; l < m.coaction.size(); ++l)
        co[std::to_string(l)] = write_map(m.coaction[l]);
    j["coaction"] = co;
    return j;
}

CenterObject read_center_object(const json& j, const QuasiTuraevCoalgebra& h,
                                const std::string& name) {
    const std::string block = "center_objects." + name;
    CenterObject z;
    z.name = name;
    z.degree = need(j, "degree").get<long>();
    if (z.degree < 0 || z.degree >= h.n())
        throw ShapeError(block, "degree", "index in [0," + std::to_string(h.n()) + ")",
                         std::to_string(z.degree));
    long dim = need(j, "dim").get<long>();
    z.carrier.degree = z.degree;
    z.carrier.dim = dim;
    const json& act = need(j, "action");
    if (!act.is_array() || static_cast<long>(act.size()) != h.dim(z.degree))
        throw ShapeError(block, "action", std::to_string(h.dim(z.degree)) + " matrices",
                         std::to_string(act.size()));
    for (const auto& a : act)
        z.carrier.action.push_back(read_map(a, dim, dim, h.field(), block, "action"));
    const json& comps = need(j, "components");
    for (auto it = comps.begin(); it != comps.end(); ++it) {
        ModuleDesc d = [&] {
            try {
                return ModuleDesc::parse(it.key());
            } catch (const ParseError& e) {
                throw Error("in block '" + block + "': bad descriptor '" + it.key() + "': " +
                            e.what());
            }
        }();
        ModuleDesc cd = canonical(h, d);
        RepModule x = build_module(h, cd);
        long in_dim = dim * x.dim;
        z.components.emplace(cd.str(),
                             std::make_pair(cd, read_map(it.value(), in_dim, in_dim, h.field(),
                                                         block, it.key())));
    }
    return z;
}

json write_center_object(const CenterObject& z) {
    json j;
    j["degree"] = z.degree;
    j["dim"] = z.carrier.dim;
    json act = json::array();
    for (const auto& a : z.carrier.action)
        act.push_back(write_map(a));
    j["action"] = act;
    json comps;
    for (const auto& [key, entry] : z.components)
        comps[key] = write_map(entry.second);
    j["components"] = comps;
    return j;
}

} // namespace

InstanceDocument load_instance(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.byte, "well-formed JSON", e.what());
    }

    const json& jf = need(j, "field");
    FieldSpec spec;
    std::string kind = need(jf, "kind").get<std::string>();
    if (kind == "rational")
        spec.kind = FieldSpec::Kind::rational;
    else if (kind == "cyclotomic")
        spec.kind = FieldSpec::Kind::cyclotomic;
    else
        throw ShapeError("field", "kind", "rational or cyclotomic", kind);
    spec.order = jf.value("order", 1u);
    Field f = CycloField::make(spec);

    const json& jg = need(j, "group");
    long n = need(jg, "order").get<long>();
    std::vector<long> table = need(jg, "table").get<std::vector<long>>();
    long identity = need(jg, "identity").get<long>();
    FinGroup group = [&] {
        try {
            return FinGroup(n, std::move(table), identity);
        } catch (const Error& e) {
            throw ShapeError("group", "-", "valid multiplication table", e.what());
        }
    }();

    const json& jc = need(j, "components");
    std::vector<GradedComponent> comps;
    for (long a = 0; a < n; ++a) {
        std::string key = std::to_string(a);
        if (!jc.contains(key))
            throw ShapeError("components", key, "component present", "missing");
        const json& c = jc[key];
        GradedComponent gc;
        gc.dim = need(c, "dim").get<long>();
        if (gc.dim < 1)
            throw ShapeError("components", key, "positive dimension", std::to_string(gc.dim));
        gc.unit = read_vec(need(c, "unit"), gc.dim, f, "components", key + ".unit");
        gc.mult = read_map(need(c, "mult"), gc.dim * gc.dim, gc.dim, f, "components",
                           key + ".mult");
        comps.push_back(std::move(gc));
    }

    InstanceDocument doc;
    QuasiTuraevCoalgebra& h = doc.coalgebra;
    h.algebra = GradedAlgebra(std::move(group), std::move(comps), f);
    const FinGroup& g = h.group();

    const json& jd = need(j, "delta");
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b) {
            std::string key = std::to_string(a) + "," + std::to_string(b);
            if (!jd.contains(key))
                throw ShapeError("delta", key, "entry present", "missing");
            h.delta.push_back(read_map(jd[key], h.dim(g.mul(a, b)), h.dim(a) * h.dim(b), f,
                                       "delta", key));
        }

    h.counit = read_map(need(j, "counit"), h.dim(g.identity()), 1, f, "counit", "-");

    const json& jp = need(j, "phi");
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            for (long c = 0; c < n; ++c) {
                std::string key = std::to_string(a) + "," + std::to_string(b) + "," +
                                  std::to_string(c);
                if (!jp.contains(key))
                    throw ShapeError("phi", key, "entry present", "missing");
                const json& cell = jp[key];
                long total = h.dim(a) * h.dim(b) * h.dim(c);
                TensorElement t({h.dim(a), h.dim(b), h.dim(c)}, {a, b, c}, f);
                t.coeffs() = read_vec(need(cell, "coeffs"), total, f, "phi", key);
                h.phi.push_back(std::move(t));
                if (cell.contains("inverse")) {
                    TensorElement ti({h.dim(a), h.dim(b), h.dim(c)}, {a, b, c}, f);
                    ti.coeffs() = read_vec(cell["inverse"], total, f, "phi", key + ".inverse");
                    h.phi_inv.push_back(std::move(ti));
                } else {
                    h.phi_inv.push_back(invert_tensor(h, h.phi.back()));
                }
            }

    const json& js = need(j, "antipode");
    for (long a = 0; a < n; ++a) {
        std::string key = std::to_string(a);
        if (!js.contains(key))
            throw ShapeError("antipode", key, "entry present", "missing");
        const json& cell = js[key];
        long ai = g.inverse(a);
        h.antipode.push_back(read_map(need(cell, "matrix"), h.dim(a), h.dim(ai), f, "antipode",
                                      key));
        if (cell.contains("inverse")) {
            h.antipode_inv.push_back(
                read_map(cell["inverse"], h.dim(ai), h.dim(a), f, "antipode", key + ".inverse"));
        } else {
            try {
                h.antipode_inv.push_back(invert(h.antipode.back()));
            } catch (const Singular&) {
                throw Error("antipode at component " + key + " is not invertible");
            } catch (const DimensionMismatch&) {
                throw Error("antipode at component " + key +
                            " is not square; supply an explicit inverse");
            }
        }
    }

    const json& jpe = need(j, "p");
    const json& jqe = need(j, "q");
    for (long a = 0; a < n; ++a) {
        std::string key = std::to_string(a);
        if (!jpe.contains(key))
            throw ShapeError("p", key, "entry present", "missing");
        if (!jqe.contains(key))
            throw ShapeError("q", key, "entry present", "missing");
        h.p_elem.push_back(read_vec(jpe[key], h.dim(a), f, "p", key));
        h.q_elem.push_back(read_vec(jqe[key], h.dim(a), f, "q", key));
    }

    const json& jx = need(j, "crossing");
    for (long b = 0; b < n; ++b) {
        std::string bkey = std::to_string(b);
        if (!jx.contains(bkey))
            throw ShapeError("crossing", bkey, "entry present", "missing");
        for (long a = 0; a < n; ++a) {
            std::string akey = std::to_string(a);
            if (!jx[bkey].contains(akey))
                throw ShapeError("crossing", bkey + "." + akey, "entry present", "missing");
            h.crossing.push_back(read_map(jx[bkey][akey], h.dim(a),
                                          h.dim(g.conjugate(b, a)), f, "crossing",
                                          bkey + "." + akey));
        }
    }

    if (j.contains("yd_modules"))
        for (auto it = j["yd_modules"].begin(); it != j["yd_modules"].end(); ++it)
            doc.yd_modules.emplace(it.key(), read_yd_module(it.value(), h, it.key()));

    if (j.contains("center_objects"))
        for (auto it = j["center_objects"].begin(); it != j["center_objects"].end(); ++it)
            doc.center_objects.emplace(it.key(), read_center_object(it.value(), h, it.key()));

    return doc;
}

InstanceDocument load_instance_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_instance(ss.str());
}

std::string save_instance(const InstanceDocument& doc) {
    const QuasiTuraevCoalgebra& h = doc.coalgebra;
    long n = h.n();
    json j;

    const FieldSpec& spec = h.field()->spec();
    j["field"] = {{"kind", spec.kind == FieldSpec::Kind::rational ? "rational" : "cyclotomic"},
                  {"order", spec.order}};
    j["group"] = {{"order", h.group().order()},
                  {"table", h.group().table()},
                  {"identity", h.group().identity()}};

    json comps;
    for (long a = 0; a < n; ++a) {
        json c;
        c["dim"] = h.dim(a);
        c["unit"] = write_vec(h.algebra.unit(a));
        c["mult"] = write_map(h.algebra.mult(a));
        comps[std::to_string(a)] = c;
    }
    j["components"] = comps;

    json jd;
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            jd[std::to_string(a) + "," + std::to_string(b)] = write_map(h.delta_at(a, b));
    j["delta"] = jd;

    j["counit"] = write_map(h.counit);

    json jp;
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            for (long c = 0; c < n; ++c) {
                json cell;
                cell["coeffs"] = write_vec(h.phi_at(a, b, c).coeffs());
                cell["inverse"] = write_vec(h.phi_inv_at(a, b, c).coeffs());
                jp[std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c)] = cell;
            }
    j["phi"] = jp;

    json js;
    for (long a = 0; a < n; ++a) {
        json cell;
        cell["matrix"] = write_map(h.antipode_at(a));
        cell["inverse"] = write_map(h.antipode_inv_at(a));
        js[std::to_string(a)] = cell;
    }
    j["antipode"] = js;

    json jpe, jqe;
    for (long a = 0; a < n; ++a) {
        jpe[std::to_string(a)] = write_vec(h.p_at(a));
        jqe[std::to_string(a)] = write_vec(h.q_at(a));
    }
    j["p"] = jpe;
    j["q"] = jqe;

    json jx;
    for (long b = 0; b < n; ++b) {
        json row;
        for (long a = 0; a < n; ++a)
            row[std::to_string(a)] = write_map(h.crossing_at(b, a));
        jx[std::to_string(b)] = row;
    }
    j["crossing"] = jx;

    if (!doc.yd_modules.empty()) {
        json jm;
        for (const auto& [name, m] : doc.yd_modules)
            jm[name] = write_yd_module(m);
        j["yd_modules"] = jm;
    }
    if (!doc.center_objects.empty()) {
        json jz;
        for (const auto& [name, z] : doc.center_objects)
            jz[name] = write_center_object(z);
        j["center_objects"] = jz;
    }

    return j.dump(2) + "\n";
}

void save_instance_file(const InstanceDocument& doc, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write '" + path + "'");
    out << save_instance(doc);
}

std::string instance_digest(const InstanceDocument& doc) {
    std::string text = save_instance(doc);
    unsigned long long hash = 1469598103934665603ull;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx", hash);
    return buf;
}

} // namespace qtgc
