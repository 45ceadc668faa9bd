#include <doctest.h>

#include <json.hpp>

#include "qtgc/center.hpp"
#include "qtgc/instances.hpp"
#include "qtgc/io.hpp"

using namespace qtgc;

namespace {

InstanceDocument doc_with_modules(QuasiTuraevCoalgebra h) {
    InstanceDocument doc;
    doc.coalgebra = std::move(h);
    for (auto& m : builtin_yd_examples(doc.coalgebra))
        doc.yd_modules.emplace(m.name, std::move(m));
    return doc;
}

} // namespace

TEST_CASE("save then load reproduces the instance") {
    for (QuasiTuraevCoalgebra h :
         {build_trivial(FinGroup::cyclic(2)),
          build_graded_line(FinGroup::cyclic(4), cocycle_cyclic_root(4)),
          build_constant_hopf(FinGroup::cyclic(2), FinGroup::cyclic(2))}) {
        InstanceDocument doc = doc_with_modules(std::move(h));
        std::string text = save_instance(doc);
        InstanceDocument back = load_instance(text);
        CHECK(back.coalgebra.structurally_equal(doc.coalgebra));
        REQUIRE(back.yd_modules.size() == doc.yd_modules.size());
        for (const auto& [name, m] : doc.yd_modules) {
            REQUIRE(back.yd_modules.count(name) == 1);
            CHECK(back.yd_modules.at(name) == m);
        }
        // canonical form: a second round trip is byte-identical
        CHECK(save_instance(back) == text);
    }
}

TEST_CASE("center objects round-trip") {
    QuasiTuraevCoalgebra h = build_graded_line(FinGroup::cyclic(2), cocycle_cyclic_root(2));
    InstanceDocument doc;
    doc.coalgebra = h;
    YDModule u = yd_unit(doc.coalgebra);
    doc.center_objects.emplace("zu", f2(doc.coalgebra, u, test_family(doc.coalgebra, 2)));
    std::string text = save_instance(doc);
    InstanceDocument back = load_instance(text);
    REQUIRE(back.center_objects.count("zu") == 1);
    const CenterObject& z = back.center_objects.at("zu");
    CHECK(z.degree == 0);
    CHECK(z.components.size() == doc.center_objects.at("zu").components.size());
    for (const auto& [key, entry] : doc.center_objects.at("zu").components)
        CHECK(z.components.at(key).second == entry.second);
    CHECK(save_instance(back) == text);
}

TEST_CASE("omitted inverses are computed and verified") {
    QuasiTuraevCoalgebra h = build_graded_line(FinGroup::cyclic(2), cocycle_cyclic_root(2));
    InstanceDocument doc;
    doc.coalgebra = h;
    nlohmann::json j = nlohmann::json::parse(save_instance(doc));
    for (auto& [key, cell] : j["phi"].items())
        cell.erase("inverse");
    for (auto& [key, cell] : j["antipode"].items())
        cell.erase("inverse");
    InstanceDocument back = load_instance(j.dump());
    CHECK(back.coalgebra.structurally_equal(doc.coalgebra));
}

TEST_CASE("shape errors name the offending block") {
    QuasiTuraevCoalgebra h = build_trivial(FinGroup::cyclic(2));
    InstanceDocument doc;
    doc.coalgebra = h;
    nlohmann::json j = nlohmann::json::parse(save_instance(doc));

    nlohmann::json bad = j;
    bad["components"]["0"]["mult"] = {"1", "0", "0", "1", "0", "0"}; // 6 entries, 1 expected
    try {
        load_instance(bad.dump());
        CHECK(false);
    } catch (const ShapeError& e) {
        CHECK(e.block == "components");
    }

    bad = j;
    bad["delta"].erase("0,1");
    try {
        load_instance(bad.dump());
        CHECK(false);
    } catch (const ShapeError& e) {
        CHECK(e.block == "delta");
    }

    bad = j;
    bad["group"]["table"] = {0, 1, 1};
    CHECK_THROWS_AS(load_instance(bad.dump()), ShapeError);
}

TEST_CASE("parse and field errors carry locations") {
    CHECK_THROWS_AS(load_instance("{ not json"), ParseError);

    QuasiTuraevCoalgebra h = build_trivial(FinGroup::cyclic(2));
    InstanceDocument doc;
    doc.coalgebra = h;
    nlohmann::json j = nlohmann::json::parse(save_instance(doc));

    nlohmann::json bad = j;
    bad["p"]["0"][0] = "1 +";
    try {
        load_instance(bad.dump());
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.expected.find("[p 0]") != std::string::npos);
    }

    // zeta under a rational field spec
    bad = j;
    bad["q"]["1"][0] = "2*zeta";
    CHECK_THROWS_AS(load_instance(bad.dump()), FieldMismatch);
}

TEST_CASE("digest is deterministic and content-sensitive") {
    InstanceDocument a, b;
    a.coalgebra = build_trivial(FinGroup::cyclic(2));
    b.coalgebra = build_trivial(FinGroup::cyclic(3));
    CHECK(instance_digest(a) == instance_digest(a));
    CHECK(instance_digest(a) != instance_digest(b));
    CHECK(instance_digest(a).rfind("fnv1a64:", 0) == 0);
}
