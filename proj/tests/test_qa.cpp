#include "qalinks/catalog.hpp"
#include "qalinks/qa.hpp"
#include "qalinks/tangle.hpp"
#include "qalinks/taitgraph.hpp"

#include "support/random_diagrams.hpp"

#include <doctest.h>

using namespace qalinks;

namespace {

std::size_t mark(const Diagram& d) { return *d.marked; }

bool reduced(const Diagram& d) {
    for (std::size_t x = 0; x < d.size(); ++x)
        if (is_nugatory(d, x)) return false;
    return true;
}

void check_tree_shape(const CertificateNode& node) {
    if (node.is_leaf()) {
        CHECK(node.dets.whole == 1);
        return;
    }
    CHECK(node.dets.whole == node.dets.zero + node.dets.infinity);
    CHECK(node.dets.zero >= 1);
    CHECK(node.dets.infinity >= 1);
    for (const auto& child : node.children) {
        CHECK(child.dets.whole < node.dets.whole);
        check_tree_shape(child);
    }
}

}  // namespace

TEST_CASE("determinant property") {
    const auto l = catalog_entry("k9_43_switch").diagram;
    auto r = check_det_property(l, mark(l));
    CHECK(r.holds);
    CHECK(r.dets.whole == 15);
    CHECK(r.dets.zero == 1);
    CHECK(r.dets.infinity == 14);
    const auto k944 = catalog_entry("k9_44").diagram;
    r = check_det_property(k944, mark(k944));
    CHECK(r.holds);
    CHECK(r.dets.whole == 17);
    CHECK(r.dets.zero == 2);
    CHECK(r.dets.infinity == 15);
    const Diagram kink{{Crossing{{0, 0, 1, 1}, Over::NwSe}}, 0, std::nullopt};
    CHECK_FALSE(check_det_property(kink, 0).holds);
}

TEST_CASE("certify catalog diagrams") {
    for (const auto& e : load_catalog()) {
        CAPTURE(e.name);
        if (!is_alternating(e.diagram) || !reduced(e.diagram)) continue;
        const auto v = certify(e.diagram);
        CHECK(v.kind == VerdictKind::Certified);
        REQUIRE(v.certificate.has_value());
        CHECK_FALSE(check_certificate(*v.certificate).has_value());
        check_tree_shape(*v.certificate);
    }
    const auto v = certify(catalog_entry("k8_21").diagram);
    CHECK(v.kind == VerdictKind::Certified);
    REQUIRE(v.certificate);
    CHECK_FALSE(check_certificate(*v.certificate).has_value());
}

TEST_CASE("obstructions and edge cases") {
    const auto minus7 = certify(catalog_entry("k9_44_minus7bar").diagram);
    CHECK(minus7.kind == VerdictKind::ObstructionDetOne);
    CHECK(verdict_name(minus7.kind) == "determinant 1 obstruction");
    CHECK(certify(Diagram::unknot()).kind == VerdictKind::Certified);
    CHECK(certify(Diagram{{}, 2, std::nullopt}).kind == VerdictKind::NoCrossingInDiagram);
    CHECK(certify(catalog_entry("k8_21").diagram, 1).kind == VerdictKind::Inconclusive);
}

TEST_CASE("certification is deterministic") {
    const auto d = catalog_entry("k9_44").diagram;
    const auto a = certify(d);
    const auto b = certify(d);
    REQUIRE(a.certificate);
    CHECK(to_json(a).dump() == to_json(b).dump());
}

TEST_CASE("tampered certificates are rejected") {
    const auto v = certify(catalog_entry("k6_3").diagram);
    REQUIRE(v.certificate);
    auto bad = *v.certificate;
    bad.dets.zero += 1;
    CHECK(check_certificate(bad).has_value());
    bad = *v.certificate;
    std::swap(bad.children[0], bad.children[1]);
    CHECK(check_certificate(bad).has_value());
    bad = *v.certificate;
    bad.digest = "0";
    CHECK(check_certificate(bad).has_value());
}

TEST_CASE("certificates of random diagrams re-validate") {
    int certified = 0;
    for (const auto& d : testing::random_connected_diagrams(40, 9, 21)) {
        const auto v = certify(d);
        if (!v.certificate) continue;
        ++certified;
        CHECK_FALSE(check_certificate(*v.certificate).has_value());
    }
    CHECK(certified > 10);
}

TEST_CASE("properties at c") {
    const auto torus = catalog_entry("torus_2_8").diagram;
    auto r = check_properties(torus, mark(torus));
    CHECK(r.det_property);
    CHECK(r.prop_I == Tristate::True);
    CHECK(r.prop_III == Tristate::True);
    CHECK(r.prop_II == Tristate::False);

    const auto l = catalog_entry("k9_43_switch").diagram;
    r = check_properties(l, mark(l));
    CHECK(r.prop_I == Tristate::True);
    CHECK(r.prop_II == Tristate::True);
    CHECK(r.prop_III == Tristate::False);

    const auto k821 = catalog_entry("k8_21").diagram;
    r = check_properties(k821, mark(k821));
    CHECK(r.prop_I == Tristate::True);
    CHECK(r.prop_III == Tristate::True);
    CHECK(r.prop_II == Tristate::False);
}

TEST_CASE("budget from the environment") {
    CHECK(default_budget() > 0);
}
