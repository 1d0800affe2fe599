#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pis/classifier.hpp"

using namespace pis;

namespace {

FactorProfile profile_of(const std::string& spec) {
    RingSystem sys = RingSystem::analyze(parse_ring_spec(spec));
    return profile_factor(sys.factor_rings[0], sys.factor_lattices[0]);
}

std::vector<FactorProfile> profiles_of(const std::string& spec) {
    RingSystem sys = RingSystem::analyze(parse_ring_spec(spec));
    return profile_factors(sys);
}

} // namespace

TEST_CASE("factor profiles") {
    FactorProfile p = profile_of("Z/16");
    CHECK_FALSE(p.is_field);
    CHECK(p.is_principal);
    CHECK(p.proper_nonzero_ideal_count == 3);
    CHECK(p.eta_of_maximal == 4);
    CHECK_FALSE(p.two_generated_nilsquare);

    p = profile_of("GF(4)");
    CHECK(p.is_field);
    CHECK(p.is_principal);
    CHECK(p.proper_nonzero_ideal_count == 0);
    CHECK(p.eta_of_maximal == 1);

    p = profile_of("GF(2)[x,y]/(x2,y2)");
    CHECK_FALSE(p.is_field);
    CHECK_FALSE(p.is_principal);
    CHECK(p.proper_nonzero_ideal_count == 5);
    CHECK(p.eta_of_maximal == 3);
    CHECK(p.two_generated_nilsquare);

    p = profile_of("Z4[x]/(x2,2x)");
    CHECK_FALSE(p.is_principal);
    CHECK(p.proper_nonzero_ideal_count == 4);
    CHECK(p.eta_of_maximal == 2);
    CHECK(p.two_generated_nilsquare);
}

TEST_CASE("profile invariants") {
    for (const char* spec : {"Z/16", "GF(4)", "GF(2)[x,y]/(x2,y2)", "Z4[x]/(x2,2x)",
                             "Z/4", "GF(9)[t]/t^2"}) {
        FactorProfile p = profile_of(spec);
        if (p.is_field) CHECK(p.proper_nonzero_ideal_count == 0);
        CHECK((p.eta_of_maximal == 1) == p.is_field);
        if (p.two_generated_nilsquare) CHECK_FALSE(p.is_principal);
        if (p.is_principal) CHECK(p.proper_nonzero_ideal_count == p.eta_of_maximal - 1);
    }
}

TEST_CASE("predict: worked classes") {
    CHECK(predict(profiles_of("Z/16 x Z/4")) == GenusClass::Two);
    CHECK(predict(profiles_of("Z/32 x Z/4")) == GenusClass::Two);
    CHECK(predict(profiles_of("GF(2)[x,y]/(x2,y2) x GF(2)")) == GenusClass::Two);
    CHECK(predict(profiles_of("Z4[x]/(x2,2x) x GF(2)")) == GenusClass::Two);
    CHECK(predict(profiles_of("Z/8 x Z/4")) == GenusClass::One);
    CHECK(predict(profiles_of("Z/4 x GF(2) x GF(3)")) == GenusClass::One);
    CHECK(predict(profiles_of("GF(2) x GF(3)")) == GenusClass::Planar);
    CHECK(predict(profiles_of("GF(2) x GF(3) x GF(5)")) == GenusClass::Planar);
    CHECK(predict(profiles_of("Z/4 x Z/4")) == GenusClass::Planar);
    CHECK(predict(profiles_of("GF(2) x Z/8")) == GenusClass::Planar);
    CHECK(predict(profiles_of("GF(2) x GF(3) x GF(5) x GF(7)")) == GenusClass::AtLeastThree);
    CHECK(predict(profiles_of("Z/64 x Z/4")) == GenusClass::AtLeastThree);
    CHECK(predict(profiles_of("Z/8 x Z/8")) == GenusClass::AtLeastThree);
    CHECK(predict(profiles_of("GF(2)[x,y]/(x2,y2) x Z/4")) == GenusClass::AtLeastThree);
}

TEST_CASE("predict is permutation invariant") {
    auto p = profiles_of("Z/16 x Z/4");
    auto q = p;
    std::swap(q[0], q[1]);
    CHECK(predict(p) == predict(q));
}

TEST_CASE("predict rejects local rings") {
    CHECK_THROWS_AS(predict(profiles_of("Z/16")), std::invalid_argument);
}

TEST_CASE("verdict logic") {
    auto mk = [](int lo, std::optional<int> up) {
        GenusBounds b;
        b.lower = lo;
        b.upper = up;
        return b;
    };
    CHECK(judge(GenusClass::Planar, mk(0, 0)) == Verdict::Confirmed);
    CHECK(judge(GenusClass::Planar, mk(0, std::nullopt)) == Verdict::LowerOnly);
    CHECK(judge(GenusClass::Planar, mk(1, 1)) == Verdict::Mismatch);
    CHECK(judge(GenusClass::One, mk(1, 1)) == Verdict::Confirmed);
    CHECK(judge(GenusClass::One, mk(0, 1)) == Verdict::LowerOnly);
    CHECK(judge(GenusClass::Two, mk(2, 2)) == Verdict::Confirmed);
    CHECK(judge(GenusClass::Two, mk(1, 2)) == Verdict::LowerOnly);
    CHECK(judge(GenusClass::Two, mk(3, 3)) == Verdict::Mismatch);
    CHECK(judge(GenusClass::Two, mk(1, 1)) == Verdict::Mismatch);
    CHECK(judge(GenusClass::AtLeastThree, mk(3, std::nullopt)) == Verdict::Confirmed);
    CHECK(judge(GenusClass::AtLeastThree, mk(2, std::nullopt)) == Verdict::LowerOnly);
    CHECK(judge(GenusClass::AtLeastThree, mk(2, 3)) == Verdict::LowerOnly);
    CHECK(judge(GenusClass::AtLeastThree, mk(2, 2)) == Verdict::Mismatch);
}

TEST_CASE("verify: a planar ring confirms quickly") {
    GenusOptions o;
    VerificationReport rep = verify_ring("GF(2) x Z/8", o);
    CHECK(rep.predicted == GenusClass::Planar);
    CHECK(rep.verdict == Verdict::Confirmed);
    CHECK(rep.bounds.lower == 0);
    CHECK(rep.bounds.upper == 0);
    CHECK(rep.vertices == 6);
}

TEST_CASE("report json carries the key fields") {
    GenusOptions o;
    VerificationReport rep = verify_ring("GF(2) x GF(3)", o);
    std::string j = report_to_json(rep);
    CHECK(j.find("\"predicted\": \"Planar\"") != std::string::npos);
    CHECK(j.find("\"verdict\": \"confirmed\"") != std::string::npos);
    CHECK(j.find("\"graph\"") != std::string::npos);
    CHECK(j.find("\"certificate\"") != std::string::npos);
}
