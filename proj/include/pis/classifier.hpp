#pragma once

#include <string>
#include <vector>

#include "pis/genus.hpp"
#include "pis/ideal.hpp"

namespace pis {

enum class GenusClass { Planar, One, Two, AtLeastThree };

std::string to_string(GenusClass c);

struct FactorProfile {
    bool is_field = false;
    bool is_principal = false;
    int proper_nonzero_ideal_count = 0;
    int eta_of_maximal = 1;
    // maximal ideal needs two generators x,y and x^2 = y^2 = 0
    bool two_generated_nilsquare = false;
};

FactorProfile profile_factor(const FiniteRing& factor, const IdealLattice& lattice);
std::vector<FactorProfile> profile_factors(const RingSystem& sys);

// Decision rules over local-factor profiles, factors taken up to permutation.
bool matches_planar(const std::vector<FactorProfile>& p);
bool matches_one(const std::vector<FactorProfile>& p);
bool matches_two(const std::vector<FactorProfile>& p);

// Maps a non-local ring's factor profiles to the predicted genus class.
// Throws std::invalid_argument for fewer than two factors.
GenusClass predict(std::vector<FactorProfile> profiles);

enum class Verdict { Confirmed, LowerOnly, Mismatch };

std::string to_string(Verdict v);

struct VerificationReport {
    std::string ring_spec;
    GenusClass predicted = GenusClass::Planar;
    GenusBounds bounds;
    Verdict verdict = Verdict::LowerOnly;
    std::string note;
    int vertices = 0;
    long edges = 0;
    std::string graph_json;       // the PIS graph the bounds refer to
    std::string certificate_json; // bounds + certificates
};

VerificationReport verify_ring(const std::string& spec_text, const GenusOptions& opts = {});
Verdict judge(GenusClass predicted, const GenusBounds& bounds);

std::string report_to_json(const VerificationReport& r);
std::string report_summary_line(const VerificationReport& r);

} // namespace pis
