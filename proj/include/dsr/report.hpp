#pragma once

#include <string>

#include <json.hpp>

#include "dsr/families.hpp"
#include "dsr/verifier.hpp"

namespace dsr {

// Deterministic report bodies: no timing, no run-specific data. Doubles are
// written in shortest round-trip form.
nlohmann::ordered_json to_json(const VerificationReport& r);
nlohmann::ordered_json to_json(const TheoremSweep& s);
nlohmann::ordered_json to_json(const EdgeLemmaReport& r);
nlohmann::ordered_json to_json(const JoinLemmaReport& r);
nlohmann::ordered_json to_json(const FamilyParams& p, const FamilyValidation& v);

/// Per-class seconds, for the run manifest.
nlohmann::ordered_json timing_json(const TheoremSweep& s);

/// One row per class.
std::string theorem_csv(const TheoremSweep& s);

} // namespace dsr
