#pragma once

#include <nlohmann/json.hpp>

#include "eqbif/analyzer.hpp"
#include "eqbif/bifurcation_index.hpp"
#include "eqbif/euler_ring.hpp"
#include "eqbif/so2_rep.hpp"
#include "eqbif/spectrum.hpp"

namespace eqbif {

// {"coeffs": [[index, "decimal"], ...]} sorted by index.
void to_json(nlohmann::json& j, const EulerElement& a);
void from_json(const nlohmann::json& j, EulerElement& a);

// {"weights": [[m, k], ...]} sorted by m.
void to_json(nlohmann::json& j, const SO2Rep& rep);
void from_json(const nlohmann::json& j, SO2Rep& rep);

void to_json(nlohmann::json& j, const BallRadius& r);
void from_json(const nlohmann::json& j, BallRadius& r);

void to_json(nlohmann::json& j, const Tolerances& tol);
void from_json(const nlohmann::json& j, Tolerances& tol);

void to_json(nlohmann::json& j, const EigenvalueRecord& rec);
void from_json(const nlohmann::json& j, EigenvalueRecord& rec);

void to_json(nlohmann::json& j, const Spectrum& s);
void from_json(const nlohmann::json& j, Spectrum& s);

void to_json(nlohmann::json& j, const SystemConfig& c);
void to_json(nlohmann::json& j, const SignedEigenvalue& v);
void to_json(nlohmann::json& j, const ConeReport& r);
void to_json(nlohmann::json& j, const Certificate& c);

/// Structural check of a certificate document: required keys, value types and
/// vocabularies. Returns the list of violations (empty when valid).
std::vector<std::string> validate_certificate_json(const nlohmann::json& j);

}  // namespace eqbif
