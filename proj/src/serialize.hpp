// JSON artifacts: fields, matrices, certificates, and constructed codes.
// Everything an artifact references is element indices, so files stay
// readable and survive round-trips exactly.
#pragma once

#include <string>

#include <json.hpp>

#include "atlas.hpp"
#include "hull_constructions.hpp"

namespace hf {

using ordered_json = nlohmann::ordered_json;

ordered_json field_to_json(const Field& F);
// Reads {p, m, modulus?}; builds the field (default modulus when absent).
Field field_from_json(const nlohmann::json& j);

ordered_json certificate_to_json(const Certificate& cert);

ordered_json matrix_to_json(const Field& F, const Matrix& M);
Matrix matrix_from_json(const Field& F, const nlohmann::json& j);

// Full artifact: provenance + field + code data + certificate.
ordered_json hullcode_to_json(const Field& F, const HullCode& hc);

// Re-reads an artifact written by hullcode_to_json.  The certificate is not
// trusted: callers re-certify.  Throws io_error on malformed input.
struct ArtifactData {
    Field field;
    GrsSpec spec;
    std::string family;
    ParamList params;
    std::vector<Fel> hull_witness;
};
ArtifactData artifact_from_json(const nlohmann::json& j);

// Human-readable rows of element indices.
std::string matrix_text(const Field& F, const Matrix& M);

// Parses either an artifact ({alpha, v, k, ...}) or a raw matrix
// ({rows, cols, entries, field}) into a generator matrix plus optional
// structural witness data for certification.
struct VerifyInput {
    Field field;
    Matrix G;
    bool is_artifact = false;
    GrsSpec spec;                   // set when is_artifact
    std::vector<Fel> hull_witness;  // may be empty
};
VerifyInput verify_input_from_json(const nlohmann::json& j);

}  // namespace hf
