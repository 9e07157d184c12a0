// Feasible-parameter atlas: enumerate every admissible construction tuple for
// a field, build and certify each, and report one row per tuple.  Tuples whose
// internal search comes up empty (coset/beta/extra-point scans) appear as
// certified=false rows with a reason slug in the d column.
#pragma once

#include <string>
#include <vector>

#include "hull_constructions.hpp"

namespace hf {

struct AtlasRow {
    uint32_t q = 0;
    std::string family;
    std::string params;  // "k=v;k=v" in construction order
    uint32_t N = 0, K = 0;
    std::string d;  // exact distance, "structural", or a failure reason slug
    bool certified = false;
};

// Rows in fixed family order (even-q, square-1..12, xn-minus-x, subfield,
// roots-of-unity, add-cosets, mult-cosets), ascending parameters within each.
// families: empty = all; otherwise exact family names ("square" covers all
// twelve).  max_n = 0 means no length cap.  Each tuple gets a fresh budget of
// row_budget operations.
std::vector<AtlasRow> atlas_for_field(const Field& F, uint32_t max_n,
                                      const std::vector<std::string>& families,
                                      uint64_t row_budget);

// Header "q,family,params,N,K,d,certified" plus one line per row.
std::string atlas_csv(const std::vector<AtlasRow>& rows);

}  // namespace hf
