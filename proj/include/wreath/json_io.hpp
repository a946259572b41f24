#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "wreath/decomp.hpp"
#include "wreath/kernel.hpp"
#include "wreath/params.hpp"
#include "wreath/spectral.hpp"
#include "wreath/wreath.hpp"

namespace wreath {

// Conventions: exact computed values (counts, eigenvalues, bounds,
// coefficients) serialize as decimal strings so nothing is ever rounded;
// structural integers (n, k, l, multiplicities, node counts) are JSON
// numbers; rationals serialize in lowest terms as "p/q" ("p" when q = 1).

nlohmann::json wreath_to_json(const Wreath& w);
// Parses and canonicalizes; validates block sizes, element range and that
// the blocks really form an (n,k)-wreath.
Wreath wreath_from_json(const WreathParams& params, const nlohmann::json& j,
                        const Caps& caps);

nlohmann::json decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const WreathParams& params,
                                      const nlohmann::json& j,
                                      const Caps& caps);

nlohmann::json kernel_vector_to_json(const SparseKernelVector& v);

nlohmann::json scan_report_to_json(const ScanReport& r);
ScanReport scan_report_from_json(const nlohmann::json& j);

nlohmann::json spectrum_to_json(const Spectrum& s);

}  // namespace wreath
