#pragma once

// JSON form of minimality certificates:
//   {"circles": [[v, ...], ...]}
//   {"pairs": [{"edge": [u, v], "c1": [...], "c2": [...]}, ...]}

#include "json.hpp"

#include "negsets/minimality.hpp"

namespace negsets {

nlohmann::json to_json(const DisjointCircleCertificate& cert);
nlohmann::json to_json(const TwoCirclePerEdgeCertificate& cert);

/// Throw MalformedCertificateError on a wrong shape.
DisjointCircleCertificate circle_certificate_from_json(const nlohmann::json& j);
TwoCirclePerEdgeCertificate pair_certificate_from_json(const nlohmann::json& j);

}  // namespace negsets
