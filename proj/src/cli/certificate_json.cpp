#include "negsets/certificate_json.hpp"

namespace negsets {

namespace {

std::vector<Vertex> vertex_list(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw MalformedCertificateError(std::string(what) + " must be an array");
  std::vector<Vertex> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw MalformedCertificateError(std::string(what) + " must hold integers");
    out.push_back(v.get<Vertex>());
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const DisjointCircleCertificate& cert) {
  return {{"circles", cert.circles}};
}

nlohmann::json to_json(const TwoCirclePerEdgeCertificate& cert) {
  auto pairs = nlohmann::json::array();
  for (const auto& p : cert.pairs)
    pairs.push_back({{"edge", {p.edge.u, p.edge.v}}, {"c1", p.first}, {"c2", p.second}});
  return {{"pairs", pairs}};
}

DisjointCircleCertificate circle_certificate_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("circles"))
    throw MalformedCertificateError("certificate needs a \"circles\" array");
  const auto& circles = j.at("circles");
  if (!circles.is_array()) throw MalformedCertificateError("\"circles\" must be an array");
  DisjointCircleCertificate cert;
  for (const auto& c : circles) cert.circles.push_back(vertex_list(c, "circle"));
  return cert;
}

TwoCirclePerEdgeCertificate pair_certificate_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("pairs"))
    throw MalformedCertificateError("certificate needs a \"pairs\" array");
  const auto& pairs = j.at("pairs");
  if (!pairs.is_array()) throw MalformedCertificateError("\"pairs\" must be an array");
  TwoCirclePerEdgeCertificate cert;
  for (const auto& p : pairs) {
    if (!p.is_object() || !p.contains("edge") || !p.contains("c1") || !p.contains("c2"))
      throw MalformedCertificateError("each pair needs \"edge\", \"c1\" and \"c2\"");
    auto e = vertex_list(p.at("edge"), "edge");
    if (e.size() != 2) throw MalformedCertificateError("edge must have two vertices");
    cert.pairs.push_back({Edge(e[0], e[1]), vertex_list(p.at("c1"), "c1"), vertex_list(p.at("c2"), "c2")});
  }
  return cert;
}

}  // namespace negsets
