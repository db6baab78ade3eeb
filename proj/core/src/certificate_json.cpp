#include "sandwich/certificate_json.hpp"

#include "sandwich/decimal.hpp"

#include <json.hpp>

#include <sstream>

namespace sandwich {

using ordered_json = nlohmann::ordered_json;

namespace {

std::vector<std::string> witness_trace(const LimitCertificate& cert) { return cert.witnesses.trace(); }

std::string dump(const ordered_json& j, int indent) { return j.dump(indent) + "\n"; }

}  // namespace

std::string certificate_json(const LimitCertificate& cert, int indent) {
  ordered_json j;
  j["expr"] = print(cert.expr);
  j["limit"] = format_decimal(cert.limit);
  j["path"] = std::string(path_name(cert.path));
  j["tail_start"] = format_decimal(Scalar(cert.tail_start));
  j["gap"] = format_decimal(cert.gap);
  ordered_json table = ordered_json::array();
  for (const auto& row : cert.eps_table) {
    ordered_json r;
    r["eps"] = format_decimal(row.eps);
    r["X"] = format_decimal(row.x);
    table.push_back(std::move(r));
  }
  j["eps_table"] = std::move(table);
  j["witness_trace"] = witness_trace(cert);
  return dump(j, indent);
}

CertificateRecord parse_certificate_json(const std::string& text) {
  static const std::vector<std::string> keys{"expr", "limit", "path", "tail_start", "gap", "eps_table", "witness_trace"};
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::InvalidArgument, std::string("certificate is not JSON: ") + ex.what());
  }
  if (!j.is_object() || j.size() != keys.size())
    throw Error(ErrorCode::InvalidArgument, "certificate must be an object with " + std::to_string(keys.size()) + " keys");
  std::size_t k = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++k) {
    if (it.key() != keys[k]) throw Error(ErrorCode::InvalidArgument, "expected key '" + keys[k] + "' got '" + it.key() + "'");
  }
  try {
    CertificateRecord r;
    r.expr = j.at("expr").get<std::string>();
    r.limit = j.at("limit").get<std::string>();
    r.path = j.at("path").get<std::string>();
    r.tail_start = j.at("tail_start").get<std::string>();
    r.gap = j.at("gap").get<std::string>();
    for (const auto& row : j.at("eps_table")) {
      if (!row.is_object() || row.size() != 2) throw Error(ErrorCode::InvalidArgument, "eps_table rows have eps and X");
      r.eps_table.emplace_back(row.at("eps").get<std::string>(), row.at("X").get<std::string>());
    }
    r.witness_trace = j.at("witness_trace").get<std::vector<std::string>>();
    return r;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::InvalidArgument, std::string("certificate field has the wrong type: ") + ex.what());
  }
}

std::string threshold_json(const Scalar& eps, const Threshold& t, int indent) {
  ordered_json j;
  j["eps"] = format_decimal(eps);
  j["X"] = format_decimal(t.value);
  j["verified_samples"] = t.verified_samples;
  return dump(j, indent);
}

std::string error_json(std::string_view name, const std::string& detail) {
  ordered_json j;
  j["error"] = std::string(name);
  j["detail"] = detail;
  return dump(j, -1);
}

std::string envelope_csv(const EnvelopePair& p) {
  std::ostringstream out;
  out << "x,f,m,M\n";
  for (std::size_t i = 0; i < p.grid.size(); ++i) {
    out << format_significant(Scalar(p.grid[i]), 12) << ',' << format_significant(p.values[i], 12) << ','
        << format_significant(p.lower[i], 12) << ',' << format_significant(p.upper[i], 12) << '\n';
  }
  return out.str();
}

}  // namespace sandwich
