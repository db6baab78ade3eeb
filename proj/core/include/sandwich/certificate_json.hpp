#pragma once

#include "sandwich/error.hpp"
#include "sandwich/limit.hpp"

#include <string>
#include <utility>
#include <vector>

namespace sandwich {

/// Certificate as a single JSON object with keys, in order: expr, limit,
/// path, tail_start, gap, eps_table, witness_trace.
std::string certificate_json(const LimitCertificate& cert, int indent = -1);

/// The serialized certificate read back; decimals stay as strings.
struct CertificateRecord {
  std::string expr;
  std::string limit;
  std::string path;
  std::string tail_start;
  std::string gap;
  std::vector<std::pair<std::string, std::string>> eps_table;
  std::vector<std::string> witness_trace;
};

/// Throws InvalidArgument when the text does not follow the schema,
/// including key order.
CertificateRecord parse_certificate_json(const std::string& text);

/// {"eps", "X", "verified_samples"}.
std::string threshold_json(const Scalar& eps, const Threshold& t, int indent = -1);

/// {"error": name, "detail": text}.
std::string error_json(std::string_view name, const std::string& detail);

/// Columns x,f,m,M with 12 significant digits, header included.
std::string envelope_csv(const EnvelopePair& p);

}  // namespace sandwich
