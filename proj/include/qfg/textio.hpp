#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "qfg/drinfeld.hpp"
#include "qfg/kkop.hpp"
#include "qfg/ledger.hpp"
#include "qfg/reality.hpp"

namespace qfg {

// Text grammar for polynomials: "A<rank>;" followed by whitespace-separated
// factor tokens "i:a" (fundamental) or "i:a:r" (string of width r), each with
// an optional multiplicity suffix "xM". The canonical printer sorts factors
// by node, center, width and groups repeats with the multiplicity suffix.
PseudoFactorization parse_poly_spec(const std::string& text);

std::string print_poly_spec(const PseudoFactorization& f);
std::string print_poly_spec(const DrinfeldPoly& pi);

// Centers shifted so every connected component of the graph of f starts at 0.
PseudoFactorization normalize_per_component(const PseudoFactorization& f);

std::string factor_token(const KRFactor& f);

nlohmann::json ledger_to_json(const AssumptionLedger& ledger);
AssumptionLedger ledger_from_json(const nlohmann::json& j);
AssumptionLedger load_ledger_file(const std::string& path);

nlohmann::json trace_to_json(const KkopTrace& t);
KkopTrace trace_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const QuochainCertificate& cert);
QuochainCertificate certificate_from_json(const nlohmann::json& j);
QuochainCertificate load_certificate_file(const std::string& path);

// Human-readable renderings used by the command line.
std::string describe_trace(const KkopTrace& t, int indent = 0);
std::string describe_certificate(const QuochainCertificate& cert);

}  // namespace qfg
