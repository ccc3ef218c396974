#ifndef AFFINECODES_REPORT_HPP
#define AFFINECODES_REPORT_HPP

#include <json.hpp>

#include "affinecodes/duality.hpp"
#include "affinecodes/families.hpp"
#include "affinecodes/parse.hpp"
#include "affinecodes/weights.hpp"

namespace afc {

using Json = nlohmann::json;

/// Canonical serialization: objects with sorted keys, integers only,
/// byte-stable across runs and platforms.
std::string emit_json(const Json& j);

Json info_report(const SpecFile& sf);
Json cgs_report(const CodeModule& code);
Json genmat_report(const CodeModule& code);
Json card_report(const CodeModule& code);
Json member_report(const Word& w, const CodeModule& code, MembershipMethod method);
Json rdual_report(const CodeModule& code);
Json adual_report(const CodeModule& code);
Json hdual_report(const CodeModule& code);
Json paritycheck_report(const CodeModule& code, const ParityCheckResult& pc);
Json weights_report(const CodeModule& code, const WeightDistribution& dist, WeightKind kind);
Json kerdock_report(const KerdockResult& kr);

}  // namespace afc

#endif
