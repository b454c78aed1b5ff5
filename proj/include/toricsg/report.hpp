#pragma once

#include <nlohmann/json.hpp>

#include "toricsg/ensemble.hpp"
#include "toricsg/ktheory.hpp"
#include "toricsg/oracle.hpp"
#include "toricsg/semigroup.hpp"

namespace toricsg {

using json = nlohmann::json;

// ADL serializers so domain values drop straight into report documents.
void to_json(json& j, const Vec2& v);
void to_json(json& j, const IntMatrix2& m);
void to_json(json& j, const AbelianGroup& g);
void to_json(json& j, const Face& f);
void to_json(json& j, const KTheoryReport& r);
void to_json(json& j, const QuotientWitnessReport& r);
void to_json(json& j, const ComplementDecomposition& r);
void to_json(json& j, const BijectionReport& r);
void to_json(json& j, const ConeWitness& w);
void to_json(json& j, const InstanceSpec& s);

/// Cone/face section of a validated semigroup.
json semigroup_json(const ToricSemigroup& S);

/// Report skeleton: schema version, tool version, instance echo.
json base_report(const InstanceSpec& spec);

/// {"generators": [[m, n], ...], "label": optional} -> instance.
/// Throws std::invalid_argument on malformed documents.
InstanceSpec parse_instance_json(const json& doc);

/// One "m n" pair per line; '#' starts a comment.
InstanceSpec parse_instance_text(const std::string& text);

/// Human-readable summary (for --pretty on stderr).
std::string pretty_summary(const json& report);

}  // namespace toricsg
