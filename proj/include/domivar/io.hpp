#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "domivar/instance.hpp"

namespace domivar {

using ordered_json = nlohmann::ordered_json;

/// Parse or validation failure, carrying one message per addressed problem.
class InstanceError : public std::runtime_error {
  public:
    explicit InstanceError(std::vector<std::string> issues);
    const std::vector<std::string>& issues() const { return issues_; }

  private:
    std::vector<std::string> issues_;
};

/// A parsed instance together with its canonical serialized form. The digest
/// is stable under parse -> serialize -> parse.
struct LoadedInstance {
    ProblemInstance instance;
    ordered_json canonical;
    std::string digest;  // fnv1a-64 of the canonical dump
};

/// Parses (and fully validates) an instance document. Quasimetric axioms and
/// objective/structure totality run before anything else may use the instance.
LoadedInstance parse_instance(const std::string& text);

LoadedInstance load_instance_file(const std::string& path);

/// Canonical serialization; parsing it again reproduces `digest`.
std::string serialize_instance(const LoadedInstance& loaded);

/// FNV-1a 64-bit content hash, hex encoded.
std::string fnv1a_hex(const std::string& bytes);

/// Extended-real helper for reports: finite values stay numbers, +/-inf
/// become the strings "inf" / "-inf" (JSON has no infinities).
ordered_json ext_real(double v);

}  // namespace domivar
