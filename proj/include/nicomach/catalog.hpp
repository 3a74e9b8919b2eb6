#pragma once

#include "nicomach/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nicomach {

// Stable identifiers of the classical identities the library verifies.
const std::vector<std::string>& catalog_ids();

// Verify one catalog entry. `bound` overrides the entry's default range where
// one applies (ignored for purely symbolic entries).
Report catalog_verify(const std::string& id, std::optional<long> bound = std::nullopt);

}  // namespace nicomach
