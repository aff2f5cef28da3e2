#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace xtrop {

/// Outcome of one law check on one instance. `instance` and `witness`
/// hold serialized JSON; a failed report always carries a witness.
struct LawReport {
    std::string law_id;
    std::string instance;
    bool passed = false;
    std::optional<std::string> witness;
    std::uint64_t seed = 0;
};

}  // namespace xtrop
