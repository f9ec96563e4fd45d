#pragma once

#include "opq/branching.hpp"
#include "opq/report.hpp"
#include "opq/repmodel.hpp"

namespace opq {

// Stable JSON renderings; key order is part of the output contract.

Json to_json(const InfChar& chi);
Json to_json(KType k);

/// {"p","q","sign","lambda","zero","regular","inf_char","min_k_type"}.
/// inf_char and min_k_type are null for zero representations.
Json to_json(const Rep& r);

/// {"sign","mu","ochar","n"}.
Json to_json(const SpectrumEntry& e);

/// {"entries","truncated","zero_omitted"}.
Json to_json(const Spectrum& s);

} // namespace opq
