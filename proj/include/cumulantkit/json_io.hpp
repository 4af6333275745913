#pragma once

#include <string>

#include "json.hpp"

#include "cumulantkit/block_bialgebra.hpp"
#include "cumulantkit/block_operad.hpp"
#include "cumulantkit/comodule.hpp"
#include "cumulantkit/gap_bialgebra.hpp"
#include "cumulantkit/moments.hpp"
#include "cumulantkit/partition.hpp"

namespace ckit {

using Json = nlohmann::ordered_json;

// Wire format: {"n": 5, "blocks": [[1,2,5],[3,4]]}, 1-indexed, canonical order.
Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

// Accepts the JSON object form, a bare array of blocks, or the compact text
// form "1,2,5|3,4" (empty string is the empty partition).
Partition parse_partition(const std::string& text);
std::string compact_partition(const Partition& p);

Json monomial_to_json(const Monomial& m);   // array of partitions
Monomial monomial_from_json(const Json& j);
Json cmonomial_to_json(const CMonomial& m);  // sorted array

// Word or single partition, for coproduct-style inputs.
Monomial parse_gap_input(const std::string& text);
CMonomial parse_block_input(const std::string& text);

// Compositions are arrays of blocks in slot order.
Json composition_to_json(const Composition& c);
Composition composition_from_json(const Json& j);
Composition parse_composition(const std::string& text);

Json rational_to_json(const Rational& r);  // string "p/q" (or "p")
Rational rational_from_json(const Json& j);
Sequence sequence_from_json(const Json& j);
Json sequence_to_json(const Sequence& s);

Json gap_tensor_to_json(const GapTensor& t);
Json block_tensor_to_json(const BlockTensor& t);
Json partition_lincomb_to_json(const LinComb<Partition>& x);
Json monomial_lincomb_to_json(const LinComb<Monomial>& x);

Json report_to_json(const VerifyReport& r);

// Machine-readable error payload emitted on stderr by the CLI.
Json error_to_json(const std::string& code, const std::string& message);

}  // namespace ckit
