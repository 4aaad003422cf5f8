#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cubecover/box.hpp"
#include "cubecover/congruence.hpp"
#include "cubecover/dnf.hpp"
#include "cubecover/search.hpp"

namespace cubecover {

// Text formats. Parse errors throw ParseError with the 1-based line number.
//
// Congruence systems: one class per line, "a mod m"; '#' starts a comment.
//
// DNF expressions: a header line "n = <dim>", then one term per line with
// literals joined by " & ", literal syntax x<k> or !x<k>, k 1-based. The
// empty conjunction (constant true) is written as the single word "true".
//
// Box instances: a header "box: a1 a2 ... an", then one sub-box per line,
// "fix i1=v1 i2=v2 ..." with 1-based coordinate indices and 0-based values.

CongruenceSystem parse_congruence_system(std::istream& in,
                                         std::uint64_t lcm_cap = kDefaultLcmCap);
std::string write_congruence_system(const CongruenceSystem& system);

DnfExpression parse_dnf(std::istream& in);
std::string write_dnf(const DnfExpression& dnf);

struct BoxInstance {
  Box box;
  std::vector<SubBox> subboxes;
};

BoxInstance parse_box_instance(std::istream& in);
std::string write_box_instance(const BoxInstance& instance);

// JSON echoes. Strings, so the serialization library stays private to the
// core; callers that compose larger documents re-parse on their side.

std::string to_json(const CoverReport& report);
std::string to_json(const Box& box, const SubBox& subbox);
std::string to_json(const BoxCoverReport& report);
std::string to_json(const DnfExpression& dnf);
std::string to_json(const SearchOutcome& outcome);

}  // namespace cubecover
