#pragma once

#include <string>

#include "cayham/abelian.hpp"
#include "cayham/disjoint.hpp"
#include "cayham/lattice.hpp"
#include "cayham/multicycle.hpp"
#include "cayham/oracle.hpp"

// json.hpp lives at the vendor root, not under nlohmann/
#include <json.hpp>

namespace cayham {

// Group spec grammar: "Z:k" cyclic, "Z2:n1,n2" product, "Z" integers,
// "ZxZm:m".  Elements are comma-separated coordinates.
GroupSpec parse_group(const std::string& s);
GroupElement parse_element(const GroupSpec& g, const std::string& s);
std::string format_group(const GroupSpec& g);
std::string format_element(const GroupSpec& g, GroupElement v);

std::string rational_str(const Rational& r);

nlohmann::json certificate_to_json(const DigraphInstance& inst,
                                   const PairCertificate& cert);

// Rebuilds the instance and certificate and re-verifies; throws on a
// malformed document, returns the fresh verification outcome in
// cert.verified.
struct LoadedCertificate {
    GroupSpec group;
    GroupElement a, b;
    PairCertificate cert;
};
LoadedCertificate certificate_from_json(const nlohmann::json& doc,
                                        DigraphInstance& instOut);

// Byte-stable profile rendering (sorted keys, integers only).
nlohmann::json profile_to_json(const TriangleProfile& tp);
std::string profile_table(const TriangleProfile& tp);

std::string dot_export(const DigraphInstance& inst, const PairCertificate& cert);

nlohmann::json multi_to_json(const MultiCertificate& cert);
nlohmann::json scan_to_json(const ScanReport& rep);

}  // namespace cayham
