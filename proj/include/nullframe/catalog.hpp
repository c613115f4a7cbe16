#pragma once

#include "nullframe/frame.hpp"

#include <map>
#include <string>
#include <vector>

namespace nf {

using CatalogParams = std::map<std::string, std::string>;

struct CatalogEntry {
    std::string name;
    Signature signature;  // tag of the generated spec (conformally-flat follows its "tag" parameter)
    std::string description;
    CatalogParams defaults;              // parameters with default values
    std::vector<std::string> required;  // parameters without defaults
    std::string expected;               // invariants the test suite re-derives
};

class CatalogError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_entry(const std::string& name);
CoframeSpec catalog_get(const std::string& name, const CatalogParams& params = {});

// f = wz with z = x1 + i x2, w = x3 + i x4
inline const char* kDefaultCounterexampleF = "x3*x1 - x4*x2 + i*(x3*x2 + x4*x1)";

}  // namespace nf
