#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "hermlag/approx.hpp"
#include "hermlag/errlab.hpp"
#include "hermlag/galerkin.hpp"

namespace hermlag {

/// A named test function. Ids take the form "name" or "name:arg1,arg2".
struct RegistryEntry {
  std::string id;
  Domain domain = Domain::half_line;
  std::function<double(double)> value;
  std::function<double(double)> d1;  // empty when not available
  std::function<double(double)> d2;
  /// Empty when only the numerical transform applies.
  std::function<std::unique_ptr<TransformProvider>()> transform;
  std::string provenance;

  TargetFunction target() const { return {value, domain, id}; }
  bool has_derivatives() const { return d1 && d2; }
  Manufactured manufactured() const;
};

RegistryEntry lookup(const std::string& id);

struct RegistryInfo {
  std::string pattern;
  std::string description;
};
std::vector<RegistryInfo> registry_catalog();

}  // namespace hermlag
