#pragma once

#include <string_view>

namespace prefdist {

enum class Method { Bfm, Direct, IndirectJousselme, IndirectBeliefInterval };

/// CLI spelling: bfm, direct, indirect-j, indirect-bi.
std::string_view to_string(Method method);

struct DistanceReport {
  Method method;
  double raw = 0.0;
  double max = 0.0;
  double normalized = 0.0;
};

}  // namespace prefdist
