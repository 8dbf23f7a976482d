#include "prefdist/report.hpp"

namespace prefdist {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::Bfm: return "bfm";
    case Method::Direct: return "direct";
    case Method::IndirectJousselme: return "indirect-j";
    case Method::IndirectBeliefInterval: return "indirect-bi";
  }
  return "?";
}

}  // namespace prefdist
