#ifndef MAHLER_ESTIMATE_HPP
#define MAHLER_ESTIMATE_HPP

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace mahler {

enum class Method { jensen, boyd_lawton, quadrature, closed_form };

const char* method_name(Method m);

// A Mahler-measure value with provenance. error_bound is a diagnostic derived
// from the method (root residuals, iterate spread, batch spread), not a
// certified enclosure.
struct MeasureEstimate {
  double value = 0.0;
  double log_value = 0.0;  // -inf for value 0
  double error_bound = 0.0;
  Method method = Method::jensen;
  std::vector<std::pair<std::string, double>> diagnostics;

  static MeasureEstimate of(double value, double error, Method method) {
    MeasureEstimate e;
    e.value = value;
    e.log_value = value > 0 ? std::log(value) : -HUGE_VAL;
    e.error_bound = error;
    e.method = method;
    return e;
  }
};

}  // namespace mahler

#endif
