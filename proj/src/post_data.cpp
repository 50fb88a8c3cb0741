#include "fidbayes/post_data.hpp"

#include "fidbayes/errors.hpp"

namespace fidbayes {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::pure_bayes:
      return "pure-bayes";
    case Method::fiducial_bayes:
      return "fiducial-bayes";
    case Method::mixture:
      return "mixture";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "pure-bayes") return Method::pure_bayes;
  if (name == "fiducial-bayes") return Method::fiducial_bayes;
  if (name == "mixture") return Method::mixture;
  throw ValidationError("unknown method '" + std::string(name) + "'");
}

double PostData::constant(std::string_view name) const {
  for (const auto& [key, value] : constants) {
    if (key == name) return value;
  }
  throw ValidationError("PostData: no constant named '" + std::string(name) +
                        "'");
}

}  // namespace fidbayes
