#include "pvs/invariants.hpp"

namespace pvs {

FormCase detect_case(int dim, int degree) {
  if (dim == 6 && degree == 3) return FormCase::case1;
  if (dim == 7 && degree == 3) return FormCase::case2;
  if (degree == 2 && dim % 2 == 0 && dim >= 2) return FormCase::case3;
  throw DomainError("unrecognized form shape (dim " + std::to_string(dim) + ", degree " + std::to_string(degree) + ")");
}

}  // namespace pvs
