#pragma once

#include <vector>

#include "ordtop/rational.hpp"

namespace ordtop {

// A function from the points of a space into [0, 1], tabulated by point
// id. Intended to be isotone (order preserving) and continuous; use
// check_isotone_continuous to verify.
struct IsotoneFn {
  std::vector<Rational> values;

  friend bool operator==(const IsotoneFn&, const IsotoneFn&) = default;
};

// Where a family of functions came from; canonical families built from
// clopen increasing sets are tagged clopen_indicator, embedding
// coordinate families are tagged dense_point.
enum class FamilyProvenance { clopen_indicator, user_supplied, dense_point };

struct FnFamily {
  std::vector<IsotoneFn> fns;
  FamilyProvenance provenance = FamilyProvenance::user_supplied;

  std::size_t size() const { return fns.size(); }
  bool empty() const { return fns.empty(); }
};

}  // namespace ordtop
