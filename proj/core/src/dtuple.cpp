#include "dtuples/dtuple.hpp"

#include <algorithm>

namespace dtuples {

DTupleCheck verify_dtuple(std::vector<Int> elems, const Int& n) {
  for (const Int& e : elems)
    if (e <= 0) throw domain_error("verify_dtuple: elements must be positive");
  std::sort(elems.begin(), elems.end());
  if (std::adjacent_find(elems.begin(), elems.end()) != elems.end())
    throw domain_error("verify_dtuple: elements must be distinct");

  DTupleCheck out;
  DTuple t;
  t.elems = elems;
  t.n = n;
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = i + 1; j < elems.size(); ++j) {
      Int prod = elems[i] * elems[j] + n;
      auto r = prod >= 0 ? isqrt(prod) : IsqrtResult{0, false};
      if (!r.exact) {
        out.first_failure = {elems[i], elems[j]};
        return out;
      }
      t.witnesses.push_back({elems[i], elems[j], r.root});
    }
  out.valid = true;
  out.tuple = std::move(t);
  return out;
}

}  // namespace dtuples
