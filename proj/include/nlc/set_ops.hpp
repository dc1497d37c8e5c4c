//
// nlc-infer - Copyright 2026 The nlc-infer Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef NLC_SET_OPS_HPP_
#define NLC_SET_OPS_HPP_

#include <algorithm>
#include <set>

namespace nlc::sets {

template <typename T>
bool contains(const std::set<T>& s, const T& x) {
  return s.find(x) != s.end();
}

template <typename T>
bool is_subset(const std::set<T>& sub, const std::set<T>& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

template <typename T>
bool intersects(const std::set<T>& a, const std::set<T>& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      return true;
    }
  }
  return false;
}

template <typename T>
std::set<T> set_union(const std::set<T>& a, const std::set<T>& b) {
  std::set<T> out = a;
  out.insert(b.begin(), b.end());
  return out;
}

template <typename T>
std::set<T> intersection(const std::set<T>& a, const std::set<T>& b) {
  std::set<T> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

template <typename T>
std::set<T> difference(const std::set<T>& a, const std::set<T>& b) {
  std::set<T> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

}  // namespace nlc::sets

#endif  // NLC_SET_OPS_HPP_
