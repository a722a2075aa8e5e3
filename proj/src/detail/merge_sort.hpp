#pragma once

#include <algorithm>
#include <vector>

#include "dtg/graph.hpp"

namespace dtg::detail {

// Bottom-up merge sort. Safe with comparators that are not strict weak
// orders: the output is always a permutation of the input, callers certify
// the result afterwards.
template <class Less>
void merge_sort(std::vector<Vertex>& seq, Less less) {
  std::vector<Vertex> buf(seq.size());
  for (std::size_t width = 1; width < seq.size(); width *= 2) {
    for (std::size_t lo = 0; lo < seq.size(); lo += 2 * width) {
      const std::size_t mid = std::min(lo + width, seq.size());
      const std::size_t hi = std::min(lo + 2 * width, seq.size());
      std::size_t i = lo;
      std::size_t j = mid;
      std::size_t k = lo;
      while (i < mid && j < hi) buf[k++] = less(seq[j], seq[i]) ? seq[j++] : seq[i++];
      while (i < mid) buf[k++] = seq[i++];
      while (j < hi) buf[k++] = seq[j++];
    }
    seq.swap(buf);
  }
}

}  // namespace dtg::detail
