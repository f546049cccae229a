#include "pvs/multilinear.hpp"

#include <algorithm>

namespace pvs {

Blade make_blade(const std::vector<int>& idx, int dim) {
  Blade b = 0;
  int prev = 0;
  for (int i : idx) {
    if (i < 1 || i > dim) throw std::invalid_argument("index " + std::to_string(i) + " out of range 1.." + std::to_string(dim));
    if (i <= prev) throw std::invalid_argument("indices not strictly increasing");
    b |= Blade{1} << (i - 1);
    prev = i;
  }
  return b;
}

int sort_sign(std::vector<int>& idx) {
  int s = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      s = -s;
    }
  }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i - 1] == idx[i]) return 0;
  return s;
}

std::vector<Blade> all_blades(int n, int d) {
  std::vector<Blade> out;
  if (d < 0 || d > n) return out;
  std::vector<int> idx(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    Blade b = 0;
    for (int i : idx) b |= Blade{1} << (i - 1);
    out.push_back(b);
    int k = d - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == n - d + k + 1) --k;
    if (k < 0) break;
    ++idx[static_cast<std::size_t>(k)];
    for (int j = k + 1; j < d; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::string blade_key(Blade b) {
  std::string s;
  for (int i : blade_indices(b)) {
    if (!s.empty()) s += ',';
    s += std::to_string(i);
  }
  return s;
}

std::string blade_label(Blade b) {
  const auto idx = blade_indices(b);
  if (std::any_of(idx.begin(), idx.end(), [](int i) { return i > 9; })) return blade_key(b);
  std::string s;
  for (int i : idx) s += static_cast<char>('0' + i);
  return s;
}

}  // namespace pvs
