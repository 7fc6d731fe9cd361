#include "catkit/monotone.hpp"

namespace catkit {
namespace {

void extend(std::vector<int>& cur, int k, int m, int lo, bool strict, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k + 1) {
    out.push_back(cur);
    return;
  }
  for (int v = lo; v <= m; ++v) {
    cur.push_back(v);
    extend(cur, k, m, strict ? v + 1 : v, strict, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> monotone_maps(int k, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (k >= 0 && m >= 0) extend(cur, k, m, 0, false, out);
  return out;
}

std::vector<std::vector<int>> injective_monotone_maps(int k, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (k >= 0 && m >= 0) extend(cur, k, m, 0, true, out);
  return out;
}

std::string format_values(const std::vector<int>& values) {
  std::string s = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(values[i]);
  }
  return s + ")";
}

std::vector<int> compose_values(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(b.size());
  for (int v : b) out.push_back(a[v]);
  return out;
}

std::vector<int> identity_values(int k) {
  std::vector<int> out(k + 1);
  for (int i = 0; i <= k; ++i) out[i] = i;
  return out;
}

std::vector<int> coface(int k, int i) {
  std::vector<int> out;
  for (int v = 0; v <= k; ++v) {
    if (v != i) out.push_back(v);
  }
  return out;
}

std::vector<int> codegeneracy(int k, int j) {
  std::vector<int> out;
  for (int v = 0; v <= k + 1; ++v) out.push_back(v <= j ? v : v - 1);
  return out;
}

long long binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  long long c = 1;
  for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

}  // namespace catkit
