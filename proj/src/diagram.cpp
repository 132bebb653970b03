#include "rab/diagram.hpp"

#include <algorithm>
#include <set>

namespace rab {

Diagram::Diagram(std::vector<std::string> types, std::vector<std::vector<int>> m,
                 std::vector<int> q, const Limits& limits)
    : types_(std::move(types)), m_(std::move(m)), q_(std::move(q)) {
  const auto n = types_.size();
  if (n > static_cast<std::size_t>(limits.max_rank)) {
    fail(ErrorKind::kLimit, "rank " + std::to_string(n) + " exceeds safety cap " +
                                std::to_string(limits.max_rank));
  }
  std::set<std::string> seen(types_.begin(), types_.end());
  if (seen.size() != n) fail(ErrorKind::kValidate, "duplicate type labels");
  if (m_.size() != n) fail(ErrorKind::kValidate, "matrix m must have one row per type");
  for (std::size_t i = 0; i < n; ++i) {
    if (m_[i].size() != n) {
      fail(ErrorKind::kValidate, "matrix m row for type '" + types_[i] + "' has wrong length");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;  // diagonal unused
      if (m_[i][j] != 2 && m_[i][j] != kInf) {
        fail(ErrorKind::kValidate, "m entry for types '" + types_[i] + "','" + types_[j] +
                                       "' must be 2 or \"inf\" (right-angled only)");
      }
      if (m_[i][j] != m_[j][i]) {
        fail(ErrorKind::kValidate, "m must be symmetric; mismatch at types '" + types_[i] +
                                       "','" + types_[j] + "'");
      }
    }
  }
  if (q_.size() != n) fail(ErrorKind::kValidate, "q must assign a size to every type");
  for (std::size_t i = 0; i < n; ++i) {
    if (q_[i] < 2) {
      fail(ErrorKind::kValidate, "q for type '" + types_[i] + "' must be at least 2");
    }
    if (q_[i] > limits.max_q) {
      fail(ErrorKind::kLimit, "q for type '" + types_[i] + "' exceeds safety cap " +
                                  std::to_string(limits.max_q));
    }
  }
}

int Diagram::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < types_.size(); ++i) {
    if (types_[i] == label) return static_cast<int>(i);
  }
  fail(ErrorKind::kValidate, "unknown type label '" + label + "'");
}

int Diagram::bond(int i, int j) const {
  return m_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
}

bool Diagram::thick() const {
  return std::all_of(q_.begin(), q_.end(), [](int qi) { return qi >= 3; });
}

std::vector<int> Diagram::perp(int k) const {
  if (k < 0 || k >= rank()) fail(ErrorKind::kValidate, "perp: type index out of range");
  std::vector<int> out;
  for (int i = 0; i < rank(); ++i) {
    if (i != k && commutes(i, k)) out.push_back(i);
  }
  return out;
}

bool Diagram::is_vertex_cover(const std::vector<int>& types) const {
  auto in = [&](int t) { return std::find(types.begin(), types.end(), t) != types.end(); };
  for (int i = 0; i < rank(); ++i) {
    for (int j = i + 1; j < rank(); ++j) {
      if (bond(i, j) == kInf && !in(i) && !in(j)) return false;
    }
  }
  return true;
}

bool Diagram::is_irreducible() const {
  if (rank() <= 1) return true;
  std::vector<bool> visited(static_cast<std::size_t>(rank()), false);
  std::vector<int> stack{0};
  visited[0] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < rank(); ++w) {
      if (w != v && bond(v, w) == kInf && !visited[static_cast<std::size_t>(w)]) {
        visited[static_cast<std::size_t>(w)] = true;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(visited.begin(), visited.end(), [](bool b) { return b; });
}

bool Diagram::is_spherical(const std::vector<int>& types) const {
  for (std::size_t a = 0; a < types.size(); ++a) {
    for (std::size_t b = a + 1; b < types.size(); ++b) {
      if (types[a] == types[b]) continue;
      if (!commutes(types[a], types[b])) return false;
    }
  }
  return true;
}

}  // namespace rab
