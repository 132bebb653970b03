#pragma once

#include <string>
#include <vector>

#include "rab/error.hpp"
#include "rab/limits.hpp"

namespace rab {

// Right-angled Coxeter diagram over an ordered type set, together with the
// panel sizes q_i. Off-diagonal bond values are 2 (commuting types) or
// infinity. The declaration order of the types is the canonical order used by
// every normal form and tie-break downstream.
class Diagram {
 public:
  // Sentinel for an infinite bond; serialized as "inf".
  static constexpr int kInf = -1;

  Diagram(std::vector<std::string> types, std::vector<std::vector<int>> m,
          std::vector<int> q, const Limits& limits = {});

  int rank() const { return static_cast<int>(types_.size()); }
  const std::vector<std::string>& types() const { return types_; }
  const std::string& label(int i) const { return types_.at(static_cast<std::size_t>(i)); }
  int index_of(const std::string& label) const;

  int bond(int i, int j) const;
  bool commutes(int i, int j) const { return bond(i, j) == 2; }
  int q(int i) const { return q_.at(static_cast<std::size_t>(i)); }
  bool thick() const;

  // {i != k : m_ik = 2}, sorted.
  std::vector<int> perp(int k) const;
  // true iff every infinite bond has an endpoint in `types`.
  bool is_vertex_cover(const std::vector<int>& types) const;
  // true iff the graph of infinite bonds is connected.
  bool is_irreducible() const;
  // true iff all distinct pairs in `types` commute.
  bool is_spherical(const std::vector<int>& types) const;

 private:
  std::vector<std::string> types_;
  std::vector<std::vector<int>> m_;
  std::vector<int> q_;
};

}  // namespace rab
