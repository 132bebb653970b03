#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rab/universal.hpp"

namespace rab {

enum class Truth { kFalse, kTrue, kUnknown };

std::string to_string(Truth t);

struct Reason {
  std::string condition;
  std::string outcome;
  std::string witness;
};

// A theorem-backed verdict: the value, the clause-by-clause reasons with
// witnesses, and a tag naming the criterion it instantiates.
struct Verdict {
  std::string name;
  Truth value = Truth::kUnknown;
  std::vector<Reason> reasons;
  std::string citation;
};

// True iff every local group acts freely; carries a fixing non-trivial
// element otherwise. Free local actions make the whole group act freely
// (equivalently, discretely).
Verdict verdict_discrete(const Diagram& d, const LocalData& local);

// Point stabilisers of finite groups are finite, so finite local data is
// always locally compact; the verdict lists the stabiliser orbit sizes.
Verdict verdict_locally_compact(const Diagram& d, const LocalData& local);

struct OrbitCount {
  std::size_t count = 1;
  bool transitive = true;
  std::vector<std::size_t> per_type;
};

// Chamber orbits correspond to colour-orbit combinations: the count is the
// product of the per-type orbit counts.
OrbitCount orbit_count(const LocalData& local);

// The group is generated by its chamber stabilisers iff every local group is
// generated by point stabilisers and the transitive types cover every
// infinite bond.
Verdict verdict_u_eq_uplus(const Diagram& d, const LocalData& local);

// Simplicity criterion; the standing hypotheses (thick, irreducible,
// rank >= 2) are reported as separate gate reasons.
Verdict verdict_simple(const Diagram& d, const LocalData& local);

// Finite local groups always yield a compactly generated group; the verdict
// attaches the explicit generating-set construction when the rank allows it.
Verdict verdict_compactly_generated(const Diagram& d, const LocalData& local);

// Abstract descriptors for local groups that are not given by generators;
// the converse direction is open, hence the three-valued outcome.
struct LocalDescriptor {
  std::optional<bool> compactly_generated;
  std::optional<bool> finitely_many_orbits;
};

Verdict verdict_compactly_generated(const Diagram& d,
                                    const std::vector<LocalDescriptor>& described);

// Primitivity of the action on J-residues: the complement of J must be a
// single type k, F_k primitive and non-regular, and F_i transitive whenever
// m_ik is infinite.
Verdict verdict_primitive_on_residues(const Diagram& d, const LocalData& local,
                                      const std::vector<int>& J);

}  // namespace rab
