#include "rab/predicates.hpp"

#include <algorithm>

namespace rab {

std::string to_string(Truth t) {
  switch (t) {
    case Truth::kTrue:
      return "true";
    case Truth::kFalse:
      return "false";
    case Truth::kUnknown:
      return "unknown";
  }
  return "?";
}

namespace {

std::string orbit_list(const PermGroup& g) {
  std::string out;
  for (const auto& orbit : g.orbits()) {
    out += "{";
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      if (k > 0) out += " ";
      out += std::to_string(orbit[k]);
    }
    out += "}";
  }
  return out;
}

}  // namespace

Verdict verdict_discrete(const Diagram& d, const LocalData& local) {
  Verdict v{"discrete", Truth::kTrue, {}, "discreteness: the group acts freely (equivalently, is discrete) iff every local group acts freely"};
  for (int i = 0; i < d.rank(); ++i) {
    auto violation = local.at(i).free_violation();
    if (violation.has_value()) {
      v.value = Truth::kFalse;
      v.reasons.push_back({"F_" + d.label(i) + " acts freely", "fails",
                           violation->first.to_string() + " fixes " +
                               std::to_string(violation->second)});
    } else {
      v.reasons.push_back({"F_" + d.label(i) + " acts freely", "holds", ""});
    }
  }
  return v;
}

Verdict verdict_locally_compact(const Diagram& d, const LocalData& local) {
  Verdict v{"locally-compact", Truth::kTrue, {}, "local compactness: equivalent to compactness of every point stabiliser in every local group; automatic at finite degree"};
  for (int i = 0; i < d.rank(); ++i) {
    const PermGroup& g = local.at(i);
    std::string sizes;
    for (int x = 0; x < g.degree(); ++x) {
      PermGroup stab = g.point_stabilizer(x);
      std::size_t largest = 0;
      for (const auto& orbit : stab.orbits()) largest = std::max(largest, orbit.size());
      if (x > 0) sizes += ",";
      sizes += std::to_string(largest);
    }
    v.reasons.push_back({"point stabilisers of F_" + d.label(i) + " have finite orbits",
                         "holds (finite degree)", "largest stabiliser orbit per point: " + sizes});
  }
  return v;
}

OrbitCount orbit_count(const LocalData& local) {
  OrbitCount out;
  for (const PermGroup& g : local.groups) {
    std::size_t orbits = g.orbits().size();
    out.per_type.push_back(orbits);
    out.count *= orbits;
  }
  out.transitive = out.count == 1;
  return out;
}

namespace {

// Shared clause evaluation for the chamber-stabiliser criterion.
void u_eq_uplus_clauses(const Diagram& d, const LocalData& local, Verdict& v) {
  for (int i = 0; i < d.rank(); ++i) {
    const PermGroup& g = local.at(i);
    PermGroup plus = g.plus_subgroup();
    if (plus == g) {
      v.reasons.push_back({"F_" + d.label(i) + " generated by point stabilisers", "holds", ""});
    } else {
      v.value = Truth::kFalse;
      const Perm* outside = nullptr;
      for (const Perm& e : g.elements()) {
        if (!plus.contains(e)) {
          outside = &e;
          break;
        }
      }
      v.reasons.push_back({"F_" + d.label(i) + " generated by point stabilisers", "fails",
                           outside != nullptr ? outside->to_string() + " is not a product of stabilising elements"
                                              : ""});
    }
  }
  std::vector<int> transitive_types;
  for (int i = 0; i < d.rank(); ++i) {
    if (local.at(i).is_transitive()) transitive_types.push_back(i);
  }
  if (d.is_vertex_cover(transitive_types)) {
    std::string names;
    for (int i : transitive_types) names += (names.empty() ? "" : ",") + d.label(i);
    v.reasons.push_back({"transitive types contain a vertex cover", "holds",
                         "transitive types: {" + names + "}"});
  } else {
    v.value = Truth::kFalse;
    std::string witness;
    for (int i = 0; i < d.rank() && witness.empty(); ++i) {
      for (int j = i + 1; j < d.rank(); ++j) {
        bool i_trans = local.at(i).is_transitive();
        bool j_trans = local.at(j).is_transitive();
        if (d.bond(i, j) == Diagram::kInf && !i_trans && !j_trans) {
          witness = "uncovered infinite bond {" + d.label(i) + "," + d.label(j) +
                    "} with both local groups intransitive";
          break;
        }
      }
    }
    v.reasons.push_back({"transitive types contain a vertex cover", "fails", witness});
  }
}

}  // namespace

Verdict verdict_u_eq_uplus(const Diagram& d, const LocalData& local) {
  Verdict v{"u-equals-uplus", Truth::kTrue, {}, "chamber-stabiliser generation: all local groups plus-closed and the transitive types form a vertex cover"};
  u_eq_uplus_clauses(d, local, v);
  return v;
}

Verdict verdict_simple(const Diagram& d, const LocalData& local) {
  Verdict v{"simple", Truth::kTrue, {}, "simplicity: under thickness, irreducibility and rank >= 2, simplicity is equivalent to generation by chamber stabilisers"};
  bool gates_ok = true;
  if (d.thick()) {
    v.reasons.push_back({"hypothesis: thick (all q >= 3)", "holds", ""});
  } else {
    gates_ok = false;
    std::string thin;
    for (int i = 0; i < d.rank(); ++i) {
      if (d.q(i) < 3) thin = "q_" + d.label(i) + " = " + std::to_string(d.q(i));
    }
    v.reasons.push_back({"hypothesis: thick (all q >= 3)", "fails", thin});
  }
  if (d.is_irreducible()) {
    v.reasons.push_back({"hypothesis: irreducible diagram", "holds", ""});
  } else {
    gates_ok = false;
    v.reasons.push_back({"hypothesis: irreducible diagram", "fails", ""});
  }
  if (d.rank() >= 2) {
    v.reasons.push_back({"hypothesis: rank >= 2", "holds", ""});
  } else {
    gates_ok = false;
    v.reasons.push_back({"hypothesis: rank >= 2", "fails", "rank " + std::to_string(d.rank())});
  }
  if (!gates_ok) {
    v.value = Truth::kFalse;
    return v;
  }
  u_eq_uplus_clauses(d, local, v);
  return v;
}

Verdict verdict_compactly_generated(const Diagram& d, const LocalData& local) {
  Verdict v{"compactly-generated", Truth::kTrue, {}, "compact generation: finitely many local orbits and compactly generated local groups suffice; panel stabilisers inherit compact generation from the local groups"};
  OrbitCount orbits = orbit_count(local);
  for (int i = 0; i < d.rank(); ++i) {
    v.reasons.push_back({"F_" + d.label(i) + " has finitely many orbits", "holds",
                         std::to_string(orbits.per_type[static_cast<std::size_t>(i)]) + " orbits"});
    v.reasons.push_back({"F_" + d.label(i) + " compactly generated", "holds (finite group)", ""});
  }
  if (d.rank() >= 2) {
    Limits lim;
    lim.max_radius = std::max(lim.max_radius, d.rank() + 2);
    Universe u(d, local, lim);
    CompgenSets sets = compgen_sets(u);
    std::string summary = "|B|=" + std::to_string(sets.b_set.size()) +
                          ", |D|=" + std::to_string(sets.d_set.size()) +
                          ", |T|=" + std::to_string(sets.t_pairs.size()) +
                          ", S over " + std::to_string(sets.s_panels.size()) + " panels";
    v.reasons.push_back({"explicit generating set: bounded reachability steps 1-3",
                         sets.steps_passed() ? "holds" : "fails", summary});
    if (!sets.steps_passed()) v.value = Truth::kFalse;
  } else {
    v.reasons.push_back({"explicit generating set", "not constructed",
                         "construction requires rank >= 2"});
  }
  return v;
}

Verdict verdict_compactly_generated(const Diagram& d,
                                    const std::vector<LocalDescriptor>& described) {
  Verdict v{"compactly-generated", Truth::kTrue, {}, "compact generation: finitely many orbits is necessary; with compactly generated local groups it is sufficient; the converse for local compact generation is open"};
  if (static_cast<int>(described.size()) != d.rank()) {
    fail(ErrorKind::kValidate, "descriptors: need one entry per type");
  }
  bool any_unknown = false;
  for (int i = 0; i < d.rank(); ++i) {
    const LocalDescriptor& desc = described[static_cast<std::size_t>(i)];
    if (desc.finitely_many_orbits.has_value() && !*desc.finitely_many_orbits) {
      v.value = Truth::kFalse;
      v.reasons.push_back({"F_" + d.label(i) + " has finitely many orbits", "fails",
                           "infinitely many orbits exclude compact generation"});
      continue;
    }
    if (!desc.finitely_many_orbits.has_value()) {
      any_unknown = true;
      v.reasons.push_back({"F_" + d.label(i) + " has finitely many orbits", "unknown", ""});
    } else {
      v.reasons.push_back({"F_" + d.label(i) + " has finitely many orbits", "holds", ""});
    }
    if (!desc.compactly_generated.has_value()) {
      any_unknown = true;
      v.reasons.push_back({"F_" + d.label(i) + " compactly generated", "unknown",
                           "open in general whether compact generation of the group forces it"});
    } else if (*desc.compactly_generated) {
      v.reasons.push_back({"F_" + d.label(i) + " compactly generated", "holds", ""});
    } else {
      any_unknown = true;
      v.reasons.push_back({"F_" + d.label(i) + " compactly generated", "fails",
                           "sufficiency unavailable; necessity of this clause is open"});
    }
  }
  if (v.value != Truth::kFalse && any_unknown) v.value = Truth::kUnknown;
  return v;
}

Verdict verdict_primitive_on_residues(const Diagram& d, const LocalData& local,
                                      const std::vector<int>& J) {
  for (int j : J) {
    if (j < 0 || j >= d.rank()) fail(ErrorKind::kValidate, "primitivity: type index out of range");
  }
  std::vector<int> sorted = J;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (static_cast<int>(sorted.size()) >= d.rank()) {
    fail(ErrorKind::kValidate, "primitivity: J must be a proper subset of the types");
  }
  Verdict v{"primitive-on-residues", Truth::kTrue, {}, "primitivity on J-residues: co-rank one, primitive non-regular complement, transitive neighbours across infinite bonds"};
  std::vector<int> complement;
  for (int i = 0; i < d.rank(); ++i) {
    if (std::find(sorted.begin(), sorted.end(), i) == sorted.end()) complement.push_back(i);
  }
  if (complement.size() != 1) {
    v.value = Truth::kFalse;
    v.reasons.push_back({"|I \\ J| = 1", "fails",
                         std::to_string(complement.size()) +
                             " missing types; larger residues form blocks"});
    return v;
  }
  int k = complement.front();
  v.reasons.push_back({"|I \\ J| = 1", "holds", "complement type '" + d.label(k) + "'"});

  const PermGroup& fk = local.at(k);
  if (fk.is_primitive()) {
    v.reasons.push_back({"F_" + d.label(k) + " primitive", "holds", ""});
  } else {
    v.value = Truth::kFalse;
    auto blocks = fk.nontrivial_blocks();
    std::string witness = fk.is_transitive() ? "block system: " : "intransitive; orbits: ";
    if (blocks.has_value()) {
      for (const auto& block : *blocks) {
        witness += "{";
        for (std::size_t a = 0; a < block.size(); ++a) {
          if (a > 0) witness += " ";
          witness += std::to_string(block[a]);
        }
        witness += "}";
      }
    } else {
      witness += orbit_list(fk);
    }
    v.reasons.push_back({"F_" + d.label(k) + " primitive", "fails", witness});
  }
  if (!fk.is_regular()) {
    v.reasons.push_back({"F_" + d.label(k) + " non-regular", "holds", ""});
  } else {
    v.value = Truth::kFalse;
    v.reasons.push_back({"F_" + d.label(k) + " non-regular", "fails",
                         "regular: free and transitive, order " + std::to_string(fk.order())});
  }
  for (int i = 0; i < d.rank(); ++i) {
    if (i == k || d.bond(i, k) != Diagram::kInf) continue;
    if (local.at(i).is_transitive()) {
      v.reasons.push_back({"F_" + d.label(i) + " transitive (infinite bond with '" + d.label(k) + "')",
                           "holds", ""});
    } else {
      v.value = Truth::kFalse;
      v.reasons.push_back({"F_" + d.label(i) + " transitive (infinite bond with '" + d.label(k) + "')",
                           "fails", "orbits: " + orbit_list(local.at(i))});
    }
  }
  return v;
}

}  // namespace rab
