#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rab/colouring.hpp"

namespace rab {

void validate_local_data(const Diagram& d, const LocalData& local);

// Shared evaluation context: the building, its canonical legal colouring and
// the prescribed local groups. Automorphisms hold a pointer to their
// Universe, which must outlive them.
class Universe {
 public:
  Universe(Diagram diagram, LocalData local, Limits limits = {});

  const Diagram& diagram() const { return building_.diagram(); }
  const Building& building() const { return building_; }
  LegalColouring& colouring() { return colouring_; }
  const LocalData& local() const { return local_; }
  const Limits& limits() const { return building_.limits(); }

  // Gallery distance with a shared memo; automorphism evaluation hits the
  // same pairs over and over.
  int cached_dist(const Chamber& a, const Chamber& b);
  int cached_panel_dist(const Chamber& c, const Panel& p);

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<Chamber, Chamber>& p) const {
      return ChamberHash{}(p.first) * 1000003u ^ ChamberHash{}(p.second);
    }
  };

  Building building_;
  LocalData local_;
  LegalColouring colouring_;
  std::unordered_map<std::pair<Chamber, Chamber>, int, PairHash> dist_cache_;
};

// A lazily evaluated automorphism, given as an expression over primitive
// generators. Evaluation is memoized per node; evaluate single-threaded.
class Automorphism {
 public:
  static Automorphism identity(Universe& u);

  Chamber apply(const Chamber& c) const;
  Automorphism inverse() const;
  friend Automorphism compose(const Automorphism& g, const Automorphism& h);  // g after h

  // The colour permutation induced at the panel: lambda o g o lambda^{-1}.
  Perm local_action(const Panel& p) const;
  // True when every local action at every panel fully contained in
  // ball(base, radius) lies in the prescribed local group.
  bool local_actions_within(int radius) const;

  Universe& universe() const;
  std::string describe() const;

  struct Node;  // implementation detail, defined in universal.cpp

 private:
  friend Automorphism extend_local(Universe&, const Panel&, const Perm&);
  friend Automorphism recolouring_with_seed(Universe&, const std::vector<Perm>&, const Chamber&,
                                            const Chamber&, bool);
  explicit Automorphism(std::shared_ptr<Node> node) : node_(std::move(node)) {}
  std::shared_ptr<Node> node_;
};

// The extension of f0 in F_k to an automorphism that stabilises the panel p0,
// acts on it by f0, and fixes every chamber whose projection colour is fixed
// by f0. Images are propagated outward from p0: squares determine the image
// when a chamber has several closer neighbours, and fixed transversal
// elements phi_i(x,y) are used when it has one.
Automorphism extend_local(Universe& u, const Panel& p0, const Perm& f0);

// The automorphism with lambda(g . c) = (f_i(lambda_i(c)))_i and g . src = dst.
// `require_membership` is dropped only by tests that need a map outside the
// universal group as a negative control.
Automorphism recolouring_with_seed(Universe& u, const std::vector<Perm>& f, const Chamber& src,
                                   const Chamber& dst, bool require_membership = true);
// Seeded at the base chamber.
Automorphism recolouring_aut(Universe& u, const std::vector<Perm>& f);

// An explicit witness automorphism mapping c to d when they are harmonious;
// empty otherwise.
std::optional<Automorphism> u_orbit_check(Universe& u, const Chamber& c, const Chamber& d);

// Chamber-stabilising generators: for every chamber b within the radius,
// every type i and every nontrivial element of the stabiliser of lambda_i(b)
// in F_i, the extension seeded at b's i-panel (which fixes b).
std::vector<Automorphism> uplus_generators(Universe& u, int radius,
                                           std::size_t max_count = static_cast<std::size_t>(-1));

// Closure of {c} inside ball(base, radius) under the generators above; an
// under-approximation of the orbit of the subgroup generated by all chamber
// stabilisers.
std::vector<Chamber> uplus_orbit_on_ball(Universe& u, const Chamber& c, int radius);

// The explicit generating data for the universal group of a finite instance:
// orbit transversals, the transversal-coloured sets B and D, the pair list
// behind T and the panels feeding S, plus a bounded reachability check that
// every chamber of ball(c, |I|+2) is reached from B under S and T.
struct CompgenSets {
  std::vector<std::vector<int>> transversals;
  Chamber c;
  std::vector<Chamber> b_set;
  std::vector<Chamber> d_set;
  std::vector<std::pair<Chamber, Chamber>> t_pairs;
  std::vector<Panel> s_panels;
  bool step1_passed = false;
  bool step2_passed = false;
  bool step3_passed = false;

  bool steps_passed() const { return step1_passed && step2_passed && step3_passed; }
};

CompgenSets compgen_sets(Universe& u);

}  // namespace rab
