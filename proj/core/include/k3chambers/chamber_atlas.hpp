#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "k3chambers/ade.hpp"
#include "k3chambers/lattice_model.hpp"
#include "k3chambers/model_json.hpp"
#include "k3chambers/zariski.hpp"

namespace k3chambers {

enum class ChamberKind { Zariski, Weyl };

/// Names a chamber Z_S or W_S. `boundary` marks divisors on a wall.
struct ChamberSignature {
  CurveSet support;
  bool boundary = false;
  ChamberKind kind = ChamberKind::Zariski;

  friend bool operator==(const ChamberSignature&, const ChamberSignature&) = default;
};

using CurvePair = std::pair<std::size_t, std::size_t>;

/// W_S contained in Z_S; on failure, a curve C' outside S with S + C'
/// negative definite that meets S.
struct WeylInZariskiVerdict {
  bool holds = true;
  std::optional<std::size_t> counterexample;
};

/// int Z_S contained in W_S; on failure, two curves of S meeting in 1.
struct ZariskiInWeylVerdict {
  bool holds = true;
  std::optional<CurvePair> pair;
};

struct ChamberEntry {
  CurveSet support;
  /// Zariski family only.
  std::vector<AdeType> ade;
  std::optional<WeylInZariskiVerdict> weyl_in_zariski;
  std::optional<ZariskiInWeylVerdict> zariski_in_weyl;
  /// A divisor of the form H + sum a_i C_i inside the chamber.
  DivisorClass witness;
};

/// A chamber family, ordered by (size, lexicographic indices); the empty
/// set (nef chamber) comes first.
struct ChamberAtlas {
  ChamberKind kind = ChamberKind::Zariski;
  std::vector<ChamberEntry> entries;

  std::size_t size() const noexcept { return entries.size(); }
  std::vector<CurveSet> family() const;
  bool contains(const CurveSet& s) const;
};

/// All negative definite curve subsets plus the empty set, found by
/// hereditary breadth-first extension.
ChamberAtlas enumerate_zariski_chambers(const SurfaceModel& m);

/// All curve subsets S for which some D = H + sum a_i C_i (a_i >= 0)
/// meets exactly the curves of S negatively and the others positively,
/// decided by exact Fourier-Motzkin elimination over every subset.
/// Throws InvalidArgument for more than 20 curves.
ChamberAtlas enumerate_weyl_chambers(const SurfaceModel& m);

struct BijectionReport {
  bool equal = true;
  std::vector<CurveSet> zariski_only;
  std::vector<CurveSet> weyl_only;
};

BijectionReport compare_families(const ChamberAtlas& zariski, const ChamberAtlas& weyl);
BijectionReport verify_bijection(const SurfaceModel& m);

/// D = H + sum_{i in S} a_i C_i with D . C_j = -1 for every j in S.
/// Throws NotNegativeDefinite if S is empty or not negative definite.
DivisorClass weyl_witness(const SurfaceModel& m, const CurveSet& s);

/// Support = curves met negatively; boundary iff some curve is met in 0.
/// Throws NotBig.
ChamberSignature weyl_signature(const SurfaceModel& m, const DivisorClass& d);

/// Support = Neg(D); boundary iff Null(P) strictly contains Neg(D).
/// Throws NotBig.
ChamberSignature zariski_chamber_of(const SurfaceModel& m, const DivisorClass& d);

ChamberSignature weyl_signature_from(const RatVector& pairings);
ChamberSignature zariski_signature_from(const ZariskiResult& z);

struct DivisorChambers {
  ChamberSignature weyl;
  ChamberSignature zariski;
};

/// Both signatures with one decomposition; nullopt if D is not big.
std::optional<DivisorChambers> classify_divisor(const SurfaceModel& m, const DivisorClass& d);

/// H + (x_1 + 1) C_1 + (x_2 + 3) C_2 where H + x_1 C_1 + x_2 C_2 is
/// orthogonal to both curves. For C_1 . C_2 = 1 its Weyl support is {C_2}
/// and its Zariski support {C_1, C_2}.
DivisorClass divergence_witness(const SurfaceModel& m, std::size_t c1, std::size_t c2);

struct CoincidenceCertificate {
  bool coincide = true;
  std::optional<CurvePair> pair;
  std::optional<DivisorClass> witness;
  std::optional<ChamberSignature> witness_weyl;
  std::optional<ChamberSignature> witness_zariski;
};

/// Zariski interiors equal simple Weyl chambers iff no two curves meet in
/// 1. When they do not, certifies with the first such pair and a divisor
/// whose two signatures differ (checked; InternalInvariant otherwise).
CoincidenceCertificate decompositions_coincide(const SurfaceModel& m);

/// Throws NotNegativeDefinite unless S is negative definite.
WeylInZariskiVerdict weyl_in_zariski(const SurfaceModel& m, const CurveSet& s);
ZariskiInWeylVerdict zariski_interior_in_weyl(const SurfaceModel& m, const CurveSet& s);

/// For a failing weyl_in_zariski(S) with counterexample C', builds
/// D = P_B + c' C' + sum c_i C_i, where P_B is the nef class orthogonal to
/// S + C', (c', c) solves N . C = -1 on S + C', and c' is then replaced by
/// min c_i / 4. The result meets S negatively and every other curve
/// positively while its negative part is supported on S + C'; both facts
/// are checked (InternalInvariant otherwise).
DivisorClass weyl_not_zariski_witness(const SurfaceModel& m, const CurveSet& s,
                                      std::size_t c_prime);

/// ADE types of the connected components of S. Throws NotNegativeDefinite.
std::vector<AdeType> classify_ade(const SurfaceModel& m, const CurveSet& s);

Json chamber_signature_to_json(const SurfaceModel& m, const ChamberSignature& sig);
Json atlas_to_json(const SurfaceModel& m, const ChamberAtlas& atlas);

}  // namespace k3chambers
