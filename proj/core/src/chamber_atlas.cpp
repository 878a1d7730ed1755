#include "k3chambers/chamber_atlas.hpp"

#include <algorithm>
#include <string>

#include "k3chambers/error.hpp"
#include "k3chambers/fourier_motzkin.hpp"

namespace k3chambers {

namespace {

constexpr std::size_t kMaxWeylCurves = 20;

bool negative_definite_set(const SurfaceModel& m, const CurveSet& s) {
  return s.empty() || is_negative_definite(restrict_gram(m, s));
}

void require_negative_definite(const SurfaceModel& m, const CurveSet& s) {
  if (!negative_definite_set(m, s)) {
    throw Error(ErrorCode::NotNegativeDefinite, "curve set is not negative definite");
  }
}

bool contains(const CurveSet& s, std::size_t i) {
  return std::binary_search(s.begin(), s.end(), i);
}

CurveSet with(CurveSet s, std::size_t i) {
  s.insert(std::upper_bound(s.begin(), s.end(), i), i);
  return s;
}

// Calls f(subset) for all subsets of {0..n-1} ordered by (size, lex).
template <typename F>
void for_each_subset_by_size(std::size_t n, F&& f) {
  for (std::size_t r = 0; r <= n; ++r) {
    CurveSet idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    for (;;) {
      f(idx);
      std::size_t pos = r;
      while (pos > 0 && idx[pos - 1] == n - r + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < r; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
}

LinearSystemFeasibility weyl_sign_system(const SurfaceModel& m, const CurveSet& s) {
  const std::size_t k = m.curve_count();
  LinearSystemFeasibility problem;
  problem.variable_count = k;
  for (std::size_t j = 0; j < k; ++j) {
    StrictRow row;
    row.coeffs.resize(k);
    for (std::size_t i = 0; i < k; ++i) row.coeffs[i] = m.curve_gram()(i, j);
    row.constant = m.ample_dots()[j];
    row.sense = contains(s, j) ? Sense::Negative : Sense::Positive;
    problem.strict_rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < k; ++i) problem.nonneg_vars.push_back(i);
  return problem;
}

[[noreturn]] void invariant(const std::string& message) {
  throw Error(ErrorCode::InternalInvariant, message);
}

}  // namespace

std::vector<CurveSet> ChamberAtlas::family() const {
  std::vector<CurveSet> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.support);
  return out;
}

bool ChamberAtlas::contains(const CurveSet& s) const {
  return std::any_of(entries.begin(), entries.end(),
                     [&](const ChamberEntry& e) { return e.support == s; });
}

ChamberAtlas enumerate_zariski_chambers(const SurfaceModel& m) {
  const std::size_t k = m.curve_count();
  std::vector<CurveSet> family{CurveSet{}};
  std::vector<CurveSet> level;
  for (std::size_t i = 0; i < k; ++i) {
    if (negative_definite_set(m, {i})) level.push_back({i});
  }
  while (!level.empty()) {
    family.insert(family.end(), level.begin(), level.end());
    std::vector<CurveSet> next;
    for (const auto& s : level) {
      for (std::size_t j = s.back() + 1; j < k; ++j) {
        CurveSet ext = s;
        ext.push_back(j);
        if (negative_definite_set(m, ext)) next.push_back(std::move(ext));
      }
    }
    level = std::move(next);
  }

  ChamberAtlas atlas;
  atlas.kind = ChamberKind::Zariski;
  for (auto& s : family) {
    ChamberEntry entry;
    entry.ade = classify_ade(m, s);
    entry.weyl_in_zariski = weyl_in_zariski(m, s);
    entry.zariski_in_weyl = zariski_interior_in_weyl(m, s);
    entry.witness = s.empty() ? ample_class(m) : weyl_witness(m, s);
    entry.support = std::move(s);
    atlas.entries.push_back(std::move(entry));
  }
  return atlas;
}

ChamberAtlas enumerate_weyl_chambers(const SurfaceModel& m) {
  const std::size_t k = m.curve_count();
  if (k > kMaxWeylCurves) {
    throw Error(ErrorCode::InvalidArgument, "Weyl enumeration supports at most " +
                                                std::to_string(kMaxWeylCurves) + " curves");
  }
  ChamberAtlas atlas;
  atlas.kind = ChamberKind::Weyl;
  for_each_subset_by_size(k, [&](const CurveSet& s) {
    const FeasibilityResult r = fm_feasible(weyl_sign_system(m, s));
    if (!r.feasible) return;
    ChamberEntry entry;
    entry.support = s;
    entry.witness = combine(m, Rational(1), r.sample);
    atlas.entries.push_back(std::move(entry));
  });
  return atlas;
}

BijectionReport compare_families(const ChamberAtlas& zariski, const ChamberAtlas& weyl) {
  BijectionReport report;
  for (const auto& s : zariski.family()) {
    if (!weyl.contains(s)) report.zariski_only.push_back(s);
  }
  for (const auto& s : weyl.family()) {
    if (!zariski.contains(s)) report.weyl_only.push_back(s);
  }
  report.equal = report.zariski_only.empty() && report.weyl_only.empty();
  return report;
}

BijectionReport verify_bijection(const SurfaceModel& m) {
  return compare_families(enumerate_zariski_chambers(m), enumerate_weyl_chambers(m));
}

DivisorClass weyl_witness(const SurfaceModel& m, const CurveSet& s) {
  if (s.empty()) throw Error(ErrorCode::NotNegativeDefinite, "witness needs a nonempty curve set");
  require_negative_definite(m, s);
  RatVector rhs;
  for (std::size_t j : s) rhs.push_back(Rational(-1) - m.ample_dots()[j]);
  const RatVector a = solve_linear(restrict_gram(m, s), rhs);
  RatVector coeffs(m.curve_count());
  for (std::size_t t = 0; t < s.size(); ++t) {
    if (sign(a[t]) < 0) invariant("Weyl witness coefficient is negative");
    coeffs[s[t]] = a[t];
  }
  DivisorClass d = combine(m, Rational(1), coeffs);
  const RatVector dots = curve_pairings(m, d);
  for (std::size_t j = 0; j < m.curve_count(); ++j) {
    if (contains(s, j) ? dots[j] != -1 : sign(dots[j]) <= 0) {
      invariant("Weyl witness has the wrong sign against " + m.curve_name(j));
    }
  }
  return d;
}

ChamberSignature weyl_signature_from(const RatVector& pairings) {
  ChamberSignature sig;
  sig.kind = ChamberKind::Weyl;
  for (std::size_t j = 0; j < pairings.size(); ++j) {
    const int s = sign(pairings[j]);
    if (s < 0) sig.support.push_back(j);
    if (s == 0) sig.boundary = true;
  }
  return sig;
}

ChamberSignature zariski_signature_from(const ZariskiResult& z) {
  ChamberSignature sig;
  sig.kind = ChamberKind::Zariski;
  sig.support = z.neg_set;
  sig.boundary = z.null_set.size() > z.neg_set.size();
  return sig;
}

ChamberSignature weyl_signature(const SurfaceModel& m, const DivisorClass& d) {
  zariski_decompose(m, d);
  return weyl_signature_from(curve_pairings(m, d));
}

ChamberSignature zariski_chamber_of(const SurfaceModel& m, const DivisorClass& d) {
  return zariski_signature_from(zariski_decompose(m, d));
}

std::optional<DivisorChambers> classify_divisor(const SurfaceModel& m, const DivisorClass& d) {
  BigCertificate cert = is_big(m, d);
  if (!cert.big) return std::nullopt;
  return DivisorChambers{weyl_signature_from(curve_pairings(m, d)),
                         zariski_signature_from(*cert.decomposition)};
}

DivisorClass divergence_witness(const SurfaceModel& m, std::size_t c1, std::size_t c2) {
  const CurveSet s{c1, c2};
  RatVector rhs{-m.ample_dots().at(c1), -m.ample_dots().at(c2)};
  const RatVector x = solve_linear(principal_submatrix(m.curve_gram(), s), rhs);
  RatVector coeffs(m.curve_count());
  coeffs[c1] = x[0] + 1;
  coeffs[c2] = x[1] + 3;
  return combine(m, Rational(1), coeffs);
}

CoincidenceCertificate decompositions_coincide(const SurfaceModel& m) {
  CoincidenceCertificate cert;
  const RatMatrix& cg = m.curve_gram();
  for (std::size_t i = 0; i < m.curve_count() && cert.coincide; ++i) {
    for (std::size_t j = i + 1; j < m.curve_count(); ++j) {
      if (cg(i, j) == 1) {
        cert.coincide = false;
        cert.pair = CurvePair{i, j};
        break;
      }
    }
  }
  if (cert.coincide) return cert;

  const auto [c1, c2] = *cert.pair;
  cert.witness = divergence_witness(m, c1, c2);
  const auto chambers = classify_divisor(m, *cert.witness);
  if (!chambers) invariant("divergence witness is not big");
  if (chambers->weyl.support != CurveSet{c2} || chambers->zariski.support != CurveSet{c1, c2} ||
      chambers->weyl.boundary || chambers->zariski.boundary) {
    invariant("divergence witness does not separate the two decompositions");
  }
  cert.witness_weyl = chambers->weyl;
  cert.witness_zariski = chambers->zariski;
  return cert;
}

WeylInZariskiVerdict weyl_in_zariski(const SurfaceModel& m, const CurveSet& s) {
  require_negative_definite(m, s);
  const RatMatrix& cg = m.curve_gram();
  for (std::size_t c = 0; c < m.curve_count(); ++c) {
    if (contains(s, c) || !negative_definite_set(m, with(s, c))) continue;
    const bool meets = std::any_of(s.begin(), s.end(), [&](std::size_t i) { return cg(c, i) != 0; });
    if (meets) return {false, c};
  }
  return {true, std::nullopt};
}

ZariskiInWeylVerdict zariski_interior_in_weyl(const SurfaceModel& m, const CurveSet& s) {
  require_negative_definite(m, s);
  const RatMatrix& cg = m.curve_gram();
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (cg(s[a], s[b]) == 1) return {false, CurvePair{s[a], s[b]}};
    }
  }
  return {true, std::nullopt};
}

DivisorClass weyl_not_zariski_witness(const SurfaceModel& m, const CurveSet& s,
                                      std::size_t c_prime) {
  if (s.empty() || contains(s, c_prime) || c_prime >= m.curve_count()) {
    throw Error(ErrorCode::InvalidArgument, "need a nonempty S and a curve outside it");
  }
  const CurveSet big_support = with(s, c_prime);
  require_negative_definite(m, big_support);
  const RatMatrix g = restrict_gram(m, big_support);

  RatVector minus_h, minus_one;
  for (std::size_t j : big_support) {
    minus_h.push_back(-m.ample_dots()[j]);
    minus_one.push_back(Rational(-1));
  }
  const RatVector x = solve_linear(g, minus_h);      // P_B = H + sum x_i C_i
  RatVector c = solve_linear(g, minus_one);          // N . C = -1 on S + C'
  Rational min_c;
  bool first = true;
  std::size_t prime_pos = 0;
  for (std::size_t t = 0; t < big_support.size(); ++t) {
    if (big_support[t] == c_prime) {
      prime_pos = t;
      continue;
    }
    if (first || c[t] < min_c) min_c = c[t];
    first = false;
  }
  c[prime_pos] = min_c / 4;

  RatVector coeffs(m.curve_count());
  for (std::size_t t = 0; t < big_support.size(); ++t) coeffs[big_support[t]] = x[t] + c[t];
  DivisorClass d = combine(m, Rational(1), coeffs);

  const RatVector dots = curve_pairings(m, d);
  for (std::size_t j = 0; j < m.curve_count(); ++j) {
    const bool ok = contains(s, j) ? sign(dots[j]) < 0 : sign(dots[j]) > 0;
    if (!ok) invariant("constructed divisor has the wrong sign against " + m.curve_name(j));
  }
  if (zariski_decompose(m, d).neg_set != big_support) {
    invariant("constructed divisor has an unexpected negative part");
  }
  return d;
}

std::vector<AdeType> classify_ade(const SurfaceModel& m, const CurveSet& s) {
  require_negative_definite(m, s);
  return classify_simply_laced(restrict_gram(m, s));
}

Json chamber_signature_to_json(const SurfaceModel& m, const ChamberSignature& sig) {
  Json doc;
  doc["kind"] = sig.kind == ChamberKind::Zariski ? "zariski" : "weyl";
  doc["support"] = curve_set_to_json(m, sig.support);
  doc["boundary"] = sig.boundary;
  return doc;
}

Json atlas_to_json(const SurfaceModel& m, const ChamberAtlas& atlas) {
  Json doc;
  doc["kind"] = atlas.kind == ChamberKind::Zariski ? "zariski" : "weyl";
  doc["count"] = atlas.size();
  Json chambers = Json::array();
  for (const auto& e : atlas.entries) {
    Json entry;
    entry["support"] = curve_set_to_json(m, e.support);
    if (atlas.kind == ChamberKind::Zariski) {
      Json ade = Json::array();
      for (const auto& t : e.ade) ade.push_back(t.name());
      entry["ade"] = std::move(ade);
    }
    if (e.weyl_in_zariski) {
      Json v;
      v["holds"] = e.weyl_in_zariski->holds;
      if (e.weyl_in_zariski->counterexample) {
        v["counterexample"] = m.curve_name(*e.weyl_in_zariski->counterexample);
      }
      entry["weyl_in_zariski"] = std::move(v);
    }
    if (e.zariski_in_weyl) {
      Json v;
      v["holds"] = e.zariski_in_weyl->holds;
      if (e.zariski_in_weyl->pair) {
        v["pair"] = Json::array({m.curve_name(e.zariski_in_weyl->pair->first),
                                 m.curve_name(e.zariski_in_weyl->pair->second)});
      }
      entry["zariski_interior_in_weyl"] = std::move(v);
    }
    entry["witness"] = divisor_to_json(e.witness);
    chambers.push_back(std::move(entry));
  }
  doc["chambers"] = std::move(chambers);
  return doc;
}

}  // namespace k3chambers
