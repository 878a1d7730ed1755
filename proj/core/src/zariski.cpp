#include "k3chambers/zariski.hpp"

#include <algorithm>
#include <string>

#include "k3chambers/error.hpp"

namespace k3chambers {

namespace {

class NotBigError : public Error {
 public:
  NotBigError(std::string stage, const std::string& message)
      : Error(ErrorCode::NotBig, message), stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

std::string describe(const SurfaceModel& m, const CurveSet& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ",";
    out += m.curve_name(s[k]);
  }
  return out + "}";
}

}  // namespace

std::vector<Rational> solve_negative_part(const SurfaceModel& m, const RatVector& pairings,
                                          const CurveSet& s) {
  if (s.empty()) return {};
  RatVector rhs;
  rhs.reserve(s.size());
  for (std::size_t i : s) rhs.push_back(pairings.at(i));
  return solve_linear(restrict_gram(m, s), rhs);
}

ZariskiResult zariski_decompose(const SurfaceModel& m, const DivisorClass& d) {
  check_divisor(m, d);
  if (m.mode() == ModelMode::Configuration && sign(d.ample_coeff) <= 0) {
    throw Error(ErrorCode::ModeUnsupported,
                "configuration-mode divisors need a positive ample coefficient, got " +
                    to_string(d.ample_coeff));
  }
  const std::size_t k = m.curve_count();
  const RatMatrix& cg = m.curve_gram();
  const RatVector pairings = curve_pairings(m, d);

  CurveSet support;
  for (std::size_t j = 0; j < k; ++j) {
    if (sign(pairings[j]) < 0) support.push_back(j);
  }

  std::vector<Rational> coeffs;
  RatVector residual;
  for (;;) {
    if (!support.empty() && !is_negative_definite(restrict_gram(m, support))) {
      throw NotBigError("support_not_negative_definite",
                        "negative part support " + describe(m, support) +
                            " is not negative definite");
    }
    coeffs = solve_negative_part(m, pairings, support);
    residual = pairings;
    for (std::size_t a = 0; a < support.size(); ++a) {
      for (std::size_t j = 0; j < k; ++j) residual[j] -= coeffs[a] * cg(support[a], j);
    }
    std::optional<std::size_t> worst;
    for (std::size_t j = 0; j < k; ++j) {
      if (sign(residual[j]) >= 0 || std::binary_search(support.begin(), support.end(), j)) continue;
      if (!worst || residual[j] < residual[*worst]) worst = j;
    }
    if (!worst) break;
    support.insert(std::upper_bound(support.begin(), support.end(), *worst), *worst);
  }

  for (std::size_t a = 0; a < support.size(); ++a) {
    if (sign(coeffs[a]) <= 0) {
      throw Error(ErrorCode::InternalInvariant,
                  "negative part coefficient of " + m.curve_name(support[a]) + " is not positive");
    }
  }

  RatVector full_coeffs(k);
  for (std::size_t a = 0; a < support.size(); ++a) full_coeffs[support[a]] = coeffs[a];
  ZariskiResult result;
  result.negative_part = combine(m, Rational(0), full_coeffs);
  result.nef_part = d - result.negative_part;
  result.neg_set = support;
  result.neg_coeffs = std::move(coeffs);
  for (std::size_t j = 0; j < k; ++j) {
    if (residual[j] == 0) result.null_set.push_back(j);
  }
  result.nef_pairings = std::move(residual);

  const Rational p_square = pair(m, result.nef_part, result.nef_part);
  const Rational p_ample = ample_pairing(m, result.nef_part);
  if (sign(p_square) <= 0 || sign(p_ample) <= 0) {
    throw NotBigError("nef_part_not_big", "nef part has P^2 = " + to_string(p_square) +
                                              " and P.H = " + to_string(p_ample));
  }
  return result;
}

Rational volume(const SurfaceModel& m, const DivisorClass& d) {
  const ZariskiResult z = zariski_decompose(m, d);
  return pair(m, z.nef_part, z.nef_part);
}

BigCertificate is_big(const SurfaceModel& m, const DivisorClass& d) {
  BigCertificate cert;
  try {
    cert.decomposition = zariski_decompose(m, d);
    cert.big = true;
  } catch (const NotBigError& e) {
    cert.failing_stage = e.stage();
    cert.detail = e.what();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ModeUnsupported) throw;
    cert.failing_stage = "mode_unsupported";
    cert.detail = e.what();
  }
  return cert;
}

}  // namespace k3chambers
