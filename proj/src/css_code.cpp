#include "hfg/css_code.hpp"

#include <stdexcept>

#include <json.hpp>

namespace hfg {

namespace {

// Invert a k x k GF(2) matrix given as row vectors; throws if singular.
std::vector<BitVec> invert(const std::vector<BitVec> &rows) {
  const std::size_t k = rows.size();
  std::vector<BitVec> a = rows;
  std::vector<BitVec> inv;
  inv.reserve(k);
  for (uint32_t i = 0; i < k; ++i) inv.push_back(BitVec::unit(k, i));
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && !a[pivot].get(static_cast<uint32_t>(col))) ++pivot;
    if (pivot == k) throw std::logic_error("logical pairing matrix is singular");
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r != col && a[r].get(static_cast<uint32_t>(col))) {
        a[r] += a[col];
        inv[r] += inv[col];
      }
    }
  }
  return inv;
}

}  // namespace

CssCode::CssCode(ChainComplex cx) : complex_(std::move(cx)) {
  if (complex_.num_grades() < 3) {
    throw std::invalid_argument("CssCode: complex needs at least 3 grades");
  }
  ValidationReport report = complex_.validate();
  if (!report.ok) {
    throw std::invalid_argument("CssCode: complex fails validation: " + report.failures[0]);
  }
  k_ = complex_.cobetti(1);
  if (k_ != complex_.betti(1)) throw std::logic_error("CssCode: H_1 / H^1 mismatch");

  logical_x_ = complex_.cohomology_basis(1).representatives;
  logical_z_ = complex_.homology_basis(1).representatives;
  if (k_ == 0) return;

  // Pairing P_ij = <x_i, z_j>; replace the X basis by P^{-1} X so the
  // normalized pairing is the identity.
  std::vector<BitVec> pairing;
  pairing.reserve(k_);
  for (const BitVec &x : logical_x_) {
    BitVec row(k_);
    for (uint32_t j = 0; j < k_; ++j) row.set(j, x.dot(logical_z_[j]));
    pairing.push_back(row);
  }
  std::vector<BitVec> inverse = invert(pairing);
  std::vector<BitVec> normalized;
  normalized.reserve(k_);
  for (uint32_t i = 0; i < k_; ++i) {
    BitVec combo(n());
    for (uint32_t m = 0; m < k_; ++m) {
      if (inverse[i].get(m)) combo += logical_x_[m];
    }
    normalized.push_back(std::move(combo));
  }
  logical_x_ = std::move(normalized);
}

BitVec CssCode::x_check(std::size_t i) const {
  return complex_.boundary(1).row(i);
}

BitVec CssCode::z_check(std::size_t j) const { return complex_.boundary(2).column(j); }

std::pair<DistanceResult, DistanceResult> CssCode::code_distance(std::size_t budget) const {
  DistanceResult dx = complex_.homology_distance(1, HomologyKind::Cohomology, budget);
  DistanceResult dz = complex_.homology_distance(1, HomologyKind::Homology, budget);
  return {dx, dz};
}

LdpcProfile CssCode::ldpc_profile() const {
  LdpcProfile profile;
  std::vector<std::size_t> qubit_degree(n(), 0);
  for (std::size_t i = 0; i < num_x_checks(); ++i) {
    BitVec check = x_check(i);
    profile.max_check_weight = std::max(profile.max_check_weight, check.weight());
    for (uint32_t q : check.support()) ++qubit_degree[q];
  }
  for (std::size_t j = 0; j < num_z_checks(); ++j) {
    BitVec check = z_check(j);
    profile.max_check_weight = std::max(profile.max_check_weight, check.weight());
    for (uint32_t q : check.support()) ++qubit_degree[q];
  }
  for (std::size_t deg : qubit_degree) {
    profile.max_qubit_degree = std::max(profile.max_qubit_degree, deg);
  }
  return profile;
}

bool CssCode::in_z_check_group(const BitVec &v) const {
  return complex_.boundary(2).solve(v).has_value();
}

bool CssCode::in_x_check_group(const BitVec &v) const {
  return complex_.coboundary(1).solve(v).has_value();
}

std::string CssCode::to_json() const {
  nlohmann::json j;
  j["n"] = n();
  j["k"] = k();
  auto supports = [](const std::vector<BitVec> &vs) {
    nlohmann::json out = nlohmann::json::array();
    for (const BitVec &v : vs) out.push_back(v.support());
    return out;
  };
  std::vector<BitVec> xs, zs;
  for (std::size_t i = 0; i < num_x_checks(); ++i) xs.push_back(x_check(i));
  for (std::size_t i = 0; i < num_z_checks(); ++i) zs.push_back(z_check(i));
  j["x_checks"] = supports(xs);
  j["z_checks"] = supports(zs);
  j["logical_x"] = supports(logical_x_);
  j["logical_z"] = supports(logical_z_);
  return j.dump();
}

}  // namespace hfg
