#include "hfg/chain_complex.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include <json.hpp>

namespace hfg {

std::string DistanceResult::to_string() const {
  switch (status) {
    case Status::Finite:
      return std::to_string(weight);
    case Status::Infinite:
      return "inf";
    default:
      return "unknown";
  }
}

ChainComplex::ChainComplex(std::vector<std::size_t> dims, std::vector<BitMatrix> boundaries)
    : dims_(std::move(dims)), boundaries_(std::move(boundaries)) {
  if (dims_.empty()) throw std::invalid_argument("ChainComplex: no grades");
  if (boundaries_.size() + 1 != dims_.size()) {
    throw std::invalid_argument("ChainComplex: need one boundary map per grade pair");
  }
  for (std::size_t i = 1; i < dims_.size(); ++i) {
    const BitMatrix &b = boundaries_[i - 1];
    if (b.rows() != dims_[i - 1] || b.cols() != dims_[i]) {
      throw std::invalid_argument("ChainComplex: boundary shape mismatch at grade " +
                                  std::to_string(i));
    }
  }
  labels_.resize(dims_.size());
}

BitMatrix ChainComplex::boundary(std::size_t i) const {
  if (i >= 1 && i <= top_grade()) return boundaries_[i - 1];
  if (i == 0) return BitMatrix(0, dims_.empty() ? 0 : dims_[0]);
  return BitMatrix(dims_.back(), 0);  // beyond the top grade
}

BitMatrix ChainComplex::coboundary(std::size_t i) const { return boundary(i).transpose(); }

ValidationReport ChainComplex::validate() const {
  ValidationReport report;
  for (std::size_t i = 1; i + 1 <= top_grade(); ++i) {
    BitMatrix product = boundaries_[i - 1].multiply(boundaries_[i]);
    for (std::size_t c = 0; c < product.cols(); ++c) {
      if (!product.column(c).is_zero()) {
        report.ok = false;
        report.failures.push_back("boundary composition nonzero at grade " +
                                  std::to_string(i + 1) + " column " + std::to_string(c));
      }
    }
  }
  return report;
}

std::size_t ChainComplex::betti(std::size_t grade) const {
  std::size_t cycles = dim(grade) - boundary(grade).rank();
  return cycles - boundary(grade + 1).rank();
}

std::size_t ChainComplex::cobetti(std::size_t grade) const {
  std::size_t cocycles = dim(grade) - coboundary(grade + 1).rank();
  return cocycles - coboundary(grade).rank();
}

std::vector<BitVec> ChainComplex::quotient_basis(const BitMatrix &cycle_map,
                                                 const BitMatrix &boundary_map) const {
  std::vector<BitVec> kernel = cycle_map.kernel_basis();
  std::vector<BitVec> image = boundary_map.image_basis();
  // Extend the image basis to span the kernel; the added residuals are the
  // class representatives.
  std::vector<BitVec> echelon = image;  // rows keep distinct leading indices
  std::vector<BitVec> reps;
  for (const BitVec &k : kernel) {
    BitVec residual = k;
    bool changed = true;
    while (changed && !residual.is_zero()) {
      changed = false;
      for (const BitVec &r : echelon) {
        if (!r.is_zero() && residual.get(r.support().front())) {
          residual += r;
          changed = true;
        }
      }
    }
    if (!residual.is_zero()) {
      reps.push_back(residual);
      echelon.push_back(residual);
    }
  }
  // Greedy weight reduction by image generators keeps representatives small,
  // which shrinks simulation supports downstream.
  for (BitVec &rep : reps) {
    bool improved = true;
    while (improved) {
      improved = false;
      for (const BitVec &b : image) {
        BitVec candidate = rep + b;
        if (candidate.weight() < rep.weight() ||
            (candidate.weight() == rep.weight() && candidate.weight_lex_less(rep))) {
          rep = candidate;
          improved = true;
        }
      }
    }
  }
  return reps;
}

HomologyBasis ChainComplex::homology_basis(std::size_t grade) const {
  HomologyBasis basis;
  basis.grade = grade;
  basis.kind = HomologyKind::Homology;
  basis.representatives = quotient_basis(boundary(grade), boundary(grade + 1));
  return basis;
}

HomologyBasis ChainComplex::cohomology_basis(std::size_t grade) const {
  HomologyBasis basis;
  basis.grade = grade;
  basis.kind = HomologyKind::Cohomology;
  basis.representatives = quotient_basis(coboundary(grade + 1), coboundary(grade));
  return basis;
}

DistanceResult ChainComplex::homology_distance(std::size_t grade, HomologyKind kind,
                                               std::size_t budget) const {
  HomologyBasis basis = kind == HomologyKind::Homology ? homology_basis(grade)
                                                       : cohomology_basis(grade);
  const std::size_t k = basis.representatives.size();
  if (k == 0) return {DistanceResult::Status::Infinite, 0, BitVec(dim(grade))};
  BitMatrix modded = kind == HomologyKind::Homology ? boundary(grade + 1)
                                                    : coboundary(grade);
  bool any_unknown = false;
  DistanceResult best{DistanceResult::Status::Unknown, 0, BitVec(dim(grade))};
  for (uint64_t combo = 1; combo < (uint64_t{1} << k); ++combo) {
    BitVec rep(dim(grade));
    for (std::size_t i = 0; i < k; ++i) {
      if ((combo >> i) & 1) rep += basis.representatives[i];
    }
    CosetSearchResult result = coset_min_weight(modded, rep, budget);
    if (!result.known) {
      any_unknown = true;
      continue;
    }
    if (best.status != DistanceResult::Status::Finite || result.weight < best.weight ||
        (result.weight == best.weight && result.witness.weight_lex_less(best.witness))) {
      best = {DistanceResult::Status::Finite, result.weight, result.witness};
    }
  }
  // Unknown cosets were only pruned above `budget`, so a found minimum at or
  // below the budget is still globally exact.
  if (any_unknown && (best.status != DistanceResult::Status::Finite || best.weight > budget)) {
    return {DistanceResult::Status::Unknown, 0, BitVec(dim(grade))};
  }
  return best;
}

CheegerResult ChainComplex::cheeger(std::size_t h, std::size_t class_budget_bits) const {
  const BitMatrix delta = coboundary(h + 1);
  std::vector<BitVec> kernel = delta.kernel_basis();
  const std::size_t class_bits = dim(h) - kernel.size();
  CheegerResult out;
  if (class_bits > class_budget_bits || class_bits == 0) return out;  // unknown
  if (kernel.size() > 24) return out;  // per-class search would not be exhaustive

  BitMatrix kernel_mat(dim(h), kernel);
  // One preimage per image-basis vector parametrizes the nonzero classes.
  std::vector<BitVec> image = delta.image_basis();
  std::vector<BitVec> preimages;
  preimages.reserve(image.size());
  for (const BitVec &w : image) {
    auto pre = delta.solve(w);
    if (!pre) throw std::logic_error("cheeger: image vector without preimage");
    preimages.push_back(*pre);
  }
  BitVec current(dim(h));
  for (uint64_t k = 1; k < (uint64_t{1} << class_bits); ++k) {
    current += preimages[std::countr_zero(k)];  // Gray-code walk over classes
    CosetSearchResult cm = coset_min_weight(kernel_mat, current, dim(h));
    if (!cm.known) return CheegerResult{};
    std::size_t num = delta.multiply(current).weight();
    std::size_t den = cm.weight;
    if (den == 0) throw std::logic_error("cheeger: zero-weight nonzero class");
    if (!out.known || num * out.denominator < out.numerator * den) {
      out = {true, num, den, cm.witness};
    }
  }
  return out;
}

ChainComplex ChainComplex::extend_with_cycle_space() const {
  std::vector<BitVec> cycles = boundary(top_grade()).kernel_basis();
  std::vector<std::size_t> dims = dims_;
  dims.push_back(cycles.size());
  std::vector<BitMatrix> boundaries = boundaries_;
  boundaries.emplace_back(dims_.back(), cycles);
  return ChainComplex(std::move(dims), std::move(boundaries));
}

void ChainComplex::set_labels(std::size_t grade, std::vector<std::string> labels) {
  labels_.at(grade) = std::move(labels);
}

const std::vector<std::string> &ChainComplex::labels(std::size_t grade) const {
  return labels_.at(grade);
}

std::string ChainComplex::to_json() const {
  nlohmann::json j;
  j["grades"] = dims_;
  nlohmann::json maps = nlohmann::json::array();
  for (const BitMatrix &b : boundaries_) maps.push_back(nlohmann::json::parse(b.to_json()));
  j["boundaries"] = maps;
  nlohmann::json labels = nlohmann::json::object();
  for (std::size_t g = 0; g < labels_.size(); ++g) {
    if (!labels_[g].empty()) labels[std::to_string(g)] = labels_[g];
  }
  j["labels"] = labels;
  return j.dump();
}

ChainComplex ChainComplex::from_json(const std::string &text) {
  nlohmann::json j = nlohmann::json::parse(text);
  auto dims = j.at("grades").get<std::vector<std::size_t>>();
  std::vector<BitMatrix> boundaries;
  for (const auto &m : j.at("boundaries")) boundaries.push_back(BitMatrix::from_json(m.dump()));
  ChainComplex cx(dims, boundaries);
  if (j.contains("labels")) {
    for (auto &[grade, names] : j.at("labels").items()) {
      cx.set_labels(std::stoul(grade), names.get<std::vector<std::string>>());
    }
  }
  return cx;
}

}  // namespace hfg
