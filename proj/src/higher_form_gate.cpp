#include "hfg/higher_form_gate.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace hfg {

HigherFormGate::HigherFormGate(std::size_t h, ChainComplex gate_complex, std::size_t n_data,
                               std::vector<TargetCode> targets,
                               std::vector<PhasedCssOperator> sites)
    : h_(h),
      gate_complex_(std::move(gate_complex)),
      n_data_(n_data),
      targets_(std::move(targets)),
      sites_(std::move(sites)) {
  if (sites_.size() != gate_complex_.dim(h_)) {
    throw std::invalid_argument("gate: one site operator per C_h basis element required");
  }
  for (const PhasedCssOperator &site : sites_) {
    if (site.n() != n_data_) throw std::invalid_argument("gate: site register size mismatch");
  }
  site_embeddings_.resize(targets_.size());
  build_z_span();
}

void HigherFormGate::build_z_span() {
  std::vector<BitVec> columns;
  for (const TargetCode &target : targets_) {
    for (std::size_t j = 0; j < target.code.num_z_checks(); ++j) {
      columns.push_back(embed_in_register(&target - targets_.data(), target.code.z_check(j)));
    }
  }
  z_span_ = BitMatrix(n_data_, std::move(columns));
}

BitVec HigherFormGate::embed_in_register(std::size_t target, const BitVec &v) const {
  const TargetCode &t = targets_.at(target);
  std::vector<uint32_t> map(v.length());
  for (uint32_t q = 0; q < v.length(); ++q) {
    map[q] = static_cast<uint32_t>(t.qubit_offset + q);
  }
  return v.embed(n_data_, map);
}

void HigherFormGate::set_site_embedding(std::size_t target, std::vector<uint32_t> map) {
  if (map.size() != sites_.size()) {
    throw std::invalid_argument("gate: embedding must map every site");
  }
  site_embeddings_.at(target) = std::move(map);
}

const std::vector<uint32_t> &HigherFormGate::site_embedding(std::size_t target) const {
  return site_embeddings_.at(target);
}

void HigherFormGate::set_pre_rotation_t_powers(std::vector<int> powers) {
  if (powers.size() != n_data_) throw std::invalid_argument("gate: pre-rotation size mismatch");
  pre_rotation_t_power_ = std::move(powers);
}

ValidationReport HigherFormGate::validate_gate(std::size_t max_site_support,
                                               std::size_t max_qubit_fanin) const {
  ValidationReport report;
  std::vector<std::size_t> fanin(n_data_, 0);
  for (std::size_t s = 0; s < sites_.size(); ++s) {
    if (!sites_[s].is_hermitian_involution()) {
      report.ok = false;
      report.failures.push_back("site " + std::to_string(s) +
                                " is not a Hermitian involution");
    }
    BitVec support = sites_[s].support();
    if (support.weight() > max_site_support) {
      report.ok = false;
      report.failures.push_back("site " + std::to_string(s) + " support " +
                                std::to_string(support.weight()) + " exceeds cap");
    }
    for (uint32_t q : support.support()) ++fanin[q];
  }
  for (uint32_t q = 0; q < n_data_; ++q) {
    if (fanin[q] > max_qubit_fanin) {
      report.ok = false;
      report.failures.push_back("qubit " + std::to_string(q) + " fan-in " +
                                std::to_string(fanin[q]) + " exceeds cap");
    }
  }
  for (std::size_t a = 0; a < sites_.size(); ++a) {
    for (std::size_t b = a + 1; b < sites_.size(); ++b) {
      if (!sites_[a].commutator(sites_[b]).is_identity()) {
        report.ok = false;
        report.failures.push_back("sites " + std::to_string(a) + " and " + std::to_string(b) +
                                  " do not commute");
      }
    }
  }
  return report;
}

PhasedCssOperator HigherFormGate::gate_for_cocycle(const BitVec &c) const {
  if (!gate_complex_.coboundary(h_ + 1).multiply(c).is_zero()) {
    throw std::invalid_argument("gate_for_cocycle: chain is not a cocycle");
  }
  return gate_for_chain(c);
}

PhasedCssOperator HigherFormGate::gate_for_chain(const BitVec &c) const {
  PhasedCssOperator product = PhasedCssOperator::identity(n_data_);
  for (uint32_t s : c.support()) product = product * sites_[s];
  return product;
}

ValidationReport HigherFormGate::validate_codespace_cz() const {
  ValidationReport report;
  if (targets_.size() != 2 || site_embeddings_[0].empty() || site_embeddings_[1].empty()) {
    report.ok = false;
    report.failures.push_back("CZ validation needs two embedded target codes");
    return report;
  }
  const std::size_t m = sites_.size();
  BitMatrix delta1 = gate_complex_.coboundary(1);
  auto restricted_checks = [&](std::size_t t) {
    std::vector<BitVec> out;
    for (std::size_t i = 0; i < targets_[t].code.num_x_checks(); ++i) {
      BitVec check = targets_[t].code.x_check(i);
      BitVec r(m);
      for (uint32_t s = 0; s < m; ++s) {
        if (check.get(site_embeddings_[t][s])) r.flip(s);
      }
      out.push_back(std::move(r));
    }
    return out;
  };
  std::vector<BitVec> checks1 = restricted_checks(0);
  std::vector<BitVec> checks2 = restricted_checks(1);
  for (std::size_t b = 0; b < gate_complex_.dim(0); ++b) {
    BitVec u = delta1.column(b);
    for (std::size_t i = 0; i < checks1.size(); ++i) {
      BitVec uv = u.elementwise_and(checks1[i]);
      for (std::size_t j = 0; j < checks2.size(); ++j) {
        if (uv.dot(checks2[j])) {
          report.ok = false;
          report.failures.push_back("triple (coboundary " + std::to_string(b) + ", X-check " +
                                    std::to_string(i) + ", X-check " + std::to_string(j) +
                                    ") has odd product");
        }
      }
    }
  }
  return report;
}

ValidationReport HigherFormGate::validate_codespace_xs() const {
  ValidationReport report;
  if (targets_.size() != 1 || site_embeddings_[0].empty()) {
    report.ok = false;
    report.failures.push_back("XS validation needs one embedded target code");
    return report;
  }
  const std::size_t m = sites_.size();
  const CssCode &code = targets_[0].code;
  BitMatrix delta1 = gate_complex_.coboundary(1);
  std::vector<BitVec> checks;
  for (std::size_t i = 0; i < code.num_x_checks(); ++i) {
    BitVec check = code.x_check(i);
    BitVec r(m);
    for (uint32_t s = 0; s < m; ++s) {
      if (check.get(site_embeddings_[0][s])) r.flip(s);
    }
    checks.push_back(std::move(r));
  }
  // Site action classification: S power 1 at the embedded qubit means the
  /// sqrt(-i) X S kind, power 3 the dagger kind.
  auto site_is_xs = [&](uint32_t s) {
    uint32_t q = site_embeddings_[0][s] + static_cast<uint32_t>(targets_[0].qubit_offset);
    return sites_[s].linear_part()[q] == 1;
  };
  for (std::size_t b = 0; b < gate_complex_.dim(0); ++b) {
    BitVec u = delta1.column(b);
    for (std::size_t i = 0; i < checks.size(); ++i) {
      BitVec region = u.elementwise_and(checks[i]);
      for (std::size_t j = 0; j < checks.size(); ++j) {
        if (region.dot(checks[j])) {
          report.ok = false;
          report.failures.push_back("pair (coboundary " + std::to_string(b) + ", X-checks " +
                                    std::to_string(i) + "," + std::to_string(j) +
                                    ") has odd product");
        }
      }
      if (region.weight() % 2 != 0) {
        report.ok = false;
        report.failures.push_back("overlap region (coboundary " + std::to_string(b) +
                                  ", X-check " + std::to_string(i) + ") has odd size");
        continue;
      }
      std::size_t xs_count = 0;
      for (uint32_t s : region.support()) {
        if (site_is_xs(s)) ++xs_count;
      }
      if (xs_count % 2 != (region.weight() / 2) % 2) {
        report.ok = false;
        report.failures.push_back("overlap region (coboundary " + std::to_string(b) +
                                  ", X-check " + std::to_string(i) +
                                  ") fails the XS parity condition");
      }
    }
  }
  return report;
}

HigherFormGate::CodespaceReport HigherFormGate::check_preserves_codespace(
    const BitVec &cocycle) const {
  CodespaceReport report;
  PhasedCssOperator u = gate_for_cocycle(cocycle);
  // A pure-Z residual is a cycle when it commutes with every X-check of
  // every target, i.e. its per-target slice lies in ker d_1.
  auto is_cycle = [&](const BitVec &z) {
    for (std::size_t t = 0; t < targets_.size(); ++t) {
      const CssCode &code = targets_[t].code;
      for (std::size_t i = 0; i < code.num_x_checks(); ++i) {
        if (z.dot(embed_in_register(t, code.x_check(i)))) return false;
      }
    }
    return true;
  };
  auto check_commutator = [&](const PhasedCssOperator &check, const std::string &name) {
    PhasedCssOperator comm = u.commutator(check);
    if (comm.is_identity()) return;
    if (comm.is_pure_z()) {
      if (z_span_.solve(comm.z_vector()).has_value()) return;  // stabilizer tail
      if (is_cycle(comm.z_vector())) {
        report.strict_ok = false;  // logical Z tail: cycle-level condition only
        return;
      }
    }
    report.cycles_ok = false;
    report.strict_ok = false;
    report.failures.push_back("commutator with " + name + " is " + comm.to_string() +
                              ", not a +1 Z-cycle");
  };
  for (std::size_t t = 0; t < targets_.size(); ++t) {
    const CssCode &code = targets_[t].code;
    for (std::size_t i = 0; i < code.num_x_checks(); ++i) {
      check_commutator(PhasedCssOperator::from_x(embed_in_register(t, code.x_check(i))),
                       "X-check " + std::to_string(i) + " of target " + std::to_string(t));
    }
    for (std::size_t j = 0; j < code.num_z_checks(); ++j) {
      check_commutator(PhasedCssOperator::from_z(embed_in_register(t, code.z_check(j))),
                       "Z-check " + std::to_string(j) + " of target " + std::to_string(t));
    }
  }
  return report;
}

std::optional<BitVec> HigherFormGate::cleanability_witness(const std::vector<uint32_t> &region,
                                                           const BitVec &cocycle) const {
  BitMatrix delta_h = gate_complex_.coboundary(h_);
  std::vector<BitVec> restricted_cols;
  restricted_cols.reserve(delta_h.cols());
  for (std::size_t b = 0; b < delta_h.cols(); ++b) {
    restricted_cols.push_back(delta_h.column(b).restrict_to(region));
  }
  BitMatrix restricted(region.size(), std::move(restricted_cols));
  return restricted.solve(cocycle.restrict_to(region));
}

std::string HigherFormGate::to_json() const {
  nlohmann::json j;
  j["h"] = h_;
  j["gate_complex"] = nlohmann::json::parse(gate_complex_.to_json());
  nlohmann::json sites = nlohmann::json::object();
  for (std::size_t s = 0; s < sites_.size(); ++s) {
    sites[std::to_string(s)] = sites_[s].to_string();
  }
  j["sites"] = sites;
  nlohmann::json embeddings = nlohmann::json::array();
  for (const auto &e : site_embeddings_) embeddings.push_back(e);
  j["embedding"] = embeddings;
  return j.dump();
}

namespace {

// (u o v) . w over all triples of X-check generators of one code.
bool triple_products_vanish(const CssCode &code) {
  std::vector<BitVec> checks;
  for (std::size_t i = 0; i < code.num_x_checks(); ++i) checks.push_back(code.x_check(i));
  for (const BitVec &u : checks) {
    for (const BitVec &v : checks) {
      BitVec uv = u.elementwise_and(v);
      for (const BitVec &w : checks) {
        if (uv.dot(w)) return false;
      }
    }
  }
  return true;
}

}  // namespace

HigherFormGate derive_from_ccz(const CssCode &code) {
  if (!triple_products_vanish(code)) {
    throw std::invalid_argument(
        "derive_from_ccz: transversal CCZ does not preserve the triple codespace "
        "(X-check triple product is odd)");
  }
  const std::size_t n = code.n();
  std::vector<PhasedCssOperator> sites;
  sites.reserve(n);
  for (uint32_t q = 0; q < n; ++q) {
    // Group commutator of the qubitwise CCZ with X on the third copy,
    // evaluated in the operator algebra on three blocks.
    PhasedCssOperator x3 = PhasedCssOperator::pauli_x(3 * n, static_cast<uint32_t>(2 * n + q));
    PhasedCssOperator comm =
        x3.conjugate_by_ccz(q, static_cast<uint32_t>(n + q), static_cast<uint32_t>(2 * n + q)) *
        x3.dagger();
    PhasedCssOperator expected =
        PhasedCssOperator::cz(3 * n, q, static_cast<uint32_t>(n + q));
    if (!(comm == expected)) {
      throw std::logic_error("derive_from_ccz: commutator is not the cross-copy CZ");
    }
    sites.push_back(PhasedCssOperator::cz(2 * n, q, static_cast<uint32_t>(n + q)));
  }
  std::vector<TargetCode> targets{{code, 0}, {code, n}};
  HigherFormGate gate(1, code.complex(), 2 * n, std::move(targets), std::move(sites));
  std::vector<uint32_t> identity_map(n);
  for (uint32_t q = 0; q < n; ++q) identity_map[q] = q;
  gate.set_site_embedding(0, identity_map);
  gate.set_site_embedding(1, identity_map);
  return gate;
}

HigherFormGate derive_from_t(const CssCode &code, const std::vector<int> &t_signs) {
  const std::size_t n = code.n();
  if (t_signs.size() != n) {
    throw std::invalid_argument("derive_from_t: bipartition must cover all qubits");
  }
  std::vector<PhasedCssOperator> sites;
  sites.reserve(n);
  for (uint32_t q = 0; q < n; ++q) {
    if (t_signs[q] != 1 && t_signs[q] != -1) {
      throw std::invalid_argument("derive_from_t: signs must be +1 or -1");
    }
    sites.push_back(PhasedCssOperator::pauli_x(n, q).conjugate_by_t(q, t_signs[q]));
  }
  std::vector<TargetCode> targets{{code, 0}};
  HigherFormGate gate(1, code.complex(), n, std::move(targets), std::move(sites));
  std::vector<uint32_t> identity_map(n);
  for (uint32_t q = 0; q < n; ++q) identity_map[q] = q;
  gate.set_site_embedding(0, identity_map);
  std::vector<int> pre(n);
  for (uint32_t q = 0; q < n; ++q) pre[q] = -t_signs[q];
  gate.set_pre_rotation_t_powers(pre);
  gate.set_sites_x_conjugate(true);
  return gate;
}

HigherFormGate make_pauli_1form(const CssCode &code, PauliBasis basis,
                                const std::vector<uint32_t> &restriction, std::size_t blocks) {
  if (blocks == 0) throw std::invalid_argument("pauli_1form: need at least one block");
  const std::size_t n = code.n();
  // For the Z basis the roles of the two boundary maps are reversed.
  ChainComplex base = basis == PauliBasis::X
                          ? code.complex()
                          : ChainComplex({code.complex().dim(2), n, code.complex().dim(0)},
                                         {code.complex().boundary(2).transpose(),
                                          code.complex().boundary(1).transpose()});
  std::vector<uint32_t> qubits = restriction;
  if (qubits.empty()) {
    qubits.resize(n);
    for (uint32_t q = 0; q < n; ++q) qubits[q] = q;
  } else {
    std::vector<uint32_t> sorted = qubits;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
        (!sorted.empty() && sorted.back() >= n)) {
      throw std::invalid_argument("pauli_1form: invalid restriction");
    }
    qubits = sorted;
  }
  ChainComplex gate_cx = base;
  if (qubits.size() != n) {
    // Truncate: C_1' = restricted qubits, C_0' = checks supported inside the
    // region, C_2' = all dual checks restricted columnwise.
    BitMatrix d1 = base.boundary(1);
    BitMatrix d2 = base.boundary(2);
    std::vector<BitVec> kept_check_rows;
    for (std::size_t i = 0; i < base.dim(0); ++i) {
      BitVec row = d1.row(i);
      BitVec inside = row.restrict_to(qubits);
      if (inside.weight() == row.weight() && !row.is_zero()) {
        kept_check_rows.push_back(inside);
      }
    }
    BitMatrix d1r = BitMatrix::from_rows(qubits.size(), kept_check_rows);
    std::vector<BitVec> d2_cols;
    for (std::size_t j = 0; j < base.dim(2); ++j) {
      d2_cols.push_back(d2.column(j).restrict_to(qubits));
    }
    BitMatrix d2r(qubits.size(), std::move(d2_cols));
    gate_cx = ChainComplex({kept_check_rows.size(), qubits.size(), base.dim(2)}, {d1r, d2r});
  }

  const std::size_t n_data = n * blocks;
  std::vector<PhasedCssOperator> sites;
  sites.reserve(qubits.size());
  for (uint32_t s = 0; s < qubits.size(); ++s) {
    BitVec support(n_data);
    for (std::size_t b = 0; b < blocks; ++b) {
      support.flip(static_cast<uint32_t>(b * n + qubits[s]));
    }
    sites.push_back(basis == PauliBasis::X ? PhasedCssOperator::from_x(support)
                                           : PhasedCssOperator::from_z(support));
  }
  std::vector<TargetCode> targets;
  for (std::size_t b = 0; b < blocks; ++b) targets.push_back({code, b * n});
  HigherFormGate gate(1, gate_cx, n_data, std::move(targets), std::move(sites));
  for (std::size_t b = 0; b < blocks; ++b) gate.set_site_embedding(b, qubits);
  gate.set_sites_x_conjugate(basis == PauliBasis::X);
  gate.set_strongly_transversal(true);
  return gate;
}

HigherFormGate make_cz_pair(const CssCode &code_a, const CssCode &code_b) {
  if (code_a.n() != code_b.n()) {
    throw std::invalid_argument("cz_pair: codes must share a qubit indexing");
  }
  const std::size_t m = code_a.n();
  // Constraint rows are elementwise products of X-check pairs; keep an
  // independent subset so the ancilla count stays minimal.
  std::vector<BitVec> rows;
  std::vector<BitVec> echelon;
  auto try_add = [&](BitVec candidate) {
    BitVec residual = candidate;
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
      echelon.push_back(residual);
      rows.push_back(std::move(candidate));
    }
  };
  for (std::size_t i = 0; i < code_a.num_x_checks(); ++i) {
    BitVec u = code_a.x_check(i);
    for (std::size_t j = 0; j < code_b.num_x_checks(); ++j) {
      BitVec product = u.elementwise_and(code_b.x_check(j));
      if (!product.is_zero()) try_add(std::move(product));
    }
  }
  BitMatrix d2 = BitMatrix(m, rows);  // C_2 -> C_1, one column per row
  BitMatrix d1(0, m);
  ChainComplex gate_cx({0, m, rows.size()}, {d1, d2});

  std::vector<PhasedCssOperator> sites;
  sites.reserve(m);
  for (uint32_t q = 0; q < m; ++q) {
    sites.push_back(PhasedCssOperator::cz(2 * m, q, static_cast<uint32_t>(m + q)));
  }
  std::vector<TargetCode> targets{{code_a, 0}, {code_b, m}};
  HigherFormGate gate(1, gate_cx, 2 * m, std::move(targets), std::move(sites));
  std::vector<uint32_t> identity_map(m);
  for (uint32_t q = 0; q < m; ++q) identity_map[q] = q;
  gate.set_site_embedding(0, identity_map);
  gate.set_site_embedding(1, identity_map);
  return gate;
}

}  // namespace hfg
