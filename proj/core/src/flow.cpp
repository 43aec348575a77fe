#include "ncflow/flow.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ncflow {

int BetaSystem::index_of(const std::string& coupling) const {
  for (size_t i = 0; i < couplings.size(); ++i)
    if (couplings[i] == coupling) return int(i);
  throw std::out_of_range("BetaSystem: unknown coupling " + coupling);
}

const Scalar& BetaSystem::beta_of(const std::string& coupling) const {
  return betas[size_t(index_of(coupling))];
}

namespace {

bool scalar_mono_has_trace(const Mono& m) {
  auto& tab = SymbolTable::instance();
  for (const auto& [id, e] : m.factors)
    if (tab.is_trace(id)) return true;
  return false;
}

// Keeps only the field content of a coefficient: for a constant tensor
// monomial, terms without a trace factor belong to the regulated
// quadratic part and leave F.
Scalar field_part(const Scalar& s) {
  Scalar out;
  for (const auto& [m, c] : s.terms()) {
    if (!scalar_mono_has_trace(m)) continue;
    out += c * Scalar::from_mono(m);
  }
  return out;
}

}  // namespace

SuperMatrix build_F(const TruncationSpec& trunc, PairingTwist mode) {
  SuperMatrix h = hessian(trunc.action(), trunc.sig, /*twisted=*/true);
  SuperMatrix F(trunc.sig.n);
  for (int i = 0; i < trunc.sig.n; ++i)
    for (int j = 0; j < trunc.sig.n; ++j) {
      for (const auto& [m, c] : h.at(i, j).terms()) {
        TensorMono mm = m;
        // under the display convention the pairing terms (untwisted after
        // the exchange) keep their original twist
        if (mode == PairingTwist::kept) mm.twisted = true;
        if (mm.left.empty() && mm.right.empty()) {
          Scalar f = field_part(c);
          if (!f.is_zero()) F.at(i, j).add(mm, f);
        } else {
          F.at(i, j).add(mm, c);
        }
      }
    }
  return F;
}

std::vector<SuperMatrix> fp_expand(const SuperMatrix& F, int k_max,
                                   const Signature& sig) {
  if (k_max < 1 || k_max > 3)
    throw std::invalid_argument("fp_expand: k_max in 1..3");
  std::vector<SuperMatrix> powers{F};
  for (int k = 2; k <= k_max; ++k)
    powers.push_back(powers.back().star_compose(F, sig));
  return powers;
}

std::map<TraceOp, Scalar> supertrace_project(const TensorPoly& expr,
                                             const TruncationSpec& trunc) {
  const Signature& sig = trunc.sig;
  auto& tab = SymbolTable::instance();

  // Twisted-unit insertion: a plain pair merges into one trace, a
  // twisted pair splits into the product of traces.
  Scalar traced;
  for (const auto& [m, c] : expr.terms()) {
    if (m.twisted)
      traced += c * (Scalar::trace(m.left, sig) * Scalar::trace(m.right, sig));
    else
      traced += c * Scalar::trace(m.left.concat(m.right), sig);
  }

  std::map<TraceOp, Scalar> out;
  for (const auto& [mono, coeff] : traced.terms()) {
    // split trace factors from the numeric/coupling residue
    std::vector<Word> words;
    Mono residue;
    bool bad = false;
    for (const auto& [id, e] : mono.factors) {
      if (!tab.is_trace(id)) {
        residue.factors.push_back({id, e});
        continue;
      }
      if (e < 0) throw std::runtime_error("projection: inverse trace factor");
      for (int k = 0; k < e && !bad; ++k) {
        words.push_back(tab.trace_word(id));
        if (int(words.size()) > trunc.trace_cap) bad = true;
      }
      if (bad) break;
    }
    if (bad || words.empty()) continue;  // trace cap / pure constant
    int total = 0;
    for (const auto& w : words) total += w.degree();
    if (total > trunc.degree_cap) continue;
    bool odd = false;
    for (int l = 0; l < sig.n; ++l) {
      int d = 0;
      for (const auto& w : words) d += w.degree_of(l);
      if (d % 2 != 0) odd = true;
    }
    if (odd) continue;
    TraceOp op = words.size() == 1 ? TraceOp::single(words[0])
                                   : TraceOp::pair(words[0], words[1]);
    Scalar& slot = out[op];
    slot += coeff * Scalar::from_mono(residue);
    if (slot.is_zero()) out.erase(op);
  }
  return out;
}

std::map<TraceOp, Scalar> flow_coefficients(const TruncationSpec& trunc,
                                            int k_max) {
  if (k_max == 0) k_max = trunc.fp_order;
  SuperMatrix F = build_F(trunc);
  std::vector<SuperMatrix> powers = fp_expand(F, k_max, trunc.sig);
  std::map<TraceOp, Scalar> out;
  for (int k = 1; k <= k_max; ++k) {
    Scalar weight = Rational(k % 2 == 0 ? 1 : -1, 2) *
                    (Scalar::h(k) * Scalar::Z(-k));
    auto fk = supertrace_project(powers[size_t(k - 1)].matrix_trace(), trunc);
    for (const auto& [op, c] : fk) {
      Scalar& slot = out[op];
      slot += weight * c;
      if (slot.is_zero()) out.erase(op);
    }
  }
  return out;
}

BetaSystem extract_betas(const TruncationSpec& trunc, int k_max) {
  const Signature& sig = trunc.sig;
  std::map<TraceOp, Scalar> f = flow_coefficients(trunc, k_max);

  // rescale the bar couplings: g_bar = Z^a N^{-b} g
  auto rescale = [&](Scalar s) {
    for (const auto& op : trunc.ops) {
      if (op.quadratic_connected) continue;
      SymbolId id = sym(op.coupling);
      if (!s.depends_on(id)) continue;
      s = s.substituted(id, Scalar::Z(op.z_power) * Scalar::N(-op.n_power) *
                                Scalar::symbol(id));
    }
    return s;
  };

  BetaSystem sys;
  sys.sig = sig;
  for (const auto& op : trunc.ops) {
    auto it = f.find(op.key());
    Scalar raw = it == f.end() ? Scalar::zero() : it->second;
    Scalar kappa{op.prefactor.constant_part().inverse()};
    if (op.quadratic_connected) {
      // eta_i = - f(quadratic row) / (c Z); must come out Z- and N-free
      int letter = op.right.letter_at(0);
      Scalar e = (-Rational(1)) * kappa * rescale(raw) * Scalar::Z(-1);
      e = e.large_N_limit();
      if (e.depends_on(sym_Z()))
        throw std::runtime_error("eta equation: residual Z for letter " +
                                 std::to_string(letter));
      sys.etas.push_back(std::string("eta_") + char('a' + letter));
      sys.eta_rhs.push_back(e);
    } else {
      Scalar fluct = kappa * rescale(raw) * Scalar::Z(-op.z_power) *
                     Scalar::N(op.n_power);
      fluct = fluct.large_N_limit();  // throws on scaling inconsistency
      if (fluct.depends_on(sym_Z()))
        throw std::runtime_error("beta(" + op.coupling + "): residual Z");
      Scalar dim = (Rational(op.z_power) * Scalar::eta() +
                    Scalar(Rational(op.n_power))) *
                   Scalar::symbol(sym(op.coupling));
      sys.couplings.push_back(op.coupling);
      sys.betas.push_back(dim + fluct);
    }
  }
  return sys;
}

Scalar tadpole_flow(const ActionFunctional& action, const Signature& sig) {
  Scalar rho = Scalar::symbol(sym("rho"));
  return Rational(-1, 2) * (rho * trace_tensor(laplacian(action, sig), sig));
}

std::map<std::string, std::string> duality_partner_map() {
  static const std::pair<const char*, const char*> pairs[] = {
      {"a4", "b4"},         {"a6", "b6"},         {"c42", "c24"},
      {"c3111", "c1311"},   {"c2121", "c1212"},   {"d1_1", "d01_01"},
      {"d1_3", "d01_03"},   {"d1_12", "d01_21"},  {"d2_2", "d02_02"},
      {"d1_5", "d01_05"},   {"d1_14", "d01_41"},  {"d1_2111", "d01_1211"},
      {"d11_31", "d11_13"}, {"d2_1111", "d02_1111"}, {"d2_4", "d02_04"},
      {"d2_04", "d02_4"},   {"d2_22", "d02_22"},  {"d3_3", "d03_03"},
      {"d12_3", "d21_03"},  {"d12_12", "d21_21"}, {"d1_32", "d01_23"},
  };
  static const char* selfdual[] = {"c22", "c1111", "d2_02", "d11_11"};
  std::map<std::string, std::string> m;
  for (const auto& [a, b] : pairs) {
    m[a] = b;
    m[b] = a;
  }
  for (const char* s : selfdual) m[s] = s;
  return m;
}

namespace {
// Substitutes the A<->B exchange on coupling symbols of an expression.
Scalar swap_couplings(const Scalar& s,
                      const std::map<std::string, std::string>& partner) {
  // two-phase rename to avoid collisions
  Scalar cur = s;
  std::vector<std::pair<SymbolId, SymbolId>> renames;
  for (const auto& [a, b] : partner) {
    if (a == b) continue;
    SymbolId from = sym(a);
    if (!cur.depends_on(from)) continue;
    SymbolId tmp = sym("#swap:" + a);
    cur = cur.substituted(from, Scalar::symbol(tmp));
    renames.push_back({tmp, sym(b)});
  }
  for (auto [tmp, to] : renames) cur = cur.substituted(tmp, Scalar::symbol(to));
  return cur;
}
}  // namespace

namespace {
// Representative kept for each coupling under the duality reduction.
// A-side names are kept except for the quadratic disconnected pair,
// where the conventional representative is d01_01.
std::string duality_representative(const std::string& name) {
  if (name == "d1_1") return "d01_01";
  static const std::map<std::string, std::string> partner =
      duality_partner_map();
  auto it = partner.find(name);
  if (it == partner.end() || it->second == name) return name;
  // keep the orientation of the table: a-, c42-, d2_04-style names are
  // the first components there
  static const std::set<std::string> reps = [] {
    std::set<std::string> r;
    for (const char* s :
         {"a4", "a6", "c42", "c3111", "c2121", "d01_01", "d1_3", "d1_12",
          "d2_2", "d1_5", "d1_14", "d1_2111", "d11_31", "d2_1111", "d2_4",
          "d2_04", "d2_22", "d3_3", "d12_3", "d12_12", "d1_32", "c22",
          "c1111", "d2_02", "d11_11"})
      r.insert(s);
    return r;
  }();
  return reps.count(name) ? name : it->second;
}

Scalar identify_duals(Scalar s, const std::vector<std::string>& couplings) {
  for (const auto& name : couplings) {
    std::string rep = duality_representative(name);
    if (rep != name) s = s.substituted(sym(name), Scalar::symbol(sym(rep)));
  }
  return s;
}
}  // namespace

BetaSystem apply_duality(const BetaSystem& system, const Signature& sig) {
  if (sig.n != 2 || sig.sign(0) != sig.sign(1))
    throw std::invalid_argument(
        "apply_duality: only the (2,0) and (0,2) signatures are dualizable");
  auto partner = duality_partner_map();

  // pre-reduction invariance: swapping couplings must permute the system
  std::set<std::string> present(system.couplings.begin(),
                                system.couplings.end());
  for (size_t i = 0; i < system.couplings.size(); ++i) {
    const std::string& name = system.couplings[i];
    auto it = partner.find(name);
    if (it == partner.end())
      throw std::runtime_error("apply_duality: no partner for " + name);
    if (!present.count(it->second))
      throw std::runtime_error("apply_duality: partner of " + name +
                               " missing from the system");
    Scalar swapped = swap_couplings(system.betas[i], partner);
    if (swapped != system.beta_of(it->second))
      throw std::runtime_error("apply_duality: system not invariant at " +
                               name);
  }
  if (system.etas.size() == 2 &&
      swap_couplings(system.eta_rhs[0], partner) != system.eta_rhs[1])
    throw std::runtime_error("apply_duality: eta equations not dual");

  BetaSystem out;
  out.sig = sig;
  for (size_t i = 0; i < system.couplings.size(); ++i) {
    const std::string& name = system.couplings[i];
    if (duality_representative(name) != name) continue;
    // redundancy: the partner's identified equation must coincide
    const std::string& p = partner.at(name);
    if (p != name) {
      Scalar mine = identify_duals(system.betas[i], system.couplings);
      Scalar theirs = identify_duals(system.beta_of(p), system.couplings);
      if (mine != theirs)
        throw std::runtime_error("apply_duality: identified equations differ at " +
                                 name);
    }
    out.couplings.push_back(name);
    out.betas.push_back(identify_duals(system.betas[i], system.couplings));
  }
  out.etas.push_back("eta");
  out.eta_rhs.push_back(identify_duals(system.eta_rhs[0], system.couplings));
  return out;
}

}  // namespace ncflow
