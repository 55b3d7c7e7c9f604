#include "cohom/irrepmeta.hpp"

#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

namespace cohom {

IrrepSpec IrrepSpec::of(SimpleType t, Weight w, std::string label) {
  IrrepSpec s;
  s.simple = t;
  s.weight = std::move(w);
  s.global_form_label = std::move(label);
  return s;
}

IrrepSpec IrrepSpec::torus(Weight character, std::string label) {
  IrrepSpec s;
  s.torus_rank = static_cast<int>(character.size());
  s.weight = std::move(character);
  s.global_form_label = std::move(label);
  return s;
}

std::string IrrepSpec::describe() const {
  if (simple) return simple->name() + weight_to_string(weight);
  return "T" + std::to_string(torus_rank) + weight_to_string(weight);
}

void validate(const IrrepSpec& s) {
  if (s.simple) {
    if (!is_valid(*s.simple)) throw std::invalid_argument("invalid simple type " + s.simple->name());
    if (static_cast<int>(s.weight.size()) != s.simple->rank)
      throw std::invalid_argument("weight length does not match rank for " + s.describe());
    if (!is_dominant(s.weight)) throw std::invalid_argument("weight is not dominant: " + s.describe());
  } else {
    if (s.torus_rank < 1 || static_cast<int>(s.weight.size()) != s.torus_rank)
      throw std::invalid_argument("bad torus character");
  }
}

std::string to_string(FSType t) {
  switch (t) {
    case FSType::Real: return "real";
    case FSType::Complex: return "complex";
    case FSType::Quaternionic: return "quaternionic";
  }
  return "?";
}

char type_letter(FSType t) { return t == FSType::Real ? 'r' : t == FSType::Complex ? 'c' : 'q'; }

FSType fs_type(const IrrepSpec& spec) {
  validate(spec);
  if (spec.is_torus()) {
    bool zero = true;
    for (int x : spec.weight) zero = zero && x == 0;
    return zero ? FSType::Real : FSType::Complex;
  }
  const RootSystem& rs = root_system(*spec.simple);
  if (longest_element_dual(rs, spec.weight) != spec.weight) return FSType::Complex;
  // The element exp(2 pi i rho^vee) is central and acts by (-1)^<lam, 2 rho^vee>.
  long s = 0;
  for (size_t k = 0; k < rs.positive_coroots.size(); ++k) s += rs.pair_coroot(spec.weight, k);
  return (s % 2 == 0) ? FSType::Real : FSType::Quaternionic;
}

long complex_dim(const IrrepSpec& spec) {
  validate(spec);
  if (spec.is_torus()) return 1;
  return weyl_dim_small(root_system(*spec.simple), spec.weight);
}

long real_dim(const IrrepSpec& spec) {
  long d = complex_dim(spec);
  return fs_type(spec) == FSType::Real ? d : 2 * d;
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& dominant) {
  std::set<Weight> seen{dominant};
  std::vector<Weight> stack{dominant};
  while (!stack.empty()) {
    Weight w = stack.back();
    stack.pop_back();
    for (int i = 0; i < rs.rank; ++i) {
      if (w[i] == 0) continue;
      Weight u = rs.reflect(w, i);
      if (seen.insert(u).second) stack.push_back(u);
    }
  }
  return {seen.begin(), seen.end()};
}

namespace {

std::map<Weight, int> freudenthal(const RootSystem& rs, const Weight& lam) {
  // Dominant weights below lam, reached by subtracting positive roots.
  std::vector<std::vector<int>> root_labels;
  for (const auto& r : rs.positive_roots) root_labels.push_back(rs.root_labels(r));
  std::set<Weight> dom{lam};
  std::vector<Weight> stack{lam};
  while (!stack.empty()) {
    Weight w = stack.back();
    stack.pop_back();
    for (const auto& a : root_labels) {
      Weight u = w;
      for (int i = 0; i < rs.rank; ++i) u[i] -= a[i];
      if (is_dominant(u) && dom.insert(u).second) stack.push_back(u);
    }
  }
  // Process by increasing depth below lam.
  std::vector<std::pair<Rational, Weight>> order;
  for (const auto& w : dom) {
    Weight d(rs.rank);
    for (int i = 0; i < rs.rank; ++i) d[i] = lam[i] - w[i];
    Rational h = 0;
    for (const auto& c : rs.root_coords(d)) h += c;
    order.push_back({h, w});
  }
  std::sort(order.begin(), order.end());

  Weight lr = lam;
  for (auto& x : lr) ++x;
  Rational top = rs.inner(lr, lr);
  std::map<Weight, int> mult;
  auto lookup = [&](const Weight& w) -> int {
    Weight d = dominant_conjugate(rs, w);
    auto it = mult.find(d);
    if (it != mult.end()) return it->second;
    return dom.count(d) ? -1 : 0;
  };
  for (const auto& [h, mu] : order) {
    if (mu == lam) {
      mult[mu] = 1;
      continue;
    }
    Rational sum = 0;
    for (const auto& a : root_labels) {
      Weight w = mu;
      for (int k = 1;; ++k) {
        for (int i = 0; i < rs.rank; ++i) w[i] += a[i];
        int m = lookup(w);
        if (m == 0) break;
        if (m < 0) throw std::logic_error("Freudenthal: order violated");
        sum += m * rs.inner(w, a);
      }
    }
    Weight mr = mu;
    for (auto& x : mr) ++x;
    Rational denom = top - rs.inner(mr, mr);
    Rational m = 2 * sum / denom;
    if (m.get_den() != 1) throw std::logic_error("Freudenthal: non-integral multiplicity");
    mult[mu] = static_cast<int>(m.get_num().get_si());
  }
  return mult;
}

}  // namespace

const std::map<Weight, int>& dominant_multiplicities(const SimpleType& t, const Weight& lam) {
  static std::mutex mu;
  static std::map<std::pair<SimpleType, Weight>, std::unique_ptr<std::map<Weight, int>>> cache;
  auto key = std::make_pair(t, lam);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto value = std::make_unique<std::map<Weight, int>>(freudenthal(root_system(t), lam));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(value));
  return *it->second;
}

WeightMultiset weight_multiplicities(const IrrepSpec& spec) {
  validate(spec);
  if (spec.is_torus()) throw std::invalid_argument("weight_multiplicities: torus characters are their own weights");
  const RootSystem& rs = root_system(*spec.simple);
  WeightMultiset out;
  for (const auto& [w, m] : dominant_multiplicities(*spec.simple, spec.weight))
    for (const auto& u : weyl_orbit(rs, w)) out[u] = m;
  return out;
}

int zero_weight_dim(const IrrepSpec& spec) {
  validate(spec);
  if (spec.is_torus()) throw std::invalid_argument("zero_weight_dim: simple type required");
  const auto& dm = dominant_multiplicities(*spec.simple, spec.weight);
  auto it = dm.find(Weight(spec.simple->rank, 0));
  return it == dm.end() ? 0 : it->second;
}

}  // namespace cohom
