#include "hesselink/root_datum.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hesselink {

long RootDatum::dim_group() const {
  long d = static_cast<long>(rank);
  for (long m : mults) d += m;
  return d;
}

Vec RootDatum::coroot(size_t i) const {
  Vec t = gram.transport(roots[i]);
  Rat n2 = gram.norm2(t);
  return scale(Rat(2) / n2, t);
}

Mat RootDatum::simple_reflection(size_t simple_pos) const {
  size_t ri = simples[simple_pos];
  Vec cr = coroot(ri);
  const Vec& alpha = roots[ri];
  Mat s(rank, zero_vec(rank));
  for (size_t j = 0; j < rank; ++j) {
    Vec e = zero_vec(rank);
    e[j] = 1;
    Vec img = sub(e, scale(pairing(alpha, e), cr));
    for (size_t i = 0; i < rank; ++i) s[i][j] = img[i];
  }
  return s;
}

std::vector<size_t> RootDatum::span_closure(const std::vector<size_t>& simple_subset) const {
  Mat rows;
  for (size_t sp : simple_subset) rows.push_back(roots[simples[sp]]);
  std::vector<size_t> out;
  for (size_t i = 0; i < roots.size(); ++i) {
    if (rows.empty()) break;
    auto c = solve(transpose(rows), roots[i]);
    if (c && mat_vec(transpose(rows), *c) == roots[i]) out.push_back(i);
  }
  return out;
}

void RootDatum::validate() const {
  if (roots.size() % 2 != 0) throw EngineError(Err::MalformedSpec, "roots not paired");
  size_t np = positive_count();
  for (size_t i = 0; i < np; ++i) {
    if (roots[np + i] != negate(roots[i]))
      throw EngineError(Err::MalformedSpec, "negation closure violated");
    if (mults[np + i] != mults[i])
      throw EngineError(Err::MalformedSpec, "multiplicity not negation-symmetric");
    if (mults[i] < 1) throw EngineError(Err::MalformedSpec, "multiplicity < 1");
  }
  // Every positive root is a nonnegative rational combination of simples.
  Mat srows;
  for (size_t sp : simples) srows.push_back(roots[sp]);
  Mat st = transpose(srows);
  for (size_t i = 0; i < np; ++i) {
    auto c = solve(st, roots[i]);
    if (!c || mat_vec(st, *c) != roots[i])
      throw EngineError(Err::MalformedSpec, "positive root outside simple span");
    for (const auto& x : *c)
      if (x < 0) throw EngineError(Err::MalformedSpec, "positive root with negative coefficient");
  }
  // Gram invariance under every simple reflection.
  for (size_t sp = 0; sp < simples.size(); ++sp) {
    Mat s = simple_reflection(sp);
    Mat g2 = mat_mul(transpose(s), mat_mul(gram.matrix(), s));
    if (g2 != gram.matrix())
      throw EngineError(Err::MalformedSpec, "Gram form not Weyl-invariant");
  }
}

namespace {

struct FactorTable {
  size_t rank;
  std::vector<Vec> positives;
  std::vector<size_t> simple_positions;  // indices into positives
  Mat gram;                              // before per-factor scaling
};

Vec coords(std::initializer_list<int> xs) {
  Vec v;
  for (int x : xs) v.push_back(Rat(x));
  return v;
}

FactorTable factor_table(const std::string& tag) {
  // Conventions are frozen per type. In every factor the coroot of a short
  // root has squared length 2; C2 matches the (e_z, e_t) coordinates with
  // alpha = (1,-1), beta = (0,2).
  if (tag == "A1") return {1, {coords({2})}, {0}, {{Rat(2)}}};
  if (tag == "A2") {
    return {3,
            {coords({1, -1, 0}), coords({0, 1, -1}), coords({1, 0, -1})},
            {0, 1},
            identity(3)};
  }
  if (tag == "A3") {
    return {4,
            {coords({1, -1, 0, 0}), coords({0, 1, -1, 0}), coords({0, 0, 1, -1}),
             coords({1, 0, -1, 0}), coords({0, 1, 0, -1}), coords({1, 0, 0, -1})},
            {0, 1, 2},
            identity(4)};
  }
  if (tag == "B2") {
    Mat g = identity(2);
    for (auto& row : g)
      for (auto& x : row) x /= 2;
    return {2,
            {coords({1, -1}), coords({0, 1}), coords({1, 0}), coords({1, 1})},
            {0, 1},
            g};
  }
  if (tag == "C2") {
    return {2,
            {coords({1, -1}), coords({0, 2}), coords({1, 1}), coords({2, 0})},
            {0, 1},
            identity(2)};
  }
  if (tag == "B3") {
    Mat g = identity(3);
    for (auto& row : g)
      for (auto& x : row) x /= 2;
    return {3,
            {coords({1, -1, 0}), coords({0, 1, -1}), coords({0, 0, 1}),
             coords({1, 0, -1}), coords({0, 1, 0}), coords({1, 0, 0}),
             coords({0, 1, 1}), coords({1, 0, 1}), coords({1, 1, 0})},
            {0, 1, 2},
            g};
  }
  if (tag == "C3") {
    return {3,
            {coords({1, -1, 0}), coords({0, 1, -1}), coords({0, 0, 2}),
             coords({1, 0, -1}), coords({0, 1, 1}), coords({1, 0, 1}),
             coords({1, 1, 0}), coords({0, 2, 0}), coords({2, 0, 0})},
            {0, 1, 2},
            identity(3)};
  }
  if (tag == "G2") {
    // Characters in fundamental-weight coordinates, cocharacters in the
    // coroot basis; alpha short.
    Mat g = {{Rat(2), Rat(-1)}, {Rat(-1), Rat(2, 3)}};
    return {2,
            {coords({2, -1}), coords({-3, 2}), coords({-1, 1}),
             coords({1, 0}), coords({3, -1}), coords({0, 1})},
            {0, 1},
            g};
  }
  throw EngineError(Err::UnsupportedType, "unsupported type tag: " + tag);
}

std::vector<std::string> split_product(const std::string& tag) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : tag) {
    if (c == 'x' || c == 'X') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

RootDatum build(const std::string& tag, const std::vector<Rat>& scales) {
  auto parts = split_product(tag);
  if (!scales.empty() && scales.size() != parts.size())
    throw EngineError(Err::MalformedSpec, "one Gram scale per factor expected");
  std::vector<FactorTable> tables;
  size_t rank = 0;
  for (const auto& p : parts) {
    tables.push_back(factor_table(p));
    rank += tables.back().rank;
  }
  if (rank > 4) throw EngineError(Err::UnsupportedType, "rank > 4 not supported");

  RootDatum d;
  d.label = tag;
  d.rank = rank;
  Mat gram(rank, zero_vec(rank));
  size_t off = 0;
  for (size_t f = 0; f < tables.size(); ++f) {
    const auto& t = tables[f];
    Rat s = scales.empty() ? Rat(1) : scales[f];
    if (s <= 0) throw EngineError(Err::MalformedSpec, "Gram scale must be positive");
    for (size_t i = 0; i < t.rank; ++i)
      for (size_t j = 0; j < t.rank; ++j) gram[off + i][off + j] = s * t.gram[i][j];
    off += t.rank;
  }
  // Positives from all factors, embedded; simple indices follow.
  off = 0;
  std::vector<std::pair<size_t, size_t>> simple_src;  // (factor, position)
  for (size_t f = 0; f < tables.size(); ++f) {
    const auto& t = tables[f];
    for (const auto& r : t.positives) {
      Vec v = zero_vec(rank);
      for (size_t j = 0; j < t.rank; ++j) v[off + j] = r[j];
      d.roots.push_back(v);
      d.mults.push_back(1);
    }
    off += t.rank;
  }
  size_t np = d.roots.size();
  for (size_t i = 0; i < np; ++i) {
    d.roots.push_back(negate(d.roots[i]));
    d.mults.push_back(1);
  }
  size_t base = 0;
  for (const auto& t : tables) {
    for (size_t sp : t.simple_positions) d.simples.push_back(base + sp);
    base += t.positives.size();
  }
  d.gram = Gram(gram);
  d.lattice = Lattice::standard(rank);
  d.relative = false;
  d.validate();
  return d;
}

namespace {

RootDatum make_bc1(long m1, long m2, const std::string& label) {
  if (m1 < 1 || m2 < 0) throw EngineError(Err::MalformedSpec, "bc1 multiplicities");
  RootDatum d;
  d.label = label;
  d.rank = 1;
  d.roots = {coords({1})};
  d.mults = {m1};
  if (m2 > 0) {
    d.roots.push_back(coords({2}));
    d.mults.push_back(m2);
  }
  size_t np = d.roots.size();
  for (size_t i = 0; i < np; ++i) {
    d.roots.push_back(negate(d.roots[i]));
    d.mults.push_back(d.mults[i]);
  }
  d.simples = {0};
  d.gram = Gram({{Rat(1)}});
  d.lattice = Lattice::standard(1);
  d.relative = true;
  d.validate();
  return d;
}

}  // namespace

RootDatum build_relative(const std::string& spec) {
  if (spec == "su21") return make_bc1(2, 1, "su21");
  if (spec.rfind("bc1(", 0) == 0 && spec.back() == ')') {
    std::string inner = spec.substr(4, spec.size() - 5);
    auto comma = inner.find(',');
    if (comma == std::string::npos) throw EngineError(Err::MalformedSpec, "bc1(m1,m2)");
    long m1 = std::stol(inner.substr(0, comma));
    long m2 = std::stol(inner.substr(comma + 1));
    return make_bc1(m1, m2, spec);
  }

  // Textual description.
  std::istringstream in(spec);
  std::string line;
  std::vector<Vec> positives;
  std::vector<long> mults;
  std::vector<Vec> simple_vecs;
  Mat gram_rows;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw[0] == '#') continue;
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (kw == "root") {
      if (toks.size() < 3 || toks[toks.size() - 2] != "mult")
        throw EngineError(Err::MalformedSpec, "root line: root <coords> mult <k>");
      Vec v;
      for (size_t i = 0; i + 2 < toks.size(); ++i) v.push_back(rat_from_string(toks[i]));
      positives.push_back(v);
      mults.push_back(std::stol(toks.back()));
    } else if (kw == "simple") {
      Vec v;
      for (const auto& s : toks) v.push_back(rat_from_string(s));
      simple_vecs.push_back(v);
    } else if (kw == "gram") {
      Vec v;
      for (const auto& s : toks) v.push_back(rat_from_string(s));
      gram_rows.push_back(v);
    } else {
      throw EngineError(Err::MalformedSpec, "unknown keyword in relative spec: " + kw);
    }
  }
  if (positives.empty()) throw EngineError(Err::MalformedSpec, "relative spec has no roots");
  size_t rank = positives[0].size();
  RootDatum d;
  d.label = "relative";
  d.rank = rank;
  d.roots = positives;
  d.mults = mults;
  for (size_t i = 0; i < positives.size(); ++i) {
    d.roots.push_back(negate(positives[i]));
    d.mults.push_back(mults[i]);
  }
  for (const auto& sv : simple_vecs) {
    auto it = std::find(positives.begin(), positives.end(), sv);
    if (it == positives.end())
      throw EngineError(Err::MalformedSpec, "simple root not among listed roots");
    d.simples.push_back(static_cast<size_t>(it - positives.begin()));
  }
  if (d.simples.empty()) throw EngineError(Err::MalformedSpec, "relative spec has no simple roots");
  if (gram_rows.empty()) throw EngineError(Err::MalformedSpec, "relative spec has no gram");
  d.gram = Gram(gram_rows);
  d.lattice = Lattice::standard(rank);
  d.relative = true;
  d.validate();
  return d;
}

std::vector<Mat> weyl_group(const RootDatum& datum, size_t size_limit) {
  std::vector<Mat> gens;
  for (size_t sp = 0; sp < datum.simples.size(); ++sp)
    gens.push_back(datum.simple_reflection(sp));
  std::vector<Mat> elems = {identity(datum.rank)};
  std::map<Mat, bool> seen;
  seen[elems[0]] = true;
  for (size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      Mat w = mat_mul(g, elems[head]);
      if (seen.emplace(w, true).second) {
        elems.push_back(w);
        if (elems.size() > size_limit)
          throw EngineError(Err::SizeLimit, "Weyl closure exceeds size limit");
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

bool is_dominant(const Vec& mu, const RootDatum& datum) {
  for (size_t sp : datum.simples)
    if (pairing(datum.roots[sp], mu) < 0) return false;
  return true;
}

std::pair<Vec, std::vector<size_t>> dominantize(const Vec& mu, const RootDatum& datum) {
  Vec v = mu;
  std::vector<size_t> word;
  bool moved = true;
  size_t guard = 0;
  while (moved) {
    moved = false;
    for (size_t sp = 0; sp < datum.simples.size(); ++sp) {
      if (pairing(datum.roots[datum.simples[sp]], v) < 0) {
        v = mat_vec(datum.simple_reflection(sp), v);
        word.push_back(sp);
        moved = true;
        break;
      }
    }
    if (++guard > 10000) throw EngineError(Err::Internal, "dominantize did not terminate");
  }
  return {v, word};
}

std::vector<size_t> levi_roots(const Parabolic& p, const RootDatum& datum) {
  return datum.span_closure(p.levi_simples);
}

std::vector<size_t> nilradical_roots(const Parabolic& p, const RootDatum& datum) {
  auto levi = levi_roots(p, datum);
  std::vector<size_t> out;
  for (size_t i = 0; i < datum.positive_count(); ++i)
    if (std::find(levi.begin(), levi.end(), i) == levi.end()) out.push_back(i);
  return out;
}

long dim_parabolic(const Parabolic& p, const RootDatum& datum) {
  long d = static_cast<long>(datum.rank);
  auto levi = levi_roots(p, datum);
  for (size_t i : levi) d += datum.mults[i];
  for (size_t i : nilradical_roots(p, datum)) d += datum.mults[i];
  return d;
}

namespace {

// Basis of { nu : <row_i, nu> = 0 } for the given character rows.
std::vector<Vec> pairing_kernel(const std::vector<Vec>& rows, size_t rank) {
  if (rows.empty()) {
    std::vector<Vec> basis;
    for (size_t i = 0; i < rank; ++i) {
      Vec e = zero_vec(rank);
      e[i] = 1;
      basis.push_back(e);
    }
    return basis;
  }
  return kernel_basis(rows);
}

}  // namespace

Vec mu_p(const Parabolic& p, const RootDatum& datum) {
  std::vector<Vec> levi_simple_chars;
  std::vector<Vec> delta_p_chars;  // representatives of Delta_P
  std::vector<bool> in_levi(datum.simples.size(), false);
  for (size_t sp : p.levi_simples) in_levi[sp] = true;
  for (size_t sp = 0; sp < datum.simples.size(); ++sp) {
    const Vec& alpha = datum.roots[datum.simples[sp]];
    (in_levi[sp] ? levi_simple_chars : delta_p_chars).push_back(alpha);
  }

  // Route 1: QP restricted to a_P = { nu : <alpha, nu> = 0, alpha Levi-simple }.
  auto basis = pairing_kernel(levi_simple_chars, datum.rank);
  Vec qp_value = zero_vec(datum.rank);
  if (!delta_p_chars.empty()) {
    size_t d = basis.size();
    std::vector<Vec> restricted;
    for (const auto& alpha : delta_p_chars) {
      Vec r(d);
      for (size_t j = 0; j < d; ++j) r[j] = pairing(alpha, basis[j]);
      restricted.push_back(r);
    }
    Mat sub_gram(d, zero_vec(d));
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) sub_gram[i][j] = datum.gram.inner(basis[i], basis[j]);
    auto cert = min_norm_point(restricted, Gram(sub_gram));
    for (size_t j = 0; j < d; ++j) qp_value = add(qp_value, scale(cert.point[j], basis[j]));
  }

  // Route 2: sum of the basis of a_P^G dual to Delta_P.
  Vec closed_form = zero_vec(datum.rank);
  if (!delta_p_chars.empty()) {
    // a_G = { nu : <alpha, nu> = 0 for all simples }; a_P^G = a_P orthogonal
    // to a_G under the Gram form.
    std::vector<Vec> all_simple_chars;
    for (size_t sp : datum.simples) all_simple_chars.push_back(datum.roots[sp]);
    auto a_g = pairing_kernel(all_simple_chars, datum.rank);
    std::vector<Vec> cut = levi_simple_chars;
    for (const auto& z : a_g) {
      // (z, nu)_gram = 0 written as a pairing row.
      cut.push_back(mat_vec(datum.gram.matrix(), z));
    }
    auto pg_basis = pairing_kernel(cut, datum.rank);
    size_t d = pg_basis.size();
    if (d != delta_p_chars.size())
      throw EngineError(Err::Internal, "a_P^G dimension mismatch");
    for (size_t k = 0; k < delta_p_chars.size(); ++k) {
      Mat sys(delta_p_chars.size(), zero_vec(d));
      Vec rhs(delta_p_chars.size(), Rat(0));
      for (size_t i = 0; i < delta_p_chars.size(); ++i)
        for (size_t j = 0; j < d; ++j) sys[i][j] = pairing(delta_p_chars[i], pg_basis[j]);
      rhs[k] = 1;
      auto c = solve(sys, rhs);
      if (!c) throw EngineError(Err::Internal, "Delta_P dual basis solve failed");
      Vec mu_pa = zero_vec(datum.rank);
      for (size_t j = 0; j < d; ++j) mu_pa = add(mu_pa, scale((*c)[j], pg_basis[j]));
      closed_form = add(closed_form, mu_pa);
    }
  }

  if (qp_value != closed_form)
    throw EngineError(Err::Internal, "mu_P: QP route and closed form disagree");
  return qp_value;
}

RootDatum levi_datum(const Parabolic& p, const RootDatum& datum) {
  auto levi = levi_roots(p, datum);
  RootDatum d;
  d.label = datum.label + ":levi";
  d.rank = datum.rank;
  std::vector<size_t> pos, neg;
  for (size_t i : levi)
    (datum.is_positive(i) ? pos : neg).push_back(i);
  for (size_t i : pos) {
    d.roots.push_back(datum.roots[i]);
    d.mults.push_back(datum.mults[i]);
  }
  for (size_t i : pos) {
    d.roots.push_back(negate(datum.roots[i]));
    d.mults.push_back(datum.mults[i]);
  }
  for (size_t sp : p.levi_simples) {
    const Vec& alpha = datum.roots[datum.simples[sp]];
    auto it = std::find(d.roots.begin(), d.roots.begin() + pos.size(), alpha);
    d.simples.push_back(static_cast<size_t>(it - d.roots.begin()));
  }
  d.gram = datum.gram;
  d.lattice = datum.lattice;
  d.relative = datum.relative;
  return d;
}

Lattice coroot_lattice(const RootDatum& datum) {
  std::vector<Vec> gens;
  for (size_t i = 0; i < datum.positive_count(); ++i) gens.push_back(datum.coroot(i));
  return Lattice::spanned_by(gens, datum.rank);
}

Lattice coweight_lattice(const RootDatum& datum) {
  // { x in span(coroots) : <alpha_i, x> in Z for all simples }.
  Lattice sc = coroot_lattice(datum);
  const auto& s = sc.basis();
  size_t d = s.size();
  Mat rs(datum.simples.size(), zero_vec(d));
  for (size_t i = 0; i < datum.simples.size(); ++i)
    for (size_t j = 0; j < d; ++j) rs[i][j] = pairing(datum.roots[datum.simples[i]], s[j]);
  if (datum.simples.size() != d)
    throw EngineError(Err::Internal, "coweight lattice: simple count != coroot span dim");
  auto inv = inverse(rs);
  if (!inv) throw EngineError(Err::Internal, "coweight lattice: singular simple pairing");
  std::vector<Vec> gens;
  for (size_t k = 0; k < d; ++k) {
    Vec g = zero_vec(datum.rank);
    for (size_t j = 0; j < d; ++j) g = add(g, scale((*inv)[j][k], s[j]));
    gens.push_back(g);
  }
  return Lattice::spanned_by(gens, datum.rank);
}

}  // namespace hesselink
