#include "pbwchar/ideal.hpp"

#include <algorithm>
#include <functional>
#include <atomic>
#include <sstream>
#include <thread>

#include "pbwchar/sl2.hpp"

namespace pbwchar {

char letter_char(Letter x) {
  switch (x) {
    case Letter::E: return 'e';
    case Letter::H: return 'h';
    case Letter::F: return 'f';
  }
  return '?';
}

int RelationSpec::max_layer() const {
  int m = 1;
  for (const auto& fam : families)
    for (const auto& t : fam.terms)
      for (const auto& f : t.factors) m = std::max(m, f.symbol.layer);
  return m;
}

std::string to_string(const RelationFamily& fam) {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : fam.terms) {
    if (!first) os << (t.coeff < 0 ? " - " : " + ");
    else if (t.coeff < 0) os << "-";
    first = false;
    BigInt mag = abs(t.coeff);
    if (mag != 1) os << mag.get_str() << '*';
    for (size_t i = 0; i < t.factors.size(); ++i) {
      const auto& f = t.factors[i];
      if (i) os << '*';
      os << letter_char(f.symbol.letter);
      if (f.symbol.layer != 1) os << '[' << f.symbol.layer << ']';
      os << "(z)";
      for (int d = 0; d < f.derivative; ++d) os << '\'';
    }
  }
  return os.str();
}

namespace {

RelationTerm product_term(const BigInt& c, int ne, int nh, int nf) {
  RelationTerm t;
  t.coeff = c;
  for (int i = 0; i < ne; ++i) t.factors.push_back({{Letter::E, 1}, 0});
  for (int i = 0; i < nh; ++i) t.factors.push_back({{Letter::H, 1}, 0});
  for (int i = 0; i < nf; ++i) t.factors.push_back({{Letter::F, 1}, 0});
  return t;
}

void check_level(int k) {
  if (k < 1) throw OracleError("relations: level must be >= 1");
}

}  // namespace

RelationSpec relations_B(int k) {
  check_level(k);
  RelationSpec spec{"B", k, {}};
  for (int i = k + 1; i >= 1; --i) {
    RelationFamily fam{{product_term(1, i, k + 1 - i, 0)}, {}};
    fam.label = to_string(fam);
    spec.families.push_back(std::move(fam));
  }
  for (int i = k + 1; i >= 0; --i) {
    RelationFamily fam{{product_term(1, 0, i, k + 1 - i)}, {}};
    fam.label = to_string(fam);
    spec.families.push_back(std::move(fam));
  }
  return spec;
}

RelationSpec relations_A(int k) {
  check_level(k);
  RelationSpec spec{"A", k, {}};
  for (const auto& poly : lowering_orbit(k)) {
    RelationFamily fam;
    for (const auto& [x, c] : poly.terms()) fam.terms.push_back(product_term(c, x[0], x[1], x[2]));
    fam.label = to_string(fam);
    spec.families.push_back(std::move(fam));
  }
  return spec;
}

RelationSpec relations_C(int k) {
  check_level(k);
  RelationSpec spec{"C", k, {}};
  auto push = [&](Letter x, int l, int alpha, Letter y, int m, int beta) {
    RelationTerm t;
    t.factors = {{{x, l}, alpha}, {{y, m}, beta}};
    RelationFamily fam{{t}, {}};
    fam.label = to_string(fam);
    spec.families.push_back(std::move(fam));
  };
  for (Letter x : {Letter::E, Letter::H, Letter::F}) {
    for (int l = 1; l <= k; ++l) {
      for (int m = l; m <= k; ++m) {
        const int bound = 2 * std::min(l, m);
        for (int alpha = 0; alpha < bound; ++alpha)
          for (int beta = 0; alpha + beta < bound; ++beta) {
            if (l == m && beta < alpha) continue;  // same product as (beta, alpha)
            push(x, l, alpha, x, m, beta);
          }
      }
    }
  }
  for (auto [x, y] : {std::pair{Letter::E, Letter::H}, std::pair{Letter::H, Letter::F}}) {
    for (int l = 1; l <= k; ++l)
      for (int m = 1; m <= k; ++m) {
        const int bound = std::max(0, l + m - k);
        for (int alpha = 0; alpha < bound; ++alpha)
          for (int beta = 0; alpha + beta < bound; ++beta) push(x, l, alpha, y, m, beta);
      }
  }
  return spec;
}

TriDegree weight(const Variable& v) {
  int z = 0;
  if (v.letter == Letter::E) z = 2 * v.layer;
  if (v.letter == Letter::F) z = -2 * v.layer;
  return {v.mode, z, v.layer};
}

TriDegree weight(const OracleMonomial& m) {
  TriDegree d;
  for (const auto& v : m) d = d + weight(v);
  return d;
}

std::string to_string(const OracleMonomial& m) {
  if (m.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) os << ' ';
    os << letter_char(m[i].letter);
    if (m[i].layer != 1) os << '[' << m[i].layer << ']';
    os << "_{-" << m[i].mode << '}';
  }
  return os.str();
}

OrderedMonomial to_ordered(const OracleMonomial& m) {
  OrderedMonomial out;
  for (const auto& v : m) {
    if (v.layer != 1) throw OracleError("to_ordered: only layer-1 monomials have the ordered encoding");
    const int slot = v.letter == Letter::F ? 0 : v.letter == Letter::H ? 1 : 2;
    out.set(v.mode, slot, out.exponents().size() >= static_cast<size_t>(v.mode)
                              ? out.exponents()[v.mode - 1][slot] + 1
                              : 1);
  }
  return out;
}

OracleMonomial from_ordered(const OrderedMonomial& m) {
  OracleMonomial out;
  static constexpr Letter kSlots[3] = {Letter::F, Letter::H, Letter::E};
  for (int i = 1; i <= m.support(); ++i)
    for (int slot = 0; slot < 3; ++slot)
      for (int r = 0; r < m.exponents()[i - 1][slot]; ++r) out.push_back({i, 1, kSlots[slot]});
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

OracleMonomial merge(const OracleMonomial& a, const OracleMonomial& b) {
  OracleMonomial out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

BigInt falling(int x, int r) {
  BigInt p = 1;
  for (int i = 0; i < r; ++i) p *= (x - i);
  return p;
}

void remove_content(std::vector<BigInt>& row) {
  BigInt g = 0;
  for (const auto& x : row)
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : row)
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// Integer row-echelon basis in which every stored row has a distinct leading
// (first nonzero) column. Rows are reduced fraction-free and kept primitive.
class EchelonBasis {
 public:
  explicit EchelonBasis(size_t n_cols) : pivots_(n_cols) {}

  // Returns true if the row was independent of the rows inserted so far.
  bool insert(std::vector<BigInt> row) {
    for (;;) {
      size_t lead = 0;
      while (lead < row.size() && row[lead] == 0) ++lead;
      if (lead == row.size()) return false;
      const auto& piv = pivots_[lead];
      if (piv.empty()) {
        remove_content(row);
        pivots_[lead] = std::move(row);
        ++rank_;
        return true;
      }
      const BigInt a = piv[lead];
      const BigInt b = row[lead];
      for (size_t c = lead; c < row.size(); ++c) {
        row[c] *= a;
        if (piv[c] != 0) row[c] -= b * piv[c];
      }
      remove_content(row);
    }
  }

  int rank() const { return rank_; }
  bool full() const { return rank_ == static_cast<int>(pivots_.size()); }
  bool is_pivot(size_t col) const { return !pivots_[col].empty(); }

 private:
  std::vector<std::vector<BigInt>> pivots_;
  int rank_ = 0;
};

bool layer_one_only(const RelationSpec& spec) { return spec.max_layer() == 1; }

}  // namespace

int exact_rank(const std::vector<std::vector<BigInt>>& rows) {
  if (rows.empty()) return 0;
  EchelonBasis basis(rows.front().size());
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw OracleError("exact_rank: ragged matrix");
    basis.insert(r);
    if (basis.full()) break;
  }
  return basis.rank();
}

QuotientOracle::QuotientOracle(RelationSpec spec, int q_max) : spec_(std::move(spec)), q_max_(q_max) {
  if (q_max < 0) throw OracleError("QuotientOracle: negative q_max");
  build_monomials();
  build_families();
}

void QuotientOracle::build_monomials() {
  std::vector<Variable> vars;
  for (int layer = 1; layer <= spec_.max_layer(); ++layer)
    for (int mode = layer; mode <= q_max_; ++mode)
      for (Letter x : {Letter::E, Letter::H, Letter::F}) vars.push_back({mode, layer, x});
  std::sort(vars.begin(), vars.end());

  OracleMonomial cur;
  std::function<void(size_t, int)> rec = [&](size_t from, int q) {
    monomials_[weight(cur)].push_back(cur);
    for (size_t i = from; i < vars.size(); ++i) {
      if (q + vars[i].mode > q_max_) continue;
      cur.push_back(vars[i]);
      rec(i, q + vars[i].mode);
      cur.pop_back();
    }
  };
  rec(0, 0);

  for (auto& [d, list] : monomials_) std::sort(list.begin(), list.end());
}

void QuotientOracle::build_families() {
  for (const auto& fam : spec_.families) {
    if (fam.terms.empty()) throw OracleError("relation family without terms");
    FamilyData data;
    bool first = true;
    data.min_q = q_max_ + 1;
    for (const auto& term : fam.terms) {
      TriDegree w;
      int min_q = 0;
      for (const auto& f : term.factors) {
        w = w + weight(Variable{0, f.symbol.layer, f.symbol.letter});
        min_q += f.symbol.layer + f.derivative;
      }
      if (first) data.weight_shift = {0, w.z, w.u};
      else if (data.weight_shift.z != w.z || data.weight_shift.u != w.u)
        throw OracleError("relation family is not homogeneous in (z, u): " + fam.label);
      first = false;
      data.min_q = std::min(data.min_q, min_q);
    }

    for (int q = data.min_q; q <= q_max_; ++q) {
      std::map<OracleMonomial, BigInt> coeff;
      for (const auto& term : fam.terms) {
        const size_t r = term.factors.size();
        std::vector<int> modes(r);
        std::function<void(size_t, int, BigInt)> rec = [&](size_t j, int left, BigInt w) {
          if (j == r) {
            if (left != 0) return;
            OracleMonomial m;
            for (size_t t = 0; t < r; ++t)
              m.push_back({modes[t], term.factors[t].symbol.layer, term.factors[t].symbol.letter});
            std::sort(m.begin(), m.end());
            auto& slot = coeff[m];
            slot += w;
            return;
          }
          const auto& f = term.factors[j];
          for (int n = f.symbol.layer + f.derivative; n <= left; ++n) {
            modes[j] = n;
            rec(j + 1, left - n, w * falling(n - f.symbol.layer, f.derivative));
          }
        };
        rec(0, q, term.coeff);
      }
      std::erase_if(coeff, [](const auto& kv) { return kv.second == 0; });
      if (!coeff.empty()) data.coefficients.emplace(q, std::move(coeff));
    }
    families_.push_back(std::move(data));
  }
}

const std::vector<OracleMonomial>& QuotientOracle::monomials(const TriDegree& d) const {
  static const std::vector<OracleMonomial> kEmpty;
  auto it = monomials_.find(d);
  return it == monomials_.end() ? kEmpty : it->second;
}

std::vector<TriDegree> QuotientOracle::degrees() const {
  std::vector<TriDegree> out;
  for (const auto& [d, list] : monomials_) out.push_back(d);
  return out;
}

SliceMatrix QuotientOracle::expand_rows(const TriDegree& d) const {
  if (d.q > q_max_) throw OracleError("expand_rows: degree beyond the oracle's q_max");
  SliceMatrix slice;
  slice.degree = d;
  slice.columns = monomials(d);
  std::map<OracleMonomial, size_t> index;
  for (size_t i = 0; i < slice.columns.size(); ++i) index.emplace(slice.columns[i], i);

  for (const auto& fam : families_) {
    for (const auto& [q, coeff] : fam.coefficients) {
      const TriDegree shift_deg = d - TriDegree{q, fam.weight_shift.z, fam.weight_shift.u};
      if (shift_deg.q < 0) break;
      for (const auto& shift : monomials(shift_deg)) {
        std::vector<BigInt> row(slice.columns.size(), 0);
        for (const auto& [m, c] : coeff) {
          auto it = index.find(merge(shift, m));
          if (it == index.end()) throw std::logic_error("expand_rows: relation row is not homogeneous");
          row[it->second] += c;
        }
        slice.rows.push_back(std::move(row));
      }
    }
  }
  return slice;
}

SliceDimension QuotientOracle::graded_dimension(const TriDegree& d) const {
  const SliceMatrix slice = expand_rows(d);
  SliceDimension out;
  out.degree = d;
  out.n_monomials = static_cast<int>(slice.columns.size());
  out.n_rows = static_cast<int>(slice.rows.size());
  out.rank = exact_rank(slice.rows);
  out.dim = out.n_monomials - out.rank;
  return out;
}

std::vector<SliceDimension> QuotientOracle::dimension_table() const {
  const auto degs = degrees();
  std::vector<SliceDimension> out(degs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < degs.size(); i = next++) out[i] = graded_dimension(degs[i]);
  };
  const unsigned n_threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 16));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

Series3 QuotientOracle::quotient_character() const {
  Series3 s(q_max_);
  for (const auto& row : dimension_table()) s.add_term(row.degree, row.dim);
  return s;
}

std::vector<OrderedMonomial> QuotientOracle::standard_monomials(const TriDegree& d,
                                                               MonomialOrder order) const {
  if (!layer_one_only(spec_))
    throw OracleError("standard_monomials: only defined for layer-1 relation specs");
  const SliceMatrix slice = expand_rows(d);
  const size_t n = slice.columns.size();
  std::vector<OrderedMonomial> ordered;
  for (const auto& m : slice.columns) ordered.push_back(to_ordered(m));
  // perm[c] = original column placed at position c, largest monomial first,
  // so a row's first nonzero position is its leading monomial.
  std::vector<size_t> perm(n);
  for (size_t c = 0; c < n; ++c) perm[c] = c;
  std::sort(perm.begin(), perm.end(),
            [&](size_t x, size_t y) { return compare(ordered[x], ordered[y], order) > 0; });

  EchelonBasis basis(n);
  for (const auto& r : slice.rows) {
    std::vector<BigInt> permuted(n);
    for (size_t c = 0; c < n; ++c) permuted[c] = r[perm[c]];
    basis.insert(std::move(permuted));
    if (basis.full()) break;
  }
  std::vector<OrderedMonomial> out;
  for (size_t c = n; c-- > 0;)
    if (!basis.is_pivot(c)) out.push_back(ordered[perm[c]]);
  return out;
}

int graded_dimension(const RelationSpec& spec, const TriDegree& d) {
  if (d.q < 0) return 0;
  return QuotientOracle(spec, d.q).graded_dimension(d).dim;
}

Series3 quotient_character(const RelationSpec& spec, int q_max) {
  return QuotientOracle(spec, q_max).quotient_character();
}

std::vector<OrderedMonomial> standard_monomials(const RelationSpec& spec, const TriDegree& d,
                                               MonomialOrder order) {
  return QuotientOracle(spec, std::max(d.q, 0)).standard_monomials(d, order);
}

void write_dimension_csv(std::ostream& os, const std::vector<SliceDimension>& table) {
  os << "q,z,u,n_monomials,n_rows,rank,dim\n";
  for (const auto& r : table)
    os << r.degree.q << ',' << r.degree.z << ',' << r.degree.u << ',' << r.n_monomials << ',' << r.n_rows
       << ',' << r.rank << ',' << r.dim << '\n';
}

}  // namespace pbwchar
