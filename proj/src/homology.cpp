#include "cdgl/homology.hpp"

#include <algorithm>
#include <unordered_map>

#include "cdgl/errors.hpp"
#include "cdgl/lie_basis.hpp"
#include "cdgl/linalg.hpp"
#include "cdgl/transfer.hpp"

namespace cdgl {

namespace {

using RowIndex = std::unordered_map<Word, std::size_t, WordHash>;

// Coordinates of a Lie element at super-Lyndon words. This projection is
// injective on Lie elements, so ranks can be computed on it. New words get
// fresh row indices.
SparseVector project(const LieElement& x, const Alphabet& alphabet, RowIndex& rows) {
  SparseVector v;
  for (const auto& [w, c] : x.terms()) {
    if (!is_super_lyndon(w, alphabet)) continue;
    v.emplace_back(rows.try_emplace(w, rows.size()).first->second, c);
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

// Per-degree data of the truncated complex.
struct DegreeData {
  std::vector<Word> basis;
  std::vector<SparseVector> boundary;  // d(b) in the coordinates of degree - 1
  std::size_t rank = 0;
};

// Either L / L^{>N} itself or its transfer onto 𝕃(Z); both are spanned by the
// Lie basis of their alphabet.
class Complex {
 public:
  Complex(const DgLie& L, bool direct) : L_(L) {
    if (direct) {
      basis_.emplace(L.alphabet(), L.truncation());
    } else {
      transfer_.emplace(L);
      basis_.emplace(transfer_->homology_alphabet(), L.truncation());
    }
  }

  LieBasis& basis() { return *basis_; }
  const Alphabet& alphabet() const { return *basis_->alphabet(); }
  RowIndex& rows(int degree) { return rows_[degree]; }

  LieElement d(const LieElement& x) const { return transfer_ ? transfer_->differential(x) : L_.d(x); }
  LieElement include(const LieElement& x) const { return transfer_ ? transfer_->include(x) : x; }

  DegreeData& degree(int n) {
    auto it = data_.find(n);
    if (it != data_.end()) return it->second;
    DegreeData data;
    data.basis = basis_->words_of_degree(n);
    Echelon ech;
    for (std::size_t j = 0; j < data.basis.size(); ++j) {
      data.boundary.push_back(project(d(basis_->element(data.basis[j])), alphabet(), rows_[n - 1]));
      ech.insert(data.boundary.back(), j);
    }
    data.rank = ech.rank();
    return data_.emplace(n, std::move(data)).first->second;
  }

 private:
  const DgLie& L_;
  std::optional<HomologyTransfer> transfer_;
  std::optional<LieBasis> basis_;
  std::map<int, RowIndex> rows_;
  std::map<int, DegreeData> data_;
};

std::map<int, std::size_t> dimensions(Complex& complex, int lo, int hi) {
  std::map<int, std::size_t> dims;
  for (int n = lo; n <= hi; ++n) {
    DegreeData& here = complex.degree(n);
    dims[n] = here.basis.size() - here.rank - complex.degree(n + 1).rank;
  }
  return dims;
}

}  // namespace

std::map<int, std::size_t> homology_dimensions(const DgLie& L, int lo, int hi, bool direct) {
  Complex complex(L, direct);
  return dimensions(complex, lo, hi);
}

std::vector<HomologyDegree> homology(const DgLie& L, int lo, int hi, HomologyOptions options) {
  Complex complex(L, options.direct);
  const Alphabet& alpha = complex.alphabet();
  const int top_length = L.truncation();
  std::map<int, std::size_t> lower;
  if (options.stability && top_length > 1) {
    lower = homology_dimensions(L.truncated_to(top_length - 1), lo, hi, options.direct);
  }

  std::vector<HomologyDegree> out;
  for (int n = lo; n <= hi; ++n) {
    HomologyDegree h;
    h.degree = n;
    DegreeData& above = complex.degree(n + 1);
    DegreeData& here = complex.degree(n);
    h.dim = here.basis.size() - here.rank - above.rank;
    h.stable = options.stability && top_length > 1 && lower[n] == h.dim;
    RowIndex& rows = complex.rows(n);
    std::vector<SparseVector> own;
    if (h.dim > 0) {
      for (const Word& w : here.basis) own.push_back(project(complex.basis().element(w), alpha, rows));
    }

    if (options.stability && top_length > 1 && h.dim > 0) {
      // On the top word length d is d_1 alone, so the classes of top-length
      // cycles form the kernel of the restriction map.
      Echelon span;
      for (const auto& b : above.boundary) span.insert(b, 0);
      const std::size_t boundaries = span.rank();
      Echelon top(true);
      for (std::size_t j = 0; j < here.basis.size(); ++j) {
        if (here.basis[j].size() != top_length) continue;
        auto relation = top.insert(here.boundary[j], j);
        if (!relation) continue;
        SparseVector coords;
        for (const auto& [k, c] : *relation) axpy(coords, c, own[k]);
        span.insert(coords, 0);
      }
      h.persistent = h.dim - (span.rank() - boundaries);
    }

    if (options.representatives && h.dim > 0) {
      Echelon boundaries;
      for (std::size_t j = 0; j < above.boundary.size(); ++j) boundaries.insert(above.boundary[j], j);
      Echelon cycles(true);
      for (std::size_t j = 0; j < here.basis.size() && h.representatives.size() < h.dim; ++j) {
        auto relation = cycles.insert(here.boundary[j], j);
        if (!relation) continue;
        SparseVector coords;
        for (const auto& [k, c] : *relation) axpy(coords, c, own[k]);
        if (boundaries.insert(coords, boundaries.rank())) continue;
        LieElement cycle(complex.basis().alphabet(), top_length);
        for (const auto& [k, c] : *relation) cycle += c * complex.basis().element(here.basis[k]);
        LieElement z = complex.include(cycle);
        if (!L.d(z).is_zero()) throw AlgebraError("homology: transferred representative is not a cycle");
        // normalise so the first coefficient is 1
        z *= 1 / z.terms().front().second;
        h.profile[z.min_length()] += 1;
        h.representatives.push_back(std::move(z));
      }
    }
    out.push_back(std::move(h));
  }
  return out;
}

LieElement solve_for_element(const AlphabetPtr& alphabet, int truncation, int degree,
                             const std::vector<LinearCondition>& conditions, const char* what, int only_length) {
  LieBasis basis(alphabet, truncation);
  std::vector<Word> unknowns =
      only_length > 0 ? basis.words(only_length, degree) : basis.words_of_degree(degree);

  auto image = [&](const LinearCondition& cond, const LieElement& y) {
    LieElement v = cond.differential_of ? cond.differential_of->d(y) : y;
    return cond.map ? cond.map->apply(v) : v;
  };

  std::vector<RowIndex> rows(conditions.size());
  std::vector<std::vector<SparseVector>> blocks(conditions.size());
  std::vector<std::size_t> offsets;
  for (std::size_t i = 0; i < conditions.size(); ++i) {
    const Alphabet& target = *conditions[i].value.alphabet();
    for (const Word& w : unknowns) blocks[i].push_back(project(image(conditions[i], basis.element(w)), target, rows[i]));
  }
  std::vector<SparseVector> rhs_blocks;
  for (std::size_t i = 0; i < conditions.size(); ++i) {
    rhs_blocks.push_back(project(conditions[i].value, *conditions[i].value.alphabet(), rows[i]));
  }
  std::size_t total = 0;
  for (auto& r : rows) {
    offsets.push_back(total);
    total += r.size();
  }
  auto stack = [&](std::size_t j, int max_length, const std::vector<std::vector<Word>>& words_of_row) {
    SparseVector v;
    for (std::size_t i = 0; i < conditions.size(); ++i) {
      const SparseVector& part = (j == SIZE_MAX) ? rhs_blocks[i] : blocks[i][j];
      for (const auto& [r, c] : part) {
        if (max_length > 0 && words_of_row[i][r].size() > max_length) continue;
        v.emplace_back(offsets[i] + r, c);
      }
    }
    return v;
  };
  std::vector<std::vector<Word>> words_of_row(conditions.size());
  for (std::size_t i = 0; i < conditions.size(); ++i) {
    words_of_row[i].resize(rows[i].size());
    for (const auto& [w, r] : rows[i]) words_of_row[i][r] = w;
  }

  auto attempt = [&](int max_length, SparseVector* combination) {
    Echelon ech(true);
    for (std::size_t j = 0; j < unknowns.size(); ++j) {
      if (max_length > 0 && unknowns[j].size() > max_length) continue;
      ech.insert(stack(j, max_length, words_of_row), j);
    }
    return ech.reduce(stack(SIZE_MAX, max_length, words_of_row), combination);
  };

  SparseVector combination;
  bool ok = attempt(0, &combination);
  LieElement y(alphabet, truncation);
  if (ok) {
    for (const auto& [j, c] : combination) y += c * basis.element(unknowns[j]);
    for (const auto& cond : conditions) {
      if (image(cond, y) != cond.value) ok = false;
    }
  }
  if (!ok) {
    int failing = truncation;
    for (int k = 1; k <= truncation; ++k) {
      if (!attempt(k, nullptr)) {
        failing = k;
        break;
      }
    }
    throw SolveError(std::string(what) + ": no solution in degree " + std::to_string(degree) + " at word length " +
                     std::to_string(failing));
  }
  return y;
}

LinearContraction::LinearContraction(const DgLie& L) : d1_(linear_part(L)) {
  const Alphabet& alpha = *L.alphabet();
  const int size = alpha.size();
  h_.assign(size, {});
  p_.assign(size, {});
  std::map<int, std::vector<int>> by_degree;
  for (int i = 0; i < size; ++i) by_degree[alpha.degree(i)].push_back(i);
  auto local = [&](int degree) -> const std::vector<int>& { return by_degree[degree]; };
  // d_1 of generator g as dense coordinates over the generators one degree down
  auto image = [&](int g) {
    const std::vector<int>& below = local(alpha.degree(g) - 1);
    std::vector<Rational> v(below.size());
    for (const auto& [w, c] : d1_.d_of(alpha[g].name).terms()) {
      v[std::find(below.begin(), below.end(), w[0]) - below.begin()] = c;
    }
    return v;
  };

  // C_n: generators whose images are independent; their images span B_{n-1}.
  std::map<int, std::vector<int>> chosen;
  std::map<int, std::vector<std::vector<Rational>>> boundaries;
  for (const auto& [n, gens] : by_degree) {
    Echelon ech;
    for (int g : gens) {
      std::vector<Rational> v = image(g);
      if (!ech.insert(sparse_from_dense(v), 0)) {
        chosen[n].push_back(g);
        boundaries[n - 1].push_back(v);
      }
    }
  }

  for (const auto& [n, gens] : by_degree) {
    const std::size_t m = gens.size();
    std::vector<std::vector<Rational>> columns;
    std::vector<char> kind;  // 'c', 'b' or 'h'
    std::vector<int> partner;
    for (int g : chosen[n]) {
      std::vector<Rational> e(m);
      e[std::find(gens.begin(), gens.end(), g) - gens.begin()] = 1;
      columns.push_back(e);
      kind.push_back('c');
      partner.push_back(g);
    }
    Echelon cycles;
    const auto& bs = boundaries[n];
    for (std::size_t j = 0; j < bs.size(); ++j) {
      cycles.insert(sparse_from_dense(bs[j]), j);
      columns.push_back(bs[j]);
      kind.push_back('b');
      partner.push_back(chosen[n + 1][j]);
    }
    SparseMatrix dn(local(n - 1).size(), m);
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<Rational> v = image(gens[j]);
      for (std::size_t r = 0; r < v.size(); ++r) dn.set(r, j, v[r]);
    }
    for (const auto& z : kernel_basis(dn)) {
      if (!cycles.insert(sparse_from_dense(z), 0)) {
        columns.push_back(z);
        kind.push_back('h');
        partner.push_back(-1);
      }
    }
    if (columns.size() != m) throw AlgebraError("LinearContraction: linear part is not a differential");
    SparseMatrix basis(m, m);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t r = 0; r < m; ++r) basis.set(r, j, columns[j][r]);
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Rational> e(m);
      e[i] = 1;
      auto coords = solve(basis, e);
      if (!coords) throw AlgebraError("LinearContraction: degenerate splitting");
      for (std::size_t j = 0; j < m; ++j) {
        const Rational& c = (*coords)[j];
        if (c == 0) continue;
        if (kind[j] == 'b') h_[gens[i]].emplace_back(partner[j], c);
        if (kind[j] == 'h') {
          for (std::size_t r = 0; r < m; ++r) {
            if (columns[j][r] != 0) p_[gens[i]].emplace_back(gens[r], c * columns[j][r]);
          }
        }
      }
    }
  }
}

LieElement LinearContraction::homotopy(const LieElement& x) const {
  const Alphabet& alpha = *x.alphabet();
  ElementBuilder out(x.alphabet(), x.truncation());
  std::vector<std::pair<Word, Rational>> prefixes, next;
  for (const auto& [w, c] : x.terms()) {
    prefixes.assign(1, {Word(), c});
    for (int i = 0; i < w.size() && !prefixes.empty(); ++i) {
      const int u = w[i];
      const Word rest = w.suffix_from(i + 1);
      next.clear();
      const Rational sign = (alpha.degree(u) % 2 == 0) ? 1 : -1;
      for (const auto& [pre, k] : prefixes) {
        for (const auto& [g, hc] : h_[u]) out.add(pre.concat(Word::letter(g)).concat(rest), k * hc);
        for (const auto& [g, pc] : p_[u]) next.emplace_back(pre.concat(Word::letter(g)), sign * k * pc);
      }
      prefixes.swap(next);
    }
  }
  return out.build();
}

std::optional<LieElement> LinearContraction::bound(const LieElement& x) const {
  if (x.is_zero()) return x;
  const int k = x.min_length();
  if (k != x.max_length()) return std::nullopt;
  LieElement y = dynkin(homotopy(x)) * (Rational(1) / k);
  if (d1_.d(y) != x) return std::nullopt;
  return y;
}

DgLie linear_part(const DgLie& L) {
  std::vector<LieElement> images;
  for (const auto& img : L.differential().images()) images.push_back(img.length_slice(1));
  return DgLie(L.alphabet(), L.truncation(), std::move(images));
}

LieElement solve_boundary_by_length(const DgLie& L, const LieElement& x, int degree, const char* what) {
  LinearContraction contraction(L);
  DgLie d1 = linear_part(L);
  LieElement y = L.zero();
  for (int k = 1; k <= L.truncation(); ++k) {
    LieElement residual = (x - L.d(y)).length_slice(k);
    if (residual.is_zero()) continue;
    if (auto bounded = contraction.bound(residual)) {
      y += *bounded;
      continue;
    }
    y += solve_for_element(L.alphabet(), L.truncation(), degree, {{nullptr, &d1, residual}}, what, k);
  }
  if (L.d(y) != x) throw SolveError(std::string(what) + ": length-by-length solve left a residual");
  return y;
}

LieElement lift_cycle(const LieMorphism& p, const DgLie& source, const DgLie& target, const LieElement& z) {
  if (!same_alphabet(p.source(), source.alphabet()) || !same_alphabet(p.target(), target.alphabet())) {
    throw AlgebraError("lift_cycle: morphism does not match the algebras");
  }
  if (z.is_zero()) return source.zero();
  auto deg = z.degree();
  if (!deg) throw AlgebraError("lift_cycle: cycle must be homogeneous");
  std::vector<LinearCondition> conditions;
  conditions.push_back({&p, nullptr, z});
  conditions.push_back({nullptr, &source, source.zero()});
  // the zero value carries no alphabet; give it the source's
  conditions.back().value = LieElement(source.alphabet(), source.truncation());
  return solve_for_element(source.alphabet(), source.truncation(), *deg, conditions, "lift_cycle");
}

LieElement lift_boundary(const LieMorphism& p, const DgLie& source, const DgLie& target, const LieElement& z_prime,
                         const LieElement& x) {
  if (!same_alphabet(p.source(), source.alphabet()) || !same_alphabet(p.target(), target.alphabet())) {
    throw AlgebraError("lift_boundary: morphism does not match the algebras");
  }
  std::optional<int> deg;
  if (!x.is_zero()) deg = x.degree();
  else if (!z_prime.is_zero() && z_prime.degree()) deg = *z_prime.degree() + 1;
  if (!deg) {
    if (x.is_zero() && z_prime.is_zero()) return source.zero();
    throw AlgebraError("lift_boundary: inputs must be homogeneous");
  }
  std::vector<LinearCondition> conditions;
  LieElement xv = x.is_zero() ? target.zero() : x;
  LieElement zv = z_prime.is_zero() ? source.zero() : z_prime;
  conditions.push_back({&p, nullptr, xv});
  conditions.push_back({nullptr, &source, zv});
  return solve_for_element(source.alphabet(), source.truncation(), *deg, conditions, "lift_boundary");
}

}  // namespace cdgl
