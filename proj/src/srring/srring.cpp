#include "fanchar/srring/srring.hpp"

#include <algorithm>
#include <sstream>

#include "fanchar/error.hpp"

namespace fanchar {

std::size_t Monomial::degree() const {
  std::size_t d = 0;
  for (const auto& [r, e] : exponents) d += e;
  return d;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (const auto& [r, e] : exponents) s.push_back(r);
  return s;
}

std::string to_string(const Monomial& m) {
  if (m.exponents.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    if (i) os << "*";
    os << "x" << m.exponents[i].first;
    if (m.exponents[i].second > 1) os << "^" << m.exponents[i].second;
  }
  return os.str();
}

namespace {

void compositions(std::size_t total, std::size_t parts, std::vector<unsigned>& cur,
                  std::vector<std::vector<unsigned>>& out) {
  if (parts == 1) {
    cur.push_back(static_cast<unsigned>(total));
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (std::size_t first = 1; first + (parts - 1) <= total; ++first) {
    cur.push_back(static_cast<unsigned>(first));
    compositions(total - first, parts - 1, cur, out);
    cur.pop_back();
  }
}

Monomial times_variable(const Monomial& m, std::size_t ray) {
  Monomial out = m;
  auto it = std::lower_bound(out.exponents.begin(), out.exponents.end(), std::make_pair(ray, 0u));
  if (it != out.exponents.end() && it->first == ray) {
    ++it->second;
  } else {
    out.exponents.insert(it, {ray, 1u});
  }
  return out;
}

Monomial permuted(const Monomial& m, const std::vector<std::size_t>& perm) {
  Monomial out;
  for (const auto& [r, e] : m.exponents) out.exponents.emplace_back(perm[r], e);
  std::sort(out.exponents.begin(), out.exponents.end());
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t b = 1;
  for (std::size_t i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

void require_complete_simplicial(const Fan& f) {
  if (!is_simplicial(f)) throw PreconditionError("fan is not simplicial");
  if (!is_complete(f)) throw PreconditionError("fan is not complete");
}

}  // namespace

GradedBasis graded_basis(const Fan& f, std::size_t k) {
  GradedBasis b;
  b.degree = k;
  if (k == 0) {
    b.monomials.push_back(Monomial{});
  } else {
    for (const auto& c : f.cones()) {
      const std::size_t m = c.rays.size();
      if (m == 0 || m > k) continue;
      std::vector<std::vector<unsigned>> comps;
      std::vector<unsigned> cur;
      compositions(k, m, cur, comps);
      for (const auto& exps : comps) {
        Monomial mono;
        for (std::size_t i = 0; i < m; ++i) mono.exponents.emplace_back(c.rays[i], exps[i]);
        b.monomials.push_back(std::move(mono));
      }
    }
  }
  for (std::size_t i = 0; i < b.monomials.size(); ++i) b.index.emplace(b.monomials[i], i);
  return b;
}

std::size_t graded_dimension(const Fan& f, std::size_t k) {
  if (k == 0) return 1;
  std::size_t total = 0;
  for (const auto& c : f.cones()) {
    if (!c.rays.empty()) total += binomial(k - 1, c.rays.size() - 1);
  }
  return total;
}

QMatrix lsop(const Fan& f) {
  QMatrix l(f.dim(), f.num_rays());
  for (std::size_t i = 0; i < f.num_rays(); ++i) {
    for (std::size_t j = 0; j < f.dim(); ++j) l(j, i) = f.ray(i)[j];
  }
  return l;
}

std::string lsop_form(const QMatrix& l, std::size_t j) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < l.cols(); ++i) {
    const Rational& c = l(j, i);
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    first = false;
    const Rational a = c.abs();
    if (!a.is_one()) os << a << "*";
    os << "x" << i;
  }
  return first ? "0" : os.str();
}

bool in_row_space(const RowEchelon& e, const QVector& v) {
  QVector w = v;
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    const Rational f = w[e.pivots[i]];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < w.size(); ++c) {
      if (!e.reduced(i, c).is_zero()) w[c] -= f * e.reduced(i, c);
    }
  }
  return is_zero(w);
}

std::vector<std::size_t> ArtinianTable::quotient_dims() const {
  std::vector<std::size_t> out;
  for (const auto& p : pieces) out.push_back(p.quotient_dim);
  return out;
}

namespace {

ArtinianTable build_table(const Fan& f, const FanAction* a, std::size_t extra) {
  const std::size_t d = f.dim();
  ArtinianTable tab;
  tab.fan = f;
  if (a) tab.action = *a;
  std::vector<std::vector<std::size_t>> perms;
  if (a) {
    for (std::size_t g = 0; g < a->group().order(); ++g) perms.push_back(a->ray_perm(g));
  } else {
    std::vector<std::size_t> id(f.num_rays());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    perms.push_back(std::move(id));
  }
  const QMatrix l = lsop(f);

  // The lsop span must be invariant: permuting the variables of each form
  // stays inside the span.
  const RowEchelon lspan = rref(l);
  for (std::size_t g = 0; g < perms.size(); ++g) {
    for (std::size_t j = 0; j < d; ++j) {
      QVector moved(f.num_rays());
      for (std::size_t i = 0; i < f.num_rays(); ++i) moved[perms[g][i]] = l(j, i);
      if (!in_row_space(lspan, moved)) {
        throw InvarianceError("element " + std::to_string(g) + " does not preserve the span of the lsop");
      }
    }
  }

  std::vector<GradedBasis> bases;
  for (std::size_t k = 0; k <= d + extra; ++k) bases.push_back(graded_basis(f, k));
  for (std::size_t k = 0; k <= d + extra; ++k) {
    tab.ambient_dims.push_back(bases[k].monomials.size());
    std::vector<Rational> tr;
    for (const auto& p : perms) {
      long fixed = 0;
      for (const auto& m : bases[k].monomials) fixed += permuted(m, p) == m;
      tr.emplace_back(fixed);
    }
    tab.ambient_traces.push_back(std::move(tr));
  }

  for (std::size_t k = 0; k <= d; ++k) {
    DegreePiece piece;
    piece.basis = bases[k];
    const std::size_t n = piece.basis.monomials.size();
    if (k == 0) {
      piece.ideal = rref(QMatrix(0, n));
    } else {
      const auto& prev = bases[k - 1].monomials;
      QMatrix rows(d * prev.size(), n);
      for (std::size_t m = 0; m < prev.size(); ++m) {
        const auto support = prev[m].support();
        for (std::size_t i = 0; i < f.num_rays(); ++i) {
          std::vector<std::size_t> s = support;
          if (!std::binary_search(s.begin(), s.end(), i)) {
            s.insert(std::lower_bound(s.begin(), s.end(), i), i);
            if (!f.find_cone(s)) continue;
          }
          const std::size_t col = piece.basis.index.at(times_variable(prev[m], i));
          for (std::size_t j = 0; j < d; ++j) rows(j * prev.size() + m, col) += l(j, i);
        }
      }
      piece.ideal = rref(std::move(rows));
    }
    piece.quotient_dim = n - piece.ideal.rank();

    std::vector<std::ptrdiff_t> pivot_row(n, -1);
    for (std::size_t i = 0; i < piece.ideal.pivots.size(); ++i) {
      pivot_row[piece.ideal.pivots[i]] = static_cast<std::ptrdiff_t>(i);
    }
    for (const auto& p : perms) {
      Rational tr;
      for (std::size_t m = 0; m < n; ++m) {
        if (pivot_row[m] >= 0) continue;
        const std::size_t img = piece.basis.index.at(permuted(piece.basis.monomials[m], p));
        if (pivot_row[img] < 0) {
          if (img == m) tr += 1;
        } else {
          tr -= piece.ideal.reduced(static_cast<std::size_t>(pivot_row[img]), m);
        }
      }
      piece.traces.push_back(tr);
    }
    tab.pieces.push_back(std::move(piece));
  }
  return tab;
}

}  // namespace

ArtinianTable artinian_table(const Fan& f, std::size_t extra) {
  require_complete_simplicial(f);
  return build_table(f, nullptr, extra);
}

ArtinianTable artinian_table(const FanAction& a, std::size_t extra) {
  if (!a.complete_simplicial()) throw PreconditionError("fan is not complete and simplicial");
  return build_table(a.fan(), &a, extra);
}

QPoly oracle_character(const ArtinianTable& tab, std::size_t element) {
  std::vector<Rational> c;
  for (const auto& p : tab.pieces) {
    if (element >= p.traces.size()) throw PreconditionError("table has no traces for this element");
    c.push_back(p.traces[element]);
  }
  return QPoly(std::move(c));
}

bool socle_check(const ArtinianTable& tab) {
  const auto& top = tab.pieces.back();
  if (top.quotient_dim != 1) return false;
  return std::all_of(top.traces.begin(), top.traces.end(), [](const Rational& t) { return t.is_one(); });
}

VolumeCheck volume_element_check(const Fan& f) { return volume_element_check(f, artinian_table(f, 0)); }

VolumeCheck volume_element_check(const Fan& f, const ArtinianTable& tab) {
  const std::size_t d = f.dim();
  const auto& top = tab.pieces.at(d);
  const std::size_t n = top.basis.monomials.size();
  auto volume_monomial = [&](const std::vector<std::size_t>& rays) {
    Monomial m;
    for (auto r : rays) m.exponents.emplace_back(r, 1u);
    return top.basis.index.at(m);
  };
  for (auto ridge : f.cones_of_dim(d - 1)) {
    const auto& tau = f.cone(ridge).rays;
    std::vector<std::size_t> apex;
    for (auto top_id : f.cones_of_dim(d)) {
      const auto& s = f.cone(top_id).rays;
      if (!std::includes(s.begin(), s.end(), tau.begin(), tau.end())) continue;
      for (auto r : s) {
        if (!std::binary_search(tau.begin(), tau.end(), r)) apex.push_back(r);
      }
    }
    if (apex.size() != 2) return {false, ridge};
    QVector e(n);
    for (auto r : apex) {
      std::vector<QVector> cols = tab.fan.generators(f.cone(ridge));
      cols.push_back(tab.fan.ray(r));
      std::vector<std::size_t> sigma = tau;
      sigma.insert(std::lower_bound(sigma.begin(), sigma.end(), r), r);
      e[volume_monomial(sigma)] += determinant(QMatrix::from_columns(cols, d));
    }
    if (!in_row_space(top.ideal, e)) return {false, ridge};
  }
  return {true, std::nullopt};
}

}  // namespace fanchar
