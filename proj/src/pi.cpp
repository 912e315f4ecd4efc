#include "bethe/pi.hpp"

#include "bethe/errors.hpp"
#include "bethe/monodromy.hpp"
#include "bethe/rmatrix.hpp"

namespace bethe {

namespace {
void check_pi_n(const ModelParams& p) {
  if (p.N == 4) throw UnsupportedN("Pi is not defined for N = 4; O(4) goes through the SU(2) factorization");
}

// (1bar, 1bar) entry of T(v, w) on slots first..first+m-1 of x.
Covector tail_entry(const ModelParams& p, const Covector& x, int first, const std::vector<Rat>& v, const Rat& w) {
  std::vector<ChainFactor> f;
  for (size_t k = 0; k < v.size(); ++k) f.push_back({first + int(k), FactorKind::R, v[k] - w});
  return aux_chain(x, RKind::on(p), p.N - 1, f, p.N - 1);
}

std::vector<Rat> drop(const std::vector<Rat>& v, std::initializer_list<size_t> idx) {
  std::vector<Rat> r;
  for (size_t k = 0; k < v.size(); ++k) {
    bool skip = false;
    for (size_t i : idx) skip |= (i == k);
    if (!skip) r.push_back(v[k]);
  }
  return r;
}

// Keeps the entries of x whose label at pos equals lab (rank unchanged).
Covector restrict_slot(const Covector& x, int pos, int lab) {
  std::vector<Covector::Entry> out;
  for (const auto& e : x.entries())
    if (x.label(e.first, pos) == lab) out.push_back(e);
  return Covector(x.sig(), std::move(out));
}

Signature reduced_sig(const ModelParams& p, size_t m) { return Signature(m, reduced_site(p.N)); }
Signature full_sig(const ModelParams& p, size_t m) { return Signature(m, full_site(p.N)); }

// Residual over all reduced basis covectors of two functions of L.
template <class F, class G>
Residual over_reduced_basis(const ModelParams& p, size_t m, F lhs, G rhs) {
  Residual r;
  Signature s = reduced_sig(p, m);
  for_each_basis_key(s, [&](key::Key k) {
    Covector b = Covector::from_key(s, k);
    r.merge(residual(lhs(b), rhs(b)));
  });
  return r;
}
}  // namespace

Covector pi_apply(const ModelParams& p, const Covector& x, int first, const std::vector<Rat>& v) {
  check_pi_n(p);
  int m = int(v.size());
  if (m == 0) return x;
  Covector y = embed_site(x, first);
  if (m == 1) return y;
  y = pi_apply(p, y, first + 1, std::vector<Rat>(v.begin() + 1, v.end()));
  return tail_entry(p, y, first, v, v[0] - 1);
}

Covector pi_alt_apply(const ModelParams& p, const Covector& x, int first, const std::vector<Rat>& v) {
  check_pi_n(p);
  int m = int(v.size());
  if (m == 0) return x;
  Covector y = embed_site(x, first + m - 1);
  if (m == 1) return y;
  y = pi_alt_apply(p, y, first, std::vector<Rat>(v.begin(), v.end() - 1));
  return tail_entry(p, y, first, v, v[m - 1] - p.inv_nu + 1);
}

PiMap build_pi(const ModelParams& p, const std::vector<Rat>& v) {
  check_pi_n(p);
  LinOp op = LinOp::from_function(reduced_sig(p, v.size()), full_sig(p, v.size()),
                                  [&](const Covector& b) { return pi_apply(p, b, 0, v); });
  return {p, v, std::move(op)};
}

PiMap build_pi_alt(const ModelParams& p, const std::vector<Rat>& v) {
  check_pi_n(p);
  LinOp op = LinOp::from_function(reduced_sig(p, v.size()), full_sig(p, v.size()),
                                  [&](const Covector& b) { return pi_alt_apply(p, b, 0, v); });
  return {p, v, std::move(op)};
}

Residual check_pi_alt(const ModelParams& p, const std::vector<Rat>& v) {
  return residual(build_pi(p, v).map, build_pi_alt(p, v).map);
}

Residual check_pi2_closed_form(const ModelParams& p, const Rat& v1, const Rat& v2) {
  check_pi_n(p);
  Rat f = p.f(v1 - v2);
  int dr = p.N - 2;
  return over_reduced_basis(
      p, 2, [&](const Covector& l) { return pi_apply(p, l, 0, {v1, v2}); },
      [&](const Covector& l) {
        Covector c = embed_site(embed_site(l, 0), 1);
        key::Key k = l.entries().front().first;
        if (key::get(k, 2, 0) == dr - 1 - key::get(k, 2, 1)) c += Covector::from_labels(c.sig(), {p.N - 1, 0}, f);
        return c;
      });
}

Residual check_fundamental(const ModelParams& p, const std::vector<Rat>& v, int i) {
  check_pi_n(p);
  int m = int(v.size());
  if (i < 0 || i + 1 >= m) throw InvalidSlot("fundamental relation needs adjacent slots i, i+1 inside 0..m-1");
  Rat x = v[i] - v[i + 1];
  std::vector<Rat> vs = v;
  std::swap(vs[i], vs[i + 1]);
  RKind red = RKind::reduced(p), on = RKind::on(p);
  return over_reduced_basis(
      p, m, [&](const Covector& l) { return pi_apply(p, apply_r(l, i, i + 1, x, red), 0, v); },
      [&](const Covector& l) {
        Covector y = swap_slots(pi_apply(p, swap_slots(l, i, i + 1), 0, vs), i, i + 1);
        return apply_r(y, i, i + 1, x, on);
      });
}

Residual check_absorption(const ModelParams& p, const std::vector<Rat>& v, const Rat& u0) {
  check_pi_n(p);
  return over_reduced_basis(
      p, v.size(), [&](const Covector& l) { return tail_entry(p, pi_apply(p, l, 0, v), 0, v, u0); },
      [&](const Covector& l) { return pi_apply(p, l, 0, v); });
}

std::array<Residual, 4> check_special_components(const ModelParams& p, const std::vector<Rat>& v) {
  check_pi_n(p);
  int m = int(v.size());
  if (m < 2) throw DomainError("component families need m >= 2");
  int top = p.N - 1, dr = p.N - 2;
  std::vector<Rat> tail(v.begin() + 1, v.end()), head(v.begin(), v.end() - 1);
  std::array<Residual, 4> r;
  Signature s = reduced_sig(p, m);
  for_each_basis_key(s, [&](key::Key k) {
    Covector l = Covector::from_key(s, k);
    Covector pl = pi_apply(p, l, 0, v);
    Covector zero_row(full_sig(p, m - 1));
    r[0].merge(residual(select_slot(pl, 0, 0), zero_row));
    r[2].merge(residual(select_slot(pl, m - 1, top), zero_row));
    int l0 = key::get(k, m, 0), ll = key::get(k, m, m - 1);
    Covector rest_first = pi_apply(p, select_slot(l, 0, l0), 0, tail);
    Covector rest_last = pi_apply(p, select_slot(l, m - 1, ll), 0, head);
    for (int g = 0; g < dr; ++g) {
      r[1].merge(residual(select_slot(pl, 0, embed_code(g)), g == l0 ? rest_first : zero_row));
      r[3].merge(residual(select_slot(pl, m - 1, embed_code(g)), g == ll ? rest_last : zero_row));
    }
  });
  return r;
}

Covector expand_row(const ModelParams& p, const Covector& l, const std::vector<Rat>& v, PiRow which) {
  check_pi_n(p);
  int m = int(v.size()), top = p.N - 1;
  RKind red = RKind::reduced(p), on = RKind::on(p);
  Site fs = full_site(p.N);
  Covector tot(full_sig(p, m));
  if (which == PiRow::FirstSlot1bar) {
    for (int j = 1; j < m; ++j) {
      Covector y = l;
      for (int k = j - 1; k >= 1; --k) y = apply_r(y, j, k, v[j] - v[k], red);
      y = contract_c(y, 0, j);
      y = pi_apply(p, y, 0, drop(v, {0, size_t(j)}));
      y = insert_slot(insert_slot(y, 0, fs, top), j, fs, 0);
      for (int k = m - 1; k > j; --k) y = apply_r(y, j, k, v[j] - v[k], on);
      tot += p.f(v[0] - v[j]) * y;
    }
  } else {
    for (int j = 0; j + 1 < m; ++j) {
      Covector y = l;
      for (int k = j + 1; k + 1 < m; ++k) y = apply_r(y, k, j, v[k] - v[j], red);
      y = contract_c(y, j, m - 1);
      y = pi_apply(p, y, 0, drop(v, {size_t(j), size_t(m - 1)}));
      y = insert_slot(insert_slot(y, j, fs, top), m - 1, fs, 0);
      for (int k = 0; k < j; ++k) y = apply_r(y, k, j, v[k] - v[j], on);
      tot += p.f(v[j] - v[m - 1]) * y;
    }
  }
  return tot;
}

Covector pi_expand(const ModelParams& p, const Covector& l, const std::vector<Rat>& v, PiRow which) {
  check_pi_n(p);
  int m = int(v.size());
  if (m == 0) return l;
  Covector base;
  if (which == PiRow::FirstSlot1bar)
    base = pi_apply(p, embed_site(l, 0), 1, std::vector<Rat>(v.begin() + 1, v.end()));
  else
    base = pi_apply(p, embed_site(l, m - 1), 0, std::vector<Rat>(v.begin(), v.end() - 1));
  return base + expand_row(p, l, v, which);
}

Residual check_expand_row(const ModelParams& p, const std::vector<Rat>& v, PiRow which) {
  int m = int(v.size());
  if (m < 1) throw DomainError("expansion needs m >= 1");
  int pos = which == PiRow::FirstSlot1bar ? 0 : m - 1;
  int lab = which == PiRow::FirstSlot1bar ? p.N - 1 : 0;
  Residual r = over_reduced_basis(
      p, m, [&](const Covector& l) { return restrict_slot(pi_apply(p, l, 0, v), pos, lab); },
      [&](const Covector& l) { return expand_row(p, l, v, which); });
  r.merge(over_reduced_basis(
      p, m, [&](const Covector& l) { return pi_apply(p, l, 0, v); },
      [&](const Covector& l) { return pi_expand(p, l, v, which); }));
  return r;
}

Residual check_insertion_step(const ModelParams& p, const Rat& x) {
  check_pi_n(p);
  RKind on = RKind::on(p);
  Site fs = full_site(p.N);
  int top = p.N - 1;
  Residual r;
  for (int g = 1; g < top; ++g) {
    Covector s = Covector::from_labels({fs}, {g});
    Covector lhs = apply_r(add_slot(apply_r(add_slot(s, fs, top), 0, 1, x, on), fs, top), 0, 2, Rat(1), on);
    Covector rhs = apply_r(add_slot(add_slot(s, fs, top), fs, top), 0, 2, Rat(1), on);
    r.merge(residual(lhs, rhs));
  }
  return r;
}

size_t pi_weight_violations(const PiMap& pi) {
  size_t bad = 0;
  for (const auto& [k, row] : pi.map.rows()) {
    auto w = weight_of(pi.map.in(), k, pi.p.N);
    for (const auto& e : row)
      if (weight_of(pi.map.out(), e.first, pi.p.N) != w) ++bad;
  }
  return bad;
}

}  // namespace bethe
