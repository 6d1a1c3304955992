#include "nambu/solve.hpp"

#include <algorithm>
#include <map>

#include "nambu/errors.hpp"
#include "nambu/linalg.hpp"

namespace nambu {

namespace {

// key = term without its coefficient
ExpPolyTerm key_of(const ExpPolyTerm& t) {
  ExpPolyTerm k = t;
  k.coeff = GaussRat(1);
  return k;
}

struct KeyLess {
  bool operator()(const ExpPolyTerm& a, const ExpPolyTerm& b) const {
    return compare_key(a, b) < 0;
  }
};

using KeyIndex = std::map<ExpPolyTerm, int, KeyLess>;

ExpPolyTerm conj_key(const ExpPolyTerm& k) {
  ExpPolyTerm c = k;
  for (auto& [axis, f] : c.freq) f = f.conj();
  return c;
}

ExpPoly shape_to_poly(const ExpPolyTerm& k) {
  return ExpPoly::from_terms({k});
}

void require_param_free(const ExpPoly& e, const char* what) {
  auto ps = e.params_used();
  if (!ps.empty())
    throw Error(std::string(what) + " carries unbound parameter " + *ps.begin() +
                "; exact solves run after substitute_params");
}

}  // namespace

std::optional<ExpPoly> SolutionSpace::particular(int qi) const {
  for (const auto& g : generators) {
    bool unit = true;
    for (size_t j = 0; j < g.q.size(); ++j) {
      Rat want = (static_cast<int>(j) == qi) ? Rat(1) : Rat(0);
      if (g.q[j] != want) {
        unit = false;
        break;
      }
    }
    if (unit) return g.f;
  }
  return std::nullopt;
}

std::vector<ExpPoly> SolutionSpace::span() const {
  std::vector<ExpPoly> out;
  for (const auto& g : generators) out.push_back(g.f);
  for (const auto& h : homogeneous) out.push_back(h);
  return out;
}

SolutionSpace solve_multiplicative(const MultiplicativityProblem& problem) {
  const int n = static_cast<int>(problem.fields.size());
  if (static_cast<int>(problem.trace.size()) != n)
    throw Error("trace length must match field count");
  for (const auto& f : problem.fields)
    for (const auto& comp : f.components) require_param_free(comp, "field");

  // index the ansatz shapes
  KeyIndex index;
  std::vector<ExpPolyTerm> shapes;
  for (const auto& b : problem.ansatz) {
    require_param_free(b, "ansatz function");
    if (b.terms().size() != 1 || b.terms()[0].coeff != GaussRat(1))
      throw Error("ansatz basis functions must be single shapes");
    ExpPolyTerm k = key_of(b.terms()[0]);
    if (index.emplace(k, static_cast<int>(shapes.size())).second)
      shapes.push_back(k);
  }
  const int M = static_cast<int>(shapes.size());
  if (M == 0) throw Error("empty ansatz");

  // conjugation permutation beta -> conj(beta); needed for realification
  std::vector<int> conj_perm(M);
  for (int b = 0; b < M; ++b) {
    auto it = index.find(conj_key(shapes[b]));
    if (it == index.end())
      throw AnsatzNotClosed("ansatz not closed under conjugation: " +
                            shape_to_poly(shapes[b]).repr());
    conj_perm[b] = it->second;
  }

  // images G_ib = Y_i(B_b) + t_i B_b, expanded on the shape index
  // columns: [q_0..q_{n-1}, c_0..c_{M-1}]
  const int cols = n + M;
  std::vector<GVec> rows;  // built sparsely then solved densely
  // one row per (i, key) with any support
  for (int i = 0; i < n; ++i) {
    std::map<ExpPolyTerm, GVec, KeyLess> eq;  // key -> row
    for (int b = 0; b < M; ++b) {
      ExpPoly img = apply(problem.fields[i], shape_to_poly(shapes[b]));
      if (problem.trace[i] != 0)
        img += ExpPoly::constant(problem.trace[i]) * shape_to_poly(shapes[b]);
      for (const auto& t : img.terms()) {
        ExpPolyTerm k = key_of(t);
        if (!index.count(k))
          throw AnsatzNotClosed("ansatz not closed: image shape " +
                                shape_to_poly(k).repr() + " escapes");
        auto [it, fresh] = eq.try_emplace(k);
        if (fresh) it->second.assign(cols, GaussRat(0));
        it->second[n + b] += t.coeff;
      }
    }
    // RHS q_i lands on the constant shape
    ExpPolyTerm const_key;
    const_key.coeff = GaussRat(1);
    auto [it, fresh] = eq.try_emplace(const_key);
    if (fresh) it->second.assign(cols, GaussRat(0));
    it->second[i] -= GaussRat(1);
    for (auto& [k, row] : eq) rows.push_back(std::move(row));
  }
  {  // f(e) = 0: shapes with no monomial part evaluate to 1 at the origin
    GVec row(cols, GaussRat(0));
    for (int b = 0; b < M; ++b)
      if (shapes[b].powers.empty()) row[n + b] = GaussRat(1);
    rows.push_back(std::move(row));
  }

  std::vector<GVec> null = nullspace_basis(std::move(rows));

  // realify: v -> (v + v~)/2, (v - v~)/(2i) with v~ the conjugate solution
  std::vector<GVec> realified;
  for (const auto& v : null) {
    GVec tilde(cols);
    for (int j = 0; j < n; ++j) tilde[j] = v[j].conj();
    for (int b = 0; b < M; ++b) tilde[n + conj_perm[b]] = v[n + b].conj();
    GVec w1(cols), w2(cols);
    bool nz1 = false, nz2 = false;
    GaussRat half(Rat(1, 2));
    GaussRat mhalf_i(Rat(0), Rat(-1, 2));
    for (int j = 0; j < cols; ++j) {
      w1[j] = (v[j] + tilde[j]) * half;
      w2[j] = (v[j] - tilde[j]) * mhalf_i;
      nz1 |= !w1[j].is_zero();
      nz2 |= !w2[j].is_zero();
    }
    if (nz1) realified.push_back(std::move(w1));
    if (nz2) realified.push_back(std::move(w2));
  }

  SolutionSpace out;
  if (realified.empty()) {
    out.forced_zero.resize(n);
    for (int i = 0; i < n; ++i) out.forced_zero[i] = i;
    return out;
  }

  std::vector<int> piv = rref(realified);
  auto f_of = [&](const GVec& row) {
    std::vector<ExpPolyTerm> terms;
    for (int b = 0; b < M; ++b) {
      if (row[n + b].is_zero()) continue;
      ExpPolyTerm t = shapes[b];
      t.coeff = row[n + b];
      terms.push_back(std::move(t));
    }
    return ExpPoly::from_terms(std::move(terms));
  };

  std::vector<ExpPoly> homog_candidates;
  for (size_t r = 0; r < piv.size(); ++r) {
    const GVec& row = realified[r];
    if (piv[r] < n) {
      SolutionSpace::Generator g;
      g.q.resize(n);
      for (int j = 0; j < n; ++j) {
        if (row[j].im != 0) throw Error("internal: complex q after realification");
        g.q[j] = row[j].re;
      }
      g.f = f_of(row);
      out.generators.push_back(std::move(g));
    } else {
      ExpPoly f = f_of(row);
      ExpPoly re = ExpPoly::constant(GaussRat(Rat(1, 2))) * (f + f.conj());
      ExpPoly im = ExpPoly::constant(GaussRat(Rat(0), Rat(-1, 2))) * (f - f.conj());
      if (!re.is_zero()) homog_candidates.push_back(std::move(re));
      if (!im.is_zero()) homog_candidates.push_back(std::move(im));
    }
  }
  // reduce homogeneous candidates to an independent set
  for (const auto& h : homog_candidates) {
    if (!in_function_span(out.homogeneous, h)) out.homogeneous.push_back(h);
  }
  for (int i = 0; i < n; ++i) {
    bool zero = true;
    for (const auto& g : out.generators)
      if (g.q[i] != 0) {
        zero = false;
        break;
      }
    if (zero) out.forced_zero.push_back(i);
  }
  return out;
}

std::vector<ExpPoly> default_ansatz(const std::vector<VectorField>& fields,
                                    const std::vector<ExpPoly>& extra,
                                    unsigned max_degree, std::size_t cap) {
  using Freq = std::vector<std::pair<int, AffForm>>;
  // gather axes and base frequencies
  std::set<int> axes;
  std::vector<Freq> base{{}};
  auto add_freq = [&](const Freq& f) {
    for (const auto& known : base)
      if (known == f) return;
    base.push_back(f);
  };
  auto neg = [](const Freq& f) {
    Freq r = f;
    for (auto& [axis, form] : r) form = -form;
    return r;
  };
  auto conj_f = [](const Freq& f) {
    Freq r = f;
    for (auto& [axis, form] : r) form = form.conj();
    return r;
  };
  auto scan = [&](const ExpPoly& e) {
    for (const auto& t : e.terms()) {
      for (const auto& [axis, ex] : t.powers) axes.insert(axis);
      for (const auto& [axis, form] : t.freq) axes.insert(axis);
      if (!t.freq.empty()) {
        add_freq(t.freq);
        add_freq(neg(t.freq));
        add_freq(conj_f(t.freq));
      }
    }
  };
  for (const auto& f : fields)
    for (const auto& comp : f.components) scan(comp);
  for (const auto& e : extra) scan(e);
  if (axes.empty()) axes.insert(0);

  // pairwise sums
  auto add_forms = [](const Freq& a, const Freq& b) {
    Freq r = a;
    for (const auto& [axis, form] : b) {
      bool found = false;
      for (auto& [ax, g] : r)
        if (ax == axis) {
          g = g + form;
          found = true;
          break;
        }
      if (!found) r.emplace_back(axis, form);
    }
    std::sort(r.begin(), r.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::erase_if(r, [](const auto& p) { return p.second.is_zero(); });
    return r;
  };
  std::vector<Freq> lambdas = base;
  auto add_lambda = [&](const Freq& f) {
    for (const auto& known : lambdas)
      if (known == f) return;
    lambdas.push_back(f);
  };
  for (size_t i = 0; i < base.size(); ++i)
    for (size_t j = i; j < base.size(); ++j) add_lambda(add_forms(base[i], base[j]));

  // monomials of degree <= max_degree over the axes
  std::vector<std::vector<std::pair<int, unsigned>>> monos{{}};
  std::vector<int> axlist(axes.begin(), axes.end());
  std::function<void(size_t, unsigned, std::vector<std::pair<int, unsigned>>&)> rec =
      [&](size_t pos, unsigned left, std::vector<std::pair<int, unsigned>>& cur) {
        if (pos == axlist.size()) return;
        for (unsigned e = 1; e <= left; ++e) {
          cur.emplace_back(axlist[pos], e);
          monos.push_back(cur);
          rec(pos + 1, left - e, cur);
          cur.pop_back();
        }
        rec(pos + 1, left, cur);
      };
  std::vector<std::pair<int, unsigned>> cur;
  rec(0, max_degree, cur);

  KeyIndex seen;
  std::vector<ExpPolyTerm> shapes;
  auto add_shape = [&](ExpPolyTerm k) {
    k.coeff = GaussRat(1);
    if (seen.emplace(k, 1).second) shapes.push_back(k);
  };
  for (const auto& m : monos)
    for (const auto& l : lambdas) {
      ExpPolyTerm k;
      k.coeff = GaussRat(1);
      k.powers = m;
      k.freq = l;
      add_shape(std::move(k));
    }
  // seed with the extras' own shapes
  for (const auto& e : extra)
    for (const auto& t : e.terms()) {
      ExpPolyTerm k = key_of(t);
      k.params.clear();
      add_shape(k);
      add_shape(conj_key(k));
    }

  // closure completion under the fields (and conjugation)
  for (size_t head = 0; head < shapes.size(); ++head) {
    if (shapes.size() > cap)
      throw AnsatzNotClosed("ansatz closure exceeded cap");
    ExpPoly b = shape_to_poly(shapes[head]);
    for (const auto& f : fields) {
      ExpPoly img = apply(f, b);
      for (const auto& t : img.terms()) {
        ExpPolyTerm k = key_of(t);
        add_shape(k);
        add_shape(conj_key(k));
      }
    }
  }

  std::vector<ExpPoly> out;
  out.reserve(shapes.size());
  for (const auto& k : shapes) out.push_back(shape_to_poly(k));
  return out;
}

bool in_function_span(const std::vector<ExpPoly>& gens, const ExpPoly& target) {
  std::vector<std::vector<ExpPoly>> g2;
  g2.reserve(gens.size());
  for (const auto& g : gens) g2.push_back({g});
  return in_tensor_span(g2, {target});
}

bool in_tensor_span(const std::vector<std::vector<ExpPoly>>& gens,
                    const std::vector<ExpPoly>& target) {
  // index all keys per component slot
  size_t slots = target.size();
  std::vector<KeyIndex> index(slots);
  std::vector<int> offset(slots + 1, 0);
  auto index_terms = [&](const ExpPoly& e, size_t slot) {
    for (const auto& t : e.terms()) {
      ExpPolyTerm k = key_of(t);
      index[slot].emplace(k, static_cast<int>(index[slot].size()));
    }
  };
  for (const auto& g : gens) {
    if (g.size() != slots) throw Error("tensor span: slot count mismatch");
    for (size_t s = 0; s < slots; ++s) index_terms(g[s], s);
  }
  for (size_t s = 0; s < slots; ++s) index_terms(target[s], s);
  for (size_t s = 0; s < slots; ++s)
    offset[s + 1] = offset[s] + static_cast<int>(index[s].size());
  int dim = offset[slots];
  auto vectorize = [&](const std::vector<ExpPoly>& comp) {
    GVec v(dim, GaussRat(0));
    for (size_t s = 0; s < slots; ++s)
      for (const auto& t : comp[s].terms()) {
        auto it = index[s].find(key_of(t));
        if (it == index[s].end()) throw Error("tensor span: unindexed key");
        v[offset[s] + it->second] = t.coeff;
      }
    return v;
  };
  GMat rows;
  rows.reserve(gens.size());
  for (const auto& g : gens) rows.push_back(vectorize(g));
  return in_span(rows, vectorize(target)).has_value();
}

std::map<std::string, ExpPoly> split_by_params(const ExpPoly& e) {
  std::map<std::string, std::vector<ExpPolyTerm>> buckets;
  for (const auto& t : e.terms()) {
    for (const auto& [axis, f] : t.freq)
      if (!f.lin.empty())
        throw Error("parameter inside a frequency; bind it first: " +
                    f.lin[0].first);
    std::string key;
    if (t.params.size() > 1)
      throw Error("term carries two parameters; claims must be linear");
    if (t.params.size() == 1) {
      if (t.params[0].second > 1)
        throw Error("parameter degree > 1 in claim: " + t.params[0].first);
      key = t.params[0].first;
    }
    ExpPolyTerm bare = t;
    bare.params.clear();
    buckets[key].push_back(std::move(bare));
  }
  std::map<std::string, ExpPoly> out;
  for (auto& [k, terms] : buckets) {
    ExpPoly p = ExpPoly::from_terms(std::move(terms));
    if (!p.is_zero()) out.emplace(k, std::move(p));
  }
  return out;
}

Theorem1Result theorem1_check(const std::vector<AbstractVector>& basis,
                              const Frame& frame, const BoundConstants& c,
                              int trials, unsigned long seed) {
  Theorem1Result res;
  ClosureResult cl = subalgebra_closure_check(basis, c);
  res.closure_ok = cl.ok;
  res.witness_i = cl.wi;
  res.witness_j = cl.wj;
  // combination fields Y_j = sum_k basis_jk X_k
  std::vector<VectorField> fields;
  for (const auto& v : basis) {
    VectorField y;
    y.components.assign(frame.dim(), ExpPoly());
    for (int k = 0; k < frame.dim(); ++k) {
      if (v[k] == 0) continue;
      for (int mu = 0; mu < frame.dim(); ++mu)
        y.components[mu] += ExpPoly::constant(v[k]) * frame.rows[k][mu];
    }
    fields.push_back(std::move(y));
  }
  Multivector eta = wedge(ExpPoly::constant(1), fields, frame.dim());
  res.fid_ok = !fundamental_identity_check(eta, trials, seed).has_value();
  return res;
}

}  // namespace nambu
