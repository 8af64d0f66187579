#include "gjps/structure_checks.hpp"

#include <stdexcept>

#include "gjps/calculus.hpp"
#include "gjps/complex_ops.hpp"
#include "gjps/parallel.hpp"

namespace gjps {

namespace {

std::string grade_list(const std::vector<long>& grades) {
  std::string out;
  for (long g : grades) {
    if (!out.empty()) out += ",";
    out += std::to_string(g);
  }
  return out;
}

// Scales every weight-homogeneous piece by 1/degree, the Euler homotopy.
Polynomial euler_integrate(const Polynomial& p, const WeightSystem& w) {
  Polynomial out(p.arity());
  for (const auto& [m, c] : p.terms()) {
    long d = w.degree(m);
    if (d == 0) throw std::invalid_argument("field is not closed (degree-zero obstruction)");
    out.add_term(m, c / Rational(d));
  }
  return out;
}

}  // namespace

Polynomial grad_potential(const VectorField& field, const WeightSystem& w) {
  if (field.dimension() != 3) throw std::invalid_argument("grad_potential needs a spatial field");
  if (!curl(field).is_zero()) throw std::invalid_argument("field is not closed (curl != 0)");
  Polynomial potential = euler_integrate(dot(euler_field(w), field), w);
  if (!(grad(potential) == field)) {
    throw std::invalid_argument("field is not exact");  // cannot happen for closed input
  }
  return potential;
}

VectorField curl_potential(const VectorField& field, const WeightSystem& w) {
  if (field.dimension() != 3) throw std::invalid_argument("curl_potential needs a spatial field");
  if (!divergence(field).is_zero()) throw std::invalid_argument("field is not closed (div != 0)");
  VectorField c = cross(field, euler_field(w));
  std::vector<Polynomial> parts;
  for (int j = 0; j < 3; ++j) {
    // Component j of the 1-form homotopy has form grade deg + w_j.
    Polynomial out(3);
    for (const auto& [m, coeff] : c[j].terms()) {
      out.add_term(m, coeff / Rational(w.degree(m) + w.weight(j)));
    }
    parts.push_back(out);
  }
  VectorField potential(std::move(parts));
  if (!(curl(potential) == field)) {
    throw std::invalid_argument("field is not exact");
  }
  return potential;
}

CheckResult kernel_structure_check(int k, long form_grade, const GjpsStructure& s) {
  s.require_section5("kernel_structure_check");
  const WeightSystem& w = s.weights();
  long slice_grade = form_to_slice_grade(form_grade, w);
  CheckResult result;
  result.name = "ker_boundary" + std::to_string(k) + "@" + std::to_string(form_grade);

  if (k == 3) {
    auto m = operator_matrix(ComplexMap::Boundary3, slice_grade, s);
    auto rk = m.matrix.rank_kernel();
    result.pass = rk.kernel.empty();
    result.detail = result.pass ? "kernel trivial" : "unexpected kernel";
    return result;
  }

  ComplexMap op = k == 1 ? ComplexMap::Boundary1 : ComplexMap::Boundary2;
  auto m = operator_matrix(op, slice_grade, s);
  auto rk = m.matrix.rank_kernel();

  SpanChecker claimed(m.source.dimension());
  if (k == 1) {
    // grad F + G grad P with F in A_d, G in A_{d - w(P)}.
    for (const auto& mono : monomial_basis(form_grade, w).monomials) {
      claimed.add(decompose(m.source, grad(Polynomial::monomial(mono, 1))));
    }
    for (const auto& mono : monomial_basis(form_grade - s.casimir_degree(), w).monomials) {
      claimed.add(decompose(m.source, Polynomial::monomial(mono, 1) * s.grad_casimir()));
    }
  } else {
    // grad H x grad P with H in A_{d - w(P)}.
    for (const auto& mono : monomial_basis(form_grade - s.casimir_degree(), w).monomials) {
      claimed.add(decompose(m.source, cross(grad(Polynomial::monomial(mono, 1)), s.grad_casimir())));
    }
  }

  for (const auto& v : rk.kernel) {
    if (!claimed.contains(v)) {
      result.pass = false;
      result.detail = "kernel element outside the claimed parametric family";
      return result;
    }
  }
  result.pass = true;
  result.detail = "kernel dim " + std::to_string(rk.kernel.size()) + " fully parametrized";
  return result;
}

std::vector<CheckResult> kernel_structure_suite(const GjpsStructure& s, long max_form_grade) {
  std::vector<CheckResult> out;
  for (int k = 1; k <= 3; ++k) {
    std::vector<CheckResult> rows(static_cast<size_t>(max_form_grade) + 1);
    parallel_for(max_form_grade + 1,
                 [&](long d) { rows[static_cast<size_t>(d)] = kernel_structure_check(k, d, s); });
    bool all = true;
    std::vector<long> bad;
    for (long d = 0; d <= max_form_grade; ++d) {
      if (!rows[static_cast<size_t>(d)].pass) {
        all = false;
        bad.push_back(d);
      }
    }
    CheckResult summary;
    summary.name = "kernel_boundary" + std::to_string(k);
    summary.pass = all;
    summary.detail = all ? "grades 0.." + std::to_string(max_form_grade)
                         : "failing grades: " + grade_list(bad);
    out.push_back(summary);
  }
  return out;
}

namespace {

SparseVec coords_in(const GradedSliceBasis& basis, const Polynomial& p) {
  SparseVec v;
  for (const auto& [m, c] : p.terms()) {
    auto it = std::lower_bound(basis.monomials.begin(), basis.monomials.end(), m);
    if (it == basis.monomials.end() || !(*it == m)) {
      throw InhomogeneousImageError("polynomial leaves the expected slice");
    }
    v.set(it - basis.monomials.begin(), c);
  }
  return v;
}

// Generic "image + claimed monomial-multiples span the slice, directly"
// verdict used by lemma_lema, prop_p1 and prop_p2.
struct SpanClaim {
  bool spanning = false;
  bool direct = false;
  long ambient = 0, image = 0, claimed = 0;
};

SpanClaim check_direct_span(const GradedSliceBasis& ambient,
                            const std::vector<SparseVec>& image_vectors,
                            const std::vector<SparseVec>& claimed_vectors) {
  SpanClaim out;
  out.ambient = ambient.dimension();
  SpanChecker span(ambient.dimension());
  for (const auto& v : image_vectors) span.add(v);
  out.image = span.dim();
  long added = 0;
  for (const auto& v : claimed_vectors) {
    if (span.add(v)) ++added;
  }
  out.claimed = static_cast<long>(claimed_vectors.size());
  out.spanning = span.dim() == out.ambient;
  out.direct = added == out.claimed;
  return out;
}

CheckResult summarize(const std::string& name, const std::vector<long>& bad, long bound,
                      const std::string& ok_note = "") {
  CheckResult r;
  r.name = name;
  r.pass = bad.empty();
  r.detail = bad.empty() ? ("grades 0.." + std::to_string(bound) + (ok_note.empty() ? "" : "; " + ok_note))
                         : "failing grades: " + grade_list(bad);
  return r;
}

}  // namespace

std::vector<CheckResult> lemma_suite(const GjpsStructure& s, long bound) {
  s.require_section5("lemma_suite");
  const WeightSystem& w = s.weights();
  const long wp = s.casimir_degree();
  std::vector<CheckResult> out;

  // lemma_cas: ker(F -> grad F x grad P) on A_d is K[P]_d.
  {
    std::vector<long> bad;
    for (long d = 0; d <= bound; ++d) {
      ProductBasis src = slice_basis(SpaceKind::X0, d, w);
      ProductBasis dst = slice_basis(SpaceKind::Omega2, d - w.total() + wp, w);
      QMatrix m = matrix_of_map(src, dst, [&](const SliceValue& v) {
        return SliceValue(koszul1(grad(std::get<Polynomial>(v)), s.casimir()));
      });
      long expected = d % wp == 0 ? 1 : 0;
      auto rk = m.rank_kernel();
      bool ok = static_cast<long>(rk.kernel.size()) == expected;
      if (ok && expected == 1) {
        ok = koszul1(grad(s.casimir().pow(static_cast<int>(d / wp))), s.casimir()).is_zero();
      }
      if (!ok) bad.push_back(d);
    }
    out.push_back(summarize("lemma_cas", bad, bound));
  }

  // lemma_reg: P^r is never lambda * (homogeneous F).
  {
    std::vector<long> bad;
    for (long r = 0; r * wp <= bound; ++r) {
      GradedSliceBasis ambient = monomial_basis(r * wp, w);
      SpanChecker lambda_multiples(ambient.dimension());
      for (const auto& mono :
           monomial_basis(r * wp - s.lambda_degree(), w).monomials) {
        lambda_multiples.add(coords_in(ambient, s.lambda() * Polynomial::monomial(mono, 1)));
      }
      if (lambda_multiples.contains(coords_in(ambient, s.casimir().pow(static_cast<int>(r))))) {
        bad.push_back(r);
      }
    }
    CheckResult r = summarize("lemma_reg", bad, bound / wp);
    if (!bad.empty()) r.detail = "lambda F = P^r solvable for r: " + grade_list(bad);
    out.push_back(r);
  }

  // prop_p2: A_d = {grad P . curl G} (+) span{P^l mu_s}; needs only the
  // isolated singularity of P.
  {
    const auto& mu = s.casimir_singularity().basis;
    std::vector<long> bad;
    for (long d = 0; d <= bound; ++d) {
      GradedSliceBasis ambient = monomial_basis(d, w);
      ProductBasis source = slice_basis(SpaceKind::Omega1, d - wp, w);
      std::vector<SparseVec> image;
      for (long j = 0; j < source.dimension(); ++j) {
        auto field = std::get<VectorField>(basis_value(source, j));
        image.push_back(coords_in(ambient, dot(s.grad_casimir(), curl(field))));
      }
      std::vector<SparseVec> claimed;
      for (const auto& m : mu) {
        long md = w.degree(m);
        if ((d - md) >= 0 && (d - md) % wp == 0) {
          Polynomial rep = s.casimir().pow(static_cast<int>((d - md) / wp)) * Polynomial::monomial(m, 1);
          claimed.push_back(coords_in(ambient, rep));
        }
      }
      SpanClaim claim = check_direct_span(ambient, image, claimed);
      if (!(claim.spanning && claim.direct)) bad.push_back(d);
    }
    out.push_back(summarize("prop_p2", bad, bound));
  }

  const Section6Data* s6 = s.section6();
  auto not_applicable = [&](const std::string& name) {
    CheckResult r;
    r.name = name;
    r.pass = true;
    r.detail = "not applicable (section-5 structure)";
    return r;
  };

  if (!s6) {
    out.push_back(not_applicable("lemma_lema"));
    out.push_back(not_applicable("prop_p1"));
    out.push_back(not_applicable("lemma_lem1"));
    out.push_back(not_applicable("lemma_lem2"));
    out.push_back(not_applicable("planar_lemma"));
    return out;
  }

  const WeightSystem& pw = s6->planar_weights;
  const Polynomial& pt = s6->planar_casimir;
  const long ptd = s6->planar_degree;
  const VectorField grad_pt = grad2(pt);
  const std::vector<Monomial>& theta = s6->planar_singularity.basis;

  // lemma_lema: B_d = {box Q . grad Ptilde} (+) span{Ptilde^i theta_j}.
  {
    std::vector<long> bad;
    for (long d = 0; d <= bound; ++d) {
      GradedSliceBasis ambient = monomial_basis(d, pw);
      std::vector<SparseVec> image;
      for (const auto& q : monomial_basis(d - ptd + pw.total(), pw).monomials) {
        image.push_back(coords_in(ambient, dot(box(Polynomial::monomial(q, 1)), grad_pt)));
      }
      std::vector<SparseVec> claimed;
      for (const auto& th : theta) {
        long td = pw.degree(th);
        if ((d - td) >= 0 && (d - td) % ptd == 0) {
          claimed.push_back(
              coords_in(ambient, pt.pow(static_cast<int>((d - td) / ptd)) * Polynomial::monomial(th, 1)));
        }
      }
      SpanClaim claim = check_direct_span(ambient, image, claimed);
      if (!(claim.spanning && claim.direct)) bad.push_back(d);
    }
    out.push_back(summarize("lemma_lema", bad, bound));
  }

  // prop_p1: A_d = {M . grad Q} (+) span{Ptilde^i lambda^j theta_k}.
  {
    const VectorField modular = cross(s.grad_lambda(), s.grad_casimir());
    const Polynomial pt3 = embed_planar(pt);
    std::vector<long> bad;
    for (long d = 0; d <= bound; ++d) {
      GradedSliceBasis ambient = monomial_basis(d, w);
      std::vector<SparseVec> image;
      for (const auto& q :
           monomial_basis(d - wp + w.weight(0) + w.weight(1), w).monomials) {
        image.push_back(coords_in(ambient, dot(modular, grad(Polynomial::monomial(q, 1)))));
      }
      std::vector<SparseVec> claimed;
      for (const auto& th : theta) {
        Monomial th3{th.exponent(0), th.exponent(1), 0};
        long td = w.degree(th3);
        for (long i = 0; i * wp + td <= d; ++i) {
          long rest = d - i * wp - td;
          if (rest % w.weight(2) != 0) continue;
          long j = rest / w.weight(2);
          Polynomial rep = pt3.pow(static_cast<int>(i)) * s.lambda().pow(static_cast<int>(j)) *
                           Polynomial::monomial(th3, 1);
          claimed.push_back(coords_in(ambient, rep));
        }
      }
      SpanClaim claim = check_direct_span(ambient, image, claimed);
      if (!(claim.spanning && claim.direct)) bad.push_back(d);
    }
    out.push_back(summarize("prop_p1", bad, bound));
  }

  // lemma_lem1: sign identity between w1+w2-w3 and
  // (w(P)/w'(Ptilde)) (|w'| - w'(Ptilde)/(r+2)), plus the proof's relations.
  {
    long a = w.weight(0) + w.weight(1) - w.weight(2);
    Rational zr = make_rational(ptd, s6->z_exponent);  // w'(Ptilde)/(r+2)
    Rational b = make_rational(wp, ptd) * (Rational(pw.total()) - zr);
    auto sign = [](const Rational& q) { return q == 0 ? 0 : (q > 0 ? 1 : -1); };
    bool ok = sign(Rational(a)) == sign(b);
    ok = ok && wp == static_cast<long>(w.weight(2)) * s6->z_exponent;
    ok = ok && wp == static_cast<long>(s6->alpha) * ptd;
    ok = ok && Rational(w.weight(2)) == Rational(s6->alpha) * zr;
    ok = ok && Rational(pw.weight(0) + pw.weight(1)) - zr == make_rational(a, s6->alpha);
    CheckResult r;
    r.name = "lemma_lem1";
    r.pass = ok;
    r.detail = "w1+w2-w3 = " + std::to_string(a) + ", scaled planar value = " + rational_to_string(b);
    out.push_back(r);
  }

  // lemma_lem2: (Ptilde^s - P^s) M lies in im delta^0, witnesses from A_{s w(P)}.
  {
    const VectorField modular = cross(s.grad_lambda(), s.grad_casimir());
    const Polynomial pt3 = embed_planar(pt);
    std::vector<long> bad;
    for (long spow = 0; spow * wp <= bound; ++spow) {
      Polynomial difference = pt3.pow(static_cast<int>(spow)) - s.casimir().pow(static_cast<int>(spow));
      VectorField target = difference * modular;
      ProductBasis slice = slice_basis(SpaceKind::X1, spow * wp + s.shift(), w);
      SpanChecker image(slice.dimension());
      for (const auto& mono : monomial_basis(spow * wp, w).monomials) {
        image.add(decompose(slice, coboundary0(Polynomial::monomial(mono, 1), s)));
      }
      if (!image.contains(decompose(slice, target))) bad.push_back(spow);
    }
    CheckResult r = summarize("lemma_lem2", bad, bound / wp);
    if (!bad.empty()) r.detail = "failing powers s: " + grade_list(bad);
    out.push_back(r);
  }

  // planar_lemma: ker(L -> box L . grad Ptilde) on B_d is K[Ptilde]_d.
  {
    std::vector<long> bad;
    for (long d = 0; d <= bound; ++d) {
      GradedSliceBasis src = monomial_basis(d, pw);
      GradedSliceBasis dst = monomial_basis(d + ptd - pw.total(), pw);
      QMatrix m(dst.dimension(), src.dimension());
      for (long j = 0; j < src.dimension(); ++j) {
        m.set_column(j, coords_in(dst, dot(box(Polynomial::monomial(src.monomials[static_cast<size_t>(j)], 1)),
                                           grad_pt)));
      }
      long expected = d % ptd == 0 ? 1 : 0;
      auto rk = m.rank_kernel();
      bool ok = static_cast<long>(rk.kernel.size()) == expected;
      if (ok && expected == 1) {
        ok = dot(box(pt.pow(static_cast<int>(d / ptd))), grad_pt).is_zero();
      }
      if (!ok) bad.push_back(d);
    }
    out.push_back(summarize("planar_lemma", bad, bound));
  }

  return out;
}

ModularReport modular_triviality_check(const GjpsStructure& s, int spanning_degree) {
  ModularReport report{.divergence_identity_ok = true,
                       .trivial = false,
                       .field = modular_field(s).field,
                       .detail = ""};
  const WeightSystem& w = s.weights();

  // div X_f = M . grad f over every monomial of total degree <= bound.
  for (int total = 0; total <= spanning_degree && report.divergence_identity_ok; ++total) {
    for (int a = 0; a <= total; ++a) {
      for (int b = 0; a + b <= total; ++b) {
        Monomial m{a, b, total - a - b};
        Polynomial f = Polynomial::monomial(m, 1);
        if (!(divergence(hamiltonian_field(f, s)) == dot(report.field, grad(f)))) {
          report.divergence_identity_ok = false;
          report.detail = "divergence identity fails at " + m.to_string(default_variable_names(3));
          break;
        }
      }
      if (!report.divergence_identity_ok) break;
    }
  }

  // Membership of M in im delta^0 at its own grade (exact linear solve).
  if (report.field.is_zero()) {
    report.trivial = true;
  } else {
    long grade = s.shift();  // X1-grade of grad lambda x grad P
    ProductBasis slice = slice_basis(SpaceKind::X1, grade, w);
    SpanChecker image(slice.dimension());
    for (const auto& mono : monomial_basis(grade - s.shift(), w).monomials) {
      image.add(decompose(slice, coboundary0(Polynomial::monomial(mono, 1), s)));
    }
    report.trivial = image.contains(decompose(slice, report.field));
  }
  if (report.detail.empty()) {
    report.detail = report.trivial ? "modular class TRIVIAL" : "modular class NONTRIVIAL";
  }
  return report;
}

namespace {

CheckResult compare_dims(const std::string& name, const SeriesTruncation& computed,
                         const std::function<long(long)>& expected) {
  CheckResult r;
  r.name = name;
  std::vector<long> bad;
  for (long d = computed.offset; d <= computed.max_grade(); ++d) {
    if (computed.at(d) != expected(d)) bad.push_back(d);
  }
  r.pass = bad.empty();
  r.detail = bad.empty() ? "grades " + std::to_string(computed.offset) + ".." +
                               std::to_string(computed.max_grade())
                         : "mismatch at grades: " + grade_list(bad);
  return r;
}

}  // namespace

CheckResult ph0_theorem_check(const GjpsStructure& s, long max_grade) {
  s.require_section6("ph0_theorem_check");
  long wp = s.casimir_degree();
  SeriesTruncation computed = cohomology_dims(0, 0, max_grade, s);
  return compare_dims("ph0_equals_K[P]", computed,
                      [wp](long d) { return d >= 0 && d % wp == 0 ? 1 : 0; });
}

CheckResult ph1_theorem_check(const GjpsStructure& s, long max_grade) {
  s.require_section6("ph1_theorem_check");
  long wp = s.casimir_degree();
  long modular_grade = s.shift();
  bool euler_branch = wp == s.weights().weight(0) + s.weights().weight(1);
  SeriesTruncation computed = cohomology_dims(1, -s.weights().total(), max_grade, s);
  return compare_dims("ph1_structure", computed, [=](long d) {
    long count = 0;
    if (d >= modular_grade && (d - modular_grade) % wp == 0) ++count;
    if (euler_branch && d >= 0 && d % wp == 0) ++count;
    return count;
  });
}

CheckResult ph3_theorem_check(const GjpsStructure& s, long max_grade) {
  s.require_section6("ph3_theorem_check");
  const Section6Data& s6 = *s.section6();
  const WeightSystem& w = s.weights();
  long wp = s.casimir_degree();

  // Jacobian ideal of P' = Ptilde + z^(r+3)/(r+3): (Ptilde_x, Ptilde_y, z^(r+2)).
  Polynomial pt3 = embed_planar(s6.planar_casimir);
  std::vector<Polynomial> gens{pt3.derivative(0), pt3.derivative(1),
                               Polynomial::monomial(Monomial{0, 0, s6.z_exponent}, 1)};
  std::vector<long> qdims = graded_quotient_dims(gens, w, max_grade + w.total());

  SeriesTruncation computed = cohomology_dims(3, -w.total(), max_grade, s);
  return compare_dims("ph3_equals_K[P]_tensor_Asing", computed, [&, wp](long d) {
    long degree = d + w.total();
    long count = 0;
    for (long j = 0; j * wp <= degree; ++j) {
      long rest = degree - j * wp;
      if (rest >= 0 && rest < static_cast<long>(qdims.size())) count += qdims[static_cast<size_t>(rest)];
    }
    return count;
  });
}

}  // namespace gjps
