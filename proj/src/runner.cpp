#include "syz/runner.hpp"

#include <fstream>
#include <map>
#include <ostream>

#include "syz/cone.hpp"
#include "syz/theoremlab.hpp"

namespace syz {

namespace {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long long task_int(const TaskBlock& t, const std::string& key, long long dflt) {
  return t.has(key) ? std::stoll(t.params.at(key)) : dflt;  // parser validated
}

std::string hf_line(const std::vector<long long>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

template <class F>
F make_field(const RunOptions&);
template <>
GfpField make_field<GfpField>(const RunOptions& o) {
  return GfpField{(std::uint32_t)o.characteristic};
}
template <>
RatField make_field<RatField>(const RunOptions&) {
  return RatField{};
}

template <class F>
class Runner {
 public:
  Runner(const ProblemFile& pf, const RunOptions& opt, std::ostream& out)
      : pf_(pf), opt_(opt), out_(out), field_(make_field<F>(opt)) {}

  nlohmann::ordered_json run_all() {
    auto exp = nlohmann::ordered_json::array();
    int n = 0;
    for (const auto& t : pf_.tasks) {
      ++n;
      out_ << "== task " << n << ": " << t.command
           << (t.target.empty() ? "" : " " + t.target) << " ==\n";
      nlohmann::ordered_json j;
      j["task"] = n;
      j["line"] = t.line;
      j["command"] = t.command + (t.target.empty() ? "" : " " + t.target);
      try {
        run_task(t, j);
      } catch (const std::exception& e) {
        std::string w = e.what();
        if (w.rfind("line ", 0) == 0) throw;  // already tagged
        fail("line " + std::to_string(t.line) + ": " + w);
      }
      exp.push_back(std::move(j));
      out_ << "\n";
    }
    return exp;
  }

 private:
  const ProblemFile& pf_;
  const RunOptions& opt_;
  std::ostream& out_;
  F field_;
  // keyed by (name, window top) so refined windows rebuild rather than lie;
  // factors of a fibre resolve through here, which keeps pointers shared
  std::map<std::pair<std::string, int>, RingPtr<F>> rings_;

  RingPtr<F> ring(const std::string& name, int top) {
    auto key = std::make_pair(name, top);
    if (auto it = rings_.find(key); it != rings_.end()) return it->second;
    const RingBlock* rb = pf_.find_ring(name);
    SYZ_CHECK(rb, "unknown ring '" + name + "'");
    RingPtr<F> r;
    if (rb->is_fibre) {
      r = fibre_product(ring(rb->left, top), ring(rb->right, top), rb->name);
    } else {
      std::vector<Poly<F>> rels;
      for (const auto& sp : rb->relations) rels.push_back(poly_from_ast(field_, sp.ast));
      r = make_quotient_ring(field_, rb->vars, std::move(rels), top, rb->name);
    }
    rings_.emplace(key, r);
    return r;
  }

  std::vector<std::pair<int, std::vector<Poly<F>>>> presentation_columns(
      const ModuleBlock& mb) {
    std::vector<std::pair<int, std::vector<Poly<F>>>> cols;
    for (const auto& col : mb.columns) {
      std::vector<Poly<F>> entries;
      for (const auto& sp : col.entries) entries.push_back(poly_from_ast(field_, sp.ast));
      cols.push_back({col.degree, std::move(entries)});
    }
    return cols;
  }

  GradedModule<F> module(const ModuleBlock& mb, int top) {
    RingPtr<F> r = ring(mb.over, top);
    switch (mb.kind) {
      case ModuleKind::ResidueField:
        return residue_field_module(r);
      case ModuleKind::Free:
        return ring_as_module(r);
      case ModuleKind::MaximalIdeal:
        return maximal_ideal_module(r);
      case ModuleKind::PowerQuotient:
        return power_quotient_module(r, mb.power);
      case ModuleKind::Quotient: {
        std::vector<Poly<F>> gens;
        for (const auto& sp : mb.ideal) gens.push_back(poly_from_ast(field_, sp.ast));
        return cyclic_quotient(r, gens).mod;
      }
      case ModuleKind::Presentation:
        return make_presentation_module(r, mb.gens, presentation_columns(mb)).mod;
    }
    fail("unhandled module kind");
  }

  const ModuleBlock& module_block(const TaskBlock& t) {
    const ModuleBlock* mb = pf_.find_module(t.need("module"));
    SYZ_CHECK(mb, "unknown module '" + t.params.at("module") + "'");
    return *mb;
  }

  // "module M" or "ring R" target for hilbert-style commands
  std::vector<long long> hilbert_target(const TaskBlock& t, int dmax) {
    SYZ_CHECK(!(t.has("module") && t.has("ring")),
              "give either 'module' or 'ring', not both");
    if (t.has("ring")) {
      RingPtr<F> r = ring(t.params.at("ring"), dmax);
      out_ << r->describe() << "\n";
      return r->hilbert();
    }
    const ModuleBlock& mb = module_block(t);
    GradedModule<F> m = module(mb, dmax);
    out_ << "module " << mb.name << " over " << m.ring->describe() << "\n";
    return m.hilbert();
  }

  BettiTable resolved_table(const GradedModule<F>& m, int imax, int* term = nullptr) {
    ResolveOptions ro;
    ro.imax = imax;
    Resolution<F> res = resolve(m, ro);
    if (term) *term = res.terminated_at;
    return betti_table(res);
  }

  void print_matrix(const PolyMatrix<F>& pm, const RingPtr<F>& over,
                    nlohmann::ordered_json& j) {
    out_ << "presentation matrix (" << pm.rows() << " x " << pm.cols()
         << ") over " << over->describe() << ":\n";
    auto rows = nlohmann::ordered_json::array();
    for (int i = 0; i < pm.rows(); ++i) {
      auto row = nlohmann::ordered_json::array();
      out_ << "  [";
      for (int k = 0; k < pm.cols(); ++k) {
        std::string e = poly_str(field_, pm.at(i, k), over->vars);
        out_ << (k ? ", " : " ") << e;
        row.push_back(e);
      }
      out_ << " ]\n";
      rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
  }

  void emit_report(const VerificationReport& rep, nlohmann::ordered_json& j) {
    out_ << rep.str();
    j["report"] = rep.to_json();
  }

  void run_task(const TaskBlock& t, nlohmann::ordered_json& j) {
    int imax = (int)task_int(t, "imax", opt_.imax);
    int dmax = (int)task_int(t, "dmax", opt_.dmax);
    std::uint64_t seed = (std::uint64_t)task_int(t, "seed", (long long)opt_.seed);
    SYZ_CHECK(imax >= 1, "imax must be at least 1");
    SYZ_CHECK(dmax >= 1, "dmax must be at least 1");

    const std::string& cmd = t.command;
    if (cmd == "hilbert") {
      auto values = hilbert_target(t, dmax);
      out_ << "H = " << hf_line(values) << "\n";
      HilbertFit fit = fit_hilbert(values);
      j["values"] = values;
      if (fit.confident) {
        out_ << "series = " << fit.series_str() << "\n";
        j["series"] = fit.series_str();
      } else {
        out_ << "series = (no stable rational form on this window)\n";
      }
    } else if (cmd == "resolve" || cmd == "betti" || cmd == "regularity" ||
               cmd == "purity") {
      const ModuleBlock& mb = module_block(t);
      GradedModule<F> m = module(mb, dmax);
      int term = -1;
      BettiTable b = resolved_table(m, imax, &term);
      out_ << "module " << mb.name << " over " << m.ring->describe() << " (imax="
           << imax << ", dmax=" << dmax << ")\n";
      if (cmd == "resolve" || cmd == "betti") {
        out_ << render_betti(b);
        if (cmd == "resolve") {
          if (term >= 0)
            out_ << "terminated at stage " << term
                 << " (finite projective dimension on this window)\n";
          else
            out_ << "window exhausted without termination\n";
          j["terminated_at"] = term;
        }
        j["betti"] = nlohmann::ordered_json::parse(betti_to_json(b));
      } else if (cmd == "regularity") {
        RegularityWindow rw = regularity_window(b);
        out_ << "regularity = " << rw.str() << "\n";
        j["regularity"] = rw.str();
      } else {
        PureType p = purity_check(b);
        out_ << p.str() << "\n";
        j["purity"] = p.str();
        j["pure"] = p.pure;
        if (p.pure) {
          DeltaCondition dc = purity_delta_condition(p);
          out_ << (dc.pass ? "delta condition: holds on the window"
                           : "delta condition: " + dc.detail)
               << "\n";
          j["delta_condition"] = dc.pass;
        }
      }
    } else if (cmd == "koszul") {
      RingPtr<F> r = ring(t.need("ring"), dmax);
      int stages = std::min(imax, r->top);
      KoszulStageReport rep = koszul_stage_check(r, stages);
      out_ << r->describe() << "\n";
      if (rep.linear_through_window())
        out_ << "Koszul through stage " << stages << " on the window\n";
      else
        out_ << "k leaves the diagonal at stage " << rep.first_failure
             << " (beta_{" << rep.first_failure << "," << rep.witness_j
             << "} != 0)\n";
      j["stages"] = stages;
      j["linear"] = rep.linear_through_window();
      if (!rep.linear_through_window()) j["first_failure"] = rep.first_failure;
    } else if (cmd == "catalog") {
      RingPtr<F> r = ring(t.need("ring"), dmax);
      Catalog cat = pure_generator_catalog(r, imax, dmax, seed);
      out_ << r->describe() << "\n";
      out_ << "catalog: " << cat.entries.size() << " pure tables (imax=" << imax
           << ", dmax=" << dmax << ")\n";
      out_ << "Hilbert shape: " << cat.hilbert_shape << "\n";
      if (!cat.regular_form.empty())
        out_ << "regular form: l = " << cat.regular_form << "\n";
      auto names = nlohmann::ordered_json::array();
      for (const auto& e : cat.entries) {
        out_ << "  " << e.descriptor << "\n";
        names.push_back(e.descriptor);
      }
      j["hilbert_shape"] = cat.hilbert_shape;
      if (!cat.regular_form.empty()) j["regular_form"] = cat.regular_form;
      j["descriptors"] = std::move(names);
    } else if (cmd == "cone-decompose") {
      const ModuleBlock& mb = module_block(t);
      GradedModule<F> m = module(mb, dmax);
      BettiTable b = resolved_table(m, imax);
      Catalog cat = pure_generator_catalog(m.ring, imax, dmax, seed);
      ConeDecomposition dec = cone_decompose(b, cat);
      out_ << "module " << mb.name << " over " << m.ring->describe() << "\n";
      out_ << render_betti(b);
      out_ << dec.str() << "\n";
      out_ << "LP pivots: " << dec.pivot_steps << "\n";
      j["member"] = dec.member;
      auto parts = nlohmann::ordered_json::array();
      for (const auto& part : dec.parts) {
        nlohmann::ordered_json pj;
        pj["coeff"] = rational_str(part.coeff);
        pj["descriptor"] = part.descriptor;
        parts.push_back(std::move(pj));
      }
      j["parts"] = std::move(parts);
      j["pivots"] = dec.pivot_steps;
    } else if (cmd == "verify") {
      run_verify(t, j, imax, dmax, seed);
    } else if (cmd == "construct") {
      run_construct(t, j, imax, dmax, seed);
    } else if (cmd == "scan-q511") {
      RingPtr<F> r = ring(t.need("ring"), dmax);
      FamilySpec fam;
      fam.trials = (int)task_int(t, "trials", fam.trials);
      fam.max_gens = (int)task_int(t, "max-gens", fam.max_gens);
      fam.max_deg = (int)task_int(t, "max-deg", fam.max_deg);
      fam.imax = imax;
      fam.seed = seed;
      emit_report(scan_question_5_11(r, fam), j);
    } else {
      fail("unknown command '" + cmd + "'");  // parser should have caught this
    }
  }

  void run_verify(const TaskBlock& t, nlohmann::ordered_json& j, int imax,
                  int dmax, std::uint64_t seed) {
    const std::string& id = t.target;
    if (id == "lemma-3-2" || id == "prop-3-3" || id == "koszul-transfer") {
      GradedModule<F> m = module(module_block(t), dmax);
      RingPtr<F> r = ring(t.need("ring"), dmax);
      if (id == "lemma-3-2")
        emit_report(verify_lemma_3_2(m, r, imax), j);
      else if (id == "prop-3-3")
        emit_report(verify_prop_3_3(m, r, imax).report, j);
      else
        emit_report(verify_koszul_transfer(m, r, imax), j);
    } else if (id == "prop-3-6") {
      const ModuleBlock& mb = module_block(t);
      SYZ_CHECK(mb.kind == ModuleKind::Presentation,
                "'verify prop-3-6' needs a presentation-kind module (its columns "
                "span the submodule)");
      RingPtr<F> r = ring(mb.over, dmax);
      FreeWindow<F> cover(r, mb.gens);
      std::vector<std::pair<int, std::vector<typename F::Elt>>> gens;
      for (const auto& [deg, entries] : presentation_columns(mb))
        gens.push_back({deg, cover.column_coords(entries, deg)});
      emit_report(verify_prop_3_6(span_submodule<F>(cover, gens), imax), j);
    } else if (id == "thm-5-2") {
      emit_report(verify_thm_5_2(module(module_block(t), dmax), imax), j);
    } else if (id == "lemma-5-7") {
      emit_report(verify_lemma_5_7(ring(t.need("ring"), dmax), imax, seed), j);
    } else if (id == "universally-koszul") {
      RingPtr<F> r = ring(t.need("ring"), dmax);
      int trials = (int)task_int(t, "trials", 20);
      emit_report(sample_universal_koszul(r, trials, seed, imax), j);
    } else {
      fail("unknown verify target '" + id +
           "' (one of: lemma-3-2, prop-3-3, prop-3-6, koszul-transfer, thm-5-2, "
           "lemma-5-7, universally-koszul)");
    }
  }

  void run_construct(const TaskBlock& t, nlohmann::ordered_json& j, int imax,
                     int dmax, std::uint64_t seed) {
    const std::string& id = t.target;
    if (id == "prop-5-1") {
      GradedModule<F> m = module(module_block(t), dmax);
      RingPtr<F> r = ring(t.need("ring"), dmax);
      SYZ_CHECK(r->fibre.has_value(), "'construct prop-5-1' needs a fibre product ring");
      Poly<F> z;
      if (t.has("z")) {
        const RingBlock* rb = pf_.find_ring(t.params.at("ring"));
        auto right_vars = pf_.ring_vars(*pf_.find_ring(rb->right));
        try {
          z = poly_from_ast(field_, parse_poly(t.params.at("z"), right_vars));
        } catch (const ParseError& pe) {
          fail(pe.message + " in z = '" + t.params.at("z") + "'");
        }
      } else {
        auto reg = find_linear_regular(r->fibre->right, seed, 32);
        SYZ_CHECK(reg.found,
                  "no window-certified regular linear form in the right factor; "
                  "give one with z = ...");
        z = reg.form;
      }
      Construction<F> c = construct_prop_5_1(m, r, z, imax);
      emit_report(c.report, j);
      print_matrix(c.matrix, r, j);
    } else if (id == "prop-5-6") {
      const RingBlock* rb = pf_.find_ring(t.need("ring"));
      SYZ_CHECK(rb && rb->is_fibre, "'construct prop-5-6' needs a fibre product ring");
      RingPtr<F> r1 = ring(rb->left, dmax);
      RingPtr<F> r2 = ring(rb->right, dmax);
      Construction<F> c = construct_prop_5_6(r1, r2, imax);
      emit_report(c.report, j);
      print_matrix(c.matrix, r1, j);
    } else {
      fail("unknown construct target '" + id + "' (one of: prop-5-1, prop-5-6)");
    }
  }
};

}  // namespace

int run_problem(const ProblemFile& pf, const RunOptions& opt, std::ostream& out,
                std::ostream& err) {
  try {
    SYZ_CHECK(opt.imax >= 1, "imax must be at least 1");
    SYZ_CHECK(opt.dmax >= 1, "dmax must be at least 1");
    nlohmann::ordered_json exp;
    if (opt.rational) {
      exp = Runner<RatField>(pf, opt, out).run_all();
    } else {
      SYZ_CHECK(opt.characteristic >= 2 && opt.characteristic < (1LL << 31) &&
                    is_prime(opt.characteristic),
                "characteristic must be a prime below 2^31");
      exp = Runner<GfpField>(pf, opt, out).run_all();
    }
    if (!opt.export_path.empty()) {
      std::ofstream f(opt.export_path);
      if (!f) fail("cannot write export file '" + opt.export_path + "'");
      f << exp.dump(2) << "\n";
    }
    return 0;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
}

}  // namespace syz
