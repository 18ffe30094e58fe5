#pragma once

// Command dispatch for the froblab binary. Kept in a header so the tests can
// drive it in-process.

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "froblab/cover.hpp"
#include "froblab/fsing.hpp"
#include "froblab/ideal.hpp"
#include "froblab/quotient.hpp"
#include "froblab/ringspec.hpp"

namespace froblab::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

inline const std::vector<std::string> kCommands = {
    "gb", "dim", "member", "minors", "fpure", "fclosure", "cover-check", "pipeline", "normalize",
};

struct Options {
  std::string command;
  std::string file;
  std::optional<unsigned> emax;
  std::optional<std::string> f;
  std::optional<std::string> sop;
  std::optional<std::string> poly;
  std::uint64_t seed = 1;
  bool text = false;
  bool timing = false;
  bool search_sop = false;
};

enum Exit : int { kConsistent = 0, kError = 1, kCounterexample = 2 };

struct Outcome {
  json result;
  int exit = kConsistent;
  std::string status;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::FileError, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline json strings(const std::vector<Polynomial>& v) {
  json out = json::array();
  for (const auto& g : v) out.push_back(g.to_string());
  return out;
}

inline json names(const RingHandle& r) {
  json out = json::array();
  for (std::size_t i = 0; i < r->nvars(); ++i) out.push_back(r->name(i));
  return out;
}

inline std::string order_name(const RingHandle& r) {
  return r->order().kind() == MonomialOrder::Kind::Lex ? "lex" : "grevlex";
}

inline json presentation_json(const QuotientPresentation& q) {
  return json{{"p", q.characteristic()},
              {"vars", names(q.ring())},
              {"relations", strings(q.defining().generators())}};
}

/// Everything a command needs from the file plus command-line overrides.
struct Session {
  LoadedSpec spec;
  Options opts;

  QuotientPresentation base() const { return QuotientPresentation(spec.defining()); }

  Polynomial poly_flag(const std::string& text) const { return parse(text, spec.ring); }

  Polynomial twist() const {
    if (opts.f) return poly_flag(*opts.f);
    if (spec.f) return *spec.f;
    return Polynomial::constant(spec.ring, 1);
  }

  unsigned e_max() const { return opts.emax ? *opts.emax : spec.e_max.value_or(2); }

  const Ideal& canonical() const {
    if (!spec.canonical_ideal) {
      throw Error(ErrorCode::MissingField, "this command needs 'canonical_ideal' in the ring spec");
    }
    return *spec.canonical_ideal;
  }

  std::optional<std::vector<Polynomial>> explicit_sop() const {
    if (opts.sop) {
      std::vector<Polynomial> out;
      std::stringstream ss(*opts.sop);
      std::string item;
      while (std::getline(ss, item, ',')) out.push_back(poly_flag(item));
      return out;
    }
    return spec.sop;
  }

  /// The parameters and where they came from.
  std::pair<std::vector<Polynomial>, json> sop(const CoverContext& ctx) const {
    if (!opts.search_sop) {
      if (auto s = explicit_sop()) return {*s, opts.sop ? "flag" : "file"};
    }
    auto found = find_parameters(ctx, opts.seed);
    return {found, json{{"search_seed", opts.seed}}};
  }
};

inline json fedder_json(const FedderResult& r) {
  json out{{"method", "fedder"}, {"f_pure", r.f_pure}};
  out["witness"] = r.witness ? json(r.witness->to_string()) : json(nullptr);
  return out;
}

inline json criterion_json(const CriterionReport& r, const Polynomial& twist,
                           const std::vector<Polynomial>& sop, const json& sop_source) {
  json out;
  out["verdict"] = std::string(to_string(r.verdict));
  if (r.verdict == CriterionVerdict::P2Degenerate) {
    out["e_max"] = nullptr;
  } else {
    out["e_max"] = r.e_max;
  }
  if (r.witness_e) {
    json w{{"e", *r.witness_e}};
    w["holds_at_next"] = r.witness_holds_at_next ? json(*r.witness_holds_at_next) : json(nullptr);
    out["witness"] = w;
  } else {
    out["witness"] = nullptr;
  }
  switch (r.verdict) {
    case CriterionVerdict::DecisiveNotFInjective:
      out["evidence"] = "decisive: S(f) is not F-injective";
      break;
    case CriterionVerdict::NoFailureUpTo:
      out["evidence"] = "bounded: no membership for q = p, ..., p^e_max; larger q untested";
      break;
    case CriterionVerdict::P2Degenerate:
      out["evidence"] = "decisive: in characteristic 2, S(f) is never F-injective";
      break;
  }
  out["twist"] = twist.to_string();
  out["sop"] = strings(sop);
  out["sop_source"] = sop_source;
  json checks = json::object();
  for (const auto& c : r.checks) checks[c.name] = c.passed;
  out["checks"] = checks;
  if (r.lift) {
    out["socle_lift"] = json{{"x", r.lift->x.to_string()},
                             {"tail", strings(r.lift->tail)},
                             {"z", r.lift->z.to_string()},
                             {"u", r.lift->u.to_string()}};
  }
  out["assumptions"] = r.assumptions;
  return out;
}

inline json closure_json(const ClosureReport& r, const std::vector<Polynomial>& params) {
  json out;
  out["verdict"] = r.decisive() ? "NOT_FROBENIUS_CLOSED" : "CLOSED_UP_TO";
  out["e_max"] = r.e_max;
  out["parameters"] = strings(params);
  out["parameters_regular"] = r.parameters_regular;
  out["socle_basis"] = strings(r.socle_basis);
  out["candidates"] = r.candidates;
  out["partial"] = r.partial;
  if (r.witness) {
    json w{{"element", r.witness->element.to_string()}, {"e", r.witness->e}};
    w["holds_at_next"] = r.witness->holds_at_next ? json(*r.witness->holds_at_next) : json(nullptr);
    out["witness"] = w;
  } else {
    out["witness"] = nullptr;
  }
  out["evidence"] = r.decisive()
                        ? "decisive: the ideal is not Frobenius closed"
                        : (r.partial ? "bounded and partial: socle basis vectors only, up to e_max"
                                     : "bounded: every socle element tested up to e_max");
  return out;
}

inline Outcome cmd_gb(const Session& s) {
  auto gb = s.spec.defining().gb();
  return {json{{"order", order_name(s.spec.ring)}, {"size", gb.size()}, {"basis", strings(gb.polys())}},
          kConsistent, "OK"};
}

inline Outcome cmd_dim(const Session& s) {
  return {json{{"krull_dimension", krull_dimension(s.spec.defining())}}, kConsistent, "OK"};
}

inline Outcome cmd_member(const Session& s) {
  if (!s.opts.poly) throw Error(ErrorCode::MissingField, "member needs --poly");
  Polynomial g = s.poly_flag(*s.opts.poly);
  Ideal a = s.spec.defining();
  Polynomial nf = a.normal_form(g);
  return {json{{"poly", g.to_string()}, {"member", nf.is_zero()}, {"normal_form", nf.to_string()}},
          kConsistent, "OK"};
}

inline Outcome cmd_minors(const Session& s) {
  if (!s.spec.matrix) throw Error(ErrorCode::MissingField, "minors needs 'matrix' in the ring spec");
  json rows = json::array();
  for (const auto& row : *s.spec.matrix) rows.push_back(strings(row));
  json minors = json::array();
  for (const auto& m : two_by_two_minors(*s.spec.matrix)) {
    minors.push_back(json{{"columns", {m.i + 1, m.j + 1}}, {"minor", m.value.to_string()}});
  }
  return {json{{"matrix", rows}, {"count", minors.size()}, {"minors", minors}}, kConsistent, "OK"};
}

inline json reduced_json(const ReducedQuotient& rq) {
  return json{{"dropped_vars", rq.dropped}, {"presentation", presentation_json(rq.presentation)}};
}

inline Outcome cmd_fpure(const Session& s) {
  auto base = s.base();
  json out;
  auto r = fedder_test(base);
  out["R"] = fedder_json(r);
  if (s.spec.canonical_ideal) {
    auto rq = reduced_quotient(base, *s.spec.canonical_ideal);
    json q = reduced_json(rq);
    q.update(fedder_json(fedder_test(rq.presentation)));
    out["R_mod_I"] = q;
  }
  return {out, kConsistent, r.f_pure ? "F_PURE" : "NOT_F_PURE"};
}

inline Outcome cmd_fclosure(const Session& s) {
  auto base = s.base();
  auto params = s.explicit_sop();
  if (!params) throw Error(ErrorCode::MissingField, "fclosure needs 'sop' or --sop");
  auto report = frobenius_closure_test(base, Ideal(s.spec.ring, *params), s.e_max());
  return {closure_json(report, *params), report.decisive() ? kCounterexample : kConsistent,
          report.decisive() ? "COUNTEREXAMPLE" : "CONSISTENT"};
}

inline Outcome cmd_cover_check(const Session& s) {
  CoverContext ctx(s.base(), s.canonical(), s.twist());
  auto [sop, source] = s.sop(ctx);
  if (ctx.characteristic() == 2) {
    auto report = p2_degeneracy_check(ctx, sop);
    return {criterion_json(report, ctx.twist(), sop, source), kConsistent, "P2_DEGENERATE"};
  }
  auto report = cover_injectivity_criterion(ctx, sop, s.e_max());
  bool bad = report.decisive();
  return {criterion_json(report, ctx.twist(), sop, source), bad ? kCounterexample : kConsistent,
          bad ? "COUNTEREXAMPLE" : "CONSISTENT"};
}

inline Outcome cmd_pipeline(const Session& s) {
  CoverContext ctx(s.base(), s.canonical(), s.twist());
  auto [sop, source] = s.sop(ctx);
  auto report = run_pipeline(ctx, sop, s.e_max());
  json out;
  json fedder{{"R", fedder_json(report.base_fedder)}};
  if (report.canonical_quotient) {
    json q = reduced_json(*report.canonical_quotient);
    q.update(fedder_json(*report.canonical_quotient_fedder));
    fedder["R_mod_I"] = q;
  }
  out["fedder"] = fedder;
  out["criterion"] = report.criterion
                         ? criterion_json(*report.criterion, ctx.twist(), sop, source)
                         : json(nullptr);
  std::vector<Polynomial> tail(sop.begin() + 1, sop.end());
  out["closure_mod_I"] = report.closure ? closure_json(*report.closure, tail) : json(nullptr);
  json conclusion{{"text", report.conclusion}};
  if (report.status == PipelineStatus::Consistent) {
    conclusion["basis"] =
        "implied by the finiteness theorem once its hypotheses verify; not computed directly";
    conclusion["evidence"] = "bounded: cover criterion and closure tested up to e_max = " +
                             std::to_string(s.e_max());
  }
  out["conclusion"] = conclusion;
  out["assumptions"] = report.assumptions;
  return {out, report.status == PipelineStatus::Counterexample ? kCounterexample : kConsistent,
          std::string(to_string(report.status))};
}

inline json input_json(const Session& s) {
  json in{{"file", std::filesystem::path(s.opts.file).filename().string()},
          {"p", s.spec.ring->characteristic()},
          {"vars", names(s.spec.ring)},
          {"order", order_name(s.spec.ring)},
          {"relations", strings(s.spec.relations)}};
  return in;
}

inline void render_text(const json& j, std::ostream& out, const std::string& indent) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << indent << key << ":\n";
      render_text(value, out, indent + "  ");
    } else if (value.is_array() &&
               std::any_of(value.begin(), value.end(), [](const json& e) { return e.is_object(); })) {
      out << indent << key << ":\n";
      for (const auto& e : value) {
        out << indent << "  -\n";
        render_text(e, out, indent + "    ");
      }
    } else if (value.is_string()) {
      out << indent << key << ": " << value.get<std::string>() << "\n";
    } else {
      out << indent << key << ": " << value.dump() << "\n";
    }
  }
}

inline void emit(const json& j, const Options& opts, std::ostream& out) {
  if (opts.text) {
    render_text(j, out, "");
  } else {
    out << j.dump(2) << "\n";
  }
}

/// Runs one command; args exclude the program name. Returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"froblab: Groebner bases and F-singularity checks over F_p", "froblab"};
  app.add_option("command", opts.command, "command to run")
      ->required()
      ->check(CLI::IsMember(kCommands));
  app.add_option("file", opts.file, "ring-spec file")->required();
  app.add_option("--emax", opts.emax, "largest Frobenius exponent tested");
  app.add_option("--f", opts.f, "twisting element f (default: file, else 1)");
  app.add_option("--poly", opts.poly, "polynomial for 'member'");
  auto* sop_opt = app.add_option("--sop", opts.sop, "comma-separated system of parameters");
  app.add_flag("--search-sop", opts.search_sop, "ignore the file's sop and search for one")
      ->excludes(sop_opt);
  app.add_option("--seed", opts.seed, "seed for the parameter search");
  auto* json_flag = app.add_flag("--json", "JSON output (default)");
  app.add_flag("--text", opts.text, "plain text output")->excludes(json_flag);
  app.add_flag("--timing", opts.timing, "add wall-clock time to the report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kConsistent;
  } catch (const CLI::ParseError& e) {
    json report{{"tool", "froblab"},
                {"schema_version", kSchemaVersion},
                {"command", opts.command.empty() ? json(nullptr) : json(opts.command)},
                {"error", {{"code", "UsageError"}, {"message", e.what()}}},
                {"exit_code", kError}};
    err << report.dump(2) << "\n";
    return kError;
  }

  json report{{"tool", "froblab"}, {"schema_version", kSchemaVersion}, {"command", opts.command}};
  auto started = std::chrono::steady_clock::now();
  try {
    std::string text = read_file(opts.file);
    Session session{load_ring_spec(text), opts};
    if (opts.command == "normalize") {
      out << emit_ring_spec(session.spec);
      return kConsistent;
    }
    report["input"] = input_json(session);
    Outcome outcome;
    if (opts.command == "gb") outcome = cmd_gb(session);
    else if (opts.command == "dim") outcome = cmd_dim(session);
    else if (opts.command == "member") outcome = cmd_member(session);
    else if (opts.command == "minors") outcome = cmd_minors(session);
    else if (opts.command == "fpure") outcome = cmd_fpure(session);
    else if (opts.command == "fclosure") outcome = cmd_fclosure(session);
    else if (opts.command == "cover-check") outcome = cmd_cover_check(session);
    else outcome = cmd_pipeline(session);
    report["status"] = outcome.status;
    report["result"] = outcome.result;
    report["exit_code"] = outcome.exit;
    if (opts.timing) {
      auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);
      report["timing_ms"] = ms.count();
    }
    emit(report, opts, out);
    return outcome.exit;
  } catch (const Error& e) {
    json error{{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    if (e.offset()) error["offset"] = *e.offset();
    report["error"] = error;
    report["exit_code"] = kError;
    emit(report, opts, err);
    return kError;
  } catch (const std::exception& e) {
    report["error"] = json{{"code", "InternalError"}, {"message", e.what()}};
    report["exit_code"] = kError;
    emit(report, opts, err);
    return kError;
  }
}

}  // namespace froblab::cli
