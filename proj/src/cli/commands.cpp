#include "assocform/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "assocform/apolarity.hpp"
#include "assocform/artinian.hpp"
#include "assocform/checks.hpp"
#include "assocform/errors.hpp"
#include "assocform/geometry.hpp"
#include "assocform/parse.hpp"
#include "assocform/sampling.hpp"
#include "assocform/stability.hpp"
#include "json.hpp"

namespace assocform::cli {

namespace {

using nlohmann::ordered_json;

constexpr const char* kSchema = "assocform/1";

struct Options {
  int n = 0;
  std::string output = "text";
  bool json() const { return output == "json"; }
};

std::vector<std::string> payload_lines(std::vector<std::string> positional,
                                       std::istream& in) {
  if (!positional.empty()) return positional;
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) lines.push_back(line);
  }
  return lines;
}

std::string one_payload(const std::vector<std::string>& positional, std::istream& in) {
  const std::vector<std::string> lines = payload_lines(positional, in);
  if (lines.empty()) throw ParseError("no input form given");
  if (lines.size() > 1) throw ParseError("expected exactly one form");
  return lines.front();
}

std::vector<HomogeneousForm> parse_many(const std::vector<std::string>& texts, int n,
                                        std::optional<Ring> ring) {
  if (texts.empty()) throw ParseError("no input forms given");
  std::vector<HomogeneousForm> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) out.push_back(parse_form(t, n, ring));
  return out;
}

std::vector<Rat> parse_rational_list(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(rat_from_string(item));
  if (out.empty()) throw ParseError("empty rational list '" + text + "'");
  return out;
}

OneParamSubgroup parse_lambda(const std::string& text) {
  std::vector<long long> weights;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const long long value = std::stoll(item, &used);
      if (used != item.size()) throw ParseError("malformed weight '" + item + "'");
      weights.push_back(value);
    } catch (const std::logic_error&) {
      throw ParseError("malformed weight '" + item + "'");
    }
  }
  if (weights.empty()) throw ParseError("empty weight vector");
  return OneParamSubgroup(std::move(weights));
}

std::vector<ProjectivePoint> parse_points(const std::string& text) {
  std::vector<ProjectivePoint> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';'))
    if (!item.empty()) out.emplace_back(parse_rational_list(item));
  if (out.empty()) throw ParseError("empty point list");
  return out;
}

ordered_json forms_json(const std::vector<HomogeneousForm>& forms) {
  ordered_json arr = ordered_json::array();
  for (const HomogeneousForm& f : forms) arr.push_back(format_form(f));
  return arr;
}

void emit(const Options& opt, std::ostream& out, const ordered_json& payload,
          const std::string& text) {
  if (opt.json()) {
    ordered_json doc;
    doc["schema"] = kSchema;
    for (const auto& [key, value] : payload.items()) doc[key] = value;
    out << doc.dump() << '\n';
  } else {
    out << text;
  }
}

std::string bool_text(bool value) { return value ? "true" : "false"; }

std::uint64_t resolve_seed(bool seed_given, std::uint64_t seed_flag) {
  if (seed_given) return seed_flag;
  if (const char* env = std::getenv("ASSOCFORM_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError("malformed ASSOCFORM_SEED value");
    }
  }
  return kDefaultSeed;
}

int dispatch(const std::vector<std::string>& args, std::istream& in,
             std::ostream& out, std::ostream& err_stream) {
  CLI::App app{"exact computations with associated forms of balanced complete "
               "intersections"};
  app.require_subcommand(1);

  Options opt;
  std::vector<std::string> forms_arg;
  std::string lambda_arg;
  std::string point_arg;
  std::string points_arg;
  std::string example_kind;
  std::string suite_name;
  std::string tail_arg;
  int p_order = 1;
  int t_max = -1;
  int d_param = 0;
  int m_param = 0;
  int k_param = 0;
  bool partials_mode = false;
  bool subspace_mode = false;
  std::uint64_t seed_flag = kDefaultSeed;
  bool seed_given = false;

  auto add_common = [&](CLI::App* cmd, bool needs_n) {
    if (needs_n) cmd->add_option("--n", opt.n, "number of variables")->required();
    cmd->add_option("--output", opt.output, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* assoc = app.add_subcommand("assoc", "associated form of a hypersurface");
  add_common(assoc, true);
  assoc->add_option("form", forms_arg, "form in x-variables (stdin if omitted)");

  CLI::App* assoc_seq =
      app.add_subcommand("assoc-seq", "associated form of a regular sequence");
  add_common(assoc_seq, true);
  assoc_seq->add_option("forms", forms_arg, "generator forms (stdin if omitted)");

  CLI::App* agr_cmd =
      app.add_subcommand("agr", "annihilator span at the subcritical degree");
  add_common(agr_cmd, true);
  agr_cmd->add_flag("--partials", partials_mode,
                    "span the partial derivatives of a single input form");
  agr_cmd->add_option("forms", forms_arg, "spanning forms (stdin if omitted)");

  CLI::App* hilb = app.add_subcommand("hilb", "Hilbert function of a quotient");
  add_common(hilb, true);
  hilb->add_option("--tmax", t_max, "top degree")->required();
  hilb->add_option("forms", forms_arg, "generator forms (stdin if omitted)");

  CLI::App* gradient = app.add_subcommand("gradient", "gradient point of a dual form");
  add_common(gradient, true);
  gradient->add_option("--p", p_order, "derivative order")->required();
  gradient->add_option("form", forms_arg, "form in z-variables (stdin if omitted)");

  CLI::App* dual_check = app.add_subcommand(
      "dual-check", "verify gradient/Hilbert duality for a regular sequence");
  add_common(dual_check, true);
  dual_check->add_option("--p", p_order, "derivative order")->required();
  dual_check->add_option("forms", forms_arg, "generator forms (stdin if omitted)");

  CLI::App* ds = app.add_subcommand("ds-detect", "direct-sum detection");
  add_common(ds, true);
  ds->add_option("form", forms_arg, "form in x-variables (stdin if omitted)");

  CLI::App* stab = app.add_subcommand("stab", "torus semistability");
  add_common(stab, true);
  stab->add_option("form", forms_arg, "form in x-variables (stdin if omitted)");

  CLI::App* limit = app.add_subcommand("limit", "one-parameter weights and limits");
  add_common(limit, true);
  limit->add_option("--lambda", lambda_arg, "integer weights, e.g. 1,-1,0")->required();
  limit->add_flag("--subspace", subspace_mode, "treat the forms as a spanning set");
  limit->add_option("forms", forms_arg, "input forms (stdin if omitted)");

  CLI::App* mult = app.add_subcommand("mult", "multiplicity at a point");
  add_common(mult, true);
  mult->add_option("--point", point_arg, "rational point, e.g. 1,0")->required();
  mult->add_option("form", forms_arg, "form (stdin if omitted)");

  CLI::App* zk = app.add_subcommand("zk-verify", "verify a reduced point base locus");
  add_common(zk, true);
  zk->add_option("--points", points_arg, "semicolon-separated points")->required();
  zk->add_option("forms", forms_arg, "spanning forms (stdin if omitted)");

  CLI::App* smooth = app.add_subcommand("smooth", "smoothness of a hypersurface");
  add_common(smooth, true);
  smooth->add_option("form", forms_arg, "form (stdin if omitted)");

  CLI::App* example = app.add_subcommand("example", "built-in example forms");
  example->add_option("kind", example_kind, "fermat | partial-fermat | nodal")
      ->required();
  add_common(example, true);
  example->add_option("--d", d_param, "degree parameter d");
  example->add_option("--m", m_param, "form degree m");
  example->add_option("--k", k_param, "number of clean powers");
  example->add_option("--g", tail_arg, "tail form for partial-fermat");

  CLI::App* suite = app.add_subcommand("suite", "run a verification suite");
  suite->add_option("name", suite_name, "acceptance | properties")
      ->required()
      ->check(CLI::IsMember({"acceptance", "properties"}));
  suite->add_option("--seed", seed_flag, "seed for randomized checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  }
  seed_given = suite->count("--seed") > 0;

  if (assoc->parsed()) {
    const HomogeneousForm f = parse_form(one_payload(forms_arg, in), opt.n, Ring::S);
    const HomogeneousForm result = associated_form(f);
    ordered_json payload;
    payload["associated_form"] = format_form(result);
    payload["normalized"] = true;
    payload["socle_degree"] = result.degree();
    emit(opt, out, payload, format_form(result) + "\n");
    return 0;
  }

  if (assoc_seq->parsed()) {
    const auto gens = parse_many(payload_lines(forms_arg, in), opt.n, Ring::S);
    const HomogeneousForm result = associated_form_of_sequence(gens);
    ordered_json payload;
    payload["associated_form"] = format_form(result);
    payload["normalized"] = true;
    payload["socle_degree"] = result.degree();
    emit(opt, out, payload, format_form(result) + "\n");
    return 0;
  }

  if (agr_cmd->parsed()) {
    std::vector<HomogeneousForm> spanners;
    if (partials_mode) {
      const HomogeneousForm f = parse_form(one_payload(forms_arg, in), opt.n, Ring::S);
      spanners = partials(f);
    } else {
      spanners = parse_many(payload_lines(forms_arg, in), opt.n, Ring::S);
    }
    if (spanners.empty()) throw ParseError("no spanning forms");
    const int d = spanners.front().degree();
    const GradedSubspace u = GradedSubspace::span(Ring::S, opt.n, d, spanners);
    const GradedSubspace image = agr(u);
    ordered_json payload;
    payload["degree"] = image.degree();
    payload["basis"] = forms_json(image.basis_forms());
    std::string text;
    for (const HomogeneousForm& f : image.basis_forms()) text += format_form(f) + "\n";
    emit(opt, out, payload, text);
    return 0;
  }

  if (hilb->parsed()) {
    const auto gens = parse_many(payload_lines(forms_arg, in), opt.n, Ring::S);
    if (t_max < 0) throw ParseError("--tmax must be nonnegative");
    const std::vector<int> h = hilbert_function(gens, t_max, opt.n);
    ordered_json payload;
    payload["hilbert_function"] = h;
    std::string text;
    for (std::size_t i = 0; i < h.size(); ++i)
      text += (i ? " " : "") + std::to_string(h[i]);
    emit(opt, out, payload, text + "\n");
    return 0;
  }

  if (gradient->parsed()) {
    const HomogeneousForm f = parse_form(one_payload(forms_arg, in), opt.n, Ring::D);
    const GradedSubspace g = gradient_point(f, p_order);
    ordered_json payload;
    payload["degree"] = g.degree();
    payload["dim"] = g.dim();
    payload["basis"] = forms_json(g.basis_forms());
    std::string text;
    for (const HomogeneousForm& b : g.basis_forms()) text += format_form(b) + "\n";
    emit(opt, out, payload, text);
    return 0;
  }

  if (dual_check->parsed()) {
    const auto gens = parse_many(payload_lines(forms_arg, in), opt.n, Ring::S);
    const HomogeneousForm inverse = associated_form_of_sequence(gens);
    const int socle = inverse.degree();
    if (p_order < 0 || p_order > socle) throw ParseError("--p out of range");
    const GradedSubspace lhs = perp(gradient_point(inverse, p_order));
    const GradedSubspace rhs = hilbert_point(gens, socle - p_order, opt.n);
    const bool holds = lhs == rhs;
    ordered_json payload;
    payload["holds"] = holds;
    payload["socle_degree"] = socle;
    payload["p"] = p_order;
    payload["dim"] = lhs.dim();
    emit(opt, out, payload, bool_text(holds) + "\n");
    return 0;
  }

  if (ds->parsed()) {
    const HomogeneousForm f = parse_form(one_payload(forms_arg, in), opt.n, Ring::S);
    const DirectSumReport report = ds_kernel(f);
    ordered_json payload;
    payload["kernel_dim"] = report.k;
    payload["is_direct_sum"] = report.is_direct_sum;
    payload["torus_dim"] = report.torus_dim;
    payload["kernel_basis"] = forms_json(report.kernel.basis_forms());
    std::string text = "kernel_dim: " + std::to_string(report.k) + "\n" +
                       "is_direct_sum: " + bool_text(report.is_direct_sum) + "\n" +
                       "torus_dim: " + std::to_string(report.torus_dim) + "\n";
    for (const HomogeneousForm& b : report.kernel.basis_forms())
      text += format_form(b) + "\n";
    emit(opt, out, payload, text);
    return 0;
  }

  if (stab->parsed()) {
    const HomogeneousForm f = parse_form(one_payload(forms_arg, in), opt.n, Ring::S);
    const bool semistable = torus_semistable(f);
    ordered_json payload;
    payload["semistable"] = semistable;
    emit(opt, out, payload, bool_text(semistable) + "\n");
    return 0;
  }

  if (limit->parsed()) {
    const OneParamSubgroup lambda = parse_lambda(lambda_arg);
    if (lambda.var_count() != opt.n) throw ParseError("--lambda length must equal --n");
    const std::vector<std::string> lines = payload_lines(forms_arg, in);
    if (subspace_mode) {
      auto spanners = parse_many(lines, opt.n, std::nullopt);
      const GradedSubspace u =
          GradedSubspace::span(spanners.front().ring(), opt.n,
                               spanners.front().degree(), spanners);
      const GradedSubspace l = limit_subspace(u, lambda);
      ordered_json payload;
      payload["dim"] = l.dim();
      payload["basis"] = forms_json(l.basis_forms());
      std::string text;
      for (const HomogeneousForm& b : l.basis_forms()) text += format_form(b) + "\n";
      emit(opt, out, payload, text);
      return 0;
    }
    if (lines.size() != 1) throw ParseError("expected exactly one form");
    const HomogeneousForm f = parse_form(lines.front(), opt.n);
    const WeightInit wi = weight_and_initial_part(f, lambda);
    const auto lim = lambda_limit(f, lambda);
    ordered_json payload;
    payload["weight"] = wi.weight;
    payload["init"] = format_form(wi.initial_part);
    if (lim)
      payload["limit"] = format_form(*lim);
    else
      payload["limit"] = nullptr;
    std::string text = "weight: " + std::to_string(wi.weight) + "\n" +
                       "init: " + format_form(wi.initial_part) + "\n" +
                       "limit: " + (lim ? format_form(*lim) : "none") + "\n";
    emit(opt, out, payload, text);
    return 0;
  }

  if (mult->parsed()) {
    const HomogeneousForm f = parse_form(one_payload(forms_arg, in), opt.n);
    const ProjectivePoint p(parse_rational_list(point_arg));
    const int m = multiplicity_at(f, p);
    const bool node = is_ordinary_double_point(f, p);
    ordered_json payload;
    payload["multiplicity"] = m;
    payload["ordinary_double_point"] = node;
    emit(opt, out, payload,
         "multiplicity: " + std::to_string(m) + "\n" +
             "ordinary_double_point: " + bool_text(node) + "\n");
    return 0;
  }

  if (zk->parsed()) {
    const auto gens = parse_many(payload_lines(forms_arg, in), opt.n, Ring::S);
    if (gens.empty()) throw ParseError("no spanning forms");
    const GradedSubspace u =
        GradedSubspace::span(Ring::S, opt.n, gens.front().degree(), gens);
    const std::vector<ProjectivePoint> points = parse_points(points_arg);
    const ZkCertificate cert = verify_base_locus_points(u, points);
    ordered_json payload;
    payload["verified"] = cert.verified;
    payload["status"] = cert.status();
    ordered_json checks = ordered_json::array();
    for (const auto& [name, ok] : cert.checks) {
      ordered_json entry;
      entry["name"] = name;
      entry["pass"] = ok;
      checks.push_back(entry);
    }
    payload["checks"] = checks;
    std::string text = "verified: " + bool_text(cert.verified) + "\n" +
                       "status: " + cert.status() + "\n";
    for (const auto& [name, ok] : cert.checks)
      text += name + ": " + bool_text(ok) + "\n";
    emit(opt, out, payload, text);
    return 0;
  }

  if (smooth->parsed()) {
    const HomogeneousForm f = parse_form(one_payload(forms_arg, in), opt.n, Ring::S);
    const bool result = is_smooth(f);
    ordered_json payload;
    payload["smooth"] = result;
    emit(opt, out, payload, bool_text(result) + "\n");
    return 0;
  }

  if (example->parsed()) {
    HomogeneousForm f(Ring::S, opt.n > 0 ? opt.n : 1, 0);
    if (example_kind == "fermat") {
      if (m_param < 1) throw ParseError("fermat needs --m >= 1");
      f = fermat_form(opt.n, m_param);
    } else if (example_kind == "nodal") {
      if (d_param < 2) throw ParseError("nodal needs --d >= 2");
      f = nodal_example(opt.n, d_param);
    } else if (example_kind == "partial-fermat") {
      if (m_param < 1) throw ParseError("partial-fermat needs --m >= 1");
      const HomogeneousForm tail =
          tail_arg.empty() ? HomogeneousForm(Ring::S, opt.n, m_param)
                           : parse_form(tail_arg, opt.n, Ring::S);
      f = partial_fermat_form(k_param, m_param, tail);
    } else {
      throw ParseError("unknown example kind '" + example_kind + "'");
    }
    ordered_json payload;
    payload["form"] = format_form(f);
    payload["n"] = opt.n;
    payload["degree"] = f.degree();
    emit(opt, out, payload, format_form(f) + "\n");
    return 0;
  }

  if (suite->parsed()) {
    const std::uint64_t seed = resolve_seed(seed_given, seed_flag);
    const checks::CliRunner runner = [](const std::vector<std::string>& inner_args,
                                        std::istream& inner_in, std::ostream& inner_out,
                                        std::ostream& inner_err) {
      return run(inner_args, inner_in, inner_out, inner_err);
    };
    const auto results = suite_name == "acceptance"
                             ? checks::run_acceptance(seed, runner)
                             : checks::run_properties(seed, runner);
    const bool ok = checks::print_report(results, out, err_stream);
    return ok ? 0 : 1;
  }

  throw ParseError("no command given");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  try {
    return dispatch(args, in, out, err);
  } catch (const CLI::ParseError& e) {
    ordered_json doc;
    doc["schema"] = kSchema;
    doc["error"] = {{"code", "usage_error"}, {"message", e.what()}};
    err << doc.dump() << '\n';
    return 1;
  } catch (const ParseError& e) {
    ordered_json doc;
    doc["schema"] = kSchema;
    doc["error"] = {{"code", e.code()}, {"message", e.what()}};
    err << doc.dump() << '\n';
    return 1;
  } catch (const StructuralError& e) {
    ordered_json doc;
    doc["schema"] = kSchema;
    doc["error"] = {{"code", e.code()}, {"message", e.what()}};
    err << doc.dump() << '\n';
    return 1;
  } catch (const DomainError& e) {
    ordered_json doc;
    doc["schema"] = kSchema;
    doc["error"] = {{"code", e.code()}, {"message", e.what()}};
    err << doc.dump() << '\n';
    return 2;
  } catch (const std::exception& e) {
    ordered_json doc;
    doc["schema"] = kSchema;
    doc["error"] = {{"code", "internal_error"}, {"message", e.what()}};
    err << doc.dump() << '\n';
    return 70;
  }
}

}  // namespace assocform::cli
