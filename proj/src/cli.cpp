#include "arthur/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "arthur/branching.hpp"
#include "arthur/core.hpp"
#include "arthur/dsl.hpp"
#include "arthur/json_io.hpp"
#include "arthur/relevance.hpp"
#include "arthur/segment.hpp"

namespace arthur::cli {

namespace {

using json_io::Json;

// Parse failures are reported where they happen; this unwinds to run().
struct ReportedUsageError {};

struct Request {
  std::string expr1;
  std::string expr2;
  std::string kind;
  std::string side;
  std::string segment;
  std::int64_t l = 0;
  std::string decider = "matcher";
  bool json = false;
  bool quiet = false;
};

class Session {
public:
  Session(const Request& req, std::ostream& out, std::ostream& err)
      : req_(req), out_(out), err_(err) {}

  int dispatch(const std::string& command) {
    if (command == "parse") return cmd_parse();
    if (command == "dual") return cmd_dual();
    if (command == "minus") return cmd_minus();
    if (command == "csupp") return cmd_csupp();
    if (command == "jacquet") return cmd_jacquet();
    if (command == "relevant") return cmd_relevant("relevant", false);
    if (command == "strong") return cmd_relevant("strong", true);
    if (command == "matchings") return cmd_matchings();
    if (command == "hom") return cmd_hom();
    if (command == "ext") return cmd_ext();
    if (command == "samegroup") return cmd_samegroup();
    if (command == "ep") return cmd_ep();
    err_ << "error: unknown subcommand " << command << "\n";
    return kUsage;
  }

  // Everything written here reaches stdout only without --quiet.
  std::ostringstream text;

private:
  template <class F>
  auto parse_arg(const std::string& input, const char* label, F&& parser) {
    try {
      return parser(input);
    } catch (const dsl::ParseError& e) {
      err_ << "error: " << label << ": " << e.render(input) << "\n";
      throw ReportedUsageError{};
    }
  }

  ArthurParameter param(const std::string& input, const char* label) {
    return parse_arg(input, label, [](const std::string& s) { return dsl::parse_param(s); });
  }

  void emit(const Json& j) { text << j.dump() << "\n"; }

  void write_matching(const Matching& m) {
    for (const auto& p : m.pairs)
      text << "  pair " << dsl::format(p.left) << " -> " << dsl::format(p.right) << " ["
           << family_name(p.family) << "]\n";
    for (const auto& s : m.dropped_left) text << "  drop-left " << dsl::format(s) << "\n";
    for (const auto& s : m.dropped_right) text << "  drop-right " << dsl::format(s) << "\n";
  }

  Json certificate_json(const std::optional<Matching>& m) {
    return m ? json_io::matching_to_json(*m) : Json(nullptr);
  }

  int verdict_code(bool v) const { return v ? kTrue : kFalse; }

  int cmd_parse() {
    const auto rep = parse_arg(req_.expr1, "EXPR", [](const std::string& s) { return dsl::parse_rep(s); });
    const auto canonical = dsl::format(rep);
    if (const auto* a = std::get_if<ArthurParameter>(&rep)) {
      if (req_.json) {
        Json j;
        j["canonical"] = canonical;
        j["dim"] = a->dim();
        j["terms"] = json_io::terms_to_json(a->terms());
        emit(j);
      } else {
        text << canonical << "\ndim " << a->dim() << "\n";
      }
    } else {
      const auto& r = std::get<SegmentRep>(rep);
      if (req_.json) {
        Json j;
        j["canonical"] = canonical;
        j["dim"] = r.degree();
        j["unitary"] = r.is_unitary();
        emit(j);
      } else {
        text << canonical << "\ndim " << r.degree() << "\n";
      }
    }
    return kTrue;
  }

  int cmd_dual() {
    const auto d = az_dual(param(req_.expr1, "EXPR"));
    if (req_.json) {
      Json j;
      j["canonical"] = dsl::format(d);
      j["terms"] = json_io::terms_to_json(d.terms());
      emit(j);
    } else {
      text << dsl::format(d) << "\n";
    }
    return kTrue;
  }

  int cmd_minus() {
    const auto m = speh_minus(param(req_.expr1, "EXPR"));
    if (req_.json) {
      Json j;
      j["canonical"] = dsl::format(m.result);
      j["terms"] = json_io::terms_to_json(m.result.terms());
      j["dropped"] = json_io::terms_to_json(m.dropped.terms());
      emit(j);
    } else {
      text << dsl::format(m.result) << "\n";
      text << "dropped " << (m.dropped.empty() ? "none" : dsl::format(m.dropped)) << "\n";
    }
    return kTrue;
  }

  int cmd_csupp() {
    const auto rep = parse_arg(req_.expr1, "EXPR", [](const std::string& s) { return dsl::parse_rep(s); });
    const CuspidalMultiset m = std::visit([](const auto& v) { return csupp(v); }, rep);
    if (req_.json) {
      Json entries = Json::array();
      for (const auto& [t, mult] : m.counts()) {
        Json e;
        e["rho"] = {{"id", t.symbol.id}, {"degree", t.symbol.degree}};
        e["exponent"] = dsl::format(t.exponent);
        e["multiplicity"] = mult;
        entries.push_back(std::move(e));
      }
      Json j;
      j["canonical"] = dsl::format(m);
      j["support"] = std::move(entries);
      emit(j);
    } else {
      text << dsl::format(m) << "\n";
    }
    return kTrue;
  }

  int cmd_jacquet() {
    const Segment seg =
        parse_arg(req_.segment, "SEGMENT", [](const std::string& s) { return dsl::parse_segment(s); });
    const SegmentKind kind = req_.kind == "Z" ? SegmentKind::Z : SegmentKind::Q;
    const JacquetSide side = req_.side == "std" ? JacquetSide::Standard : JacquetSide::Opposite;
    JacquetResult r;
    try {
      r = jacquet(kind, side, seg, req_.l);
    } catch (const std::out_of_range&) {
      err_ << "error: L must satisfy 0 < L < " << seg.degree() << "\n";
      return kUsage;
    }
    if (req_.json) {
      Json j;
      j["zero"] = !r.has_value();
      if (r) {
        j["left"] = dsl::format(r->first);
        j["right"] = dsl::format(r->second);
      }
      emit(j);
    } else if (r) {
      text << dsl::format(r->first) << " (x) " << dsl::format(r->second) << "\n";
    } else {
      text << "0\n";
    }
    return kTrue;
  }

  int report_verdict(const char* name, bool v, const std::optional<Matching>& cert,
                     const char* decider = nullptr) {
    if (req_.json) {
      Json j;
      j["command"] = name;
      j["verdict"] = v;
      if (decider) j["decider"] = decider;
      j["certificate"] = certificate_json(cert);
      emit(j);
    } else {
      text << name << ": " << (v ? "true" : "false") << "\n";
      if (decider) text << "decider: " << decider << "\n";
      if (cert) write_matching(*cert);
    }
    return verdict_code(v);
  }

  int cmd_relevant(const char* name, bool strong) {
    const auto a1 = param(req_.expr1, "EXPR1");
    const auto a2 = param(req_.expr2, "EXPR2");
    auto m = strong ? find_strong_matching(a1, a2) : find_ggp_matching(a1, a2);
    return report_verdict(name, m.has_value(), m);
  }

  int cmd_matchings() {
    const auto a1 = param(req_.expr1, "EXPR1");
    const auto a2 = param(req_.expr2, "EXPR2");
    const auto all = enumerate_strong_matchings(a1, a2);
    if (req_.json) {
      Json list = Json::array();
      for (const auto& m : all) list.push_back(json_io::matching_to_json(m));
      Json j;
      j["count"] = all.size();
      j["matchings"] = std::move(list);
      emit(j);
    } else {
      text << "matchings: " << all.size() << "\n";
      for (std::size_t i = 0; i < all.size(); ++i) {
        text << "#" << (i + 1) << "\n";
        write_matching(all[i]);
      }
    }
    return verdict_code(!all.empty());
  }

  int cmd_hom() {
    const auto v = hom_branch_arthur(param(req_.expr1, "EXPR1"), param(req_.expr2, "EXPR2"));
    return report_verdict("hom", v.nonvanishing, v.certificate);
  }

  int cmd_ext() {
    const auto a1 = param(req_.expr1, "EXPR1");
    const auto a2 = param(req_.expr2, "EXPR2");
    if (req_.decider == "recursive") {
      return report_verdict("ext", ext_branch_recursive(a1, a2), std::nullopt, "recursive");
    }
    const auto v = ext_branch_segment_type(a1, a2);
    if (req_.decider == "both") {
      const bool rec = ext_branch_recursive(a1, a2);
      if (rec != v.nonvanishing) {
        err_ << "error: deciders disagree (matcher " << v.nonvanishing << ", recursive " << rec
             << ")\n";
        return kDisagreement;
      }
      return report_verdict("ext", v.nonvanishing, v.certificate, "both");
    }
    return report_verdict("ext", v.nonvanishing, v.certificate, "matcher");
  }

  int cmd_samegroup() {
    const bool v =
        same_group_ext_segment_type(param(req_.expr1, "EXPR1"), param(req_.expr2, "EXPR2"));
    if (req_.json) {
      Json j;
      j["command"] = "samegroup";
      j["verdict"] = v;
      emit(j);
    } else {
      text << "samegroup: " << (v ? "true" : "false") << "\n";
    }
    return verdict_code(v);
  }

  int cmd_ep() {
    const int v = euler_poincare(param(req_.expr1, "EXPR1"), param(req_.expr2, "EXPR2"));
    if (req_.json) {
      Json j;
      j["command"] = "ep";
      j["value"] = v;
      emit(j);
    } else {
      text << "ep: " << v << "\n";
    }
    return kTrue;
  }

  const Request& req_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Request req;
  CLI::App app{"Hom/Ext branching calculator for Arthur-type representations of GL_n", "extbranch"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_flag("--json", req.json, "Machine-readable output");
  app.add_flag("--quiet", req.quiet, "Print nothing; the exit code carries the verdict");

  auto unary = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("EXPR", req.expr1, "Expression")->required();
  };
  auto binary = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("EXPR1", req.expr1, "Parameter of the larger group")->required();
    sub->add_option("EXPR2", req.expr2, "Parameter of the smaller group")->required();
    return sub;
  };

  unary("parse", "Echo the canonical form and dimension");
  unary("dual", "Aubert-Zelevinsky dual");
  unary("minus", "Termwise u(a,b) -> u(a,b-1)");
  unary("csupp", "Cuspidal support");
  auto* jac = app.add_subcommand("jacquet", "Jacquet module of Z(Delta) or Q(Delta)");
  jac->add_option("KIND", req.kind, "Z or Q")->required()->check(CLI::IsMember({"Z", "Q"}));
  jac->add_option("SIDE", req.side, "std or opp")->required()->check(CLI::IsMember({"std", "opp"}));
  jac->add_option("SEGMENT", req.segment, "Segment, e.g. [-1..1]{rho}")->required();
  jac->add_option("L", req.l, "Size of the second block")->required();
  binary("relevant", "GGP relevance with certificate");
  binary("strong", "Strong Ext relevance with certificate");
  binary("matchings", "All strong Ext matchings");
  binary("hom", "Hom branching verdict for (GL_n, GL_{n-1})");
  auto* ext = binary("ext", "Ext branching verdict for segment-type (GL_n, GL_{n-1}) pairs");
  ext->add_option("--decider", req.decider, "matcher, recursive or both")
      ->check(CLI::IsMember({"matcher", "recursive", "both"}));
  binary("samegroup", "Ext on the same group for segment-type products");
  binary("ep", "Euler-Poincare pairing");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Session session(req, out, err);
  int code = kUsage;
  try {
    code = session.dispatch(command);
  } catch (const ReportedUsageError&) {
    return kUsage;
  } catch (const HypothesisError& e) {
    err << "error: hypothesis violated: " << e.what() << "\n";
    return kHypothesis;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (!req.quiet) out << session.text.str();
  return code;
}

}  // namespace arthur::cli
