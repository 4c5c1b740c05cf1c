#include "ortho/cli.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "ortho/error.hpp"
#include "ortho/graph.hpp"
#include "ortho/latin.hpp"
#include "ortho/orthomorphism.hpp"
#include "ortho/verify.hpp"
#include "ortho/z2z4.hpp"

namespace ortho::cli {

using nlohmann::ordered_json;

std::size_t GroupSpec::order() const {
  std::size_t n = 1;
  for (std::size_t f : cyclic_factors) n *= f;
  return n;
}

GroupPtr GroupSpec::build() const {
  FiniteGroup g = build_cyclic(cyclic_factors.front());
  for (std::size_t k = 1; k < cyclic_factors.size(); ++k) g = direct_product(g, build_cyclic(cyclic_factors[k]));
  return std::make_shared<const FiniteGroup>(std::move(g));
}

namespace {

// Factor orders above this are rejected outright; every command needs the
// Cayley table in memory long before any enumeration bound applies.
constexpr std::size_t kMaxFactorOrder = 4096;

std::vector<std::size_t> parse_factor(std::string_view spec) {
  if (spec == "z2xz4") return {2, 4};
  if (spec == "klein") return {2, 2};
  constexpr std::string_view kCyclic = "cyclic:";
  if (spec.starts_with(kCyclic)) {
    const std::string_view digits = spec.substr(kCyclic.size());
    std::size_t n = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || end != digits.data() + digits.size() || digits.empty())
      throw std::invalid_argument("bad cyclic order in group spec '" + std::string(spec) + "'");
    if (n == 0 || n > kMaxFactorOrder)
      throw std::invalid_argument("cyclic order out of range in '" + std::string(spec) + "'");
    return {n};
  }
  throw std::invalid_argument("unknown group spec '" + std::string(spec) + "'");
}

}  // namespace

GroupSpec parse_group_spec(std::string_view spec) {
  constexpr std::string_view kProduct = "product:";
  if (spec.starts_with(kProduct)) {
    const std::string_view body = spec.substr(kProduct.size());
    const auto comma = body.find(',');
    if (comma == std::string_view::npos)
      throw std::invalid_argument("product spec needs two factors: '" + std::string(spec) + "'");
    GroupSpec out{parse_factor(body.substr(0, comma))};
    const auto right = parse_factor(body.substr(comma + 1));
    out.cyclic_factors.insert(out.cyclic_factors.end(), right.begin(), right.end());
    if (out.order() > kMaxFactorOrder) throw std::invalid_argument("product group is too large");
    return out;
  }
  return GroupSpec{parse_factor(spec)};
}

std::optional<Command> parse_command(std::string_view name) {
  static constexpr std::array<std::pair<std::string_view, Command>, 6> kNames{{
      {"enumerate", Command::enumerate},
      {"classify", Command::classify},
      {"graph", Command::graph},
      {"clique", Command::clique},
      {"verify", Command::verify},
      {"latin", Command::latin},
  }};
  for (auto [n, c] : kNames)
    if (n == name) return c;
  return std::nullopt;
}

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  if (name == "dot") return OutputFormat::dot;
  if (name == "cycles") return OutputFormat::cycles;
  return std::nullopt;
}

namespace {

bool format_allowed(Command command, OutputFormat format) {
  switch (format) {
    case OutputFormat::text:
    case OutputFormat::json: return true;
    case OutputFormat::dot: return command == Command::graph;
    case OutputFormat::cycles: return command == Command::enumerate || command == Command::classify;
  }
  return false;
}

class Runner {
 public:
  Runner(const RunConfig& config, std::ostream& out, std::ostream& err)
      : config_(config), out_(out), err_(err) {}

  int run(const GroupPtr& g) {
    switch (config_.command) {
      case Command::enumerate: return enumerate(g);
      case Command::classify: return classify(g);
      case Command::graph: return graph(g);
      case Command::clique: return clique(g);
      case Command::verify: return verify(g);
      case Command::latin: return latin(g);
    }
    return exit_code::kUsage;
  }

 private:
  std::vector<Orthomorphism> orthos(const GroupPtr& g) const {
    return enumerate_orthomorphisms(g, {config_.max_order, config_.jobs});
  }

  ordered_json header() const {
    ordered_json doc;
    doc["schema"] = 1;
    doc["group"] = config_.group_spec;
    return doc;
  }

  int enumerate(const GroupPtr& g) {
    const auto all = orthos(g);
    if (config_.format == OutputFormat::json) {
      auto doc = header();
      doc["order"] = g->order();
      doc["count"] = all.size();
      doc["orthomorphisms"] = ordered_json::array();
      for (const auto& t : all) doc["orthomorphisms"].push_back(t.map().images);
      out_ << doc.dump() << '\n';
      return exit_code::kOk;
    }
    out_ << all.size() << '\n';
    for (const auto& t : all)
      out_ << (config_.format == OutputFormat::cycles ? cycle_notation(*g, t.map()) : image_array_string(t.map()))
           << '\n';
    return exit_code::kOk;
  }

  int classify(const GroupPtr& g) {
    if (!z2z4::is_z2xz4(*g)) {
      err_ << "classify is only defined for Z2 x Z4\n";
      return exit_code::kUsage;
    }
    const auto all = orthos(g);
    std::vector<z2z4::CycleForm> forms;
    std::array<std::size_t, 4> counts{};
    for (const auto& t : all) {
      forms.push_back(z2z4::classify_form(t));
      ++counts[static_cast<std::size_t>(forms.back().form)];
    }
    constexpr std::array<z2z4::Form, 4> kForms{z2z4::Form::I, z2z4::Form::II, z2z4::Form::III, z2z4::Form::IV};

    if (config_.format == OutputFormat::json) {
      auto doc = header();
      ordered_json tally;
      for (auto f : kForms) tally[std::string(z2z4::form_name(f))] = counts[static_cast<std::size_t>(f)];
      doc["counts"] = tally;
      doc["orthomorphisms"] = ordered_json::array();
      for (std::size_t i = 0; i < all.size(); ++i) {
        ordered_json entry;
        entry["images"] = all[i].map().images;
        entry["form"] = z2z4::form_name(forms[i].form);
        entry["a"] = forms[i].a;
        entry["x"] = forms[i].x;
        entry["theta_x"] = forms[i].theta_x;
        doc["orthomorphisms"].push_back(entry);
      }
      out_ << doc.dump() << '\n';
      return exit_code::kOk;
    }
    for (auto f : kForms) out_ << z2z4::form_name(f) << ' ' << counts[static_cast<std::size_t>(f)] << '\n';
    for (std::size_t i = 0; i < all.size(); ++i) {
      const auto& cf = forms[i];
      out_ << i << ' ' << z2z4::form_name(cf.form) << " a=" << g->label(cf.a) << " x=" << g->label(cf.x)
           << " theta_x=" << g->label(cf.theta_x) << ' '
           << (config_.format == OutputFormat::cycles ? cycle_notation(*g, all[i].map())
                                                      : image_array_string(all[i].map()))
           << '\n';
    }
    return exit_code::kOk;
  }

  int graph(const GroupPtr& g) {
    const OrthGraph graph = build_graph(orthos(g), config_.jobs);
    switch (config_.format) {
      case OutputFormat::dot: out_ << to_dot(graph, true); break;
      case OutputFormat::json: out_ << to_json(graph, config_.group_spec) << '\n'; break;
      default: {
        const ComponentReport report = component_report(graph);
        out_ << "vertices " << graph.size() << '\n' << "edges " << graph.edge_count() << '\n';
        for (auto [i, j] : graph.edges()) out_ << i << ' ' << j << '\n';
        out_ << "components " << report.components.size() << '\n';
        for (std::size_t c = 0; c < report.components.size(); ++c) {
          for (std::size_t v : report.components[c]) out_ << v << ' ';
          out_ << (report.cycle_flags[c] ? "cycle" : "-") << '\n';
        }
        break;
      }
    }
    return exit_code::kOk;
  }

  int clique(const GroupPtr& g) {
    const std::size_t omega = clique_number(build_graph(orthos(g), config_.jobs));
    if (config_.format == OutputFormat::json) {
      auto doc = header();
      doc["clique_number"] = omega;
      out_ << doc.dump() << '\n';
    } else {
      out_ << omega << '\n';
    }
    return exit_code::kOk;
  }

  int verify(const GroupPtr& g) {
    const auto statements = verify_group(g, {config_.max_order, config_.jobs});
    bool all_pass = true;
    for (const auto& s : statements) all_pass = all_pass && s.pass;
    if (config_.format == OutputFormat::json) {
      auto doc = header();
      doc["pass"] = all_pass;
      doc["statements"] = ordered_json::array();
      for (const auto& s : statements) {
        ordered_json entry;
        entry["id"] = s.id;
        entry["pass"] = s.pass;
        if (!s.pass) entry["detail"] = s.detail;
        doc["statements"].push_back(entry);
      }
      out_ << doc.dump() << '\n';
    } else {
      for (const auto& s : statements) out_ << format_statement(s) << '\n';
    }
    for (const auto& s : statements)
      if (!s.pass) err_ << "verification failed: " << s.id << '\n';
    return all_pass ? exit_code::kOk : exit_code::kVerificationFailed;
  }

  int latin(const GroupPtr& g) {
    const auto all = orthos(g);
    std::vector<LatinSquare> squares;
    for (const auto& t : all) squares.push_back(to_latin_square(*g, t.map()));

    struct Verdict {
      std::size_t i, j;
      bool latin, orthogonal;
    };
    std::vector<Verdict> verdicts;
    bool agree = true;
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        Verdict v{i, j, latin_orthogonal(squares[i], squares[j]), are_orthogonal(all[i], all[j])};
        agree = agree && v.latin == v.orthogonal;
        verdicts.push_back(v);
      }

    if (config_.format == OutputFormat::json) {
      auto doc = header();
      doc["squares"] = ordered_json::array();
      for (const auto& sq : squares) doc["squares"].push_back(sq.cells());
      doc["pairs"] = ordered_json::array();
      for (const auto& v : verdicts) doc["pairs"].push_back({v.i, v.j, v.latin, v.orthogonal});
      doc["agree"] = agree;
      out_ << doc.dump() << '\n';
    } else {
      for (std::size_t k = 0; k < squares.size(); ++k)
        out_ << "# square " << k << ' ' << cycle_notation(*g, all[k].map()) << '\n' << to_text(squares[k]) << '\n';
      for (const auto& v : verdicts)
        out_ << v.i << ' ' << v.j << " latin=" << v.latin << " orthogonal=" << v.orthogonal << '\n';
      out_ << "oracle " << (agree ? "agree" : "DISAGREE") << ' ' << verdicts.size() << " pairs\n";
    }
    if (!agree) err_ << "verification failed: LATIN-ORACLE\n";
    return agree ? exit_code::kOk : exit_code::kVerificationFailed;
  }

  const RunConfig& config_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!format_allowed(config.command, config.format)) {
    err << "output format not supported by this command\n";
    return exit_code::kUsage;
  }

  GroupSpec spec;
  try {
    spec = parse_group_spec(config.group_spec);
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return exit_code::kUsage;
  }
  if (spec.order() > config.max_order) {
    err << "group order " << spec.order() << " exceeds --max-order " << config.max_order << '\n';
    return exit_code::kBoundExceeded;
  }

  // Output is buffered so a failing run never leaves a partial file behind.
  std::ostringstream buffer;
  int code = exit_code::kOk;
  try {
    code = Runner(config, buffer, err).run(spec.build());
  } catch (const BoundExceeded& e) {
    err << e.what() << '\n';
    return exit_code::kBoundExceeded;
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.statement() << '\n' << e.what() << '\n';
    code = exit_code::kVerificationFailed;
  }

  if (config.output_path) {
    std::ofstream file(*config.output_path, std::ios::binary);
    if (!file) {
      err << "cannot open " << *config.output_path << '\n';
      return exit_code::kUsage;
    }
    file << buffer.str();
  } else {
    out << buffer.str();
  }
  return code;
}

}  // namespace ortho::cli
