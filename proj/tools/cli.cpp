#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "qalink/determinant.hpp"
#include "qalink/families.hpp"
#include "qalink/paper_check.hpp"
#include "qalink/qa.hpp"
#include "qalink/slopes.hpp"
#include "qalink/tangle.hpp"

namespace qalink {

namespace {

int parse_int(const std::string& text) {
  int value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    throw std::invalid_argument("not an integer: '" + text + "'");
  return value;
}

// `-` reads standard input, an existing file is read whole, anything else is
// taken as literal PD text.
std::string read_diagram_text(const std::string& arg, std::istream& in) {
  if (arg == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream file(arg);
  if (file) {
    std::ostringstream ss;
    ss << file.rdbuf();
    return ss.str();
  }
  return arg;
}

// Grammar: `pretzel:q` | `seifert:f1,f2,...[:frame]` with fractions `p/q`.
FramedQATangle tangle_from_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("tangle spec must look like kind:args, got '" + spec + "'");
  std::string kind = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  if (kind == "pretzel") return pretzel_quotient_tangle(parse_int(rest));
  if (kind == "seifert") {
    int frame = 0;
    if (auto frame_colon = rest.find(':'); frame_colon != std::string::npos) {
      frame = parse_int(rest.substr(frame_colon + 1));
      rest = rest.substr(0, frame_colon);
    }
    std::vector<Slope> fractions;
    std::istringstream items(rest);
    std::string item;
    while (std::getline(items, item, ',')) fractions.push_back(parse_slope(item));
    return seifert_tangle(fractions, frame);
  }
  throw std::invalid_argument("unknown tangle kind '" + kind + "'");
}

FramedQATangle named_family(const std::string& name) {
  if (name.find(':') != std::string::npos) return tangle_from_spec(name);
  if (name == "pretzel") return pretzel_quotient_tangle(3);
  if (name == "seifert") return seifert_tangle({Slope{1, 2}, Slope{-1, 5}}, 0);
  throw std::invalid_argument("unknown family '" + name + "' (want pretzel or seifert)");
}

}  // namespace

int cmd_dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                 std::ostream& err) {
  CLI::App app{"quasi-alternating link toolkit"};
  app.require_subcommand(1);
  int result = 0;

  std::string det_arg;
  CLI::App* det = app.add_subcommand("det", "print the determinant of a diagram");
  det->add_option("diagram", det_arg, "PD text, a file, or - for stdin")->required();
  det->callback([&] { out << determinant(parse_pd(read_diagram_text(det_arg, in))) << '\n'; });

  std::string certify_arg;
  int budget = 10000;
  CLI::App* certify = app.add_subcommand("certify", "search for a quasi-alternating certificate");
  certify->add_option("diagram", certify_arg, "PD text, a file, or - for stdin")->required();
  certify->add_option("--budget", budget, "node expansion budget");
  certify->callback([&] {
    auto cert = certify_qa(parse_pd(read_diagram_text(certify_arg, in)), budget);
    if (cert) {
      out << certificate_to_json(*cert) << '\n';
    } else {
      out << "inconclusive\n";
      result = 1;
    }
  });

  std::string closure_tangle, closure_slope;
  CLI::App* close = app.add_subcommand("closure", "print the PD of a tangle closure");
  close->add_option("--tangle", closure_tangle, "pretzel:q or seifert:f1,f2[:frame]")->required();
  close->add_option("--slope", closure_slope, "filling slope p/q")->required();
  close->callback([&] {
    FramedQATangle t = tangle_from_spec(closure_tangle);
    out << to_pd(closure(t.tangle, parse_slope(closure_slope))) << '\n';
  });

  std::string family_name;
  int max_p = 0, max_q = 0;
  bool family_json = false;
  CLI::App* family = app.add_subcommand("family", "sweep fills of a family tangle");
  family->add_option("--name", family_name, "pretzel, seifert, or a tangle spec")->required();
  family->add_option("--max-p", max_p, "largest slope numerator")->required();
  family->add_option("--max-q", max_q, "largest slope denominator")->required();
  family->add_flag("--json", family_json, "emit the report as JSON");
  family->callback([&] {
    FamilyReport report = verify_family(named_family(family_name), max_p, max_q);
    out << (family_json ? report_to_json(report) + "\n" : report_to_text(report));
    if (!report.all_pass) result = 1;
  });

  CLI::App* paper = app.add_subcommand("paper-check", "recompute every reference constant");
  paper->callback([&] {
    PaperCheckReport report = run_paper_check();
    out << paper_check_to_text(report);
    if (!report.all_pass) result = 1;
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return result;
}

}  // namespace qalink
