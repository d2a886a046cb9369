// Command-line front end: worked toy examples, negativity curves as CSV,
// full and Monte Carlo ordering surveys as JSON, and figure presets.
//
// Exit codes: 0 success, 1 invalid parameters, 2 refused full enumeration.

#include <CLI11.hpp>

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "fermiwedge/fock_ops.hpp"
#include "fermiwedge/survey.hpp"

namespace fw = fermiwedge;

namespace {

constexpr std::uint64_t kDefaultSamples = 200000;
constexpr std::uint64_t kDefaultSeed = 271828;
constexpr double kInverseSqrt2 = 0.70710678118654752;

// Shortest round-trip decimal form; identical doubles always serialize to
// identical bytes, which keeps repeated runs byte-identical.
std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char esc[8];
          std::snprintf(esc, sizeof(esc), "\\u%04x", c);
          out += esc;
        } else {
          out += c;  // UTF-8 payload bytes pass through verbatim
        }
    }
  }
  return out;
}

struct FieldChoice {
  fw::FieldSpec spec = fw::FieldSpec::grassmann();
  std::string canonical_name = "grassmann";
};

FieldChoice parse_field(const std::string& text) {
  if (text == "grassmann") return {fw::FieldSpec::grassmann(), "grassmann"};
  if (text == "dirac") return {fw::FieldSpec::dirac(), "dirac"};
  if (text.rfind("spin:", 0) == 0) {
    const std::string s = text.substr(5);
    const auto slash = s.find('/');
    if (slash != std::string::npos && s.substr(slash + 1) == "2") {
      int numerator = 0;
      const char* begin = s.data();
      const char* end = s.data() + slash;
      auto [ptr, ec] = std::from_chars(begin, end, numerator);
      if (ec == std::errc() && ptr == end && numerator > 0 && numerator % 2 == 1) {
        FieldChoice choice{fw::FieldSpec::spin(numerator),
                           numerator == 1 ? "dirac" : "spin:" + s};
        return choice;
      }
    }
    throw CLI::ValidationError(
        "--field", "spin:<s> takes a positive half-integer spin such as spin:3/2");
  }
  throw CLI::ValidationError("--field", "expected grassmann, dirac, or spin:<s>");
}

fw::JointStateSpec make_state(const std::string& state, const fw::FieldSpec& field,
                              const fw::UnruhWeights& weights) {
  if (state == "vacuum-excitation") return fw::vacuum_excitation_spec(weights);
  if (state == "singlet") {
    if (field.chain_length() < 2) {
      throw CLI::ValidationError(
          "--state", "singlet needs at least two spin-z values; grassmann has one");
    }
    return fw::singlet_analogue_spec(field, weights);
  }
  if (state == "nopair-generic" || state == "generic") {
    if (!(field == fw::FieldSpec::dirac())) {
      throw CLI::ValidationError("--state",
                                 "the seeded generic states are defined for --field dirac");
    }
    return state == "generic" ? fw::fully_generic_spec(weights)
                              : fw::no_pair_generic_spec(weights);
  }
  throw CLI::ValidationError(
      "--state", "expected vacuum-excitation, singlet, nopair-generic, or generic");
}

std::string default_state(const fw::FieldSpec& field) {
  return field.chain_length() < 2 ? "vacuum-excitation" : "singlet";
}

fw::OrderingPermutation parse_ordering(const fw::FieldSpec& field, const std::string& csv) {
  std::vector<std::string> labels;
  std::string current;
  for (char c : csv) {
    if (c == ',') {
      labels.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current += c;
    }
  }
  labels.push_back(current);
  if (!labels.empty() && labels.front() == "A") labels.erase(labels.begin());

  const int modes = field.rindler_mode_count();
  fw::OrderingPermutation ordering;
  std::vector<bool> seen(static_cast<std::size_t>(modes), false);
  for (const std::string& label : labels) {
    const fw::ModeId mode = fw::parse_mode_label(label, field);
    int index = -1;
    for (int i = 0; i < modes; ++i) {
      if (field.rindler_mode(i) == mode) {
        index = i;
        break;
      }
    }
    if (index < 0 || seen[static_cast<std::size_t>(index)]) {
      throw CLI::ValidationError("--ordering", "label '" + label + "' is repeated or invalid");
    }
    seen[static_cast<std::size_t>(index)] = true;
    ordering.perm.push_back(static_cast<std::uint8_t>(index));
  }
  if (static_cast<int>(ordering.perm.size()) != modes) {
    throw CLI::ValidationError("--ordering",
                               "expected all " + std::to_string(modes) + " mode labels");
  }
  return ordering;
}

std::string curve_to_csv(const fw::NegativityCurve& curve) {
  std::string out = "r,negativity\n";
  for (std::size_t i = 0; i < curve.grid.size(); ++i) {
    out += format_double(curve.grid[i]);
    out += ',';
    out += format_double(curve.values[i]);
    out += '\n';
  }
  return out;
}

std::string report_to_json(const fw::SurveyReport& report, const std::string& field_name,
                           double qr) {
  std::string out;
  out.reserve(1024 + report.classes.size() * 1024);
  out += "{\n  \"field\": \"" + json_escape(field_name) + "\",\n";
  out += "  \"qr\": " + format_double(qr) + ",\n";
  out += "  \"grid\": [";
  for (std::size_t i = 0; i < report.grid.size(); ++i) {
    if (i) out += ", ";
    out += format_double(report.grid[i]);
  }
  out += "],\n";
  out += "  \"quantum\": " + format_double(report.quantum) + ",\n";
  out += std::string("  \"mode\": \"") +
         (report.mode == fw::SurveyMode::full ? "full" : "monte_carlo") + "\",\n";
  out += "  \"seed\": " + std::to_string(report.rng_seed) + ",\n";
  out += "  \"classes\": [\n";
  for (std::size_t c = 0; c < report.classes.size(); ++c) {
    const fw::BehaviorClass& cls = report.classes[c];
    out += "    {\"population\": " + std::to_string(cls.population);
    out += std::string(", \"is_physical\": ") + (cls.contains_physical ? "true" : "false");
    out += ", \"curve\": [";
    for (std::size_t i = 0; i < cls.curve.values.size(); ++i) {
      if (i) out += ", ";
      out += format_double(cls.curve.values[i]);
    }
    out += "], \"representative\": [";
    for (std::size_t i = 0; i < cls.representative.perm.size(); ++i) {
      if (i) out += ", ";
      out += '"';
      out += json_escape(fw::mode_label(
          report.field.rindler_mode(cls.representative.perm[i]), report.field));
      out += '"';
    }
    out += "]}";
    if (c + 1 < report.classes.size()) out += ',';
    out += '\n';
  }
  out += "  ]\n}\n";
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream stream(path, std::ios::binary);
  if (!stream) throw std::runtime_error("cannot open " + path.string() + " for writing");
  stream.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!stream) throw std::runtime_error("failed writing " + path.string());
}

// Output path for the i-th of n curves: insert "-<i+1>" before the extension
// when more than one ordering is requested.
std::filesystem::path indexed_path(const std::filesystem::path& base, std::size_t i,
                                   std::size_t n) {
  if (n <= 1) return base;
  std::filesystem::path out = base;
  const std::string stem = base.stem().string();
  out.replace_filename(stem + "-" + std::to_string(i + 1) + base.extension().string());
  return out;
}

// ---------------------------------------------------------------------------
// toy: the two worked warm-up examples.
// ---------------------------------------------------------------------------

int run_toy() {
  using fw::Amplitude;

  const fw::ModeId a{fw::Species::particle, fw::Region::wedge_I, 1};
  const fw::ModeId b{fw::Species::particle, fw::Region::wedge_I, -1};
  const fw::ModeId c{fw::Species::antiparticle, fw::Region::wedge_I, 1};

  // One physical two-mode state, the product 0.5 (|00> + |01> + |10> + |11>)
  // in the a-then-b convention. Re-expressing it in the b-then-a convention
  // flips the doubly occupied term's sign, and the qubit factorization read
  // off that layout sees a maximally entangled state.
  {
    const Amplitude h{0.5, 0.0};
    std::printf("two-mode state 0.5(|00> + |01> + |10> + |11>) in ordering (a,b)\n");
    const fw::ModeOrdering ab({a, b});
    const fw::ModeOrdering ba({b, a});
    const fw::SparseState psi(ab, {{0u, h}, {1u, h}, {2u, h}, {3u, h}});
    const double s_ab =
        fw::von_neumann_entropy(fw::partial_trace(psi, fw::PartitionSpec{0, {}, {1}}));
    const fw::SparseState psi_ba = fw::reorder_basis(psi, ba);
    const double s_ba =
        fw::von_neumann_entropy(fw::partial_trace(psi_ba, fw::PartitionSpec{1, {}, {0}}));
    std::printf("  convention (a,b): entropy of mode a = %.12g\n", s_ab);
    std::printf("  convention (b,a): entropy of mode a = %.12g\n", s_ba);
  }

  // One physical three-mode state with the third mode unobserved. Moving the
  // traced mode's slot between the kept ones flips one amplitude's sign, and
  // the negativity of the reduced pair drops from 0.5 to 0 even though the
  // kept modes a and b never swap.
  {
    const Amplitude h{0.5, 0.0};
    std::printf(
        "tripartite state 0.5(|100> + |010> + |101> + |011>) in ordering (a,b,c)\n");
    const fw::ModeOrdering abc({a, b, c});
    const fw::ModeOrdering acb({a, c, b});
    const fw::SparseState phi(abc, {{1u, h}, {2u, h}, {5u, h}, {6u, h}});
    const double n_abc =
        fw::negativity(fw::partial_trace(phi, fw::PartitionSpec{0, {1}, {2}}));
    const fw::SparseState phi_acb = fw::reorder_basis(phi, acb);
    const double n_acb =
        fw::negativity(fw::partial_trace(phi_acb, fw::PartitionSpec{0, {2}, {1}}));
    std::printf("  convention (a,b,c), trace c: negativity(a:b) = %.12g\n", n_abc);
    std::printf("  convention (a,c,b), trace c: negativity(a:b) = %.12g\n", n_acb);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Fermionic mode-ordering survey: negativity and entropy of "
      "accelerated-observer states under every operator-ordering convention"};
  app.require_subcommand(1);

  std::string field_text = "grassmann";
  std::string state_text;
  double qr = kInverseSqrt2;
  int grid_points = 33;
  double quantum = fw::kDefaultQuantum;
  std::uint64_t samples = kDefaultSamples;
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::string> ordering_texts;
  std::string out_path;
  std::string format;

  auto add_common = [&](CLI::App* cmd, bool with_sampling) {
    cmd->add_option("--field", field_text, "Field kind: grassmann, dirac, or spin:<s>")
        ->capture_default_str();
    cmd->add_option("--state", state_text,
                    "State preset: vacuum-excitation, singlet, nopair-generic, generic "
                    "(default: vacuum-excitation for grassmann, singlet otherwise)");
    cmd->add_option("--qr", qr, "Right-sector weight q_R in [0,1]")->capture_default_str();
    cmd->add_option("--grid", grid_points, "Number of r grid points on [0, pi/4]")
        ->capture_default_str();
    cmd->add_option("--quantum", quantum, "Curve quantization step for class fingerprints")
        ->capture_default_str();
    if (with_sampling) {
      cmd->add_option("--samples", samples, "Monte Carlo sample count")->capture_default_str();
      cmd->add_option("--seed", seed, "Monte Carlo seed")->capture_default_str();
    }
  };

  CLI::App* toy = app.add_subcommand("toy", "Print the two warm-up examples");
  (void)toy;

  CLI::App* curve = app.add_subcommand(
      "curve", "Negativity vs r as CSV, one file per requested ordering");
  add_common(curve, false);
  curve->add_option("--ordering", ordering_texts,
                    "Comma-separated mode labels, leftmost first (repeatable); "
                    "default: the region-separated physical ordering");
  curve->add_option("--out", out_path, "Output CSV path (default curve.csv)");
  curve->add_option("--format", format, "Output format (csv)");

  CLI::App* survey = app.add_subcommand(
      "survey", "Classify every mode ordering by its negativity curve (JSON)");
  add_common(survey, false);
  survey->add_option("--out", out_path, "Output JSON path (default survey.json)");
  survey->add_option("--format", format, "Output format (json)");

  CLI::App* mc = app.add_subcommand(
      "mc-survey", "Classify sampled mode orderings by negativity curve (JSON)");
  add_common(mc, true);
  mc->add_option("--out", out_path, "Output JSON path (default mc-survey.json)");
  mc->add_option("--format", format, "Output format (json)");

  CLI::App* figures = app.add_subcommand(
      "figures", "Run figure presets: grassmann-fig2, dirac-singlet, spin32-hist");
  std::vector<std::string> preset_names;
  figures->add_option("presets", preset_names,
                      "Presets to run (default: all three)");
  figures->add_option("--samples", samples, "Sample count for spin32-hist")
      ->capture_default_str();
  figures->add_option("--seed", seed, "Monte Carlo seed for spin32-hist")
      ->capture_default_str();
  figures->add_option("--out", out_path, "Output directory (default .)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  try {
    if (app.got_subcommand(toy)) return run_toy();

    if (app.got_subcommand(figures)) {
      if (preset_names.empty()) {
        preset_names = {"grassmann-fig2", "dirac-singlet", "spin32-hist"};
      }
      const std::filesystem::path dir = out_path.empty() ? "." : out_path;
      std::filesystem::create_directories(dir);
      const fw::UnruhWeights weights = fw::UnruhWeights::from_qr(kInverseSqrt2);
      const std::vector<double> grid = fw::default_classification_grid();
      for (const std::string& name : preset_names) {
        if (name == "grassmann-fig2") {
          const fw::FieldSpec field = fw::FieldSpec::grassmann();
          const fw::JointStateSpec spec = fw::vacuum_excitation_spec(weights);
          const fw::OrderingPermutation monotone{{0, 1, 2, 3}};  // c_I d_II d_I c_II
          const fw::OrderingPermutation physical{{0, 2, 1, 3}};  // c_I d_I d_II c_II
          write_file(dir / "grassmann-fig2-monotone.csv",
                     curve_to_csv(fw::negativity_curve(
                         spec, field, monotone.to_mode_ordering(field), grid)));
          write_file(dir / "grassmann-fig2-physical.csv",
                     curve_to_csv(fw::negativity_curve(
                         spec, field, physical.to_mode_ordering(field), grid)));
        } else if (name == "dirac-singlet") {
          const fw::FieldSpec field = fw::FieldSpec::dirac();
          const fw::SurveyReport report = fw::survey_full(
              fw::singlet_analogue_spec(field, weights), field, grid);
          write_file(dir / "dirac-singlet.json",
                     report_to_json(report, "dirac", kInverseSqrt2));
        } else if (name == "spin32-hist") {
          const fw::FieldSpec field = fw::FieldSpec::spin(3);
          const fw::SurveyReport report = fw::survey_monte_carlo(
              fw::singlet_analogue_spec(field, weights), field, grid, fw::kDefaultQuantum,
              samples, seed);
          write_file(dir / "spin32-hist.json",
                     report_to_json(report, "spin:3/2", kInverseSqrt2));
        } else {
          std::cerr << "unknown preset '" << name
                    << "' (expected grassmann-fig2, dirac-singlet, spin32-hist)\n";
          return 1;
        }
      }
      return 0;
    }

    // Remaining subcommands share the field/state/grid configuration.
    const FieldChoice field = parse_field(field_text);
    if (!(qr >= 0.0 && qr <= 1.0)) {
      std::cerr << "--qr must lie in [0,1]\n";
      return 1;
    }
    if (grid_points < 2) {
      std::cerr << "--grid needs at least 2 points\n";
      return 1;
    }
    const fw::UnruhWeights weights = fw::UnruhWeights::from_qr(qr);
    if (state_text.empty()) state_text = default_state(field.spec);
    const fw::JointStateSpec spec = make_state(state_text, field.spec, weights);
    const std::vector<double> grid = fw::default_classification_grid(grid_points);

    if (app.got_subcommand(curve)) {
      if (!format.empty() && format != "csv") {
        std::cerr << "curve emits csv only\n";
        return 1;
      }
      std::vector<fw::OrderingPermutation> orderings;
      for (const std::string& text : ordering_texts) {
        orderings.push_back(parse_ordering(field.spec, text));
      }
      if (orderings.empty()) orderings.push_back(fw::region_separated_ordering(field.spec));
      const std::filesystem::path base = out_path.empty() ? "curve.csv" : out_path;
      for (std::size_t i = 0; i < orderings.size(); ++i) {
        const fw::NegativityCurve result = fw::negativity_curve(
            spec, field.spec, orderings[i].to_mode_ordering(field.spec), grid);
        write_file(indexed_path(base, i, orderings.size()), curve_to_csv(result));
      }
      return 0;
    }

    if (!format.empty() && format != "json") {
      std::cerr << "survey and mc-survey emit json only\n";
      return 1;
    }
    if (app.got_subcommand(survey)) {
      const fw::SurveyReport report = fw::survey_full(spec, field.spec, grid, quantum);
      write_file(out_path.empty() ? "survey.json" : out_path,
                 report_to_json(report, field.canonical_name, qr));
      return 0;
    }
    if (app.got_subcommand(mc)) {
      const fw::SurveyReport report =
          fw::survey_monte_carlo(spec, field.spec, grid, quantum, samples, seed);
      write_file(out_path.empty() ? "mc-survey.json" : out_path,
                 report_to_json(report, field.canonical_name, qr));
      return 0;
    }
  } catch (const fw::enumeration_refused& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
