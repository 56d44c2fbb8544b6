#include "commands.hpp"

#include "fractalmark/fractalmark.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace fractalmark::cli {

namespace fs = std::filesystem;

namespace {

/// Signals a usage problem that CLI11 cannot see (missing key, bad combination).
struct UsageError : ParameterError {
  using ParameterError::ParameterError;
};

std::string fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string csv_field(const std::string& s) {
  return s.find_first_of(",\"\n") == std::string::npos ? s : csv_quote(s);
}

std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back().push_back('"');
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back().push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c != '\r') {
      fields.back().push_back(c);
    }
  }
  if (quoted) throw ParameterError("unterminated quote in CSV line");
  return fields;
}

constexpr const char* kCsvHeader = "image,attack,params,bit_rate,patch_rate,verdict,mask";

struct ReportRow {
  std::string image;
  std::string attack;
  std::string params;
  double bit_rate = 0.0;
  double patch_rate = 0.0;
  Label verdict = Label::Fake;
  std::string mask;
};

std::string csv_line(const ReportRow& r) {
  return csv_field(r.image) + "," + r.attack + "," + csv_quote(r.params) + "," + fixed(r.bit_rate) + "," +
         fixed(r.patch_rate) + "," + std::string(to_string(r.verdict)) + "," + r.mask;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot create '" + path.string() + "'");
  out << text;
  if (!out) throw IoError("error writing '" + path.string() + "'");
}

fs::path key_path(const std::string& given) {
  if (!given.empty()) return given;
  if (const char* env = std::getenv(kKeyEnv); env != nullptr && *env != '\0') return env;
  throw UsageError(std::string("no key given: pass --key or set ") + kKeyEnv);
}

EmbedConfig embed_config(std::optional<double> delta) {
  EmbedConfig cfg;
  if (delta) cfg.delta = *delta;
  validate(cfg);
  return cfg;
}

void check_order(const ImageBuffer& img, const WatermarkKey& key) {
  const int n = order_for_image(img);
  if (n != key.order) {
    throw ParameterError("image side " + std::to_string(img.width) + " needs a key with n = " + std::to_string(n) +
                         ", key has n = " + std::to_string(key.order));
  }
}

ReportRow verify_image(const ImageBuffer& img, const WatermarkKey& key, const EmbedConfig& cfg, double tau,
                       RecoveryReport* report_out = nullptr) {
  check_order(img, key);
  const RecoveryReport report = compare(generate(key), extract(img, key.order, cfg));
  ReportRow row;
  row.bit_rate = report.bit_rate;
  row.patch_rate = report.patch_rate;
  row.verdict = decide(report, tau).label;
  row.mask = mask_to_string(localization_map(report));
  if (report_out) *report_out = report;
  return row;
}

// Offsets every seed carried by the attack spec so that repeated images draw
// different noise, crop positions and shifts.
AttackSpec reseed(AttackSpec spec, std::uint64_t offset) {
  std::visit(
      [offset](auto& p) {
        if constexpr (requires { p.seed; }) p.seed += offset;
      },
      spec.params);
  return spec;
}

// ---------------------------------------------------------------- keygen

struct KeygenArgs {
  std::optional<std::uint64_t> seed;
  std::string kind = "hilbert";
  int n = 3;
  std::optional<int> r, m, o;
  std::optional<double> x0, a;
  std::optional<int> k, d;
  std::string out;
};

int cmd_keygen(const KeygenArgs& args, std::ostream& out) {
  WatermarkKey key;
  const CurveKind kind = curve_kind_from_string(args.kind);
  if (args.seed) {
    if (args.r || args.m || args.o || args.x0 || args.a || args.k || args.d) {
      throw UsageError("--seed cannot be combined with explicit r/m/o/x0/a/k/d");
    }
    key = sample_key(*args.seed, kind, args.n);
  } else {
    std::string missing;
    if (!args.x0) missing += " --x0";
    if (!args.a) missing += " --a";
    if (!args.k) missing += " --k";
    if (!args.d) missing += " --d";
    if (!missing.empty()) throw UsageError("explicit keys need" + missing + " (or use --seed)");
    key.kind = kind;
    key.order = args.n;
    key.variation = VariationParams::make(args.r.value_or(0), args.m.value_or(0), args.o.value_or(0));
    key.chaos = ChaosParams{*args.x0, *args.a, *args.k, *args.d};
  }
  validate(key);
  // Generating once surfaces degenerate keystreams before the key is stored.
  (void)generate(key);
  if (args.out.empty()) {
    out << serialize_key(key);
  } else {
    save_key(args.out, key);
  }
  out << "fingerprint " << key_fingerprint(key) << "\n";
  return kExitOk;
}

// ----------------------------------------------------------------- embed

struct EmbedArgs {
  std::string input, output, key;
  std::optional<double> delta;
};

int cmd_embed(const EmbedArgs& args, std::ostream& out) {
  const WatermarkKey key = load_key(key_path(args.key));
  const EmbedConfig cfg = embed_config(args.delta);
  const ImageBuffer img = read_image(args.input);
  check_order(img, key);
  const ImageBuffer marked = embed(img, to_channelwise(generate(key)), cfg);
  write_png(args.output, marked);
  const double p = psnr(img, marked);
  out << "psnr " << (std::isinf(p) ? std::string("identical") : fixed(p, 2) + " dB") << "\n";
  out << "ssim " << fixed(ssim(img, marked), 4) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string input, key, overlay, csv;
  double tau = kDefaultThreshold;
  std::optional<double> delta;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  const WatermarkKey key = load_key(key_path(args.key));
  const EmbedConfig cfg = embed_config(args.delta);
  if (!(args.tau > 0.0 && args.tau < 1.0)) throw UsageError("--tau must lie in (0, 1)");
  const ImageBuffer img = read_image(args.input);
  RecoveryReport report;
  ReportRow row = verify_image(img, key, cfg, args.tau, &report);
  row.image = fs::path(args.input).filename().string();
  row.attack = "none";
  const LocalizationMask mask = localization_map(report);

  if (!args.overlay.empty()) write_png(args.overlay, render_overlay(img, mask));
  if (!args.csv.empty()) {
    std::error_code ec;
    const bool fresh = !fs::exists(args.csv, ec) || fs::file_size(args.csv, ec) == 0;
    std::ofstream csv(args.csv, std::ios::binary | std::ios::app);
    if (!csv) throw IoError("cannot open '" + args.csv + "'");
    if (fresh) csv << kCsvHeader << "\n";
    csv << csv_line(row) << "\n";
    if (!csv) throw IoError("error writing '" + args.csv + "'");
  }

  out << "bit_rate " << fixed(row.bit_rate) << "\n";
  out << "patch_rate " << fixed(row.patch_rate) << "\n";
  out << "verdict " << to_string(row.verdict) << " (tau " << args.tau << ")\n";
  out << "flagged " << mask.count() << "\n";
  return row.verdict == Label::Real ? kExitReal : kExitFake;
}

// ---------------------------------------------------------------- attack

struct AttackArgs {
  std::string input, output, spec, donor;
};

int cmd_attack(const AttackArgs& args, std::ostream& out) {
  AttackSpec spec = parse_attack(args.spec);
  if (auto* splice = std::get_if<attack::Splice>(&spec.params)) {
    std::string donor = args.donor.empty() ? splice->donor_ref : args.donor;
    if (donor.empty() || donor == "@next") throw UsageError("splice needs a donor image: pass --donor or donor=<path>");
    splice->donor_ref = donor;
    splice->donor = std::make_shared<const ImageBuffer>(read_image(donor));
  } else if (!args.donor.empty()) {
    throw UsageError("--donor only applies to splice");
  }
  validate(spec);
  const ImageBuffer img = read_image(args.input);
  const AttackResult result = apply(img, spec);
  write_png(args.output, result.image);
  out << "attack " << spec.describe() << "\n";
  out << "destroyed " << result.destroyed.size() << "\n";
  for (const Eigen::Vector2i& p : result.destroyed) out << "  " << p.x() << "," << p.y() << "\n";
  return kExitOk;
}

// -------------------------------------------------------------- evaluate

struct EvaluateArgs {
  std::string corpus, key, csv, summary;
  std::vector<std::string> attacks;
  double tau = kDefaultThreshold;
  std::optional<double> delta;
  bool no_embed = false;
  std::optional<std::uint64_t> random_keys;
  std::size_t threads = 0;
};

struct SummaryRow {
  std::string label;
  int images = 0;
  double bit_rate = 0.0;
  double patch_rate = 0.0;
  double real = 0.0;
};

int cmd_evaluate(const EvaluateArgs& args, std::ostream& out) {
  const EmbedConfig cfg = embed_config(args.delta);
  if (!(args.tau > 0.0 && args.tau < 1.0)) throw UsageError("--tau must lie in (0, 1)");
  std::optional<WatermarkKey> fixed_key;
  if (!args.random_keys) fixed_key = load_key(key_path(args.key));

  std::vector<AttackSpec> attacks;
  if (args.attacks.empty()) {
    attacks = default_benign_attacks();
  } else {
    for (const std::string& s : args.attacks) attacks.push_back(parse_attack(s));
  }
  bool needs_next = false;
  std::map<std::string, std::shared_ptr<const ImageBuffer>> donors;
  for (AttackSpec& spec : attacks) {
    if (auto* splice = std::get_if<attack::Splice>(&spec.params)) {
      if (splice->donor_ref.empty()) throw UsageError("splice attacks need donor=<path|@next>");
      if (splice->donor_ref == "@next") {
        needs_next = true;
        continue;
      }
      auto& cached = donors[splice->donor_ref];
      if (!cached) cached = std::make_shared<const ImageBuffer>(read_image(splice->donor_ref));
      splice->donor = cached;
    }
    validate(spec);
  }

  const std::vector<fs::path> files = list_png_files(args.corpus);
  if (files.empty()) throw UsageError("corpus '" + args.corpus + "' holds no PNG images");
  if (needs_next && files.size() < 2) throw UsageError("donor=@next needs at least two corpus images");

  const std::size_t count = files.size();
  std::vector<std::vector<ReportRow>> rows(count);
  std::vector<std::exception_ptr> failures(count);
  std::atomic<std::size_t> next{0};

  const auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        const ImageBuffer original = read_image(files[i]);
        const WatermarkKey key = fixed_key ? *fixed_key : sample_key(*args.random_keys + i, CurveKind::Hilbert,
                                                                     order_for_image(original));
        check_order(original, key);
        const ImageBuffer target = args.no_embed ? original : embed(original, to_channelwise(generate(key)), cfg);
        std::shared_ptr<const ImageBuffer> next_original;
        if (needs_next) next_original = std::make_shared<const ImageBuffer>(read_image(files[(i + 1) % count]));

        for (const AttackSpec& base : attacks) {
          AttackSpec spec = reseed(base, i);
          if (auto* splice = std::get_if<attack::Splice>(&spec.params); splice && !splice->donor) {
            splice->donor = next_original;
          }
          const AttackResult attacked = apply(target, spec);
          ReportRow row = verify_image(attacked.image, key, cfg, args.tau);
          row.image = files[i].filename().string();
          row.attack = spec.name();
          row.params = spec.describe();
          rows[i].push_back(std::move(row));
        }
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };

  std::size_t threads = args.threads != 0 ? args.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, count);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : failures)
    if (e) std::rethrow_exception(e);

  std::vector<SummaryRow> summary(attacks.size());
  for (std::size_t a = 0; a < attacks.size(); ++a) summary[a].label = attacks[a].describe();
  std::ostringstream csv;
  csv << kCsvHeader << "\n";
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t a = 0; a < rows[i].size(); ++a) {
      const ReportRow& r = rows[i][a];
      csv << csv_line(r) << "\n";
      summary[a].images += 1;
      summary[a].bit_rate += r.bit_rate;
      summary[a].patch_rate += r.patch_rate;
      summary[a].real += r.verdict == Label::Real ? 1.0 : 0.0;
    }
  }
  if (!args.csv.empty()) write_text(args.csv, csv.str());

  std::ostringstream table;
  std::size_t width = 6;
  for (const SummaryRow& s : summary) width = std::max(width, s.label.size());
  char line[512];
  std::snprintf(line, sizeof(line), "%-*s  %6s  %10s  %10s  %10s\n", static_cast<int>(width), "attack", "images",
                "bit_rate", "patch_rate", "real");
  table << line;
  std::ostringstream summary_csv;
  summary_csv << "attack,images,bit_rate,patch_rate,real_fraction\n";
  for (SummaryRow& s : summary) {
    const double n = std::max(1, s.images);
    s.bit_rate /= n;
    s.patch_rate /= n;
    s.real /= n;
    std::snprintf(line, sizeof(line), "%-*s  %6d  %10.6f  %10.6f  %10.6f\n", static_cast<int>(width), s.label.c_str(),
                  s.images, s.bit_rate, s.patch_rate, s.real);
    table << line;
    summary_csv << csv_quote(s.label) << "," << s.images << "," << fixed(s.bit_rate) << "," << fixed(s.patch_rate)
                << "," << fixed(s.real) << "\n";
  }
  if (!args.summary.empty()) write_text(args.summary, summary_csv.str());
  out << table.str();
  return kExitOk;
}

// --------------------------------------------------------------- heatmap

struct HeatmapArgs {
  std::vector<std::string> reports;
  std::string output, attack;
  int cell = kPatchSize;
};

int cmd_heatmap(const HeatmapArgs& args, std::ostream& out) {
  if (args.cell < 1 || args.cell > 256) throw UsageError("--cell must lie in [1, 256]");
  std::vector<LocalizationMask> masks;
  for (const std::string& path : args.reports) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open report '" + path + "'");
    std::string line;
    if (!std::getline(in, line)) throw ParameterError("report '" + path + "' is empty");
    const std::vector<std::string> header = csv_split(line);
    const auto column = [&](const char* name) {
      const auto it = std::find(header.begin(), header.end(), name);
      if (it == header.end()) throw ParameterError("report '" + path + "' lacks a '" + name + "' column");
      return static_cast<std::size_t>(it - header.begin());
    };
    const std::size_t attack_col = column("attack");
    const std::size_t mask_col = column("mask");
    while (std::getline(in, line)) {
      if (line.empty() || line == "\r") continue;
      const std::vector<std::string> fields = csv_split(line);
      if (fields.size() != header.size()) throw ParameterError("malformed row in report '" + path + "'");
      if (!args.attack.empty() && fields[attack_col] != args.attack) continue;
      masks.push_back(mask_from_string(fields[mask_col]));
    }
  }
  if (masks.empty()) throw UsageError("no report rows selected");
  const Eigen::MatrixXd heat = cumulative_heatmap(std::span<const LocalizationMask>(masks));
  write_png(args.output, render_heatmap(heat, args.cell));
  out << "masks " << masks.size() << "\n";
  for (Eigen::Index y = 0; y < heat.rows(); ++y) {
    for (Eigen::Index x = 0; x < heat.cols(); ++x) out << (x ? " " : "") << fixed(heat(y, x), 2);
    out << "\n";
  }
  return kExitOk;
}

// --------------------------------------------------------------- prepare

struct PrepareArgs {
  std::string input_dir, output_dir;
  std::optional<int> side;
  std::optional<int> n;
};

int cmd_prepare(const PrepareArgs& args, std::ostream& out) {
  if (args.side && args.n) throw UsageError("give --side or --n, not both");
  const int n = args.n.value_or(3);
  if (n < kMinOrder || n > kMaxOrder) throw UsageError("--n must lie in [1, 8]");
  const int side = args.side.value_or(kPatchSize << n);
  if (side < kPatchSize || side % kPatchSize != 0 || ((side / kPatchSize) & (side / kPatchSize - 1)) != 0) {
    throw UsageError("--side must be 32 * 2^n");
  }
  const std::vector<fs::path> files = list_png_files(args.input_dir);
  if (files.empty()) throw UsageError("'" + args.input_dir + "' holds no PNG images");
  std::error_code ec;
  fs::create_directories(args.output_dir, ec);
  if (ec) throw IoError("cannot create '" + args.output_dir + "'");
  for (const fs::path& f : files) write_png(fs::path(args.output_dir) / f.filename(), prepare_square(read_image(f), side));
  out << "prepared " << files.size() << " images at " << side << "x" << side << "\n";
  return kExitOk;
}

// ---------------------------------------------------------- synth-corpus

struct SynthArgs {
  std::string output_dir;
  int count = 20;
  int n = 3;
  std::uint64_t seed = 1;
};

int cmd_synth(const SynthArgs& args, std::ostream& out) {
  if (args.count < 1 || args.count > 100000) throw UsageError("--count must lie in [1, 100000]");
  if (args.n < kMinOrder || args.n > kMaxOrder) throw UsageError("--n must lie in [1, 8]");
  std::error_code ec;
  fs::create_directories(args.output_dir, ec);
  if (ec) throw IoError("cannot create '" + args.output_dir + "'");
  const int side = kPatchSize << args.n;
  for (int i = 0; i < args.count; ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "synth_%04d.png", i);
    write_png(fs::path(args.output_dir) / name, synthetic_image(side, args.seed + static_cast<std::uint64_t>(i)));
  }
  out << "wrote " << args.count << " images at " << side << "x" << side << "\n";
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractal-curve semi-fragile watermarking for tamper localization"};
  app.name("fractalmark");
  app.require_subcommand(1);

  KeygenArgs keygen;
  auto* c_keygen = app.add_subcommand("keygen", "Create a key file");
  c_keygen->add_option("--seed", keygen.seed, "Sample every parameter from this seed");
  c_keygen->add_option("--kind", keygen.kind, "Curve family")->check(CLI::IsMember({"hilbert", "zorder"}));
  c_keygen->add_option("--n", keygen.n, "Curve order (image side 32 * 2^n)");
  c_keygen->add_option("--r", keygen.r, "Rotation code 0-3");
  c_keygen->add_option("--m", keygen.m, "Mirror code 0-8");
  c_keygen->add_option("--o", keygen.o, "Order modification 0-3 (Hilbert only)");
  c_keygen->add_option("--x0", keygen.x0, "Logistic map seed in [0.1, 0.9]");
  c_keygen->add_option("--a", keygen.a, "Logistic map parameter in [3.7, 4.0)");
  c_keygen->add_option("--k", keygen.k, "Warm-up iterations in [100, 1000]");
  c_keygen->add_option("--d", keygen.d, "Digit position in [2, 20]");
  c_keygen->add_option("--out", keygen.out, "Key file to write (stdout when omitted)");

  EmbedArgs emb;
  auto* c_embed = app.add_subcommand("embed", "Embed the key's watermark into an image");
  c_embed->add_option("input", emb.input, "Input PNG or JPEG")->required();
  c_embed->add_option("output", emb.output, "Watermarked PNG")->required();
  c_embed->add_option("--key", emb.key, std::string("Key file (default $") + kKeyEnv + ")");
  c_embed->add_option("--delta", emb.delta, "Quantisation step");

  VerifyArgs ver;
  auto* c_verify = app.add_subcommand("verify", "Check an image against a key; exit 0 real, 1 fake");
  c_verify->add_option("input", ver.input, "Image to check")->required();
  c_verify->add_option("--key", ver.key, std::string("Key file (default $") + kKeyEnv + ")");
  c_verify->add_option("--tau", ver.tau, "Patch-rate threshold for a real verdict");
  c_verify->add_option("--delta", ver.delta, "Quantisation step used at embedding");
  c_verify->add_option("--overlay", ver.overlay, "Write a PNG with tampered patches tinted red");
  c_verify->add_option("--csv", ver.csv, "Append a report row to this CSV");

  AttackArgs att;
  auto* c_attack = app.add_subcommand("attack", "Apply one attack to an image");
  c_attack->add_option("input", att.input, "Input image")->required();
  c_attack->add_option("output", att.output, "Attacked PNG")->required();
  c_attack->add_option("--spec,-s", att.spec, "Attack, e.g. jpeg:q=80 or crop:pw=2,ph=2,seed=1")->required();
  c_attack->add_option("--donor", att.donor, "Donor image for splice");

  EvaluateArgs ev;
  auto* c_eval = app.add_subcommand("evaluate", "Run an attack grid over a corpus");
  c_eval->add_option("--corpus", ev.corpus, "Directory of PNG images")->required();
  c_eval->add_option("--key", ev.key, std::string("Key file (default $") + kKeyEnv + ")");
  c_eval->add_option("--attacks,-a", ev.attacks, "Attack specs (default: the benign set)");
  c_eval->add_option("--csv", ev.csv, "Per-image report CSV");
  c_eval->add_option("--summary", ev.summary, "Per-attack summary CSV");
  c_eval->add_option("--tau", ev.tau, "Patch-rate threshold for a real verdict");
  c_eval->add_option("--delta", ev.delta, "Quantisation step");
  c_eval->add_flag("--no-embed", ev.no_embed, "Verify the originals without embedding first");
  c_eval->add_option("--random-keys", ev.random_keys, "Use an independent sampled key per image, seeded from this");
  c_eval->add_option("--threads,-j", ev.threads, "Worker threads (default: all cores)");

  HeatmapArgs hm;
  auto* c_heat = app.add_subcommand("heatmap", "Aggregate report masks into a heat grid PNG");
  c_heat->add_option("reports", hm.reports, "Report CSVs from evaluate or verify")->required();
  c_heat->add_option("--out,-o", hm.output, "Output PNG")->required();
  c_heat->add_option("--attack", hm.attack, "Only rows with this attack name");
  c_heat->add_option("--cell", hm.cell, "Pixels per grid cell");

  PrepareArgs prep;
  auto* c_prep = app.add_subcommand("prepare", "Centre-crop and resize PNGs to 32 * 2^n squares");
  c_prep->add_option("input_dir", prep.input_dir)->required();
  c_prep->add_option("output_dir", prep.output_dir)->required();
  c_prep->add_option("--side", prep.side, "Output side in pixels");
  c_prep->add_option("--n", prep.n, "Output side 32 * 2^n (default 3)");

  SynthArgs syn;
  auto* c_synth = app.add_subcommand("synth-corpus", "Write a deterministic synthetic test corpus");
  c_synth->add_option("output_dir", syn.output_dir)->required();
  c_synth->add_option("--count", syn.count, "Number of images");
  c_synth->add_option("--n", syn.n, "Image side 32 * 2^n");
  c_synth->add_option("--seed", syn.seed, "Seed of the first image");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c_keygen->parsed()) return cmd_keygen(keygen, out);
    if (c_embed->parsed()) return cmd_embed(emb, out);
    if (c_verify->parsed()) return cmd_verify(ver, out);
    if (c_attack->parsed()) return cmd_attack(att, out);
    if (c_eval->parsed()) return cmd_evaluate(ev, out);
    if (c_heat->parsed()) return cmd_heatmap(hm, out);
    if (c_prep->parsed()) return cmd_prepare(prep, out);
    if (c_synth->parsed()) return cmd_synth(syn, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fractalmark::cli
