// lsbxor: hide and recover text or image payloads in grayscale PGM key images.
//
// Exit status: 0 success, 1 usage, 2 data/authentication, 3 I/O.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lsbxor/lsbxor.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("error while reading '" + path + "'");
  return bytes;
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("error while writing '" + path + "'");
}

lsbxor::GrayImage read_image(const std::string& path) { return lsbxor::read_pgm(read_file(path)); }

lsbxor::PgmVariant variant_for(bool ascii) {
  return ascii ? lsbxor::PgmVariant::ascii_p2 : lsbxor::PgmVariant::binary_p5;
}

// Share files are single-row PGMs.
std::vector<std::uint8_t> read_share(const std::string& path) {
  const auto img = read_image(path);
  if (img.height() != 1) {
    throw lsbxor::Error(lsbxor::Errc::malformed_shares, "share file '" + path + "' is not a single-row image");
  }
  return {img.pixels().begin(), img.pixels().end()};
}

struct EmbedOptions {
  std::string key, in, out, mode = "text";
  std::optional<std::size_t> raw_len;
  bool ascii = false;
};

int run_embed(const EmbedOptions& o) {
  const auto key = read_image(o.key);
  auto secret = read_file(o.in);

  std::vector<std::uint8_t> stream;
  if (o.mode == "raw") {
    if (o.raw_len) {
      if (*o.raw_len > secret.size()) {
        throw UsageError("--raw-len " + std::to_string(*o.raw_len) + " exceeds the " +
                         std::to_string(secret.size()) + "-byte secret");
      }
      secret.resize(*o.raw_len);
    }
    stream = std::move(secret);
  } else if (o.mode == "text") {
    stream = lsbxor::frame_text(secret);
  } else {
    stream = lsbxor::frame_image(lsbxor::read_pgm(secret));
  }

  const auto bits = lsbxor::bytes_to_bits(stream);
  const auto stego = lsbxor::embed_bits(key, bits);
  write_file(o.out, lsbxor::write_pgm(stego, variant_for(o.ascii)));
  std::cout << "capacity used " << bits.size() << " of " << lsbxor::capacity_bits(key) << " bits\n";
  return 0;
}

struct ExtractOptions {
  std::string key, share1, share2, stego, out, mode = "framed";
  std::optional<std::size_t> raw_len;
  bool ascii = false;
};

template <typename Key>
std::vector<std::uint8_t> extract_with(const Key& key, const lsbxor::GrayImage& stego, const ExtractOptions& o) {
  if (o.mode == "raw") {
    if (!o.raw_len) throw UsageError("--mode raw requires --raw-len");
    return lsbxor::bits_to_bytes(lsbxor::extract_bits(key, stego, *o.raw_len * 8));
  }
  const auto frame = lsbxor::extract_frame(key, stego);
  if (o.mode == "text" && frame.kind != lsbxor::PayloadKind::text) {
    throw lsbxor::Error(lsbxor::Errc::unknown_kind, "stego carries an image payload, not text");
  }
  if (o.mode == "image" && frame.kind != lsbxor::PayloadKind::image) {
    throw lsbxor::Error(lsbxor::Errc::unknown_kind, "stego carries a text payload, not an image");
  }
  if (frame.image) return lsbxor::write_pgm(*frame.image, variant_for(o.ascii));
  return frame.body;
}

int run_extract(const ExtractOptions& o) {
  const auto stego = read_image(o.stego);
  std::vector<std::uint8_t> recovered;
  if (!o.key.empty()) {
    recovered = extract_with(read_image(o.key), stego, o);
  } else {
    if (o.share1.empty()) throw UsageError("either --key or --key-share1 is required");
    auto share2 = o.share2.empty() ? std::vector<std::uint8_t>{} : read_share(o.share2);
    recovered = extract_with(lsbxor::make_shares(read_share(o.share1), std::move(share2)), stego, o);
  }
  write_file(o.out, recovered);
  std::cout << "recovered " << recovered.size() << " bytes\n";
  return 0;
}

int run_share(const std::string& key_path, const std::string& out1, const std::string& out2, bool ascii) {
  const auto shares = lsbxor::split_image(read_image(key_path));
  write_file(out1, lsbxor::write_pgm(lsbxor::GrayImage::row(shares.share1), variant_for(ascii)));
  if (shares.share2.empty()) {
    std::cerr << "notice: key has a single pixel, share2 is empty and was not written\n";
  } else {
    write_file(out2, lsbxor::write_pgm(lsbxor::GrayImage::row(shares.share2), variant_for(ascii)));
  }
  std::cout << "share1 " << shares.share1.size() << " pixels, share2 " << shares.share2.size() << " pixels\n";
  return 0;
}

int run_analyze(const std::string& a_path, const std::string& b_path, const std::string& csv_path) {
  const auto report = lsbxor::compare(read_image(a_path), read_image(b_path));
  const auto csv = lsbxor::to_csv(report);
  write_file(csv_path, std::vector<std::uint8_t>(csv.begin(), csv.end()));
  std::cout << "changed_pixels " << report.changed_pixels << "\n"
            << "max_abs_pixel_delta " << report.max_abs_pixel_delta << "\n"
            << "histogram_l1 " << report.histogram_l1() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LSB-XOR steganography over grayscale PGM key images"};
  app.require_subcommand(1);

  EmbedOptions eo;
  auto* embed = app.add_subcommand("embed", "Hide a secret in a key image");
  embed->add_option("--key", eo.key, "Key image (PGM)")->required();
  embed->add_option("--in", eo.in, "Secret: text/bytes, or PGM for --mode image")->required();
  embed->add_option("--out", eo.out, "Stego image to write")->required();
  embed->add_option("--mode", eo.mode, "Payload mode")->check(CLI::IsMember({"text", "image", "raw"}));
  embed->add_option("--raw-len", eo.raw_len, "Raw mode: embed only the first N bytes");
  embed->add_flag("--ascii", eo.ascii, "Write P2 instead of P5");

  ExtractOptions xo;
  auto* extract = app.add_subcommand("extract", "Recover a secret from a stego image");
  auto* key_opt = extract->add_option("--key", xo.key, "Key image (PGM)");
  auto* s1_opt = extract->add_option("--key-share1", xo.share1, "First key share (single-row PGM)");
  auto* s2_opt = extract->add_option("--key-share2", xo.share2, "Second key share (single-row PGM)");
  key_opt->excludes(s1_opt)->excludes(s2_opt);
  s2_opt->needs(s1_opt);
  extract->add_option("--stego", xo.stego, "Stego image (PGM)")->required();
  extract->add_option("--out", xo.out, "Recovered secret")->required();
  extract->add_option("--mode", xo.mode, "framed (any kind), text, image or raw")
      ->check(CLI::IsMember({"framed", "text", "image", "raw"}));
  extract->add_option("--raw-len", xo.raw_len, "Raw mode: number of bytes to recover");
  extract->add_flag("--ascii", xo.ascii, "Write recovered images as P2");

  std::string share_key, out1, out2;
  bool share_ascii = false;
  auto* share = app.add_subcommand("share", "Split a key image into its two shares");
  share->add_option("--key", share_key, "Key image (PGM)")->required();
  share->add_option("--out1", out1, "First share (odd positions)")->required();
  share->add_option("--out2", out2, "Second share (even positions)")->required();
  share->add_flag("--ascii", share_ascii, "Write P2 instead of P5");

  std::string an_key, an_stego, an_csv;
  auto* analyze = app.add_subcommand("analyze", "Histogram comparison of two images");
  analyze->add_option("--key", an_key, "Reference image (PGM)")->required();
  analyze->add_option("--stego", an_stego, "Compared image (PGM)")->required();
  analyze->add_option("--csv", an_csv, "CSV report to write")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*embed) return run_embed(eo);
    if (*extract) return run_extract(xo);
    if (*share) return run_share(share_key, out1, out2, share_ascii);
    if (*analyze) return run_analyze(an_key, an_stego, an_csv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const lsbxor::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
