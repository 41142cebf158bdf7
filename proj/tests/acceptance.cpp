// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. All checks are exact.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "lsbxor/lsbxor.hpp"
#include "oracles.hpp"

using namespace lsbxor;

namespace {

struct Failure {
  std::string what;
};

void check(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::vector<std::uint8_t> pixels_of(const GrayImage& img) { return {img.pixels().begin(), img.pixels().end()}; }

std::vector<int> lsbs(const std::vector<std::uint8_t>& v, std::size_t n) {
  std::vector<int> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(v[i] & 1);
  return out;
}

std::vector<std::uint8_t> prefix(const std::vector<std::uint8_t>& v, std::size_t n) {
  return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)};
}

void golden_embedding() {
  const auto key = GrayImage::row(oracle::kTable1aKeyRow);
  const auto ks = split_image(key);
  check(ks.share1 == std::vector<std::uint8_t>{162, 158, 156, 154, 168}, "key share1 (table 1b)");
  check(ks.share2 == std::vector<std::uint8_t>{161, 156, 153, 161, 173}, "key share2 (table 1c)");

  const auto msg = byte_to_reversed_bits('I');
  const auto parts = split_odd_even(msg);
  check(oracle::as_ints(parts.odd) == std::vector<int>{1, 0, 0, 1}, "sm1 column (table 2a)");
  check(oracle::as_ints(parts.even) == std::vector<int>{0, 1, 0, 0}, "sm2 column (table 2b)");
  check(lsbs(ks.share1, 4) == std::vector<int>{0, 0, 0, 0}, "i1 key LSBs (table 2a)");
  check(lsbs(ks.share2, 4) == std::vector<int>{1, 0, 1, 1}, "i2 key LSBs (table 2b)");

  const auto stego = embed_bits(key, msg);
  const auto ss = split_image(stego);
  check(lsbs(ss.share1, 4) == std::vector<int>{1, 0, 0, 1}, "XOR column (table 2a)");
  check(lsbs(ss.share2, 4) == std::vector<int>{1, 1, 1, 1}, "XOR column (table 2b)");
  check(prefix(ss.share1, 4) == std::vector<std::uint8_t>{163, 158, 156, 155}, "S_Img1 (table 3a)");
  check(prefix(ss.share2, 4) == std::vector<std::uint8_t>{161, 157, 153, 161}, "S_Img2 (table 3b, row 4 = 161)");
  check(pixels_of(stego) == oracle::kTable3cStegoRow, "stego row (table 3c)");
}

void golden_detection() {
  const auto bits = extract_bits(GrayImage::row(oracle::kTable1aKeyRow), GrayImage::row(oracle::kTable3cStegoRow), 8);
  check(bits == BitStream{1, 0, 0, 1, 0, 0, 1, 0}, "extracted bits");
  const auto b = reversed_bits_to_byte(bits);
  check(b == 73 && static_cast<char>(b) == 'I', "decoded byte");
}

// Shared by the round-trip and pixel-law criteria.
struct TrialStats {
  int raw_trials = 0;
  int framed_trials = 0;
  bool pixel_law_ok = true;
  std::string pixel_law_failure;
};

void record_pixel_law(TrialStats& st, const GrayImage& key, const GrayImage& stego, std::size_t nbits) {
  for (std::size_t k = 0; k < key.size(); ++k) {
    const int d = int{stego.pixels()[k]} - int{key.pixels()[k]};
    const bool ok = std::abs(d) <= 1 && (stego.pixels()[k] & 0xFE) == (key.pixels()[k] & 0xFE) &&
                    (k < nbits || d == 0);
    if (!ok && st.pixel_law_ok) {
      st.pixel_law_ok = false;
      st.pixel_law_failure = "pixel " + std::to_string(k) + " violates the law";
    }
  }
}

TrialStats& trials() {
  static TrialStats st;
  return st;
}

void round_trip_suite() {
  auto& st = trials();
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<std::size_t> side(1, 64);
  for (int t = 0; t < 1000; ++t) {
    const auto key = oracle::random_image(rng, side(rng), side(rng));
    std::uniform_int_distribution<std::size_t> len(0, capacity_bits(key));
    const auto msg = oracle::as_stream(oracle::random_bits(rng, len(rng)));
    const auto stego = embed_bits(key, msg);
    record_pixel_law(st, key, stego, msg.size());
    check(extract_bits(key, stego, msg.size()) == msg, "raw trial " + std::to_string(t));
    ++st.raw_trials;
  }
  for (int t = 0; t < 1000; ++t) {
    GrayImage key(1, 1);
    do {
      key = oracle::random_image(rng, side(rng), side(rng));
    } while (capacity_bits(key) < kFrameHeaderBits);
    const std::size_t max_body = capacity_bits(key) / 8 - kFrameHeaderBytes;
    std::uniform_int_distribution<std::size_t> len(0, max_body);
    const auto body = oracle::random_bytes(rng, len(rng));
    const auto frame = frame_text(body);
    const auto stego = embed_frame(key, frame);
    record_pixel_law(st, key, stego, frame.size() * 8);
    const auto got = extract_frame(key, stego);
    check(got.kind == PayloadKind::text && got.body == body, "framed trial " + std::to_string(t));
    ++st.framed_trials;
  }
  check(st.raw_trials >= 1000 && st.framed_trials >= 1000, "trial count");
}

void pixel_law() {
  const auto& st = trials();
  check(st.raw_trials + st.framed_trials >= 2000, "round-trip trials must run first");
  check(st.pixel_law_ok, st.pixel_law_failure);
}

void oracle_equivalence() {
  std::mt19937 rng(0xface);
  std::uniform_int_distribution<std::size_t> side(1, 64);
  for (int t = 0; t < 1000; ++t) {
    const auto key = oracle::random_image(rng, side(rng), side(rng));
    std::uniform_int_distribution<std::size_t> len(0, capacity_bits(key));
    const auto raw = oracle::random_bits(rng, len(rng));
    check(pixels_of(embed_bits(key, oracle::as_stream(raw))) == oracle::direct_embed(pixels_of(key), raw),
          "instance " + std::to_string(t));
  }
}

void codec_exhaustive() {
  for (int b = 0; b < 256; ++b) {
    const auto u = static_cast<std::uint8_t>(b);
    check(oracle::as_ints(byte_to_reversed_bits(u)) == oracle::reversed_bits(u), "reversal of " + std::to_string(b));
    check(reversed_bits_to_byte(byte_to_reversed_bits(u)) == u, "inverse of " + std::to_string(b));
  }
  std::mt19937 rng(1024);
  for (std::size_t n = 0; n <= 1024; ++n) {
    const auto raw = oracle::random_bits(rng, n);
    const auto s = oracle::as_stream(raw);
    const auto parts = split_odd_even(s);
    const auto [a, b] = oracle::alternate_take(raw);
    check(oracle::as_ints(parts.odd) == a && oracle::as_ints(parts.even) == b, "split length " + std::to_string(n));
    check(interleave(parts) == s, "interleave length " + std::to_string(n));
  }
}

void paper_messages() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937 rng(4);
  const auto key = oracle::random_image(rng, 100, 100);
  const std::string long_text = "Department of Computer Science and Engineering - University of Kalyani";
  for (const std::string& text : {std::string("I"), std::string("Computer"), long_text}) {
    const auto frame = frame_text(text);
    const auto got = extract_frame(key, embed_frame(key, frame));
    check(got.kind == PayloadKind::text && got.text() == text, "text '" + text + "'");
  }
  // 70 ASCII bytes: 8 * (7 + 70) = 616 frame bits.
  check(long_text.size() == 70, "long text is 70 bytes");
  const auto long_bits = frame_text(long_text).size() * 8;
  check(long_bits == 8 * (kFrameHeaderBytes + long_text.size()) && long_bits == 616, "long text needs 616 bits");
  check(long_bits <= capacity_bits(key) && capacity_bits(key) == 10000, "616 bits fit the 10000-bit capacity");
  const auto logo = oracle::random_image(rng, 10, 10);
  const auto got = extract_frame(key, embed_frame(key, frame_image(logo)));
  check(got.image && *got.image == logo, "10x10 logo");
  const auto elapsed = std::chrono::steady_clock::now() - start;
  check(elapsed < std::chrono::seconds(1), "runtime under 1 s");
}

void analysis_reproduction() {
  const auto r = compare(GrayImage::row(oracle::kTable1aKeyRow), GrayImage::row(oracle::kTable3cStegoRow));
  check(r.changed_pixels == 3, "changed_pixels = 3");
  check(r.max_abs_pixel_delta == 1, "max_abs_pixel_delta = 1");
  std::mt19937 rng(0xa11);
  std::uniform_int_distribution<std::size_t> side(1, 64);
  for (int t = 0; t < 1000; ++t) {
    const auto key = oracle::random_image(rng, side(rng), side(rng));
    std::uniform_int_distribution<std::size_t> len(0, capacity_bits(key));
    const auto stego = embed_bits(key, oracle::as_stream(oracle::random_bits(rng, len(rng))));
    const auto d = compare(key, stego);
    check(d.histogram_a.total() == key.size() && d.histogram_b.total() == key.size(), "mass conservation");
    check(d.histogram_l1() <= 2 * d.changed_pixels, "L1 bound, trial " + std::to_string(t));
  }
}

GrayImage fixture_key() {
  std::vector<std::uint8_t> px(20 * 20);
  for (std::size_t i = 0; i < px.size(); ++i) px[i] = static_cast<std::uint8_t>((i * 37 + 11) % 256);
  return GrayImage(20, 20, std::move(px));
}

void wrong_key_rejection() {
  const auto key = fixture_key();
  const auto stego = embed_frame(key, frame_text("Computer"));
  check(extract_frame(key, stego).text() == "Computer", "true key recovers payload");
  for (std::size_t k = 0; k < 16; ++k) {
    auto wrong = key;
    wrong.pixels()[k] ^= 1u;
    bool rejected = false;
    try {
      extract_frame(wrong, stego);
    } catch (const Error& e) {
      rejected = e.code() == Errc::authentication_failure;
    }
    check(rejected, "flipped header LSB at pixel " + std::to_string(k));
  }
  bool rejected = false;
  try {
    extract_frame(key, key);
  } catch (const Error& e) {
    rejected = e.code() == Errc::authentication_failure;
  }
  check(rejected, "stego = key");
}

std::vector<std::uint8_t> golden(const std::string& name) {
  std::ifstream in(std::string(LSBXOR_GOLDEN_DIR) + "/" + name, std::ios::binary);
  check(static_cast<bool>(in), "golden file " + name);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void pgm_conformance() {
  std::mt19937 rng(0x9);
  for (int t = 0; t < 500; ++t) {
    const auto img = oracle::random_image(rng, 64);
    check(read_pgm(write_pgm(img, PgmVariant::ascii_p2)) == img, "P2 round trip");
    check(read_pgm(write_pgm(img, PgmVariant::binary_p5)) == img, "P5 round trip");
  }
  const auto key = GrayImage::row(oracle::kTable1aKeyRow);
  check(write_pgm(key, PgmVariant::ascii_p2) == golden("table1a_key_p2.pgm"), "P2 golden");
  check(write_pgm(key, PgmVariant::binary_p5) == golden("table1a_key_p5.pgm"), "P5 golden");
  check(write_pgm(GrayImage::row(oracle::kTable3cStegoRow)) == golden("table3c_stego_p5.pgm"), "stego golden");
  check(write_pgm(GrayImage(3, 2, {0, 128, 255, 7, 8, 9}), PgmVariant::ascii_p2) == golden("grid3x2_p2.pgm"),
        "grid golden");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria{
      {"golden embedding (tables 1-3)", golden_embedding},
      {"golden detection (tables 4-5)", golden_detection},
      {"round trip, 1000 raw + 1000 framed trials", round_trip_suite},
      {"+/-1 pixel law and untouched tail", pixel_law},
      {"share pipeline equals direct LSB-XOR formula", oracle_equivalence},
      {"bit codec exhaustive inversion", codec_exhaustive},
      {"example messages end to end on 100x100 key", paper_messages},
      {"histogram comparison statistics", analysis_reproduction},
      {"wrong-key rejection", wrong_key_rejection},
      {"PGM conformance and golden files", pgm_conformance},
  };

  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    try {
      fn();
      std::cout << "PASS  " << name << "\n";
    } catch (const Failure& f) {
      ++failed;
      std::cout << "FAIL  " << name << ": " << f.what << "\n";
    } catch (const std::exception& e) {
      ++failed;
      std::cout << "FAIL  " << name << ": unexpected exception: " << e.what() << "\n";
    }
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
