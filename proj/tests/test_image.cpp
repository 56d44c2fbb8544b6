#include "helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <fstream>

using namespace fractalmark;

TEST_CASE("geometry") {
  CHECK(order_for_image(ImageBuffer::filled(64, 64, 0, 0, 0)) == 1);
  CHECK(order_for_image(ImageBuffer::filled(256, 256, 0, 0, 0)) == 3);
  CHECK_THROWS_AS(order_for_image(ImageBuffer::filled(300, 300, 0, 0, 0)), ParameterError);
  CHECK_THROWS_AS(order_for_image(ImageBuffer::filled(32, 32, 0, 0, 0)), ParameterError);
  CHECK_THROWS_AS(order_for_image(ImageBuffer::filled(96, 96, 0, 0, 0)), ParameterError);
  CHECK_THROWS_AS(order_for_image(ImageBuffer::filled(256, 128, 0, 0, 0)), ParameterError);
  CHECK_THROWS_AS(check_same_shape(ImageBuffer::filled(4, 4, 0, 0, 0), ImageBuffer::filled(4, 5, 0, 0, 0)),
                  ParameterError);
}

TEST_CASE("luma and channel views") {
  ImageBuffer img = ImageBuffer::filled(4, 2, 10, 20, 30);
  img.at(3, 1, 0) = 200;
  CHECK(channel(img, 0)(1, 3) == 200);
  CHECK(channel(img, 2)(0, 0) == 30);
  const auto y = luma(img);
  CHECK(y(0, 0) == doctest::Approx(0.299 * 10 + 0.587 * 20 + 0.114 * 30));
  CHECK(to_byte(-3.0) == 0);
  CHECK(to_byte(254.5) == 255);
  CHECK(to_byte(12.49) == 12);
}

TEST_CASE("psnr and ssim") {
  const ImageBuffer img = synthetic_image(128, 3);
  CHECK(std::isinf(psnr(img, img)));
  CHECK(ssim(img, img) == doctest::Approx(1.0));
  ImageBuffer plus = img;
  for (auto& v : plus.data) v = static_cast<std::uint8_t>(v + 1);
  CHECK(psnr(img, plus) == doctest::Approx(10.0 * std::log10(255.0 * 255.0)).epsilon(1e-9));
  CHECK(psnr(img, plus) == doctest::Approx(48.1308).epsilon(1e-4));
  CHECK(ssim(img, testing_support::noise_image(128, 1)) < 0.2);
  CHECK_THROWS_AS(psnr(img, ImageBuffer::filled(64, 64, 0, 0, 0)), ParameterError);
}

TEST_CASE("png round trip") {
  const ImageBuffer img = testing_support::noise_image(96, 5);
  CHECK(decode_png(encode_png(img)) == img);
  const auto dir = testing_support::scratch_dir("image");
  write_png(dir / "x.png", img);
  CHECK(read_image(dir / "x.png") == img);
}

TEST_CASE("jpeg codec") {
  const ImageBuffer img = synthetic_image(128, 8);
  const std::vector<std::uint8_t> bytes = encode_jpeg(img, 80);
  CHECK(bytes.size() < img.data.size());
  const ImageBuffer back = decode_jpeg(bytes);
  CHECK(back.width == 128);
  CHECK(psnr(img, back) > 30.0);
  CHECK(encode_jpeg(img, 80) == bytes);
  CHECK(psnr(img, decode_jpeg(encode_jpeg(img, 95))) > psnr(img, decode_jpeg(encode_jpeg(img, 20))));

  const auto dir = testing_support::scratch_dir("jpeg");
  {
    std::ofstream f(dir / "x.jpg", std::ios::binary);
    f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  }
  CHECK(read_image(dir / "x.jpg") == back);
}

TEST_CASE("io errors") {
  const auto dir = testing_support::scratch_dir("ioerr");
  CHECK_THROWS_AS(read_image(dir / "none.png"), IoError);
  {
    std::ofstream f(dir / "junk.png", std::ios::binary);
    f << "definitely not an image";
  }
  CHECK_THROWS_AS(read_image(dir / "junk.png"), IoError);
  const std::vector<std::uint8_t> truncated{0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n', 0, 0};
  CHECK_THROWS_AS(decode_png(truncated), IoError);
  const std::vector<std::uint8_t> bad_jpeg{0xFF, 0xD8, 0xFF, 0x00, 0x01};
  CHECK_THROWS_AS(decode_jpeg(bad_jpeg), IoError);
  CHECK_THROWS_AS(write_png(dir / "no_such_dir" / "x.png", ImageBuffer::filled(4, 4, 0, 0, 0)), IoError);
}

TEST_CASE("corpus helpers") {
  const ImageBuffer a = synthetic_image(256, 1);
  CHECK(a == synthetic_image(256, 1));
  CHECK(a != synthetic_image(256, 2));
  for (std::uint8_t v : a.data) REQUIRE((v >= 8 && v <= 247));
  CHECK(synthetic_corpus(3, 64, 10)[2] == synthetic_image(64, 12));

  const ImageBuffer wide = testing_support::noise_image(64, 1);
  ImageBuffer rect = ImageBuffer::filled(700, 500, 0, 0, 0);
  for (int y = 0; y < 500; ++y)
    for (int x = 0; x < 700; ++x)
      for (int c = 0; c < 3; ++c) rect.at(x, y, c) = static_cast<std::uint8_t>((x + 2 * y + c) & 0xFF);
  const ImageBuffer sq = prepare_square(rect, 256);
  CHECK(sq.width == 256);
  CHECK(sq.height == 256);
  CHECK(prepare_square(wide, 64) == wide);
  CHECK(prepare_square(synthetic_image(100, 1), 128).width == 128);

  const auto dir = testing_support::scratch_dir("corpus");
  write_png(dir / "b.png", wide);
  write_png(dir / "a.PNG", wide);
  std::ofstream(dir / "c.txt") << "x";
  const auto files = list_png_files(dir);
  REQUIRE(files.size() == 2);
  CHECK(files[0].filename() == "a.PNG");
  CHECK_THROWS_AS(list_png_files(dir / "nope"), IoError);
}
