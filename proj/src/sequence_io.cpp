#include "lowdisc/sequence_io.hpp"

#include <cmath>

namespace lowdisc {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

void require_digits_alphabet(AlphabetSize k) {
  if (k.value() > 10) {
    throw std::invalid_argument("digits format needs base <= 10; use csv");
  }
}

void check_range(std::uint64_t v, std::size_t index, std::size_t offset, AlphabetSize k) {
  if (v >= k.value()) {
    throw ParseError("symbol " + std::to_string(v) + " at index " + std::to_string(index) +
                         " (offset " + std::to_string(offset) +
                         ") out of range for base " + std::to_string(k.value()),
                     offset);
  }
}

std::vector<Symbol> parse_digits(std::string_view text, AlphabetSize k) {
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (is_space(c)) continue;
    if (c < '0' || c > '9') {
      throw ParseError("invalid character '" + std::string(1, c) + "' at offset " +
                           std::to_string(i),
                       i);
    }
    check_range(static_cast<std::uint64_t>(c - '0'), out.size(), i, k);
    out.push_back(static_cast<Symbol>(c - '0'));
  }
  return out;
}

std::vector<Symbol> parse_csv(std::string_view text, AlphabetSize k) {
  std::vector<Symbol> out;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && is_space(text[i])) ++i;
  };
  skip_space();
  if (i == text.size()) return out;
  while (true) {
    skip_space();
    const std::size_t start = i;
    std::uint64_t v = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
      if (v > 0xffffffffULL) throw ParseError("number too large at offset " + std::to_string(start), start);
      ++i;
    }
    if (i == start) {
      if (i == text.size()) throw ParseError("empty field at end of input", i);
      throw ParseError("expected a number at offset " + std::to_string(i) + ", found '" +
                           std::string(1, text[i]) + "'",
                       i);
    }
    check_range(v, out.size(), start, k);
    out.push_back(static_cast<Symbol>(v));
    skip_space();
    if (i == text.size()) break;
    if (text[i] != ',') {
      throw ParseError("expected ',' at offset " + std::to_string(i) + ", found '" +
                           std::string(1, text[i]) + "'",
                       i);
    }
    ++i;
  }
  return out;
}

} // namespace

std::optional<SequenceTextFormat> parse_format_name(std::string_view name) {
  if (name == "digits") return SequenceTextFormat::Digits;
  if (name == "csv") return SequenceTextFormat::Csv;
  return std::nullopt;
}

std::string_view format_name(SequenceTextFormat format) {
  return format == SequenceTextFormat::Digits ? "digits" : "csv";
}

CyclicSequence parse_sequence(std::string_view text, AlphabetSize k,
                              SequenceTextFormat format) {
  std::vector<Symbol> symbols;
  if (format == SequenceTextFormat::Digits) {
    require_digits_alphabet(k);
    symbols = parse_digits(text, k);
  } else {
    symbols = parse_csv(text, k);
  }
  if (symbols.empty()) throw ParseError("empty sequence", 0);
  return CyclicSequence(std::move(symbols), k);
}

std::string render_sequence(std::span<const Symbol> symbols, SequenceTextFormat format) {
  std::string out;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (format == SequenceTextFormat::Digits) {
      out.push_back(static_cast<char>('0' + symbols[i]));
    } else {
      if (i > 0) out.push_back(',');
      out += std::to_string(symbols[i]);
    }
  }
  return out;
}

SequenceWriter::SequenceWriter(std::ostream& out, SequenceTextFormat format, AlphabetSize k)
    : out_(out), format_(format) {
  if (format == SequenceTextFormat::Digits) require_digits_alphabet(k);
}

void SequenceWriter::put(Symbol s) {
  if (format_ == SequenceTextFormat::Digits) {
    out_.put(static_cast<char>('0' + s));
  } else {
    if (!first_) out_.put(',');
    out_ << s;
  }
  first_ = false;
}

void SequenceWriter::finish() {
  out_.put('\n');
  out_.flush();
}

std::uint8_t pixel_value(Symbol v, AlphabetSize k) {
  const double shade = 255.0 * (1.0 - static_cast<double>(v) / (k.value() - 1));
  return static_cast<std::uint8_t>(std::lround(shade));
}

GrayImage render_image(const CyclicSequence& w, std::size_t order) {
  const AlphabetSize k = w.alphabet();
  GrayImage image;
  image.width = checked_power(k, order / 2);
  image.height = checked_power(k, order - order / 2);
  if (image.width == 0 || image.height == 0 || image.width * image.height != w.size()) {
    throw std::invalid_argument("sequence length does not match k^order");
  }
  image.pixels.reserve(w.size());
  for (Symbol s : w.symbols()) image.pixels.push_back(pixel_value(s, k));
  return image;
}

void write_pgm(std::ostream& out, const GrayImage& image) {
  out << "P5\n" << image.width << ' ' << image.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(image.pixels.data()),
            static_cast<std::streamsize>(image.pixels.size()));
}

} // namespace lowdisc
