#pragma once

// Text encodings for sequences and the grayscale PGM rendering.

#include "lowdisc/core.hpp"
#include "lowdisc/cyclic_sequence.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lowdisc {

/// DIGITS: one decimal digit per symbol, no separators (k <= 10).
/// CSV: comma-separated decimal symbols, any k.
enum class SequenceTextFormat { Digits, Csv };

std::optional<SequenceTextFormat> parse_format_name(std::string_view name);
std::string_view format_name(SequenceTextFormat format);

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what), offset_(offset) {}
  /// Byte offset into the input.
  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

/// Whitespace is ignored in both formats. Throws ParseError on malformed
/// input or a symbol >= k, and std::invalid_argument for DIGITS with k > 10.
CyclicSequence parse_sequence(std::string_view text, AlphabetSize k,
                              SequenceTextFormat format);

/// Encodes without a trailing newline.
std::string render_sequence(std::span<const Symbol> symbols, SequenceTextFormat format);

/// Incremental encoder for streamed output.
class SequenceWriter {
public:
  /// Throws std::invalid_argument for DIGITS with k > 10.
  SequenceWriter(std::ostream& out, SequenceTextFormat format, AlphabetSize k);

  void put(Symbol s);
  /// Writes the terminating newline and flushes.
  void finish();

private:
  std::ostream& out_;
  SequenceTextFormat format_;
  bool first_ = true;
};

struct GrayImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> pixels; // row-major
};

/// round(255 * (1 - v / (k - 1))): 0 is white, k-1 is black.
std::uint8_t pixel_value(Symbol v, AlphabetSize k);

/// Lays a de Bruijn sequence of order n out row-major on a
/// k^floor(n/2) wide by k^ceil(n/2) high grid.
GrayImage render_image(const CyclicSequence& w, std::size_t order);

/// Binary PGM (P5, maxval 255).
void write_pgm(std::ostream& out, const GrayImage& image);

} // namespace lowdisc
