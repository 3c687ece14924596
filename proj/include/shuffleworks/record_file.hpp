#pragma once

/**
 * @file record_file.hpp
 * @brief Fixed-size record container used by the command-line tool.
 *
 * Layout (all integers little-endian):
 *
 *   offset  size  field
 *        0     4  magic "IVSH"
 *        4     1  format version (1)
 *        5     8  element count N
 *       13     4  arity k
 *       17     4  record size R in bytes
 *       21   N*R  records
 */

#include <fcntl.h>
#include <sys/mman.h>
#include <sys/stat.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <cerrno>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <istream>
#include <iterator>
#include <ostream>
#include <span>
#include <string>
#include <system_error>
#include <vector>

#include "shuffleworks/errors.hpp"

namespace shuffleworks {

inline constexpr std::array<char, 4> kRecordMagic = {'I', 'V', 'S', 'H'};
inline constexpr std::uint8_t kRecordVersion = 1;
inline constexpr std::size_t kRecordHeaderSize = 21;

struct RecordHeader {
  std::uint64_t count = 0;
  std::uint32_t arity = 0;
  std::uint32_t record_size = 0;

  /// N*R, or OverflowError.
  std::size_t body_size() const {
    std::size_t total = 0;
    if (__builtin_mul_overflow(count, std::uint64_t{record_size}, &total)) {
      throw OverflowError("record body size N*R overflows");
    }
    return total;
  }

  friend bool operator==(const RecordHeader&, const RecordHeader&) = default;
};

namespace detail {

template <class U>
void put_le(std::uint8_t* out, U value) {
  for (std::size_t b = 0; b < sizeof(U); ++b) out[b] = static_cast<std::uint8_t>(value >> (8 * b));
}

template <class U>
U get_le(const std::uint8_t* in) {
  U value = 0;
  for (std::size_t b = 0; b < sizeof(U); ++b) value |= static_cast<U>(in[b]) << (8 * b);
  return value;
}

}  // namespace detail

inline std::array<std::uint8_t, kRecordHeaderSize> encode_header(const RecordHeader& h) {
  std::array<std::uint8_t, kRecordHeaderSize> out{};
  std::copy(kRecordMagic.begin(), kRecordMagic.end(), out.begin());
  out[4] = kRecordVersion;
  detail::put_le(out.data() + 5, h.count);
  detail::put_le(out.data() + 13, h.arity);
  detail::put_le(out.data() + 17, h.record_size);
  return out;
}

inline RecordHeader decode_header(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kRecordHeaderSize) throw ParseError("record file header truncated");
  if (!std::equal(kRecordMagic.begin(), kRecordMagic.end(), bytes.begin(),
                  [](char a, std::uint8_t b) { return static_cast<std::uint8_t>(a) == b; })) {
    throw ParseError("bad record file magic (expected IVSH)");
  }
  if (bytes[4] != kRecordVersion) {
    throw ParseError("unsupported record file version " + std::to_string(bytes[4]));
  }
  RecordHeader h;
  h.count = detail::get_le<std::uint64_t>(bytes.data() + 5);
  h.arity = detail::get_le<std::uint32_t>(bytes.data() + 13);
  h.record_size = detail::get_le<std::uint32_t>(bytes.data() + 17);
  if (h.record_size == 0) throw ParseError("record size must be positive");
  return h;
}

struct RecordFile {
  RecordHeader header;
  std::vector<std::uint8_t> body;

  std::span<std::uint8_t> record(std::size_t i) {
    return {body.data() + i * header.record_size, header.record_size};
  }
};

inline RecordFile read_record_file(std::istream& in) {
  std::array<std::uint8_t, kRecordHeaderSize> raw{};
  in.read(reinterpret_cast<char*>(raw.data()), raw.size());
  if (in.gcount() != static_cast<std::streamsize>(raw.size())) {
    throw ParseError("record file header truncated");
  }
  RecordFile file{decode_header(raw), {}};
  const std::size_t expected = file.header.body_size();
  file.body.resize(expected);
  in.read(reinterpret_cast<char*>(file.body.data()), static_cast<std::streamsize>(expected));
  if (static_cast<std::size_t>(in.gcount()) != expected) {
    throw ParseError("record body truncated: expected " + std::to_string(expected) + " bytes");
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw ParseError("trailing bytes after " + std::to_string(file.header.count) + " records");
  }
  return file;
}

inline void write_record_file(std::ostream& out, const RecordFile& file) {
  if (file.body.size() != file.header.body_size()) {
    throw SizeMismatch("record body does not match header");
  }
  const auto raw = encode_header(file.header);
  out.write(reinterpret_cast<const char*>(raw.data()), raw.size());
  out.write(reinterpret_cast<const char*>(file.body.data()),
            static_cast<std::streamsize>(file.body.size()));
}

/// Byte buffer viewed as consecutive records of a fixed size.
class RecordView {
 public:
  RecordView(std::span<std::uint8_t> bytes, std::size_t record_size)
      : bytes_(bytes), record_size_(record_size) {
    if (record_size == 0 || bytes.size() % record_size != 0) {
      throw SizeMismatch("buffer is not a whole number of records");
    }
  }

  std::size_t size() const noexcept { return bytes_.size() / record_size_; }
  std::size_t record_size() const noexcept { return record_size_; }
  std::span<std::uint8_t> bytes() const noexcept { return bytes_; }

  void swap(std::size_t i, std::size_t j) const noexcept {
    std::uint8_t* a = bytes_.data() + i * record_size_;
    std::uint8_t* b = bytes_.data() + j * record_size_;
    if (record_size_ == 8) {
      std::uint64_t x, y;
      std::memcpy(&x, a, 8);
      std::memcpy(&y, b, 8);
      std::memcpy(a, &y, 8);
      std::memcpy(b, &x, 8);
      return;
    }
    std::swap_ranges(a, a + record_size_, b);
  }

 private:
  std::span<std::uint8_t> bytes_;
  std::size_t record_size_;
};

/// A record file mapped read-write, so records can be swapped in the file.
class MappedRecordFile {
 public:
  explicit MappedRecordFile(const std::string& path) {
    fd_ = ::open(path.c_str(), O_RDWR);
    if (fd_ < 0) throw std::system_error(errno, std::generic_category(), "open " + path);
    struct stat st {};
    if (::fstat(fd_, &st) != 0) {
      const int err = errno;
      ::close(fd_);
      throw std::system_error(err, std::generic_category(), "stat " + path);
    }
    length_ = static_cast<std::size_t>(st.st_size);
    if (length_ < kRecordHeaderSize) {
      ::close(fd_);
      throw ParseError("record file header truncated");
    }
    void* p = ::mmap(nullptr, length_, PROT_READ | PROT_WRITE, MAP_SHARED, fd_, 0);
    if (p == MAP_FAILED) {
      const int err = errno;
      ::close(fd_);
      throw std::system_error(err, std::generic_category(), "mmap " + path);
    }
    data_ = static_cast<std::uint8_t*>(p);
    try {
      header_ = decode_header({data_, kRecordHeaderSize});
      if (length_ - kRecordHeaderSize != header_.body_size()) {
        throw ParseError("record body length does not match header");
      }
    } catch (...) {
      release();
      throw;
    }
  }

  MappedRecordFile(const MappedRecordFile&) = delete;
  MappedRecordFile& operator=(const MappedRecordFile&) = delete;
  ~MappedRecordFile() { release(); }

  const RecordHeader& header() const noexcept { return header_; }
  RecordView records() const {
    return RecordView({data_ + kRecordHeaderSize, length_ - kRecordHeaderSize},
                      header_.record_size);
  }

 private:
  void release() noexcept {
    if (data_) {
      ::msync(data_, length_, MS_SYNC);
      ::munmap(data_, length_);
      data_ = nullptr;
    }
    if (fd_ >= 0) {
      ::close(fd_);
      fd_ = -1;
    }
  }

  int fd_ = -1;
  std::uint8_t* data_ = nullptr;
  std::size_t length_ = 0;
  RecordHeader header_;
};

}  // namespace shuffleworks
