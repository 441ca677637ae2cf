#include "ptower/format.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>

namespace ptower {

std::string format_double(double value, int precision) {
  if (precision < 6 || precision > 17)
    throw std::domain_error("format_double: precision must be in [6, 17]");
  char buf[64];
  std::to_chars_result r{};
  if (precision == 17)
    r = std::to_chars(buf, buf + sizeof buf, value);  // shortest round-trip
  else
    r = std::to_chars(buf, buf + sizeof buf, value,
                      std::chars_format::general, precision);
  if (r.ec != std::errc{})
    throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, r.ptr);
}

}  // namespace ptower
