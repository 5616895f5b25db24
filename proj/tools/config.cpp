#include "config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "zetasphere/errors.hpp"

namespace zetasphere::cli {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view text, const char* what) {
  text = trim(text);
  double value = 0.0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  if (!text.empty() && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw DomainError(std::string("cannot parse ") + what + " from '" + std::string(text) + "'");
  }
  return value;
}

int parse_int(std::string_view text, const char* what) {
  text = trim(text);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw DomainError(std::string("cannot parse ") + what + " from '" + std::string(text) + "'");
  }
  return value;
}

std::string format(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string Config::canonical() const {
  std::map<std::string, std::string> kv{{"flow_a", format(flow_a)},
                                        {"flow_t", format(flow_t)},
                                        {"scan_step", format(scan_step)},
                                        {"workers", std::to_string(workers)}};
  std::string out;
  for (const auto& [k, v] : kv) out += k + "=" + v + "\n";
  return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string Config::digest() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(canonical())));
  return buf;
}

Config parse_config(std::string_view text, Config base) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw DomainError("config line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string key{trim(view.substr(0, eq))};
    const std::string_view value = view.substr(eq + 1);
    if (key == "workers") {
      base.workers = parse_int(value, "workers");
    } else if (key == "scan_step") {
      base.scan_step = parse_double(value, "scan_step");
    } else if (key == "flow_a") {
      base.flow_a = parse_double(value, "flow_a");
    } else if (key == "flow_t") {
      base.flow_t = parse_double(value, "flow_t");
    } else {
      throw DomainError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  if (base.workers < 1 || base.workers > 256) throw DomainError("config: workers must lie in [1, 256]");
  return base;
}

Config load_config() {
  std::string path = "zetasphere.conf";
  bool required = false;
  if (const char* env = std::getenv("ZETASPHERE_CONFIG"); env != nullptr && *env != '\0') {
    path = env;
    required = true;
  }
  std::ifstream file(path);
  if (!file) {
    if (required) throw DomainError("cannot open config file '" + path + "'");
    return {};
  }
  std::stringstream buf;
  buf << file.rdbuf();
  return parse_config(buf.str());
}

Complex parse_complex(std::string_view text) {
  std::string compact;
  for (const char c : text) {
    if (c != ' ') compact += c;
  }
  std::string_view s = compact;
  if (s.empty()) throw DomainError("empty complex literal");
  if (s.back() != 'i' && s.back() != 'j') return {parse_double(s, "complex literal"), 0.0};
  s.remove_suffix(1);
  std::size_t split = std::string_view::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  const std::string_view re = split == std::string_view::npos ? std::string_view{} : s.substr(0, split);
  std::string_view im = split == std::string_view::npos ? s : s.substr(split);
  double imag = 0.0;
  if (im.empty() || im == "+") {
    imag = 1.0;
  } else if (im == "-") {
    imag = -1.0;
  } else {
    imag = parse_double(im, "imaginary part");
  }
  return {re.empty() ? 0.0 : parse_double(re, "real part"), imag};
}

std::size_t Range::count() const {
  return static_cast<std::size_t>(std::llround((stop - start) / step)) + 1;
}

Range parse_range(std::string_view text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string_view::npos) throw DomainError("range must look like start:stop:step");
  Range r{parse_double(text.substr(0, c1), "range start"), parse_double(text.substr(c1 + 1, c2 - c1 - 1), "range stop"),
          parse_double(text.substr(c2 + 1), "range step")};
  if (!(r.step > 0.0) || r.stop < r.start) throw DomainError("range needs step > 0 and stop >= start");
  if ((r.stop - r.start) / r.step > 1e6) throw DomainError("range has more than 10^6 points");
  return r;
}

}  // namespace zetasphere::cli
