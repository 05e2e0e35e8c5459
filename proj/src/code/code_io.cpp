#include "bmvoa/code/code_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bmvoa::code {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

LinearCode parse_code_text(std::string_view text) {
  std::vector<BitWord> words;
  std::size_t line_no = 0;
  std::size_t length = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    BitWord w;
    try {
      w = BitWord::from_string(line);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (words.empty()) {
      length = w.length();
    } else if (w.length() != length) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": ragged codeword of length " +
                                  std::to_string(w.length()) + ", expected " + std::to_string(length));
    }
    words.push_back(std::move(w));
  }
  if (words.empty()) throw std::invalid_argument("code file contains no codewords");
  return LinearCode::span(length, words);
}

LinearCode load_code_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open code file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_code_text(buf.str());
}

nlohmann::ordered_json code_to_json(const LinearCode& code) {
  nlohmann::ordered_json j;
  j["length"] = code.length();
  j["dim"] = code.dim();
  auto basis = nlohmann::ordered_json::array();
  for (const auto& b : code.basis()) basis.push_back(b.to_string());
  j["basis"] = std::move(basis);
  return j;
}

}  // namespace bmvoa::code
