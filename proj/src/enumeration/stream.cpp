#include <fstream>

#include "domlab/enumeration.hpp"
#include "domlab/errors.hpp"

namespace domlab {

namespace {

class Graph6FileStream : public GraphStream {
 public:
  explicit Graph6FileStream(const std::string& path) : in_(path) {
    if (!in_) throw PreconditionError("cannot open graph6 stream \"" + path + "\"");
  }

  std::optional<Graph> next() override {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line.front() == '#') continue;
      try {
        return parse_graph6(line);
      } catch (const FormatError& e) {
        errors_.push_back({line_, e.what()});
      }
    }
    return std::nullopt;
  }

 private:
  std::ifstream in_;
  std::size_t line_ = 0;
};

class VectorStream : public GraphStream {
 public:
  explicit VectorStream(std::vector<Graph> graphs) : graphs_(std::move(graphs)) {}
  std::optional<Graph> next() override {
    if (index_ == graphs_.size()) return std::nullopt;
    return graphs_[index_++];
  }

 private:
  std::vector<Graph> graphs_;
  std::size_t index_ = 0;
};

}  // namespace

std::unique_ptr<GraphStream> stream_graph6(const std::string& path) {
  return std::make_unique<Graph6FileStream>(path);
}

std::unique_ptr<GraphStream> stream_of(std::vector<Graph> graphs) {
  return std::make_unique<VectorStream>(std::move(graphs));
}

}  // namespace domlab
