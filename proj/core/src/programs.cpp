#include <algorithm>
#include <set>

#include "indsub/congest.hpp"
#include "indsub/errors.hpp"

namespace indsub {

namespace {

class ConstantProcess : public NodeProcess {
 public:
  explicit ConstantProcess(bool value) : value_(value) {}
  StepResult step(std::size_t, const std::vector<Message>&) override { return {{}, value_}; }

 private:
  bool value_;
};

class ConstantProgram : public NodeProgram {
 public:
  ConstantProgram(std::string name, bool value) : name_(std::move(name)), value_(value) {}
  std::string name() const override { return name_; }
  std::unique_ptr<NodeProcess> spawn(const NodeInfo&) const override {
    return std::make_unique<ConstantProcess>(value_);
  }

 private:
  std::string name_;
  bool value_;
};

class FloodProcess : public NodeProcess {
 public:
  FloodProcess(NodeInfo info, VertexId source) : info_(std::move(info)), source_(source) {}

  StepResult step(std::size_t round, const std::vector<Message>& inbox) override {
    StepResult res;
    if (reached_) return res;
    bool start = round == 1 && info_.id == source_;
    if (!start && inbox.empty()) return res;
    reached_ = true;
    res.output = true;
    for (VertexId w : info_.neighbors) {
      bool sender = std::any_of(inbox.begin(), inbox.end(), [w](const Message& m) { return m.src == w; });
      if (sender) continue;
      Message m;
      m.dst = w;
      m.payload.push_bit(true);
      res.outbox.push_back(std::move(m));
    }
    return res;
  }

 private:
  NodeInfo info_;
  VertexId source_;
  bool reached_ = false;
};

class FloodProgram : public NodeProgram {
 public:
  explicit FloodProgram(VertexId source) : source_(source) {}
  std::string name() const override { return "flood:" + std::to_string(source_); }
  std::unique_ptr<NodeProcess> spawn(const NodeInfo& info) const override {
    if (source_ >= info.n) throw InputError("flood source out of range");
    return std::make_unique<FloodProcess>(info, source_);
  }

 private:
  VertexId source_;
};

class ProbeProcess : public NodeProcess {
 public:
  ProbeProcess(NodeInfo info, std::size_t rounds, std::shared_ptr<std::vector<BitString>> sink)
      : info_(std::move(info)), rounds_(rounds), sink_(std::move(sink)), known_(info_.n, false) {
    known_[info_.id] = true;
  }

  StepResult step(std::size_t round, const std::vector<Message>& inbox) override {
    for (const Message& m : inbox) {
      for (std::size_t v = 0; v < info_.n; ++v) {
        if (m.payload.bit(v)) known_[v] = true;
      }
    }
    StepResult res;
    if (round >= rounds_) {
      if (sink_) (*sink_)[info_.id] = known_;
      res.output = true;
      return res;
    }
    for (VertexId w : info_.neighbors) {
      Message m;
      m.dst = w;
      for (bool b : known_) m.payload.push_bit(b);
      res.outbox.push_back(std::move(m));
    }
    return res;
  }

 private:
  NodeInfo info_;
  std::size_t rounds_;
  std::shared_ptr<std::vector<BitString>> sink_;
  BitString known_;
};

class ProbeProgram : public NodeProgram {
 public:
  ProbeProgram(std::size_t rounds, std::shared_ptr<std::vector<BitString>> sink)
      : rounds_(rounds), sink_(std::move(sink)) {}
  std::string name() const override { return "causality-probe"; }
  std::unique_ptr<NodeProcess> spawn(const NodeInfo& info) const override {
    if (info.bandwidth_bits < info.n) throw InputError("causality probe needs bandwidth >= n");
    if (sink_ && sink_->size() != info.n) sink_->assign(info.n, BitString());
    return std::make_unique<ProbeProcess>(info, rounds_, sink_);
  }

 private:
  std::size_t rounds_;
  std::shared_ptr<std::vector<BitString>> sink_;
};

class NaiveC4Process : public NodeProcess {
 public:
  explicit NaiveC4Process(NodeInfo info) : info_(std::move(info)), width_(id_width(info_.n)) {
    lists_.resize(info_.neighbors.size());
    expected_.assign(info_.neighbors.size(), -1);
  }

  StepResult step(std::size_t round, const std::vector<Message>& inbox) override {
    for (const Message& m : inbox) {
      std::size_t slot = slot_of(m.src);
      auto value = static_cast<VertexId>(m.payload.read(0, width_));
      if (expected_[slot] < 0) {
        expected_[slot] = static_cast<long>(value);
      } else {
        lists_[slot].push_back(value);
      }
    }
    StepResult res;
    // Round 1 announces the degree, round r >= 2 carries neighbour r-2.
    const std::size_t deg = info_.neighbors.size();
    if (round <= deg + 1) {
      std::uint64_t value = round == 1 ? deg : info_.neighbors[round - 2];
      for (VertexId w : info_.neighbors) {
        Message m;
        m.dst = w;
        m.payload.push(value, width_);
        res.outbox.push_back(std::move(m));
      }
    }
    if (!decided_ && complete()) {
      decided_ = true;
      res.output = detect();
    }
    return res;
  }

 private:
  std::size_t slot_of(VertexId u) const {
    auto it = std::lower_bound(info_.neighbors.begin(), info_.neighbors.end(), u);
    return static_cast<std::size_t>(it - info_.neighbors.begin());
  }

  bool complete() const {
    for (std::size_t s = 0; s < lists_.size(); ++s) {
      if (expected_[s] < 0 || lists_[s].size() != static_cast<std::size_t>(expected_[s])) return false;
    }
    return true;
  }

  bool detect() {
    const auto& nv = info_.neighbors;
    for (auto& l : lists_) std::sort(l.begin(), l.end());
    auto in_nv = [&](VertexId t) { return std::binary_search(nv.begin(), nv.end(), t); };
    for (std::size_t a = 0; a < nv.size(); ++a) {
      for (std::size_t b = a + 1; b < nv.size(); ++b) {
        const auto& la = lists_[a];
        const auto& lb = lists_[b];
        if (std::binary_search(la.begin(), la.end(), nv[b])) continue;  // u ~ w
        std::vector<VertexId> common;
        std::set_intersection(la.begin(), la.end(), lb.begin(), lb.end(), std::back_inserter(common));
        for (VertexId t : common) {
          if (t != info_.id && !in_nv(t)) return true;
        }
      }
    }
    return false;
  }

  NodeInfo info_;
  unsigned width_;
  std::vector<std::vector<VertexId>> lists_;
  std::vector<long> expected_;
  bool decided_ = false;
};

class NaiveC4Program : public NodeProgram {
 public:
  std::string name() const override { return "naive-c4"; }
  std::unique_ptr<NodeProcess> spawn(const NodeInfo& info) const override {
    if (info.bandwidth_bits < id_width(info.n)) {
      throw InputError("naive-c4 needs bandwidth >= ceil(log2 n) bits");
    }
    return std::make_unique<NaiveC4Process>(info);
  }
};

}  // namespace

std::unique_ptr<NodeProgram> output_one_program() {
  return std::make_unique<ConstantProgram>("output-one", true);
}

std::unique_ptr<NodeProgram> silent_program() {
  return std::make_unique<ConstantProgram>("silent", false);
}

std::unique_ptr<NodeProgram> flood_program(VertexId source) {
  return std::make_unique<FloodProgram>(source);
}

std::unique_ptr<NodeProgram> causality_probe_program(
    std::size_t rounds, std::shared_ptr<std::vector<BitString>> knowledge) {
  if (rounds == 0) throw InputError("causality probe needs at least one round");
  return std::make_unique<ProbeProgram>(rounds, std::move(knowledge));
}

std::unique_ptr<NodeProgram> naive_c4_program() { return std::make_unique<NaiveC4Program>(); }

std::unique_ptr<NodeProgram> program_by_name(const std::string& name) {
  if (name == "output-one") return output_one_program();
  if (name == "silent") return silent_program();
  if (name == "naive-c4") return naive_c4_program();
  if (name.rfind("flood:", 0) == 0) {
    try {
      return flood_program(static_cast<VertexId>(std::stoul(name.substr(6))));
    } catch (const std::logic_error&) {
      throw InputError("bad flood source in '" + name + "'");
    }
  }
  throw InputError("unknown program '" + name + "' (output-one, silent, flood:<v>, naive-c4)");
}

}  // namespace indsub
