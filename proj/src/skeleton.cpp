#include "skeleton.hpp"

namespace csync::detail {

namespace {

struct CapHit {};

class Walker {
 public:
  Walker(const Pdfa& b, std::size_t cap) : b_(b), cap_(cap), k_(b.alphabet().size()) {
    comp_ = strongly_connected_components(b);
    cycle_sym_.assign(b.num_states(), -1);
    for (State q = 0; q < b.num_states(); ++q)
      for (std::size_t x = 0; x < k_; ++x) {
        State t = b.next(q, x);
        if (t != kNoState && comp_[t] == comp_[q]) cycle_sym_[q] = static_cast<int>(x);
      }
  }

  std::vector<Skeleton> run() {
    explore(b_.start(), {});
    return std::move(out_);
  }

 private:
  static Skeleton with_text(Skeleton s, const Word& w) {
    if (w.empty()) return s;
    if (!s.empty() && !s.back().pumped)
      s.back().text += w;
    else
      s.push_back({w, false});
    return s;
  }

  void emit(Skeleton s) {
    if (out_.size() >= cap_) throw CapHit{};
    out_.push_back(std::move(s));
  }

  void explore(State q, const Skeleton& acc) {
    if (cycle_sym_[q] < 0) {
      if (b_.is_final(q)) emit(acc);
      for (std::size_t x = 0; x < k_; ++x) {
        State t = b_.next(q, x);
        if (t != kNoState) explore(t, with_text(acc, Word(1, b_.alphabet().symbol(x))));
      }
      return;
    }
    Word label;
    State x = q;
    do {
      label.push_back(b_.alphabet().symbol(static_cast<std::size_t>(cycle_sym_[x])));
      x = b_.next(x, static_cast<std::size_t>(cycle_sym_[x]));
    } while (x != q);
    Skeleton pumped = acc;
    pumped.push_back({label, true});
    Word u;
    x = q;
    for (std::size_t step = 0; step < label.size(); ++step) {
      if (b_.is_final(x)) emit(with_text(pumped, u));
      for (std::size_t y = 0; y < k_; ++y) {
        if (static_cast<int>(y) == cycle_sym_[x]) continue;
        State t = b_.next(x, y);
        if (t != kNoState) explore(t, with_text(pumped, u + b_.alphabet().symbol(y)));
      }
      u.push_back(label[step]);
      x = b_.next(x, static_cast<std::size_t>(cycle_sym_[x]));
    }
  }

  const Pdfa& b_;
  std::size_t cap_;
  std::size_t k_;
  std::vector<std::size_t> comp_;
  std::vector<int> cycle_sym_;
  std::vector<Skeleton> out_;
};

}  // namespace

std::optional<std::vector<Skeleton>> enumerate_skeletons(const Pdfa& b, std::size_t cap) {
  try {
    return Walker(b, cap).run();
  } catch (const CapHit&) {
    return std::nullopt;
  }
}

}  // namespace csync::detail
