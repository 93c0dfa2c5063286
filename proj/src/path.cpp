#include "chutes/path.hpp"

#include "chutes/arith.hpp"
#include "chutes/error.hpp"

#include <limits>
#include <stdexcept>

namespace chutes {

void ProblemParams::validate() const {
  if (d < 2 || e < 2 || r < 2) {
    throw std::invalid_argument("problem parameters d, e, r must all be >= 2");
  }
}

std::string_view to_string(SegmentKind kind) {
  switch (kind) {
    case SegmentKind::Belt:
      return "Belt";
    case SegmentKind::Ladder:
      return "Ladder";
    case SegmentKind::Chute:
      return "Chute";
  }
  return "?";
}

std::vector<Segment> decompose(std::string_view labels) {
  std::vector<Segment> out;
  auto push = [&](SegmentKind kind) {
    if (!out.empty() && out.back().kind == kind) {
      ++out.back().repeat;
    } else {
      out.push_back({kind, 1});
    }
  };
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const char c = labels[i];
    if (c == 'U') {
      if (i + 1 < labels.size() && labels[i + 1] == 'D') {
        push(SegmentKind::Belt);
        ++i;
      } else {
        push(SegmentKind::Ladder);
      }
    } else if (c == 'D') {
      push(SegmentKind::Chute);
    } else {
      throw std::invalid_argument(std::string("path labels may only contain U and D, found '") +
                                  c + "'");
    }
  }
  return out;
}

Labels Labels::parse(std::string_view text) {
  Labels out;
  for (char c : text) {
    if (c == 'U') {
      out.append(Label::Up);
    } else if (c == 'D') {
      out.append(Label::Down);
    } else {
      throw std::invalid_argument(std::string("path labels may only contain U and D, found '") +
                                  c + "'");
    }
  }
  return out;
}

void Labels::append(Label label) {
  append(Segment{label == Label::Up ? SegmentKind::Ladder : SegmentKind::Chute, 1});
}

void Labels::append(Segment segment) {
  if (segment.repeat == 0) return;
  if (!segments_.empty() && segments_.back().kind == segment.kind) {
    segments_.back().repeat += segment.repeat;
    edges_ += segment.edge_count();
    return;
  }
  if (!segments_.empty() && segments_.back().kind == SegmentKind::Ladder &&
      segment.kind == SegmentKind::Chute) {
    // The last rung and the first drop pair up into a belt step.
    if (--segments_.back().repeat == 0) segments_.pop_back();
    edges_ -= 1;
    append(Segment{SegmentKind::Belt, 1});
    append(Segment{SegmentKind::Chute, segment.repeat - 1});
    return;
  }
  segments_.push_back(segment);
  edges_ += segment.edge_count();
}

std::string Labels::str(std::uint64_t max_edges) const {
  if (edges_ > max_edges) {
    throw ResourceLimitError("path has " + std::to_string(edges_) +
                             " edges, too many to expand (limit " + std::to_string(max_edges) +
                             ")");
  }
  std::string out;
  out.reserve(edges_);
  for (const auto& s : segments_) {
    for (std::uint64_t i = 0; i < s.repeat; ++i) {
      switch (s.kind) {
        case SegmentKind::Belt:
          out += "UD";
          break;
        case SegmentKind::Ladder:
          out += 'U';
          break;
        case SegmentKind::Chute:
          out += 'D';
          break;
      }
    }
  }
  return out;
}

BigInt apply_up(const BigInt& x, const ProblemParams& params) {
  return pow(BigInt(x + params.d), params.e);
}

std::optional<BigInt> apply_down(const BigInt& x, const ProblemParams& params) {
  return arith::exact_eth_root(x, params.e);
}

std::vector<BigInt> evaluate_path(const PathWitness& witness, const ProblemParams& params,
                                  std::uint64_t max_vertices) {
  params.validate();
  if (witness.labels.edge_count() + 1 > max_vertices) {
    throw ResourceLimitError("path has " + std::to_string(witness.labels.edge_count() + 1) +
                             " vertices, above the limit of " + std::to_string(max_vertices));
  }
  std::vector<BigInt> out;
  out.reserve(witness.labels.edge_count() + 1);
  out.push_back(witness.start);
  std::uint64_t position = 0;
  auto up = [&] {
    ++position;
    out.push_back(apply_up(out.back(), params));
  };
  auto down = [&] {
    ++position;
    auto root = apply_down(out.back(), params);
    if (!root) throw InvalidDownStep(position);
    out.push_back(std::move(*root));
  };
  for (const auto& s : witness.labels.segments()) {
    for (std::uint64_t i = 0; i < s.repeat; ++i) {
      switch (s.kind) {
        case SegmentKind::Belt:
          up();
          down();
          break;
        case SegmentKind::Ladder:
          up();
          break;
        case SegmentKind::Chute:
          down();
          break;
      }
    }
  }
  return out;
}

PathSummary walk_path(const PathWitness& witness, const ProblemParams& params) {
  params.validate();
  PathSummary out{witness.start, witness.start, 0};
  for (const auto& s : witness.labels.segments()) {
    switch (s.kind) {
      case SegmentKind::Belt: {
        // Each UD pair lands d higher; the last up-edge visits the largest vertex.
        out.end += BigInt(s.repeat) * params.d;
        const BigInt peak = pow(out.end, params.e);
        if (peak > out.max_vertex) out.max_vertex = peak;
        out.edge_count += s.edge_count();
        break;
      }
      case SegmentKind::Ladder:
        for (std::uint64_t i = 0; i < s.repeat; ++i) {
          out.end = apply_up(out.end, params);
          ++out.edge_count;
        }
        if (out.end > out.max_vertex) out.max_vertex = out.end;
        break;
      case SegmentKind::Chute:
        for (std::uint64_t i = 0; i < s.repeat; ++i) {
          auto root = apply_down(out.end, params);
          if (!root) throw InvalidDownStep(out.edge_count + 1);
          out.end = std::move(*root);
          ++out.edge_count;
        }
        break;
    }
  }
  return out;
}

std::vector<std::uint64_t> project_residues(const PathWitness& witness,
                                            const ProblemParams& params) {
  std::vector<std::uint64_t> out;
  for (const auto& v : evaluate_path(witness, params)) {
    out.push_back(static_cast<std::uint64_t>(v % params.d));
  }
  return out;
}

bool check_uudd_infeasible(const ProblemParams& params, std::uint64_t x_max) {
  params.validate();
  for (std::uint64_t x = 2; x <= x_max; ++x) {
    const BigInt target = pow(BigInt(x + params.d), params.e) + params.d;
    if (arith::exact_eth_root(target, params.e)) return false;
  }
  return true;
}

PathWitness connecting_path(const BigInt& x, const BigInt& y, const ProblemParams& params) {
  if (!params.is_putnam_shape()) {
    throw std::invalid_argument("connecting_path is only defined for d = 5, e = 2");
  }
  for (const BigInt* v : {&x, &y}) {
    if (*v < 2 || *v % 5 == 0) {
      throw std::invalid_argument(v->str() + " is not a vertex: it must be >= 2 and not a multiple of 5");
    }
  }
  const BigInt w = apply_up(apply_up(x, params), params);
  BigInt z = y;
  std::uint64_t k = 0;
  while (!(z % 5 == 1 && z >= w)) {
    z *= z;
    ++k;
  }
  const BigInt belt = (z - w) / 5;
  if (belt > std::numeric_limits<std::uint64_t>::max() / 2) {
    throw ResourceLimitError("connecting belt from " + w.str() + " to " + z.str() +
                             " is too long to represent");
  }
  PathWitness out{x, {}};
  out.labels.append_ladder(2);
  out.labels.append_belt(static_cast<std::uint64_t>(belt));
  out.labels.append_chute(k);
  return out;
}

}  // namespace chutes
