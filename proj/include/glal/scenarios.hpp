#pragma once

// Builders for the muddy-children cube and the sender/receiver/eavesdropper
// bit channel, plus one-step announcement rounds on muddy models.

#include <optional>
#include <string>
#include <vector>

#include "glal/model.hpp"
#include "glal/syntax.hpp"

namespace glal {

/// Agent names r, g, b, c4, ..., c10 (first n).
std::vector<std::string> muddy_agents(int n);
/// Atom "m_<agent>" for each child.
std::string muddy_atom(const std::string& agent);

/// Worlds are bit strings in child order ("100": only the first child is
/// muddy). Child i cannot tell apart worlds differing only in bit i.
/// Throws BoundExceeded outside 1..10.
KripkeModel muddy(int n);

/// Disjunction of every muddy atom (the father's statement).
Formula muddy_alpha(int n);
/// Conjunction over children of !Kw{i} m_i.
Formula muddy_no_stepping(int n);
/// Conjunction over children of m_i -> Kw{i} m_i.
Formula muddy_all_know(int n);

enum class ChannelVariant { N, Nprime };

/// N: worlds w1 (bit0), w2; s tells them apart, r and e do not.
/// Nprime: worlds v1, w1 (bit0), v2, w2; r on {v1,v2},{w1,w2}; s on
/// {v1,w1},{v2,w2}; e relates all four.
KripkeModel bit_channel(ChannelVariant variant);

enum class RoundKind { father_local, father_global, no_stepping };

/// Number of children in a model built by muddy(n) (children are its agents).
int muddy_size(const KripkeModel& m);

/// father_local: local announcement of the disjunction to every child.
/// father_global: global announcement of it to `coalition` (default: all).
/// no_stepping: global announcement of muddy_no_stepping to every child.
PointedModel muddy_round(const PointedModel& p, RoundKind kind, std::optional<Coalition> coalition = {});

}  // namespace glal
