#pragma once

#include <string>
#include <vector>

#include "yw/colored.hpp"

namespace yw {

// Weakly decreasing sequence of nonzero colored parts; zero tail implicit.
using Partition = std::vector<Part>;
// Ordinary partition (weakly decreasing positive integers).
using Ordinary = std::vector<int>;

int size(const Partition& p);
int size(const Ordinary& p);
bool is_decreasing(const Partition& p);

Partition concat(const Partition& a, const Partition& b);
Partition reverse(const Partition& p);

bool is_overpartition(const Partition& p);
bool is_in_Pt(const Partition& p);

Ordinary transpose(const Ordinary& p);
bool is_partition(const Ordinary& p);
bool is_strict(const Ordinary& p);
bool is_odd(const Ordinary& p);

// Glaisher: merge equal pairs until distinct / split even parts in halves.
Ordinary odd_to_strict(const Ordinary& odd);
Ordinary strict_to_odd(const Ordinary& strict);

// Sorted weakly decreasing copy; bars placed before unbarred on ties of value.
Partition sorted(Partition p);

std::string to_string(const Partition& p);
std::string to_string(const Ordinary& p);
Partition parse_partition(const std::string& text);
Ordinary parse_ordinary(const std::string& text);

}  // namespace yw
