#pragma once

#include <bsbott/core.hpp>

#include <optional>
#include <vector>

namespace bsbott {

/// Assembly of a word: letter values grouped into maximal runs of consecutive
/// integers; the b-th block of a run holds the positions of its b-th value.
Assembly assembly_of(const Word& w);

/// Bott matrix of BS type of a word: -2 / 1 / 0 below the diagonal for letter
/// distance 0 / 1 / more.
BottMatrix bott_matrix(const Word& w);

/// Bott matrix of an assembly: -2 within a block, 1 between adjacent blocks of
/// the same ordered partition, 0 otherwise.
BottMatrix bott_matrix(const Assembly& a);

/// Where an element sits in an assembly.
struct Location {
  int partition;
  int block;
};

std::vector<Location> locate(const Assembly& a);

/// Same block, or adjacent blocks of one ordered partition. 0-based, j != k.
bool neighbors(const Assembly& a, int j, int k);

/// Inverse of bott_matrix(Assembly) up to block reversal: returns the
/// reversal-canonical assembly, or throws NotBsType when the matrix lies
/// outside the BS-type matrices for bound n.
Assembly recover_assembly(const BottMatrix& b, int n);

std::optional<Assembly> try_recover_assembly(const BottMatrix& b, int n);

inline bool is_bs_type(const BottMatrix& b, int n) { return try_recover_assembly(b, n).has_value(); }

/// Shifts letters so the smallest becomes 1; the bound is kept.
Word standardize(const Word& w);

/// Subtracts k from every letter; requires 0 <= k < min letter.
Word shift_down(const Word& w, int k);

/// Letter involution i -> n+1-i.
Word flip_letters(const Word& w);

/// One-line notation of s_{i_1} ... s_{i_m} acting on {1,...,n+1}.
std::vector<int> word_permutation(const Word& w);

}  // namespace bsbott
