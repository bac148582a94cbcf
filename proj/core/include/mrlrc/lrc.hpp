#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mrlrc/matrix.hpp"

namespace mrlrc {

struct LrcParams {
    std::uint64_t n = 0;  // code length
    std::uint64_t r = 0;  // local group size
    std::uint64_t a = 0;  // local parities per group
    std::uint64_t h = 0;  // heavy parities
    FieldPtr field;

    std::uint64_t groups() const { return n / r; }
    std::uint64_t dimension() const { return n - groups() * a - h; }
    void validate() const;  // r|n, a<r, k>0
};

// Sorted distinct coordinates in [0, n).
struct ErasurePattern {
    std::vector<std::uint32_t> indices;

    static ErasurePattern of(std::vector<std::uint32_t> idx);  // sorts + validates
    std::vector<std::uint32_t> group_counts(const LrcParams& p) const;
    std::string to_text() const;  // comma-separated
    static ErasurePattern parse(const std::string& s);
    bool operator==(const ErasurePattern& o) const { return indices == o.indices; }
};

// Parity-check matrix in block form: A_i on the diagonal, B_i in the bottom
// strip. Constructed only through assemble(), which enforces the shape, the
// local-MDS property of every A_i, and full rank of H.
class LrcCode {
public:
    const LrcParams& params() const { return params_; }
    const Matrix& H() const { return H_; }
    const Matrix& A(std::size_t i) const { return A_[i]; }
    const Matrix& B(std::size_t i) const { return B_[i]; }
    const std::vector<Matrix>& A_blocks() const { return A_; }
    const std::vector<Matrix>& B_blocks() const { return B_; }

private:
    friend LrcCode assemble(LrcParams params, std::vector<Matrix> A, std::vector<Matrix> B);
    LrcParams params_;
    std::vector<Matrix> A_, B_;
    Matrix H_;
};

LrcCode assemble(LrcParams params, std::vector<Matrix> A, std::vector<Matrix> B);

// Maximal erasure patterns: per-group counts c_i in [a, min(r, a+h)] summing
// to ag+h, crossed with all index choices. Count vectors are enumerated in
// lexicographic order, index choices group-by-group with the last group
// varying fastest.
std::uint64_t mr_pattern_count(const LrcParams& p);  // saturating
void for_each_mr_pattern(const LrcParams& p,
                         const std::function<bool(const ErasurePattern&)>& fn);

// rank(H restricted to the pattern's columns) == |pattern|
bool is_correctable(const LrcCode& code, const ErasurePattern& pattern);

struct VerifyOptions {
    std::uint64_t budget = 100'000'000;  // cap on rank checks performed
    unsigned threads = 0;                // 0: hardware concurrency
    bool find_first = true;              // first counterexample in enumeration order
    // Restrict to patterns erasing this (group, column); sound when only that
    // heavy column changed relative to a verified code.
    std::optional<std::pair<std::uint32_t, std::uint32_t>> focus;
};

struct VerifyResult {
    bool ok = false;
    std::optional<ErasurePattern> counterexample;
    std::uint64_t pattern_count = 0;  // all maximal patterns (saturating)
    std::uint64_t checks = 0;         // rank checks actually performed
};

// Exhaustive over the maximal-pattern space. Groups with exactly a erasures
// are factored out through their invertible local minors, so one h x h
// determinant decides every pattern in that equivalence class.
VerifyResult verify_mr(const LrcCode& code, const VerifyOptions& opts = {});

// k x n, H G^T = 0, systematic on the lexicographically first information set.
Matrix generator_matrix(const LrcCode& code);

std::vector<Elem> encode(const LrcCode& code, const std::vector<Elem>& message);

enum class DecodeStatus { ok, uncorrectable, inconsistent };

struct DecodeResult {
    DecodeStatus status = DecodeStatus::ok;
    std::vector<Elem> word;  // complete codeword when status == ok
};

// Values at erased positions of `word` are ignored.
DecodeResult decode_erasures(const LrcCode& code, const std::vector<Elem>& word,
                             const ErasurePattern& erased);

// Repairs up to a erasures inside one group reading only that group's
// symbols; fetch(i) returns the symbol at global coordinate i or nullopt if
// erased. Returns the group's r symbols.
std::vector<Elem> local_repair(const LrcCode& code, std::size_t group,
                               const std::function<std::optional<Elem>(std::size_t)>& fetch);
std::vector<Elem> local_repair(const LrcCode& code, std::size_t group,
                               const std::vector<std::optional<Elem>>& word);

struct BoundReport {
    bool exact = false;
    std::int64_t q_min = 0;        // when exact
    std::int64_t alpha_num = 0;    // when not exact: q = Omega(n * r^alpha)
    std::uint64_t alpha_den = 1;
    std::string to_text() const;
};

// Field-size lower bound for MR codes: the exact closed form when the number
// of groups is at least h, an exponent-only report otherwise. h >= 2.
BoundReport lower_bound_q(std::uint64_t n, std::uint64_t r, std::uint64_t a, std::uint64_t h);

// ".lrc" textual format.
void write_lrc(std::ostream& out, const LrcCode& code);
LrcCode read_lrc(std::istream& in);

} // namespace mrlrc
