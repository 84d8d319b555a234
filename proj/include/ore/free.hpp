/*
   Copyright 2026 The oretower Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <map>
#include <vector>

#include "ore/tower.hpp"

namespace ore {

/// Unreduced word in the free algebra on x_1..x_n.
struct FreeWord {
    std::vector<int> letters;

    friend bool operator==(const FreeWord&, const FreeWord&) = default;
};

/// Element of the free F-algebra: a combination of words.
class FreePoly {
public:
    using Word = std::vector<int>;
    using Terms = std::map<Word, CoeffElem>;

    FreePoly() = default;
    FreePoly(std::size_t nvars, CoeffMode mode) : nvars_(nvars), mode_(mode) {}

    static FreePoly constant(const CoeffElem& c, std::size_t nvars);
    static FreePoly word(std::size_t nvars, const FreeWord& w, const CoeffMode& mode);
    static FreePoly generator(std::size_t nvars, int var, const CoeffMode& mode);

    std::size_t nvars() const { return nvars_; }
    const CoeffMode& mode() const { return mode_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& w, const CoeffElem& c);

    FreePoly& operator+=(const FreePoly& other);
    FreePoly& operator-=(const FreePoly& other);
    FreePoly operator-() const;
    FreePoly scaled(const CoeffElem& c) const;

    friend FreePoly operator+(FreePoly lhs, const FreePoly& rhs) { return lhs += rhs; }
    friend FreePoly operator-(FreePoly lhs, const FreePoly& rhs) { return lhs -= rhs; }
    /// Concatenation product.
    friend FreePoly operator*(const FreePoly& lhs, const FreePoly& rhs);
    friend bool operator==(const FreePoly&, const FreePoly&) = default;

private:
    void check_compatible(const FreePoly& other) const;

    std::size_t nvars_ = 0;
    CoeffMode mode_;
    Terms terms_;
};

/// Reads standard monomials back as words.
FreePoly to_free(const NCPoly& f);

enum class ReductionOrder { leftmost, rightmost };

/// Rewrites descents x_j x_i (j > i) to a_ji x_i x_j + u_ji until every word is
/// standard. Works on raw relation tables and never consults the PBW engine.
/// Throws DomainError when some u_ji uses a letter >= j, since termination is
/// then not guaranteed.
NCPoly free_reduce(const TowerPresentation& tower, const FreePoly& f,
                   ReductionOrder order = ReductionOrder::leftmost);
NCPoly free_reduce(const TowerPresentation& tower, const FreeWord& w,
                   ReductionOrder order = ReductionOrder::leftmost);

}  // namespace ore
