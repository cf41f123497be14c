#ifndef ORDALG_ELEM_SET_HPP_
#define ORDALG_ELEM_SET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace ordalg {

  // Dense element index into a carrier.
  using Elem = std::uint32_t;

  // Largest carrier an ElemSet can describe. Every set operation in the
  // library goes through ElemSet, so lifting this limit means swapping the
  // single word below for a multi-word bitset.
  inline constexpr std::size_t kMaxCarrier = 64;

  // A subset of a carrier of at most kMaxCarrier elements.
  class ElemSet {
   public:
    constexpr ElemSet() noexcept = default;
    constexpr explicit ElemSet(std::uint64_t bits) noexcept : _bits(bits) {}
    ElemSet(std::initializer_list<Elem> elems) noexcept {
      for (Elem e : elems) {
        insert(e);
      }
    }

    static constexpr ElemSet full(std::size_t n) noexcept {
      return ElemSet(n >= 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << n) - 1);
    }
    static constexpr ElemSet singleton(Elem e) noexcept {
      return ElemSet(std::uint64_t{1} << e);
    }

    constexpr bool contains(Elem e) const noexcept {
      return (_bits >> e) & 1U;
    }
    constexpr void insert(Elem e) noexcept {
      _bits |= std::uint64_t{1} << e;
    }
    constexpr void erase(Elem e) noexcept {
      _bits &= ~(std::uint64_t{1} << e);
    }
    constexpr bool empty() const noexcept {
      return _bits == 0;
    }
    constexpr std::size_t size() const noexcept {
      return static_cast<std::size_t>(std::popcount(_bits));
    }
    constexpr std::uint64_t bits() const noexcept {
      return _bits;
    }
    constexpr bool subset_of(ElemSet other) const noexcept {
      return (_bits & ~other._bits) == 0;
    }
    // Smallest member; undefined on the empty set.
    constexpr Elem first() const noexcept {
      return static_cast<Elem>(std::countr_zero(_bits));
    }

    std::vector<Elem> members() const {
      std::vector<Elem> out;
      out.reserve(size());
      for (std::uint64_t b = _bits; b != 0; b &= b - 1) {
        out.push_back(static_cast<Elem>(std::countr_zero(b)));
      }
      return out;
    }

    friend constexpr ElemSet operator&(ElemSet x, ElemSet y) noexcept {
      return ElemSet(x._bits & y._bits);
    }
    friend constexpr ElemSet operator|(ElemSet x, ElemSet y) noexcept {
      return ElemSet(x._bits | y._bits);
    }
    constexpr ElemSet& operator&=(ElemSet y) noexcept {
      _bits &= y._bits;
      return *this;
    }
    constexpr ElemSet& operator|=(ElemSet y) noexcept {
      _bits |= y._bits;
      return *this;
    }
    friend constexpr bool operator==(ElemSet, ElemSet) noexcept = default;
    friend constexpr auto operator<=>(ElemSet x, ElemSet y) noexcept {
      return x._bits <=> y._bits;
    }

   private:
    std::uint64_t _bits = 0;
  };

}  // namespace ordalg

#endif  // ORDALG_ELEM_SET_HPP_
