#include "apword/scan.hpp"

#include <algorithm>
#include <limits>

namespace apword {

  namespace {
    constexpr Letter no_letter = 0xFF;
  }

  ApScanner::ApScanner(std::uint64_t difference, std::size_t alphabet_size)
      : _d(difference),
        _last(),
        _run(),
        _col(0),
        _pos(0),
        _best(alphabet_size),
        _threshold(0) {
    if (difference == 0) {
      throw Error("progression difference must be positive");
    }
    if (difference > (std::uint64_t{1} << 32)) {
      throw Error("difference too large for an exhaustive scan");
    }
    _last.assign(difference, no_letter);
    _run.assign(difference, 0);
  }

  void ApScanner::feed(std::span<Letter const> letters) {
    std::size_t idx = 0;
    while (idx < letters.size()) {
      std::size_t const seg
          = std::min<std::size_t>(_d - _col, letters.size() - idx);
      Letter* const        last = _last.data() + _col;
      std::uint32_t* const run  = _run.data() + _col;
      Letter const* const  cur  = letters.data() + idx;

      // Branch-free so the compiler can vectorise it.
      std::uint32_t mx = 0;
      for (std::size_t j = 0; j < seg; ++j) {
        std::uint32_t const r = last[j] == cur[j] ? run[j] + 1 : 1;
        run[j]                = r;
        last[j]               = cur[j];
        mx                    = r > mx ? r : mx;
      }
      if (mx > _threshold) {
        slow_update(_col, letters.subspan(idx, seg), _pos + idx);
      }

      idx += seg;
      _col += seg;
      if (_col == _d) {
        _col = 0;
      }
    }
    _pos += letters.size();
  }

  void ApScanner::slow_update(std::size_t             col,
                              std::span<Letter const> seg,
                              std::uint64_t           pos) {
    for (std::size_t j = 0; j < seg.size(); ++j) {
      Record&             rec = _best[seg[j]];
      std::uint32_t const r   = _run[col + j];
      if (r > rec.length) {
        rec.length = r;
        rec.end    = pos + j;
      }
    }
    _threshold = std::numeric_limits<std::uint32_t>::max();
    for (auto const& rec : _best) {
      _threshold = std::min(_threshold, rec.length);
    }
  }

  Progression ApScanner::best(Letter a) const {
    if (a >= _best.size()) {
      throw Error("invalid letter index " + std::to_string(a));
    }
    Record const& rec = _best[a];
    if (rec.length == 0) {
      return Progression{0, _d, 0, a};
    }
    return Progression{rec.end - (rec.length - 1) * _d, _d, rec.length, a};
  }

  Progression ApScanner::best() const {
    Progression out{0, _d, 0, 0};
    for (std::size_t a = 0; a < _best.size(); ++a) {
      Progression p = best(static_cast<Letter>(a));
      if (p.length > out.length
          || (p.length == out.length && p.length != 0 && p.start < out.start)) {
        out = p;
      }
    }
    return out;
  }

}  // namespace apword
