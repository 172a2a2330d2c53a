#include "sta/spinor.hpp"

#include "sta/linalg.hpp"

namespace sta {

int ideal_dimension(const IdempotentSpec& f) {
    CMatrix m(kBladeCount, kBladeCount);
    for (int b = 0; b < kBladeCount; ++b) {
        auto image = Multivector<Complex>::unit_blade(static_cast<BladeMask>(b)) * f.value();
        for (int r = 0; r < kBladeCount; ++r)
            m.at(r, b) = image[static_cast<BladeMask>(r)];
    }
    return static_cast<int>(m.rank());
}

}  // namespace sta
