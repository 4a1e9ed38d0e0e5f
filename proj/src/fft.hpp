#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <fftw3.h>

namespace isores::detail {

// One-dimensional complex FFTW plan over an owned buffer. Planning is
// serialized with a process-wide mutex; execution is not shared between
// threads because every caller owns its plan.
class Fft {
public:
    // direction: -1 for exp(-2 pi j k n / N), +1 for exp(+2 pi j k n / N).
    Fft(std::size_t n, int direction);
    ~Fft();
    Fft(const Fft&) = delete;
    Fft& operator=(const Fft&) = delete;

    std::size_t size() const noexcept { return n_; }
    void operator()(std::vector<std::complex<double>>& data) const;

private:
    std::size_t n_;
    fftw_complex* buf_;
    fftw_plan plan_;
};

// Smallest power of two >= n.
std::size_t next_pow2(std::size_t n);

}  // namespace isores::detail
