#include "fft.hpp"

#include <algorithm>
#include <cstring>
#include <mutex>
#include <new>
#include <stdexcept>

namespace isores::detail {

namespace {
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

Fft::Fft(std::size_t n, int direction) : n_(n), buf_(nullptr), plan_(nullptr) {
    if (n == 0) {
        throw std::invalid_argument("fft: empty transform");
    }
    std::lock_guard lock(planner_mutex());
    buf_ = fftw_alloc_complex(n);
    if (!buf_) {
        throw std::bad_alloc();
    }
    plan_ = fftw_plan_dft_1d(static_cast<int>(n), buf_, buf_, direction < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                             FFTW_ESTIMATE);
    if (!plan_) {
        fftw_free(buf_);
        throw std::runtime_error("fft: planning failed");
    }
}

Fft::~Fft() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan_);
    fftw_free(buf_);
}

void Fft::operator()(std::vector<std::complex<double>>& data) const {
    if (data.size() != n_) {
        throw std::invalid_argument("fft: length mismatch");
    }
    static_assert(sizeof(std::complex<double>) == sizeof(fftw_complex));
    std::memcpy(buf_, data.data(), n_ * sizeof(fftw_complex));
    fftw_execute(plan_);
    std::memcpy(static_cast<void*>(data.data()), buf_, n_ * sizeof(fftw_complex));
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) {
        p <<= 1;
    }
    return p;
}

}  // namespace isores::detail
