#include "dislab/grid.hpp"

#include <fftw3.h>

#include <complex>
#include <mutex>

namespace dislab {

int next_pow2(int n) {
    int p = 1;
    while (p < n) p <<= 1;
    return p;
}

namespace {

std::mutex g_fftw_mutex;  // FFTW planning is not thread-safe

struct PaddedFFT {
    int px, py;
    std::vector<std::complex<double>> buf_a, buf_b;

    PaddedFFT(int px_, int py_) : px(px_), py(py_), buf_a(size_t(px_) * py_), buf_b(size_t(px_) * py_) {}

    void load(std::vector<std::complex<double>>& dst, const Array2& src) {
        std::fill(dst.begin(), dst.end(), std::complex<double>(0.0, 0.0));
        for (int j = 0; j < src.ny; ++j)
            for (int i = 0; i < src.nx; ++i) dst[size_t(j) * px + i] = src.at(i, j);
    }

    void forward(std::vector<std::complex<double>>& b) {
        fftw_plan plan;
        {
            std::lock_guard<std::mutex> lk(g_fftw_mutex);
            plan = fftw_plan_dft_2d(py, px, reinterpret_cast<fftw_complex*>(b.data()),
                                    reinterpret_cast<fftw_complex*>(b.data()), FFTW_FORWARD,
                                    FFTW_ESTIMATE);
        }
        fftw_execute(plan);
        std::lock_guard<std::mutex> lk(g_fftw_mutex);
        fftw_destroy_plan(plan);
    }

    void backward(std::vector<std::complex<double>>& b) {
        fftw_plan plan;
        {
            std::lock_guard<std::mutex> lk(g_fftw_mutex);
            plan = fftw_plan_dft_2d(py, px, reinterpret_cast<fftw_complex*>(b.data()),
                                    reinterpret_cast<fftw_complex*>(b.data()), FFTW_BACKWARD,
                                    FFTW_ESTIMATE);
        }
        fftw_execute(plan);
        std::lock_guard<std::mutex> lk(g_fftw_mutex);
        fftw_destroy_plan(plan);
    }
};

Array2 fft_combine(const Array2& a, const Array2& b, bool correlate) {
    const int ox = correlate ? a.nx - 1 : 0;
    const int oy = correlate ? a.ny - 1 : 0;
    const int rx = a.nx + b.nx - 1, ry = a.ny + b.ny - 1;
    const int px = next_pow2(rx), py = next_pow2(ry);
    PaddedFFT fft(px, py);
    fft.load(fft.buf_a, a);
    fft.load(fft.buf_b, b);
    fft.forward(fft.buf_a);
    fft.forward(fft.buf_b);
    const double scale = 1.0 / (double(px) * py);
    for (size_t k = 0; k < fft.buf_a.size(); ++k) {
        const std::complex<double> fa =
            correlate ? std::conj(fft.buf_a[k]) : fft.buf_a[k];
        fft.buf_a[k] = fa * fft.buf_b[k] * scale;
    }
    fft.backward(fft.buf_a);
    Array2 out(rx, ry);
    for (int j = 0; j < ry; ++j)
        for (int i = 0; i < rx; ++i) {
            // correlation lag d maps to circular index (d mod p)
            const int si = correlate ? ((i - ox) % px + px) % px : i;
            const int sj = correlate ? ((j - oy) % py + py) % py : j;
            out.at(i, j) = fft.buf_a[size_t(sj) * px + si].real();
        }
    return out;
}

}  // namespace

Array2 fft_correlate_full(const Array2& a, const Array2& b) { return fft_combine(a, b, true); }

Array2 fft_convolve_full(const Array2& a, const Array2& b) { return fft_combine(a, b, false); }

}  // namespace dislab
