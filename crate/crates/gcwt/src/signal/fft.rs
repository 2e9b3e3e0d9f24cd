//! Discrete Fourier transforms with the analytic convention
//! `F(w) = \int f(x) e^{-2 pi i <x, w>} dx`, approximated by a phase-corrected
//! DFT. Unitary in the sense of Plancherel: `||F||_2 = ||f||_2` exactly.

use num_complex::Complex;
use rustfft::FftPlanner;

use super::{Lattice, SampledSignal, Spectrum};
use crate::scalar::Scalar;

/// In-place n-dimensional raw DFT (unnormalized), forward or inverse.
fn raw_fft_nd<T: Scalar>(shape: &[usize], values: &mut [Complex<T>], inverse: bool) {
    let mut planner = FftPlanner::<T>::new();
    let dim = shape.len();
    let total: usize = shape.iter().product();
    for ax in 0..dim {
        let n = shape[ax];
        let fft = if inverse {
            planner.plan_fft_inverse(n)
        } else {
            planner.plan_fft_forward(n)
        };
        // stride of this axis in row-major layout
        let stride: usize = shape[ax + 1..].iter().product();
        let lines = total / n;
        let mut buf = vec![Complex::new(T::zero(), T::zero()); n];
        for line in 0..lines {
            // decompose line index into (outer, inner) around the axis
            let inner = line % stride;
            let outer = line / stride;
            let base = outer * stride * n + inner;
            for i in 0..n {
                buf[i] = values[base + i * stride];
            }
            fft.process(&mut buf);
            for i in 0..n {
                values[base + i * stride] = buf[i];
            }
        }
    }
}

/// Frequency lattice matching a space lattice: spacing `1/(N h)`, origin at
/// `-floor(N/2) / (N h)` per axis, so the axes are monotone after the shift.
pub fn frequency_lattice<T: Scalar>(space: &Lattice<T>) -> Lattice<T> {
    let dim = space.dim();
    let mut origin = Vec::with_capacity(dim);
    let mut spacing = Vec::with_capacity(dim);
    for ax in 0..dim {
        let n = space.shape[ax];
        let dw = T::one() / (T::c(n as f64) * space.spacing[ax]);
        origin.push(-T::c((n / 2) as f64) * dw);
        spacing.push(dw);
    }
    Lattice {
        shape: space.shape.clone(),
        origin,
        spacing,
    }
}

/// Forward transform under the `e^{-2 pi i}` convention.
pub fn fourier<T: Scalar>(f: &SampledSignal<T>) -> Spectrum<T> {
    let space = &f.lattice;
    let freq = frequency_lattice(space);
    let dim = space.dim();
    let mut raw = f.values.clone();
    raw_fft_nd(&space.shape, &mut raw, false);

    let cell = space.cell_volume();
    let mut out = vec![Complex::new(T::zero(), T::zero()); raw.len()];
    let total = raw.len();
    for flat in 0..total {
        let idx = freq.unravel(flat);
        // shifted index -> signed frequency index m, raw index (m mod N)
        let mut rawidx = 0usize;
        let mut phase = T::zero();
        for ax in 0..dim {
            let n = space.shape[ax];
            let m = idx[ax] as isize - (n / 2) as isize;
            let k = ((m + n as isize) % n as isize) as usize;
            rawidx = rawidx * n + k;
            let w = freq.origin[ax] + T::c(idx[ax] as f64) * freq.spacing[ax];
            phase = phase - (T::PI() + T::PI()) * space.origin[ax] * w;
        }
        out[flat] = raw[rawidx] * T::cis(phase) * cell;
    }
    Spectrum {
        lattice: freq,
        values: out,
    }
}

/// Inverse transform; `inverse_fourier(fourier(f)) == f` to machine precision.
pub fn inverse_fourier<T: Scalar>(spec: &Spectrum<T>, space: &Lattice<T>) -> SampledSignal<T> {
    let freq = &spec.lattice;
    let dim = space.dim();
    assert_eq!(space.shape, freq.shape, "space/frequency shape mismatch");

    // unshift and undo the origin phase
    let total = spec.values.len();
    let mut raw = vec![Complex::new(T::zero(), T::zero()); total];
    for flat in 0..total {
        let idx = freq.unravel(flat);
        let mut rawidx = 0usize;
        let mut phase = T::zero();
        for ax in 0..dim {
            let n = space.shape[ax];
            let m = idx[ax] as isize - (n / 2) as isize;
            let k = ((m + n as isize) % n as isize) as usize;
            rawidx = rawidx * n + k;
            let w = freq.origin[ax] + T::c(idx[ax] as f64) * freq.spacing[ax];
            phase = phase + (T::PI() + T::PI()) * space.origin[ax] * w;
        }
        raw[rawidx] = spec.values[flat] * T::cis(phase);
    }
    raw_fft_nd(&freq.shape, &mut raw, true);
    let cell = freq.cell_volume();
    for v in &mut raw {
        *v = v.scale(cell);
    }
    SampledSignal {
        lattice: space.clone(),
        values: raw,
    }
}

/// Spectrum of the zero-padded signal: same content, finer frequency sampling.
pub fn padded_spectrum<T: Scalar>(f: &SampledSignal<T>, factor: usize) -> Spectrum<T> {
    fourier(&f.padded(factor))
}

/// Linear convolution of compactly supported signals via padded circular FFT.
///
/// Both inputs must share a lattice; the result is restricted back to it, so
/// mass that leaves the doubled window is dropped.
pub fn convolve<T: Scalar>(f: &SampledSignal<T>, g: &SampledSignal<T>) -> SampledSignal<T> {
    assert_eq!(f.lattice, g.lattice);
    let fp = f.padded(2);
    let gp = g.padded(2);
    let mut ff = fourier(&fp);
    let gg = fourier(&gp);
    for (a, b) in ff.values.iter_mut().zip(&gg.values) {
        *a = *a * *b;
    }
    inverse_fourier(&ff, &fp.lattice).restricted(&f.lattice)
}
