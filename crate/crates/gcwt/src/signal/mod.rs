//! Sampled L^2(R^n) signals on regular lattices, inner products and spectra.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{GcwtError, Result};
use crate::scalar::Scalar;

pub mod catalog;
pub mod fft;
pub mod io;

/// Regular lattice in R^n: point `idx` sits at `origin + idx * spacing`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Lattice<T> {
    pub shape: Vec<usize>,
    pub origin: Vec<T>,
    pub spacing: Vec<T>,
}

impl<T: Scalar> Lattice<T> {
    pub fn new(shape: Vec<usize>, origin: Vec<T>, spacing: Vec<T>) -> Result<Self> {
        if shape.is_empty() || shape.len() != origin.len() || shape.len() != spacing.len() {
            return Err(GcwtError::Domain("inconsistent lattice specification".into()));
        }
        if shape.iter().any(|&n| n < 2) {
            return Err(GcwtError::Domain("lattice needs at least 2 samples per axis".into()));
        }
        if spacing.iter().any(|&h| h <= T::zero()) {
            return Err(GcwtError::Domain("lattice spacing must be positive".into()));
        }
        Ok(Lattice { shape, origin, spacing })
    }

    /// Symmetric lattice covering `[-half, half)` with `n` samples per axis.
    pub fn symmetric(dim: usize, half: T, n: usize) -> Self {
        let h = (half + half) / T::c(n as f64);
        Lattice {
            shape: vec![n; dim],
            origin: vec![-half; dim],
            spacing: vec![h; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.shape.len()
    }

    pub fn len(&self) -> usize {
        self.shape.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn cell_volume(&self) -> T {
        self.spacing.iter().fold(T::one(), |p, &h| p * h)
    }

    /// Multi-index of a flat row-major index.
    pub fn unravel(&self, mut flat: usize) -> Vec<usize> {
        let mut idx = vec![0usize; self.dim()];
        for ax in (0..self.dim()).rev() {
            idx[ax] = flat % self.shape[ax];
            flat /= self.shape[ax];
        }
        idx
    }

    pub fn flatten(&self, idx: &[usize]) -> usize {
        idx.iter().zip(&self.shape).fold(0, |acc, (&i, &n)| acc * n + i)
    }

    /// Coordinates of a multi-index.
    pub fn coords(&self, idx: &[usize]) -> Vec<T> {
        idx.iter()
            .enumerate()
            .map(|(ax, &i)| self.origin[ax] + T::c(i as f64) * self.spacing[ax])
            .collect()
    }

    pub fn coords_flat(&self, flat: usize) -> Vec<T> {
        self.coords(&self.unravel(flat))
    }

    /// Axis coordinate values.
    pub fn axis_coords(&self, ax: usize) -> Vec<T> {
        (0..self.shape[ax])
            .map(|i| self.origin[ax] + T::c(i as f64) * self.spacing[ax])
            .collect()
    }
}

/// Complex-valued function sampled on a regular lattice.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledSignal<T> {
    pub lattice: Lattice<T>,
    pub values: Vec<Complex<T>>,
}

/// Fourier transform of a [`SampledSignal`], stored with monotone frequency axes.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum<T> {
    pub lattice: Lattice<T>,
    pub values: Vec<Complex<T>>,
}

fn multilinear<T: Scalar>(lattice: &Lattice<T>, values: &[Complex<T>], point: &[T]) -> Complex<T> {
    debug_assert_eq!(point.len(), lattice.dim());
    let dim = lattice.dim();
    let mut base = vec![0usize; dim];
    let mut frac = vec![T::zero(); dim];
    for ax in 0..dim {
        let u = (point[ax] - lattice.origin[ax]) / lattice.spacing[ax];
        if u < T::zero() || u > T::c((lattice.shape[ax] - 1) as f64) {
            return Complex::new(T::zero(), T::zero());
        }
        let fl = u.floor();
        let mut i = fl.to_usize().unwrap_or(0);
        // clamp so that i+1 stays in range at the upper edge
        if i >= lattice.shape[ax] - 1 {
            i = lattice.shape[ax] - 2;
        }
        base[ax] = i;
        frac[ax] = u - T::c(i as f64);
    }
    let mut acc = Complex::new(T::zero(), T::zero());
    for corner in 0..(1usize << dim) {
        let mut w = T::one();
        let mut idx = vec![0usize; dim];
        for ax in 0..dim {
            if corner & (1 << ax) != 0 {
                idx[ax] = base[ax] + 1;
                w = w * frac[ax];
            } else {
                idx[ax] = base[ax];
                w = w * (T::one() - frac[ax]);
            }
        }
        acc = acc + values[lattice.flatten(&idx)].scale(w);
    }
    acc
}

impl<T: Scalar> SampledSignal<T> {
    pub fn new(lattice: Lattice<T>, values: Vec<Complex<T>>) -> Result<Self> {
        if values.len() != lattice.len() {
            return Err(GcwtError::Domain("value count does not match lattice".into()));
        }
        Ok(SampledSignal { lattice, values })
    }

    pub fn zeros(lattice: Lattice<T>) -> Self {
        let n = lattice.len();
        SampledSignal {
            lattice,
            values: vec![Complex::new(T::zero(), T::zero()); n],
        }
    }

    /// Build from a pointwise function of the coordinates.
    pub fn from_fn(lattice: Lattice<T>, f: impl Fn(&[T]) -> Complex<T>) -> Self {
        let values = (0..lattice.len())
            .map(|flat| f(&lattice.coords_flat(flat)))
            .collect();
        SampledSignal { lattice, values }
    }

    pub fn norm_sq(&self) -> T {
        let cell = self.lattice.cell_volume();
        self.values.iter().map(|v| v.norm_sqr()).sum::<T>() * cell
    }

    pub fn norm(&self) -> T {
        self.norm_sq().sqrt()
    }

    pub fn sup_norm(&self) -> T {
        self.values
            .iter()
            .map(|v| v.norm())
            .fold(T::zero(), |m, v| if v > m { v } else { m })
    }

    /// Normalize to unit L^2 norm (no-op on the zero signal).
    pub fn normalized(mut self) -> Self {
        let n = self.norm();
        if n > T::zero() {
            let inv = T::one() / n;
            for v in &mut self.values {
                *v = v.scale(inv);
            }
        }
        self
    }

    pub fn scaled(mut self, c: Complex<T>) -> Self {
        for v in &mut self.values {
            *v = *v * c;
        }
        self
    }

    /// Bilinear (multilinear in n dims) interpolation with zero extension.
    pub fn sample(&self, point: &[T]) -> Complex<T> {
        multilinear(&self.lattice, &self.values, point)
    }

    /// Zero-pad symmetrically by `factor` (new extent = factor * old extent).
    pub fn padded(&self, factor: usize) -> SampledSignal<T> {
        assert!(factor >= 1);
        if factor == 1 {
            return self.clone();
        }
        let dim = self.lattice.dim();
        let mut shape = Vec::with_capacity(dim);
        let mut origin = Vec::with_capacity(dim);
        for ax in 0..dim {
            let n = self.lattice.shape[ax];
            let extra = n * (factor - 1);
            shape.push(n * factor);
            origin.push(
                self.lattice.origin[ax] - T::c((extra / 2) as f64) * self.lattice.spacing[ax],
            );
        }
        let lattice = Lattice {
            shape,
            origin,
            spacing: self.lattice.spacing.clone(),
        };
        let mut out = SampledSignal::zeros(lattice);
        for flat in 0..self.lattice.len() {
            let idx = self.lattice.unravel(flat);
            let shifted: Vec<usize> = idx
                .iter()
                .enumerate()
                .map(|(ax, &i)| i + self.lattice.shape[ax] * (factor - 1) / 2)
                .collect();
            let j = out.lattice.flatten(&shifted);
            out.values[j] = self.values[flat];
        }
        out
    }

    /// Restrict to the sub-window of another (coarser-extent) lattice with the
    /// same spacing. Inverse of [`padded`] when the lattices line up.
    pub fn restricted(&self, target: &Lattice<T>) -> SampledSignal<T> {
        let mut out = SampledSignal::zeros(target.clone());
        for flat in 0..target.len() {
            let p = target.coords_flat(flat);
            // nearest lattice point; the grids are commensurate in practice
            let mut idx = vec![0usize; self.lattice.dim()];
            let mut inside = true;
            for ax in 0..self.lattice.dim() {
                let u = ((p[ax] - self.lattice.origin[ax]) / self.lattice.spacing[ax]).round();
                let i = u.to_isize().unwrap_or(-1);
                if i < 0 || i as usize >= self.lattice.shape[ax] {
                    inside = false;
                    break;
                }
                idx[ax] = i as usize;
            }
            if inside {
                out.values[flat] = self.values[self.lattice.flatten(&idx)];
            }
        }
        out
    }
}

impl<T: Scalar> Spectrum<T> {
    pub fn norm_sq(&self) -> T {
        let cell = self.lattice.cell_volume();
        self.values.iter().map(|v| v.norm_sqr()).sum::<T>() * cell
    }

    pub fn norm(&self) -> T {
        self.norm_sq().sqrt()
    }

    /// Interpolated spectrum value with zero extension beyond Nyquist.
    pub fn sample(&self, freq: &[T]) -> Complex<T> {
        multilinear(&self.lattice, &self.values, freq)
    }
}

/// L^2 inner product; conjugate-linear in the second slot.
pub fn inner<T: Scalar>(f: &SampledSignal<T>, g: &SampledSignal<T>) -> Result<Complex<T>> {
    if f.lattice != g.lattice {
        return Err(GcwtError::LatticeMismatch);
    }
    let cell = f.lattice.cell_volume();
    let mut acc = Complex::new(T::zero(), T::zero());
    for (a, b) in f.values.iter().zip(&g.values) {
        acc = acc + *a * b.conj();
    }
    Ok(acc.scale(cell))
}

/// Spectral-side inner product with the frequency cell volume.
pub fn inner_spectral<T: Scalar>(f: &Spectrum<T>, g: &Spectrum<T>) -> Result<Complex<T>> {
    if f.lattice != g.lattice {
        return Err(GcwtError::LatticeMismatch);
    }
    let cell = f.lattice.cell_volume();
    let mut acc = Complex::new(T::zero(), T::zero());
    for (a, b) in f.values.iter().zip(&g.values) {
        acc = acc + *a * b.conj();
    }
    Ok(acc.scale(cell))
}
