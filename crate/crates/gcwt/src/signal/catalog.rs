//! Built-in signal and wavelet catalog.
//!
//! Space-domain entries are sampled directly; bandlimited entries are
//! constructed on the frequency lattice and transformed back, so their
//! spectra vanish exactly outside the stated support.

use num_complex::Complex;

use super::fft::{frequency_lattice, inverse_fourier};
use super::{Lattice, SampledSignal, Spectrum};
use crate::error::{GcwtError, Result};
use crate::scalar::Scalar;

/// Names of all catalog entries, by base-space dimension.
pub fn names(dim: usize) -> Vec<&'static str> {
    match dim {
        1 => vec![
            "gaussian",
            "mexican_hat_1d",
            "analytic_1d",
            "even_analytic_1d",
            "bandlimited_1d",
            "band_signal_1d",
            "chirp_1d",
        ],
        2 => vec![
            "gaussian",
            "mexican_hat_2d",
            "radial_bandlimited_2d",
            "radial_bandlimited_2d_b",
            "ring_signal_2d",
            "axis_avoiding_2d",
            "axis_signal_2d",
        ],
        _ => vec!["gaussian"],
    }
}

/// C-infinity bump supported on `[r0, r1]`, evaluated at `r >= 0`.
fn bump<T: Scalar>(r: T, r0: f64, r1: f64) -> T {
    let z = (T::c(2.0) * r - T::c(r0 + r1)) / T::c(r1 - r0);
    if z <= T::c(-1.0) || z >= T::one() {
        return T::zero();
    }
    (T::one() - T::one() / (T::one() - z * z)).exp()
}

fn radius<T: Scalar>(p: &[T]) -> T {
    p.iter().map(|&x| x * x).sum::<T>().sqrt()
}

fn from_spectrum_raw<T: Scalar>(
    lattice: &Lattice<T>,
    f: impl Fn(&[T]) -> Complex<T>,
) -> SampledSignal<T> {
    let freq = frequency_lattice(lattice);
    let values = (0..freq.len()).map(|flat| f(&freq.coords_flat(flat))).collect();
    let spec = Spectrum {
        lattice: freq,
        values,
    };
    inverse_fourier(&spec, lattice)
}

fn from_spectrum<T: Scalar>(
    lattice: &Lattice<T>,
    f: impl Fn(&[T]) -> Complex<T>,
) -> SampledSignal<T> {
    from_spectrum_raw(lattice, f).normalized()
}

/// Look up a catalog signal sampled on `lattice`.
///
/// Entries are L^2-normalized except `analytic_1d` / `even_analytic_1d`,
/// which keep the exact spectral amplitude `gamma e^{-gamma^2/2}` so their
/// affine admissibility constant is 1/2 per frequency half-line.
pub fn catalog<T: Scalar>(name: &str, lattice: &Lattice<T>) -> Result<SampledSignal<T>> {
    let dim = lattice.dim();
    let bad_dim = |need: usize| -> Result<SampledSignal<T>> {
        Err(GcwtError::Domain(format!(
            "catalog signal needs a {need}-d lattice, got {dim}-d"
        )))
    };
    match name {
        "gaussian" => Ok(SampledSignal::from_fn(lattice.clone(), |p| {
            let r2 = p.iter().map(|&x| x * x).sum::<T>();
            Complex::new((-T::PI() * r2).exp(), T::zero())
        })
        .normalized()),
        "mexican_hat_1d" => {
            if dim != 1 {
                return bad_dim(1);
            }
            Ok(SampledSignal::from_fn(lattice.clone(), |p| {
                let x2 = p[0] * p[0];
                let v = (T::one() - (T::PI() + T::PI()) * x2) * (-T::PI() * x2).exp();
                Complex::new(v, T::zero())
            })
            .normalized())
        }
        "mexican_hat_2d" => {
            if dim != 2 {
                return bad_dim(2);
            }
            Ok(SampledSignal::from_fn(lattice.clone(), |p| {
                let r2 = p[0] * p[0] + p[1] * p[1];
                let v = (T::PI() * r2 - T::one()) * (-T::PI() * r2).exp();
                Complex::new(v, T::zero())
            })
            .normalized())
        }
        "chirp_1d" => {
            if dim != 1 {
                return bad_dim(1);
            }
            Ok(SampledSignal::from_fn(lattice.clone(), |p| {
                let x2 = p[0] * p[0];
                let env = (-T::PI() * x2).exp();
                let phase = (T::PI() + T::PI()) * T::c(2.0) * x2;
                T::cis(phase).scale(env)
            })
            .normalized())
        }
        "analytic_1d" => {
            if dim != 1 {
                return bad_dim(1);
            }
            Ok(from_spectrum_raw(lattice, |w| {
                let g = w[0];
                if g > T::zero() {
                    Complex::new(g * (-g * g / T::c(2.0)).exp(), T::zero())
                } else {
                    Complex::new(T::zero(), T::zero())
                }
            }))
        }
        "even_analytic_1d" => {
            if dim != 1 {
                return bad_dim(1);
            }
            Ok(from_spectrum_raw(lattice, |w| {
                let g = w[0].abs();
                Complex::new(g * (-g * g / T::c(2.0)).exp(), T::zero())
            }))
        }
        "bandlimited_1d" => {
            if dim != 1 {
                return bad_dim(1);
            }
            Ok(from_spectrum(lattice, |w| {
                Complex::new(bump(w[0].abs(), 0.75, 1.5), T::zero())
            }))
        }
        "band_signal_1d" => {
            if dim != 1 {
                return bad_dim(1);
            }
            Ok(from_spectrum(lattice, |w| {
                Complex::new(bump(w[0].abs(), 0.5, 3.0), T::zero())
            }))
        }
        "radial_bandlimited_2d" => {
            if dim != 2 {
                return bad_dim(2);
            }
            Ok(from_spectrum(lattice, |w| {
                Complex::new(bump(radius(w), 0.75, 1.5), T::zero())
            }))
        }
        "radial_bandlimited_2d_b" => {
            if dim != 2 {
                return bad_dim(2);
            }
            Ok(from_spectrum(lattice, |w| {
                Complex::new(bump(radius(w), 2.0, 3.0), T::zero())
            }))
        }
        "ring_signal_2d" => {
            if dim != 2 {
                return bad_dim(2);
            }
            Ok(from_spectrum(lattice, |w| {
                Complex::new(bump(radius(w), 0.75, 3.0), T::zero())
            }))
        }
        "axis_avoiding_2d" => {
            if dim != 2 {
                return bad_dim(2);
            }
            Ok(from_spectrum(lattice, |w| {
                Complex::new(
                    bump(w[0].abs(), 0.75, 1.5) * bump(w[1].abs(), 0.75, 1.5),
                    T::zero(),
                )
            }))
        }
        "axis_signal_2d" => {
            if dim != 2 {
                return bad_dim(2);
            }
            Ok(from_spectrum(lattice, |w| {
                Complex::new(
                    bump(w[0].abs(), 0.75, 3.0) * bump(w[1].abs(), 0.75, 3.0),
                    T::zero(),
                )
            }))
        }
        other => Err(GcwtError::UnknownSignal(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;
    use crate::signal::fft::fourier;

    fn lat1() -> Lattice<f64> {
        Lattice::symmetric(1, 8.0, 256)
    }

    #[test]
    fn gaussian_is_unit_norm() {
        let f = catalog::<f64>("gaussian", &lat1()).unwrap();
        assert!((f.norm() - 1.0).abs() < 1e-6);
    }

    #[test]
    fn mexican_hat_has_zero_mean_spectrum() {
        let f = catalog::<f64>("mexican_hat_1d", &lat1()).unwrap();
        let spec = fourier(&f);
        let at_zero = spec.sample(&[0.0]);
        assert!(at_zero.norm() < 1e-10, "spectrum at 0 = {at_zero}");
    }

    #[test]
    fn radial_bandlimited_vanishes_off_annulus() {
        let lat = Lattice::symmetric(2, 8.0, 128);
        let f = catalog::<f64>("radial_bandlimited_2d", &lat).unwrap();
        let spec = fourier(&f);
        for flat in 0..spec.lattice.len() {
            let w = spec.lattice.coords_flat(flat);
            let r = (w[0] * w[0] + w[1] * w[1]).sqrt();
            if !(0.75..=1.5).contains(&r) {
                assert!(
                    spec.values[flat].norm() < 1e-10,
                    "nonzero outside annulus at r = {r}"
                );
            }
        }
    }

    #[test]
    fn unknown_name_is_rejected() {
        assert!(matches!(
            catalog::<f64>("nope", &lat1()),
            Err(GcwtError::UnknownSignal(_))
        ));
    }

    #[test]
    fn f32_alias_works() {
        let lat = Lattice::<f32>::symmetric(1, 8.0f32, 128);
        let f = catalog::<f32>("gaussian", &lat).unwrap();
        assert!((f.norm() - 1.0f32).abs() < 1e-3);
        let _ = f32::c(0.5);
    }
}
