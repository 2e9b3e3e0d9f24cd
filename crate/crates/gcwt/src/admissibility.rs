//! Admissibility and feasibility constants.
//!
//! For each group kind the admissibility integral reduces to a Fourier-domain
//! integral over the non-translation part B, evaluated here per probe
//! frequency. For the modulation kinds (Weyl-Heisenberg, G51) the substitution
//! u = omega - b turns the b-integral into the exact spectral mass, which is
//! frequency independent by construction.

use num_complex::Complex;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{GcwtError, Result};
use crate::group::{GroupKind, GroupModel};
use crate::quad::{periodic_trapezoid, simpson};
use crate::scalar::Scalar;
use crate::signal::fft::padded_spectrum;
use crate::signal::{SampledSignal, Spectrum};

/// Scale quadrature window [1e-3, 1e3] for the non-compact B-coordinates.
pub const SCALE_QUAD_LO: f64 = 1e-3;
pub const SCALE_QUAD_HI: f64 = 1e3;
/// A partial integral above this magnitude is declared divergent outright.
pub const DIVERGENCE_THRESHOLD: f64 = 1e6;
/// Coefficient-of-variation ceiling for "frequency independent".
pub const REL_VARIATION_TOL: f64 = 5e-2;
/// Magnitudes below this (relative to the wavelet norms) count as zero.
pub const ZERO_TOL: f64 = 1e-8;
/// Cross constants below this fraction of the Cauchy-Schwarz bound
/// sqrt(C_psi1 C_psi2) count as zero. Sampled signals carry a spectral
/// noise floor around 1e-6 of that scale, so the exact-zero tolerance
/// cannot be applied to the cross integral.
pub const CROSS_ZERO_TOL: f64 = 1e-4;
/// Probes within this distance of the singular set are rejected.
pub const SINGULAR_TUBE: f64 = 0.1;

const SIMPSON_PER_DECADE: usize = 32;
const ANGLE_NODES: usize = 64;
const INNER_NODES: usize = 128;
/// Zero-padding factor applied before taking spectra, for finer frequency
/// sampling of the bilinear interpolant.
const SPECTRUM_PAD: usize = 2;

/// Which Fourier-domain criterion was evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FormulaId {
    /// int_0^inf |psi^(a gamma)|^2 da/a per half-line (affine group).
    ScaleHalfLine,
    /// int int |psi^(a1 g1, a2 g2)|^2 da1 da2 / (a1 a2) (diagonal group).
    TwoScales,
    /// int int |psi^(a g1, b g1 + g2)|^2 da db / a^2 (upper triangular group).
    ScaleRow,
    /// int int |psi^(a w1, sgn(a)|a|^{1/2}(s w1 + w2))|^2 da ds / |a|^{3/2} (shear group).
    ScaleShear,
    /// int int |psi^(a r_{-theta} w)|^2 da dtheta / a (similitude group).
    ScaleRotation,
    /// ||psi^||_2^2: every wavelet admissible (modulation kinds).
    SpectralMass,
}

fn formula_id(kind: GroupKind) -> FormulaId {
    match kind {
        GroupKind::Affine1D => FormulaId::ScaleHalfLine,
        GroupKind::Diag2D => FormulaId::TwoScales,
        GroupKind::UpperTri2D => FormulaId::ScaleRow,
        GroupKind::Shear2 => FormulaId::ScaleShear,
        GroupKind::Similitude2 => FormulaId::ScaleRotation,
        GroupKind::WeylHeisenberg1 | GroupKind::G51 => FormulaId::SpectralMass,
    }
}

/// Per-wavelet admissibility result.
#[derive(Debug, Clone)]
pub struct AdmissibilityReport<T> {
    /// Aggregate C_psi (mean of the per-probe values).
    pub constant: T,
    /// (probe frequency, C_psi(omega)) samples.
    pub per_freq: Vec<(Vec<T>, T)>,
    /// Coefficient of variation of the per-probe values.
    pub rel_variation: T,
    pub divergent: bool,
    pub admissible: bool,
    pub formula_id: FormulaId,
}

/// Cross-admissibility result for an (analysis, synthesis) pair.
#[derive(Debug, Clone)]
pub struct PairReport<T> {
    pub cross_constant: Complex<T>,
    pub overlap: Complex<T>,
    /// (probe frequency, C_{psi1 psi2}(omega)) samples.
    pub per_freq: Vec<(Vec<T>, Complex<T>)>,
    pub rel_variation: T,
    pub divergent: bool,
    pub is_admissible_pair: bool,
}

/// Feasibility result: the semidirect-product reading of the same integral,
/// evaluated by an independent quadrature and compared against [`constant`].
#[derive(Debug, Clone)]
pub struct FeasibilityReport<T> {
    pub report: AdmissibilityReport<T>,
    /// Relative gap between the independent quadrature and `constant()`.
    pub consistency_gap: T,
    pub feasible: bool,
}

/// One probe's B-part integral, with per-decade magnitudes of the outer
/// scale axis for divergence detection.
#[derive(Debug, Clone)]
struct ProbeIntegral<T> {
    value: Complex<T>,
    decades: Vec<T>,
}

impl<T: Scalar> ProbeIntegral<T> {
    fn divergent(&self) -> bool {
        if !self.value.re.is_finite() || !self.value.im.is_finite() {
            return true;
        }
        if self.value.norm() > T::c(DIVERGENCE_THRESHOLD) {
            return true;
        }
        // If the lowest decade of the truncated scale range still carries a
        // non-vanishing share comparable to the next decade, the integral has
        // no decaying tail and the untruncated integral diverges.
        if self.decades.len() >= 2 {
            let total = self.value.norm();
            let d0 = self.decades[0];
            let d1 = self.decades[1];
            if d0 > T::c(1e-4) * total && d0 >= T::c(0.5) * d1 {
                return true;
            }
        }
        false
    }
}

/// Largest representable |frequency| on an axis of a spectrum lattice.
fn axis_extent<T: Scalar>(spec: &Spectrum<T>, ax: usize) -> T {
    let lat = &spec.lattice;
    let hi = lat.origin[ax] + T::c((lat.shape[ax] - 1) as f64) * lat.spacing[ax];
    lat.origin[ax].abs().max(hi.abs())
}

fn scale_signs<T: Scalar>(model: &GroupModel) -> Vec<T> {
    let signed = matches!(
        model.kind,
        GroupKind::Diag2D | GroupKind::UpperTri2D | GroupKind::Shear2
    );
    if signed && model.full_domain {
        vec![T::one(), -T::one()]
    } else {
        vec![T::one()]
    }
}

/// Integrate f(a) d(ln a) over [SCALE_QUAD_LO, SCALE_QUAD_HI], one composite
/// Simpson rule per decade; any Haar factor beyond da/a goes inside `f`.
fn scale_decades<T: Scalar>(f: impl Fn(T) -> Complex<T>) -> ProbeIntegral<T> {
    let ln10 = T::c(std::f64::consts::LN_10);
    let k_lo = SCALE_QUAD_LO.log10().round() as i32;
    let k_hi = SCALE_QUAD_HI.log10().round() as i32;
    let mut value = Complex::new(T::zero(), T::zero());
    let mut decades = Vec::with_capacity((k_hi - k_lo) as usize);
    for k in k_lo..k_hi {
        let lo = T::c(k as f64) * ln10;
        let v = simpson(lo, lo + ln10, SIMPSON_PER_DECADE, |l| f(l.exp()));
        decades.push(v.norm());
        value = value + v;
    }
    ProbeIntegral { value, decades }
}

/// Single composite log-Simpson over the whole scale window (inner axes).
fn scale_line<T: Scalar>(f: impl Fn(T) -> Complex<T>) -> Complex<T> {
    let (llo, lhi) = (T::c(SCALE_QUAD_LO).ln(), T::c(SCALE_QUAD_HI).ln());
    let n = SIMPSON_PER_DECADE * (SCALE_QUAD_HI.log10() - SCALE_QUAD_LO.log10()).round() as usize;
    simpson(llo, lhi, n, |l| f(l.exp()))
}

/// The kind-specific B-part cross integral at one probe frequency.
fn cross_at_probe<T: Scalar>(
    model: &GroupModel,
    s1: &Spectrum<T>,
    s2: &Spectrum<T>,
    w: &[T],
) -> ProbeIntegral<T> {
    let cross = |u: &[T]| s2.sample(u) * s1.sample(u).conj();
    let signs = scale_signs::<T>(model);
    match model.kind {
        GroupKind::Affine1D => {
            let g = w[0];
            scale_decades(|a| cross(&[a * g]))
        }
        GroupKind::Diag2D => {
            let bmax0 = axis_extent(s1, 0).max(axis_extent(s2, 0));
            scale_decades(|a1| {
                let mut acc = Complex::new(T::zero(), T::zero());
                for &sg1 in &signs {
                    let u1 = sg1 * a1 * w[0];
                    if u1.abs() > bmax0 {
                        continue;
                    }
                    acc = acc
                        + scale_line(|a2| {
                            let mut inner = Complex::new(T::zero(), T::zero());
                            for &sg2 in &signs {
                                inner = inner + cross(&[u1, sg2 * a2 * w[1]]);
                            }
                            inner
                        });
                }
                acc
            })
        }
        GroupKind::UpperTri2D => {
            let bmax0 = axis_extent(s1, 0).max(axis_extent(s2, 0));
            let bmax1 = axis_extent(s1, 1).max(axis_extent(s2, 1));
            scale_decades(|a| {
                let mut acc = Complex::new(T::zero(), T::zero());
                for &sg in &signs {
                    let u1 = sg * a * w[0];
                    if u1.abs() > bmax0 {
                        continue;
                    }
                    // second component b*w0 + w1 only meets the spectrum for
                    // b in a finite interval
                    let lo = (-bmax1 - w[1]) / w[0];
                    let hi = (bmax1 - w[1]) / w[0];
                    let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
                    let row = simpson(lo, hi, INNER_NODES, |b| cross(&[u1, b * w[0] + w[1]]));
                    // Haar da db / a^2 -> d(ln a) db / a
                    acc = acc + row.scale(T::one() / a);
                }
                acc
            })
        }
        GroupKind::Shear2 => {
            let bmax0 = axis_extent(s1, 0).max(axis_extent(s2, 0));
            let bmax1 = axis_extent(s1, 1).max(axis_extent(s2, 1));
            scale_decades(|a| {
                let mut acc = Complex::new(T::zero(), T::zero());
                for &sg in &signs {
                    let u1 = sg * a * w[0];
                    if u1.abs() > bmax0 {
                        continue;
                    }
                    let root = sg * a.sqrt();
                    // |root (s w0 + w1)| <= bmax1
                    let lim = bmax1 / a.sqrt();
                    let lo = (-lim - w[1]) / w[0];
                    let hi = (lim - w[1]) / w[0];
                    let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
                    let row = simpson(lo, hi, INNER_NODES, |s| {
                        cross(&[u1, root * (s * w[0] + w[1])])
                    });
                    // Haar da ds / |a|^{3/2} -> d(ln a) ds / |a|^{1/2}
                    acc = acc + row.scale(T::one() / a.sqrt());
                }
                acc
            })
        }
        GroupKind::Similitude2 => {
            let tau = T::PI() + T::PI();
            scale_decades(|a| {
                periodic_trapezoid(tau, ANGLE_NODES, |th| {
                    let (c, s) = (th.cos(), th.sin());
                    // r_{-theta} omega
                    cross(&[a * (c * w[0] + s * w[1]), a * (c * w[1] - s * w[0])])
                })
            })
        }
        GroupKind::WeylHeisenberg1 | GroupKind::G51 => {
            unreachable!("modulation kinds use the exact spectral mass")
        }
    }
}

/// Distance-to-singular-set check for a probe frequency.
fn check_probe<T: Scalar>(model: &GroupModel, w: &[T]) -> Result<()> {
    if w.len() != model.dim_base() {
        return Err(GcwtError::Domain(format!(
            "probe dimension {} does not match base dimension {}",
            w.len(),
            model.dim_base()
        )));
    }
    let tube = T::c(SINGULAR_TUBE);
    let singular = match model.kind {
        GroupKind::Affine1D => w[0].abs() < tube,
        GroupKind::Diag2D => w[0].abs() < tube || w[1].abs() < tube,
        GroupKind::UpperTri2D | GroupKind::Shear2 => w[0].abs() < tube,
        GroupKind::Similitude2 => (w[0] * w[0] + w[1] * w[1]).sqrt() < tube,
        GroupKind::WeylHeisenberg1 | GroupKind::G51 => false,
    };
    if singular {
        return Err(GcwtError::SingularProbe);
    }
    Ok(())
}

/// Default probe set: `n` frequencies on the annulus 0.5 <= |omega| <= 4,
/// radius log-spaced, staying clear of the kind's singular set. 1D kinds
/// alternate half-lines; 2D kinds follow a golden-angle spiral nudged off
/// any singular axes.
pub fn default_probes<T: Scalar>(model: &GroupModel, n: usize) -> Vec<Vec<T>> {
    let n = n.max(1);
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let frac = if n == 1 { 0.5 } else { i as f64 / (n - 1) as f64 };
        let r = 0.5 * 8f64.powf(frac);
        match model.dim_base() {
            1 => {
                let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
                out.push(vec![T::c(sign * r)]);
            }
            _ => {
                // golden-angle spiral; nudge off singular axes if needed
                let mut phi = i as f64 * 2.399963229728653;
                loop {
                    let w = [r * phi.cos(), r * phi.sin()];
                    let clear = match model.kind {
                        GroupKind::Diag2D => {
                            w[0].abs() >= 2.0 * SINGULAR_TUBE && w[1].abs() >= 2.0 * SINGULAR_TUBE
                        }
                        GroupKind::UpperTri2D | GroupKind::Shear2 => {
                            w[0].abs() >= 2.0 * SINGULAR_TUBE
                        }
                        _ => true,
                    };
                    if clear {
                        out.push(vec![T::c(w[0]), T::c(w[1])]);
                        break;
                    }
                    phi += 0.3;
                }
            }
        }
    }
    out
}

/// Probes restricted to one frequency half-line (1D kinds).
pub fn half_line_probes<T: Scalar>(sign: f64, n: usize) -> Vec<Vec<T>> {
    let n = n.max(1);
    (0..n)
        .map(|i| {
            let frac = if n == 1 { 0.5 } else { i as f64 / (n - 1) as f64 };
            vec![T::c(sign.signum() * 0.5 * 8f64.powf(frac))]
        })
        .collect()
}

fn zero_report<T: Scalar>(model: &GroupModel, probes: &[Vec<T>]) -> AdmissibilityReport<T> {
    AdmissibilityReport {
        constant: T::zero(),
        per_freq: probes.iter().map(|w| (w.clone(), T::zero())).collect(),
        rel_variation: T::zero(),
        divergent: false,
        admissible: false,
        formula_id: formula_id(model.kind),
    }
}

fn mean_and_cv<T: Scalar>(values: &[T]) -> (T, T) {
    let n = T::c(values.len() as f64);
    let mean = values.iter().copied().sum::<T>() / n;
    if mean.abs() <= T::zero() {
        return (mean, T::zero());
    }
    let var = values
        .iter()
        .map(|&v| (v - mean) * (v - mean))
        .sum::<T>()
        / n;
    (mean, var.sqrt() / mean.abs())
}

/// Admissibility constant of `psi` for the group, sampled at `freq_probe`.
///
/// A non-admissible wavelet is reported with `admissible = false`; only
/// malformed probes raise errors.
pub fn constant<T: Scalar>(
    psi: &SampledSignal<T>,
    model: &GroupModel,
    freq_probe: &[Vec<T>],
) -> Result<AdmissibilityReport<T>> {
    if freq_probe.is_empty() {
        return Err(GcwtError::Domain("at least one probe frequency required".into()));
    }
    for w in freq_probe {
        check_probe(model, w)?;
    }
    let norm_sq = psi.norm_sq();
    if norm_sq <= T::zero() {
        return Ok(zero_report(model, freq_probe));
    }
    let spec = padded_spectrum(psi, SPECTRUM_PAD);

    if model.is_modulation_kind() {
        // exact: substitution u = omega - b collapses the b-integral to the
        // spectral mass, independent of the probe
        let c = spec.norm_sq();
        return Ok(AdmissibilityReport {
            constant: c,
            per_freq: freq_probe.iter().map(|w| (w.clone(), c)).collect(),
            rel_variation: T::zero(),
            divergent: false,
            admissible: c > T::c(ZERO_TOL) * norm_sq,
            formula_id: formula_id(model.kind),
        });
    }

    let integrals: Vec<ProbeIntegral<T>> = freq_probe
        .par_iter()
        .map(|w| cross_at_probe(model, &spec, &spec, w))
        .collect();
    let divergent = integrals.iter().any(|p| p.divergent());
    let values: Vec<T> = integrals.iter().map(|p| p.value.re).collect();
    let (mean, cv) = mean_and_cv(&values);
    let admissible = !divergent
        && mean.is_finite()
        && mean > T::c(ZERO_TOL) * norm_sq
        && cv <= T::c(REL_VARIATION_TOL);
    Ok(AdmissibilityReport {
        constant: mean,
        per_freq: freq_probe.iter().cloned().zip(values).collect(),
        rel_variation: cv,
        divergent,
        admissible,
        formula_id: formula_id(model.kind),
    })
}

/// Cross constant C_{psi1 psi2} and overlap <psi1, psi2> for a candidate
/// analysis/synthesis pair, probed on the default annulus.
pub fn pair_constant<T: Scalar>(
    psi1: &SampledSignal<T>,
    psi2: &SampledSignal<T>,
    model: &GroupModel,
) -> Result<PairReport<T>> {
    if psi1.lattice != psi2.lattice {
        return Err(GcwtError::LatticeMismatch);
    }
    let probes = default_probes::<T>(model, 32);
    let overlap = crate::signal::inner(psi1, psi2)?;
    let scale = psi1.norm() * psi2.norm();
    if scale <= T::zero() {
        return Ok(PairReport {
            cross_constant: Complex::new(T::zero(), T::zero()),
            overlap,
            per_freq: probes.iter().map(|w| (w.clone(), Complex::new(T::zero(), T::zero()))).collect(),
            rel_variation: T::zero(),
            divergent: false,
            is_admissible_pair: false,
        });
    }
    let s1 = padded_spectrum(psi1, SPECTRUM_PAD);
    let s2 = padded_spectrum(psi2, SPECTRUM_PAD);

    let (values, self1, self2, divergent): (Vec<Complex<T>>, T, T, bool) =
        if model.is_modulation_kind() {
            let c = crate::signal::inner_spectral(&s2, &s1)?;
            (vec![c; probes.len()], s1.norm_sq(), s2.norm_sq(), false)
        } else {
            let integrals: Vec<ProbeIntegral<T>> = probes
                .par_iter()
                .map(|w| cross_at_probe(model, &s1, &s2, w))
                .collect();
            let c1: Vec<ProbeIntegral<T>> = probes
                .par_iter()
                .map(|w| cross_at_probe(model, &s1, &s1, w))
                .collect();
            let c2: Vec<ProbeIntegral<T>> = probes
                .par_iter()
                .map(|w| cross_at_probe(model, &s2, &s2, w))
                .collect();
            let div = integrals.iter().any(|p| p.divergent())
                || c1.iter().any(|p| p.divergent())
                || c2.iter().any(|p| p.divergent());
            let mean_self = |ps: &[ProbeIntegral<T>]| {
                ps.iter().map(|p| p.value.re).sum::<T>() / T::c(ps.len() as f64)
            };
            (
                integrals.into_iter().map(|p| p.value).collect(),
                mean_self(&c1),
                mean_self(&c2),
                div,
            )
        };
    let n = T::c(values.len() as f64);
    let mean = values
        .iter()
        .fold(Complex::new(T::zero(), T::zero()), |a, &b| a + b)
        .scale(T::one() / n);
    let cv = if mean.norm() > T::zero() {
        let var = values.iter().map(|v| (*v - mean).norm_sqr()).sum::<T>() / n;
        var.sqrt() / mean.norm()
    } else {
        T::zero()
    };
    // Overlap is computed exactly (Plancherel), so the strict zero tolerance
    // applies; the cross integral is judged against its Cauchy-Schwarz scale.
    let cross_scale = (self1.max(T::zero()) * self2.max(T::zero())).sqrt();
    let is_admissible_pair = !divergent
        && overlap.norm() > T::c(ZERO_TOL) * scale
        && mean.norm() > T::c(CROSS_ZERO_TOL) * cross_scale;
    Ok(PairReport {
        cross_constant: mean,
        overlap,
        per_freq: probes.iter().cloned().zip(values).collect(),
        rel_variation: cv,
        divergent,
        is_admissible_pair,
    })
}

/// Midpoint-rule evaluation of the same B-part integral on a fixed log grid;
/// deliberately a different quadrature from [`cross_at_probe`] so the two
/// routes cross-check each other.
fn midpoint_self_integral<T: Scalar>(
    model: &GroupModel,
    spec: &Spectrum<T>,
    w: &[T],
) -> T {
    let k_lo = SCALE_QUAD_LO.ln();
    let k_hi = SCALE_QUAD_HI.ln();
    let n = 1024usize;
    let dl = (k_hi - k_lo) / n as f64;
    let tau = T::PI() + T::PI();
    let mut acc = T::zero();
    for i in 0..n {
        let a = T::c(k_lo + (i as f64 + 0.5) * dl).exp();
        let v: T = match model.kind {
            GroupKind::Affine1D => spec.sample(&[a * w[0]]).norm_sqr(),
            GroupKind::Diag2D => {
                let mut inner = T::zero();
                for j in 0..n {
                    let a2 = T::c(k_lo + (j as f64 + 0.5) * dl).exp();
                    inner += spec.sample(&[a * w[0], a2 * w[1]]).norm_sqr();
                }
                inner * T::c(dl)
            }
            GroupKind::UpperTri2D => {
                let bmax1 = axis_extent(spec, 1);
                let m = 512usize;
                let lo = (-bmax1 - w[1]) / w[0];
                let hi = (bmax1 - w[1]) / w[0];
                let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
                let db = (hi - lo) / T::c(m as f64);
                let mut inner = T::zero();
                for j in 0..m {
                    let b = lo + (T::c(j as f64) + T::c(0.5)) * db;
                    inner += spec.sample(&[a * w[0], b * w[0] + w[1]]).norm_sqr();
                }
                inner * db / a
            }
            GroupKind::Shear2 => {
                let bmax1 = axis_extent(spec, 1);
                let m = 512usize;
                let lim = bmax1 / a.sqrt();
                let lo = (-lim - w[1]) / w[0];
                let hi = (lim - w[1]) / w[0];
                let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
                let ds = (hi - lo) / T::c(m as f64);
                let root = a.sqrt();
                let mut inner = T::zero();
                for j in 0..m {
                    let s = lo + (T::c(j as f64) + T::c(0.5)) * ds;
                    inner += spec.sample(&[a * w[0], root * (s * w[0] + w[1])]).norm_sqr();
                }
                inner * ds / a.sqrt()
            }
            GroupKind::Similitude2 => {
                let m = 128usize;
                let dth = tau / T::c(m as f64);
                let mut inner = T::zero();
                for j in 0..m {
                    let th = (T::c(j as f64) + T::c(0.5)) * dth;
                    let (c, s) = (th.cos(), th.sin());
                    inner += spec
                        .sample(&[a * (c * w[0] + s * w[1]), a * (c * w[1] - s * w[0])])
                        .norm_sqr();
                }
                inner * dth
            }
            GroupKind::WeylHeisenberg1 | GroupKind::G51 => spec.norm_sq() / T::c(n as f64) / T::c(dl),
        };
        acc += v * T::c(dl);
    }
    acc
}

/// Feasibility check: evaluates the semidirect-product criterion with an
/// independent quadrature and verifies gamma-independence and agreement
/// with [`constant`].
pub fn feasibility_check<T: Scalar>(
    psi: &SampledSignal<T>,
    model: &GroupModel,
    freq_probe: &[Vec<T>],
) -> Result<FeasibilityReport<T>> {
    let report = constant(psi, model, freq_probe)?;
    if psi.norm_sq() <= T::zero() {
        return Ok(FeasibilityReport {
            report,
            consistency_gap: T::zero(),
            feasible: false,
        });
    }
    let spec = padded_spectrum(psi, SPECTRUM_PAD);
    let independent: Vec<T> = freq_probe
        .par_iter()
        .map(|w| midpoint_self_integral(model, &spec, w))
        .collect();
    let (mean, _) = mean_and_cv(&independent);
    let gap = if report.constant.abs() > T::zero() {
        ((mean - report.constant) / report.constant).abs()
    } else {
        mean.abs()
    };
    let feasible = report.admissible && gap <= T::c(1e-3);
    Ok(FeasibilityReport {
        report,
        consistency_gap: gap,
        feasible,
    })
}

/// Truncated-band Fourier multiplier for the similitude group:
/// `m(omega) = int_{A1}^{A2} int_0^{2pi} conj(psi1^(a r_{-th} w)) psi2^(a r_{-th} w) dth da/a`.
///
/// This is the independent quadrature route used to cross-check the
/// grid-summed truncated reconstruction.
pub fn sim_band_multiplier<T: Scalar>(
    s1: &Spectrum<T>,
    s2: &Spectrum<T>,
    w: &[T],
    a1: T,
    a2: T,
) -> Result<Complex<T>> {
    if !(a1 > T::zero()) || a2 <= a1 {
        return Err(GcwtError::BadBand {
            a1: a1.to_f64().unwrap_or(f64::NAN),
            a2: a2.to_f64().unwrap_or(f64::NAN),
        });
    }
    let tau = T::PI() + T::PI();
    let span = (a2 / a1).ln().to_f64().unwrap_or(1.0);
    let n = ((span * SIMPSON_PER_DECADE as f64 / std::f64::consts::LN_10).ceil() as usize).max(32);
    Ok(simpson(a1.ln(), a2.ln(), n, |l| {
        let a = l.exp();
        periodic_trapezoid(tau, ANGLE_NODES, |th| {
            let (c, s) = (th.cos(), th.sin());
            let u = [a * (c * w[0] + s * w[1]), a * (c * w[1] - s * w[0])];
            s2.sample(&u) * s1.sample(&u).conj()
        })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{GroupKind, GroupModel};
    use crate::signal::catalog::catalog;
    use crate::signal::Lattice;

    fn lat1() -> Lattice<f64> {
        Lattice::symmetric(1, 8.0, 256)
    }

    fn lat2() -> Lattice<f64> {
        Lattice::symmetric(2, 8.0, 256)
    }

    #[test]
    fn weyl_heisenberg_constant_is_norm_sq() {
        let model = GroupModel::new(GroupKind::WeylHeisenberg1);
        for name in ["gaussian", "mexican_hat_1d", "chirp_1d", "bandlimited_1d"] {
            let psi = catalog::<f64>(name, &lat1()).unwrap();
            let report = constant(&psi, &model, &default_probes(&model, 8)).unwrap();
            let expect = psi.norm_sq();
            assert!(
                (report.constant - expect).abs() <= 1e-3 * expect,
                "{name}: C = {} vs ||psi||^2 = {expect}",
                report.constant
            );
            assert_eq!(report.rel_variation, 0.0);
            assert!(report.admissible);
        }
    }

    #[test]
    fn affine_analytic_constant_is_half() {
        let model = GroupModel::new(GroupKind::Affine1D);
        let psi = catalog::<f64>("analytic_1d", &lat1()).unwrap();
        let probes = half_line_probes::<f64>(1.0, 8);
        let report = constant(&psi, &model, &probes).unwrap();
        assert!(
            (report.constant - 0.5).abs() < 1e-3,
            "C = {}",
            report.constant
        );
        assert!(report.admissible, "rel_variation = {}", report.rel_variation);
    }

    #[test]
    fn affine_even_analytic_both_half_lines() {
        let model = GroupModel::new(GroupKind::Affine1D);
        let psi = catalog::<f64>("even_analytic_1d", &lat1()).unwrap();
        let report = constant(&psi, &model, &default_probes(&model, 16)).unwrap();
        assert!(
            (report.constant - 0.5).abs() < 1e-3,
            "C = {}",
            report.constant
        );
        assert!(report.admissible);
    }

    #[test]
    fn zero_wavelet_not_admissible() {
        let model = GroupModel::new(GroupKind::Affine1D);
        let psi = crate::signal::SampledSignal::<f64>::zeros(lat1());
        let report = constant(&psi, &model, &default_probes(&model, 4)).unwrap();
        assert!(!report.admissible);
        assert_eq!(report.constant, 0.0);
    }

    #[test]
    fn gaussian_on_affine_diverges() {
        let model = GroupModel::new(GroupKind::Affine1D);
        let psi = catalog::<f64>("gaussian", &lat1()).unwrap();
        let report = constant(&psi, &model, &default_probes(&model, 4)).unwrap();
        assert!(report.divergent);
        assert!(!report.admissible);
    }

    #[test]
    fn scaling_covariance_of_constant() {
        let model = GroupModel::new(GroupKind::Affine1D);
        let psi = catalog::<f64>("bandlimited_1d", &lat1()).unwrap();
        let probes = default_probes::<f64>(&model, 6);
        let base = constant(&psi, &model, &probes).unwrap();
        let scaled = psi.clone().scaled(Complex::new(0.0, 2.0));
        let big = constant(&scaled, &model, &probes).unwrap();
        assert!(
            (big.constant - 4.0 * base.constant).abs() <= 1e-10 * base.constant.abs(),
            "quadratic scaling violated: {} vs {}",
            big.constant,
            4.0 * base.constant
        );
    }

    #[test]
    fn singular_probe_rejected() {
        let model = GroupModel::new(GroupKind::UpperTri2D);
        let psi = catalog::<f64>("axis_avoiding_2d", &lat2()).unwrap();
        let err = constant(&psi, &model, &[vec![0.05, 1.0]]).unwrap_err();
        assert!(matches!(err, GcwtError::SingularProbe));
    }

    #[test]
    fn pair_collapses_for_equal_wavelets() {
        let model = GroupModel::new(GroupKind::Similitude2);
        let psi = catalog::<f64>("radial_bandlimited_2d", &lat2()).unwrap();
        let pair = pair_constant(&psi, &psi, &model).unwrap();
        let solo = constant(&psi, &model, &default_probes(&model, 32)).unwrap();
        assert!(pair.is_admissible_pair);
        assert!(
            (pair.cross_constant.re - solo.constant).abs() < 1e-6 * solo.constant
                && pair.cross_constant.im.abs() < 1e-10,
            "cross = {} vs C = {}",
            pair.cross_constant,
            solo.constant
        );
        assert!((pair.overlap.re - 1.0).abs() < 1e-9);
    }

    #[test]
    fn pair_is_linear_in_synthesis_slot() {
        let model = GroupModel::new(GroupKind::Affine1D);
        let psi = catalog::<f64>("bandlimited_1d", &lat1()).unwrap();
        let double = psi.clone().scaled(Complex::new(2.0, 0.0));
        let base = pair_constant(&psi, &psi, &model).unwrap();
        let scaled = pair_constant(&psi, &double, &model).unwrap();
        assert!(
            (scaled.cross_constant - base.cross_constant.scale(2.0)).norm()
                < 1e-10 * base.cross_constant.norm()
        );
    }

    #[test]
    fn disjoint_annuli_are_not_a_pair() {
        let model = GroupModel::new(GroupKind::Similitude2);
        let a = catalog::<f64>("radial_bandlimited_2d", &lat2()).unwrap();
        let b = catalog::<f64>("radial_bandlimited_2d_b", &lat2()).unwrap();
        let pair = pair_constant(&a, &b, &model).unwrap();
        // zero up to the spectral noise floor of the sampled wavelets
        assert!(pair.cross_constant.norm() < 1e-5);
        assert!(pair.overlap.norm() < 1e-12);
        assert!(!pair.is_admissible_pair);
    }

    #[test]
    fn similitude_constant_is_frequency_independent() {
        let model = GroupModel::new(GroupKind::Similitude2);
        let psi = catalog::<f64>("radial_bandlimited_2d", &lat2()).unwrap();
        let report = constant(&psi, &model, &default_probes(&model, 32)).unwrap();
        assert!(report.admissible);
        assert!(
            report.rel_variation <= 2e-2,
            "rel_variation = {}",
            report.rel_variation
        );
    }

    #[test]
    fn feasibility_agrees_with_constant() {
        let model = GroupModel::new(GroupKind::Affine1D);
        let psi = catalog::<f64>("even_analytic_1d", &lat1()).unwrap();
        let probes = default_probes::<f64>(&model, 8);
        let feas = feasibility_check(&psi, &model, &probes).unwrap();
        assert!(feas.feasible, "gap = {}", feas.consistency_gap);
        assert!((feas.report.constant - 0.5).abs() < 1e-3);
    }

    #[test]
    fn feasibility_rejects_gaussian_and_zero() {
        let model = GroupModel::new(GroupKind::Affine1D);
        let probes = default_probes::<f64>(&model, 4);
        let gauss = catalog::<f64>("gaussian", &lat1()).unwrap();
        assert!(!feasibility_check(&gauss, &model, &probes).unwrap().feasible);
        let zero = crate::signal::SampledSignal::<f64>::zeros(lat1());
        assert!(!feasibility_check(&zero, &model, &probes).unwrap().feasible);
    }
}
